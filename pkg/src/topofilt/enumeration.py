"""Exhaustive catalogs of labeled topologies on small ground sets.

Topologies are generated as preorders: a preorder on ``n`` points is a tuple
of rows ``U_x`` (the up-set of ``x``), which is exactly the table of minimal
neighborhoods. Rows are assigned one point at a time and each new row is
checked for transitivity against the rows already fixed.
"""

from __future__ import annotations

import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional

from . import topology as tp
from .errors import CacheCorrupt, GroundSizeTooLarge, IoFailure, NotATopology
from .filtration import FiltrationSeq, is_filtration, is_weak_filtration
from .topology import Topology, is_coarser

MAX_N = 5
PAIRS_MAX_N = 4
FILTRATIONS_MAX_N = 4
CACHE_FORMAT = 1

# labeled topologies on n points (OEIS A000798); a cross-check only
KNOWN_COUNTS = {0: 1, 1: 1, 2: 4, 3: 29, 4: 355, 5: 6942}


@dataclass(frozen=True)
class TopologyCatalog:
    n: int
    entries: tuple
    index: dict = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def position(self, T: Topology) -> int:
        return self.index[T.opens]


def _catalog(n: int, tops) -> TopologyCatalog:
    entries = tuple(sorted(set(tops), key=lambda t: t.opens))
    return TopologyCatalog(n, entries, {t.opens: i for i, t in enumerate(entries)})


def _preorder_rows(n: int, first_row: Optional[int] = None) -> Iterator[tuple]:
    rows: list[int] = []

    def consistent(x: int, r: int) -> bool:
        for y in range(x):
            ry = rows[y]
            if r >> y & 1 and ry & ~r:
                return False
            if ry >> x & 1 and r & ~ry:
                return False
        return True

    def go(x: int):
        if x == n:
            yield tuple(rows)
            return
        if x == 0 and first_row is not None:
            candidates = [first_row]
        else:
            candidates = [r for r in range(1 << n) if r >> x & 1]
        for r in candidates:
            if consistent(x, r):
                rows.append(r)
                yield from go(x + 1)
                rows.pop()

    yield from go(0)


def _shard(args) -> list[tuple]:
    n, first = args
    return list(_preorder_rows(n, first))


def enumerate_topologies(n: int, jobs: int = 1) -> TopologyCatalog:
    if not 0 <= n <= MAX_N:
        raise GroundSizeTooLarge(f"enumeration supports 0 <= n <= {MAX_N}")
    if jobs > 1 and n > 1:
        firsts = [r for r in range(1 << n) if r & 1]
        with ProcessPoolExecutor(jobs) as pool:
            row_sets = [rows for part in pool.map(_shard, [(n, f) for f in firsts]) for rows in part]
    else:
        row_sets = list(_preorder_rows(n))
    return _catalog(n, (tp._from_nbhds(n, rows) for rows in row_sets))


def enumerate_pairs(n: int, catalog: Optional[TopologyCatalog] = None) -> Iterator[tuple]:
    """All ``(sigma, tau)`` with sigma coarser than tau, in catalog order."""
    if n > PAIRS_MAX_N:
        raise GroundSizeTooLarge(f"pair enumeration supports n <= {PAIRS_MAX_N}")
    cat = catalog if catalog is not None else cached_catalog(n)
    for s in cat:
        for t in cat:
            if is_coarser(s, t):
                yield s, t


def enumerate_filtrations(sigma: Topology, tau: Topology, max_len: int,
                          weak: bool = False,
                          catalog: Optional[TopologyCatalog] = None) -> Iterator[FiltrationSeq]:
    """Chains ``sigma = t_0 <= ... <= t_k <= tau`` with ``k < max_len`` that are
    filtrations (or weak filtrations) towards ``tau``.

    Both properties survive truncation, so failing prefixes are pruned.
    """
    n = sigma.n
    if n > FILTRATIONS_MAX_N:
        raise GroundSizeTooLarge(f"filtration enumeration supports n <= {FILTRATIONS_MAX_N}")
    if not is_coarser(sigma, tau):
        return
    cat = catalog if catalog is not None else cached_catalog(n)
    between = [t for t in cat if is_coarser(sigma, t) and is_coarser(t, tau)]
    check = is_weak_filtration if weak else is_filtration

    def go(chain: list):
        seq = FiltrationSeq(n, chain, tau)
        if check(seq) is not None:
            return
        yield seq
        if len(chain) >= max_len:
            return
        for t in between:
            if is_coarser(chain[-1], t):
                yield from go(chain + [t])

    yield from go([sigma])


# -- cache -------------------------------------------------------------------

def cache_dir(directory=None) -> Path:
    if directory is not None:
        return Path(directory)
    env = os.environ.get("TOPOFILT_CACHE")
    return Path(env) if env else Path.home() / ".cache" / "topofilt"


def cache_path(n: int, directory=None) -> Path:
    return cache_dir(directory) / f"topologies_n{n}.jsonl"


def dumps_catalog(catalog: TopologyCatalog) -> str:
    lines = [json.dumps({"format": CACHE_FORMAT, "n": catalog.n, "count": len(catalog)})]
    lines += [json.dumps(t.to_dict()) for t in catalog]
    return "\n".join(lines) + "\n"


def cache_store(catalog: TopologyCatalog, directory=None) -> Path:
    path = cache_path(catalog.n, directory)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(dumps_catalog(catalog))
        os.replace(tmp, path)
    except OSError as exc:
        raise IoFailure(str(exc)) from exc
    return path


def _parse_catalog(n: int, text: str) -> TopologyCatalog:
    lines = text.splitlines()
    try:
        header = json.loads(lines[0])
        if header.get("format") != CACHE_FORMAT or header.get("n") != n:
            raise CacheCorrupt(f"bad header {header}")
        tops = [tp.from_dict(json.loads(line)) for line in lines[1:]]
    except (IndexError, ValueError, NotATopology) as exc:
        raise CacheCorrupt(str(exc)) from None
    if header.get("count") != len(tops) or KNOWN_COUNTS.get(n, len(tops)) != len(tops):
        raise CacheCorrupt(f"expected {header.get('count')} entries, found {len(tops)}")
    if any(t.n != n for t in tops):
        raise CacheCorrupt("entry with wrong ground size")
    cat = _catalog(n, tops)
    if cat.entries != tuple(tops):
        raise CacheCorrupt("entries duplicated or out of canonical order")
    return cat


def cache_load(n: int, directory=None) -> TopologyCatalog:
    """Load the catalog for ``n``; regenerate and store it if the file is missing."""
    path = cache_path(n, directory)
    try:
        text = path.read_text()
    except FileNotFoundError:
        cat = enumerate_topologies(n)
        cache_store(cat, directory)
        return cat
    except OSError as exc:
        raise IoFailure(str(exc)) from exc
    return _parse_catalog(n, text)


_MEMORY: dict = {}


def cached_catalog(n: int) -> TopologyCatalog:
    """In-process memo of :func:`enumerate_topologies` (no disk access)."""
    if n not in _MEMORY:
        _MEMORY[n] = enumerate_topologies(n)
    return _MEMORY[n]
