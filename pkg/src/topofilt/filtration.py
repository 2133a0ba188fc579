"""Filtrations of finite topologies and the sets they make small.

Ordinals are plain non-negative ints. A strictly increasing chain of
topologies on ``n`` points has at most ``2**n`` members, so the limit
stages of the transfinite recursion never occur here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional, Sequence

from . import topology as tp
from .errors import AlphaOutOfRange, GroundSizeTooLarge, MixedGroundSizes, NotSubtopology
from .topology import Topology, closure, full, interior, is_coarser

TAME_MAX_N = 4


def oplus1(a: int) -> int:
    if a < 0:
        raise ValueError("ordinals are non-negative")
    return a + 1 if a > 0 else 0


@dataclass(frozen=True)
class FiltrationSeq:
    n: int
    stages: tuple
    target: Optional[Topology] = None

    def __post_init__(self):
        if not self.stages:
            raise ValueError("a filtration needs at least one stage")
        object.__setattr__(self, "stages", tuple(self.stages))
        if any(t.n != self.n for t in self.stages) or (
            self.target is not None and self.target.n != self.n
        ):
            raise MixedGroundSizes("stages and target must share the ground set")

    def __len__(self) -> int:
        return len(self.stages)

    def resolved_target(self) -> Topology:
        return self.target if self.target is not None else tp.join(self.stages)

    def is_chain(self) -> bool:
        ts = list(self.stages) + [self.resolved_target()]
        return all(is_coarser(a, b) for a, b in zip(ts, ts[1:]))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "stages": [list(t.opens) for t in self.stages],
            "target": list(self.target.opens) if self.target is not None else None,
        }


def seq_from_dict(record: dict) -> FiltrationSeq:
    n = int(record["n"])
    stages = [tp.make_topology(n, s) for s in record["stages"]]
    target = record.get("target")
    return FiltrationSeq(n, stages, tp.make_topology(n, target) if target is not None else None)


def _require_coarser(sigma: Topology, tau: Topology) -> None:
    if sigma.n != tau.n:
        raise MixedGroundSizes(f"{sigma.n} != {tau.n}")
    if not is_coarser(sigma, tau):
        raise NotSubtopology("sigma must be coarser than tau")


# -- the step operation ----------------------------------------------------

def step(sigma: Topology, tau: Topology) -> Topology:
    """Topology of all unions of ``U & int_tau(F)``, U sigma-open, F sigma-closed."""
    _require_coarser(sigma, tau)
    interiors = {interior(tau, F) for F in sigma.closed_sets}
    basis = {u & i for u in sigma.opens for i in interiors}
    # basis is closed under intersection and contains X, so its unions
    # already form a topology
    return tp.make_topology(sigma.n, basis, "generate")


REACHED, FIXPOINT_BELOW, BUDGET = "reached", "fixpoint_below", "budget"


def slowest(sigma: Topology, tau: Topology, max_stages: Optional[int] = None):
    """Iterate ``step`` from ``sigma`` towards ``tau``.

    Returns ``(seq, status)`` where ``seq`` holds stages 0..k and status is
    ``reached`` (stage k is tau), ``fixpoint_below`` (stage k is a fixpoint
    other than tau) or ``budget`` (stopped after ``max_stages`` stages).
    """
    _require_coarser(sigma, tau)
    # opens strictly grow from at least 1 to at most 2**n members
    bound = 1 << sigma.n
    stages = [sigma]
    status = BUDGET
    while True:
        nxt = step(stages[-1], tau)
        if nxt == stages[-1]:
            status = REACHED if nxt == tau else FIXPOINT_BELOW
            break
        if max_stages is not None and len(stages) >= max_stages:
            break
        stages.append(nxt)
        # a limit stage would need an infinite strictly increasing chain
        assert len(stages) <= bound
    return FiltrationSeq(sigma.n, stages, tau), status


def distance(sigma: Topology, tau: Topology) -> Optional[int]:
    """Least stage at which the slowest filtration equals tau; None if never."""
    seq, status = slowest(sigma, tau)
    return len(seq) - 1 if status == REACHED else None


# -- validation ------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    alpha: int
    F: Optional[int]  # None for a broken chain
    kind: str

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "F": self.F, "kind": self.kind}


def _earlier_closed(seq: FiltrationSeq, alpha: int) -> list[int]:
    return sorted(set().union(*(t.closed_sets for t in seq.stages[:alpha])))


def _chain_violation(seq: FiltrationSeq) -> Optional[Violation]:
    target = seq.resolved_target()
    ts = list(seq.stages) + [target]
    for i, (a, b) in enumerate(zip(ts, ts[1:])):
        if not is_coarser(a, b):
            return Violation(i + 1, None, "chain")
    return None


def is_filtration(seq: FiltrationSeq) -> Optional[Violation]:
    """None if ``seq`` is a filtration towards its target, else the first violation.

    Violations are scanned by ascending stage, then ascending mask of F.
    """
    bad = _chain_violation(seq)
    if bad:
        return bad
    target = seq.resolved_target()
    for alpha, t_alpha in enumerate(seq.stages):
        for F in _earlier_closed(seq, alpha):
            if interior(t_alpha, F) != interior(target, F):
                return Violation(alpha, F, "interior")
    return None


def is_weak_filtration(seq: FiltrationSeq) -> Optional[Violation]:
    """Like :func:`is_filtration` with equality of interiors relaxed to density."""
    bad = _chain_violation(seq)
    if bad:
        return bad
    target = seq.resolved_target()
    for alpha, t_alpha in enumerate(seq.stages):
        for F in _earlier_closed(seq, alpha):
            if not tp.subset(interior(target, F), closure(target, interior(t_alpha, F))):
                return Violation(alpha, F, "density")
    return None


# -- tame, slight, solid ---------------------------------------------------

def _check_alpha(seq: FiltrationSeq, alpha: int, strict: bool) -> None:
    limit = len(seq.stages) - 1 if strict else len(seq.stages)
    if not 0 <= alpha <= limit:
        raise AlphaOutOfRange(f"alpha={alpha} outside 0..{limit}")
    if seq.n > TAME_MAX_N:
        raise GroundSizeTooLarge(f"tame-set calculus is capped at n <= {TAME_MAX_N}")


def is_discrete_family(T: Topology, members: Sequence[int]) -> bool:
    """Every point has a neighborhood meeting at most one member."""
    return all(sum(1 for m in members if u & m) <= 1 for u in T.min_nbhd)


def discrete_families(T: Topology) -> Iterator[tuple]:
    """Non-empty discrete families of non-empty open sets, in ascending order.

    Families containing the empty set patch nothing extra and are skipped.
    """
    opens = [u for u in T.opens if u]

    def extend(start: int, chosen: list[int]) -> Iterator[tuple]:
        for i in range(start, len(opens)):
            u = opens[i]
            if any(u & c for c in chosen):
                continue
            cand = chosen + [u]
            if is_discrete_family(T, cand):
                yield tuple(cand)
                yield from extend(i + 1, cand)

    yield from extend(0, [])


@lru_cache(maxsize=4096)
def _tame(seq: FiltrationSeq, alpha: int) -> frozenset:
    tame = set(_earlier_closed(seq, alpha))
    fams = [f for t in seq.stages[:alpha] for f in discrete_families(t)]
    changed = True
    while changed:
        changed = False
        for fam in fams:
            # members are disjoint, so a patching is determined by its
            # trace on each member independently
            traces = [{F & u for F in tame} for u in fam]
            for parts in product(*traces):
                s = 0
                for p in parts:
                    s |= p
                if s not in tame:
                    tame.add(s)
                    changed = True
    return frozenset(tame)


def tame_sets(seq: FiltrationSeq, alpha: int) -> tp.SetFamily:
    _check_alpha(seq, alpha, strict=False)
    return tp.family(_tame(seq, alpha))


@lru_cache(maxsize=4096)
def _slight_cover(seq: FiltrationSeq, alpha: int) -> int:
    # slight sets are closed under finite unions, so the union of all tame
    # sets with empty interior is the largest slight set
    t_alpha = seq.stages[alpha]
    cover = 0
    for F in _tame(seq, alpha):
        if interior(t_alpha, F) == 0:
            cover |= F
    return cover


def slight_cover(seq: FiltrationSeq, alpha: int) -> int:
    """Largest alpha-slight set."""
    _check_alpha(seq, alpha, strict=True)
    return _slight_cover(seq, alpha)


def is_slight(seq: FiltrationSeq, alpha: int, A: int) -> bool:
    return tp.subset(A, slight_cover(seq, alpha))


def is_solid(seq: FiltrationSeq, alpha: int, A: int) -> bool:
    """No non-empty relatively open piece ``V & A`` is alpha-slight."""
    cover = slight_cover(seq, alpha)
    for V in seq.stages[alpha].opens:
        piece = V & A
        if piece and tp.subset(piece, cover):
            return False
    return True


def c_xi(seq: FiltrationSeq, xi: int, alpha: int, A: int) -> int:
    if not 0 <= xi <= alpha:
        raise AlphaOutOfRange(f"need 0 <= xi <= alpha, got xi={xi}, alpha={alpha}")
    cover = slight_cover(seq, alpha)
    removed = 0
    for U in seq.stages[xi].opens:
        if tp.subset(A & U, cover):
            removed |= U
    return full(seq.n) & ~removed
