"""Finite topologies on ``{0, ..., n-1}`` encoded with bitmasks.

A subset is a plain ``int`` whose bit ``i`` marks point ``i``. A family of
subsets is a tuple of such ints sorted strictly ascending, which is the
canonical form used for every equality test.

Every finite topology is Alexandrov, so a topology is fully described by its
minimal neighborhoods ``U_x`` (the intersection of all opens containing
``x``). Most operations below work from that table rather than the open
family, which keeps them linear in ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Iterable, Sequence

from .errors import MaskOutOfRange, MixedGroundSizes, NotAPreorder, NotATopology

MAX_N = 16

SetFamily = tuple  # tuple[int, ...], strictly ascending


def full(n: int) -> int:
    return (1 << n) - 1


def complement(mask: int, n: int) -> int:
    return full(n) & ~mask


def points(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def subset(a: int, b: int) -> bool:
    return a & ~b == 0


def family(masks: Iterable[int]) -> SetFamily:
    return tuple(sorted(set(masks)))


def show(mask: int) -> str:
    return "{" + ",".join(map(str, points(mask))) + "}"


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_N:
        raise MaskOutOfRange(f"ground size {n} outside 0..{MAX_N}")


def _check_mask(mask: int, n: int) -> None:
    if mask < 0 or mask >> n:
        raise MaskOutOfRange(f"mask {mask:#x} does not fit in {n} bits")


def _unions(generators: Iterable[int]) -> set[int]:
    """All unions of subfamilies of ``generators`` (the empty union is 0)."""
    out = {0}
    for g in set(generators):
        out |= {s | g for s in out}
    return out


@dataclass(frozen=True)
class Topology:
    n: int
    opens: SetFamily
    min_nbhd: tuple = field(compare=False, repr=False)
    _members: frozenset = field(compare=False, repr=False)

    def is_open(self, mask: int) -> bool:
        return mask in self._members

    def is_closed(self, mask: int) -> bool:
        return complement(mask, self.n) in self._members

    @property
    def closed_sets(self) -> SetFamily:
        return family(complement(u, self.n) for u in self.opens)

    def __le__(self, other: Topology) -> bool:
        return is_coarser(self, other)

    def to_dict(self) -> dict:
        return {"n": self.n, "opens": list(self.opens)}

    def __str__(self) -> str:
        return "{" + ", ".join(show(u) for u in self.opens) + "}"


def _from_nbhds(n: int, nbhds: Sequence[int]) -> Topology:
    opens = family(_unions(nbhds))
    return Topology(n, opens, tuple(nbhds), frozenset(opens))


def make_topology(n: int, generators: Iterable[int], mode: str = "validate") -> Topology:
    """Build a topology from a family of masks.

    ``validate`` requires the family to be a topology already; ``generate``
    returns the smallest topology containing it (closing under finite
    intersection and then under union).
    """
    _check_n(n)
    gens = set(generators)
    for g in gens:
        _check_mask(g, n)
    if mode == "validate":
        X = full(n)
        if 0 not in gens or X not in gens:
            raise NotATopology("family must contain the empty set and the whole space")
        for a in gens:
            for b in gens:
                if a | b not in gens or a & b not in gens:
                    raise NotATopology(f"not closed under union/intersection at {show(a)}, {show(b)}")
    elif mode != "generate":
        raise ValueError(f"unknown mode {mode!r}")
    # U_x is the intersection of every generator containing x; for a
    # topology this is exactly its minimal neighborhood.
    nbhds = [reduce(lambda acc, g: acc & g, (g for g in gens if g >> x & 1), full(n))
             for x in range(n)]
    return _from_nbhds(n, nbhds)


def from_dict(record: dict) -> Topology:
    try:
        n, opens = int(record["n"]), [int(u) for u in record["opens"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise NotATopology(f"malformed topology record: {exc}") from None
    return make_topology(n, opens, "validate")


def discrete(n: int) -> Topology:
    _check_n(n)
    return _from_nbhds(n, [1 << x for x in range(n)])


def indiscrete(n: int) -> Topology:
    _check_n(n)
    return _from_nbhds(n, [full(n)] * n)


def sierpinski() -> Topology:
    """Two points, opens {}, {0}, X."""
    return make_topology(2, [0, 0b01, 0b11])


# -- basic operators -------------------------------------------------------

def min_nbhd(T: Topology, x: int) -> int:
    if not 0 <= x < T.n:
        raise MaskOutOfRange(f"point {x} outside ground set of size {T.n}")
    return T.min_nbhd[x]


def interior(T: Topology, A: int) -> int:
    _check_mask(A, T.n)
    out = 0
    for x, u in enumerate(T.min_nbhd):
        if u & ~A == 0:
            out |= 1 << x
    return out


def closure(T: Topology, A: int) -> int:
    _check_mask(A, T.n)
    out = 0
    for x, u in enumerate(T.min_nbhd):
        if u & A:
            out |= 1 << x
    return out


def open_hull(T: Topology, A: int) -> int:
    """Smallest open set containing ``A``."""
    out = 0
    for x in points(A):
        out |= T.min_nbhd[x]
    return out


def is_coarser(a: Topology, b: Topology) -> bool:
    """True when every ``a``-open set is ``b``-open."""
    if a.n != b.n:
        raise MixedGroundSizes(f"{a.n} != {b.n}")
    return all(ub & ~ua == 0 for ua, ub in zip(a.min_nbhd, b.min_nbhd))


def join(Ts: Sequence[Topology]) -> Topology:
    if not Ts:
        raise ValueError("join of an empty list")
    n = Ts[0].n
    if any(T.n != n for T in Ts):
        raise MixedGroundSizes("join needs a common ground set")
    nbhds = [reduce(lambda acc, T: acc & T.min_nbhd[x], Ts, full(n)) for x in range(n)]
    return _from_nbhds(n, nbhds)


# -- specialization preorder ----------------------------------------------

def specialization_preorder(T: Topology) -> list[list[bool]]:
    """Matrix ``m`` with ``m[x][y]`` true iff x lies in the closure of {y}.

    Equivalently y belongs to ``U_x``.
    """
    return [[bool(T.min_nbhd[x] >> y & 1) for y in range(T.n)] for x in range(T.n)]


def from_preorder(n: int, matrix: Sequence[Sequence[bool]]) -> Topology:
    _check_n(n)
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise NotAPreorder("matrix shape does not match n")
    rows = [sum(1 << y for y in range(n) if matrix[x][y]) for x in range(n)]
    for x in range(n):
        if not rows[x] >> x & 1:
            raise NotAPreorder(f"not reflexive at {x}")
        for y in points(rows[x]):
            if rows[y] & ~rows[x]:
                raise NotAPreorder(f"not transitive through {x} <= {y}")
    return _from_nbhds(n, rows)


# -- separation and category ----------------------------------------------

def is_t1(T: Topology) -> bool:
    return all(u == 1 << x for x, u in enumerate(T.min_nbhd))


def is_regular(T: Topology, require_t1: bool = False) -> bool:
    """Point/closed-set separation by disjoint opens.

    T1 is not part of the definition unless ``require_t1`` is set. The
    smallest open set around a closed ``F`` is its open hull, and the
    smallest around ``x`` is ``U_x``, so those are the only pair to test.
    """
    if require_t1 and not is_t1(T):
        return False
    X = full(T.n)
    for F in T.closed_sets:
        V = open_hull(T, F)
        for x in points(X & ~F):
            if T.min_nbhd[x] & V:
                return False
    return True


def nowhere_dense(T: Topology, A: int) -> bool:
    return interior(T, closure(T, A)) == 0


def meager_kernel(T: Topology) -> int:
    """Union of all points whose singleton is nowhere dense.

    A set is a union of nowhere dense sets iff each of its singletons is
    nowhere dense, so this is the largest meager set.
    """
    return sum(1 << x for x in range(T.n) if nowhere_dense(T, 1 << x))


def meager(T: Topology, A: int) -> bool:
    _check_mask(A, T.n)
    return subset(A, meager_kernel(T))


def relatively_meager(T: Topology, Y: int, M: int) -> bool:
    """Whether ``M`` is meager in the subspace ``Y``."""
    if not subset(M, Y):
        return False
    for x in points(M):
        cl = closure(T, 1 << x) & Y
        # interior of cl inside Y
        if any(T.min_nbhd[y] & Y & ~cl == 0 for y in points(cl)):
            return False
    return True


def is_dense(T: Topology, A: int) -> bool:
    return closure(T, A) == full(T.n)


def is_baire(T: Topology) -> bool:
    # Meager sets are the subsets of the kernel, so only the kernel's
    # complement needs to be dense.
    return is_dense(T, complement(meager_kernel(T), T.n))


# -- definability relative to a coarser topology --------------------------

def baire_property_sets(sigma: Topology) -> SetFamily:
    meagers = _unions(1 << x for x in points(meager_kernel(sigma)))
    return family(u ^ m for u in sigma.opens for m in meagers)


def atoms(sigma: Topology) -> list[int]:
    """Atoms of the Boolean algebra generated by the opens.

    Two points share an atom iff they have the same minimal neighborhood.
    """
    groups: dict[int, int] = {}
    for x, u in enumerate(sigma.min_nbhd):
        groups[u] = groups.get(u, 0) | 1 << x
    return sorted(groups.values())


def c_sets(sigma: Topology) -> SetFamily:
    """C-sets on a finite space: the Boolean algebra generated by the opens.

    Applied to finitely many distinct sets, the Souslin operation yields a
    finite union of finite intersections, so closing the opens under it and
    under complements gives nothing beyond this algebra.
    """
    return family(_unions(atoms(sigma)))


def in_algebra(sigma: Topology, A: int) -> bool:
    return all(a & A in (0, a) for a in atoms(sigma))


CONVENTIONS = ("difference", "naive")


def pi_family(sigma: Topology, level: int, convention: str = "difference") -> SetFamily:
    """The multiplicative class of the given level (1 = closed sets).

    The additive class at level 2 is built from differences of opens under
    the ``difference`` convention and from closed sets under ``naive``;
    higher levels are countable (here: finite) unions of lower
    multiplicative classes, complemented.
    """
    if level < 1:
        raise ValueError("levels start at 1")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    n = sigma.n
    pis = [set(sigma.closed_sets)]
    for k in range(2, level + 1):
        if k == 2 and convention == "difference":
            base = {u & ~v for u in sigma.opens for v in sigma.opens}
        else:
            base = set().union(*pis)
        add = _unions(base)
        pis.append({complement(a, n) for a in add})
    return family(pis[level - 1])


def pi_rank(sigma: Topology, A: int, convention: str = "difference", max_level: int = 6):
    """Least level whose multiplicative class contains ``A``, else None."""
    for k in range(1, max_level + 1):
        if A in pi_family(sigma, k, convention):
            return k
    return None


def borel_class(sigma: Topology, A: int, verbose: bool = False, convention: str = "difference"):
    """Classify ``A`` as open, closed, clopen, constructible or none."""
    _check_mask(A, sigma.n)
    o, c = sigma.is_open(A), sigma.is_closed(A)
    if o and c:
        label = "clopen"
    elif o:
        label = "open"
    elif c:
        label = "closed"
    elif in_algebra(sigma, A):
        label = "constructible"
    else:
        label = "none"
    if not verbose:
        return label
    return {
        "class": label,
        "convention": convention,
        "pi_rank": {conv: pi_rank(sigma, A, conv) for conv in CONVENTIONS},
    }


def has_nbhd_basis_with(tau: Topology, pred: Callable[[int], bool]) -> bool:
    """Whether ``tau`` has a neighborhood basis of sets satisfying ``pred``.

    On a finite space a neighborhood of x inside ``U_x`` must equal ``U_x``,
    so every neighborhood basis contains all minimal neighborhoods, and they
    form a basis on their own. Checking them is therefore both necessary and
    sufficient.
    """
    return all(pred(u) for u in tau.min_nbhd)
