"""Slow, literal implementations used as independent oracles.

Nothing here uses minimal neighborhoods or the fast paths of the package;
every notion is evaluated straight from its definition over the open family.
"""

from itertools import product

import numpy as np


def full(n):
    return (1 << n) - 1


def subsets(n):
    return range(1 << n)


def is_topology_family(n, fam):
    fam = set(fam)
    if 0 not in fam or full(n) not in fam:
        return False
    return all(a | b in fam and a & b in fam for a in fam for b in fam)


def topologies_by_families(n):
    """Every family of subsets that is a topology (feasible for n <= 3)."""
    out = []
    all_sets = list(subsets(n))
    for bits in range(1 << len(all_sets)):
        fam = [s for i, s in enumerate(all_sets) if bits >> i & 1]
        if is_topology_family(n, fam):
            out.append(tuple(sorted(fam)))
    return sorted(out)


def count_preorders_numpy(n):
    """Count reflexive transitive relations by scanning every relation matrix.

    Reflexivity fixes the diagonal, so only off-diagonal bits vary.
    """
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    codes = np.arange(1 << len(off), dtype=np.int64)
    rel = {}
    for i in range(n):
        rel[(i, i)] = np.ones_like(codes, dtype=bool)
    for k, (i, j) in enumerate(off):
        rel[(i, j)] = (codes >> k) & 1 == 1
    ok = np.ones_like(codes, dtype=bool)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ok &= ~(rel[(i, j)] & rel[(j, k)]) | rel[(i, k)]
    return int(ok.sum())


def generate(n, gens):
    fam = set(gens) | {0, full(n)}
    while True:
        new = {a | b for a in fam for b in fam} | {a & b for a in fam for b in fam}
        if new <= fam:
            return tuple(sorted(fam))
        fam |= new


def interior(opens, A):
    out = 0
    for u in opens:
        if u & ~A == 0:
            out |= u
    return out


def closure(n, opens, A):
    closed = [full(n) & ~u for u in opens]
    out = full(n)
    for c in closed:
        if A & ~c == 0:
            out &= c
    return out


def coarser(a, b):
    return set(a) <= set(b)


def step(n, sigma, tau):
    closed = [full(n) & ~u for u in sigma]
    return generate(n, [u & interior(tau, F) for u in sigma for F in closed])


def is_filtration(n, stages, target, weak=False):
    chain = list(stages) + [target]
    if not all(coarser(a, b) for a, b in zip(chain, chain[1:])):
        return False
    for alpha, ta in enumerate(stages):
        for t in stages[:alpha]:
            for u in t:
                F = full(n) & ~u
                ia, it = interior(ta, F), interior(target, F)
                if weak:
                    if it & ~closure(n, target, ia):
                        return False
                elif ia != it:
                    return False
    return True


def is_regular(n, opens):
    closed = [full(n) & ~u for u in opens]
    for F in closed:
        for x in range(n):
            if F >> x & 1:
                continue
            if not any(U >> x & 1 and V & F == F and U & V == 0 for U in opens for V in opens):
                return False
    return True


def nowhere_dense(n, opens, A):
    return interior(opens, closure(n, opens, A)) == 0


def meager_sets(n, opens):
    nd = [A for A in subsets(n) if nowhere_dense(n, opens, A)]
    out = set()
    for bits in range(1 << len(nd)):
        u = 0
        for i, A in enumerate(nd):
            if bits >> i & 1:
                u |= A
        out.add(u)
    return out


def baire_property(n, opens):
    return tuple(sorted({u ^ m for u in opens for m in meager_sets(n, opens)}))


def boolean_algebra(n, opens):
    fam = set(opens)
    while True:
        new = {full(n) & ~a for a in fam} | {a | b for a in fam for b in fam}
        if new <= fam:
            return tuple(sorted(fam))
        fam |= new


def has_nbhd_basis(n, opens, family):
    """Literal neighborhood-basis definition."""
    for x in range(n):
        for B in subsets(n):
            if not interior(opens, B) >> x & 1:
                continue
            if not any(interior(opens, A) >> x & 1 and A & ~B == 0 for A in family):
                return False
    return True


def discrete_family(n, opens, members):
    for x in range(n):
        if not any(V >> x & 1 and sum(1 for m in members if m & V) <= 1 for V in opens):
            return False
    return True


def tame(n, stages, alpha):
    """Least family with every earlier-closed set, closed under patching.

    Enumerates every family of open sets and every assignment literally.
    """
    fam = {full(n) & ~u for t in stages[:alpha] for u in t}
    families = []
    for t in stages[:alpha]:
        for bits in range(1 << len(t)):
            members = [u for i, u in enumerate(t) if bits >> i & 1]
            if discrete_family(n, t, members):
                families.append(members)
    while True:
        new = set()
        for members in families:
            for assignment in product(sorted(fam), repeat=len(members)):
                s = 0
                for F, U in zip(assignment, members):
                    s |= F & U
                new.add(s)
        if new <= fam:
            return tuple(sorted(fam))
        fam |= new


def slight(n, stages, alpha, A):
    small = [F for F in tame(n, stages, alpha) if interior(stages[alpha], F) == 0]
    for bits in range(1 << len(small)):
        u = 0
        for i, F in enumerate(small):
            if bits >> i & 1:
                u |= F
        if A & ~u == 0:
            return True
    return False
