"""Exhaustive finite-scale checks of the filtration lemmas and theorems.

Each property scans a deterministic instance space. Instances are plain
JSON-ready dicts, so a counterexample can be written out and replayed with
:func:`replay`. The statements checked here are proved theorems: a failing
report points at a defect in this package, not at the mathematics.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import equiv as eq
from . import filtration as fl
from . import topology as tp
from .enumeration import cached_catalog, enumerate_filtrations, enumerate_pairs
from .errors import GroundSizeTooLarge, UnknownProperty, UnknownQuery
from .topology import Topology

PASS, FAIL, TRIVIALIZED = "pass", "fail", "trivialized"
SKIP = "skip"
FAIL_NOTE = ("counterexample to a proved statement: this is a probable "
             "implementation defect, not a mathematical discovery")


@dataclass
class VerificationReport:
    property_id: str
    universe: str
    instances_checked: int
    outcome: str
    counterexample: Optional[dict] = None
    note: str = ""
    elapsed: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "property_id": self.property_id,
            "universe": self.universe,
            "instances_checked": self.instances_checked,
            "outcome": self.outcome,
            "counterexample": self.counterexample,
            "note": self.note,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d


# -- instance encoding -------------------------------------------------------

def _top(n: int, opens) -> Topology:
    return tp.make_topology(n, opens)


def _pair_instance(s: Topology, t: Topology) -> dict:
    return {"n": s.n, "sigma": list(s.opens), "tau": list(t.opens)}


def _pair(inst: dict):
    return _top(inst["n"], inst["sigma"]), _top(inst["n"], inst["tau"])


def _seq(inst: dict) -> fl.FiltrationSeq:
    return fl.seq_from_dict(inst["filtration"])


def _pairs(n: int) -> Iterator[dict]:
    for s, t in enumerate_pairs(n):
        yield _pair_instance(s, t)


def _filtrations(n: int, weak: bool = False, max_len: int = 3) -> Iterator[dict]:
    cat = cached_catalog(n)
    for s, t in enumerate_pairs(n, cat):
        for seq in enumerate_filtrations(s, t, max_len, weak=weak, catalog=cat):
            yield {"filtration": seq.to_dict()}


def _chains(n: int, max_len: int = 2) -> Iterator[dict]:
    """Every chain of at most ``max_len`` stages, aimed at its last stage."""
    cat = cached_catalog(n)

    def go(stages):
        yield {"filtration": fl.FiltrationSeq(n, stages, stages[-1]).to_dict()}
        if len(stages) < max_len:
            for t in cat:
                if tp.is_coarser(stages[-1], t):
                    yield from go(stages + [t])

    for s in cat:
        yield from go([s])


# -- checks: each returns None (holds), SKIP (hypotheses fail) or a detail dict

def _check_opb_i(inst):
    s, t = _pair(inst)
    st = fl.step(s, t)
    if not (tp.is_coarser(s, st) and tp.is_coarser(st, t)):
        return {"step": list(st.opens)}
    return None


def _check_opb_ii(inst):
    seq = _seq(inst)
    tau = seq.target
    for xi, lo in enumerate(seq.stages):
        up = seq.stages[xi + 1] if xi + 1 < len(seq) else tau
        st = fl.step(lo, tau)
        if not (tp.is_coarser(lo, st) and tp.is_coarser(st, up)):
            return {"xi": xi, "step": list(st.opens)}
    return None


def _check_slo_i(inst):
    s, t = _pair(inst)
    seq, status = fl.slowest(s, t)
    bad = fl.is_filtration(seq)
    if bad is not None or status == fl.BUDGET:
        return {"status": status, "violation": bad.to_dict() if bad else None}
    return None


def _check_slo_ii(inst):
    seq = _seq(inst)
    slow, _ = fl.slowest(seq.stages[0], seq.target)
    for xi, t_xi in enumerate(seq.stages):
        s_xi = slow.stages[min(xi, len(slow) - 1)]
        if not tp.is_coarser(s_xi, t_xi):
            return {"xi": xi, "slowest_stage": list(s_xi.opens)}
    return None


def _bp_basis(s: Topology, t: Topology) -> bool:
    bp = set(tp.baire_property_sets(s))
    return tp.has_nbhd_basis_with(t, bp.__contains__)


def _c_basis(s: Topology, t: Topology) -> bool:
    return tp.has_nbhd_basis_with(t, lambda m: tp.in_algebra(s, m))


def _check_sts(inst):
    s, t = _pair(inst)
    if not (tp.is_regular(t) and tp.is_baire(t) and _bp_basis(s, t)):
        return SKIP
    if fl.step(s, t) == s and s != t:
        return {"step_fixed": True}
    return None


def _check_tst_ii(inst):
    s, t = _pair(inst)
    if not (tp.is_regular(t) and tp.is_baire(t) and _c_basis(s, t)):
        return SKIP
    if fl.distance(s, t) is None:
        return {"distance": None}
    return None


def _check_frth_i(inst):
    seq = _seq(inst)
    tau = seq.target
    for alpha, t_alpha in enumerate(seq.stages):
        for F in fl.tame_sets(seq, alpha):
            if not tp.subset(tp.interior(tau, F), tp.closure(tau, tp.interior(t_alpha, F))):
                return {"alpha": alpha, "F": F}
    return None


def _check_frth_ii(inst):
    seq = _seq(inst)
    k = len(seq)
    for A in range(1 << seq.n):
        solid = [fl.is_solid(seq, a, A) for a in range(k)]
        for alpha in range(k):
            for beta in range(alpha, k):
                if solid[beta] and not solid[alpha]:
                    return {"alpha": alpha, "beta": beta, "A": A}
    return None


def _check_onsl(inst):
    seq = _seq(inst)
    for alpha in range(len(seq)):
        if not fl.is_slight(seq, alpha, 0):
            return {"alpha": alpha, "clause": "empty set"}
        slight = [A for A in range(1 << seq.n) if fl.is_slight(seq, alpha, A)]
        for A in slight:
            for B in slight:
                if not fl.is_slight(seq, alpha, A | B):
                    return {"alpha": alpha, "clause": "unions", "A": A, "B": B}
    return None


def solid_by_definition(seq: fl.FiltrationSeq, alpha: int, A: int) -> bool:
    """Literal definition: every family of tame sets whose union contains a
    non-empty relatively open part of A has a member with non-empty interior.

    The tame family is finite, so ranging over its subfamilies covers every
    countable family.
    """
    t_alpha = seq.stages[alpha]
    tame = fl.tame_sets(seq, alpha)
    pieces = {V & A for V in t_alpha.opens} - {0}
    for bits in range(1 << len(tame)):
        fam = [F for i, F in enumerate(tame) if bits >> i & 1]
        union = 0
        for F in fam:
            union |= F
        if any(tp.subset(p, union) for p in pieces):
            if all(tp.interior(t_alpha, F) == 0 for F in fam):
                return False
    return True


def _check_obv(inst):
    seq = _seq(inst)
    for alpha in range(len(seq)):
        for A in range(1 << seq.n):
            if fl.is_solid(seq, alpha, A) != solid_by_definition(seq, alpha, A):
                return {"alpha": alpha, "A": A}
    return None


def _check_slal(inst):
    seq = _seq(inst)
    for alpha in range(len(seq)):
        for xi in range(alpha):
            for A in range(1 << seq.n):
                c = fl.c_xi(seq, xi, alpha, A)
                if not seq.stages[xi].is_closed(c) or not fl.is_slight(seq, alpha, A & ~c):
                    return {"xi": xi, "alpha": alpha, "A": A, "c": c}
    return None


def _check_down(inst):
    s, t = _pair(inst)
    E = eq.Partition(inst["n"], tuple(inst["partition"]))
    seq, _ = fl.slowest(s, t)
    ch = eq.approx_chain(E, seq)
    for i, P in enumerate(ch):
        if not E.refines(P):
            return {"stage": i, "reason": "does not coarsen E"}
        if i and not P.refines(ch[i - 1]):
            return {"stage": i, "reason": "chain not decreasing"}
    return None


def _down_instances(n: int) -> Iterator[dict]:
    for E in eq.all_partitions(n):
        for inst in _pairs(n):
            yield dict(inst, partition=list(E.block_of))


def _discrete_chains(n: int) -> Iterator[dict]:
    D = tp.discrete(n)
    for k in range(1, 4):
        yield {"filtration": fl.FiltrationSeq(n, [D] * k, D).to_dict()}


def _check_discrete(inst):
    """Conclusions of the stabilization results on chains of discrete stages.

    On a finite set metrizable means discrete, and a filtration starting
    at a discrete topology is constant, so every conclusion is immediate.
    """
    seq = _seq(inst)
    n, k, tau = seq.n, len(seq), seq.target
    for alpha in range(1, k):
        if seq.stages[alpha] != tau:
            return {"result": "stabilization", "alpha": alpha}
    for E in eq.all_partitions(n):
        chain_ = eq.approx_chain(E, seq)
        for alpha in range(1, k + 1):
            if eq.relation_meet(chain_[:alpha]) != E:
                return {"result": "equivalence approximation", "partition": list(E.block_of)}
    for alpha in range(k):
        t_alpha = seq.stages[alpha]
        for A in range(1 << n):
            for xi in range(alpha + 1):
                B = A
                while True:  # all subsets B of A
                    if fl.is_solid(seq, alpha, B):
                        rest = tp.closure(seq.stages[xi], B) & ~A
                        if not tp.meager(t_alpha, rest):
                            return {"result": "solid closure", "A": A, "B": B, "xi": xi}
                    if B == 0:
                        break
                    B = (B - 1) & A
            if alpha + 1 < k and fl.is_solid(seq, alpha + 1, A):
                X1 = tp.closure(t_alpha, A)
                if not tp.relatively_meager(t_alpha, X1, X1 & ~A):
                    return {"result": "relative meager", "A": A, "alpha": alpha}
    return None


@dataclass(frozen=True)
class Property:
    check: Callable
    instances: Callable
    universe: str
    max_n: int = 3
    trivialized: str = ""


PROPERTIES = {
    "L_OPB_I": Property(_check_opb_i, _pairs, "all pairs sigma <= tau", max_n=4),
    "L_OPB_II": Property(_check_opb_ii, _filtrations, "all filtrations of length <= 3"),
    "P_SLO_I": Property(_check_slo_i, _pairs, "all pairs sigma <= tau", max_n=4),
    "P_SLO_II": Property(_check_slo_ii, _filtrations, "all filtrations of length <= 3"),
    "T_STS": Property(_check_sts, _pairs,
                      "pairs with tau regular and minimal neighborhoods BP wrt sigma", max_n=4),
    "C_TST_II": Property(_check_tst_ii, _pairs,
                         "pairs with tau regular and minimal neighborhoods C-sets wrt sigma", max_n=4),
    "L_FRTH_I": Property(_check_frth_i, lambda n: _filtrations(n, weak=True),
                         "all weak filtrations of length <= 3, all alpha, all alpha-tame F"),
    "L_FRTH_II": Property(_check_frth_ii, lambda n: _filtrations(n, weak=True),
                          "all weak filtrations of length <= 3, alpha <= beta, all subsets"),
    "L_ONSL": Property(_check_onsl, _chains, "all chains of length <= 2, all alpha, all subsets"),
    "L_OBV": Property(_check_obv, _chains, "all chains of length <= 2, all alpha, all subsets"),
    "L_SLAL_C": Property(_check_slal, _filtrations,
                         "all filtrations of length <= 3, xi < alpha, all subsets"),
    "E_DOWN": Property(_check_down, _down_instances,
                       "all partitions x slowest filtrations of all pairs"),
    "DISCRETE_STAGE_TRIVIALIZATIONS": Property(
        _check_discrete, _discrete_chains, "constant discrete chains of length 1..3",
        trivialized="metrizable stages on a finite set are discrete; conclusions "
                    "executed but carry none of the infinite content"),
}


def _run_one(args):
    pid, inst = args
    return PROPERTIES[pid].check(inst)


def check(property_id: str, n: int, budget: Optional[int] = None, jobs: int = 1) -> VerificationReport:
    if property_id not in PROPERTIES:
        raise UnknownProperty(property_id)
    prop = PROPERTIES[property_id]
    if not 0 <= n <= prop.max_n:
        raise GroundSizeTooLarge(f"{property_id} supports n <= {prop.max_n}")
    start = time.perf_counter()
    insts = prop.instances(n)
    if budget is not None:
        insts = (inst for i, inst in enumerate(insts) if i < budget)
    scanned = checked = 0
    counterexample = None
    if jobs > 1:
        insts = list(insts)
        with ProcessPoolExecutor(jobs) as pool:
            results = pool.map(_run_one, ((property_id, i) for i in insts), chunksize=32)
            pairs = list(zip(insts, results))
    else:
        pairs = ((inst, prop.check(inst)) for inst in insts)
    for inst, res in pairs:
        scanned += 1
        if res == SKIP:
            continue
        checked += 1
        if res is not None:
            counterexample = {"instance": inst, "detail": res}
            break
    if counterexample is not None:
        outcome, note = FAIL, FAIL_NOTE
    elif prop.trivialized:
        outcome, note = TRIVIALIZED, prop.trivialized
    else:
        outcome, note = PASS, ""
    if property_id in ("T_STS", "C_TST_II"):
        note = (note + "; " if note else "") + "tau Baire on every scanned pair (finite spaces)"
    universe = f"n={n}: {prop.universe} ({scanned} scanned)"
    return VerificationReport(property_id, universe, checked, outcome, counterexample,
                              note, time.perf_counter() - start)


def check_all(n: int, jobs: int = 1) -> list[VerificationReport]:
    return [check(pid, min(n, p.max_n), jobs=jobs) for pid, p in PROPERTIES.items()]


def replay(property_id: str, counterexample: dict):
    """Re-run a property on a stored counterexample; returns the check result."""
    if property_id not in PROPERTIES:
        raise UnknownProperty(property_id)
    return PROPERTIES[property_id].check(counterexample["instance"])


# -- exploration -------------------------------------------------------------

EXPLORE_MAX_N = 4


def _hypothesis_failures(s: Topology, t: Topology) -> list[str]:
    out = []
    if not tp.is_regular(t):
        out.append("tau not regular")
    if not _bp_basis(s, t):
        out.append("BP-basis hypothesis fails")
    if not _c_basis(s, t):
        out.append("C-set-basis hypothesis fails")
    return out


def _unreached(n: int) -> list[dict]:
    rows = []
    for s, t in enumerate_pairs(n):
        seq, status = fl.slowest(s, t)
        if status != fl.REACHED:
            rows.append({
                "sigma": list(s.opens), "tau": list(t.opens), "distance": "unreachable",
                "fixpoint": list(seq.stages[-1].opens),
                "failed_hypotheses": _hypothesis_failures(s, t),
            })
    return rows


def _weak_not_full(n: int) -> list[dict]:
    cat = cached_catalog(n)
    for s, t in enumerate_pairs(n, cat):
        for seq in enumerate_filtrations(s, t, 3, weak=True, catalog=cat):
            bad = fl.is_filtration(seq)
            if bad is not None:
                return [{"filtration": seq.to_dict(), "violation": bad.to_dict()}]
    return []


def _solid_gap(n: int, limit: int = 50) -> list[dict]:
    cat = cached_catalog(n)
    rows = []
    for s, t in enumerate_pairs(n, cat):
        for seq in enumerate_filtrations(s, t, 3, catalog=cat):
            for alpha in range(len(seq) - 1):
                for A in range(1, 1 << n):
                    if fl.is_solid(seq, alpha, A) and not fl.is_solid(seq, alpha + 1, A):
                        rows.append({"filtration": seq.to_dict(), "alpha": alpha, "A": A})
                        if len(rows) >= limit:
                            return rows
    return rows


QUERIES = {
    "UNREACHED_PAIRS": _unreached,
    "WEAK_NOT_FULL": _weak_not_full,
    "SOLID_GAP": _solid_gap,
}


def explore(query: str, n: int) -> dict:
    if query not in QUERIES:
        raise UnknownQuery(query)
    if not 0 <= n <= EXPLORE_MAX_N:
        raise GroundSizeTooLarge(f"explore supports n <= {EXPLORE_MAX_N}")
    results = QUERIES[query](n)
    note = "" if results else "none found"
    return {"query": query, "n": n, "count": len(results), "results": results, "note": note}
