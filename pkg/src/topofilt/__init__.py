"""Finite-model laboratory for filtrations between topologies."""

from .equiv import Partition, approx, approx_chain, classes_open, relation_meet
from .filtration import (
    FiltrationSeq,
    c_xi,
    distance,
    is_filtration,
    is_slight,
    is_solid,
    is_weak_filtration,
    oplus1,
    slowest,
    step,
    tame_sets,
)
from .topology import (
    Topology,
    closure,
    discrete,
    indiscrete,
    interior,
    join,
    make_topology,
    sierpinski,
)

__version__ = "0.1.0"
