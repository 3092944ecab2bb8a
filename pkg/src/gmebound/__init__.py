"""Lower bounds on genuine multipartite entanglement concurrence."""

from .bounds import (
    BoundReport,
    full_report,
    l1_bound,
    l2_bound,
    theorem1_bound,
    theorem2_bound,
    theorem4_bound,
    theorem5_bound,
    theorem6_bound,
    theorem7_bound,
)
from .errors import DomainError, PhysicalityError, ShapeError, StateFileError
from .oracle import decomposition_upper_bound, sandwich_check
from .states import (
    Ensemble,
    MultipartiteState,
    PureState,
    density_of,
    ghz,
    load_state,
    maximally_mixed,
    mix,
    save_state,
    w,
)
from .tensor_ops import Bipartition, enumerate_bipartitions

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "BoundReport",
    "DomainError",
    "Ensemble",
    "MultipartiteState",
    "PhysicalityError",
    "PureState",
    "ShapeError",
    "StateFileError",
    "decomposition_upper_bound",
    "density_of",
    "enumerate_bipartitions",
    "full_report",
    "ghz",
    "l1_bound",
    "l2_bound",
    "load_state",
    "maximally_mixed",
    "mix",
    "sandwich_check",
    "save_state",
    "theorem1_bound",
    "theorem2_bound",
    "theorem4_bound",
    "theorem5_bound",
    "theorem6_bound",
    "theorem7_bound",
    "w",
]
