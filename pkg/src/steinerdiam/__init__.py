"""Exact Steiner distances and Steiner k-diameters on small simple graphs,
structural recognizers for the characterized 3-set diameter classes, and a
verification harness that checks the characterizations and the
complement-pair bounds over exhaustive corpora.

The heavy sweeps run on a compiled kernel when the extension built, and on
a pure-Python mirror otherwise; `BACKEND` says which one is active, and the
STEINERDIAM_BACKEND environment variable ("c" or "python") forces a choice
at import time.
"""

from ._kernel import BACKEND
from .errors import (
    CapacityError,
    DomainError,
    GraphDecodeError,
    ParameterError,
    SteinerdiamError,
)
from .graphs import Graph, complement, is_connected
from .graph6 import from_graph6, to_graph6
from .steiner import (
    SteinerReport,
    diameter_witness,
    distance_to_set,
    steiner_diameter,
    steiner_distance,
    steiner_distance_3,
    steiner_distance_oracle,
    steiner_ecc,
    steiner_eccentricities,
    steiner_radius,
    steiner_report,
    steiner_tree,
)
from .recognizers import Sdiam3Class, classify_sdiam2, classify_sdiam3
from .nordhaus import (
    BoundSpec,
    PairMetrics,
    pair_metrics,
    small_k_bounds,
    sum_product_bounds,
)
from .claims import claim_ids
from .runner import RunReport, TheoremVerdict, run_suite

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundSpec",
    "CapacityError",
    "DomainError",
    "Graph",
    "GraphDecodeError",
    "PairMetrics",
    "ParameterError",
    "RunReport",
    "Sdiam3Class",
    "SteinerReport",
    "SteinerdiamError",
    "TheoremVerdict",
    "claim_ids",
    "classify_sdiam2",
    "classify_sdiam3",
    "complement",
    "diameter_witness",
    "distance_to_set",
    "from_graph6",
    "is_connected",
    "pair_metrics",
    "run_suite",
    "small_k_bounds",
    "steiner_diameter",
    "steiner_distance",
    "steiner_distance_3",
    "steiner_distance_oracle",
    "steiner_ecc",
    "steiner_eccentricities",
    "steiner_radius",
    "steiner_report",
    "steiner_tree",
    "sum_product_bounds",
    "to_graph6",
    "__version__",
]
