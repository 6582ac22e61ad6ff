"""Realize finite groups as isometry groups of finite metric spaces."""
from .estimator import GroupRealizer, IsometrySolver
from .groups import FiniteGroup, GroupSpec, cyclic_group, group_from_spec, klein_four_group, symmetric_group
from .iso_search import IsoGroup, Isometry, enumerate_isometries, naive_enumerate
from .katetov import KatetovMap, StaircaseSpec, adjoin, kuratowski, pushforward, staircase, sup_distance
from .metric import FiniteMetricSpace, validate_space
from .realize import Neighborhood, RealizationReport, realize, verify_realization

__version__ = "0.1.0"

__all__ = [
    "FiniteGroup",
    "FiniteMetricSpace",
    "GroupRealizer",
    "GroupSpec",
    "IsoGroup",
    "Isometry",
    "IsometrySolver",
    "KatetovMap",
    "Neighborhood",
    "RealizationReport",
    "StaircaseSpec",
    "adjoin",
    "cyclic_group",
    "enumerate_isometries",
    "group_from_spec",
    "klein_four_group",
    "kuratowski",
    "naive_enumerate",
    "pushforward",
    "realize",
    "staircase",
    "sup_distance",
    "symmetric_group",
    "validate_space",
    "verify_realization",
]
