"""Multidegrees of mixed discriminants of sparse polynomial systems."""

from .cayley import CayleySystem, PointConfig, build_cayley, plucker
from .errors import MdiscError
from .planar import planar_bidegree, principal_bidegree
from .strata import fingerprint, fit_degree_formula, same_stratum
from .tropical import is_defective, tropical_degree

__all__ = [
    "CayleySystem",
    "MdiscError",
    "PointConfig",
    "build_cayley",
    "fingerprint",
    "fit_degree_formula",
    "is_defective",
    "planar_bidegree",
    "plucker",
    "principal_bidegree",
    "same_stratum",
    "tropical_degree",
]
__version__ = "0.1.0"
