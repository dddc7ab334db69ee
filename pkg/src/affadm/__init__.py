"""Admissible, permissible and spin-permissible sets in extended affine Weyl
groups of types B, D and the ramified unitary group GU_{2m}."""
from .rootdata import Family, GroupKind, TypeB, TypeD, TypeGU, base_point, mu_shape, omega_vector
from .weyl import WeylElement, compose, format_element, inverse, parse_element
from .bruhat import bruhat_leq, length, lower_set, min_coset_rep
from .admset import (AdmReport, admissible_set, permissible_set, spin_permissible_set,
                     vertexwise_admissible_set)

__all__ = [
    "Family", "GroupKind", "TypeB", "TypeD", "TypeGU", "base_point", "mu_shape", "omega_vector",
    "WeylElement", "compose", "format_element", "inverse", "parse_element",
    "bruhat_leq", "length", "lower_set", "min_coset_rep",
    "AdmReport", "admissible_set", "permissible_set", "spin_permissible_set",
    "vertexwise_admissible_set",
]
