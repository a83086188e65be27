"""Arithmetic substrate: modular integers, polynomial rings, GF(2) and curves."""

from .modular import egcd, gen_prime, is_probable_prime, mod_inv, mod_pow
from .poly import RingPoly, center_lift, poly_inverse, poly_mul
from .gf2 import (Gf2kElement, Gf2Matrix, gf2_mat_inverse, gf2_mat_mul, gf2k_pow,
                  is_irreducible, random_invertible, random_irreducible,
                  random_permutation)
from .ec import (CURVES, INFINITY, P256, P384, P521, TOY17, EcCurve, EcPoint,
                 ec_add, ec_scalar_mul)

__all__ = [
    "egcd", "gen_prime", "is_probable_prime", "mod_inv", "mod_pow",
    "RingPoly", "center_lift", "poly_inverse", "poly_mul",
    "Gf2kElement", "Gf2Matrix", "gf2_mat_inverse", "gf2_mat_mul", "gf2k_pow",
    "is_irreducible", "random_invertible", "random_irreducible", "random_permutation",
    "CURVES", "INFINITY", "P256", "P384", "P521", "TOY17", "EcCurve", "EcPoint",
    "ec_add", "ec_scalar_mul",
]
