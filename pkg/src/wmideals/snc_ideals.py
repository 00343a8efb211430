"""Weighted multiplier ideals of a simple normal crossings divisor, locally.

In coordinates where the divisor is ``x1 ... xr = 0`` the l-th weighted
multiplier ideal is generated by the squarefree monomials of degree ``r - l``
in ``x1..xr`` (the unit ideal once ``l >= r``).  That ideal is also the ideal of
the union of all (l+1)-fold intersections of the branches, which
:func:`strata_union_ideal` computes independently by intersecting linear
coordinate ideals.
"""
from __future__ import annotations

import itertools
from functools import reduce

from .errors import InvalidInput
from .monomial import MonomialIdeal, intersect, minimalize


def _check_rn(r: int, n: int):
    if not 0 <= r <= n:
        raise InvalidInput(f"divisor with {r} branches does not fit in {n} variables")


def local_wmi_generators(r: int, l: int, n: int) -> MonomialIdeal:
    _check_rn(r, n)
    if l < 0:
        raise InvalidInput("weight index l must be nonnegative")
    if l >= r:
        return MonomialIdeal.unit(n)
    gens = []
    for subset in itertools.combinations(range(r), r - l):
        gens.append(tuple(int(i in subset) for i in range(n)))
    return minimalize(gens, n)


def strata_union_ideal(r: int, j: int, n: int) -> MonomialIdeal:
    """Ideal of the union of all j-fold intersections of ``x1 = 0, ..., xr = 0``."""
    _check_rn(r, n)
    if j < 1:
        raise InvalidInput("stratum index j must be at least 1")
    # The j-fold intersection for J is cut out by the linear ideal (x_i : i in J).
    linear = [
        minimalize([tuple(int(i == k) for k in range(n)) for i in subset], n)
        for subset in itertools.combinations(range(r), j)
    ]
    if not linear:
        return MonomialIdeal.unit(n)
    return reduce(intersect, linear)
