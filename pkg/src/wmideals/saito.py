"""Multiplier and adjoint ideals at an isolated weighted-homogeneous singularity.

If ``f`` has rational weights ``w`` (so ``<w, m> = 1`` on every monomial of
``f``), then near the singular point

    I0(D)  = ( x^l : <w, l + 1> >= 1 )
    adj(D) = ( x^l : <w, l + 1> >  1 )

Only ``w`` enters; nothing checks that a polynomial with these weights
actually defines an isolated singularity.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInput
from .monomial import MonomialIdeal, colength, contains, minimalize

WeightVector = tuple[Fraction, ...]


def parse_weights(text: str | Sequence) -> WeightVector:
    """Accept ``"1/3,1/3,1/3"`` or a sequence of numbers / fraction strings."""
    items = text.split(",") if isinstance(text, str) else list(text)
    try:
        w = tuple(Fraction(str(x).strip()) for x in items)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"cannot parse weights {text!r}: {exc}") from None
    return check_weights(w)


def check_weights(w) -> WeightVector:
    w = tuple(Fraction(x) for x in w)
    if not w:
        raise InvalidInput("weight vector must be nonempty")
    if any(x <= 0 for x in w):
        raise InvalidInput(f"weights must be positive, got {[str(x) for x in w]}")
    return w


def _threshold(w: WeightVector) -> Fraction:
    # <w, l + 1> >= 1  <=>  <w, l> >= 1 - <w, 1>
    return 1 - sum(w)


def satisfies(w: WeightVector, e: Sequence[int], strict: bool) -> bool:
    value = sum(wi * (ei + 1) for wi, ei in zip(w, e))
    return value > 1 if strict else value >= 1


def weighted_ideal(w, strict: bool = False) -> MonomialIdeal:
    w = check_weights(w)
    n = len(w)
    t = _threshold(w)
    if t < 0 or (t == 0 and not strict):
        return MonomialIdeal.unit(n)
    bounds = [math.ceil(t / wi) + 1 for wi in w]
    # For each choice of the first n-1 exponents only the smallest admissible
    # last exponent can be minimal.
    gens = []
    for head in itertools.product(*(range(b + 1) for b in bounds[:-1])):
        rest = t - sum(wi * a for wi, a in zip(w, head))
        if rest < 0 or (rest == 0 and not strict):
            last = 0
        else:
            q = rest / w[-1]
            last = math.floor(q) + 1 if strict else math.ceil(q)
        gens.append(head + (last,))
    return minimalize(gens, n)


def is_log_canonical(w) -> bool:
    return sum(check_weights(w)) >= 1


def wh_chain(w) -> tuple[MonomialIdeal, MonomialIdeal]:
    """Return ``(adj, I0)``.

    For an isolated weighted-homogeneous singularity the chain of weighted
    multiplier ideals collapses to ``I0^{W0} ⊆ adj = I0^{W1} ⊆ I0^{W2} = ... = I0``.
    """
    adj = weighted_ideal(w, strict=True)
    i0 = weighted_ideal(w, strict=False)
    assert contains(i0, adj)
    return adj, i0


def adjoint_colength(w) -> int:
    """Length of the scheme cut out by adj(D), i.e. the geometric genus."""
    c = colength(weighted_ideal(w, strict=True))
    assert isinstance(c, int)
    return c
