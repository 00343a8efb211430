"""Monomial ideals in n variables, stored as antichains of exponent vectors.

An exponent vector ``(a1, ..., an)`` stands for the monomial
``x1^a1 ... xn^an``.  The unit ideal is ``{(0, ..., 0)}`` and the zero ideal
has no generators.  Generators are kept in lex order with x1 > x2 > ... > xn,
so ``(x1 x2, x1 x3, x2 x3)`` prints in that order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InvalidInput

ExponentVector = tuple[int, ...]

INFINITE = "infinite"


def _check_vector(e, n=None) -> ExponentVector:
    e = tuple(int(a) for a in e)
    if any(a < 0 for a in e):
        raise InvalidInput(f"negative exponent in {e}")
    if n is not None and len(e) != n:
        raise DimensionMismatch(f"exponent {e} has length {len(e)}, expected {n}")
    return e


def divides(g: Sequence[int], e: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(g, e))


@dataclass(frozen=True)
class MonomialIdeal:
    ambient_dim: int
    generators: tuple[ExponentVector, ...]

    def __post_init__(self):
        # zero variables is allowed: the ring is the ground field
        if self.ambient_dim < 0:
            raise InvalidInput("ambient dimension must be nonnegative")

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return cls(n, tuple(_unit_vectors(n)))

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.ambient_dim,)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def __contains__(self, e) -> bool:
        return membership(self, e)

    def render(self, names: Sequence[str] | None = None) -> str:
        """Text form such as ``(x1 x2, x1^2)``; ``(1)`` and ``(0)`` for the trivial ideals."""
        if self.is_zero:
            return "(0)"
        if self.is_unit:
            return "(1)"
        if names is None:
            names = [f"x{i + 1}" for i in range(self.ambient_dim)]
        return "(" + ", ".join(render_monomial(g, names) for g in self.generators) + ")"

    def __str__(self):
        return self.render()

    def to_json(self) -> dict:
        return {"vars": self.ambient_dim, "gens": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        try:
            n = int(data["vars"])
            gens = data["gens"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed ideal JSON: {exc}") from None
        return minimalize(gens, n)


def render_monomial(e: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, a in zip(names, e):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return " ".join(parts) if parts else "1"


def _unit_vectors(n: int) -> list[ExponentVector]:
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Minimal generators of the ideal spanned by ``gens``.

    ``n`` is needed only when ``gens`` is empty (the zero ideal).
    """
    vecs = {_check_vector(g) for g in gens}
    lengths = {len(v) for v in vecs}
    if n is not None:
        lengths.add(n)
    if len(lengths) > 1:
        raise DimensionMismatch(f"exponent vectors of mixed lengths {sorted(lengths)}")
    if not lengths:
        raise InvalidInput("cannot infer ambient dimension of an empty generator set")
    n = lengths.pop()
    # Sorting by total degree means a divisor is always seen before its multiples.
    kept: list[ExponentVector] = []
    for v in sorted(vecs, key=lambda v: (sum(v), v)):
        if not any(divides(g, v) for g in kept):
            kept.append(v)
    return MonomialIdeal(n, tuple(sorted(kept, reverse=True)))


def _same_dim(I: MonomialIdeal, J: MonomialIdeal):
    if I.ambient_dim != J.ambient_dim:
        raise DimensionMismatch(
            f"ideals live in {I.ambient_dim} and {J.ambient_dim} variables"
        )


def membership(I: MonomialIdeal, e: Sequence[int]) -> bool:
    e = _check_vector(e, I.ambient_dim)
    return any(divides(g, e) for g in I.generators)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    lcms = [tuple(map(max, g, h)) for g in I.generators for h in J.generators]
    return minimalize(lcms, I.ambient_dim)


def contains(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff ``J`` is a subideal of ``I``."""
    _same_dim(I, J)
    return all(membership(I, g) for g in J.generators)


def colength(I: MonomialIdeal) -> int | str:
    """Number of monomials outside ``I``, or ``INFINITE``.

    Finite exactly when every variable has a pure power in ``I``; the
    standard monomials then sit inside the box below those powers.
    """
    n = I.ambient_dim
    bounds = []
    for i in range(n):
        powers = [g[i] for g in I.generators if all(a == 0 for j, a in enumerate(g) if j != i)]
        if not powers:
            return INFINITE
        bounds.append(min(powers))
    box = itertools.product(*(range(b) for b in bounds))
    return sum(1 for e in box if not any(divides(g, e) for g in I.generators))
