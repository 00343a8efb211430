"""Numerical consequences for a hypersurface D of degree d in P^n with isolated singularities."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import InvalidInput, NotApplicable


def lc_special_point_bound(d: int, n: int) -> int:
    """Max number of non-rational points of type (0,0)..(0,n-3) when (P^n, D) is log-canonical."""
    return comb(d - 1, n) if d >= 1 else 0


def nonrational_point_bound(d: int, n: int) -> int:
    """The weaker bound on all non-rational points obtained from the adjoint ideal alone."""
    return comb(d, n) if d >= 0 else 0


def surjectivity_threshold(l: int, d: int, n: int) -> int:
    """Least k such that H^0(O(k)) surjects onto H^0(O_{Z_l}) for every such D."""
    if l < 1:
        raise InvalidInput("l must be at least 1")
    return d - n - 1 if l >= 2 else d - n


@dataclass(frozen=True)
class Deductions:
    d: int
    n: int
    max_nonrational_points: int | None = None
    max_length_z2: int | None = None
    max_genus_sum: int | None = None
    lc_type_of_rest: tuple[int, int] | None = None
    exceptions_allowed: int | None = None
    statements: tuple[str, ...] = field(default=())

    @property
    def applies(self) -> bool:
        return bool(self.statements)

    def to_json(self) -> dict:
        out: dict = {"applies": self.applies, "statements": list(self.statements)}
        for key in ("max_nonrational_points", "max_length_z2", "max_genus_sum", "exceptions_allowed"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        if self.lc_type_of_rest is not None:
            out["lc_type_of_rest"] = list(self.lc_type_of_rest)
        return out


def low_degree_deductions(d: int, n: int) -> Deductions:
    top = (0, n - 2)
    if d == n:
        return Deductions(
            d, n,
            max_nonrational_points=1,
            lc_type_of_rest=top,
            exceptions_allowed=0,
            statements=(
                "at most one non-rational singular point",
                f"such a point is log-canonical of type {top}",
            ),
        )
    if d == n + 1:
        return Deductions(
            d, n,
            max_length_z2=1,
            max_genus_sum=n + 1,
            lc_type_of_rest=top,
            exceptions_allowed=1,
            statements=(
                "Z_l has length at most one for every l >= 2",
                f"all non-rational points except possibly one are log-canonical of type {top}",
                f"the geometric genera of the singular points sum to at most {n + 1}",
            ),
        )
    return Deductions(d, n)


@dataclass(frozen=True)
class BudgetVerdict:
    consistent: bool
    genus_sum: int
    violations: tuple[str, ...]

    def to_json(self) -> dict:
        return {"consistent": self.consistent, "genus_sum": self.genus_sum, "violations": list(self.violations)}


def _as_type(t) -> tuple[int, int] | None:
    if t is None:
        return None
    try:
        a, b = (int(x) for x in t)
    except (TypeError, ValueError):
        raise InvalidInput(f"singularity type must be a pair like [0, 1], got {t!r}") from None
    return a, b


def budget_check(d: int, n: int, singular_points) -> BudgetVerdict:
    """Check declared singular points of a degree n+1 hypersurface against the genus budget.

    Each point is a mapping with ``p_g`` and optionally ``type`` (a pair
    ``[0, k]`` declaring it log-canonical of that type).
    """
    if d != n + 1:
        raise NotApplicable(f"genus budget is derived only for d = n + 1 (got d={d}, n={n})")
    top = (0, n - 2)
    violations = []
    pgs = []
    exceptional = []
    for k, pt in enumerate(singular_points):
        try:
            pg = int(pt["p_g"])
        except (KeyError, TypeError, ValueError):
            raise InvalidInput(f"point {k} lacks an integer p_g") from None
        if pg < 0:
            raise InvalidInput(f"point {k} has negative geometric genus")
        t = _as_type(pt.get("type"))
        pgs.append(pg)
        if t is not None and pg != 1:
            violations.append(f"point {k}: declared log-canonical of type {t} but p_g = {pg} (must be 1)")
        if pg >= 2 or (t is not None and t != top):
            exceptional.append(k)
    total = sum(pgs)
    if total > n + 1:
        violations.append(f"sum of geometric genera {total} exceeds {n + 1}")
    if len(exceptional) > 1:
        violations.append(
            f"points {exceptional} are not of type {top}; at most one such non-rational point is allowed"
        )
    return BudgetVerdict(not violations, total, tuple(violations))
