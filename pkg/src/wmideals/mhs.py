"""Type (0, q) pieces of the mixed Hodge structure of an SNC variety.

For an SNC variety ``G = G_1 ∪ ... ∪ G_N`` of pure dimension m, write ``G(r)``
for the disjoint union of the r-fold intersections.  With subsets ordered
ascending, ``λ_i`` includes a component of ``G_J`` into the component of
``G_{J - j_i}`` containing it, and

    δ_r = Σ_i (-1)^(i+1) λ_i^* : H^{0,q}(G(r)) -> H^{0,q}(G(r+1)).

The cohomology of this complex at ``G(l+1)`` is ``h^{0,q}`` of
``Gr^W_q H^{q+l}(G)``.

Strata are indexed by connected components: a configuration lists, for each
subset J with nonempty intersection, one :class:`StratumComponent` per
connected component of ``G_J``.  For q = 0 the pullbacks are forced (each
component is connected, so its H^0 is one-dimensional and pullback is the
identity).  For q > 0 they must be supplied, except where a block has a zero
side, which in particular covers every ``q`` for which only the first level
carries (0, q)-classes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from . import linalg
from .errors import InsufficientHodgeData, InvalidConfiguration, InvalidInput


@dataclass(frozen=True)
class StratumComponent:
    id: str
    subset: tuple[str, ...]
    h0q: tuple[int, ...]

    @property
    def level(self) -> int:
        return len(self.subset)

    def h(self, q: int) -> int:
        return self.h0q[q] if 0 <= q < len(self.h0q) else 0


@dataclass(frozen=True)
class Incidence:
    child: str
    dropped: str
    parent: str


@dataclass(frozen=True)
class Pullback:
    q: int
    child: str
    dropped: str
    matrix: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Violation:
    stratum_id: str | None
    message: str

    def __str__(self):
        return f"{self.stratum_id}: {self.message}" if self.stratum_id else self.message


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def messages(self) -> list[str]:
        return [str(v) for v in self.violations]


@dataclass(frozen=True)
class GradedPieceQuery:
    weight: int
    total_degree: int
    hodge_q: int | None = None

    def __post_init__(self):
        if self.weight < 0:
            raise InvalidInput("weight must be nonnegative")
        if self.total_degree < self.weight:
            raise InvalidInput("total degree must be at least the weight")
        if self.hodge_q is not None and self.hodge_q != self.weight:
            raise InvalidInput("only Hodge pieces of type (0, weight) are supported")

    @property
    def position(self) -> int:
        return self.total_degree - self.weight


@dataclass(frozen=True)
class SncConfiguration:
    dim_g: int
    components: tuple[str, ...]
    strata: tuple[StratumComponent, ...]
    incidence: tuple[Incidence, ...] = ()
    pullbacks: tuple[Pullback, ...] = ()
    # User assertion that G is the fiber of a resolution that is an
    # isomorphism away from the singular point; cannot be checked here.
    isomorphism_outside_point: bool | None = None

    # ---- JSON -----------------------------------------------------------

    @classmethod
    def from_json(cls, data: Mapping) -> "SncConfiguration":
        try:
            dim_g = int(data["dim"])
            components = tuple(str(c) for c in data["components"])
            strata = []
            for s in data["strata"]:
                subset = tuple(str(c) for c in s["subset"])
                h0q = s.get("h0q")
                if h0q is None and len(subset) == dim_g + 1:
                    h0q = [1]
                if h0q is None:
                    raise KeyError(f"h0q of stratum {s.get('id')}")
                strata.append(StratumComponent(str(s["id"]), subset, tuple(int(x) for x in h0q)))
            incidence = tuple(
                Incidence(str(e["child"]), str(e["dropped"]), str(e["parent"]))
                for e in data.get("incidence", [])
            )
            pullbacks = tuple(
                Pullback(
                    int(p["q"]),
                    str(p["child"]),
                    str(p["dropped"]),
                    tuple(tuple(Fraction(str(x)) for x in row) for row in p["matrix"]),
                )
                for p in data.get("pullbacks", [])
            )
            iso = data.get("assumptions", {}).get("isomorphism_outside_point")
        except (KeyError, TypeError, ValueError, ZeroDivisionError, AttributeError) as exc:
            raise InvalidInput(f"malformed SNC configuration: {exc!r}") from None
        return cls(dim_g, components, tuple(strata), incidence, pullbacks, iso)

    def to_json(self) -> dict:
        out = {
            "dim": self.dim_g,
            "components": list(self.components),
            "strata": [{"id": s.id, "subset": list(s.subset), "h0q": list(s.h0q)} for s in self.strata],
        }
        if self.incidence:
            out["incidence"] = [
                {"child": e.child, "dropped": e.dropped, "parent": e.parent} for e in self.incidence
            ]
        if self.pullbacks:
            out["pullbacks"] = [
                {
                    "q": p.q,
                    "child": p.child,
                    "dropped": p.dropped,
                    "matrix": [[_fraction_json(x) for x in row] for row in p.matrix],
                }
                for p in self.pullbacks
            ]
        if self.isomorphism_outside_point is not None:
            out["assumptions"] = {"isomorphism_outside_point": self.isomorphism_outside_point}
        return out

    @classmethod
    def curves(cls, genera: Mapping[str, int], edges: Iterable[tuple[str, str]], **kwargs) -> "SncConfiguration":
        """Configuration of smooth curves meeting transversally.

        ``edges`` lists one pair per intersection point; repeated pairs give
        parallel edges in the dual graph.
        """
        names = tuple(genera)
        strata = [StratumComponent(c, (c,), (1, int(genera[c]))) for c in names]
        order = {c: i for i, c in enumerate(names)}
        for k, (a, b) in enumerate(edges):
            pair = tuple(sorted((a, b), key=order.__getitem__))
            strata.append(StratumComponent(f"p{k}", pair, (1,)))
        return cls(1, names, tuple(strata), **kwargs)

    # ---- structure ------------------------------------------------------

    @cached_property
    def _order(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.components)}

    @cached_property
    def by_id(self) -> dict[str, StratumComponent]:
        return {s.id: s for s in self.strata}

    def sorted_subset(self, subset) -> tuple[str, ...]:
        return tuple(sorted(subset, key=lambda c: self._order.get(c, len(self._order))))

    @cached_property
    def levels(self) -> list[list[StratumComponent]]:
        """Strata grouped by level; ``levels[r - 1]`` holds G(r) in a fixed order."""
        top = max((s.level for s in self.strata), default=0)
        grouped: list[list[StratumComponent]] = [[] for _ in range(top)]
        for s in self.strata:
            grouped[s.level - 1].append(s)
        for group in grouped:
            group.sort(key=lambda s: tuple(self._order.get(c, -1) for c in self.sorted_subset(s.subset)))
        return grouped

    @property
    def n_levels(self) -> int:
        return len(self.levels)

    @cached_property
    def _by_subset(self) -> dict[tuple[str, ...], list[StratumComponent]]:
        out: dict[tuple[str, ...], list[StratumComponent]] = {}
        for s in self.strata:
            out.setdefault(self.sorted_subset(s.subset), []).append(s)
        return out

    def parents(self, child: StratumComponent) -> dict[str, str | None]:
        """Map each index of ``child.subset`` to the stratum containing ``child`` once it is dropped.

        Explicit incidence records win; otherwise the parent is inferred when
        the smaller subset has exactly one connected component.
        """
        explicit = {e.dropped: e.parent for e in self.incidence if e.child == child.id}
        out: dict[str, str | None] = {}
        for c in child.subset:
            if c in explicit:
                out[c] = explicit[c]
                continue
            rest = self.sorted_subset(x for x in child.subset if x != c)
            candidates = self._by_subset.get(rest, [])
            out[c] = candidates[0].id if len(candidates) == 1 else None
        return out

    @cached_property
    def _pullback_map(self) -> dict[tuple[int, str, str], Pullback]:
        return {(p.q, p.child, p.dropped): p for p in self.pullbacks}

    # ---- validation -----------------------------------------------------

    def validate(self) -> ValidationReport:
        v: list[Violation] = []
        m = self.dim_g
        if m < 0:
            v.append(Violation(None, "dimension must be nonnegative"))
        if len(set(self.components)) != len(self.components):
            v.append(Violation(None, "duplicate component labels"))
        if not self.components:
            v.append(Violation(None, "no components"))

        seen: set[str] = set()
        for s in self.strata:
            if s.id in seen:
                v.append(Violation(s.id, "duplicate stratum id"))
            seen.add(s.id)
            if not s.subset:
                v.append(Violation(s.id, "empty subset"))
                continue
            unknown = [c for c in s.subset if c not in self._order]
            if unknown:
                v.append(Violation(s.id, f"subset cites unknown components {unknown}"))
            if len(set(s.subset)) != len(s.subset):
                v.append(Violation(s.id, "subset repeats a component"))
            if s.level > m + 1:
                v.append(Violation(s.id, f"level {s.level} exceeds dimension {m} + 1"))
                continue
            expected = m - s.level + 2
            if len(s.h0q) != expected:
                v.append(Violation(
                    s.id,
                    f"h0q has length {len(s.h0q)}, expected {expected} for a stratum of dimension {m - s.level + 1}",
                ))
            if s.h0q and s.h0q[0] != 1:
                v.append(Violation(s.id, "h^{0,0} must be 1 (one record per connected component)"))
            if any(x < 0 for x in s.h0q):
                v.append(Violation(s.id, "negative Hodge number"))

        for c in self.components:
            n_own = len(self._by_subset.get((c,), []))
            if n_own != 1:
                v.append(Violation(c, f"component needs exactly one level-1 stratum, found {n_own}"))

        keys = set()
        for e in self.incidence:
            if (e.child, e.dropped) in keys:
                v.append(Violation(e.child, f"duplicate incidence for dropped index {e.dropped}"))
            keys.add((e.child, e.dropped))
            child = self.by_id.get(e.child)
            if child is None:
                v.append(Violation(e.child, "incidence cites unknown child"))
                continue
            if e.dropped not in child.subset:
                v.append(Violation(e.child, f"dropped index {e.dropped} not in subset"))
                continue
            parent = self.by_id.get(e.parent)
            if parent is None:
                v.append(Violation(e.child, f"missing incidence target {e.parent}"))
                continue
            rest = self.sorted_subset(x for x in child.subset if x != e.dropped)
            if self.sorted_subset(parent.subset) != rest:
                v.append(Violation(e.child, f"incidence parent {e.parent} has subset {list(parent.subset)}, expected {list(rest)}"))

        for s in self.strata:
            if s.level < 2 or any(c not in self._order for c in s.subset):
                continue
            for dropped, parent in self.parents(s).items():
                if parent is None:
                    v.append(Violation(s.id, f"missing incidence for dropped index {dropped}"))

        for p in self.pullbacks:
            child = self.by_id.get(p.child)
            if p.q < 1:
                v.append(Violation(p.child, "pullbacks are only taken for q >= 1"))
                continue
            if child is None or p.dropped not in child.subset:
                v.append(Violation(p.child, f"pullback cites unknown incidence ({p.child}, {p.dropped})"))
                continue
            parent = self.by_id.get(self.parents(child).get(p.dropped) or "")
            if parent is None:
                continue
            shape = (child.h(p.q), parent.h(p.q))
            rows = len(p.matrix)
            cols = {len(r) for r in p.matrix}
            ok = rows == shape[0] and (cols <= {shape[1]} if rows else True)
            if not ok:
                v.append(Violation(p.child, f"pullback matrix for q={p.q}, dropped {p.dropped} should be {shape[0]}x{shape[1]}"))

        if not v:
            qs = {0} | {p.q for p in self.pullbacks}
            for q in sorted(qs):
                maps = _assemble(self, q)[1]
                for r in range(len(maps) - 1):
                    a, b = maps[r], maps[r + 1]
                    if a is None or b is None:
                        continue
                    prod = linalg.matmul(b.rows, a.rows, a.n_rows, a.n_cols)
                    if not linalg.is_zero(prod):
                        v.append(Violation(
                            None,
                            f"complex condition violated: δ_{r + 2} ∘ δ_{r + 1} != 0 for q={q}",
                        ))
        return ValidationReport(tuple(v))

    def require_valid(self) -> None:
        report = self._validation
        if not report.ok:
            raise InvalidConfiguration(report.violations)

    @cached_property
    def _validation(self) -> ValidationReport:
        return self.validate()


def _fraction_json(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class DeltaMap:
    """Matrix of δ_r; rows index G(r+1) classes, columns index G(r) classes."""

    n_rows: int
    n_cols: int
    rows: list = field(compare=False)

    @property
    def rank(self) -> int:
        return linalg.rank_rational(self.rows) if self.n_rows and self.n_cols else 0


def term_dims(config: SncConfiguration, q: int) -> list[int]:
    """Dimension of H^{0,q}(G(r)) for r = 1, ..., number of levels."""
    return [sum(s.h(q) for s in level) for level in config.levels]


def _assemble(config: SncConfiguration, q: int) -> tuple[list[int], list[DeltaMap | None]]:
    dims = term_dims(config, q)
    maps: list[DeltaMap | None] = []
    for r in range(1, config.n_levels):
        sources, targets = config.levels[r - 1], config.levels[r]
        col_at, off = {}, 0
        for s in sources:
            col_at[s.id] = off
            off += s.h(q)
        M = linalg.zeros(dims[r], dims[r - 1])
        known = True
        row = 0
        for child in targets:
            hc = child.h(q)
            parents = config.parents(child)
            for i, c in enumerate(config.sorted_subset(child.subset), start=1):
                parent = config.by_id[parents[c]]
                hp = parent.h(q)
                if hc == 0 or hp == 0:
                    continue
                if q == 0:
                    block = ((1,),)
                else:
                    pb = config._pullback_map.get((q, child.id, c))
                    if pb is None:
                        known = False
                        continue
                    block = pb.matrix
                sign = 1 if i % 2 == 1 else -1
                c0 = col_at[parent.id]
                for a in range(hc):
                    for b in range(hp):
                        M[row + a][c0 + b] += sign * block[a][b]
            row += hc
        maps.append(DeltaMap(dims[r], dims[r - 1], M) if known else None)
    return dims, maps


def delta_complex_q(config: SncConfiguration, q: int) -> list[DeltaMap]:
    """The differentials δ_1, δ_2, ... on (0, q)-pieces, as exact matrices."""
    if q < 0:
        raise InvalidInput("q must be nonnegative")
    config.require_valid()
    _, maps = _assemble(config, q)
    missing = [r + 1 for r, M in enumerate(maps) if M is None]
    if missing:
        raise InsufficientHodgeData(
            f"pullback matrices for q={q} are needed to build δ_r for r in {missing}"
        )
    return maps  # type: ignore[return-value]


def graded_piece_bounds(config: SncConfiguration, query: GradedPieceQuery) -> tuple[int, int, bool]:
    """``(lower, upper, exact)`` for dim ker δ_{l+1} / im δ_l at position l.

    When a differential is unknown only the rank constraints of a complex
    are used, so the interval always contains the true value.  ``exact``
    means the interval is a single point.
    """
    config.require_valid()
    q, l = query.weight, query.position
    dims, maps = _assemble(config, q)
    if l >= len(dims):
        return 0, 0, True
    here = dims[l]
    before = dims[l - 1] if l >= 1 else 0
    after = dims[l + 1] if l + 1 < len(dims) else 0

    out_map = maps[l] if l < len(maps) else DeltaMap(0, here, [])
    in_map = maps[l - 1] if l >= 1 else DeltaMap(here, 0, [[] for _ in range(here)])

    if out_map is not None:
        ker_lo = ker_hi = here - out_map.rank
    else:
        ker_lo, ker_hi = max(0, here - after), here
    if in_map is not None:
        r_in = in_map.rank
        lower, upper = max(ker_lo - r_in, 0), ker_hi - r_in
    else:
        # rank(δ_l) <= min(dim C^{l-1}, dim ker δ_{l+1})
        lower, upper = max(0, ker_lo - before), ker_hi
    # Matching bounds pin the value down even without every matrix.
    return lower, upper, lower == upper


def graded_piece_dim(config: SncConfiguration, query: GradedPieceQuery) -> int:
    lo, hi, exact = graded_piece_bounds(config, query)
    if not exact:
        raise InsufficientHodgeData(
            f"h^{{0,{query.weight}}} of Gr^W_{query.weight} H^{query.total_degree} needs pullback "
            f"matrices for q={query.weight}; known bounds [{lo}, {hi}]",
            lower=lo,
            upper=hi,
        )
    return lo


@dataclass(frozen=True)
class ProfileEntry:
    q: int
    dim: int | None
    lower: int
    upper: int

    @property
    def available(self) -> bool:
        return self.dim is not None


def hodge_0q_profile(config: SncConfiguration, total_degree: int) -> list[ProfileEntry]:
    """``h^{0,q}(H^t(G))`` for q = 0..t, flagging entries that need more data."""
    out = []
    for q in range(total_degree + 1):
        lo, hi, exact = graded_piece_bounds(config, GradedPieceQuery(q, total_degree))
        out.append(ProfileEntry(q, lo if exact else None, lo, hi))
    return out


def euler_sides(config: SncConfiguration, q: int) -> tuple[int, int]:
    """Both sides of Σ (-1)^l dim C^l = Σ (-1)^l dim H^l(C) for the (0, q)-complex."""
    dims = term_dims(config, q)
    chain = sum((-1) ** l * d for l, d in enumerate(dims))
    cohom = sum(
        (-1) ** l * graded_piece_dim(config, GradedPieceQuery(q, q + l)) for l in range(len(dims))
    )
    return chain, cohom
