"""Difference sheaves C_l at an isolated singular point, and what they classify.

Input is always resolution combinatorics: ``G`` is the reduced exceptional
fiber, over the singular point x, of a log-resolution of D (in a smooth
n-dimensional ambient variety) that is an isomorphism away from x.  Then, for
l >= 2,

    dim (C_l)_x = h^{0, n-l}(H^{n-2}(G)),

which does not depend on the chosen resolution.  Nothing here checks that a
configuration really comes from such a resolution.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .dual_complex import DualComplex, betti_numbers, require_graph
from .errors import DimensionMismatch, InsufficientHodgeData, InvalidInput, LcInconsistent
from .mhs import GradedPieceQuery, SncConfiguration, graded_piece_bounds, graded_piece_dim


@dataclass(frozen=True)
class LcType:
    kind: str  # "rational-or-trivial", "lc-type" or "unclassified"
    total: int
    hodge_type: tuple[int, int] | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "total": self.total}
        if self.hodge_type is not None:
            out["type"] = list(self.hodge_type)
        return out

    def __str__(self):
        if self.hodge_type is not None:
            return f"log-canonical of type {self.hodge_type}"
        if self.kind == "rational-or-trivial":
            return "rational or trivial (all C_l vanish)"
        return f"unclassified, sum of dim C_l = {self.total}"


@dataclass(frozen=True)
class CDimensionReport:
    n: int
    dims: dict[int, int | None]
    bounds: dict[int, tuple[int, int]] = field(default_factory=dict)
    lc_type: LcType | None = None

    def __post_init__(self):
        assert all(d is None or d >= 0 for d in self.dims.values())
        assert all(self.bounds[l][0] <= self.bounds[l][1] for l in self.bounds)

    @property
    def total(self) -> int | None:
        if any(d is None for d in self.dims.values()):
            return None
        return sum(self.dims.values())  # type: ignore[arg-type]

    @property
    def complete(self) -> bool:
        return self.total is not None

    def to_json(self) -> dict:
        out: dict = {
            "n": self.n,
            "dims": {str(l): d for l, d in sorted(self.dims.items())},
            "total": self.total,
        }
        if self.bounds:
            out["bounds"] = {str(l): {"lower": lo, "upper": hi} for l, (lo, hi) in sorted(self.bounds.items())}
        if self.lc_type is not None:
            out["lc_type"] = self.lc_type.to_json()
        return out


def c_dimensions(config: SncConfiguration, n: int) -> CDimensionReport:
    if config.dim_g != n - 2:
        raise DimensionMismatch(
            f"exceptional fiber of an isolated singularity in dimension {n} has dimension {n - 2}, "
            f"configuration has dimension {config.dim_g}"
        )
    dims: dict[int, int | None] = {}
    bounds: dict[int, tuple[int, int]] = {}
    for l in range(2, n + 1):
        lo, hi, exact = graded_piece_bounds(config, GradedPieceQuery(n - l, n - 2))
        dims[l] = lo if exact else None
        if not exact:
            bounds[l] = (lo, hi)
    return CDimensionReport(n, dims, bounds)


def curve_branch_c2(branch_count: int) -> int:
    """dim (C_2)_x for a plane curve singularity with the given number of branches."""
    if branch_count < 1:
        raise InvalidInput("a singular point has at least one branch")
    return branch_count - 1


def surface_c_dims(genera, dual_graph: DualComplex) -> tuple[int, int]:
    """``(dim C_2, dim C_3)`` for a normal surface singularity in a threefold.

    dim C_2 is the total genus of the exceptional curves and dim C_3 is the
    first Betti number of their dual graph.
    """
    require_graph(dual_graph)
    if any(g < 0 for g in genera):
        raise InvalidInput("genera must be nonnegative")
    b = betti_numbers(dual_graph)
    return sum(genera), (b[1] if len(b) > 1 else 0)


def classify_lc_type(report: CDimensionReport, assume_log_canonical: bool) -> LcType:
    total = report.total
    if total is None:
        raise InsufficientHodgeData("cannot classify: some dim C_l are unavailable")
    if total == 0:
        return LcType("rational-or-trivial", 0)
    if not assume_log_canonical:
        return LcType("unclassified", total)
    # A log-canonical non-rational point has h^{n-2}(G, O_G) = 1.
    if total > 1:
        raise LcInconsistent(
            f"inconsistent with log-canonical: sum of dim C_l is {total}, at most 1 is allowed"
        )
    (l,) = [l for l, d in report.dims.items() if d == 1]
    return LcType("lc-type", 1, (0, report.n - l))


def with_classification(report: CDimensionReport, assume_log_canonical: bool) -> CDimensionReport:
    return CDimensionReport(report.n, report.dims, report.bounds, classify_lc_type(report, assume_log_canonical))


def transversal_rank(slice_config: SncConfiguration, n: int, s: int, l: int) -> int:
    """Generic rank of C_l along an s-dimensional component of the singular locus.

    ``slice_config`` is the exceptional fiber over a point of the cut by s
    general hypersurfaces, so it has dimension n - 2 - s.
    """
    if s < 1:
        raise InvalidInput("singular locus dimension s must be at least 1")
    if l < 2:
        raise InvalidInput("C_l is supported on the singular locus only for l >= 2")
    if slice_config.dim_g != n - 2 - s:
        raise DimensionMismatch(
            f"slice fiber should have dimension {n - 2 - s}, configuration has {slice_config.dim_g}"
        )
    weight = n - l - s
    if weight < 0:
        return 0
    return graded_piece_dim(slice_config, GradedPieceQuery(weight, n - 2 - s))
