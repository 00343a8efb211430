"""Dual complex of an SNC variety and its rational Betti numbers.

One k-cell for each connected component of each (k+1)-fold intersection.
Cells may share all their faces (two curves meeting in several points give
parallel edges), so this is a Δ-complex rather than a simplicial complex.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import InvalidInput
from .mhs import SncConfiguration


@dataclass(frozen=True)
class DualComplex:
    # cells[k] lists the ids of the k-cells
    cells: tuple[tuple[str, ...], ...]
    # boundaries[k - 1] is the integer matrix of ∂_k: rows are (k-1)-cells, columns k-cells
    boundaries: tuple[tuple[tuple[int, ...], ...], ...]
    labels: tuple[tuple[tuple[str, ...], ...], ...] = ()

    @property
    def dim(self) -> int:
        return len(self.cells) - 1

    def boundary(self, k: int) -> tuple[tuple[int, ...], ...]:
        return self.boundaries[k - 1]

    def to_dot(self) -> str:
        """Graphviz rendering of the 1-skeleton."""
        lines = ["graph dual_complex {"]
        for v in self.cells[0] if self.cells else ():
            lines.append(f'  "{v}";')
        if len(self.cells) > 1:
            d1 = self.boundaries[0]
            for j, e in enumerate(self.cells[1]):
                ends = [self.cells[0][i] for i in range(len(self.cells[0])) if d1[i][j] != 0]
                if len(ends) == 2:
                    lines.append(f'  "{ends[0]}" -- "{ends[1]}" [label="{e}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_dual_complex(config: SncConfiguration) -> DualComplex:
    config.require_valid()
    levels = config.levels
    cells = tuple(tuple(s.id for s in level) for level in levels)
    labels = tuple(tuple(tuple(s.subset) for s in level) for level in levels)
    boundaries = []
    for k in range(1, len(levels)):
        index = {cid: i for i, cid in enumerate(cells[k - 1])}
        D = [[0] * len(cells[k]) for _ in cells[k - 1]]
        for j, s in enumerate(levels[k]):
            faces = config.parents(s)
            for i, c in enumerate(config.sorted_subset(s.subset)):
                # face opposite the i-th vertex (0-based) carries sign (-1)^i
                D[index[faces[c]]][j] += (-1) ** i
        boundaries.append(tuple(tuple(row) for row in D))
    dc = DualComplex(cells, tuple(boundaries), labels)
    for k in range(2, len(cells)):
        prod = linalg.matmul(dc.boundary(k - 1), dc.boundary(k), len(cells[k - 1]), len(cells[k]))
        assert linalg.is_zero(prod), f"boundary of boundary nonzero in degree {k}"
    return dc


def _ranks(dc: DualComplex) -> list[int]:
    # ranks[k] = rank ∂_k, with ∂_0 = 0 and ∂_{dim+1} = 0
    ranks = [0]
    for k in range(1, len(dc.cells)):
        ranks.append(linalg.rank_integer(dc.boundary(k)) if dc.cells[k] and dc.cells[k - 1] else 0)
    ranks.append(0)
    return ranks


def betti_numbers(dc: DualComplex) -> list[int]:
    ranks = _ranks(dc)
    return [len(dc.cells[k]) - ranks[k] - ranks[k + 1] for k in range(len(dc.cells))]


def euler_characteristic(dc: DualComplex) -> int:
    return sum((-1) ** k * len(c) for k, c in enumerate(dc.cells))


def require_graph(dc: DualComplex) -> None:
    if dc.dim > 1:
        raise InvalidInput(f"expected a graph, got a {dc.dim}-dimensional dual complex")
