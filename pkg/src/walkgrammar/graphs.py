"""Directed graphs, De Bruijn constructions and exact stochastic matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

WITNESS_TOL = 1e-12
EXT_SEP = "|"


@dataclass(frozen=True)
class DirectedGraph:
    vertices: frozenset[str]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self):
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u!r}, {v!r}) leaves the vertex set")

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> "DirectedGraph":
        return cls(frozenset(vertices), frozenset(tuple(e) for e in edges))

    def out_neighbors(self, v: str) -> frozenset[str]:
        return frozenset(w for (u, w) in self.edges if u == v)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        for v in sorted(self.vertices):
            lines.append(f'    "{v}";')
        for u, v in sorted(self.edges):
            lines.append(f'    "{u}" -> "{v}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def de_bruijn_labels(p: int) -> tuple[str, ...]:
    if p < 2:
        raise ValueError(f"need p >= 2, got {p}")
    if p == 2:
        return ("P", "Q")
    return tuple(str(i) for i in range(1, p + 1))


def de_bruijn_graph(p: int, labels: Sequence[str] | None = None) -> DirectedGraph:
    """Complete directed graph on p vertices with a loop at each vertex."""
    if labels is None:
        labels = de_bruijn_labels(p)
    elif len(labels) != p:
        raise ValueError(f"expected {p} labels, got {len(labels)}")
    elif p < 2:
        raise ValueError(f"need p >= 2, got {p}")
    return DirectedGraph.build(labels, [(u, v) for u in labels for v in labels])


def extension(g: DirectedGraph) -> DirectedGraph:
    """Line graph: one vertex u|v per edge, joined where head meets tail."""
    if not g.vertices:
        raise ValueError("cannot extend an empty graph")
    names = {edge: f"{edge[0]}{EXT_SEP}{edge[1]}" for edge in g.edges}
    new_edges = [
        (names[(u, v)], names[(x, y)])
        for (u, v) in g.edges
        for (x, y) in g.edges
        if v == x
    ]
    return DirectedGraph.build(names.values(), new_edges)


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("stochastic matrices are exact; pass Fraction, int or 'p/q'")
    return Fraction(x)


@dataclass(frozen=True)
class StochMatrix:
    """Square matrix of nonnegative rationals with unit row sums."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        m = len(self.rows)
        for row in self.rows:
            if len(row) != m:
                raise ValueError("matrix must be square")
            if any(x < 0 for x in row):
                raise ValueError("entries must be nonnegative")
            if sum(row) != 1:
                raise ValueError("every row must sum to 1")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "StochMatrix":
        return cls(tuple(tuple(_as_fraction(x) for x in row) for row in rows))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @property
    def is_bistochastic(self) -> bool:
        m = self.dimension
        return all(sum(self.rows[i][j] for i in range(m)) == 1 for j in range(m))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def dense(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.rows])

    def to_csv(self) -> str:
        lines = [",".join(_fraction_str(x) for x in row) for row in self.rows]
        return "\n".join(lines) + "\n"


def _fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def bernoulli_matrix(n: int) -> StochMatrix:
    """The n-by-n matrix with every entry 1/n (uniform full shift)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    row = tuple(Fraction(1, n) for _ in range(n))
    return StochMatrix(tuple(row for _ in range(n)))


def regular_system_matrix() -> StochMatrix:
    """3x3 permutation fixture of the zero-entropy staircase map."""
    return StochMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


def ks_entropy(b: StochMatrix) -> float:
    """Kolmogorov-Sinai entropy -sum_i p_i sum_j B_ij log B_ij in nats.

    Restricted to bistochastic matrices, where the stationary vector is
    uniform.  Exactly 0.0 iff every entry is 0 or 1.
    """
    if not b.is_bistochastic:
        raise ValueError("ks_entropy needs a bistochastic matrix")
    if all(x in (0, 1) for row in b.rows for x in row):
        return 0.0
    m = b.dimension
    return -sum(float(x) * math.log(float(x)) for row in b.rows for x in row if x) / m


@dataclass(frozen=True)
class KrausEntry:
    """A matrix whose nonzero entries sit in a single row.

    Entries are exact rationals for classical row decompositions and complex
    floats for quantised ones.
    """

    matrix: tuple[tuple, ...]
    row: int

    def __post_init__(self):
        for i, r in enumerate(self.matrix):
            if i != self.row and any(x != 0 for x in r):
                raise ValueError(f"nonzero entries outside row {self.row}")

    def dense(self) -> np.ndarray:
        return np.array([[complex(x) for x in r] for r in self.matrix])


def x_decomposition(b: StochMatrix) -> list[KrausEntry]:
    """Split B into row matrices X_h keeping row h and zeroing the rest.

    The partition property sum_h X_h = B is verified exactly before
    returning; the product relations live in `verify_x_relations`.
    """
    m = b.dimension
    zero_row = tuple(Fraction(0) for _ in range(m))
    entries = []
    for h in range(m):
        matrix = tuple(b.rows[i] if i == h else zero_row for i in range(m))
        entries.append(KrausEntry(matrix, h))
    for i in range(m):
        for j in range(m):
            assert sum(e.matrix[i][j] for e in entries) == b.rows[i][j]
    return entries


def _mat_mul_exact(a, b):
    m = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(m)) for j in range(m)) for i in range(m)
    )


@dataclass(frozen=True)
class XRelationsReport:
    ok: bool
    failures: tuple[tuple[int, int], ...]

    def __bool__(self) -> bool:
        return self.ok


def verify_x_relations(b: StochMatrix) -> XRelationsReport:
    """Check X_h X_l = B_hl X_l exactly, words read in application order.

    X_h X_l means X_h acts first, i.e. the matrix product X_l . X_h.  The
    relation holds whenever the rows of B coincide (the 1/n family); on a
    general bistochastic matrix it can fail, and the failing index pairs
    are reported.
    """
    entries = x_decomposition(b)
    m = b.dimension
    failures = []
    for h in range(m):
        for l in range(m):
            lhs = _mat_mul_exact(entries[l].matrix, entries[h].matrix)
            coeff = b.rows[h][l]
            rhs = tuple(tuple(coeff * x for x in row) for row in entries[l].matrix)
            if lhs != rhs:
                failures.append((h, l))
    return XRelationsReport(not failures, tuple(failures))


def is_unistochastic(b: StochMatrix, u: np.ndarray, tol: float = WITNESS_TOL) -> bool:
    """Witness check: does B_ij = |U_ij|^2 hold within tol for this U?"""
    u = np.asarray(u, dtype=complex)
    if u.shape != (b.dimension, b.dimension):
        raise ValueError("witness has the wrong shape")
    target = np.array([[float(x) for x in row] for row in b.rows])
    return bool(np.max(np.abs(np.abs(u) ** 2 - target)) <= tol)
