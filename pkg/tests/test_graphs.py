import math
from fractions import Fraction

import numpy as np
import pytest

from walkgrammar import graphs
from walkgrammar.graphs import (
    DirectedGraph,
    KrausEntry,
    StochMatrix,
    bernoulli_matrix,
    de_bruijn_graph,
    extension,
    is_unistochastic,
    ks_entropy,
    regular_system_matrix,
    verify_x_relations,
    x_decomposition,
)
from walkgrammar.quantize import hadamard

from helpers import ADJACENT, PAIRS, random_bistochastic


def test_de_bruijn_two_vertices():
    g = de_bruijn_graph(2)
    assert g.vertices == {"P", "Q"}
    assert g.edges == {("P", "P"), ("P", "Q"), ("Q", "P"), ("Q", "Q")}


def test_de_bruijn_is_complete_with_loops():
    assert len(de_bruijn_graph(3).edges) == 9
    for p in (2, 3, 4):
        g = de_bruijn_graph(p)
        assert len(g.vertices) == p
        assert len(g.edges) == p * p
        assert all((v, v) in g.edges for v in g.vertices)


def test_de_bruijn_rejects_small_p():
    with pytest.raises(ValueError):
        de_bruijn_graph(1)


def test_extension_of_two_letter_de_bruijn_is_the_letter_graph():
    ext = extension(de_bruijn_graph(2))
    to_letter = {f"{PAIRS[l][0]}|{PAIRS[l][1]}": l for l in PAIRS}
    assert set(to_letter) == ext.vertices
    relabeled = {(to_letter[u], to_letter[v]) for u, v in ext.edges}
    assert relabeled == {(x, y) for x in ADJACENT for y in ADJACENT[x]}


def test_extension_sizes():
    for p in (2, 3, 4):
        ext = extension(de_bruijn_graph(p))
        assert len(ext.vertices) == p**2
        assert len(ext.edges) == p**3


def test_extension_fixed_points():
    loop = DirectedGraph.build(["v"], [("v", "v")])
    ext = extension(loop)
    assert len(ext.vertices) == 1 and len(ext.edges) == 1

    triangle = DirectedGraph.build("xyz", [("x", "y"), ("y", "z"), ("z", "x")])
    ext = extension(triangle)
    assert len(ext.vertices) == 3
    # Hand enumeration: the three edges chain cyclically and nothing else.
    assert ext.edges == {("x|y", "y|z"), ("y|z", "z|x"), ("z|x", "x|y")}


def test_bernoulli_matrix():
    b = bernoulli_matrix(2)
    assert b.rows == ((Fraction(1, 2),) * 2,) * 2
    assert b.is_bistochastic
    assert all(sum(row) == 1 for row in bernoulli_matrix(3).rows)
    with pytest.raises(ValueError):
        bernoulli_matrix(1)


def test_stoch_matrix_validation():
    with pytest.raises(ValueError, match="row"):
        StochMatrix.from_rows([[1, 1], [0, 1]])
    with pytest.raises(ValueError, match="square"):
        StochMatrix.from_rows([[1, 0]])
    with pytest.raises(TypeError):
        StochMatrix.from_rows([[0.5, 0.5], [0.5, 0.5]])


def test_ks_entropy_zero_iff_deterministic():
    assert ks_entropy(regular_system_matrix()) == 0.0
    assert ks_entropy(StochMatrix.from_rows([[1, 0], [0, 1]])) == 0.0


def test_ks_entropy_of_uniform_matrices():
    # Oracle: -sum_i (1/n) sum_j (1/n) log(1/n) = log n.
    assert ks_entropy(bernoulli_matrix(2)) == pytest.approx(math.log(2), abs=1e-12)
    for n in range(2, 9):
        assert ks_entropy(bernoulli_matrix(n)) == pytest.approx(math.log(n), abs=1e-12)


def test_ks_entropy_rejects_non_bistochastic():
    b = StochMatrix.from_rows([[1, 0], [Fraction(1, 2), Fraction(1, 2)]])
    assert not b.is_bistochastic
    with pytest.raises(ValueError):
        ks_entropy(b)


def test_x_decomposition_of_uniform_matrix():
    half = Fraction(1, 2)
    x1, x2 = x_decomposition(bernoulli_matrix(2))
    assert x1.matrix == ((half, half), (0, 0)) and x1.row == 0
    assert x2.matrix == ((0, 0), (half, half)) and x2.row == 1
    # X1 X2 = B_12 X2 with the product read in application order (X1 first).
    product = graphs._mat_mul_exact(x2.matrix, x1.matrix)
    assert product == tuple(tuple(half * v for v in row) for row in x2.matrix)


def test_x_decomposition_sums_to_b_on_random_matrices():
    rng = np.random.default_rng(5)
    for dim in range(2, 7):
        for _ in range(4):
            b = random_bistochastic(rng, dim)
            entries = x_decomposition(b)
            for i in range(dim):
                for j in range(dim):
                    assert sum(e.matrix[i][j] for e in entries) == b.rows[i][j]


def test_x_relations_on_uniform_and_identity():
    for n in range(2, 9):
        assert verify_x_relations(bernoulli_matrix(n))
    assert verify_x_relations(StochMatrix.from_rows([[1, 0], [0, 1]]))


def test_x_relations_report_failures_on_permutation():
    # The row-product relation needs identical rows; the staircase
    # permutation is a counterexample and must be reported, not hidden.
    report = verify_x_relations(regular_system_matrix())
    assert not report.ok
    assert report.failures


def test_kraus_entry_confines_nonzero_to_row():
    with pytest.raises(ValueError):
        KrausEntry(((1, 0), (1, 0)), 0)


def test_is_unistochastic_witness():
    b2 = bernoulli_matrix(2)
    assert is_unistochastic(b2, hadamard())
    assert not is_unistochastic(b2, np.eye(2))
    with pytest.raises(ValueError):
        is_unistochastic(b2, np.eye(3))


def test_dot_export():
    dot = de_bruijn_graph(2).to_dot()
    assert dot.startswith("digraph G {")
    assert '"P" -> "Q";' in dot
    assert dot == de_bruijn_graph(2).to_dot()


def test_csv_uses_exact_fraction_strings():
    assert bernoulli_matrix(3).to_csv() == "1/3,1/3,1/3\n1/3,1/3,1/3\n1/3,1/3,1/3\n"
    assert regular_system_matrix().to_csv() == "0,0,1\n1,0,0\n0,1,0\n"
