import pytest

from raq.combinatorics import (
    SimpleGraph,
    SimplicialComplex,
    all_graphs,
    clique_count_by_size,
    flag_complex,
    full_subcomplex,
)
from raq.homology import (
    CellCapExceeded,
    ChainComplexError,
    _pair,
    bbcg_check,
    betti,
    classifying_space_betti,
    kunneth_betti,
    model_circle_pair,
    model_mobius_pair,
    model_rp_pair,
    polyhedral_product_complex,
    smash_polyhedral_product_complex,
    splitting_report,
)
from raq.gf2 import Echelon

SMALL = [g for n in range(1, 4) for g in all_graphs(n)]


def pad(b, n):
    return (list(b) + [0] * n)[:n]


def disjoint_simplex_and_point(size):
    """Δ on the first ``size - 1`` vertices together with an isolated last vertex."""
    return SimplicialComplex(size, frozenset([tuple(range(1, size))]))


def test_circle_pair():
    c = model_circle_pair().as_complex()
    assert betti(c) == [1, 1]
    assert c.euler_characteristic() == 0


@pytest.mark.parametrize("kind", ["cw6", "simplicial20"])
def test_mobius_band(kind):
    pair = model_mobius_pair(kind)
    c = pair.as_complex()
    assert betti(c) == [1, 1, 0]
    assert c.euler_characteristic() == 0
    boundary_cycle = 0
    for k, cell in enumerate(c.cells[1]):
        if pair.cells[cell[0]].in_a:
            boundary_cycle ^= 1 << k
    # the boundary circle bounds mod 2
    assert Echelon(c.boundary[2]).contains(boundary_cycle)


def test_projective_space():
    assert betti(model_rp_pair(3).as_complex()) == [1, 1, 1, 1]
    assert betti(model_rp_pair(0).as_complex()) == [1]


def test_rp_truncation_is_stable():
    g = SimpleGraph.path(3)
    k = flag_complex(g)
    b4 = betti(polyhedral_product_complex(k, model_rp_pair(4)))
    b5 = betti(polyhedral_product_complex(k, model_rp_pair(5)))
    assert b4[:4] == b5[:4]
    assert classifying_space_betti(SimpleGraph(1), "BW", 4) == [1, 1, 1, 1, 1]


@pytest.mark.parametrize("g", SMALL + [SimpleGraph.cycle(4), SimpleGraph.path(4), SimpleGraph.complete(4)])
def test_circle_polyhedral_product_counts_cliques(g):
    c = polyhedral_product_complex(flag_complex(g), model_circle_pair())
    assert pad(betti(c), g.n + 1) == clique_count_by_size(g)


@pytest.mark.parametrize("pair", [model_circle_pair(), model_mobius_pair(), model_rp_pair(2)], ids=lambda p: p.name)
@pytest.mark.parametrize("m", [1, 2, 3])
def test_full_simplex_gives_product(pair, m):
    c = polyhedral_product_complex(SimplicialComplex.simplex(m), pair)
    assert betti(c) == kunneth_betti(pair, m)


def test_single_vertex_gives_the_space():
    c = polyhedral_product_complex(SimplicialComplex(1), model_mobius_pair())
    assert betti(c) == [1, 1, 0]


@pytest.mark.parametrize("g", SMALL, ids=str)
def test_models_agree(g):
    k = flag_complex(g)
    a = betti(polyhedral_product_complex(k, model_mobius_pair("cw6")))
    b = betti(polyhedral_product_complex(k, model_mobius_pair("simplicial20")))
    assert pad(a, 8) == pad(b, 8)


@pytest.mark.parametrize("g", [g for g in all_graphs(4)][::5], ids=str)
def test_full_subcomplex_is_a_retract(g):
    k = flag_complex(g)
    top = pad(betti(polyhedral_product_complex(k, model_mobius_pair())), 9)
    for sub in ([1, 2], [2, 3, 4], [1, 3]):
        small = pad(betti(polyhedral_product_complex(full_subcomplex(k, sub), model_mobius_pair())), 9)
        assert all(x <= y for x, y in zip(small, top))


@pytest.mark.parametrize("m", [3, 4, 5])
def test_top_degree_for_complete_plus_point(m):
    b = classifying_space_betti(SimpleGraph.complete_plus_isolated(m), "BAd", m)
    assert b[m] == m + 1


def test_two_isolated_vertices_degree_two():
    # x_2^2 is a d_2-boundary here, so only two classes survive in degree 2
    assert classifying_space_betti(SimpleGraph.edgeless(2), "BAd", 3) == [1, 2, 2, 1]


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_smash_of_simplex_is_a_sphere(size):
    c = smash_polyhedral_product_complex(SimplicialComplex.simplex(size), model_mobius_pair())
    assert pad(betti(c), size + 2) == [0] * size + [1, 0]


@pytest.mark.parametrize("size", [2, 3, 4])
def test_smash_of_simplex_plus_point(size):
    c = smash_polyhedral_product_complex(disjoint_simplex_and_point(size), model_mobius_pair())
    expected = [0] * (size + 2)
    expected[size], expected[size + 1] = 2, 1
    assert pad(betti(c), size + 2) == expected


def test_smash_of_disconnected_circles_vanishes():
    c = smash_polyhedral_product_complex(SimplicialComplex(2), model_circle_pair())
    assert not any(betti(c))


def test_bbcg_examples():
    rep = bbcg_check(SimplicialComplex(2), model_circle_pair(), 2)
    assert [row[1] for row in rep.rows] == [0, 2, 0] and rep.passed
    assert betti(polyhedral_product_complex(SimplicialComplex.simplex(2), model_circle_pair())) == [1, 2, 1]
    assert bbcg_check(SimplicialComplex.simplex(2), model_circle_pair(), 2).passed
    rep = bbcg_check(disjoint_simplex_and_point(3), model_mobius_pair(), 4)
    assert rep.rows[3][1] == 4 and rep.passed


@pytest.mark.parametrize("g", [g for g in all_graphs(4)][::3], ids=str)
def test_ad_dominates_artin(g):
    assert splitting_report(g, 5).passed


def test_cell_cap():
    with pytest.raises(CellCapExceeded):
        polyhedral_product_complex(SimplicialComplex.simplex(4), model_mobius_pair(), cell_cap=100)


@pytest.mark.parametrize("layout,base", [
    ([("p", 0, True, ()), ("e", 2, False, ("p",))], "p"),
    ([("p", 0, True, ()), ("q", 0, False, ()), ("e", 1, True, ("p", "q"))], "p"),
    ([("p", 0, False, ()), ("e", 1, False, ("p", "p"))], "p"),
    ([("p", 0, True, ()), ("q", 0, True, ()), ("e", 1, False, ("p", "q")),
      ("f", 2, False, ("e",))], "p"),
])
def test_bad_pairs_rejected(layout, base):
    with pytest.raises(ChainComplexError):
        _pair("bad", layout, base)


def test_unknown_model():
    with pytest.raises(ValueError):
        model_mobius_pair("klein")
