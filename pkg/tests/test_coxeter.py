import itertools
import random

import pytest

from oracles import abelianization_order, enumerate_group, generator_classes
from raq.combinatorics import SimpleGraph
from raq.coxeter import (
    INF,
    CoxeterMatrix,
    InvalidCoxeterMatrix,
    abelianization_descriptors,
    build_system,
    dihedral_matrix,
    is_right_angled,
    odd_path,
    parse_matrix,
    symmetric_group_matrix,
)


def small_finite_matrices():
    """Every Coxeter matrix on |S| <= 3 with labels in 2..6 whose group is finite."""
    out = []
    for n in (1, 2, 3):
        pairs = list(itertools.combinations(range(n), 2))
        for labels in itertools.product((2, 3, 4, 5, 6), repeat=len(pairs)):
            rows = [[1] * n for _ in range(n)]
            for (i, j), x in zip(pairs, labels):
                rows[i][j] = rows[j][i] = x
            m = CoxeterMatrix(tuple(map(tuple, rows)))
            elems = enumerate_group(m, cap=200)
            if elems is not None:
                out.append((m, elems))
    return out


FINITE = small_finite_matrices()


def test_finite_family_is_the_expected_list():
    orders = sorted(len(e) for _, e in FINITE)
    # A1, then I2(2..6), then the rank-3 finite types up to relabelling
    assert orders[:6] == [2, 4, 6, 8, 8, 10]
    assert 120 in orders and 48 in orders and 24 in orders


@pytest.mark.parametrize("matrix,elements", FINITE, ids=lambda x: str(getattr(x, "entries", "")))
def test_classes_match_brute_force(matrix, elements):
    sys_ = build_system(matrix)
    assert [list(c) for c in sys_.classes] == generator_classes(matrix, elements)
    assert abelianization_order(elements) == 2 ** sys_.c


@pytest.mark.parametrize("order,c", [(2, 2), (3, 1), (4, 2), (5, 1), (INF, 2)])
def test_dihedral_family(order, c):
    assert build_system(dihedral_matrix(order)).c == c


@pytest.mark.parametrize("n", range(2, 7))
def test_symmetric_groups_have_one_class(n):
    sys_ = build_system(symmetric_group_matrix(n))
    assert sys_.c == 1
    assert abelianization_descriptors(sys_).w_ab == "Z/2"


def test_symmetric_group_matrix_entries():
    assert symmetric_group_matrix(2).entries == ((1,),)
    m3 = symmetric_group_matrix(3)
    assert m3[0, 1] == 3
    assert symmetric_group_matrix(4)[0, 2] == 2
    assert not is_right_angled(m3)


def test_right_angled_systems_have_singleton_classes():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 7)
        g = SimpleGraph(n, frozenset(frozenset(p) for p in itertools.combinations(range(1, n + 1), 2)
                                     if rng.random() < 0.5))
        sys_ = build_system(CoxeterMatrix.from_graph(g))
        assert sys_.right_angled
        assert sys_.c == n
        assert sys_.gamma == g


def test_gamma_keeps_finite_labels():
    m = parse_matrix("3\n1 3 inf\n3 1 4\ninf 4 1\n")
    sys_ = build_system(m)
    assert sys_.gamma.sorted_edges() == [(1, 2), (2, 3)]
    assert [list(c) for c in sys_.classes] == [[0, 1], [2]]
    assert sys_.representatives == (0, 2)
    assert odd_path(sys_, 0, 1) == [0, 1]
    assert odd_path(sys_, 0, 2) is None


def test_descriptors():
    ab = abelianization_descriptors(build_system(dihedral_matrix(4)))
    assert (ab.w_ab, ab.a_ab, ab.ad_ab) == ("(Z/2)^2", "(Z)^2", "(Z)^2")
    ab = abelianization_descriptors(build_system(CoxeterMatrix.from_graph(SimpleGraph.edgeless(3))))
    assert ab.to_json()["c"] == 3


@pytest.mark.parametrize("rows", [
    ((1, 2), (3, 1)),
    ((1, 2), (2, 2)),
    ((1, 1), (1, 1)),
    ((1, 0), (0, 1)),
    ((1, 2.5), (2.5, 1)),
])
def test_invalid_matrices(rows):
    with pytest.raises(InvalidCoxeterMatrix):
        CoxeterMatrix(rows)


def test_parse_errors():
    with pytest.raises(InvalidCoxeterMatrix):
        parse_matrix("2\n1 2 2\n")
    with pytest.raises(InvalidCoxeterMatrix):
        parse_matrix("")
