import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raq.combinatorics import SimpleGraph
from raq.verify import perturb, random_graph
from raq.words import (
    Z,
    Z2,
    WordError,
    abelianize,
    conjugate,
    equals,
    format_word,
    generator,
    identity,
    invert,
    multiply,
    normalize,
    parse_word,
    tits_eval,
    tits_word,
)

PATH = SimpleGraph.path(3)


def eye(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def test_path_examples():
    assert normalize([1, 2, 1], PATH).letters() == [2]
    assert normalize([1, 3, 1], PATH).letters() == [1, 3, 1]
    assert normalize([1, 1], PATH).is_identity()
    assert tits_word(PATH, [1, 2, 1]) == tits_word(PATH, [2])
    assert tits_word(PATH, [1, 3, 1]) != tits_word(PATH, [3])


def test_tits_generators_are_involutions():
    g = SimpleGraph.cycle(5)
    assert tits_eval(identity(g)) == eye(5)
    for s in g.vertices:
        assert tits_word(g, [s, s]) == eye(5)
        assert tits_word(g, [s]) != eye(5)


def test_tits_rejects_artin_words():
    with pytest.raises(WordError):
        tits_eval(normalize([(1, 2)], PATH, Z))


def test_commuting_block_order_is_canonical():
    g = SimpleGraph.complete(3)
    assert normalize([3, 1, 2], g).letters() == [1, 2, 3]
    assert normalize([(3, 2), (1, -1)], g, Z).syllables == ((1, -1), (3, 2))


def test_artin_exponents_merge_across_commuting_letters():
    w = normalize([(1, 2), (3, 1), (1, -2)], PATH, Z)
    assert w.syllables == ((1, 2), (3, 1), (1, -2))
    w = normalize([(1, 2), (2, 1), (1, -2)], PATH, Z)
    assert w.syllables == ((2, 1),)
    assert abelianize(normalize([(2, 3)], PATH, Z)) == (0, 3, 0)


def test_abelianize_mod_two():
    assert abelianize(normalize([1, 2, 1], PATH)) == (0, 1, 0)


@pytest.mark.parametrize("bad", [[0], [4], [(1, 0)]])
def test_bad_syllables(bad):
    with pytest.raises(WordError):
        normalize(bad, PATH)


def test_mixed_groups_rejected():
    with pytest.raises(WordError):
        multiply(generator(PATH, 1), generator(SimpleGraph.path(4), 1))
    with pytest.raises(WordError):
        multiply(generator(PATH, 1), generator(PATH, 1, Z))


def test_parse_and_format():
    assert parse_word("a1^2 2 3^-1", PATH, Z).syllables == ((1, 2), (2, 1), (3, -1))
    assert str(parse_word("1 2 1", PATH)) == "2"
    assert format_word(()) == "1"
    for bad in ("1^0", "x", "1^", "12a"):
        with pytest.raises(WordError):
            parse_word(bad, PATH)


@pytest.mark.parametrize("g", [SimpleGraph.cycle(4), SimpleGraph.path(5), SimpleGraph.complete(4)])
def test_relations_collapse(g):
    for s, t in g.sorted_edges():
        assert normalize([s, t, s, t], g).is_identity()
        assert normalize([(s, 1), (t, 1), (s, -1), (t, -1)], g, Z).is_identity()


@st.composite
def graph_and_words(draw, coeff=Z2, count=3):
    n = draw(st.integers(1, 5))
    g = random_graph(random.Random(draw(st.integers(0, 10 ** 6))), n)
    if coeff == Z2:
        syl = st.integers(1, n)
    else:
        syl = st.tuples(st.integers(1, n), st.integers(-3, 3).filter(bool))
    words = [draw(st.lists(syl, max_size=10)) for _ in range(count)]
    return g, words


@given(graph_and_words())
@settings(max_examples=100, deadline=None)
def test_group_laws_against_tits(data):
    g, (a, b, c) = data
    x, y, z = (normalize(w, g) for w in (a, b, c))
    assert multiply(x, invert(x)).is_identity()
    assert equals(multiply(identity(g), y), y)
    assert equals(multiply(multiply(x, y), z), multiply(x, multiply(y, z)))
    assert tits_eval(multiply(x, y)) == tits_word(g, a + b)
    assert tits_eval(x) == tits_word(g, a)


@given(graph_and_words(coeff=Z))
@settings(max_examples=100, deadline=None)
def test_artin_group_laws(data):
    g, (a, b, c) = data
    x, y, z = (normalize(w, g, Z) for w in (a, b, c))
    assert multiply(x, invert(x)).is_identity()
    assert equals(multiply(multiply(x, y), z), multiply(x, multiply(y, z)))
    assert abelianize(multiply(x, y)) == tuple(p + q for p, q in zip(abelianize(x), abelianize(y)))
    assert equals(conjugate(x, y), multiply(multiply(invert(y), x), y))
    assert normalize(x.syllables, g, Z) == x


@given(graph_and_words(count=1), st.integers(0, 10 ** 6))
@settings(max_examples=100, deadline=None)
def test_normal_form_independent_of_representative(data, seed):
    g, (a,) = data
    b = perturb(random.Random(seed), g, a, moves=6)
    na, nb = normalize(a, g), normalize(b, g)
    assert na == nb
    assert len(na) <= len(a)


@given(graph_and_words(count=2))
@settings(max_examples=200, deadline=None)
def test_equality_matches_tits(data):
    g, (a, b) = data
    assert (normalize(a, g) == normalize(b, g)) == (tits_word(g, a) == tits_word(g, b))
