"""Randomised and exhaustive consistency suites, one Report each."""

from __future__ import annotations

import random
from typing import Dict, List

from .combinatorics import SimpleGraph, flag_complex
from .homology import (
    DEFAULT_CELL_CAP,
    bbcg_check,
    model_circle_pair,
    model_mobius_pair,
    splitting_report,
)
from .quandle import (
    AdElement,
    Phi,
    Reflection,
    ad_ab,
    ad_equals,
    ad_identity,
    ad_invert,
    ad_multiply,
    ad_product,
    e,
    enumerate_reflections,
    phi,
    pi,
    quandle_op,
    quandle_op_inverse,
)
from .report import Report
from .spectral import E3Page, collapse_crosscheck, generation_check, relations_check
from .words import Z, Z2, identity, normalize, tits_word

SUITES = ("quandle", "pullback", "factorization", "bbcg", "splitting", "collapse", "generation")


def random_letters(rng: random.Random, m: int, max_length: int) -> List[int]:
    return [rng.randint(1, m) for _ in range(rng.randint(0, max_length))]


def random_artin_word(rng: random.Random, m: int, max_length: int, max_exp: int = 3):
    out = []
    for _ in range(rng.randint(0, max_length)):
        k = rng.randint(1, max_exp) * rng.choice((1, -1))
        out.append((rng.randint(1, m), k))
    return out


def perturb(rng: random.Random, g: SimpleGraph, letters: List[int], moves: int = 4) -> List[int]:
    """Apply random defining-relation moves to a Coxeter word, keeping its value."""
    w = list(letters)
    edges = g.sorted_edges()
    for _ in range(moves):
        move = rng.randrange(3)
        pos = rng.randint(0, len(w))
        if move == 0:
            s = rng.randint(1, g.n)
            w[pos:pos] = [s, s]
        elif move == 1 and edges:
            s, t = rng.choice(edges)
            w[pos:pos] = [s, t, s, t]
        elif len(w) >= 2:
            k = rng.randrange(len(w) - 1)
            if w[k] != w[k + 1] and g.adjacent(w[k], w[k + 1]):
                w[k], w[k + 1] = w[k + 1], w[k]
    return w


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    edges = [frozenset((i, j)) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    return SimpleGraph(n, frozenset(edges))


def word_oracle_suite(g: SimpleGraph, pairs: int, seed: int, max_length: int = 20) -> Report:
    """Normal-form equality against Tits-matrix equality on raw words.

    Half of the pairs are related by relation moves, the rest are independent.
    """
    rng = random.Random(seed)
    rep = Report(f"word problem vs Tits matrices for {g}", ("kind", "pairs", "equal", "disagreements", "status"))
    rep.header.append(f"seed={seed}")
    stats: Dict[str, List[int]] = {"related": [0, 0, 0], "independent": [0, 0, 0]}
    for n in range(pairs):
        a = random_letters(rng, g.n, max_length)
        if n % 2 == 0:
            kind, b = "related", perturb(rng, g, a)[:max_length]
        else:
            kind, b = "independent", random_letters(rng, g.n, max_length)
        nf_equal = normalize(a, g, Z2).syllables == normalize(b, g, Z2).syllables
        matrix_equal = tits_word(g, a) == tits_word(g, b)
        stats[kind][0] += 1
        stats[kind][1] += nf_equal
        stats[kind][2] += nf_equal != matrix_equal
    for kind, (n, eq, bad) in stats.items():
        rep.add(kind, n, eq, bad, bad == 0, ok=bad == 0)
    return rep


def quandle_suite(g: SimpleGraph, max_length: int = 3, max_triples: int = 20000) -> Report:
    """Quandle axioms and the defining relation of Ad(X_W) on a reflection window."""
    refls = enumerate_reflections(g, max_length)
    rep = Report(f"quandle axioms on reflections with conjugator length <= {max_length} for {g}",
                 ("check", "instances", "failures", "status"))
    memo: Dict[tuple, Reflection] = {}

    def op(x: Reflection, y: Reflection) -> Reflection:
        key = (x.element.syllables, y.element.syllables)
        if key not in memo:
            memo[key] = quandle_op(x, y)
        return memo[key]

    idem = sum(op(x, x) != x for x in refls)
    rep.add("x*x=x", len(refls), idem, idem == 0, ok=idem == 0)
    inv = sum(quandle_op_inverse(op(x, y), y) != x or op(quandle_op_inverse(x, y), y) != x
              for x in refls for y in refls)
    rep.add("right translation bijective", len(refls) ** 2, inv, inv == 0, ok=inv == 0)
    dist = 0
    n_dist = 0
    # all triples is cubic in the window size; above max_triples use a fixed subsample
    n = len(refls)
    if n ** 3 <= max_triples:
        triples = ((x, y, z) for x in refls for y in refls for z in refls)
    else:
        picks = random.Random(0).sample(range(n ** 3), max_triples)
        triples = ((refls[t // (n * n)], refls[t // n % n], refls[t % n]) for t in picks)
    for x, y, z in triples:
        n_dist += 1
        dist += op(op(x, y), z) != op(op(x, z), op(y, z))
    rep.add("(x*y)*z=(x*z)*(y*z)", n_dist, dist, dist == 0, ok=dist == 0)
    gens = [(e(y), ad_invert(e(y))) for y in refls]
    rel = 0
    for x, (ex, _) in zip(refls, gens):
        for y, (ey, ey_inv) in zip(refls, gens):
            rel += not ad_equals(e(op(x, y)), ad_product(ey_inv, ex, ey))
    rep.add("e(x*y)=e(y)^-1 e(x) e(y)", len(refls) ** 2, rel, rel == 0, ok=rel == 0)
    cls = sum(ad_ab(e(x)) != tuple(1 if k == x.class_index else 0 for k in range(g.n)) for x in refls)
    rep.add("ab(e(x)) = class unit", len(refls), cls, cls == 0, ok=cls == 0)
    return rep


def factorization_suite(g: SimpleGraph, samples: int, seed: int, max_length: int = 12) -> Report:
    """pi = phi ∘ Phi, and Phi and pi are homomorphisms, on random Artin words."""
    rng = random.Random(seed)
    rep = Report(f"A_W -> Ad(X_W) -> W factorization for {g}", ("check", "samples", "failures", "status"))
    fact = hom = 0
    for _ in range(samples):
        u = normalize(random_artin_word(rng, g.n, max_length), g, Z)
        v = normalize(random_artin_word(rng, g.n, max_length), g, Z)
        fact += phi(Phi(u)) != pi(u)
        hom += not ad_equals(Phi(u * v), ad_multiply(Phi(u), Phi(v)))
    rep.add("pi = phi . Phi", samples, fact, fact == 0, ok=fact == 0)
    rep.add("Phi(uv) = Phi(u)Phi(v)", samples, hom, hom == 0, ok=hom == 0)
    return rep


def _lift(g: SimpleGraph, w, rng: random.Random) -> AdElement:
    """A product of generators e_s^{+-1} mapping to ``w`` under phi."""
    out = ad_identity(g)
    for s in w.letters():
        f = e(Reflection.conjugate_of(s, identity(g)))
        out = ad_multiply(out, f if rng.random() < 0.5 else ad_invert(f))
    return out


def pullback_suite(g: SimpleGraph, samples: int, seed: int, max_length: int = 12) -> Report:
    """Kernel of phi: every element killed by phi has the form (1, even), and
    every (1, even) is a product of generators killed by phi."""
    rng = random.Random(seed)
    rep = Report(f"pullback model of Ad(X_W) for {g}", ("check", "samples", "failures", "status"))
    bad_kernel = bad_even = bad_ab = 0
    for _ in range(samples):
        a = ad_identity(g)
        for _ in range(rng.randint(0, max_length)):
            x = Reflection.conjugate_of(rng.randint(1, g.n), normalize(random_letters(rng, g.n, 4), g, Z2))
            f = e(x)
            a = ad_multiply(a, f if rng.random() < 0.5 else ad_invert(f))
        # a * lift(phi(a))^-1 is killed by phi
        k = ad_multiply(a, ad_invert(_lift(g, phi(a), rng)))
        bad_kernel += not (phi(k).is_identity() and all(x % 2 == 0 for x in k.v))
        half = [rng.randint(-3, 3) for _ in range(g.n)]
        target = AdElement(identity(g), tuple(2 * h for h in half))
        word = ad_identity(g)
        for s, h in zip(g.vertices, half):
            f = e(Reflection.conjugate_of(s, identity(g)))
            for _ in range(abs(2 * h)):
                word = ad_multiply(word, f if h > 0 else ad_invert(f))
        bad_even += not (ad_equals(word, target) and phi(word).is_identity())
        bad_ab += ad_ab(ad_multiply(a, k)) != tuple(p + q for p, q in zip(a.v, k.v))
    rep.add("phi(a)=1 => a=(1,even)", samples, bad_kernel, bad_kernel == 0, ok=bad_kernel == 0)
    rep.add("(1,even) in ker phi", samples, bad_even, bad_even == 0, ok=bad_even == 0)
    rep.add("ab additive", samples, bad_ab, bad_ab == 0, ok=bad_ab == 0)
    return rep


def run_suite(name: str, g: SimpleGraph, D: int, seed: int, model: str = "cw6",
              samples: int = 1000, cell_cap: int = DEFAULT_CELL_CAP) -> List[Report]:
    if name == "quandle":
        return [quandle_suite(g, 3 if g.n <= 4 else 2)]
    if name == "pullback":
        return [pullback_suite(g, samples, seed)]
    if name == "factorization":
        return [factorization_suite(g, samples, seed)]
    if name == "bbcg":
        k = flag_complex(g)
        return [bbcg_check(k, model_circle_pair(), D, cell_cap), bbcg_check(k, model_mobius_pair(model), D, cell_cap)]
    if name == "splitting":
        return [splitting_report(g, D, model, cell_cap)]
    if name == "collapse":
        return [collapse_crosscheck(g, D, model)]
    if name == "generation":
        page = E3Page(g, D)
        return [generation_check(page), relations_check(page)]
    raise ValueError(f"unknown suite {name!r}")

