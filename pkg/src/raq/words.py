"""Word arithmetic in graph products of Z/2 and of Z.

With coefficient ``Z2`` the graph product over Gamma is the right-angled
Coxeter group W; with ``Z`` it is the right-angled Artin group A_W.  Elements
are kept in a canonical shuffle normal form, so equality is identity of
normal forms.

``tits_eval`` is an independent check: the Tits reflection representation of
W is faithful, so two Coxeter words are equal iff their integer matrices are.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .combinatorics import SimpleGraph

Z2 = "Z2"
Z = "Z"

Syllable = Tuple[int, int]


class WordError(ValueError):
    code = "E_WORD"


def _check_syllables(word: Iterable, graph: SimpleGraph, coeff: str) -> List[Syllable]:
    out = []
    for syl in word:
        gen, exp = (syl, 1) if isinstance(syl, int) else syl
        if not 1 <= gen <= graph.n:
            raise WordError(f"generator {gen} outside 1..{graph.n}")
        if exp == 0:
            raise WordError(f"zero exponent on generator {gen}")
        if coeff == Z2:
            if exp % 2 == 0:
                continue
            exp = 1
        out.append((gen, exp))
    return out


def _reduce(word: Sequence[Syllable], graph: SimpleGraph, coeff: str) -> List[Syllable]:
    """Left-to-right reduction: each syllable merges with the nearest equal
    generator it can be shuffled back to, else is appended."""
    adj = graph.adjacency
    out: List[Syllable] = []
    for gen, exp in word:
        nbrs = adj[gen]
        p = len(out) - 1
        while p >= 0:
            g = out[p][0]
            if g == gen:
                break
            if g not in nbrs:
                p = -1
                break
            p -= 1
        if p < 0:
            out.append((gen, exp))
            continue
        total = 0 if coeff == Z2 else out[p][1] + exp
        if total == 0:
            del out[p]
        else:
            out[p] = (gen, total)
    return out


def _canonical_order(word: List[Syllable], graph: SimpleGraph) -> Tuple[Syllable, ...]:
    # repeatedly extract the lowest-generator syllable that shuffles to the front
    blockers = graph.blockers
    full = (1 << (graph.n + 1)) - 2
    rest = list(word)
    out = []
    while rest:
        best = -1
        best_gen = graph.n + 1
        blocked = 0
        for k, syl in enumerate(rest):
            gen = syl[0]
            if gen < best_gen and not blocked >> gen & 1:
                best, best_gen = k, gen
            # later syllables pass this one only if they commute with it
            blocked |= blockers[gen]
            if blocked == full:
                break
        out.append(rest.pop(best))
    return tuple(out)


@dataclass(frozen=True)
class NormalForm:
    coeff: str
    graph: SimpleGraph
    syllables: Tuple[Syllable, ...] = ()

    def __len__(self) -> int:
        return len(self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        return multiply(self, other)

    def __invert__(self) -> "NormalForm":
        return invert(self)

    def __pow__(self, k: int) -> "NormalForm":
        base = self if k >= 0 else invert(self)
        out = identity(self.graph, self.coeff)
        for _ in range(abs(k)):
            out = multiply(out, base)
        return out

    def letters(self) -> List[int]:
        """Generators as a flat list (Z2 mode only)."""
        return [g for g, _ in self.syllables]

    def __str__(self) -> str:
        return format_word(self.syllables, self.coeff)


def normalize(word: Iterable, graph: SimpleGraph, coeff: str = Z2) -> NormalForm:
    """Canonical form of a word given as generators or ``(gen, exp)`` pairs."""
    if coeff not in (Z2, Z):
        raise WordError(f"unknown coefficient {coeff!r}")
    return _normal_form(_check_syllables(word, graph, coeff), graph, coeff)


def _normal_form(syllables: Sequence[Syllable], graph: SimpleGraph, coeff: str) -> NormalForm:
    # syllables must already be valid for (graph, coeff)
    return NormalForm(coeff, graph, _canonical_order(_reduce(syllables, graph, coeff), graph))


def identity(graph: SimpleGraph, coeff: str = Z2) -> NormalForm:
    return NormalForm(coeff, graph, ())


def generator(graph: SimpleGraph, s: int, coeff: str = Z2) -> NormalForm:
    return normalize([(s, 1)], graph, coeff)


def _same_group(a: NormalForm, b: NormalForm) -> None:
    if a.coeff != b.coeff or (a.graph is not b.graph and a.graph != b.graph):
        raise WordError("operands live in different groups")


def multiply(a: NormalForm, b: NormalForm) -> NormalForm:
    _same_group(a, b)
    return _normal_form(a.syllables + b.syllables, a.graph, a.coeff)


def _inverse_syllables(a: NormalForm) -> List[Syllable]:
    if a.coeff == Z2:
        return a.syllables[::-1]
    return [(g, -e) for g, e in reversed(a.syllables)]


def invert(a: NormalForm) -> NormalForm:
    return _normal_form(_inverse_syllables(a), a.graph, a.coeff)


def equals(a: NormalForm, b: NormalForm) -> bool:
    _same_group(a, b)
    return a.syllables == b.syllables


def conjugate(x: NormalForm, w: NormalForm) -> NormalForm:
    """``w^-1 x w``."""
    _same_group(x, w)
    return _normal_form(tuple(_inverse_syllables(w)) + x.syllables + w.syllables, x.graph, x.coeff)


def abelianize(a: NormalForm) -> Tuple[int, ...]:
    """Exponent sum per generator, reduced mod 2 for coefficient Z2."""
    v = [0] * a.graph.n
    for g, e in a.syllables:
        v[g - 1] += e
    if a.coeff == Z2:
        v = [x % 2 for x in v]
    return tuple(v)


_TOKEN = re.compile(r"^[a-zA-Z]?(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str, graph: SimpleGraph, coeff: str = Z2) -> NormalForm:
    """Parse whitespace-separated tokens ``g`` or ``g^k`` (1-based generators).

    An optional letter prefix is accepted, so ``a1^2`` reads as ``1^2``.
    """
    return normalize(parse_syllables(text), graph, coeff)


def parse_syllables(text: str) -> List[Syllable]:
    out = []
    for tok in text.split():
        match = _TOKEN.match(tok)
        if not match:
            raise WordError(f"bad word token {tok!r}")
        exp = int(match.group(2)) if match.group(2) is not None else 1
        if exp == 0:
            raise WordError(f"zero exponent in token {tok!r}")
        out.append((int(match.group(1)), exp))
    return out


def format_word(syllables: Sequence[Syllable], coeff: str = Z2) -> str:
    if not syllables:
        return "1"
    return " ".join(str(g) if e == 1 else f"{g}^{e}" for g, e in syllables)


def tits_form(graph: SimpleGraph) -> List[List[int]]:
    """Bilinear form of the right-angled system: 1, 0 on edges, -1 otherwise."""
    n = graph.n
    return [[1 if i == j else (0 if graph.adjacent(i + 1, j + 1) else -1) for j in range(n)] for i in range(n)]


def tits_word(graph: SimpleGraph, letters: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """Exact Tits matrix of the word ``s_1 s_2 ... s_k`` (no normalization).

    Generator ``s`` acts by ``v -> v - 2 B(v, e_s) e_s``; as a left factor it
    only rewrites row ``s``.  Python integers make overflow impossible.
    """
    form = tits_form(graph)
    n = graph.n
    mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for s in reversed(letters):
        if not 1 <= s <= n:
            raise WordError(f"generator {s} outside 1..{n}")
        col = [form[t][s - 1] for t in range(n)]
        new_row = [
            mat[s - 1][j] - 2 * sum(col[t] * mat[t][j] for t in range(n) if col[t])
            for j in range(n)
        ]
        mat[s - 1] = new_row
    return tuple(tuple(row) for row in mat)


def tits_eval(a: NormalForm) -> Tuple[Tuple[int, ...], ...]:
    if a.coeff != Z2:
        raise WordError("the Tits representation is only available for Coxeter words")
    return tits_word(a.graph, a.letters())
