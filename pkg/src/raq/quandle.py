"""The Coxeter quandle X_W and the adjoint group Ad(X_W) of a right-angled W.

Ad(X_W) is modelled as the pullback of ``W -> (Z/2)^c <- Z^c``: an element is a
pair ``(w, v)`` with ``w`` in W, ``v`` in Z^c and ``ab(w) = v mod 2``.  For a
right-angled system c = m and the class map is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Set, Tuple

from .combinatorics import SimpleGraph
from .words import (
    Z,
    Z2,
    NormalForm,
    WordError,
    _inverse_syllables,
    _normal_form,
    abelianize,
    conjugate,
    generator,
    identity,
    invert,
    multiply,
    normalize,
)


class NotAReflection(ValueError):
    code = "E_REFLECTION"


class PullbackViolation(ValueError):
    code = "E_PULLBACK"


def _unit(n: int, k: int, scale: int = 1) -> Tuple[int, ...]:
    return tuple(scale if j == k else 0 for j in range(n))


@dataclass(frozen=True)
class Reflection:
    element: NormalForm
    class_index: int  # 0-based

    @classmethod
    def conjugate_of(cls, s: int, w: NormalForm) -> "Reflection":
        """The reflection ``w^-1 s w``."""
        if w.coeff != Z2:
            raise WordError("conjugator must be a Coxeter word")
        return cls(conjugate(generator(w.graph, s), w), s - 1)

    @classmethod
    def from_element(cls, x: NormalForm) -> "Reflection":
        """Recognise ``x`` as a reflection or raise :class:`NotAReflection`.

        In a right-angled Coxeter group every involution is conjugate to the
        product of a clique of generators, so ``x`` is a reflection iff
        ``x^2 = 1`` and exactly one generator has odd exponent sum.
        """
        if x.coeff != Z2:
            raise NotAReflection("reflections live in the Coxeter group")
        if x.is_identity():
            raise NotAReflection("the identity is not a reflection")
        if not multiply(x, x).is_identity():
            raise NotAReflection(f"{x} is not an involution")
        odd = [k for k, e in enumerate(abelianize(x)) if e]
        if len(odd) != 1:
            raise NotAReflection(
                f"{x} is an involution conjugate to a product of {len(odd)} commuting generators"
            )
        return cls(x, odd[0])

    @property
    def graph(self) -> SimpleGraph:
        return self.element.graph

    def __mul__(self, other: "Reflection") -> "Reflection":
        return quandle_op(self, other)

    def __str__(self) -> str:
        return str(self.element)


def quandle_op(x: Reflection, y: Reflection) -> Reflection:
    """``x * y = y^-1 x y``."""
    if x.graph != y.graph:
        raise WordError("reflections from different systems")
    return Reflection(conjugate(x.element, y.element), x.class_index)


def quandle_op_inverse(x: Reflection, y: Reflection) -> Reflection:
    """Inverse of right translation by ``y``: ``x -> y x y^-1``."""
    if x.graph != y.graph:
        raise WordError("reflections from different systems")
    w = y.element
    word = w.syllables + x.element.syllables + tuple(_inverse_syllables(w))
    return Reflection(_normal_form(word, w.graph, Z2), x.class_index)


def ball(graph: SimpleGraph, radius: int) -> List[NormalForm]:
    """All elements of W of word length at most ``radius``, by breadth-first search."""
    seen = {identity(graph).syllables: identity(graph)}
    frontier = [identity(graph)]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for s in graph.vertices:
                u = multiply(w, generator(graph, s))
                if u.syllables not in seen:
                    seen[u.syllables] = u
                    nxt.append(u)
        frontier = nxt
    return list(seen.values())


def enumerate_reflections(graph: SimpleGraph, max_length: int) -> List[Reflection]:
    """Distinct reflections ``w^-1 s w`` with ``|w| <= max_length``.

    The set is not closed under the quandle operation in general.
    """
    found = {}
    for w in ball(graph, max_length):
        for s in graph.vertices:
            r = Reflection.conjugate_of(s, w)
            found.setdefault(r.element.syllables, r)
    return sorted(found.values(), key=lambda r: (len(r.element), r.element.syllables))


@dataclass(frozen=True)
class AdElement:
    w: NormalForm
    v: Tuple[int, ...]

    def __post_init__(self):
        if self.w.coeff != Z2:
            raise PullbackViolation("the W-component must be a Coxeter word")
        v = tuple(int(x) for x in self.v)
        object.__setattr__(self, "v", v)
        if len(v) != self.w.graph.n:
            raise PullbackViolation(f"vector of length {len(v)}, expected {self.w.graph.n}")
        if tuple(x % 2 for x in v) != abelianize(self.w):
            raise PullbackViolation(f"ab({self.w}) = {abelianize(self.w)} is not {v} mod 2")

    @property
    def graph(self) -> SimpleGraph:
        return self.w.graph

    def __mul__(self, other: "AdElement") -> "AdElement":
        return ad_multiply(self, other)

    def __invert__(self) -> "AdElement":
        return ad_invert(self)

    def is_identity(self) -> bool:
        return self.w.is_identity() and not any(self.v)

    def to_json(self) -> dict:
        return {"w": str(self.w), "v": list(self.v)}

    def __str__(self) -> str:
        return f"({self.w}, {list(self.v)})"


def ad_identity(graph: SimpleGraph) -> AdElement:
    return AdElement(identity(graph), (0,) * graph.n)


def e(x: Reflection) -> AdElement:
    """The generator ``e_x`` of Ad(X_W)."""
    return AdElement(x.element, _unit(x.graph.n, x.class_index))


def ad_multiply(a: AdElement, b: AdElement) -> AdElement:
    return AdElement(multiply(a.w, b.w), tuple(p + q for p, q in zip(a.v, b.v)))


def ad_invert(a: AdElement) -> AdElement:
    return AdElement(invert(a.w), tuple(-x for x in a.v))


def ad_equals(a: AdElement, b: AdElement) -> bool:
    return a.w.syllables == b.w.syllables and a.v == b.v and a.graph == b.graph


def ad_product(*factors: AdElement) -> AdElement:
    out = factors[0]
    for f in factors[1:]:
        out = ad_multiply(out, f)
    return out


def phi(a: AdElement) -> NormalForm:
    """Ad(X_W) -> W, ``e_x -> x``."""
    return a.w


def ad_ab(a: AdElement) -> Tuple[int, ...]:
    """Ad(X_W) -> Z^c."""
    return a.v


def Phi(w: NormalForm) -> AdElement:
    """A_W -> Ad(X_W), ``a_s -> e_s``."""
    if w.coeff != Z:
        raise WordError("Phi takes an Artin word")
    g = w.graph
    out = ad_identity(g)
    for s, k in w.syllables:
        out = ad_multiply(out, AdElement(normalize([(s, k)], g, Z2), _unit(g.n, s - 1, k)))
    return out


def pi(w: NormalForm) -> NormalForm:
    """A_W -> W, ``a_s -> s``."""
    if w.coeff != Z:
        raise WordError("pi takes an Artin word")
    return normalize(w.syllables, w.graph, Z2)


def in_commutator_subgroup(w: NormalForm) -> bool:
    """Membership of ``w`` in [W, W]: trivial image in W_ab."""
    if w.coeff != Z2:
        raise WordError("commutator membership is decided in W")
    return not any(abelianize(w))


def in_phi_kernel(a: AdElement) -> bool:
    return phi(a).is_identity()


def kernel_element(graph: SimpleGraph, half: Iterable[int]) -> AdElement:
    """The kernel element ``(1, 2h)`` of phi."""
    return AdElement(identity(graph), tuple(2 * h for h in half))


def reflection_set(refls: Iterable[Reflection]) -> Set[Tuple]:
    return {r.element.syllables for r in refls}
