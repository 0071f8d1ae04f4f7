"""The Serre spectral sequence of (S^1)^m -> B Ad(X_W) -> BW with F_2 coefficients.

E_2 = SR(Gamma) ⊗ Λ(y_1..y_m), where SR(Gamma) = F_2[x_1..x_m]/(x_i x_j : ij not an
edge) and |x_i| = |y_i| = 1.  The differential d_2 is the derivation with
d_2 x_i = 0 and d_2 y_i = x_i^2.  E_3 is computed degreewise by linear algebra;
classes are coordinate vectors over fixed cycle representatives.

A basis element of E_2 is a pair ``(exponents, J)`` with ``J`` a bitmask of
the exterior variables (bit ``i-1`` for ``y_i``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from . import gf2
from .combinatorics import SimpleGraph
from .report import Report

Key = Tuple[Tuple[int, ...], int]

DEFAULT_MAX_BASIS = 250_000


class DegreeCapExceeded(RuntimeError):
    code = "E_DEGREE_CAP"


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << (v - 1)
    return out


def _support(mono: Sequence[int]) -> int:
    return _mask(i + 1 for i, e in enumerate(mono) if e)


def clique_masks(g: SimpleGraph) -> FrozenSet[int]:
    return frozenset(_mask(c) for c in g.cliques())


def sr_monomials(g: SimpleGraph, d: int, cliques: FrozenSet[int] = None) -> List[Tuple[int, ...]]:
    """Degree-``d`` monomials of SR(Gamma) whose support is a clique."""
    if d == 0:
        return [(0,) * g.n]
    out = []
    for clique in g.cliques():
        if not clique:
            continue
        k = len(clique)
        # compositions of d into k positive parts via bar positions
        for bars in combinations(range(1, d), k - 1):
            parts = [b - a for a, b in zip((0,) + bars, bars + (d,))]
            mono = [0] * g.n
            for v, e in zip(clique, parts):
                mono[v - 1] = e
            out.append(tuple(mono))
    return sorted(out)


def sr_dim(g: SimpleGraph, d: int) -> int:
    """Dimension of SR(Gamma) in degree ``d``."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    if d == 0:
        return 1
    return sum(comb(d - 1, len(c) - 1) for c in g.cliques() if c)


class E2Element:
    """F_2-linear combination of basis pairs, stored as a set of keys."""

    __slots__ = ("graph", "terms", "_cliques")

    def __init__(self, graph: SimpleGraph, terms: Iterable[Key] = (), cliques: FrozenSet[int] = None):
        self.graph = graph
        self._cliques = cliques if cliques is not None else clique_masks(graph)
        acc = set()
        for mono, j in terms:
            mono = tuple(mono)
            if _support(mono) in self._cliques:
                acc ^= {(mono, j)}
        self.terms = frozenset(acc)

    def _new(self, terms) -> "E2Element":
        return E2Element(self.graph, terms, self._cliques)

    @classmethod
    def x(cls, g: SimpleGraph, i: int) -> "E2Element":
        return cls(g, [(tuple(1 if k == i - 1 else 0 for k in range(g.n)), 0)])

    @classmethod
    def y(cls, g: SimpleGraph, subset: Iterable[int]) -> "E2Element":
        return cls(g, [((0,) * g.n, _mask(subset))])

    @classmethod
    def one(cls, g: SimpleGraph) -> "E2Element":
        return cls.y(g, ())

    @classmethod
    def zero(cls, g: SimpleGraph) -> "E2Element":
        return cls(g)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, E2Element) and self.graph == other.graph and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __add__(self, other: "E2Element") -> "E2Element":
        out = self._new(())
        out.terms = self.terms ^ other.terms
        return out

    def __mul__(self, other: "E2Element") -> "E2Element":
        acc = set()
        for a, j in self.terms:
            for b, k in other.terms:
                if j & k:
                    continue
                mono = tuple(p + q for p, q in zip(a, b))
                if _support(mono) in self._cliques:
                    acc ^= {(mono, j | k)}
        out = self._new(())
        out.terms = frozenset(acc)
        return out

    def bidegrees(self) -> set:
        return {(sum(a), bin(j).count("1")) for a, j in self.terms}

    def __repr__(self) -> str:
        return " + ".join(sorted(_format_key(t) for t in self.terms)) or "0"


def _format_key(key: Key) -> str:
    mono, j = key
    parts = []
    for i, e in enumerate(mono):
        if e:
            parts.append(f"x{i + 1}" + (f"^{e}" if e > 1 else ""))
    parts += [f"y{i + 1}" for i in gf2.bits(j)]
    return "*".join(parts) or "1"


def d2_key(key: Key, cliques: FrozenSet[int]) -> Iterator[Key]:
    mono, j = key
    for i in gf2.bits(j):
        new = list(mono)
        new[i] += 2
        if _support(new) in cliques:
            yield tuple(new), j & ~(1 << i)


def d2(e: E2Element) -> E2Element:
    """The derivation with d_2 x_i = 0 and d_2 y_i = x_i^2."""
    acc = set()
    for key in e.terms:
        for out in d2_key(key, e._cliques):
            acc ^= {out}
    res = e._new(())
    res.terms = frozenset(acc)
    return res


def e2_basis(g: SimpleGraph, d: int, cliques: FrozenSet[int] = None) -> List[Key]:
    """Basis of E_2 in total degree ``d``, ordered by (q, exponents, J)."""
    if d < 0:
        return []
    out = []
    for q in range(0, min(d, g.n) + 1):
        monos = sr_monomials(g, d - q)
        for jset in combinations(range(1, g.n + 1), q):
            j = _mask(jset)
            out.extend((mono, j) for mono in monos)
    return sorted(out, key=lambda k: (bin(k[1]).count("1"), k[0], k[1]))


@dataclass(frozen=True)
class E3Class:
    page: "E3Page"
    degree: int
    coords: int

    def is_zero(self) -> bool:
        return self.coords == 0

    def representative(self) -> E2Element:
        return self.page.representative(self.degree, self.coords)

    def __add__(self, other: "E3Class") -> "E3Class":
        if other.degree != self.degree:
            raise ValueError("adding classes of different degrees")
        return E3Class(self.page, self.degree, self.coords ^ other.coords)

    def __mul__(self, other: "E3Class") -> "E3Class":
        return e3_product(self.page, self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, E3Class) and self.page is other.page and (
            self.degree, self.coords) == (other.degree, other.coords)

    def __hash__(self) -> int:
        return hash((self.degree, self.coords))


class E3Page:
    """E_3 in total degrees ``0..D`` with deterministic coset representatives."""

    def __init__(self, g: SimpleGraph, D: int, max_basis: int = DEFAULT_MAX_BASIS):
        if D < 0:
            raise ValueError("degree cap must be non-negative")
        self.graph = g
        self.D = D
        self.cliques = clique_masks(g)
        self.bases: List[List[Key]] = []
        for d in range(D + 2):
            basis = e2_basis(g, d, self.cliques)
            if len(basis) > max_basis:
                raise DegreeCapExceeded(f"E_2 in degree {d} has {len(basis)} basis elements (cap {max_basis})")
            self.bases.append(basis)
        self.index: List[Dict[Key, int]] = [{k: n for n, k in enumerate(b)} for b in self.bases]
        self.reps: List[List[int]] = []
        self._echelons: List[gf2.Echelon] = []
        for d in range(D + 1):
            self._build_degree(d)

    def _vector(self, d: int, keys: Iterable[Key]) -> int:
        index = self.index[d]
        vec = 0
        for k in keys:
            vec ^= 1 << index[k]
        return vec

    def _d2_columns(self, d: int) -> List[int]:
        return [self._vector(d + 1, d2_key(k, self.cliques)) for k in self.bases[d]]

    def _build_degree(self, d: int) -> None:
        ech = gf2.Echelon()
        if d >= 1:
            for col in self._d2_columns(d - 1):
                ech.add(col)
        reps = []
        for cycle in gf2.kernel_basis(self._d2_columns(d)):
            if ech.add(cycle, 1 << len(reps)) is None:
                reps.append(cycle)
        self.reps.append(reps)
        self._echelons.append(ech)

    def hilbert(self) -> List[int]:
        return [len(r) for r in self.reps]

    def dim(self, d: int) -> int:
        return len(self.reps[d])

    def e2_dims(self) -> List[int]:
        return [len(b) for b in self.bases[: self.D + 1]]

    def bigraded_dims(self) -> Dict[Tuple[int, int], int]:
        """dim E_3^{p,q} for p + q <= D."""
        out: Dict[Tuple[int, int], int] = {}
        for d, reps in enumerate(self.reps):
            for vec in reps:
                pq = self._bidegree(d, vec)
                out[pq] = out.get(pq, 0) + 1
        return out

    def e2_bigraded_dims(self) -> Dict[Tuple[int, int], int]:
        out: Dict[Tuple[int, int], int] = {}
        for basis in self.bases[: self.D + 1]:
            for mono, j in basis:
                pq = (sum(mono), bin(j).count("1"))
                out[pq] = out.get(pq, 0) + 1
        return out

    def _bidegree(self, d: int, vec: int) -> Tuple[int, int]:
        found = {(sum(m), bin(j).count("1")) for m, j in (self.bases[d][b] for b in gf2.bits(vec))}
        if len(found) != 1:
            raise AssertionError("cycle representative is not bihomogeneous")
        return found.pop()

    def _keys(self, d: int, vec: int) -> List[Key]:
        return [self.bases[d][b] for b in gf2.bits(vec)]

    def representative(self, d: int, coords: int) -> E2Element:
        vec = 0
        for k in gf2.bits(coords):
            vec ^= self.reps[d][k]
        return E2Element(self.graph, self._keys(d, vec), self.cliques)

    def is_cycle(self, e: E2Element) -> bool:
        return not d2(e)

    def class_of(self, e: E2Element, degree: int = 0) -> E3Class:
        """The E_3 class of a homogeneous d_2-cycle (``degree`` is used for 0)."""
        degrees = {p + q for p, q in e.bidegrees()}
        if not degrees:
            return E3Class(self, degree, 0)
        if len(degrees) != 1:
            raise ValueError("element is not homogeneous in total degree")
        d = degrees.pop()
        if d > self.D:
            raise DegreeCapExceeded(f"degree {d} beyond the page cap {self.D}")
        if d2(e):
            raise ValueError(f"{e!r} is not a d_2-cycle")
        rest, tag = self._echelons[d].reduce(self._vector(d, e.terms))
        if rest:
            raise AssertionError("cycle not in span of image and representatives")
        return E3Class(self, d, tag)

    def zero(self, d: int) -> E3Class:
        return E3Class(self, d, 0)

    def one(self) -> E3Class:
        return self.class_of(E2Element.one(self.graph))


def e3_page(g: SimpleGraph, D: int) -> E3Page:
    return E3Page(g, D)


def valid_generator_index(g: SimpleGraph, i: int, subset: Iterable[int]) -> bool:
    return set(subset) <= g.non_neighbours(i)


def z_element(g: SimpleGraph, i: int, subset: Iterable[int]) -> E2Element:
    """x_i y_I in E_2."""
    return E2Element.x(g, i) * E2Element.y(g, subset)


def z_class(page: E3Page, i: int, subset: Iterable[int]) -> E3Class:
    """The class z_{i,I} = [x_i y_I]; ``I`` must avoid ``i`` and its neighbours."""
    subset = tuple(sorted(subset))
    if not valid_generator_index(page.graph, i, subset):
        raise ValueError(f"z_{{{i},{set(subset) or '{}'}}} is undefined: I must lie in the non-neighbours of {i}")
    return page.class_of(z_element(page.graph, i, subset))


def e3_product(page: E3Page, a: E3Class, b: E3Class) -> E3Class:
    if a.page is not page or b.page is not page:
        raise ValueError("classes from different pages")
    d = a.degree + b.degree
    if d > page.D:
        raise DegreeCapExceeded(f"product degree {d} beyond the page cap {page.D}")
    return page.class_of(a.representative() * b.representative(), d)


def z_generators(g: SimpleGraph, max_degree: int) -> List[Tuple[int, Tuple[int, ...]]]:
    """All index pairs ``(i, I)`` with ``deg z_{i,I} = 1 + |I| <= max_degree``."""
    out = []
    for i in g.vertices:
        nbrs = sorted(g.non_neighbours(i))
        for r in range(0, min(len(nbrs), max_degree - 1) + 1):
            out.extend((i, c) for c in combinations(nbrs, r))
    return out


def generated_span(page: E3Page, D: int = None) -> List[int]:
    """Dimension, per degree, of the span of products of z-generators."""
    D = page.D if D is None else D
    gens = [(1 + len(subset), z_class(page, i, subset)) for i, subset in z_generators(page.graph, D)]
    spans: List[List[E3Class]] = [[page.one()]]
    dims = [1]
    for d in range(1, D + 1):
        ech = gf2.Echelon()
        basis = []
        for k, z in gens:
            if k > d:
                continue
            for s in spans[d - k]:
                c = e3_product(page, z, s)
                if c.coords and ech.add(c.coords) is None:
                    basis.append(c)
        spans.append(basis)
        dims.append(len(basis))
    return dims


def generation_check(page: E3Page, D: int = None) -> Report:
    D = page.D if D is None else D
    span = generated_span(page, D)
    hilb = page.hilbert()
    rep = Report(f"z-generators span E_3 for {page.graph}", ("degree", "span", "e3", "status"))
    for d in range(D + 1):
        rep.add(d, span[d], hilb[d], span[d] == hilb[d], ok=span[d] == hilb[d])
    return rep


def relation_instances(g: SimpleGraph, D: int) -> Iterator[Tuple[str, E2Element, E2Element]]:
    """Every instance of the product relations, as (label, lhs, rhs) in E_2.

    Vanishing products: z_{i,I} z_{j,J} = 0 for i != j non-adjacent, or I ∩ J
    nonempty.  Exchange: z_{i,I} z_{j,J} = z_{i,I-k} z_{j,J+k} for ij an edge,
    I ∩ J empty, k in I ∩ N_j.  Boundary: sum_{i in I} z_{i,∅} z_{i,I-i} = 0
    whenever I - i ⊆ N_i for every i in I.
    """
    gens = z_generators(g, D)
    zero = E2Element.zero(g)
    for (i, ii), (j, jj) in combinations_with_replacement(gens, 2):
        if 2 + len(ii) + len(jj) > D:
            continue
        lhs = z_element(g, i, ii) * z_element(g, j, jj)
        si, sj = set(ii), set(jj)
        if (i != j and not g.adjacent(i, j)) or si & sj:
            yield f"vanish z[{i},{ii}]z[{j},{jj}]", lhs, zero
        elif i != j and g.adjacent(i, j):
            for k in sorted(si & g.non_neighbours(j)):
                rhs = z_element(g, i, tuple(sorted(si - {k}))) * z_element(g, j, tuple(sorted(sj | {k})))
                yield f"exchange z[{i},{ii}]z[{j},{jj}] k={k}", lhs, rhs
    for r in range(1, min(g.n, D - 1) + 1):
        for subset in combinations(g.vertices, r):
            s = set(subset)
            if all(s - {i} <= g.non_neighbours(i) for i in s):
                total = zero
                for i in subset:
                    total = total + z_element(g, i, ()) * z_element(g, i, tuple(sorted(s - {i})))
                yield f"boundary I={subset}", total, zero


def relations_check(page: E3Page, D: int = None) -> Report:
    D = page.D if D is None else D
    counts: Dict[str, List[int]] = {"vanish": [0, 0], "exchange": [0, 0], "boundary": [0, 0]}
    failures = []
    for label, lhs, rhs in relation_instances(page.graph, D):
        kind = label.split()[0]
        counts[kind][0] += 1
        ok = page.class_of(lhs + rhs).is_zero()
        if not ok:
            counts[kind][1] += 1
            failures.append(label)
    rep = Report(f"E_3 relations for {page.graph}", ("relation", "instances", "failures", "status"))
    for kind, (n, bad) in counts.items():
        rep.add(kind, n, bad, bad == 0, ok=bad == 0)
    rep.header.extend(failures[:20])
    return rep


def collapse_crosscheck(g: SimpleGraph, D: int, model: str = "cw6", page: E3Page = None) -> Report:
    """Hilbert function of E_3 against the Betti numbers of Z(C(Gamma); (M, S^1))."""
    from .homology import classifying_space_betti

    page = page or E3Page(g, D)
    hilb = page.hilbert()[: D + 1]
    b = classifying_space_betti(g, "BAd", D, model)
    rep = Report(f"E_3 collapse against cellular model for {g}", ("degree", "e3", "betti", "status"))
    for d in range(D + 1):
        rep.add(d, hilb[d], b[d], hilb[d] == b[d], ok=hilb[d] == b[d])
    return rep


def euler_strips(page: E3Page) -> Dict[int, Tuple[int, int]]:
    """For each weight ``w = p + 2q <= D``, the alternating sums over the d_2-strip
    of E_2 and of E_3 (indexed by q)."""
    e2 = page.e2_bigraded_dims()
    e3 = page.bigraded_dims()
    out = {}
    for w in range(page.D + 1):
        s2 = s3 = 0
        for q in range(0, page.graph.n + 1):
            p = w - 2 * q
            if p < 0:
                break
            s2 += (-1) ** q * e2.get((p, q), 0)
            s3 += (-1) ** q * e3.get((p, q), 0)
        out[w] = (s2, s3)
    return out
