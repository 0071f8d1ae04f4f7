"""Finite simple graphs and simplicial complexes.

Vertices are labelled ``1..n``.  A :class:`SimplicialComplex` always contains
the empty face and every singleton of its ground set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from pathlib import Path
from typing import FrozenSet, Iterable, Iterator, Sequence, Tuple

Face = Tuple[int, ...]


class GraphFormatError(ValueError):
    code = "E_GRAPH"


def _edge(i: int, j: int) -> FrozenSet[int]:
    return frozenset((i, j))


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: FrozenSet[FrozenSet[int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError(f"negative vertex count {self.n}")
        edges = set()
        for e in self.edges:
            e = frozenset(e)
            if len(e) != 2:
                raise GraphFormatError(f"loop or malformed edge {sorted(e)}")
            for v in e:
                if not 1 <= v <= self.n:
                    raise GraphFormatError(f"edge endpoint {v} outside 1..{self.n}")
            edges.add(e)
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        edges = list(edges)
        seen = set()
        for e in edges:
            key = frozenset(e)
            if key in seen:
                raise GraphFormatError(f"duplicate edge {sorted(key)}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset(_edge(i, j) for i, j in combinations(range(1, n + 1), 2)))

    @classmethod
    def edgeless(cls, n: int) -> "SimpleGraph":
        return cls(n)

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset(_edge(i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        edges = {_edge(i, i % n + 1) for i in range(1, n + 1)} if n >= 3 else set()
        return cls(n, frozenset(edges))

    @classmethod
    def complete_plus_isolated(cls, m: int) -> "SimpleGraph":
        """K_{m-1} together with an isolated vertex ``m``."""
        k = cls.complete(m - 1)
        return cls(m, k.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> tuple:
        """``adjacency[v]`` is the neighbour set of ``v`` (index 0 unused)."""
        nbrs = [set() for _ in range(self.n + 1)]
        for i, j in (tuple(e) for e in self.edges):
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def blockers(self) -> tuple:
        """``blockers[v]``: bitmask (bit ``u``) of the generators not commuting with ``v``, including ``v``."""
        full = (1 << (self.n + 1)) - 2
        out = [0]
        for v in self.vertices:
            mask = 0
            for u in self.adjacency[v]:
                mask |= 1 << u
            out.append(full & ~mask)
        return tuple(out)

    def adjacent(self, i: int, j: int) -> bool:
        return 0 < i <= self.n and j in self.adjacency[i]

    def neighbours(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def non_neighbours(self, v: int) -> FrozenSet[int]:
        """Vertices ``j != v`` not joined to ``v``."""
        return frozenset(u for u in self.vertices if u != v and not self.adjacent(u, v))

    def sorted_edges(self) -> list:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Induced subgraph, re-indexed to ``1..len(vertices)`` in the given order."""
        index = {v: k + 1 for k, v in enumerate(vertices)}
        edges = [(index[i], index[j]) for i, j in self.sorted_edges() if i in index and j in index]
        return SimpleGraph(len(vertices), frozenset(frozenset(e) for e in edges))

    def cliques(self) -> Iterator[Face]:
        """All cliques (including the empty one) as sorted tuples."""
        nbrs = {v: self.neighbours(v) for v in self.vertices}

        def extend(clique: Face, candidates: Sequence[int]) -> Iterator[Face]:
            yield clique
            for k, v in enumerate(candidates):
                yield from extend(clique + (v,), [u for u in candidates[k + 1:] if u in nbrs[v]])

        yield from extend((), list(self.vertices))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def parse_graph(text: str) -> SimpleGraph:
    """Parse a graph from JSON ``{"n":..,"edges":[[i,j],..]}`` or the line format.

    The line format is the vertex count on the first line followed by one
    ``i j`` pair per edge.  Blank lines and ``#`` comments are ignored.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            return SimpleGraph.from_edges(int(data["n"]), [tuple(e) for e in data.get("edges", [])])
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise GraphFormatError(f"bad JSON graph: {exc}") from exc
    lines = [ln.split("#")[0].strip() for ln in stripped.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty graph file")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            i, j = ln.split()
            edges.append((int(i), int(j)))
    except ValueError as exc:
        raise GraphFormatError(f"bad graph line: {exc}") from exc
    return SimpleGraph.from_edges(n, edges)


def load_graph(path) -> SimpleGraph:
    return parse_graph(Path(path).read_text())


def all_graphs(n: int) -> Iterator[SimpleGraph]:
    """Every labelled simple graph on ``n`` vertices."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, frozenset(_edge(*p) for k, p in enumerate(pairs) if mask >> k & 1))


def canonical_edges(g: SimpleGraph) -> tuple:
    """Lexicographically least relabelled edge list; equal iff isomorphic."""
    edges = g.sorted_edges()
    return min(
        tuple(sorted(tuple(sorted((p[i - 1], p[j - 1]))) for i, j in edges))
        for p in permutations(g.vertices)
    )


def isomorphism_classes(n: int) -> list:
    """One labelled representative per isomorphism class of graphs on ``n`` vertices."""
    seen = {}
    for g in all_graphs(n):
        seen.setdefault(canonical_edges(g), g)
    return list(seen.values())


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplicial complex on the ground set ``[m]``.

    ``faces`` is closed downward at construction, so generating faces are
    enough.  Every singleton ``{i}`` is added as well.
    """

    m: int
    faces: FrozenSet[Face] = field(default_factory=frozenset)

    def __post_init__(self):
        closed = {()}
        closed.update((i,) for i in range(1, self.m + 1))
        for f in self.faces:
            f = tuple(sorted(set(f)))
            if any(not 1 <= v <= self.m for v in f):
                raise ValueError(f"face {f} not on ground set [{self.m}]")
            if f in closed:
                continue
            for r in range(len(f) + 1):
                closed.update(combinations(f, r))
        object.__setattr__(self, "faces", frozenset(closed))

    @classmethod
    def simplex(cls, m: int) -> "SimplicialComplex":
        return cls(m, frozenset([tuple(range(1, m + 1))]))

    @classmethod
    def boundary_of_simplex(cls, m: int) -> "SimplicialComplex":
        return cls(m, frozenset(combinations(range(1, m + 1), m - 1)))

    @property
    def vertices(self) -> range:
        return range(1, self.m + 1)

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.faces

    def dimension(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def facets(self) -> list:
        faces = self.faces
        out = []
        for f in sorted(faces, key=lambda f: (-len(f), f)):
            if not any(set(f) < set(g) for g in out):
                out.append(f)
        return sorted(out)

    def one_skeleton(self) -> SimpleGraph:
        return SimpleGraph(self.m, frozenset(frozenset(f) for f in self.faces if len(f) == 2))

    def f_vector(self) -> list:
        counts = [0] * (self.m + 1)
        for f in self.faces:
            counts[len(f)] += 1
        return counts

    def __str__(self) -> str:
        return f"Complex(m={self.m}, facets={self.facets()})"


def flag_complex(g: SimpleGraph) -> SimplicialComplex:
    return SimplicialComplex(g.n, frozenset(g.cliques()))


def full_subcomplex(k: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """The full subcomplex ``K_I``, re-indexed over ``I`` in increasing order."""
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("full subcomplex needs a nonempty vertex set")
    if any(not 1 <= v <= k.m for v in vs):
        raise ValueError(f"vertex set {vs} not inside [{k.m}]")
    index = {v: r + 1 for r, v in enumerate(vs)}
    faces = frozenset(tuple(index[v] for v in f) for f in k.faces if all(v in index for v in f))
    return SimplicialComplex(len(vs), faces)


def _check_vertex(k: SimplicialComplex, v: int) -> None:
    if not 1 <= v <= k.m:
        raise ValueError(f"vertex {v} outside [{k.m}]")


def link_faces(k: SimplicialComplex, v: int) -> FrozenSet[Face]:
    """Faces of ``lk(v)``, on the original labels."""
    _check_vertex(k, v)
    return frozenset(f for f in k.faces if v not in f and tuple(sorted(f + (v,))) in k.faces)


def link(k: SimplicialComplex, v: int) -> SimplicialComplex:
    """Link of ``v``, re-indexed over its own vertex set."""
    faces = link_faces(k, v)
    vs = sorted({u for f in faces for u in f})
    index = {u: r + 1 for r, u in enumerate(vs)}
    return SimplicialComplex(len(vs), frozenset(tuple(index[u] for u in f) for f in faces))


def link_vertices(k: SimplicialComplex, v: int) -> list:
    return sorted({u for f in link_faces(k, v) for u in f})


def deletion(k: SimplicialComplex, v: int) -> SimplicialComplex:
    """Deletion of ``v``; the remaining vertices are re-indexed in order."""
    _check_vertex(k, v)
    return full_subcomplex(k, [u for u in k.vertices if u != v]) if k.m > 1 else SimplicialComplex(0)


def is_flag(k: SimplicialComplex) -> bool:
    return flag_complex(k.one_skeleton()).faces == k.faces


def clique_count_by_size(g: SimpleGraph) -> list:
    counts = [0] * (g.n + 1)
    for c in g.cliques():
        counts[len(c)] += 1
    return counts
