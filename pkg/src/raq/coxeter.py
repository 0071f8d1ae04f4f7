"""Coxeter matrices, the graph Gamma_W and conjugacy classes of generators."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, Tuple

from .combinatorics import SimpleGraph

INF = math.inf


class InvalidCoxeterMatrix(ValueError):
    code = "E_MATRIX"


def _entry(x):
    if x == INF or (isinstance(x, str) and x.strip().lower() in ("inf", "infinity", "oo")):
        return INF
    if isinstance(x, bool):
        raise InvalidCoxeterMatrix(f"bad Coxeter entry {x!r}")
    try:
        value = int(x)
    except (TypeError, ValueError) as exc:
        raise InvalidCoxeterMatrix(f"bad Coxeter entry {x!r}") from exc
    if value != x and not isinstance(x, str):
        raise InvalidCoxeterMatrix(f"non-integral Coxeter entry {x!r}")
    return value


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix with 1 on the diagonal and entries in ``{2,3,...} ∪ {INF}`` off it.

    Generators are indexed ``0..s_count-1`` internally and printed 1-based.
    """

    entries: Tuple[Tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(_entry(x) for x in row) for row in self.entries)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InvalidCoxeterMatrix(f"row {i + 1} has {len(row)} entries, expected {n}")
        for i in range(n):
            if rows[i][i] != 1:
                raise InvalidCoxeterMatrix(f"diagonal entry ({i + 1},{i + 1}) is {rows[i][i]}, must be 1")
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise InvalidCoxeterMatrix(
                        f"asymmetric entries ({i + 1},{j + 1})={rows[i][j]} and ({j + 1},{i + 1})={rows[j][i]}"
                    )
                if i != j and (rows[i][j] != INF and rows[i][j] < 2):
                    raise InvalidCoxeterMatrix(f"off-diagonal entry ({i + 1},{j + 1}) is {rows[i][j]}, must be >= 2")
        object.__setattr__(self, "entries", rows)

    @property
    def s_count(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def from_graph(cls, g: SimpleGraph) -> "CoxeterMatrix":
        """Right-angled matrix: edge gives 2, non-edge gives INF."""
        n = g.n
        return cls(tuple(
            tuple(1 if i == j else (2 if g.adjacent(i, j) else INF) for j in range(1, n + 1))
            for i in range(1, n + 1)
        ))

    def to_json(self) -> list:
        return [["inf" if x == INF else x for x in row] for row in self.entries]


def parse_matrix(text: str) -> CoxeterMatrix:
    """``|S|`` followed by the row-major entries; ``inf`` marks an infinite entry."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise InvalidCoxeterMatrix("empty matrix file")
    try:
        n = int(tokens[0])
    except ValueError as exc:
        raise InvalidCoxeterMatrix(f"bad size {tokens[0]!r}") from exc
    body = tokens[1:]
    if len(body) != n * n:
        raise InvalidCoxeterMatrix(f"expected {n * n} entries, found {len(body)}")
    return CoxeterMatrix(tuple(tuple(body[i * n:(i + 1) * n]) for i in range(n)))


def load_matrix(path) -> CoxeterMatrix:
    return parse_matrix(Path(path).read_text())


def symmetric_group_matrix(n: int) -> CoxeterMatrix:
    """Coxeter matrix of Σ_n on the adjacent transpositions σ_1..σ_{n-1}."""
    if n < 2:
        raise ValueError("symmetric group needs n >= 2")
    k = n - 1
    return CoxeterMatrix(tuple(
        tuple(1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(k)) for i in range(k)
    ))


def dihedral_matrix(order) -> CoxeterMatrix:
    return CoxeterMatrix(((1, order), (order, 1)))


def is_right_angled(m: CoxeterMatrix) -> bool:
    return all(x in (1, 2, INF) for row in m.entries for x in row)


@dataclass(frozen=True)
class CoxeterSystem:
    matrix: CoxeterMatrix
    gamma: SimpleGraph
    classes: Tuple[Tuple[int, ...], ...]
    class_of: Tuple[int, ...]

    @property
    def c(self) -> int:
        return len(self.classes)

    @property
    def representatives(self) -> Tuple[int, ...]:
        return tuple(cls[0] for cls in self.classes)

    @property
    def right_angled(self) -> bool:
        return is_right_angled(self.matrix)


def build_system(m: CoxeterMatrix) -> CoxeterSystem:
    """Compute Gamma_W and the conjugacy classes of generators.

    Two generators are conjugate exactly when they are joined by a path of
    edges with odd finite label; classes are listed by their smallest member.
    """
    n = m.s_count
    gamma = SimpleGraph(n, frozenset(
        frozenset((i + 1, j + 1)) for i in range(n) for j in range(i + 1, n) if m[i, j] != INF
    ))
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if m[i, j] != INF and m[i, j] % 2 == 1:
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    groups = {}
    for s in range(n):
        groups.setdefault(find(s), []).append(s)
    classes = tuple(tuple(g) for g in sorted(groups.values()))
    class_of = [0] * n
    for k, cls in enumerate(classes):
        for s in cls:
            class_of[s] = k
    return CoxeterSystem(m, gamma, classes, tuple(class_of))


def odd_path(sys: CoxeterSystem, s: int, t: int):
    """A path of odd-labelled edges from ``s`` to ``t`` (0-based), or None."""
    m = sys.matrix
    prev = {s: None}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for v in range(m.s_count):
                if v not in prev and m[u, v] != INF and m[u, v] % 2 == 1:
                    prev[v] = u
                    nxt.append(v)
        frontier = nxt
    if t not in prev:
        return None
    path = [t]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


@dataclass(frozen=True)
class Abelianizations:
    c: int
    class_of: Tuple[int, ...]

    @property
    def w_ab(self) -> str:
        return _power("Z/2", self.c)

    @property
    def a_ab(self) -> str:
        return _power("Z", self.c)

    @property
    def ad_ab(self) -> str:
        return _power("Z", self.c)

    def to_json(self) -> dict:
        return {"c": self.c, "W_ab": self.w_ab, "A_ab": self.a_ab, "Ad_ab": self.ad_ab,
                "class_of": [k + 1 for k in self.class_of]}


def _power(group: str, k: int) -> str:
    if k == 0:
        return "0"
    return group if k == 1 else f"({group})^{k}"


def abelianization_descriptors(sys: CoxeterSystem) -> Abelianizations:
    """W_ab = (Z/2)^c, (A_W)_ab = Z^c and Ad(X_W)_ab = Z^c with c = c(W)."""
    return Abelianizations(sys.c, sys.class_of)


def class_index_map(sys: CoxeterSystem) -> Sequence[int]:
    return sys.class_of
