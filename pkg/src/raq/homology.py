"""Cellular chain complexes of polyhedral products over GF(2).

A CW pair ``(X, A)`` is given by its cells and mod-2 boundaries.  The
polyhedral product ``Z(K; (X, A))`` has a product cell for every tuple of
cells whose support ``{i : cell_i not in A}`` is a face of K; its boundary is
the Leibniz sum over coordinates (no signs in characteristic 2).  The smash
version keeps only tuples with no basepoint coordinate, which computes the
reduced homology of the polyhedral smash product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from . import gf2
from .combinatorics import SimpleGraph, SimplicialComplex, flag_complex, full_subcomplex
from .report import Report

DEFAULT_CELL_CAP = 5_000_000


class CellCapExceeded(RuntimeError):
    code = "E_CELL_CAP"


class ChainComplexError(ValueError):
    code = "E_COMPLEX"


@dataclass(frozen=True)
class Cell:
    name: str
    dim: int
    in_a: bool = False
    basepoint: bool = False


@dataclass(frozen=True)
class CellComplexPair:
    """Finite CW pair with mod-2 boundaries given as tuples of cell indices."""

    name: str
    cells: Tuple[Cell, ...]
    boundary: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        cells, bd = self.cells, self.boundary
        if len(bd) != len(cells):
            raise ChainComplexError("one boundary entry per cell required")
        reduced = []
        for k, faces in enumerate(bd):
            mod2 = tuple(sorted(f for f in set(faces) if faces.count(f) % 2))
            for f in mod2:
                if cells[f].dim != cells[k].dim - 1:
                    raise ChainComplexError(f"boundary of {cells[k].name} contains {cells[f].name} of wrong dimension")
                if cells[k].in_a and not cells[f].in_a:
                    raise ChainComplexError(f"A is not a subcomplex: {cells[k].name} -> {cells[f].name}")
            reduced.append(mod2)
        object.__setattr__(self, "boundary", tuple(reduced))
        base = [c for c in cells if c.basepoint]
        if len(base) != 1 or base[0].dim != 0 or not base[0].in_a:
            raise ChainComplexError("need exactly one basepoint 0-cell, inside A")
        for k in range(len(cells)):
            acc = {}
            for f in reduced[k]:
                for g in reduced[f]:
                    acc[g] = acc.get(g, 0) ^ 1
            if any(acc.values()):
                raise ChainComplexError(f"boundary of boundary of {cells[k].name} is nonzero")

    @property
    def basepoint(self) -> int:
        return next(k for k, c in enumerate(self.cells) if c.basepoint)

    def x_cells(self) -> List[int]:
        return list(range(len(self.cells)))

    def a_cells(self) -> List[int]:
        return [k for k, c in enumerate(self.cells) if c.in_a]

    def relative_cells(self) -> List[int]:
        return [k for k, c in enumerate(self.cells) if not c.in_a]

    def as_complex(self) -> "F2ChainComplex":
        return polyhedral_product_complex(SimplicialComplex.simplex(1), self)


def _pair(name: str, layout: Sequence[Tuple[str, int, bool, Sequence[str]]], basepoint: str) -> CellComplexPair:
    index = {s[0]: k for k, s in enumerate(layout)}
    cells = tuple(Cell(n, d, a, n == basepoint) for n, d, a, _ in layout)
    boundary = tuple(tuple(index[f] for f in faces) for *_, faces in layout)
    return CellComplexPair(name, cells, boundary)


def model_circle_pair() -> CellComplexPair:
    """(S^1, *)."""
    return _pair("S1", [("pt", 0, True, ()), ("e", 1, False, ("pt", "pt"))], "pt")


def model_mobius_pair(kind: str = "cw6") -> CellComplexPair:
    """(M, S^1): the closed Möbius band and its boundary circle.

    ``cw6`` is the mapping cylinder of the degree-2 map of the circle: the
    boundary loop ``b`` at ``v``, the core loop ``a`` at ``w``, the segment
    ``c`` from ``v`` to ``w``, and a disc attached along ``b c a^-2 c^-1``.
    ``simplicial20`` is the 5-vertex triangulation by the triangles
    ``{i, i+1, i+2}`` mod 5, whose boundary is the 5-cycle of chords.
    """
    if kind == "cw6":
        return _pair("M", [
            ("v", 0, True, ()),
            ("w", 0, False, ()),
            ("b", 1, True, ("v", "v")),
            ("a", 1, False, ("w", "w")),
            ("c", 1, False, ("v", "w")),
            ("F", 2, False, ("b", "c", "a", "a", "c")),
        ], "v")
    if kind == "simplicial20":
        layout = [(f"v{i}", 0, True, ()) for i in range(5)]
        for i in range(5):
            layout.append((f"e{i}{(i + 1) % 5}", 1, False, (f"v{i}", f"v{(i + 1) % 5}")))
        for i in range(5):
            layout.append((f"d{i}{(i + 2) % 5}", 1, True, (f"v{i}", f"v{(i + 2) % 5}")))
        for i in range(5):
            j, k = (i + 1) % 5, (i + 2) % 5
            layout.append((f"t{i}", 2, False, (f"e{i}{j}", f"e{j}{k}", f"d{i}{k}")))
        return _pair("M", layout, "v0")
    raise ValueError(f"unknown Möbius model {kind!r}")


def model_rp_pair(n: int) -> CellComplexPair:
    """(RP^n, *) with one cell per dimension; all mod-2 boundaries vanish."""
    layout = [(f"e{d}", d, d == 0, (f"e{d - 1}", f"e{d - 1}") if d else ()) for d in range(n + 1)]
    return _pair(f"RP{n}", layout, "e0")


@dataclass
class F2ChainComplex:
    """Chain complex over GF(2).

    ``cells[d]`` lists the basis of degree ``d``; ``boundary[d][k]`` is the
    boundary of basis element ``k`` as a bitmask over ``cells[d - 1]``.
    """

    cells: List[list]
    boundary: List[List[int]]
    _ranks: Dict[int, int] = field(default_factory=dict, repr=False)

    @property
    def top(self) -> int:
        return len(self.cells) - 1

    def size(self, d: int) -> int:
        return len(self.cells[d]) if 0 <= d < len(self.cells) else 0

    def rank(self, d: int) -> int:
        """Rank of the boundary map out of degree ``d``."""
        if d <= 0 or d >= len(self.cells):
            return 0
        if d not in self._ranks:
            self._ranks[d] = gf2.rank(self.boundary[d])
        return self._ranks[d]

    def check(self) -> None:
        for d in range(2, len(self.cells)):
            lower = self.boundary[d - 1]
            for k, col in enumerate(self.boundary[d]):
                acc = 0
                for j in gf2.bits(col):
                    acc ^= lower[j]
                if acc:
                    raise ChainComplexError(f"d∘d != 0 on cell {self.cells[d][k]}")

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(c) for d, c in enumerate(self.cells))


def betti(c: F2ChainComplex, up_to: Optional[int] = None) -> List[int]:
    """Mod-2 Betti numbers ``b_0 .. b_up_to``."""
    if up_to is None:
        up_to = c.top
    return [c.size(d) - c.rank(d) - c.rank(d + 1) for d in range(up_to + 1)]


def reduced_betti(c: F2ChainComplex, up_to: Optional[int] = None) -> List[int]:
    b = betti(c, up_to)
    if b and any(c.cells):
        b[0] -= 1
    return b


def _count_cells(k: SimplicialComplex, pair: CellComplexPair, smash: bool) -> int:
    base = pair.basepoint
    a = [x for x in pair.a_cells() if not (smash and x == base)]
    rel = pair.relative_cells()
    return sum(len(rel) ** len(f) * len(a) ** (k.m - len(f)) for f in k.faces)


def _build(k: SimplicialComplex, pair: CellComplexPair, smash: bool, cell_cap: int) -> F2ChainComplex:
    total = _count_cells(k, pair, smash)
    if total > cell_cap:
        raise CellCapExceeded(f"{total} product cells exceed the cap of {cell_cap}")
    base = pair.basepoint
    a_cells = [x for x in pair.a_cells() if not (smash and x == base)]
    rel = pair.relative_cells()
    dims = [c.dim for c in pair.cells]
    tuples = []
    for face in sorted(k.faces):
        choices = [rel if (i + 1) in face else a_cells for i in range(k.m)]
        tuples.extend(product(*choices))
    top = max((sum(dims[x] for x in t) for t in tuples), default=-1)
    cells: List[list] = [[] for _ in range(top + 1)]
    for t in sorted(tuples, key=lambda t: (sum(dims[x] for x in t), t)):
        cells[sum(dims[x] for x in t)].append(t)
    index = [{t: j for j, t in enumerate(cs)} for cs in cells]
    boundary: List[List[int]] = [[0] * len(cs) for cs in cells]
    for d in range(1, top + 1):
        lower = index[d - 1]
        for j, t in enumerate(cells[d]):
            col = 0
            for i, x in enumerate(t):
                for y in pair.boundary[x]:
                    u = t[:i] + (y,) + t[i + 1:]
                    pos = lower.get(u)
                    if pos is not None:
                        col ^= 1 << pos
                    elif not (smash and y == base):
                        raise ChainComplexError(f"boundary of {t} leaves the complex")
            boundary[d][j] = col
    complex_ = F2ChainComplex(cells, boundary)
    complex_.check()
    return complex_


def polyhedral_product_complex(k: SimplicialComplex, pair: CellComplexPair,
                               cell_cap: int = DEFAULT_CELL_CAP) -> F2ChainComplex:
    """Cellular chains of Z(K; (X, A))."""
    return _build(k, pair, smash=False, cell_cap=cell_cap)


def smash_polyhedral_product_complex(k: SimplicialComplex, pair: CellComplexPair,
                                     cell_cap: int = DEFAULT_CELL_CAP) -> F2ChainComplex:
    """Chains of Z(K) relative to the fat wedge: reduced chains of the smash version."""
    return _build(k, pair, smash=True, cell_cap=cell_cap)


def _pad(b: List[int], n: int) -> List[int]:
    return (b + [0] * n)[:n]


def smash_summands(k: SimplicialComplex, pair: CellComplexPair, up_to: int,
                   cell_cap: int = DEFAULT_CELL_CAP) -> List[Tuple[Tuple[int, ...], List[int]]]:
    """Reduced Betti numbers of Ẑ(K_I; pair) for every nonempty ``I``."""
    out = []
    for r in range(1, k.m + 1):
        for subset in combinations(k.vertices, r):
            c = smash_polyhedral_product_complex(full_subcomplex(k, subset), pair, cell_cap)
            out.append((subset, _pad(betti(c, up_to), up_to + 1)))
    return out


def bbcg_check(k: SimplicialComplex, pair: CellComplexPair, up_to: int,
               cell_cap: int = DEFAULT_CELL_CAP) -> Report:
    """Compare reduced Betti numbers of Z(K; pair) with the sum over the
    stable summands Ẑ(K_I; pair)."""
    lhs = _pad(reduced_betti(polyhedral_product_complex(k, pair, cell_cap), up_to), up_to + 1)
    rhs = [0] * (up_to + 1)
    for _, b in smash_summands(k, pair, up_to, cell_cap):
        rhs = [x + y for x, y in zip(rhs, b)]
    rep = Report(f"BBCG splitting for {k} with ({pair.name}, A)", ("degree", "Z_reduced", "sum_smash", "status"))
    for d in range(up_to + 1):
        rep.add(d, lhs[d], rhs[d], lhs[d] == rhs[d], ok=lhs[d] == rhs[d])
    return rep


def splitting_report(g: SimpleGraph, up_to: int, model: str = "cw6",
                     cell_cap: int = DEFAULT_CELL_CAP) -> Report:
    """Betti numbers of B Ad(X_W) against BA_W; the difference is the
    complementary stable summand."""
    k = flag_complex(g)
    b_ad = _pad(betti(polyhedral_product_complex(k, model_mobius_pair(model), cell_cap), up_to), up_to + 1)
    b_a = _pad(betti(polyhedral_product_complex(k, model_circle_pair(), cell_cap), up_to), up_to + 1)
    rep = Report(f"stable splitting B Ad = BA v X for {g}", ("degree", "BAd", "BA", "X", "status"))
    for d in range(up_to + 1):
        rep.add(d, b_ad[d], b_a[d], b_ad[d] - b_a[d], b_ad[d] >= b_a[d], ok=b_ad[d] >= b_a[d])
    return rep


def classifying_space_pair(space: str, up_to: int, model: str = "cw6") -> CellComplexPair:
    """Pair whose polyhedral product over C(Gamma) models BW, BA_W or B Ad(X_W)."""
    if space == "BW":
        return model_rp_pair(up_to + 1)
    if space == "BA":
        return model_circle_pair()
    if space == "BAd":
        return model_mobius_pair(model)
    raise ValueError(f"unknown space {space!r}")


def classifying_space_betti(g: SimpleGraph, space: str, up_to: int, model: str = "cw6",
                            cell_cap: int = DEFAULT_CELL_CAP) -> List[int]:
    pair = classifying_space_pair(space, up_to, model)
    return _pad(betti(polyhedral_product_complex(flag_complex(g), pair, cell_cap), up_to), up_to + 1)


def kunneth_betti(pair: CellComplexPair, m: int) -> List[int]:
    """m-fold convolution of the Betti numbers of X (field coefficients)."""
    base = betti(pair.as_complex())
    out = [1]
    for _ in range(m):
        nxt = [0] * (len(out) + len(base) - 1)
        for i, x in enumerate(out):
            for j, y in enumerate(base):
                nxt[i + j] += x * y
        out = nxt
    return out
