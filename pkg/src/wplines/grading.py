"""Arithmetic in the rank-one grading group L(p).

L(p) is generated by ``x0, x1, x2, c`` subject to ``p0*x0 = p1*x1 = p2*x2 = c``.
Every element has a unique normal form ``l0*x0 + l1*x1 + l2*x2 + l*c`` with
``0 <= l_s < p_s``; all public functions return normal forms.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple


class InvalidWeightError(ValueError):
    pass


class Degree(NamedTuple):
    """Element ``a0*x0 + a1*x1 + a2*x2 + m*c`` of L(p), raw or normalized."""

    a0: int
    a1: int
    a2: int
    m: int

    @property
    def arms(self) -> tuple[int, int, int]:
        return (self.a0, self.a1, self.a2)

    def __add__(self, other):  # type: ignore[override]
        return Degree(*(u + v for u, v in zip(self, other)))

    def __sub__(self, other):
        return Degree(*(u - v for u, v in zip(self, other)))

    def __neg__(self):
        return Degree(*(-u for u in self))

    def scale(self, k: int) -> "Degree":
        return Degree(*(k * u for u in self))

    def wire(self) -> str:
        return " ".join(str(u) for u in self)

    @classmethod
    def parse(cls, text: str) -> "Degree":
        parts = text.replace(",", " ").split()
        if len(parts) != 4:
            raise ValueError(f"degree needs four integers 'a0 a1 a2 m', got {text!r}")
        return cls(*(int(s) for s in parts))


ZERO = Degree(0, 0, 0, 0)
C = Degree(0, 0, 0, 1)


def unit(s: int, k: int = 1) -> Degree:
    """``k * x_s`` as a raw degree."""
    coords = [0, 0, 0, 0]
    coords[s] = k
    return Degree(*coords)


@dataclass(frozen=True)
class WeightSequence:
    p0: int
    p1: int
    p2: int

    def __post_init__(self):
        for w in self:
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise InvalidWeightError(f"weights must be positive integers, got {tuple(self)}")

    def __iter__(self):
        return iter((self.p0, self.p1, self.p2))

    def __getitem__(self, s: int) -> int:
        return (self.p0, self.p1, self.p2)[s]

    def __str__(self):
        return "(%d, %d, %d)" % tuple(self)

    @property
    def is_dynkin(self) -> bool:
        return sum(Fraction(1, w) for w in self) > 1

    @property
    def rank(self) -> int:
        """Number of vertices ``N = p0 + p1 + p2 - 2`` of the star quiver."""
        return self.p0 + self.p1 + self.p2 - 2


def as_weights(p) -> WeightSequence:
    if isinstance(p, WeightSequence):
        return p
    p = tuple(p)
    if len(p) != 3:
        raise InvalidWeightError(f"expected three weights, got {p!r}")
    return WeightSequence(*p)


class GroupStructure(NamedTuple):
    rank: int
    invariant_factors: tuple[int, ...]


def relation_matrix(p: WeightSequence) -> list[list[int]]:
    """Rows generating the relation lattice inside Z^4."""
    return [
        [p.p0, 0, 0, -1],
        [0, p.p1, 0, -1],
        [0, 0, p.p2, -1],
    ]


def smith_diagonal(rows: list[list[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form of an integer matrix.

    Each entry divides the next.
    """
    a = [list(r) for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(nrows, ncols):
        pivots = [(abs(a[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j]]
        if not pivots:
            break
        _, pi, pj = min(pivots)
        a[t], a[pi] = a[pi], a[t]
        for r in a:
            r[t], r[pj] = r[pj], r[t]
        while True:
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, ncols):
                q = a[t][j] // piv
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the remaining block
                bad = [(i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % piv]
                if not bad:
                    break
                i, _ = bad[0]
                a[t] = [x + y for x, y in zip(a[t], a[i])]
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, nrows) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, ncols) if a[t][j]]
            _, pi, pj = min(cands)
            a[t], a[pi] = a[pi], a[t]
            for r in a:
                r[t], r[pj] = r[pj], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


@dataclass(frozen=True)
class GradingGroup:
    weights: WeightSequence
    structure: GroupStructure = field(compare=False)

    @property
    def p(self) -> WeightSequence:
        return self.weights

    def normalize(self, u) -> Degree:
        return normalize(self, u)

    def combine(self, terms) -> Degree:
        return linear_combine(self, terms)

    @property
    def omega(self) -> Degree:
        return dualizing_element(self)


def make_group(p) -> GradingGroup:
    p = as_weights(p)
    diag = smith_diagonal(relation_matrix(p))
    structure = GroupStructure(rank=4 - len(diag), invariant_factors=tuple(d for d in diag if d > 1))
    return GradingGroup(p, structure)


def normalize(g: GradingGroup, raw) -> Degree:
    """Normal form: arm residues ``a_s mod p_s``, carries moved onto ``c``."""
    a0, a1, a2, m = raw
    l = m
    arms = []
    for a, w in zip((a0, a1, a2), g.weights):
        k, r = divmod(a, w)
        arms.append(r)
        l += k
    return Degree(arms[0], arms[1], arms[2], l)


def linear_combine(g: GradingGroup, terms: Iterable[tuple[int, Degree]]) -> Degree:
    total = ZERO
    for coeff, u in terms:
        total = total + Degree(*u).scale(coeff)
    return normalize(g, total)


def invariant_factors(g: GradingGroup) -> GroupStructure:
    return g.structure


def dualizing_element(g: GradingGroup) -> Degree:
    """``omega = c - x0 - x1 - x2``."""
    return normalize(g, Degree(-1, -1, -1, 1))

