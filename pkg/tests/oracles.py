"""Independent reference computations used to freeze and cross-check values.

Nothing here calls the normal-form or counting code under test.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import lcm

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DM, DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors, smith_normal_decomp


def relations(p):
    p0, p1, p2 = p
    return [[p0, 0, 0, -1], [0, p1, 0, -1], [0, 0, p2, -1]]


def sympy_invariant_factors(p) -> list[int]:
    return [int(d) for d in invariant_factors(DM(relations(p), ZZ)) if abs(int(d)) > 1]


@lru_cache(maxsize=None)
def _snf(p):
    d, _, t = smith_normal_decomp(DM(relations(p), ZZ))
    diag = [int(d.to_Matrix()[i, i]) for i in range(3)]
    return diag, [[int(x) for x in row] for row in t.to_Matrix().tolist()]


def coset_key(p, v) -> tuple[int, ...]:
    """Canonical representative of ``v + relation lattice`` via the Smith decomposition."""
    diag, t = _snf(tuple(p))
    w = [sum(int(v[i]) * t[i][j] for i in range(4)) for j in range(4)]
    out = []
    for j in range(3):
        out.append(w[j] % abs(diag[j]) if diag[j] else w[j])
    out.append(w[3])
    return tuple(out)


def in_lattice(p, v) -> bool:
    return coset_key(p, v) == coset_key(p, (0, 0, 0, 0))


def weighted_degree(p, v) -> int:
    """Homomorphism L(p) -> Z sending x_s to lcm/p_s and c to lcm."""
    big = lcm(*p)
    return sum(a * big // w for a, w in zip(v[:3], p)) + v[3] * big


def monomials_of_degree(p, v) -> list[tuple[int, int, int]]:
    """All exponent triples of L(p)-degree ``v``, by exhaustive search."""
    big = lcm(*p)
    total = weighted_degree(p, v)
    if total < 0:
        return []
    steps = [big // w for w in p]
    key = coset_key(p, v)
    out = []
    for a0 in range(total // steps[0] + 1):
        for a1 in range((total - a0 * steps[0]) // steps[1] + 1):
            rest = total - a0 * steps[0] - a1 * steps[1]
            if rest % steps[2]:
                continue
            a2 = rest // steps[2]
            if coset_key(p, (a0, a1, a2, 0)) == key:
                out.append((a0, a1, a2))
    return sorted(out)


def brute_graded_dim(p, v) -> int:
    """``#monomials(v) - rank(multiplication by f : S_{v-c} -> S_v)``."""
    target = monomials_of_degree(p, v)
    source = monomials_of_degree(p, (v[0], v[1], v[2], v[3] - 1))
    if not source:
        return len(target)
    index = {m: i for i, m in enumerate(target)}
    f = [(p[0], 0, 0), (0, p[1], 0), (0, 0, p[2])]
    rows = []
    for m in source:
        row = [QQ(0)] * len(target)
        for t in f:
            prod = (m[0] + t[0], m[1] + t[1], m[2] + t[2])
            row[index[prod]] += QQ(1)
        rows.append(row)
    rank = DomainMatrix(rows, (len(rows), len(target)), QQ).rank()
    return len(target) - rank


def weyl_orbit_roots(cartan) -> set[tuple[int, ...]]:
    """Closure of the simple roots under simple reflections."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                pairing = sum(cartan[i][j] * v[j] for j in range(n))
                w = list(v)
                w[i] -= pairing
                w = tuple(w)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def naive_box_roots(cartan, bound) -> list[tuple[int, ...]]:
    n = len(cartan)
    out = []
    for v in itertools.product(range(-bound, bound + 1), repeat=n):
        if sum(v[i] * cartan[i][j] * v[j] for i in range(n) for j in range(n)) == 2:
            out.append(v)
    return out


def partitions_into(parts, total) -> int:
    ways = [1] + [0] * total
    for d in parts:
        for n in range(d, total + 1):
            ways[n] += ways[n - d]
    return ways[total]
