"""Star quiver of a weight sequence and its lattice invariants.

The quiver has one arm per weight, of length ``p_s - 1``, with arrows labeled
``x_s`` pointing toward a common hub ``c``.  Its vertices are the twists of
the collection ``(E_1, ..., E_N)`` in the same order.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .collection import build_collection, euler_matrix, ext1_dim, hom_dim
from .grading import GradingGroup, Degree, as_weights, make_group
from .matrices import (
    Matrix,
    add,
    determinant,
    inverse_unit_upper,
    is_positive_definite,
    matmul,
    matrix_order,
    neg,
    transpose,
)
from .report import VerificationReport


class IndefiniteFormError(ValueError):
    pass


class BoxTooSmallError(RuntimeError):
    pass


@dataclass(frozen=True)
class Quiver:
    labels: tuple[str, ...]
    twists: tuple[Degree, ...]
    arrows: tuple[tuple[int, int, str], ...]

    @property
    def size(self) -> int:
        return len(self.labels)

    def successors(self, u: int) -> list[int]:
        return [t for s, t, _ in self.arrows if s == u]


def build_quiver(p) -> Quiver:
    g = p if isinstance(p, GradingGroup) else make_group(p)
    coll = build_collection(g, include_e0=False)
    hub = len(coll) - 1
    arrows = []
    index = 0
    for s, w in enumerate(g.weights):
        arm = list(range(index, index + w - 1))
        index += w - 1
        for u, v in zip(arm, arm[1:] + [hub]):
            arrows.append((u, v, f"x{s}"))
    return Quiver(coll.labels, coll.twists, tuple(arrows))


def path_count(q: Quiver, u: int, v: int) -> int:
    """Number of directed paths from ``u`` to ``v``, the empty path included."""
    for w in (u, v):
        if not 0 <= w < q.size:
            raise IndexError(f"vertex {w} out of range 0..{q.size - 1}")
    # the quiver is acyclic, so plain recursion terminates
    if u == v:
        return 1
    return sum(path_count(q, w, v) for w in q.successors(u))


def path_matrix(q: Quiver) -> Matrix:
    return [[path_count(q, u, v) for v in range(q.size)] for u in range(q.size)]


def adjacency(q: Quiver) -> Matrix:
    a = [[0] * q.size for _ in range(q.size)]
    for s, t, _ in q.arrows:
        a[s][t] += 1
    return a


def cartan_from_quiver(q: Quiver) -> Matrix:
    """``2I - (A + A^T)`` for the underlying graph."""
    a = adjacency(q)
    return [[2 * int(i == j) - a[i][j] - a[j][i] for j in range(q.size)] for i in range(q.size)]


def symmetrized_euler(e: Matrix) -> Matrix:
    """``E + E^T``: the symmetrized Euler form in the basis of the collection."""
    return add(e, transpose(e))


def cartan_from_euler(e: Matrix) -> Matrix:
    """Symmetrized Euler form in the dual basis: ``E^-1 + E^-T``.

    The collection objects play the role of indecomposable projectives; their
    duals under the Euler pairing are the simple objects, and in that basis the
    symmetrized form is a Cartan matrix ``2I - adjacency``.
    """
    inv = inverse_unit_upper(e)
    return add(inv, transpose(inv))


def coxeter_matrix(e: Matrix) -> Matrix:
    """``-E^-T E``, acting on column vectors; satisfies ``Phi^T E Phi = E``."""
    inv_t = transpose(inverse_unit_upper(e))
    return neg(matmul(inv_t, e))


def _scaled_schur_complements(c: Matrix) -> list[tuple[int, Matrix]]:
    """For each k: ``(det H, det H * (T - B^T H^-1 B))`` where ``H = C[:k, :k]``.

    ``tail^T M_k tail / det H`` is the minimum of ``v^T C v`` over real head
    coordinates ``v[:k]`` with ``v[k:] = tail`` fixed.  These are exactly the
    trailing blocks of Bareiss elimination (Sylvester's identity), so all
    entries stay integral.
    """
    n = len(c)
    m = [list(row) for row in c]
    prev = 1
    out = [(1, [row[:] for row in m])]
    for k in range(n - 1):
        piv = m[k][k]
        m = [
            [(m[i][j] * piv - m[i][k] * m[k][j]) // prev for j in range(n)] if i > k else m[i]
            for i in range(n)
        ]
        prev = piv
        out.append((piv, [row[k + 1:] for row in m[k + 1:]]))
    return out


def enumerate_roots(c: Matrix, box_bound: int = 8) -> list[tuple[int, ...]]:
    """All integer ``v`` with ``v^T C v = 2`` and ``|v_i| <= box_bound``, sorted.

    Exhaustive over the box, with coordinates fixed from last to first and each
    partial vector pruned by the exact minimum of the form over the free
    coordinates.  Raises ``BoxTooSmallError`` when a root touches the box
    boundary or when the box cuts off part of the region ``v^T C v <= 2``.
    """
    n = len(c)
    if any(c[i][j] != c[j][i] for i in range(n) for j in range(n)):
        raise IndefiniteFormError("matrix is not symmetric")
    if not is_positive_definite(c):
        raise IndefiniteFormError("form is not positive definite")
    levels = _scaled_schur_complements(c)
    roots = []
    v = [0] * n

    def descend(k: int, parent: int):
        # Q_k(x) = a x^2 + 2 b x + rest <= 2 delta_k, with x = v[k]; the minimum
        # over real x is delta_k / delta_{k+1} * parent, which fixes rest
        delta, m = levels[k]
        a = m[0][0]
        row = m[0]
        b = sum(row[j] * v[k + j] for j in range(1, n - k))
        rest = (b * b + delta * parent) // a
        disc = b * b - a * (rest - 2 * delta)
        if disc < 0:
            return
        s = isqrt(disc)
        lo = -((b + s) // a)
        hi = (s - b) // a
        if lo < -box_bound or hi > box_bound:
            raise BoxTooSmallError(f"coordinate {k} ranges over [{lo}, {hi}], outside box {box_bound}")
        for x in range(lo, hi + 1):
            v[k] = x
            value = a * x * x + 2 * b * x + rest
            if k:
                descend(k - 1, value)
            elif value == 2:
                roots.append(tuple(v))
        v[k] = 0

    descend(n - 1, 0)
    for r in roots:
        if any(abs(x) == box_bound for x in r):
            raise BoxTooSmallError(f"root {r} touches box boundary {box_bound}")
    return sorted(roots)


def classical_coxeter_number(kind: str, rank: int) -> int:
    """Coxeter number of a simply laced Dynkin diagram."""
    if kind == "A":
        return rank + 1
    if kind == "D":
        return 2 * rank - 2
    return {6: 12, 7: 18, 8: 30}[rank]


def compare_lattices(p, box_bound: int = 8) -> VerificationReport:
    """Brane side against quiver side for a Dynkin weight sequence."""
    name = "lattice_comparison"
    p = as_weights(p)
    g = make_group(p)
    q = build_quiver(g)
    if not p.is_dynkin:
        return VerificationReport.not_applicable(
            name, "weights are not of Dynkin type", quiver_cartan_determinant=determinant(cartan_from_quiver(q))
        )
    coll = build_collection(g, include_e0=False)
    n = len(coll)
    e = euler_matrix(coll)
    c_quiver = cartan_from_quiver(q)
    c_brane = cartan_from_euler(e)
    if c_brane != c_quiver:
        bad = next((i, j) for i in range(n) for j in range(n) if c_brane[i][j] != c_quiver[i][j])
        return VerificationReport.result(
            name, False, {"condition": "cartan", "entry": bad,
                          "brane": c_brane[bad[0]][bad[1]], "quiver": c_quiver[bad[0]][bad[1]]}
        )
    paths = path_matrix(q)
    if symmetrized_euler(e) != matmul(matmul(transpose(paths), c_quiver), paths):
        return VerificationReport.result(name, False, {"condition": "projective_basis_congruence"})
    for i in range(n):
        for j in range(n):
            h = hom_dim(g, coll[i], coll[j])
            if h != paths[i][j]:
                return VerificationReport.result(
                    name, False, {"condition": "hom_vs_paths", "i": i, "j": j, "hom_dim": h, "paths": paths[i][j]}
                )
            x = ext1_dim(g, coll[i], coll[j])
            if x:
                return VerificationReport.result(
                    name, False, {"condition": "ext1", "i": i, "j": j, "ext1_dim": x}
                )
    phi = coxeter_matrix(e)
    if matmul(matmul(transpose(phi), e), phi) != e:
        return VerificationReport.result(name, False, {"condition": "coxeter_isometry"})
    order = matrix_order(phi)
    if order is None:
        return VerificationReport.result(name, False, {"condition": "coxeter_order", "order": None})
    roots = enumerate_roots(c_quiver, box_bound)
    root_set = set(roots)
    phi_s = simple_basis_coxeter(e)
    for r in roots:
        image = tuple(sum(a * x for a, x in zip(row, r)) for row in phi_s)
        if image not in root_set or tuple(-x for x in r) not in root_set:
            return VerificationReport.result(name, False, {"condition": "root_closure", "root": list(r)})
    if len(roots) != n * order:
        return VerificationReport.result(
            name, False, {"condition": "root_count", "roots": len(roots), "rank": n, "order": order}
        )
    return VerificationReport.result(name, True, rank=n, coxeter_order=order, root_count=len(roots))


def simple_basis_coxeter(e: Matrix) -> Matrix:
    """The Coxeter matrix conjugated into the coordinates of ``enumerate_roots``.

    Roots are found for ``cartan_from_euler(E)``, whose basis is dual to the
    collection; there the Coxeter transformation is ``E Phi E^-1 = -E E^-T``.
    """
    return neg(matmul(e, transpose(inverse_unit_upper(e))))

