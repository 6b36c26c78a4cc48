"""The exceptional collection of line bundles O(x) on the weighted projective line.

Dimensions are read off the graded ring: ``Hom(O(a), O(b)) = R_{b-a}`` and,
by Serre duality with dualizing element omega,
``Ext^1(O(a), O(b)) = D Hom(O(b), O(a + omega)) = R_{a-b+omega}``.
Higher Ext groups vanish on a curve and are not computed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .grading import C, ZERO, Degree, GradingGroup, dualizing_element, make_group, normalize, unit
from .matrices import Matrix, determinant, is_unit_upper_triangular
from .report import VerificationReport
from .ring import graded_dim


@dataclass(frozen=True)
class ExceptionalCollection:
    group: GradingGroup
    twists: tuple[Degree, ...]
    labels: tuple[str, ...]

    def __len__(self):
        return len(self.twists)

    def __iter__(self):
        return iter(self.twists)

    def __getitem__(self, i):
        return self.twists[i]

    def wire(self) -> list[str]:
        return [t.wire() for t in self.twists]


def twist_label(s: int, k: int) -> str:
    return f"x{s}" if k == 1 else f"{k}x{s}"


def build_collection(p, include_e0: bool = True) -> ExceptionalCollection:
    """``(O, O(x0), ..., O((p0-1)x0), O(x1), ..., O((p2-1)x2), O(c))``."""
    g = p if isinstance(p, GradingGroup) else make_group(p)
    twists = [ZERO] if include_e0 else []
    labels = ["0"] if include_e0 else []
    for s, w in enumerate(g.weights):
        for k in range(1, w):
            twists.append(normalize(g, unit(s, k)))
            labels.append(twist_label(s, k))
    twists.append(C)
    labels.append("c")
    return ExceptionalCollection(g, tuple(twists), tuple(labels))


def custom_collection(p, twists: Sequence) -> ExceptionalCollection:
    """Arbitrary ordered list of twists, e.g. for negative tests."""
    g = p if isinstance(p, GradingGroup) else make_group(p)
    twists = tuple(normalize(g, t) for t in twists)
    return ExceptionalCollection(g, twists, tuple(t.wire() for t in twists))


def hom_dim(g: GradingGroup, a, b) -> int:
    return graded_dim(g, Degree(*b) - Degree(*a))


def ext1_dim(g: GradingGroup, a, b) -> int:
    return graded_dim(g, Degree(*a) - Degree(*b) + dualizing_element(g))


def hom_matrix(coll: ExceptionalCollection) -> Matrix:
    g = coll.group
    return [[hom_dim(g, a, b) for b in coll] for a in coll]


def ext1_matrix(coll: ExceptionalCollection) -> Matrix:
    g = coll.group
    return [[ext1_dim(g, a, b) for b in coll] for a in coll]


def euler_matrix(coll: ExceptionalCollection) -> Matrix:
    """Entries ``dim Hom(E_i, E_j) - dim Ext^1(E_i, E_j)``."""
    homs = hom_matrix(coll)
    exts = ext1_matrix(coll)
    return [[h - e for h, e in zip(hr, er)] for hr, er in zip(homs, exts)]


def check_strong_exceptional(coll: ExceptionalCollection) -> VerificationReport:
    g = coll.group
    name = "strong_exceptional"
    n = len(coll)
    for i in range(n):
        d = hom_dim(g, coll[i], coll[i])
        if d != 1:
            return VerificationReport.result(
                name, False, {"condition": "endomorphisms", "i": i, "twist": coll.labels[i], "hom_dim": d}
            )
    for i in range(n):
        for j in range(i):
            d = hom_dim(g, coll[i], coll[j])
            if d:
                return VerificationReport.result(
                    name,
                    False,
                    {"condition": "backward_hom", "i": i, "j": j,
                     "source": coll.labels[i], "target": coll.labels[j], "hom_dim": d},
                )
    for i in range(n):
        for j in range(n):
            d = ext1_dim(g, coll[i], coll[j])
            if d:
                return VerificationReport.result(
                    name,
                    False,
                    {"condition": "ext1", "i": i, "j": j,
                     "source": coll.labels[i], "target": coll.labels[j], "ext1_dim": d},
                )
    return VerificationReport.result(name, True, length=n)


def check_euler_unimodular(coll: ExceptionalCollection) -> VerificationReport:
    e = euler_matrix(coll)
    ok = is_unit_upper_triangular(e)
    det = determinant(e)
    if ok and det == 1:
        return VerificationReport.result("euler_unit_upper_triangular", True, determinant=det)
    return VerificationReport.result(
        "euler_unit_upper_triangular", False, {"unit_upper_triangular": ok, "determinant": det}
    )
