"""Graded pieces of R(p) = k[x0, x1, x2] / (x0^p0 + x1^p1 + x2^p2).

Coefficients are exact rationals.  Polynomials are sparse maps from exponent
triples to nonzero ``Fraction`` coefficients.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Mapping, Sequence

from .grading import C, Degree, GradingGroup, WeightSequence, as_weights, normalize

RING_VARS = ("x0", "x1", "x2")
ABSTRACT_VARS = ("x", "y", "z")


class InvalidMonomialError(ValueError):
    pass


class PolynomialSyntaxError(ValueError):
    pass


class Polynomial:
    """Polynomial in three variables with exact rational coefficients."""

    __slots__ = ("terms", "names")

    def __init__(self, terms: Mapping[tuple, object] | None = None, names: Sequence[str] = RING_VARS):
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or any(e < 0 for e in exps):
                raise InvalidMonomialError(f"invalid exponents {exps!r}")
            coeff = Fraction(coeff)
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
        self.terms = {e: c for e, c in clean.items() if c}
        self.names = tuple(names)

    @classmethod
    def monomial(cls, exps, coeff=1, names=RING_VARS) -> "Polynomial":
        return cls({tuple(exps): coeff}, names)

    @classmethod
    def constant(cls, value, names=RING_VARS) -> "Polynomial":
        return cls({(0, 0, 0): value}, names)

    @classmethod
    def variable(cls, s: int, names=RING_VARS) -> "Polynomial":
        e = [0, 0, 0]
        e[s] = 1
        return cls({tuple(e): 1}, names)

    def _like(self, terms) -> "Polynomial":
        return Polynomial(terms, self.names)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(other, self.names)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.names)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return self._like(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute(self, values: Sequence["Polynomial"]) -> "Polynomial":
        """Replace the three variables by the given polynomials."""
        names = values[0].names
        out = Polynomial({}, names)
        for exps, coeff in self.terms.items():
            term = Polynomial.constant(coeff, names)
            for v, k in zip(values, exps):
                if k:
                    term = term * v**k
            out = out + term
        return out

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self, key=None):
        key = key or (lambda e: (sum(e), e))
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_polynomial(poly: Polynomial, key=None) -> str:
    if not poly.terms:
        return "0"
    pieces = []
    for exps, coeff in poly.sorted_terms(key):
        factors = []
        mag = abs(coeff)
        monomial = [n if k == 1 else f"{n}^{k}" for n, k in zip(poly.names, exps) if k]
        if mag != 1 or not monomial:
            factors.append(str(mag))
        factors.extend(monomial)
        body = "*".join(factors)
        if not pieces:
            pieces.append(("-" if coeff < 0 else "") + body)
        else:
            pieces.append((" - " if coeff < 0 else " + ") + body)
    return "".join(pieces)


_TERM_SPLIT = re.compile(r"([+-])")
_NUMBER = re.compile(r"^\d+(/\d+)?$")


def parse_polynomial(text: str, names: Sequence[str] = RING_VARS) -> Polynomial:
    """Parse ``coef*x0^a*x1^b*x2^c + ...``; ``*`` and ``^`` are mandatory."""
    src = re.sub(r"\s+", "", text)
    if not src:
        raise PolynomialSyntaxError("empty polynomial")
    index = {n: i for i, n in enumerate(names)}
    tokens = _TERM_SPLIT.split(src)
    if tokens[0] == "":
        tokens = tokens[1:]
    else:
        tokens = ["+"] + tokens
    if len(tokens) % 2:
        raise PolynomialSyntaxError(f"dangling sign in {text!r}")
    out: dict = {}
    for sign, body in zip(tokens[::2], tokens[1::2]):
        if not body:
            raise PolynomialSyntaxError(f"empty term in {text!r}")
        coeff = Fraction(-1 if sign == "-" else 1)
        exps = [0, 0, 0]
        for factor in body.split("*"):
            if _NUMBER.match(factor):
                coeff *= Fraction(factor)
                continue
            name, caret, power = factor.partition("^")
            if name not in index:
                raise PolynomialSyntaxError(f"unknown factor {factor!r} in {text!r}")
            if caret and not power.isdigit():
                raise PolynomialSyntaxError(f"bad exponent in {factor!r}")
            exps[index[name]] += int(power) if power else 1
        key = tuple(exps)
        out[key] = out.get(key, 0) + coeff
    return Polynomial(out, names)


def defining_polynomial(p) -> Polynomial:
    """``f = x0^p0 + x1^p1 + x2^p2``."""
    p = as_weights(p)
    return Polynomial({(p.p0, 0, 0): 1, (0, p.p1, 0): 1, (0, 0, p.p2): 1})


def degree_of_monomial(g: GradingGroup, exponents) -> Degree:
    e = tuple(exponents)
    if len(e) != 3 or any(k < 0 for k in e):
        raise InvalidMonomialError(f"invalid monomial exponents {e!r}")
    return normalize(g, Degree(e[0], e[1], e[2], 0))


def homogeneous_degree(g: GradingGroup, poly: Polynomial) -> Degree | None:
    """The common L(p)-degree of all monomials, or None if inhomogeneous or zero."""
    degrees = {degree_of_monomial(g, e) for e in poly.terms}
    return degrees.pop() if len(degrees) == 1 else None


def monomial_count(g: GradingGroup, x) -> int:
    """Number of monomials of k[x0, x1, x2] of degree ``x``."""
    l = normalize(g, x).m
    return comb(l + 2, 2) if l >= 0 else 0


def graded_dim(g: GradingGroup, x) -> int:
    """``dim R(p)_x``, from the exact sequence ``0 -> S(x - c) -f-> S(x) -> R(x) -> 0``."""
    return monomial_count(g, x) - monomial_count(g, Degree(*x) - C)


def order_key(p: WeightSequence):
    """Monomial order: L(p)-degree first (as a weighted total degree), then lex x0 > x1 > x2.

    All terms of f tie on the first component, so the lex tie-break makes
    ``x0^p0`` the leading term of f.
    """
    w = lcm(*p)
    scale = tuple(w // ps for ps in p)

    def key(e):
        return (sum(k * s for k, s in zip(e, scale)), e)

    return key


def reduce_mod_f(p, poly: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Divide by f; returns ``(remainder, cofactor)`` with ``poly = cofactor*f + remainder``.

    No monomial of the remainder is divisible by ``x0^p0``.
    """
    p = as_weights(p)
    f = defining_polynomial(p)
    key = order_key(p)
    work = dict(poly.terms)
    remainder: dict = {}
    cofactor: dict = {}
    while work:
        lead = max(work, key=key)
        coeff = work[lead]
        if lead[0] >= p.p0:
            shift = (lead[0] - p.p0, lead[1], lead[2])
            cofactor[shift] = cofactor.get(shift, 0) + coeff
            for fe, fc in f.terms.items():
                e = (shift[0] + fe[0], shift[1] + fe[1], shift[2] + fe[2])
                v = work.get(e, 0) - coeff * fc
                if v:
                    work[e] = v
                else:
                    work.pop(e, None)
        else:
            remainder[lead] = coeff
            del work[lead]
    return Polynomial(remainder), Polynomial(cofactor)


def hilbert_Rprime(g: GradingGroup, n_max: int) -> list[int]:
    """``h_n = dim R(p)_{-n*omega}`` for ``0 <= n <= n_max``."""
    if n_max < 0:
        raise ValueError("truncation order must be nonnegative")
    minus_omega = Degree(1, 1, 1, -1)
    return [graded_dim(g, minus_omega.scale(n)) for n in range(n_max + 1)]


def closed_form_series(degrees: Iterable[int], e: int, n_max: int) -> list[int]:
    """Coefficients of ``(1 - t^e) / prod(1 - t^d)`` up to ``t^n_max``."""
    degrees = list(degrees)
    if any(d < 1 for d in degrees) or e < 1:
        raise ValueError("degrees must be positive")
    series = [0] * (n_max + 1)
    series[0] = 1
    if e <= n_max:
        series[e] = -1
    for d in degrees:
        # divide by (1 - t^d): running sum with stride d
        for n in range(d, n_max + 1):
            series[n] += series[n - d]
    return series


def numerator_check(series: Sequence[int], degrees: Iterable[int], e: int) -> int | None:
    """Multiply a truncated series by ``prod(1 - t^d)`` and compare with ``1 - t^e``.

    Returns the first index where they differ, or None.
    """
    n_max = len(series) - 1
    prod = list(series)
    for d in degrees:
        prod = [u - (prod[n - d] if n >= d else 0) for n, u in enumerate(prod)]
    target = [0] * (n_max + 1)
    target[0] = 1
    if e <= n_max:
        target[e] -= 1
    for i, (u, v) in enumerate(zip(prod, target)):
        if u != v:
            return i
    return None
