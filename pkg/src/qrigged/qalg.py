"""Exact arithmetic kernel: Laurent polynomials in q, truncated power series,
Gaussian binomials and q-Pochhammer symbols.

All coefficients are arbitrary-precision integers.  Fractional powers of q
are handled by a rational global offset together with a uniform step 1/d,
never by rational coefficients.  Every value is immutable; every operation
is a pure function.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Mapping, Optional, Union


class NonInvertibleSeriesError(ValueError):
    """Raised when a truncated series has no unit leading coefficient."""


class DivergentProductError(ValueError):
    """Raised for a q-Pochhammer product that is not a valid formal series."""


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class IntPolynomial:
    """Sparse Laurent polynomial in q with integer coefficients.

    Stored as a mapping exponent -> nonzero coefficient; exponents may be
    negative.  The zero polynomial is the empty mapping.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, int], Iterable[tuple[int, int]], None] = None):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        clean: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int):
                raise TypeError(f"exponent must be an integer, got {e!r}")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self._terms = dict(sorted(clean.items()))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial()

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial({0: 1})

    @staticmethod
    def monomial(exponent: int, coefficient: int = 1) -> "IntPolynomial":
        return IntPolynomial({exponent: coefficient})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exponent(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def max_exponent(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def degree(self) -> Optional[int]:
        return self.max_exponent()

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    def coefficient_list(self) -> list[int]:
        """Dense coefficients from min to max exponent (empty for zero)."""
        if not self._terms:
            return []
        lo, hi = min(self._terms), max(self._terms)
        return [self._terms.get(e, 0) for e in range(lo, hi + 1)]

    def is_palindromic(self) -> bool:
        cs = self.coefficient_list()
        return cs == cs[::-1]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return IntPolynomial(out)

    def shift(self, exponent: int) -> "IntPolynomial":
        """Multiply by q^exponent."""
        return IntPolynomial({e + exponent: c for e, c in self._terms.items()})

    def reverse(self) -> "IntPolynomial":
        """Substitute q -> 1/q."""
        return IntPolynomial({-e: c for e, c in self._terms.items()})

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    # -- rendering ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"IntPolynomial({self._terms!r})"

    def __str__(self) -> str:
        return self.render()

    def render(self) -> str:
        """Canonical text form, terms in increasing exponent.

        Examples: ``0``, ``1 + 2*q^2 - q^3``, ``q^-1 + 1``.
        """
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self._terms.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                qpow = "q" if e == 1 else f"q^{e}"
                body = qpow if mag == 1 else f"{mag}*{qpow}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> list[list[object]]:
        """Canonical JSON form: [exponent, coefficient-as-string] pairs."""
        return [[e, str(c)] for e, c in self._terms.items()]

    @staticmethod
    def from_json(pairs: Iterable[Iterable[object]]) -> "IntPolynomial":
        return IntPolynomial({int(e): int(str(c)) for e, c in pairs})


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a + b


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a * b


# ---------------------------------------------------------------------------
# Gaussian binomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _qbinom(m: int, k: int) -> IntPolynomial:
    if k < 0 or k > m:
        return IntPolynomial.zero()
    if k == 0 or k == m:
        return IntPolynomial.one()
    # q-Pascal: [m,k] = [m-1,k-1] + q^k [m-1,k]
    return _qbinom(m - 1, k - 1) + _qbinom(m - 1, k).shift(k)


def q_binomial(m: int, k: int) -> IntPolynomial:
    """Gaussian binomial [m choose k]_q, by the q-Pascal recurrence.

    Returns the zero polynomial when k < 0 or k > m.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _qbinom(m, int(k))


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------

def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series q^offset * sum_{i=0..order} coeffs[i] * q^(i*step).

    ``order`` is the guaranteed truncation index: coefficients are exact for
    all exponents up to offset + order*step (and implicitly zero below the
    offset).  Binary operations return the minimum guaranteed range; nothing
    is ever silently padded with zeros.

    ``step`` is 1/d for a positive integer d; fractional powers of q are
    represented only through ``offset`` and ``step``.
    """

    coeffs: tuple[int, ...]
    offset: Fraction = Fraction(0)
    step: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "offset", _as_fraction(self.offset))
        object.__setattr__(self, "step", _as_fraction(self.step))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        if self.step <= 0 or self.step.numerator != 1:
            raise ValueError("step must be 1/d for a positive integer d")

    # -- inspection --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def frontier(self) -> Fraction:
        """Largest exponent whose coefficient is guaranteed."""
        return self.offset + self.order * self.step

    def coefficient(self, exponent) -> int:
        """Exact coefficient of q^exponent; errors beyond the frontier."""
        e = _as_fraction(exponent)
        if e > self.frontier:
            raise ValueError(f"exponent {e} beyond guaranteed order {self.frontier}")
        if e < self.offset:
            return 0
        idx = (e - self.offset) / self.step
        if idx.denominator != 1:
            return 0
        return self.coeffs[int(idx)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def nonzero_terms(self) -> list[tuple[Fraction, int]]:
        return [(self.offset + i * self.step, c)
                for i, c in enumerate(self.coeffs) if c]

    # -- normalization helpers ----------------------------------------------

    def _rescaled(self, step: Fraction, offset: Fraction, order: int) -> "TruncatedSeries":
        """Re-express on the grid offset + i*step, i = 0..order (exact)."""
        out = [0] * (order + 1)
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.offset + i * self.step
            idx = (e - offset) / step
            if idx.denominator != 1:
                raise ValueError("incompatible step refinement")
            j = int(idx)
            if 0 <= j <= order:
                out[j] += c
        return TruncatedSeries(tuple(out), offset, step)

    @staticmethod
    def _common_grid(a: "TruncatedSeries", b: "TruncatedSeries"):
        d = lcm(a.step.denominator, b.step.denominator,
                (a.offset - b.offset).denominator)
        return Fraction(1, d)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        step = self._common_grid(self, other)
        offset = min(self.offset, other.offset)
        frontier = min(self.frontier, other.frontier)
        order = int((frontier - offset) / step)
        if order < 0:
            raise ValueError("no overlapping guaranteed range")
        a = self._rescaled(step, offset, order)
        b = other._rescaled(step, offset, order)
        return TruncatedSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)),
                               offset, step)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.offset, self.step)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        d = lcm(self.step.denominator, other.step.denominator)
        step = Fraction(1, d)
        sa = self._rescaled(step, self.offset, int((self.frontier - self.offset) / step))
        sb = other._rescaled(step, other.offset, int((other.frontier - other.offset) / step))
        order = min(sa.order, sb.order)
        out = [0] * (order + 1)
        for i, c1 in enumerate(sa.coeffs):
            if not c1 or i > order:
                continue
            for j in range(0, order - i + 1):
                c2 = sb.coeffs[j]
                if c2:
                    out[i + j] += c1 * c2
        return TruncatedSeries(tuple(out), self.offset + other.offset, step)

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires leading coefficient +/-1."""
        lead = self.coeffs[0]
        if lead not in (1, -1):
            raise NonInvertibleSeriesError(
                f"non-invertible series: leading coefficient {lead} is not a unit")
        n = self.order
        inv = [0] * (n + 1)
        inv[0] = lead
        for k in range(1, n + 1):
            acc = 0
            for j in range(1, k + 1):
                acc += self.coeffs[j] * inv[k - j]
            inv[k] = -lead * acc
        return TruncatedSeries(tuple(inv), -self.offset, self.step)

    def scalar(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries(tuple(c * x for x in self.coeffs), self.offset, self.step)

    def shift(self, exponent) -> "TruncatedSeries":
        """Multiply by q^exponent."""
        return TruncatedSeries(self.coeffs, self.offset + _as_fraction(exponent), self.step)

    def truncate(self, frontier) -> "TruncatedSeries":
        """Restrict the guarantee to exponents <= frontier."""
        f = _as_fraction(frontier)
        if f >= self.frontier:
            return self
        order = int((f - self.offset) / self.step)
        if order < 0:
            raise ValueError("truncation below the series offset")
        return TruncatedSeries(self.coeffs[:order + 1], self.offset, self.step)

    # -- comparison / rendering --------------------------------------------

    def same_series(self, other: "TruncatedSeries") -> bool:
        """Coefficientwise equality on the shared guaranteed range."""
        step = self._common_grid(self, other)
        offset = min(self.offset, other.offset)
        frontier = min(self.frontier, other.frontier)
        order = int((frontier - offset) / step)
        a = self._rescaled(step, offset, order)
        b = other._rescaled(step, offset, order)
        return a.coeffs == b.coeffs

    def __str__(self) -> str:
        terms = []
        for e, c in self.nonzero_terms():
            estr = "" if e == 0 else ("*q" if e == 1 else f"*q^{e}")
            terms.append(f"{c}{estr}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.frontier + self.step})"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_invert(s: TruncatedSeries) -> TruncatedSeries:
    return s.invert()


def series_one(order: int, step: Fraction = Fraction(1)) -> TruncatedSeries:
    return TruncatedSeries((1,) + (0,) * order, Fraction(0), step)


def series_from_poly(p: IntPolynomial, order: int) -> TruncatedSeries:
    """Exact truncation of a Laurent polynomial.

    The offset is the minimal exponent of p (0 for the zero polynomial);
    the result guarantees coefficients for offset .. offset+order.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    lo = p.min_exponent() or 0
    coeffs = [p.coefficient(lo + i) for i in range(order + 1)]
    return TruncatedSeries(tuple(coeffs), Fraction(lo))


# ---------------------------------------------------------------------------
# q-Pochhammer symbols
# ---------------------------------------------------------------------------

INFINITE = None  # sentinel for infinite product length


@dataclass(frozen=True)
class PochhammerSpec:
    """The symbol (sign * q^exponent ; q^step)_length.

    ``length`` is a nonnegative integer or None for an infinite product,
    in which case ``exponent`` must be positive so the product converges
    as a formal series.
    """

    sign: int = 1
    exponent: Fraction = Fraction(1)
    step: Fraction = Fraction(1)
    length: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "exponent", _as_fraction(self.exponent))
        object.__setattr__(self, "step", _as_fraction(self.step))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.step <= 0:
            raise ValueError("step must be positive")
        if self.length is None and self.exponent <= 0:
            raise DivergentProductError(
                "infinite q-Pochhammer product requires a positive exponent")
        if self.length is not None and self.length < 0:
            raise ValueError("length must be nonnegative")


def pochhammer(spec: PochhammerSpec, order: int) -> TruncatedSeries:
    """Expand (sign*q^r; q^m)_n = prod_k (1 - sign*q^(r+k*m)) to order `order`.

    `order` is in exponents of q; the result's step is refined as needed to
    hold the rational exponents exactly.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    d = lcm(spec.exponent.denominator, spec.step.denominator)
    step = Fraction(1, d)
    n_idx = int(Fraction(order) / step)
    out = series_one(n_idx, step)
    k = 0
    while True:
        if spec.length is not None and k >= spec.length:
            break
        e = spec.exponent + k * spec.step
        if spec.length is None and e > order:
            break
        factor_coeffs = [0] * (n_idx + 1)
        factor_coeffs[0] = 1
        idx = e / step
        if 0 <= int(idx) <= n_idx and idx.denominator == 1:
            factor_coeffs[int(idx)] += -spec.sign
        elif e <= order:
            raise AssertionError("factor exponent fell off the grid")
        out = out * TruncatedSeries(tuple(factor_coeffs), Fraction(0), step)
        k += 1
    return out


def pochhammer_qq(length: Optional[int], order: int) -> TruncatedSeries:
    """Convenience for (q; q)_length (length None = infinity)."""
    return pochhammer(PochhammerSpec(1, Fraction(1), Fraction(1), length), order)
