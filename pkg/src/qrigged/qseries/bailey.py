"""Bailey pairs and one application of the Bailey lemma.

A Bailey pair relative to the base a = q^k is a pair of sequences with
beta_n = sum_{j<=n} alpha_j / ((q;q)_{n-j} (aq;q)_{n+j}).  `bailey_step`
produces a new pair from parameters rho, sigma, each a finite power of q or
the symbolic infinity; both regimes share one code path through the
multiplier triple (A, T, D).  The n -> infinity limit of the stepped pair's
defining relation is the weak lemma, exposed as `weak_lemma`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from ..qalg import (PochhammerSpec, TruncatedSeries, pochhammer, series_one)


class InsufficientOrderError(ValueError):
    """Raised when a pair does not guarantee the order an operation needs."""


class Infinity:
    """Symbolic infinite Bailey parameter."""

    _instance: Optional["Infinity"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = Infinity()
BaileyParam = Fraction | Infinity


def _monomial(exponent: Fraction, order: int, sign: int = 1) -> TruncatedSeries:
    """sign * q^exponent as a series guaranteed to relative order `order`."""
    return TruncatedSeries((sign,) + (0,) * order, Fraction(exponent))


@dataclass(frozen=True)
class BaileyPair:
    """Coefficient sequences (alpha, beta) relative to a = q^base_exponent.

    alpha and beta are callables (n, order) -> TruncatedSeries producing the
    exact n-th entry to the requested order.  ``order`` is the guaranteed
    truncation order (None for closed-form pairs exact at any order).
    """

    base_exponent: Fraction
    alpha: Callable[[int, int], TruncatedSeries]
    beta: Callable[[int, int], TruncatedSeries]
    order: Optional[int] = None
    name: str = "pair"

    def require_order(self, order: int) -> None:
        if self.order is not None and order > self.order:
            raise InsufficientOrderError(
                f"{self.name}: requires order {order}, "
                f"but only order {self.order} is guaranteed")


@dataclass(frozen=True)
class PairCheck:
    valid: bool
    order: int
    checked_n: int
    failing_n: Optional[int] = None
    failing_exponent: Optional[Fraction] = None

    def as_dict(self) -> dict:
        out = {"valid": self.valid, "order": self.order,
               "checked_n": self.checked_n}
        if not self.valid:
            out["failing_n"] = self.failing_n
            out["failing_exponent"] = str(self.failing_exponent)
        return out


def _poch_qq(length: Optional[int], order: int) -> TruncatedSeries:
    return pochhammer(PochhammerSpec(1, Fraction(1), Fraction(1), length), order)


def _poch_shifted(exponent: Fraction, length: Optional[int], order: int) -> TruncatedSeries:
    """(q^exponent; q)_length."""
    return pochhammer(PochhammerSpec(1, Fraction(exponent), Fraction(1), length), order)


def verify_bailey_pair(pair: BaileyPair, order: int,
                       max_n: Optional[int] = None) -> PairCheck:
    """Check the defining relation coefficientwise up to `order`.

    Verifies n = 0 .. max_n (default: order).  Reports the first failing n
    and the first differing exponent.
    """
    pair.require_order(order)
    k = pair.base_exponent
    nmax = order if max_n is None else max_n
    for n in range(nmax + 1):
        lhs = pair.beta(n, order)
        rhs = None
        for j in range(n + 1):
            term = pair.alpha(j, order) \
                * _poch_qq(n - j, order).invert() \
                * _poch_shifted(1 + k, n + j, order).invert()
            rhs = term if rhs is None else rhs + term
        if not lhs.same_series(rhs):
            # locate the first differing exponent on the common grid
            diff = lhs - rhs
            bad = min((e for e, c in diff.nonzero_terms()), default=None)
            return PairCheck(False, order, n, failing_n=n, failing_exponent=bad)
    return PairCheck(True, order, nmax)


def unit_bailey_pair(base_exponent: Fraction = Fraction(0)) -> BaileyPair:
    """alpha_n = delta_{n,0}; beta_n = 1/((q;q)_n (aq;q)_n)."""
    k = Fraction(base_exponent)

    def alpha(n: int, order: int) -> TruncatedSeries:
        if n == 0:
            return series_one(order)
        return TruncatedSeries((0,) * (order + 1))

    def beta(n: int, order: int) -> TruncatedSeries:
        return (_poch_qq(n, order) * _poch_shifted(1 + k, n, order)).invert()

    return BaileyPair(k, alpha, beta, None, "unit")


def rogers_ramanujan_seed() -> BaileyPair:
    """The classical pair relative to a = 1 used for the Rogers-Ramanujan
    chain: beta_n = 1/(q;q)_n and alpha_n = (-1)^n (q^{n(3n-1)/2} +
    q^{n(3n+1)/2}) for n >= 1, alpha_0 = 1."""

    def alpha(n: int, order: int) -> TruncatedSeries:
        if n == 0:
            return series_one(order)
        sign = 1 if n % 2 == 0 else -1
        e1 = Fraction(n * (3 * n - 1), 2)
        e2 = Fraction(n * (3 * n + 1), 2)
        return _monomial(e1, order, sign) + _monomial(e2, order, sign)

    def beta(n: int, order: int) -> TruncatedSeries:
        return _poch_qq(n, order).invert()

    return BaileyPair(Fraction(0), alpha, beta, None, "rogers-ramanujan-seed")


def _multiplier(k: Fraction, rho: BaileyParam, sigma: BaileyParam):
    """The Bailey-lemma multiplier triple (A, T, D).

    A(j, order): the combined factor (rho)_j (sigma)_j (aq/rho sigma)^j in
    its finite or limiting form; T(m, order): (aq/rho sigma; q)_m or 1;
    D(n, order): (aq/rho)_n (aq/sigma)_n restricted to finite parameters.
    """
    finite = [p for p in (rho, sigma) if not isinstance(p, Infinity)]
    ninf = 2 - len(finite)
    for r in finite:
        if 1 + k - r <= 0:
            raise ValueError(
                f"parameter q^{r} is out of range for base q^{k}: "
                f"aq/param = q^{1 + k - r} must have positive exponent")

    def a_factor(j: int, order: int) -> TruncatedSeries:
        # limit of prod (p)_j over infinite params * (aq/rho sigma)^j
        exp = j * (1 + k - sum(finite))
        exp += ninf * Fraction(j * (j - 1), 2)
        sign = 1 if (ninf * j) % 2 == 0 else -1
        out = _monomial(Fraction(exp), order, sign)
        for r in finite:
            out = out * _poch_shifted(r, j, order)
        return out

    def t_factor(m: int, order: int) -> TruncatedSeries:
        if ninf:
            return series_one(order)
        return _poch_shifted(1 + k - sum(finite), m, order)

    def d_factor(n: int, order: int) -> TruncatedSeries:
        out = series_one(order)
        for r in finite:
            out = out * _poch_shifted(1 + k - r, n, order)
        return out

    return a_factor, t_factor, d_factor


def bailey_step(pair: BaileyPair, rho: BaileyParam, sigma: BaileyParam,
                verify_order: Optional[int] = None) -> BaileyPair:
    """One link of the Bailey chain.

    Produces the transformed pair relative to the same base; when
    ``verify_order`` is given the output is re-checked by
    `verify_bailey_pair` to that order before being returned.
    """
    k = pair.base_exponent
    a_factor, t_factor, d_factor = _multiplier(k, rho, sigma)

    def alpha(n: int, order: int) -> TruncatedSeries:
        return a_factor(n, order) * d_factor(n, order).invert() \
            * pair.alpha(n, order)

    def beta(n: int, order: int) -> TruncatedSeries:
        acc = None
        for j in range(n + 1):
            term = a_factor(j, order) * t_factor(n - j, order) \
                * _poch_qq(n - j, order).invert() * pair.beta(j, order)
            acc = term if acc is None else acc + term
        return acc * d_factor(n, order).invert()

    stepped = BaileyPair(k, alpha, beta, pair.order,
                         f"step({pair.name}; {rho}, {sigma})")
    if verify_order is not None:
        pair.require_order(verify_order)
        check = verify_bailey_pair(stepped, verify_order)
        if not check.valid:
            raise AssertionError(
                f"bailey_step produced an invalid pair at n={check.failing_n}")
    return stepped


def weak_lemma(pair: BaileyPair, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """The n -> infinity identity of the pair:

        sum_n a^n q^{n^2} beta_n  =  (1/(aq;q)_inf) sum_n a^n q^{n^2} alpha_n

    Returns (lhs, rhs) to the requested order; equality certifies the
    identity to that order.
    """
    pair.require_order(order)
    k = pair.base_exponent

    def summed(coefficient: Callable[[int, int], TruncatedSeries]) -> TruncatedSeries:
        acc = None
        n = 0
        while True:
            lead = n * n + k * n
            if n > 0 and lead > order:
                break
            term = _monomial(Fraction(lead), order) * coefficient(n, order)
            acc = term if acc is None else acc + term
            n += 1
        return acc.truncate(Fraction(order))

    lhs = summed(pair.beta)
    rhs = summed(pair.alpha) * _poch_shifted(1 + k, None, order).invert()
    return lhs, rhs.truncate(Fraction(order))
