"""Generic fermionic multi-sum and bosonic alternating-sum evaluators.

A fermionic spec is a quadratic form over nonnegative lattice vectors with
per-variable q-Pochhammer factors (numerator or denominator) whose lengths
are affine in the summation variables, plus optional affine congruence and
inequality restrictions.  A bosonic spec is a theta-like alternating sum
over one integer index times a product of Pochhammer prefactors.  Both
evaluate to exact TruncatedSeries; enumeration is pruned by exponent lower
bounds, and termination is checked when the spec is constructed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ..qalg import (PochhammerSpec, TruncatedSeries, pochhammer, series_one)


class NonTerminatingSumError(ValueError):
    """Raised when enumeration of a sum would not terminate."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x))


@dataclass(frozen=True)
class AffineForm:
    """constant + sum_i coeffs[i] * n_i with rational coefficients."""

    constant: Fraction
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "constant", _frac(self.constant))
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))

    def __call__(self, point: Sequence[int]) -> Fraction:
        return self.constant + sum(c * x for c, x in zip(self.coeffs, point))


@dataclass(frozen=True)
class PochhammerFactor:
    """(sign * q^exponent ; q^step)_length^power, length affine or infinite."""

    sign: int
    exponent: Fraction
    step: Fraction
    length: Optional[AffineForm]  # None = infinite product
    power: int = -1

    def __post_init__(self):
        object.__setattr__(self, "exponent", _frac(self.exponent))
        object.__setattr__(self, "step", _frac(self.step))
        if self.power not in (1, -1):
            raise ValueError("factor power must be +1 or -1")

    def series(self, point: Sequence[int], order: int) -> TruncatedSeries:
        if self.length is None:
            length = None
        else:
            val = self.length(point)
            if val.denominator != 1 or val < 0:
                raise ValueError(
                    f"Pochhammer length {val} is not a nonnegative integer")
            length = int(val)
        s = pochhammer(PochhammerSpec(self.sign, self.exponent, self.step,
                                      length), order)
        return s if self.power == 1 else s.invert()


@dataclass(frozen=True)
class Congruence:
    """affine(point) must be divisible by modulus."""

    form: AffineForm
    modulus: int

    def satisfied(self, point: Sequence[int]) -> bool:
        v = self.form(point)
        return v.denominator == 1 and int(v) % self.modulus == 0


@dataclass(frozen=True)
class FermionicSumSpec:
    """sum over n in Z_{>=0}^dim of q^{(1/2) n^T A n + b.n + c} * factors.

    A must be symmetric with positive diagonal and nonnegative off-diagonal
    entries (checked on construction; this guarantees only finitely many
    lattice points contribute below any truncation order).
    """

    dim: int
    quadratic: tuple[tuple[Fraction, ...], ...]
    linear: tuple[Fraction, ...]
    constant: Fraction
    factors: tuple[PochhammerFactor, ...] = ()
    congruences: tuple[Congruence, ...] = ()
    inequalities: tuple[AffineForm, ...] = ()  # each must be >= 0

    def __post_init__(self):
        A = tuple(tuple(_frac(x) for x in row) for row in self.quadratic)
        b = tuple(_frac(x) for x in self.linear)
        object.__setattr__(self, "quadratic", A)
        object.__setattr__(self, "linear", b)
        object.__setattr__(self, "constant", _frac(self.constant))
        if self.dim < 0:
            raise ValueError("dim must be nonnegative")
        if len(A) != self.dim or any(len(r) != self.dim for r in A):
            raise ValueError("quadratic matrix has the wrong shape")
        if len(b) != self.dim:
            raise ValueError("linear vector has the wrong length")
        for i in range(self.dim):
            for j in range(self.dim):
                if A[i][j] != A[j][i]:
                    raise ValueError("quadratic matrix must be symmetric")
                if i != j and A[i][j] < 0:
                    raise NonTerminatingSumError(
                        "off-diagonal quadratic entries must be nonnegative")
            if A[i][i] <= 0:
                raise NonTerminatingSumError(
                    f"diagonal entry A[{i}][{i}] <= 0: the exponent does not "
                    "grow and enumeration would not terminate")

    def exponent(self, point: Sequence[int]) -> Fraction:
        q = Fraction(0)
        for i in range(self.dim):
            for j in range(self.dim):
                q += self.quadratic[i][j] * point[i] * point[j]
        return q / 2 + sum(bi * x for bi, x in zip(self.linear, point)) \
            + self.constant

    def _single_min(self, i: int) -> Fraction:
        """min over n >= 0 of (1/2) A_ii n^2 + b_i n (cross terms >= 0)."""
        a = self.quadratic[i][i] / 2
        b = self.linear[i]
        best = Fraction(0)
        n = 1
        while True:
            v = a * n * n + b * n
            if v < best:
                best = v
            if a * n * n + b * n > 0 and v >= best and n > -b / a + 1:
                break
            n += 1
            if n > 10 ** 6:
                raise NonTerminatingSumError("linear term dominates quadratic")
        return best

    def lattice_points(self, bound: Fraction):
        """All points with quadratic+linear part <= bound, restrictions
        applied; deterministic lexicographic order."""
        mins = [self._single_min(i) for i in range(self.dim)]
        suffix_min = [Fraction(0)] * (self.dim + 1)
        for i in range(self.dim - 1, -1, -1):
            suffix_min[i] = suffix_min[i + 1] + mins[i]

        point = [0] * self.dim
        out: list[tuple[int, ...]] = []

        def rec(i: int, partial: Fraction):
            # partial: quadratic+linear over assigned coords (cross terms
            # among assigned included; cross with unassigned are >= 0)
            if i == self.dim:
                if partial <= bound \
                        and all(c.satisfied(point) for c in self.congruences) \
                        and all(f(point) >= 0 for f in self.inequalities):
                    out.append(tuple(point))
                return
            n = 0
            while True:
                point[i] = n
                contrib = self.quadratic[i][i] / 2 * n * n + self.linear[i] * n
                for j in range(i):
                    contrib += self.quadratic[i][j] * point[j] * n
                if contrib + partial + suffix_min[i + 1] > bound:
                    # contributions are increasing in n once positive
                    if contrib >= 0 and n > 0:
                        break
                    if n > 10 ** 6:
                        raise NonTerminatingSumError("enumeration blow-up")
                else:
                    rec(i + 1, partial + contrib)
                n += 1
            point[i] = 0

        rec(0, Fraction(0))
        return out


def eval_fermionic(spec: FermionicSumSpec, order: int) -> TruncatedSeries:
    """Exact coefficients of the fermionic sum to relative order `order`.

    The result covers exponents offset .. offset + order, where the offset
    is the least exponent over contributing lattice points (plus the spec
    constant)."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if spec.dim == 0:
        return series_one(order).shift(spec.constant)
    slack = -sum(min(Fraction(0), spec._single_min(i)) for i in range(spec.dim))
    points = spec.lattice_points(Fraction(order) + slack)
    if not points:
        raise ValueError("no lattice points satisfy the restrictions")
    min_exp = min(spec.exponent(p) for p in points) - spec.constant
    acc: Optional[TruncatedSeries] = None
    frontier = spec.constant + min_exp + order
    for p in points:
        e = spec.exponent(p)
        if e > frontier:
            continue
        term = TruncatedSeries((1,) + (0,) * order, e)
        for f in spec.factors:
            term = term * f.series(p, order)
        term = term.truncate(frontier)
        acc = term if acc is None else (acc + term).truncate(frontier)
    assert acc is not None
    return acc


@dataclass(frozen=True)
class BosonicSumSpec:
    """(sum_{j in Z} (-1)^{parity*j} q^{a2 j^2 + a1 j + a0}) * prefactors.

    a2 must be positive so only finitely many j contribute per order.
    An absent theta part (a2 = None) means the constant series 1.
    """

    parity: int = 1
    a2: Optional[Fraction] = None
    a1: Fraction = Fraction(0)
    a0: Fraction = Fraction(0)
    prefactors: tuple[PochhammerFactor, ...] = ()

    def __post_init__(self):
        if self.a2 is not None:
            object.__setattr__(self, "a2", _frac(self.a2))
            if self.a2 <= 0:
                raise NonTerminatingSumError(
                    "theta quadratic coefficient must be positive")
        object.__setattr__(self, "a1", _frac(self.a1))
        object.__setattr__(self, "a0", _frac(self.a0))
        if self.parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")
        for f in self.prefactors:
            if f.length is not None and f.length.coeffs:
                raise ValueError("bosonic prefactor lengths must be constant")

    def theta_terms(self, bound: Fraction) -> list[tuple[Fraction, int]]:
        """(exponent, sign) pairs with quadratic+linear part <= bound."""
        if self.a2 is None:
            return [(self.a0, 1)]
        out = []
        for direction in (0, 1):
            j = 0 if direction == 0 else -1
            while True:
                e = self.a2 * j * j + self.a1 * j + self.a0
                if e > bound and self.a2 * abs(j) > abs(self.a1):
                    break
                if e <= bound:
                    sign = -1 if (self.parity * j) % 2 else 1
                    out.append((e, sign))
                j = j + 1 if direction == 0 else j - 1
        return sorted(out)


def eval_bosonic(spec: BosonicSumSpec, order: int) -> TruncatedSeries:
    """Exact coefficients of the bosonic sum to relative order `order`."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    slack = abs(spec.a1) * 2 + 1 if spec.a2 is not None else Fraction(0)
    terms = spec.theta_terms(Fraction(order) + spec.a0 + slack)
    min_exp = min(e for e, _ in terms)
    theta: Optional[TruncatedSeries] = None
    frontier = min_exp + order
    for e, sign in terms:
        if e > frontier:
            continue
        t = TruncatedSeries((sign,) + (0,) * order, e).truncate(frontier)
        theta = t if theta is None else (theta + t).truncate(frontier)
    assert theta is not None
    out = theta
    for f in spec.prefactors:
        out = out * f.series((), order)
    return out.truncate(out.offset + order)


@dataclass(frozen=True)
class SeriesComparison:
    equal: bool
    checked_frontier: Fraction
    first_difference: Optional[Fraction] = None
    left_coefficient: Optional[int] = None
    right_coefficient: Optional[int] = None

    def as_dict(self) -> dict:
        out = {"equal": self.equal,
               "checked_order": str(self.checked_frontier)}
        if not self.equal:
            out["first_difference"] = {
                "exponent": str(self.first_difference),
                "left": self.left_coefficient,
                "right": self.right_coefficient,
            }
        return out


def compare_series(a: TruncatedSeries, b: TruncatedSeries) -> SeriesComparison:
    """Equality verdict to the minimum guaranteed order, with the first
    discrepancy (exponent and both coefficients) on failure."""
    frontier = min(a.frontier, b.frontier)
    if a.same_series(b):
        return SeriesComparison(True, frontier)
    diff = a - b
    bad = min(e for e, c in diff.nonzero_terms())
    return SeriesComparison(False, frontier, bad,
                            a.coefficient(bad), b.coefficient(bad))
