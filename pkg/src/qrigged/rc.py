"""Unrestricted rigged configurations: vacancy numbers, generalized lower
bounds, enumeration and the cocharge statistic.

A rigged configuration for a multiplicity array L and weight w is a sequence
of partitions nu^(1), ..., nu^(n-1) whose sizes are forced by (L, w), with an
integer rigging on every row.  Riggings of rows of width i in nu^(a) live in
the window [lower bound, vacancy p_i^(a)]; in the unrestricted setting the
lower bound may be negative and, beyond level 1, it is raised by a carried
depth computed from how far the riggings one level down sit below their own
floors (longer rows absorb part of the carried depth).  This characterization
is validated exhaustively against path enumeration by the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterable, Mapping, Optional, Sequence

from .combinat import Composition, partitions_of
from .qalg import IntPolynomial, q_binomial


class InvalidRiggedConfigurationError(ValueError):
    """Raised when riggings violate their windows or sizes do not match."""


@dataclass(frozen=True)
class MultiplicityArray:
    """Counts L_i^{(a)} of tensor factors of rectangular shape a x i.

    Row factors are a = 1.  Stored sparsely: absent means zero.
    """

    counts: tuple[tuple[tuple[int, int], int], ...]
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("rank n must be at least 2")
        norm: dict[tuple[int, int], int] = {}
        items = (self.counts.items() if isinstance(self.counts, Mapping)
                 else self.counts)
        for (a, i), c in items:
            a, i, c = int(a), int(i), int(c)
            if not 1 <= a <= self.n - 1:
                raise ValueError(f"rectangle height {a} out of range 1..{self.n - 1}")
            if i < 1:
                raise ValueError(f"rectangle width {i} must be positive")
            if c < 0:
                raise ValueError("multiplicities must be nonnegative")
            if c:
                norm[(a, i)] = norm.get((a, i), 0) + c
        object.__setattr__(self, "counts",
                           tuple(sorted(norm.items())))

    @staticmethod
    def from_rows(widths: Sequence[int], n: int) -> "MultiplicityArray":
        counts: dict[tuple[int, int], int] = {}
        for w in widths:
            counts[(1, int(w))] = counts.get((1, int(w)), 0) + 1
        return MultiplicityArray(tuple(counts.items()), n)

    def count(self, a: int, i: int) -> int:
        return dict(self.counts).get((a, i), 0)

    def total_boxes(self) -> int:
        return sum(a * i * c for (a, i), c in self.counts)

    def is_row_only(self) -> bool:
        return all(a == 1 for (a, _), _ in self.counts)

    def row_widths(self) -> tuple[int, ...]:
        """Widths of the row factors, descending (row-only arrays)."""
        if not self.is_row_only():
            raise ValueError("multiplicity array has non-row factors")
        widths: list[int] = []
        for (_, i), c in self.counts:
            widths.extend([i] * c)
        return tuple(sorted(widths, reverse=True))

    def level_term(self, a: int, i: int) -> int:
        """Contribution of the tensor factors to p_i^{(a)}:
        sum_j min(i, j) L_j^{(a)}."""
        return sum(min(i, j) * c for (b, j), c in self.counts if b == a)


@dataclass(frozen=True)
class Configuration:
    """Sequence of n-1 partitions (as weakly decreasing tuples)."""

    nu: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        nu = tuple(tuple(int(p) for p in level) for level in self.nu)
        for level in nu:
            if any(p < 1 for p in level):
                raise ValueError("partition parts must be positive")
            if any(level[i] < level[i + 1] for i in range(len(level) - 1)):
                raise ValueError("parts must weakly decrease")
        object.__setattr__(self, "nu", nu)

    def level(self, a: int) -> tuple[int, ...]:
        """Partition nu^{(a)} for 1 <= a <= n-1 (empty beyond)."""
        return self.nu[a - 1] if 1 <= a <= len(self.nu) else ()

    def sizes(self) -> tuple[int, ...]:
        return tuple(sum(level) for level in self.nu)


def _q_i(i: int, partition: Sequence[int]) -> int:
    """Number of boxes in the first i columns: sum_j min(i, mu_j)."""
    return sum(min(i, p) for p in partition)


def vacancy(config: Configuration, L: MultiplicityArray, a: int, i: int) -> int:
    """Vacancy number p_i^{(a)}: the factor term minus the Cartan-matrix
    contraction of the column counts.  May be negative."""
    n = L.n
    if not 1 <= a <= n - 1:
        raise IndexError(f"level {a} out of range 1..{n - 1}")
    if i < 1:
        raise IndexError("column index must be positive")
    p = L.level_term(a, i) - 2 * _q_i(i, config.level(a))
    if a >= 2:
        p += _q_i(i, config.level(a - 1))
    if a <= n - 2:
        p += _q_i(i, config.level(a + 1))
    return p


def weight_of(config: Configuration, L: MultiplicityArray) -> tuple[int, ...]:
    """The weight composition forced by the configuration sizes."""
    n = L.n
    sizes = [sum(config.level(a)) for a in range(1, n)]
    w = []
    for a in range(1, n + 1):
        boxes = sum(min(a, b) * i * c for (b, i), c in L.counts)
        boxes_prev = sum(min(a - 1, b) * i * c for (b, i), c in L.counts)
        s_a = sizes[a - 1] if a <= n - 1 else 0
        s_prev = sizes[a - 2] if a >= 2 else 0
        w.append((boxes - s_a) - (boxes_prev - s_prev))
    return tuple(w)


def configuration_sizes(L: MultiplicityArray, weight: Composition) -> Optional[tuple[int, ...]]:
    """Forced sizes |nu^{(a)}|, or None when some size is negative."""
    n = L.n
    wparts = list(weight.parts) + [0] * (n - len(weight.parts))
    sizes = []
    for a in range(1, n):
        s = sum(min(a, b) * i * c for (b, i), c in L.counts) - sum(wparts[:a])
        if s < 0:
            return None
        sizes.append(s)
    return tuple(sizes)


# ---------------------------------------------------------------------------
# Lower bounds: base floor plus carried depth
# ---------------------------------------------------------------------------

def _base_floor(i: int, weight_parts: Sequence[int], a: int) -> int:
    """-min(i, lambda_{a+1}): the level-a floor before carried depth."""
    lam_next = weight_parts[a] if a < len(weight_parts) else 0
    return -min(i, lam_next)


def _corrections(widths: Iterable[int], prev_depths: Sequence[tuple[int, int]]) -> dict[int, int]:
    """Carried-depth correction per width, from (width, depth) pairs one
    level down; a longer row absorbs (its width - i) units of depth."""
    corr: dict[int, int] = {}
    for i in set(widths):
        corr[i] = max([0] + [d - max(0, w - i) for (w, d) in prev_depths])
    return corr


@dataclass(frozen=True)
class RiggedConfiguration:
    """A configuration with an integer rigging per row.

    ``riggings[a-1][k]`` labels row k of nu^{(a)}; within a block of
    equal-width rows the labels are stored weakly decreasing (the canonical
    representative of the multiset).
    """

    config: Configuration
    riggings: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        riggings = tuple(tuple(int(r) for r in level) for level in self.riggings)
        if len(riggings) != len(self.config.nu):
            raise ValueError("riggings and configuration have different depths")
        canonical = []
        for level, rig in zip(self.config.nu, riggings):
            if len(level) != len(rig):
                raise ValueError("one rigging per row is required")
            pairs = sorted(zip(level, rig), key=lambda t: (-t[0], -t[1]))
            if tuple(w for w, _ in pairs) != level:
                raise ValueError("riggings must align with the sorted partition")
            canonical.append(tuple(r for _, r in pairs))
        object.__setattr__(self, "riggings", tuple(canonical))

    def rigging_sum(self) -> int:
        return sum(sum(level) for level in self.riggings)

    def strings(self, a: int) -> tuple[tuple[int, int], ...]:
        """(width, rigging) pairs of level a, canonical order."""
        return tuple(zip(self.config.level(a), self.riggings[a - 1]))

    def depths(self, L: MultiplicityArray) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Carried depth max(0, correction - rigging) of every string."""
        out = []
        prev: tuple[tuple[int, int], ...] = ()
        for a in range(1, L.n):
            strings = self.strings(a)
            corr = _corrections([w for w, _ in strings], prev)
            level = tuple((w, max(0, corr[w] - x)) for (w, x) in strings)
            prev = level
            out.append(level)
        return tuple(out)

    def __str__(self) -> str:
        levels = []
        for a in range(1, len(self.config.nu) + 1):
            strings = self.strings(a)
            body = " ".join(f"{w}:{r}" for w, r in strings) if strings else "-"
            levels.append(body)
        return " | ".join(levels)


def lower_bound(config: Configuration, L: MultiplicityArray, a: int, row: int) -> int:
    """Lower bound of the rigging window for the given row of nu^{(a)}.

    Computed with the all-singular reference: riggings below level a are
    taken at their vacancy numbers, which minimizes every carried depth
    simultaneously, so the returned value is the least rigging the row can
    take in any valid rigged configuration on this configuration.
    """
    n = L.n
    level = config.level(a)
    if not 0 <= row < len(level):
        raise IndexError(f"level {a} has no row {row}")
    weight_parts = weight_of(config, L)
    prev: tuple[tuple[int, int], ...] = ()
    for b in range(1, a + 1):
        strings = config.level(b)
        corr = _corrections(strings, prev)
        if b == a:
            return _base_floor(level[row], weight_parts, a) + corr[level[row]]
        prev = tuple((w, max(0, corr[w] - vacancy(config, L, b, w)))
                     for w in strings)
    raise AssertionError("unreachable")


def validate(rc: RiggedConfiguration, L: MultiplicityArray,
             weight: Optional[Composition] = None) -> None:
    """Recompute every window and check the riggings sit inside.

    Raises InvalidRiggedConfigurationError on any violation.  External
    input must pass through here; vacancies are never trusted.
    """
    n = L.n
    if len(rc.config.nu) != n - 1:
        raise InvalidRiggedConfigurationError(
            f"expected {n - 1} partitions, got {len(rc.config.nu)}")
    wparts = weight_of(rc.config, L)
    if any(p < 0 for p in wparts):
        raise InvalidRiggedConfigurationError(
            f"configuration sizes force a negative weight: {wparts}")
    if weight is not None:
        declared = tuple(weight.parts) + (0,) * (n - len(weight.parts))
        if declared[:n] != wparts:
            raise InvalidRiggedConfigurationError(
                f"declared weight {declared[:n]} != forced weight {wparts}")
    prev: tuple[tuple[int, int], ...] = ()
    for a in range(1, n):
        strings = rc.strings(a)
        corr = _corrections([w for w, _ in strings], prev)
        for (w, x) in strings:
            p = vacancy(rc.config, L, a, w)
            lo = _base_floor(w, wparts, a) + corr[w]
            if not lo <= x <= p:
                raise InvalidRiggedConfigurationError(
                    f"rigging {x} of a width-{w} row at level {a} "
                    f"violates its window [{lo}, {p}]")
        prev = tuple((w, max(0, corr[w] - x)) for (w, x) in strings)


def _blocks(partition: Sequence[int]) -> list[tuple[int, int]]:
    """(width, multiplicity) pairs, widths descending."""
    out: list[tuple[int, int]] = []
    for p in partition:
        if out and out[-1][0] == p:
            out[-1] = (p, out[-1][1] + 1)
        else:
            out.append((p, 1))
    return out


def _weakly_decreasing_tuples(m: int, lo: int, hi: int):
    if m == 0:
        yield ()
        return
    for first in range(hi, lo - 1, -1):
        for rest in _weakly_decreasing_tuples(m - 1, lo, first):
            yield (first,) + rest


def enumerate_configurations(L: MultiplicityArray, weight: Composition
                             ) -> list[Configuration]:
    """All configurations satisfying the size constraint for (L, weight)."""
    sizes = configuration_sizes(L, weight)
    if sizes is None:
        return []
    out = []
    for nu in iproduct(*[partitions_of(s) for s in sizes]):
        out.append(Configuration(tuple(nu)))
    return out


def enumerate_rc(L: MultiplicityArray, weight: Composition
                 ) -> list[RiggedConfiguration]:
    """All unrestricted rigged configurations for (L, weight).

    Riggings are generated level by level; each level's windows are
    [-min(i, lambda_{a+1}) + carried depth, vacancy].  Canonical
    representatives, deterministic order.
    """
    if len(weight.trimmed()) > L.n:
        raise ValueError("weight has more parts than the rank")
    wparts = tuple(weight.parts) + (0,) * (L.n - len(weight.parts))
    out: list[RiggedConfiguration] = []
    for config in enumerate_configurations(L, weight):
        # states: (riggings so far, (width, depth) pairs of previous level)
        states: list[tuple[list[tuple[int, ...]], tuple[tuple[int, int], ...]]] = [([], ())]
        for a in range(1, L.n):
            blocks = _blocks(config.level(a))
            new_states = []
            for (prefix, prev) in states:
                corr = _corrections([w for w, _ in blocks], prev)
                options: list[list[tuple[int, ...]]] = []
                feasible = True
                for (w, m) in blocks:
                    p = vacancy(config, L, a, w)
                    lo = _base_floor(w, wparts, a) + corr[w]
                    if lo > p:
                        feasible = False
                        break
                    options.append(list(_weakly_decreasing_tuples(m, lo, p)))
                if not feasible:
                    continue
                for combo in iproduct(*options):
                    level: list[int] = []
                    depths: list[tuple[int, int]] = []
                    for (w, m), rigs in zip(blocks, combo):
                        for r in rigs:
                            level.append(r)
                            depths.append((w, max(0, corr[w] - r)))
                    new_states.append((prefix + [tuple(level)], tuple(depths)))
            states = new_states
        for (levels, _) in states:
            out.append(RiggedConfiguration(config, tuple(levels)))
    return out


def cocharge(rc: RiggedConfiguration) -> int:
    """cc(nu, J): the configuration quadratic form plus the rigging sum.

    The quadratic form is sum over levels a and columns c of
    alpha_c^{(a)} (alpha_c^{(a)} - alpha_c^{(a+1)}), alpha = column heights.
    May be negative in the unrestricted setting.
    """
    total = 0
    nlev = len(rc.config.nu)
    for a in range(1, nlev + 1):
        cur = rc.config.level(a)
        nxt = rc.config.level(a + 1)
        width = cur[0] if cur else 0
        for c in range(1, width + 1):
            alpha = sum(1 for p in cur if p >= c)
            alpha_next = sum(1 for p in nxt if p >= c)
            total += alpha * (alpha - alpha_next)
    return total + rc.rigging_sum()


def configuration_charge_form(config: Configuration) -> int:
    """The pure configuration part of cocharge."""
    empty = RiggedConfiguration(config, tuple(tuple(0 for _ in level)
                                              for level in config.nu))
    return cocharge(empty)


def block_generating_function(m: int, lo: int, hi: int) -> IntPolynomial:
    """Generating function (by rigging sum) of weakly decreasing m-tuples
    in [lo, hi]: q^(m*lo) * qbinom(hi - lo + m, m)."""
    if m == 0:
        return IntPolynomial.one()
    if lo > hi:
        return IntPolynomial.zero()
    return q_binomial(hi - lo + m, m).shift(m * lo)


# ---------------------------------------------------------------------------
# JSON forms
# ---------------------------------------------------------------------------

def rc_to_json(rc: RiggedConfiguration, L: MultiplicityArray) -> list[dict]:
    """Array over levels of {partition, riggings, vacancies}; vacancies are
    emitted for inspection and recomputed (never trusted) on input."""
    out = []
    for a in range(1, L.n):
        level = rc.config.level(a)
        out.append({
            "partition": list(level),
            "riggings": list(rc.riggings[a - 1]),
            "vacancies": [vacancy(rc.config, L, a, w) for w in level],
        })
    return out


def rc_from_json(data: Sequence[Mapping], L: MultiplicityArray) -> RiggedConfiguration:
    """Parse and re-validate an externally supplied rigged configuration."""
    if len(data) != L.n - 1:
        raise InvalidRiggedConfigurationError(
            f"expected {L.n - 1} levels, got {len(data)}")
    config = Configuration(tuple(tuple(int(p) for p in level["partition"])
                                 for level in data))
    rc = RiggedConfiguration(config,
                             tuple(tuple(int(r) for r in level["riggings"])
                                   for level in data))
    validate(rc, L)
    return rc
