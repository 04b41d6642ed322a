"""Partitions, Schur functor dimensions, and checks of equivariant resolution formats."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .resolution import GradedFormat

Partition = tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(x) for x in parts)
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def schur_dimension(lam: Sequence[int], n: int) -> int:
    """``dim S_lam(k^n)`` by the hook-content formula."""
    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    cols = conjugate(lam)
    value = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = (row - j - 1) + (cols[j] - i - 1) + 1
            value *= Fraction(n + j - i, hook)
    assert value.denominator == 1
    return int(value)


@dataclass(frozen=True)
class Summand:
    f_shape: Partition
    g_shape: Partition
    twist: int


@dataclass(frozen=True)
class EquivariantFormat:
    """Per homological degree, summands ``S_lam F (x) S_mu G (x) A(-twist)``."""

    name: str
    dim_f: int
    dim_g: int
    degrees: tuple[tuple[Summand, ...], ...]

    def __post_init__(self) -> None:
        for deg in self.degrees:
            for s in deg:
                if len(s.f_shape) > self.dim_f or len(s.g_shape) > self.dim_g:
                    raise ValueError(f"{s} does not fit dim F = {self.dim_f}, dim G = {self.dim_g}")


@dataclass(frozen=True)
class SummandCheck:
    homological_degree: int
    summand: Summand
    dimension: int
    weight: int
    weight_ok: bool
    corrected_twist: int | None  # only set when the weight rule fails


@dataclass(frozen=True)
class RankCheck:
    homological_degree: int
    twist: int
    expected: int
    as_displayed: int
    after_correction: int


@dataclass
class EquivariantReport:
    name: str
    summands: list[SummandCheck] = field(default_factory=list)
    ranks: list[RankCheck] = field(default_factory=list)

    @property
    def errata(self) -> list[SummandCheck]:
        return [s for s in self.summands if not s.weight_ok]

    @property
    def status(self) -> str:
        """``pass`` when everything holds as displayed; ``erratum`` when every
        failure is a weight-rule violation whose unique corrected twist makes
        all ranks agree; ``fail`` otherwise."""
        raw = all(s.weight_ok for s in self.summands) and all(
            r.as_displayed == r.expected for r in self.ranks
        )
        if raw:
            return "pass"
        fixable = all(s.corrected_twist is not None for s in self.errata) and all(
            r.after_correction == r.expected for r in self.ranks
        )
        return "erratum" if fixable else "fail"

    def lines(self) -> list[str]:
        out = []
        for s in self.summands:
            if s.weight_ok:
                tag = "PASS"
            elif s.corrected_twist is not None:
                tag = f"ERRATUM (twist -{s.summand.twist} should be -{s.corrected_twist})"
            else:
                tag = "FAIL"
            out.append(
                f"F{s.homological_degree}: S{list(s.summand.f_shape)}F x S{list(s.summand.g_shape)}G"
                f"(-{s.summand.twist}) dim={s.dimension} weight={s.weight} {tag}"
            )
        for r in self.ranks:
            tag = "PASS" if r.as_displayed == r.expected else (
                "PASS after correction" if r.after_correction == r.expected else "FAIL"
            )
            out.append(
                f"F{r.homological_degree} rank at twist -{r.twist}: expected {r.expected},"
                f" displayed {r.as_displayed}, corrected {r.after_correction} {tag}"
            )
        return out


def verify_equivariant_format(
    E: EquivariantFormat, F: GradedFormat, weight_per_degree: int = 3
) -> EquivariantReport:
    """Compare an equivariant display with a Betti format.

    Every variable of ``Sym(g_1)`` lies in a third exterior power, so a summand
    ``S_lam F (x) S_mu G (-t)`` must satisfy ``|lam| + |mu| = 3 t``.
    """
    if len(E.degrees) != len(F.twists):
        raise ValueError("homological lengths differ")
    report = EquivariantReport(E.name)
    for i, deg in enumerate(E.degrees):
        displayed: Counter = Counter()
        corrected: Counter = Counter()
        for s in deg:
            dim = schur_dimension(s.f_shape, E.dim_f) * schur_dimension(s.g_shape, E.dim_g)
            weight = sum(s.f_shape) + sum(s.g_shape)
            ok = weight == weight_per_degree * s.twist
            fix = None
            if not ok and weight % weight_per_degree == 0:
                fix = weight // weight_per_degree
            report.summands.append(SummandCheck(i, s, dim, weight, ok, fix))
            displayed[s.twist] += dim
            corrected[s.twist if ok or fix is None else fix] += dim
        expected = Counter(F.twists[i])
        for t in sorted(set(expected) | set(displayed) | set(corrected)):
            report.ranks.append(RankCheck(i, t, expected[t], displayed[t], corrected[t]))
    return report
