"""Koszul homology strands with respect to a suffix of the variables,
almost-regular sequence detection, and the codimension-2 reduction
experiment.

The suffix convention: sequences are taken as x_n, x_{n-1}, ... so that a
length-k Koszul complex uses the last k variables.  For the full suffix
(k = n) the strand dimensions recover the graded Betti numbers of S/I.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import hilbert
from .betti import betti_oracle, stats
from .homology import ExactMatrix, FiniteChainComplex, homology_dims
from .monomials import Monomial, MonomialIdeal, monomials_of_degree


@dataclass(frozen=True)
class KoszulStrandTable:
    """Homology dimensions H_i of the Koszul complex on the last k
    variables, recorded per internal degree j up to degree_bound.  Only
    nonzero dimensions are stored; ``truncated`` is False exactly when all
    strands above the bound provably vanish (the chain groups are empty)."""

    k: int
    dims: dict[tuple[int, int], int]
    degree_bound: int
    truncated: bool

    def dim(self, i: int, j: int) -> int:
        if j > self.degree_bound and self.truncated:
            raise ValueError(f"degree {j} beyond the computed bound {self.degree_bound}")
        return self.dims.get((i, j), 0)

    def row_max(self, i: int) -> int:
        """Largest degree with nonzero H_i, or 0 when the row vanishes."""
        return max((j for (r, j) in self.dims if r == i), default=0)


def koszul_strands(
    ideal: MonomialIdeal, k: int, degree_bound: int, modulus: int | None = None
) -> KoszulStrandTable:
    """Degreewise Koszul homology of S/I with respect to the last k
    variables, for internal degrees up to degree_bound.

    The degree-j strand of level i has basis {(b, F)} with F an i-subset of
    the last k variable indices and x^b a standard monomial of degree j - i.
    """
    n = ideal.n
    if not 1 <= k <= n:
        raise ValueError(f"suffix length {k} out of range 1..{n}")
    if degree_bound < 0:
        raise ValueError("degree bound must be non-negative")
    if ideal.is_unit:
        raise ValueError("the unit ideal has trivial Koszul homology everywhere")
    suffix = list(range(n - k, n))  # 0-based indices of the suffix variables
    standard: dict[int, list[Monomial]] = {
        d: [m for m in monomials_of_degree(n, d) if not ideal.contains(m)]
        for d in range(degree_bound + 1)
    }
    dims: dict[tuple[int, int], int] = {}
    for j in range(degree_bound + 1):
        levels: list[list[tuple[tuple[int, ...], tuple[int, ...]]]] = []
        top = min(k, j)
        for i in range(top + 1):
            level = [
                (m.exponents, subset)
                for subset in combinations(suffix, i)
                for m in standard.get(j - i, [])
            ]
            levels.append(level)
        index = [{basis: pos for pos, basis in enumerate(level)} for level in levels]
        boundaries = []
        for i in range(1, top + 1):
            entries: dict[tuple[int, int], int] = {}
            for col, (b, subset) in enumerate(levels[i]):
                for t, var in enumerate(subset):
                    e = list(b)
                    e[var] += 1
                    target = (tuple(e), subset[:t] + subset[t + 1:])
                    row = index[i - 1].get(target)
                    if row is not None:
                        entries[(row, col)] = -1 if t % 2 else 1
            boundaries.append(ExactMatrix(len(levels[i - 1]), len(levels[i]), entries))
        chain = FiniteChainComplex(tuple(len(level) for level in levels), tuple(boundaries))
        for i, d in enumerate(homology_dims(chain, modulus)):
            if d:
                dims[(i, j)] = d
    summary = hilbert.summarize(ideal)
    truncated = True
    if summary.dim == 0:
        # Artinian quotient: every chain group vanishes in degrees above
        # deg Q + k, so the table is complete once the bound covers that
        top_degree = len(summary.reduced_numerator) - 1
        truncated = top_degree + k > degree_bound
    return KoszulStrandTable(k=k, dims=dims, degree_bound=degree_bound, truncated=truncated)


def almost_regular_suffix(ideal: MonomialIdeal) -> int:
    """Largest t such that x_n, x_{n-1}, ..., x_{n-t+1} is an almost
    regular sequence on S/I, decided exactly through Hilbert series of the
    successive killed quotients."""
    current = ideal
    for step in range(ideal.n):
        last = current.n
        if not hilbert.finite_length_colon(current, last):
            return step
        current = current.kill_variables({last})
    return ideal.n


@dataclass(frozen=True)
class ReductionStep:
    """One variable-killing step R -> R/x R with the dimension and
    multiplicity laws it must satisfy."""

    variable: int
    ring_vars: int
    dim_before: int
    dim_after: int
    mult_before: int
    mult_after: int
    annihilator_length: int
    dim_law: bool | None
    mult_law: bool | None

    def to_json(self) -> dict:
        return {
            "variable": self.variable,
            "ring_vars": self.ring_vars,
            "dim_before": self.dim_before,
            "dim_after": self.dim_after,
            "mult_before": self.mult_before,
            "mult_after": self.mult_after,
            "annihilator_length": self.annihilator_length,
            "dim_law": self.dim_law,
            "mult_law": self.mult_law,
        }


@dataclass(frozen=True)
class ReductionReport:
    """Outcome of reducing a codimension-2 quotient to an Artinian one by
    killing an almost regular suffix of the variables."""

    applicable: bool
    reason: str | None
    n: int
    codim: int | None
    max_shifts: tuple[int, int] | None = None
    reduced_max_shifts: tuple[int, int] | None = None
    strand_max_1: int | None = None
    strand_max_2: int | None = None
    multiplicity: int | None = None
    reduced_multiplicity: int | None = None
    checks: dict[str, bool] = field(default_factory=dict)
    steps: tuple[ReductionStep, ...] = ()

    @property
    def all_hold(self) -> bool:
        if not self.applicable:
            return False
        step_laws = all(
            law
            for s in self.steps
            for law in (s.dim_law, s.mult_law)
            if law is not None
        )
        return step_laws and all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "applicable": self.applicable,
            "reason": self.reason,
            "n": self.n,
            "codim": self.codim,
            "max_shifts": list(self.max_shifts) if self.max_shifts else None,
            "reduced_max_shifts": list(self.reduced_max_shifts) if self.reduced_max_shifts else None,
            "strand_max_1": self.strand_max_1,
            "strand_max_2": self.strand_max_2,
            "multiplicity": self.multiplicity,
            "reduced_multiplicity": self.reduced_multiplicity,
            "checks": dict(self.checks),
            "steps": [s.to_json() for s in self.steps],
            "all_hold": self.all_hold,
        }


def reduction_report(ideal: MonomialIdeal, cap: int = 18) -> ReductionReport:
    """Kill the last n-2 variables of a codimension-2 quotient (when they
    form an almost regular sequence) and compare the maximal shifts, the
    strand maxima of the Artinian reduction, and the multiplicities.

    Inapplicable inputs (codimension != 2, or a suffix variable with an
    infinite-length annihilator) yield a report with applicable=False
    rather than an error.
    """
    n = ideal.n
    summary = hilbert.summarize(ideal)
    if summary.codim != 2:
        return ReductionReport(
            applicable=False,
            reason=f"codimension is {summary.codim}, not 2",
            n=n,
            codim=summary.codim,
        )
    steps: list[ReductionStep] = []
    current = ideal
    before = summary
    for _ in range(n - 2):
        last = current.n
        length = hilbert.annihilator_length(current, last)
        if length is None:
            return ReductionReport(
                applicable=False,
                reason=f"x{last} has an infinite-length annihilator after "
                f"{len(steps)} reduction steps",
                n=n,
                codim=2,
                steps=tuple(steps),
            )
        smaller = current.kill_variables({last})
        after = hilbert.summarize(smaller)
        dim_law = after.dim == before.dim - 1 if before.dim > 0 else None
        if before.dim > 1:
            mult_law = after.multiplicity == before.multiplicity
        elif before.dim == 1:
            mult_law = before.multiplicity == after.multiplicity - length
        else:
            mult_law = None
        steps.append(
            ReductionStep(
                variable=last,
                ring_vars=last,
                dim_before=before.dim,
                dim_after=after.dim,
                mult_before=before.multiplicity,
                mult_after=after.multiplicity,
                annihilator_length=length,
                dim_law=dim_law,
                mult_law=mult_law,
            )
        )
        current, before = smaller, after
    reduced = current
    reduced_summary = before
    big_stats = stats(betti_oracle(ideal, cap))
    small_stats = stats(betti_oracle(reduced, cap))
    max_shifts = (big_stats.max_shift(1), big_stats.max_shift(2))
    reduced_shifts = (small_stats.max_shift(1), small_stats.max_shift(2))
    # the reduction is Artinian, so strands vanish identically above
    # deg(reduced numerator) + k; the bound below is exact, not a truncation
    top_degree = len(reduced_summary.reduced_numerator) - 1
    bound = top_degree + 3
    one_var = koszul_strands(reduced, 1, bound)
    two_vars = koszul_strands(reduced, 2, bound)
    strand_1 = one_var.row_max(1)
    strand_2 = two_vars.row_max(2)
    checks = {
        "reduced_max_shift_1_le": reduced_shifts[0] <= max_shifts[0],
        "reduced_max_shift_2_le": reduced_shifts[1] <= max_shifts[1],
        "strand_identity": strand_2 == strand_1 + 1,
        "multiplicity_le": summary.multiplicity <= reduced_summary.multiplicity,
        "codim_preserved": reduced_summary.codim == 2,
        "strands_match_shifts": (two_vars.row_max(1), strand_2) == reduced_shifts,
    }
    return ReductionReport(
        applicable=True,
        reason=None,
        n=n,
        codim=2,
        max_shifts=max_shifts,
        reduced_max_shifts=reduced_shifts,
        strand_max_1=strand_1,
        strand_max_2=strand_2,
        multiplicity=summary.multiplicity,
        reduced_multiplicity=reduced_summary.multiplicity,
        checks=checks,
        steps=tuple(steps),
    )
