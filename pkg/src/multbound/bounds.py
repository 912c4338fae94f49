"""Multiplicity bound checks.

Every comparison is exact: integers are cross-multiplied (e * c! against
the product of maximal shifts) and never rounded.  Checks report one of
three verdicts: pass, fail, or inapplicable (hypotheses not met).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod

from . import hilbert
from .betti import (
    OracleCapError,
    ResolutionStats,
    betti_oracle,
    is_componentwise_linear,
    stats,
)
from .monomials import MonomialIdeal, ideal_to_json
from .simplicial import SimplicialComplex, complex_of_ideal, stanley_reisner_ideal

PASS = "pass"
FAIL = "fail"
INAPPLICABLE = "inapplicable"

# canonical ordering for reports and CSV verdict columns
CHECK_NAMES = ("c2", "c1", "hm", "weak", "hyp", "cwl", "dual")


@dataclass(frozen=True)
class CheckResult:
    name: str
    verdict: str
    detail: str = ""


def ideal_hash(ideal: MonomialIdeal) -> str:
    payload = json.dumps(ideal_to_json(ideal), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:12]


@dataclass
class BoundReport:
    """All bound-related quantities of one quotient, with check verdicts."""

    ideal_id: str
    n: int
    num_gens: int
    max_gen_degree: int
    multiplicity: int | None = None
    codim: int | None = None
    pdim: int | None = None
    reg: int | None = None
    max_shifts: tuple[int, ...] = ()
    min_shifts: tuple[int, ...] = ()
    upper_bound: Fraction | None = None
    lower_bound: Fraction | None = None
    weak_bound: int | None = None
    corner: int | None = None
    cohen_macaulay: bool | None = None
    tightness: Fraction | None = None
    results: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def any_fail(self) -> bool:
        return any(r.verdict == FAIL for r in self.results.values())

    def verdict_text(self) -> str:
        ordered = [n for n in CHECK_NAMES if n in self.results]
        return "|".join(f"{n}={self.results[n].verdict}" for n in ordered)


def check_upper_bound_codim(summary: hilbert.HilbertSummary, st: ResolutionStats) -> CheckResult:
    """e * c! <= product of the first c maximal shifts (c = codim)."""
    c = summary.codim
    if c > st.pdim:
        raise AssertionError("codimension exceeds the projective dimension")
    bound = prod(st.max_shifts[:c])
    ok = summary.multiplicity * factorial(c) <= bound
    detail = f"e={summary.multiplicity}, codim={c}, prod M_1..M_c={bound}"
    return CheckResult("c2", PASS if ok else FAIL, detail)


def check_two_sided_bound_cm(
    summary: hilbert.HilbertSummary, st: ResolutionStats, cm: bool
) -> CheckResult:
    """prod m_i / p! <= e <= prod M_i / p! for Cohen-Macaulay quotients."""
    if not cm:
        return CheckResult("c1", INAPPLICABLE, "quotient is not Cohen-Macaulay")
    p = st.pdim
    lower = prod(st.min_shifts)
    upper = prod(st.max_shifts)
    scaled = summary.multiplicity * factorial(p)
    ok = lower <= scaled <= upper
    detail = f"prod m={lower} <= e*p!={scaled} <= prod M={upper}"
    return CheckResult("c1", PASS if ok else FAIL, detail)


def check_pure_multiplicity_formula(
    summary: hilbert.HilbertSummary, st: ResolutionStats, cm: bool
) -> CheckResult:
    """Huneke-Miller: e = (prod of the pure shift degrees) / p! exactly,
    for Cohen-Macaulay quotients with a pure resolution."""
    if not cm:
        return CheckResult("hm", INAPPLICABLE, "quotient is not Cohen-Macaulay")
    if not st.pure:
        return CheckResult("hm", INAPPLICABLE, "resolution is not pure")
    degrees = st.pure_degrees or ()
    ok = summary.multiplicity * factorial(st.pdim) == prod(degrees)
    detail = f"e*p!={summary.multiplicity * factorial(st.pdim)}, prod d={prod(degrees)}"
    return CheckResult("hm", PASS if ok else FAIL, detail)


def check_regularity_binomial_bound(
    summary: hilbert.HilbertSummary, st: ResolutionStats
) -> CheckResult:
    """codim <= corner index of the regularity row, and
    e <= C(reg + codim, codim)."""
    c = summary.codim
    bound = comb(st.reg + c, c)
    ok = c <= st.corner and summary.multiplicity <= bound
    detail = f"codim={c} vs corner={st.corner}; e={summary.multiplicity} vs C(reg+c,c)={bound}"
    return CheckResult("weak", PASS if ok else FAIL, detail)


def check_shift_ladder_hypothesis(
    summary: hilbert.HilbertSummary, st: ResolutionStats
) -> CheckResult:
    """When every maximal shift up to the codimension equals reg + i,
    the codimension upper bound must hold (and is re-checked)."""
    c = summary.codim
    holds = all(st.max_shift(i) == st.reg + i for i in range(1, c + 1))
    if not holds:
        return CheckResult("hyp", INAPPLICABLE, "maximal shifts do not sit on the regularity row")
    inner = check_upper_bound_codim(summary, st)
    return CheckResult("hyp", inner.verdict, "hypothesis holds; " + inner.detail)


def check_componentwise_linear(ideal: MonomialIdeal, cap: int) -> CheckResult:
    ok = is_componentwise_linear(ideal, cap)
    return CheckResult("cwl", PASS if ok else FAIL, "componentwise linear" if ok else "a truncation has excess regularity")


def check_dual_identities(complex_: SimplicialComplex, cap: int = 18) -> CheckResult:
    """The three Alexander duality identities: multiplicity equals the
    count of minimal generators of least degree on the dual side, the
    codimension equals the dual initial degree, and the projective
    dimension equals the dual regularity."""
    if complex_.is_void or complex_.is_full_simplex:
        return CheckResult("dual", INAPPLICABLE, "requires a proper complex")
    ideal = stanley_reisner_ideal(complex_)
    dual_ideal = stanley_reisner_ideal(complex_.alexander_dual())
    summary = hilbert.summarize(ideal)
    st = stats(betti_oracle(ideal, cap))
    dual_table = betti_oracle(dual_ideal, cap).to_ideal()
    initial = dual_ideal.min_gen_degree
    count_initial = sum(1 for g in dual_ideal.gens if g.degree == initial)
    dual_reg = max(j - i for (i, j) in dual_table.entries)
    ok_mult = summary.multiplicity == count_initial
    ok_codim = summary.codim == initial
    ok_pdim = st.pdim == dual_reg
    ok = ok_mult and ok_codim and ok_pdim
    detail = (
        f"e={summary.multiplicity} vs b0(dual initial)={count_initial}; "
        f"codim={summary.codim} vs a(dual)={initial}; "
        f"pdim={st.pdim} vs reg(dual)={dual_reg}"
    )
    return CheckResult("dual", PASS if ok else FAIL, detail)


def evaluate_ideal(
    ideal: MonomialIdeal,
    checks: tuple[str, ...] = ("c2", "c1", "hm", "weak"),
    cap: int = 18,
    complex_for_dual: SimplicialComplex | None = None,
) -> BoundReport:
    """Run the named checks against one proper ideal and assemble the
    report; shared invariants are computed once."""
    for name in checks:
        if name not in CHECK_NAMES:
            raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECK_NAMES)}")
    if ideal.is_unit:
        raise ValueError("the unit ideal has no bound report")
    report = BoundReport(
        ideal_id=ideal_hash(ideal),
        n=ideal.n,
        num_gens=len(ideal.gens),
        max_gen_degree=ideal.max_gen_degree,
    )
    summary = hilbert.summarize(ideal)
    report.multiplicity = summary.multiplicity
    report.codim = summary.codim
    try:
        table = betti_oracle(ideal, cap)
    except OracleCapError as exc:
        for name in checks:
            report.results[name] = CheckResult(name, INAPPLICABLE, str(exc))
        return report
    st = stats(table)
    cm = st.pdim == summary.codim
    report.pdim = st.pdim
    report.reg = st.reg
    report.max_shifts = st.max_shifts
    report.min_shifts = st.min_shifts
    report.corner = st.corner
    report.cohen_macaulay = cm
    report.weak_bound = comb(st.reg + summary.codim, summary.codim)
    bound_product = prod(st.max_shifts[: summary.codim])  # empty product is 1
    report.upper_bound = Fraction(bound_product, factorial(summary.codim))
    report.tightness = Fraction(summary.multiplicity * factorial(summary.codim), bound_product)
    if cm:
        report.lower_bound = Fraction(prod(st.min_shifts), factorial(st.pdim))
    for name in checks:
        if name == "c2":
            report.results[name] = check_upper_bound_codim(summary, st)
        elif name == "c1":
            report.results[name] = check_two_sided_bound_cm(summary, st, cm)
        elif name == "hm":
            report.results[name] = check_pure_multiplicity_formula(summary, st, cm)
        elif name == "weak":
            report.results[name] = check_regularity_binomial_bound(summary, st)
        elif name == "hyp":
            report.results[name] = check_shift_ladder_hypothesis(summary, st)
        elif name == "cwl":
            report.results[name] = check_componentwise_linear(ideal, cap)
        elif name == "dual":
            if complex_for_dual is not None:
                report.results[name] = check_dual_identities(complex_for_dual, cap)
            elif ideal.is_squarefree and not ideal.is_zero:
                report.results[name] = check_dual_identities(complex_of_ideal(ideal), cap)
            else:
                report.results[name] = CheckResult(
                    "dual", INAPPLICABLE, "duality identities need a squarefree proper ideal"
                )
    return report
