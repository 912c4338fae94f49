from fractions import Fraction

import pytest

from multbound.bounds import (
    FAIL,
    INAPPLICABLE,
    PASS,
    check_dual_identities,
    evaluate_ideal,
    ideal_hash,
)
from multbound.monomials import Monomial, MonomialIdeal, minimalize
from multbound.simplicial import SimplicialComplex


def ideal(n, *rows):
    return minimalize([Monomial(tuple(r)) for r in rows], n)


def cx(n, *facets):
    return SimplicialComplex.from_facets(n, [frozenset(f) for f in facets])


def verdict(I, name, **kw):
    report = evaluate_ideal(I, (name,), **kw)
    return report.results[name].verdict


class TestUpperBound:
    def test_linear_sequence_tight(self):
        report = evaluate_ideal(ideal(2, (1, 0), (0, 1)), ("c2",))
        assert report.results["c2"].verdict == PASS
        assert report.upper_bound == Fraction(1) and report.tightness == 1

    def test_square_of_maximal_ideal_tight(self):
        report = evaluate_ideal(ideal(2, (2, 0), (1, 1), (0, 2)), ("c2",))
        assert report.results["c2"].verdict == PASS
        assert report.multiplicity == 3 and report.upper_bound == Fraction(3)
        assert report.tightness == 1

    def test_principal_quadric_tight(self):
        report = evaluate_ideal(ideal(2, (1, 1)), ("c2",))
        assert report.results["c2"].verdict == PASS
        assert report.multiplicity == 2 and report.upper_bound == Fraction(2)


class TestTwoSidedBound:
    def test_complete_intersection(self):
        report = evaluate_ideal(ideal(3, (1, 1, 0), (0, 0, 2)), ("c1",))
        assert report.results["c1"].verdict == PASS
        assert report.multiplicity == 4
        assert report.lower_bound == Fraction(4) and report.cohen_macaulay

    def test_linear_sequence(self):
        assert verdict(ideal(2, (1, 0), (0, 1)), "c1") == PASS

    def test_non_cm_inapplicable(self):
        assert verdict(ideal(3, (1, 1, 0), (1, 0, 1)), "c1") == INAPPLICABLE


class TestPureFormula:
    def test_linear_sequence(self):
        assert verdict(ideal(3, (1, 0, 0), (0, 1, 0), (0, 0, 1)), "hm") == PASS

    def test_square_of_maximal_ideal(self):
        assert verdict(ideal(2, (2, 0), (1, 1), (0, 2)), "hm") == PASS

    def test_principal(self):
        assert verdict(ideal(2, (1, 1)), "hm") == PASS

    def test_impure_inapplicable(self):
        assert verdict(ideal(2, (2, 0), (0, 3)), "hm") == INAPPLICABLE


class TestRegularityBinomialBound:
    def test_square_of_maximal_ideal(self):
        report = evaluate_ideal(ideal(2, (2, 0), (1, 1), (0, 2)), ("weak",))
        assert report.results["weak"].verdict == PASS
        assert report.weak_bound == 3 and report.corner == 2

    def test_principal_quadric(self):
        report = evaluate_ideal(ideal(2, (1, 1)), ("weak",))
        assert report.results["weak"].verdict == PASS
        assert report.weak_bound == 2 and report.corner == 1

    def test_linear_sequence(self):
        report = evaluate_ideal(ideal(2, (1, 0), (0, 1)), ("weak",))
        assert report.results["weak"].verdict == PASS
        assert report.weak_bound == 1


class TestShiftLadderHypothesis:
    def test_squarefree_strongly_stable_triangle(self):
        assert verdict(ideal(3, (1, 1, 0), (1, 0, 1), (0, 1, 1)), "hyp") == PASS

    def test_complete_intersection_violates_hypothesis(self):
        assert verdict(ideal(2, (2, 0), (0, 3)), "hyp") == INAPPLICABLE

    def test_linear_sequence(self):
        assert verdict(ideal(3, (1, 0, 0), (0, 1, 0)), "hyp") == PASS


class TestComponentwiseLinearCheck:
    def test_pass(self):
        assert verdict(ideal(2, (1, 0), (0, 3)), "cwl") == PASS

    def test_fail(self):
        assert verdict(ideal(2, (2, 0), (0, 3)), "cwl") == FAIL


class TestDualCheck:
    def test_two_edges(self):
        result = check_dual_identities(cx(3, {1, 3}, {2, 3}))
        assert result.verdict == PASS

    def test_path(self):
        assert check_dual_identities(cx(3, {1, 2}, {2, 3})).verdict == PASS

    def test_full_simplex_inapplicable(self):
        assert check_dual_identities(SimplicialComplex.full(2)).verdict == INAPPLICABLE

    def test_routed_through_squarefree_ideal(self):
        assert verdict(ideal(3, (1, 1, 0)), "dual") == PASS

    def test_non_squarefree_inapplicable(self):
        assert verdict(ideal(2, (2, 0)), "dual") == INAPPLICABLE


class TestReportPlumbing:
    def test_unknown_check_rejected(self):
        with pytest.raises(ValueError):
            evaluate_ideal(ideal(2, (1, 1)), ("nope",))

    def test_unit_ideal_rejected(self):
        with pytest.raises(ValueError):
            evaluate_ideal(MonomialIdeal.unit(2), ("c2",))

    def test_cap_exceeded_marks_inapplicable(self):
        I = ideal(2, (3, 0), (2, 1), (1, 2), (0, 3))
        report = evaluate_ideal(I, ("c2", "weak"), cap=2)
        assert all(r.verdict == INAPPLICABLE for r in report.results.values())
        assert report.pdim is None

    def test_hash_stable(self):
        I = ideal(2, (1, 1))
        assert ideal_hash(I) == ideal_hash(ideal(2, (1, 1)))
        assert ideal_hash(I) != ideal_hash(ideal(2, (2, 0)))

    def test_verdict_text_ordering(self):
        report = evaluate_ideal(ideal(2, (1, 1)), ("weak", "c2"))
        assert report.verdict_text() == "c2=pass|weak=pass"

    def test_zero_ideal_trivial_bounds(self):
        report = evaluate_ideal(MonomialIdeal.zero(2), ("c2", "weak", "c1", "hm"))
        assert not report.any_fail
        assert report.multiplicity == 1 and report.codim == 0
        assert report.upper_bound == Fraction(1)


class TestBoundStrength:
    def test_codim_bound_at_most_cm_upper_bound(self):
        # with every max shift at least its index, the length-c product over
        # c! is dominated by the length-p product over p! on CM quotients
        import random
        from math import factorial, prod

        from multbound.betti import betti_oracle, stats
        from multbound.hilbert import summarize
        from multbound.monomials import minimalize as mk

        rng = random.Random(3)
        checked = 0
        for _ in range(60):
            n = rng.randint(2, 4)
            gens = []
            for _ in range(rng.randint(1, 3)):
                d = rng.randint(1, 3)
                e = [0] * n
                for _ in range(d):
                    e[rng.randrange(n)] += 1
                gens.append(Monomial(tuple(e)))
            I = mk(gens, n)
            st = stats(betti_oracle(I))
            summary = summarize(I)
            if st.pdim != summary.codim:
                continue
            assert all(st.max_shift(i) >= i for i in range(1, st.pdim + 1))
            c, p = summary.codim, st.pdim
            lhs = Fraction(prod(st.max_shifts[:c]), factorial(c))
            rhs = Fraction(prod(st.max_shifts), factorial(p))
            assert lhs <= rhs
            checked += 1
        assert checked >= 20
