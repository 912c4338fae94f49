import random

import pytest

from multbound.betti import betti_oracle
from multbound.hilbert import hilbert_function, summarize
from multbound.koszul import (
    almost_regular_suffix,
    koszul_strands,
    reduction_report,
)
from multbound.monomials import Monomial, MonomialIdeal, minimalize, strongly_stable_closure


def ideal(n, *rows):
    return minimalize([Monomial(tuple(r)) for r in rows], n)


class TestStrands:
    def test_zero_ideal_full_sequence(self):
        table = koszul_strands(MonomialIdeal.zero(2), 2, 4)
        # full Koszul complex resolves the residue field: H_0 = K in degree 0
        assert table.dims == {(0, 0): 1}

    def test_full_sequence_recovers_betti(self):
        I = ideal(2, (2, 0), (1, 1), (0, 2))
        table = koszul_strands(I, 2, 5)
        assert table.dims == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
        assert not table.truncated

    def test_single_variable_strand_is_shifted_annihilator(self):
        I = ideal(2, (2, 0), (1, 1))
        table = koszul_strands(I, 1, 5)
        row = {(i, j): v for (i, j), v in table.dims.items() if i == 1}
        assert row == {(1, 2): 1}

    def test_h0_is_killed_quotient_hilbert_function(self):
        rng = random.Random(3)
        for _ in range(15):
            n = rng.randint(2, 4)
            gens = [Monomial(tuple(rng.randint(0, 2) for _ in range(n))) for _ in range(3)]
            I = minimalize([g for g in gens if g.degree], n)
            k = rng.randint(1, n - 1)
            bound = 5
            table = koszul_strands(I, k, bound)
            killed = I.kill_variables(set(range(n - k + 1, n + 1)))
            hf = hilbert_function(killed, bound)
            for j in range(bound + 1):
                assert table.dim(0, j) == hf[j]

    def test_full_sequence_vs_oracle_random(self):
        rng = random.Random(5)
        for _ in range(15):
            n = rng.randint(2, 3)
            gens = [Monomial(tuple(rng.randint(0, 2) for _ in range(n))) for _ in range(3)]
            I = minimalize([g for g in gens if g.degree], n)
            if I.is_zero:
                continue
            top = I.max_gen_degree + n + 1
            table = koszul_strands(I, n, top)
            oracle = betti_oracle(I)
            strand_entries = {key: v for key, v in table.dims.items()}
            assert strand_entries == dict(oracle.entries)

    def test_extension_is_monotone(self):
        I = ideal(3, (2, 0, 0), (1, 1, 0), (0, 3, 0))
        small = koszul_strands(I, 2, 3)
        large = koszul_strands(I, 2, 6)
        for (i, j), v in small.dims.items():
            assert large.dims[(i, j)] == v
        for (i, j), v in large.dims.items():
            if j <= 3:
                assert small.dims.get((i, j), 0) == v

    def test_truncated_flag(self):
        artinian = ideal(2, (2, 0), (1, 1), (0, 2))
        assert not koszul_strands(artinian, 2, 5).truncated
        assert koszul_strands(artinian, 2, 2).truncated
        positive_dim = ideal(2, (1, 1))
        assert koszul_strands(positive_dim, 1, 8).truncated

    def test_bad_arguments(self):
        I = ideal(2, (1, 1))
        with pytest.raises(ValueError):
            koszul_strands(I, 0, 3)
        with pytest.raises(ValueError):
            koszul_strands(I, 3, 3)
        with pytest.raises(ValueError):
            koszul_strands(MonomialIdeal.unit(2), 1, 3)


class TestAlmostRegularSuffix:
    def test_borel_square_in_three_vars(self):
        I = ideal(3, (2, 0, 0), (1, 1, 0), (0, 2, 0))
        assert almost_regular_suffix(I) == 3

    def test_quadric_blocks_immediately(self):
        assert almost_regular_suffix(ideal(2, (1, 1))) == 0

    def test_zero_ideal_fully_regular(self):
        assert almost_regular_suffix(MonomialIdeal.zero(4)) == 4


class TestReductionReport:
    def test_borel_square(self):
        I = ideal(3, (2, 0, 0), (1, 1, 0), (0, 2, 0))
        r = reduction_report(I)
        assert r.applicable
        assert r.max_shifts == (2, 3) and r.reduced_max_shifts == (2, 3)
        assert r.strand_max_1 == 2 and r.strand_max_2 == 3
        assert r.multiplicity == 3 and r.reduced_multiplicity == 3
        assert r.all_hold
        # one reduction step, killing x3 which is regular here
        assert len(r.steps) == 1
        step = r.steps[0]
        assert step.variable == 3 and step.annihilator_length == 0
        assert step.dim_law and step.mult_law

    def test_borel_non_cm_example(self):
        I = ideal(3, (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 3, 0))
        r = reduction_report(I)
        assert r.applicable and r.all_hold
        assert r.multiplicity <= r.reduced_multiplicity

    def test_two_variables_trivial(self):
        I = ideal(2, (1, 0), (0, 1))
        r = reduction_report(I)
        assert r.applicable and r.steps == ()
        assert r.max_shifts == r.reduced_max_shifts
        assert r.all_hold

    def test_wrong_codimension_inapplicable(self):
        r = reduction_report(ideal(3, (1, 1, 0)))
        assert not r.applicable and "codimension" in r.reason

    def test_non_almost_regular_inapplicable(self):
        # triangle edge ideal: codimension 2, but the annihilator of x3
        # contains every power of x1, so the suffix is not almost regular
        I = ideal(3, (1, 1, 0), (1, 0, 1), (0, 1, 1))
        assert summarize(I).codim == 2
        r = reduction_report(I)
        assert not r.applicable and "annihilator" in r.reason

    def test_json_round_trip_fields(self):
        I = ideal(3, (2, 0, 0), (1, 1, 0), (0, 2, 0))
        payload = reduction_report(I).to_json()
        assert payload["applicable"] is True
        assert payload["max_shifts"] == [2, 3]
        assert payload["strand_max_2"] == payload["strand_max_1"] + 1
        assert payload["steps"][0]["variable"] == 3
        assert payload["all_hold"] is True

    def test_strand_identity_on_borel_closures(self):
        rng = random.Random(7)
        found = 0
        for _ in range(40):
            n = rng.randint(2, 4)
            seeds = [Monomial(tuple(rng.randint(0, 2) for _ in range(n))) for _ in range(2)]
            seeds = [s for s in seeds if s.degree]
            if not seeds:
                continue
            I = strongly_stable_closure(seeds, n)
            if len(I.gens) > 18 or summarize(I).codim != 2:
                continue
            r = reduction_report(I)
            if not r.applicable:
                continue
            assert r.all_hold, f"reduction laws failed on {I}"
            found += 1
        assert found >= 5
