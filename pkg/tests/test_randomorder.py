"""Random-order lab: exact enumeration, Monte Carlo, harmonic bound."""

import math
import random as pyrandom
from fractions import Fraction
from itertools import permutations

import pytest

from wmst import (
    ArrivalOrder,
    BadParameter,
    RoEstimate,
    TooLarge,
    exact_expectation,
    ftp,
    gen_ro_lb,
    gftp,
    harmonic_bound,
    mc_estimate,
    random_instance,
    ratio_report,
    run,
    run_cost,
    tree_cost,
    mst,
)

F = Fraction


class TestExactExpectation:
    def test_swapper_on_smallest_family(self):
        inst = gen_ro_lb(2, F(1, 2), 1)
        assert exact_expectation(gftp, inst) == F(7, 2)

    def test_matches_manual_enumeration(self):
        inst = gen_ro_lb(2, F(1, 2), 1)
        costs = [
            run(gftp(), inst, ArrivalOrder(order)).cost
            for order in permutations(range(3))
        ]
        assert sum(costs, F(0)) / 6 == F(7, 2)

    def test_swap_happens_in_exactly_half_the_orders(self):
        inst = gen_ro_lb(2, F(1, 2), 1)
        swaps = 0
        for order in permutations(range(3)):
            trace = run(gftp(), inst, ArrivalOrder(order))
            swaps += any(s.decision.swapped_out is not None for s in trace.steps)
        assert swaps == 3

    def test_follower_is_order_invariant(self):
        inst = random_instance(4, F(7, 10), F(1), seed=2)
        fixed = run_cost(ftp(), inst, range(inst.m))
        assert exact_expectation(ftp, inst) == fixed

    def test_perfect_predictions_give_opt(self):
        inst = random_instance(4, F(7, 10), F(0), seed=3)
        opt = tree_cost(mst(inst.graph, inst.actual), inst.actual)
        assert exact_expectation(gftp, inst) == opt

    def test_guard_refuses_ten_edges(self):
        inst = random_instance(5, F(1), F(0), seed=0)  # complete K5, m=10
        with pytest.raises(TooLarge):
            exact_expectation(ftp, inst)

    def test_matches_analytic_formula_on_two_spokes(self):
        # each spoke swaps exactly when its cheap side precedes its
        # sibling, a probability-1/2 event, so by linearity the exact
        # expectation is delta + spokes*(k+1)
        k, delta, spokes = 3, F(1, 2), 2
        inst = gen_ro_lb(k, delta, spokes)
        assert exact_expectation(gftp, inst) == delta + spokes * (k + 1)


class TestMonteCarlo:
    def test_single_trial_equals_that_run(self):
        inst = gen_ro_lb(2, F(1, 2), 3)
        seed = 17
        est = mc_estimate(gftp, inst, trials=1, seed=seed)
        ids = list(range(inst.m))
        pyrandom.Random(seed).shuffle(ids)
        assert est.mean_cost == float(run_cost(gftp(), inst, ids))
        assert est.std_error == 0.0

    def test_follower_has_zero_variance(self):
        inst = gen_ro_lb(3, F(1, 2), 2)
        est = mc_estimate(ftp, inst, trials=200, seed=4)
        assert est.std_error == 0.0
        assert est.mean_cost == float(run_cost(ftp(), inst, range(inst.m)))

    def test_converges_to_exact_value(self):
        inst = gen_ro_lb(2, F(1, 2), 1)
        est = mc_estimate(gftp, inst, trials=100_000, seed=11)
        exact = float(exact_expectation(gftp, inst))
        assert abs(est.mean_cost - exact) <= 4 * max(est.std_error, 1e-12)

    def test_seed_determinism(self):
        inst = gen_ro_lb(2, F(1, 2), 4)
        a = mc_estimate(gftp, inst, trials=500, seed=9)
        b = mc_estimate(gftp, inst, trials=500, seed=9)
        assert a == b

    def test_worker_split_is_deterministic(self):
        inst = gen_ro_lb(2, F(1, 2), 4)
        a = mc_estimate(gftp, inst, trials=400, seed=9, workers=2)
        b = mc_estimate(gftp, inst, trials=400, seed=9, workers=2)
        assert a == b
        assert a.trials == 400

    def test_trials_guard(self):
        inst = gen_ro_lb(2, F(1, 2), 1)
        with pytest.raises(BadParameter):
            mc_estimate(gftp, inst, trials=0, seed=1)


class TestHarmonicBound:
    def test_small_values(self):
        assert harmonic_bound(2) == F(3, 2)  # 1 + 1/2
        assert harmonic_bound(3) == F(19, 12)  # 1 + 1/4 + 1/3

    def test_guard(self):
        with pytest.raises(BadParameter):
            harmonic_bound(1)

    def test_increasing_and_bounded_sample(self):
        limit = 1 + F(693_148, 1_000_000)  # just above ln 2
        previous = harmonic_bound(2)
        for n in range(3, 400):
            current = harmonic_bound(n)
            assert previous < current < limit
            previous = current

    def test_increment_identity(self):
        # consecutive values differ by exactly 1/(2n(2n-1))
        for n in (2, 3, 10, 57, 200):
            delta = harmonic_bound(n + 1) - harmonic_bound(n)
            assert delta == F(1, 2 * n * (2 * n - 1))


class TestRatioReport:
    def _estimate(self, ratio: float, std_error: float) -> RoEstimate:
        eps = F(2)
        return RoEstimate(
            mean_cost=ratio * 10.0,
            std_error=std_error,
            trials=100,
            opt=F(10),
            eta=F(20),
            epsilon=eps,
            ratio=ratio,
            bound_1e=3.0,
            bound_ln2=1.0 + (1.0 + math.log(2.0)) * 2.0,
            bound_2e=5.0,
        )

    def test_swapper_above_bound_is_flagged(self):
        est = self._estimate(ratio=4.9, std_error=0.001)
        assert ratio_report(est, "gftp").exceeds_ln2_bound

    def test_swapper_within_noise_is_not_flagged(self):
        est = self._estimate(ratio=4.4, std_error=0.2)
        assert not ratio_report(est, "gftp").exceeds_ln2_bound

    def test_follower_is_never_flagged(self):
        est = self._estimate(ratio=4.9, std_error=0.001)
        assert not ratio_report(est, "ftp").exceeds_ln2_bound

    def test_real_sweep_sits_between_curves(self):
        k, delta, spokes = 4, F(1, 2), 5
        inst = gen_ro_lb(k, delta, spokes)
        est = mc_estimate(gftp, inst, trials=4_000, seed=3)
        rep = ratio_report(est, "gftp")
        assert not rep.exceeds_ln2_bound
        # the family's exact expectation is opt + spokes*k, i.e. a ratio of
        # 1 + (1 - delta/(spokes+delta)) * k
        expected = float(1 + F(spokes * k) / (spokes + delta))
        assert abs(est.ratio - expected) <= 4 * est.std_error / float(est.opt)
        assert est.ratio < est.bound_2e


class TestExpectationOnSpokes:
    def test_mean_matches_per_spoke_half_swap(self):
        # each spoke swaps with probability 1/2: E = delta + l*(k+1)
        inst = gen_ro_lb(2, F(1, 2), 20)
        est = mc_estimate(gftp, inst, trials=20_000, seed=29)
        expected = 0.5 + 20 * 3.0
        assert abs(est.mean_cost - expected) <= 3 * est.std_error
