#!/usr/bin/env python3
"""Random arrival orders separate the two players.

The follower never reacts to revealed truth, so shuffling the arrival order
changes nothing for it.  The greedy swapper fixes a spoke whenever the
cheap side arrives before its expensive sibling, which happens with
probability 1/2 per spoke, so its expected cost sits well below the
follower's on the same family.

On three edges the expectation can be enumerated exactly; larger spoke
counts use Monte Carlo with a seeded generator.
"""

from fractions import Fraction

from wmst import (
    exact_expectation,
    ftp,
    gen_ro_lb,
    gftp,
    harmonic_bound,
    mc_estimate,
    ratio_report,
    run_cost,
)

print("exact enumeration, k=2 delta=1/2 with a single spoke (6 orders):")
instance = gen_ro_lb(2, Fraction(1, 2), 1)
swapper = exact_expectation(gftp, instance)
follower = exact_expectation(ftp, instance)
print(f"  swapper expectation = {swapper}, follower = {follower}")

print()
print("Monte Carlo sweep, k=4 delta=1/2, 20000 trials per row:")
print(f"{'spokes':>7} {'player':>7} {'mean':>9} {'stderr':>8} {'ratio':>7} "
      f"{'1+e':>7} {'1+(1+ln2)e':>11} {'1+2e':>7}")
for spokes in (1, 5, 20):
    family = gen_ro_lb(4, Fraction(1, 2), spokes)
    for factory in (ftp, gftp):
        est = mc_estimate(factory, family, trials=20_000, seed=spokes)
        rep = ratio_report(est, factory().name)
        flag = "  <-- over budget!" if rep.exceeds_ln2_bound else ""
        print(f"{spokes:>7} {factory().name:>7} {est.mean_cost:>9.3f} "
              f"{est.std_error:>8.4f} {est.ratio:>7.3f} {est.bound_1e:>7.3f} "
              f"{est.bound_ln2:>11.3f} {est.bound_2e:>7.3f}{flag}")

print()
print("the swapper's budget constant comes from a partial harmonic sum that")
print("climbs toward 1 + ln 2 ~ 1.6931:")
for n in (2, 3, 10, 100, 10_000):
    print(f"  n={n:>6}: {float(harmonic_bound(n)):.6f}")
