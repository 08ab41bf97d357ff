#!/usr/bin/env python3
"""Worst-case hub-spoke families for the prediction follower.

Two hub vertices are joined by a perfectly predicted bridge.  Every spoke
vertex hangs off both hubs with identical predictions, so the follower must
commit to one side per spoke before any truth arrives; the construction
then prices the chosen side at 2k+1 and the other side at 1.

The measured ratio matches 1 + (2 - 2/(l+1)) * epsilon exactly, so pushing
the spoke count l makes the follower approach the 1 + 2*epsilon ceiling.
"""

from fractions import Fraction

from wmst import error_report, ftp, gen_ftp_lb, gftp, run_cost

print(f"{'k':>4} {'l':>4} {'opt':>6} {'cost':>8} {'eta':>6} {'eps':>5} "
      f"{'ratio':>8} {'1+(2-2/(l+1))eps':>18}")
for k in (2, 3, 5, 10):
    for l in (1, 2, 8, 32):
        instance, natural, defeating = gen_ftp_lb(k, l)
        report = error_report(instance)
        cost = run_cost(ftp(), instance, natural.edge_ids)
        ratio = cost / report.opt_actual
        closed = 1 + (2 - Fraction(2, l + 1)) * report.epsilon
        assert ratio == closed
        print(f"{k:>4} {l:>4} {str(report.opt_actual):>6} {str(cost):>8} "
              f"{str(report.eta):>6} {str(report.epsilon):>5} "
              f"{float(ratio):>8.4f} {str(closed):>18}")

print()
print("The greedy swapper escapes this family under most orders, but an")
print("adversary that reveals the predicted tree first leaves it nothing")
print("to swap against:")
instance, natural, defeating = gen_ftp_lb(3, 3)
follower = run_cost(ftp(), instance, natural.edge_ids)
pinned = run_cost(gftp(), instance, defeating.edge_ids)
print(f"  follower cost = {follower}, swapper cost under tree-first order = {pinned}")
assert follower == pinned
