#!/usr/bin/env python3
"""Adaptive adversaries that fix true weights as decisions come in.

First game: a triangle where every edge predicts 1.  The first reveal costs
k; the adversary prices the last edge depending on the response.  Whatever
the opponent does, its cost ratio cannot be bounded by any function of the
min/max-gap error measure, which is why that measure is unusable here.

Second game: a unit path plus star centers tied to every path vertex with
rising predictions.  Each accept makes the next star edge cheap, each
reject makes it expensive, so every online player loses 2k-1 per star
against the offline optimum.
"""

from wmst import (
    error_report,
    ftp,
    gen_eta2_game,
    gen_general_lb_game,
    gftp,
    mst,
    tree_cost,
)

print("triangle game, follower opponent (accepts the k-priced edge):")
print(f"{'k':>6} {'alg':>8} {'opt':>5} {'ratio':>10} {'minmax gap':>11}")
k = 2
while k <= 512:
    game = gen_eta2_game(k, 10 * k, ftp())
    report = error_report(game.instance)
    ratio = game.trace.cost / report.opt_actual
    print(f"{k:>6} {str(game.trace.cost):>8} {str(report.opt_actual):>5} "
          f"{float(ratio):>10.2f} {str(report.eta2):>11}")
    k *= 4
print("  -> ratio grows without bound while the gap measure stays 0")

print()
print("path-star game, per-star penalty for both players:")
print(f"{'k':>3} {'stars':>6} {'player':>7} {'cost':>6} {'opt':>5} "
      f"{'gap':>5} {'stars*(2k-1)':>13} {'eta':>5}")
for k in (2, 3, 5):
    for stars in (1, 3):
        for factory in (ftp, gftp):
            game = gen_general_lb_game(k, stars, factory())
            instance = game.instance
            opt = tree_cost(mst(instance.graph, instance.actual), instance.actual)
            gap = game.trace.cost - opt
            report = error_report(instance)
            print(f"{k:>3} {stars:>6} {factory().name:>7} {str(game.trace.cost):>6} "
                  f"{str(opt):>5} {str(gap):>5} {stars * (2 * k - 1):>13} "
                  f"{str(report.eta):>5}")
