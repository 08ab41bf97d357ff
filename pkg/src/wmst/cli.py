"""Command-line workbench.

Subcommands: ``gen`` (emit instance families), ``run`` (replay one order),
``ro`` (random-order estimates), ``sweep`` (CSV tables over parameter
grids), ``selftest`` (quick invariant suites).  Every output embeds the
parameters and seeds needed to reproduce it; exit code 0 means all
requested validations passed.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import adversaries, io, metrics, randomorder
from .engine import ALGORITHMS, ArrivalOrder, run
from .exceptions import WmstError
from .graphs import brute_force_mst, exchange_witness, mst, tree_cost
from .rationals import format_fraction, parse_fraction

CSV_COLUMNS = (
    "instance_id,algorithm,trials,seed,mean,stderr,opt,eta,epsilon,ratio,"
    "bound_1e,bound_ln2,bound_2e"
)


def _dec(x: float) -> str:
    return f"{x:.12g}"


def _frac_dec(value: Fraction) -> str:
    return f"{format_fraction(value)} ({_dec(float(value))})"


def _alg_factory(name: str):
    try:
        return ALGORITHMS[name]
    except KeyError:
        raise WmstError(f"unknown algorithm {name!r}; choose from {sorted(ALGORITHMS)}")


def _print_error_report(instance) -> None:
    report = metrics.error_report(instance)
    print(f"eta1 = {_frac_dec(report.eta1)}")
    print(f"eta2 = {_frac_dec(report.eta2)}")
    print(f"eta = {_frac_dec(report.eta)}")
    print(f"opt_actual = {_frac_dec(report.opt_actual)}")
    print(f"opt_predicted = {_frac_dec(report.opt_predicted)}")
    print(f"epsilon = {_frac_dec(report.epsilon)}")


def _sidecar(out: Path, tag: str) -> Path:
    stem = out.name[: -len(out.suffix)] if out.suffix else out.name
    return out.with_name(f"{stem}.{tag}")


def cmd_gen(args) -> int:
    out = Path(args.out if args.out else f"{args.family}.json")
    extras: list[tuple[Path, str]] = []
    if args.family == "ftp-lb":
        instance, _, defeating = adversaries.gen_ftp_lb(args.k, args.l)
        io.save_order(defeating, _sidecar(out, "defeat-order.json"))
        extras.append((_sidecar(out, "defeat-order.json"), "defeating order"))
        config = f"gen ftp-lb k={args.k} l={args.l}"
    elif args.family == "ro-lb":
        instance = adversaries.gen_ro_lb(args.k, args.delta, args.l)
        config = f"gen ro-lb k={args.k} delta={args.delta} l={args.l}"
    elif args.family == "general-lb":
        game = adversaries.gen_general_lb_game(args.k, args.l, _alg_factory(args.alg)())
        instance = game.instance
        io.save_order(game.order, _sidecar(out, "order.json"))
        io.save_trace(game.trace, _sidecar(out, "trace.txt"))
        extras.append((_sidecar(out, "order.json"), "game order"))
        extras.append((_sidecar(out, "trace.txt"), "game trace"))
        config = f"gen general-lb k={args.k} l={args.l} alg={args.alg}"
    elif args.family == "eta2":
        big_k = args.big_k if args.big_k is not None else 10 * args.k
        game = adversaries.gen_eta2_game(args.k, big_k, _alg_factory(args.alg)())
        instance = game.instance
        io.save_order(game.order, _sidecar(out, "order.json"))
        io.save_trace(game.trace, _sidecar(out, "trace.txt"))
        extras.append((_sidecar(out, "order.json"), "game order"))
        extras.append((_sidecar(out, "trace.txt"), "game trace"))
        config = f"gen eta2 k={args.k} big-k={big_k} alg={args.alg}"
    elif args.family == "random":
        instance = adversaries.random_instance(
            args.n, args.edge_prob, args.noise, args.seed
        )
        config = (
            f"gen random n={args.n} edge-prob={args.edge_prob} "
            f"noise={args.noise} seed={args.seed}"
        )
    else:  # pragma: no cover - argparse restricts choices
        raise WmstError(f"unknown family {args.family!r}")
    io.save_instance(instance, out)
    print(f"# config: {config} out={out}")
    print(f"wrote instance to {out}")
    for path, label in extras:
        print(f"wrote {label} to {path}")
    _print_error_report(instance)
    return 0


def _resolve_order(selector: str, m: int) -> ArrivalOrder:
    if selector == "id":
        return ArrivalOrder.identity(m)
    if selector.startswith("seed:"):
        return ArrivalOrder.shuffled(m, int(selector[len("seed:"):]))
    if selector.startswith("given:"):
        return io.load_order(selector[len("given:"):])
    raise WmstError(
        f"order must be 'id', 'seed:<u64>' or 'given:<file>', got {selector!r}"
    )


def cmd_run(args) -> int:
    instance = io.load_instance(args.instance)
    order = _resolve_order(args.order, instance.m)
    alg = _alg_factory(args.alg)()
    trace = run(alg, instance, order, checked=args.checked)
    report = metrics.error_report(instance)
    ratio = trace.cost / report.opt_actual
    bound_holds = trace.cost <= report.opt_actual + 2 * report.eta
    print(
        f"# config: run alg={args.alg} instance={args.instance} "
        f"order={args.order} checked={args.checked}"
    )
    print(f"cost = {_frac_dec(trace.cost)}")
    print(f"opt = {_frac_dec(report.opt_actual)}")
    print(f"eta = {_frac_dec(report.eta)}")
    print(f"epsilon = {_frac_dec(report.epsilon)}")
    print(f"ratio = {_frac_dec(ratio)}")
    print(f"cost <= opt + 2*eta: {'yes' if bound_holds else 'NO'}")
    if args.trace_out:
        io.save_trace(trace, args.trace_out)
        print(f"wrote trace to {args.trace_out}")
    return 0 if bound_holds else 1


def _csv_row_mc(instance_id: str, algorithm: str, seed: int, est) -> str:
    return ",".join(
        [
            instance_id,
            algorithm,
            str(est.trials),
            str(seed),
            _dec(est.mean_cost),
            _dec(est.std_error),
            format_fraction(est.opt),
            format_fraction(est.eta),
            format_fraction(est.epsilon),
            _dec(est.ratio),
            _dec(est.bound_1e),
            _dec(est.bound_ln2),
            _dec(est.bound_2e),
        ]
    )


def _csv_row_exact(
    instance_id: str, algorithm: str, instance, value: Fraction, trials: int
) -> str:
    opt, err, eps = randomorder._instance_stats(instance)
    b1, bln, b2 = randomorder._bounds(eps)
    ratio = value / opt
    return ",".join(
        [
            instance_id,
            algorithm,
            str(trials),
            "0",
            format_fraction(value),
            "0",
            format_fraction(opt),
            format_fraction(err),
            format_fraction(eps),
            format_fraction(ratio),
            _dec(b1),
            _dec(bln),
            _dec(b2),
        ]
    )


def _emit_csv(lines: list[str], out: str | None, comments: list[str]) -> None:
    body = "\n".join([CSV_COLUMNS, *lines]) + "\n"
    if out:
        Path(out).write_text(body, encoding="utf-8")
        for comment in comments:
            print(comment)
        print(f"wrote {len(lines)} row(s) to {out}")
    else:
        for comment in comments:
            print(comment)
        print(body, end="")


def cmd_ro(args) -> int:
    instance = io.load_instance(args.instance)
    factory = _alg_factory(args.alg)
    instance_id = args.id or Path(args.instance).name
    flagged = False
    if args.exact:
        value = randomorder.exact_expectation(factory, instance)
        comments = [
            f"# config: ro alg={args.alg} instance={args.instance} exact",
            f"# exact mean = {format_fraction(value)}",
        ]
        row = _csv_row_exact(
            instance_id, args.alg, instance, value, math.factorial(instance.m)
        )
        opt, _, eps = randomorder._instance_stats(instance)
        if args.alg == "gftp":
            flagged = float(value / opt) > randomorder._bounds(eps)[1]
    else:
        est = randomorder.mc_estimate(
            factory, instance, args.trials, args.seed, workers=args.workers
        )
        rep = randomorder.ratio_report(est, args.alg)
        flagged = rep.exceeds_ln2_bound
        comments = [
            f"# config: ro alg={args.alg} instance={args.instance} "
            f"trials={args.trials} seed={args.seed}"
        ]
        row = _csv_row_mc(instance_id, args.alg, args.seed, est)
    _emit_csv([row], args.out, comments)
    if flagged:
        print("FLAG: measured ratio exceeds 1+(1+ln2)*epsilon beyond 3 std errors")
    return 1 if flagged else 0


def _parse_grid(text: str, kind) -> list:
    values = [kind(part) for part in text.split(",") if part.strip()]
    if not values:
        raise WmstError("empty parameter grid")
    return values


def cmd_sweep(args) -> int:
    algs = [a.strip() for a in args.algs.split(",") if a.strip()]
    if not algs:
        raise WmstError("empty algorithm list")
    for name in algs:
        _alg_factory(name)
    ks = _parse_grid(args.k, parse_fraction)
    ls = _parse_grid(args.l, int)
    if args.family in ("general-lb", "eta2"):
        if any(k.denominator != 1 for k in ks):
            raise WmstError(f"family {args.family} needs integer k values")
        ks = [int(k) for k in ks]
    rows: list[str] = []
    flagged = False
    index = 0
    for k in ks:
        for l in ls:
            for alg_name in algs:
                if args.family == "ftp-lb":
                    instance, _, _ = adversaries.gen_ftp_lb(k, l)
                    seed = args.seed + index
                    est = randomorder.mc_estimate(
                        _alg_factory(alg_name), instance, args.trials, seed,
                        workers=args.workers,
                    )
                    rep = randomorder.ratio_report(est, alg_name)
                    flagged = flagged or rep.exceeds_ln2_bound
                    rows.append(
                        _csv_row_mc(f"ftp-lb(k={k};l={l})", alg_name, seed, est)
                    )
                elif args.family == "ro-lb":
                    instance = adversaries.gen_ro_lb(k, args.delta, l)
                    seed = args.seed + index
                    est = randomorder.mc_estimate(
                        _alg_factory(alg_name), instance, args.trials, seed,
                        workers=args.workers,
                    )
                    rep = randomorder.ratio_report(est, alg_name)
                    flagged = flagged or rep.exceeds_ln2_bound
                    rows.append(
                        _csv_row_mc(
                            f"ro-lb(k={k};delta={args.delta};l={l})",
                            alg_name, seed, est,
                        )
                    )
                elif args.family == "general-lb":
                    game = adversaries.gen_general_lb_game(
                        k, l, _alg_factory(alg_name)()
                    )
                    rows.append(
                        _csv_row_exact(
                            f"general-lb(k={k};l={l};alg={alg_name})",
                            alg_name, game.instance, game.trace.cost, 1,
                        )
                    )
                else:  # eta2: l is ignored by the triangle game
                    game = adversaries.gen_eta2_game(
                        k, 10 * k, _alg_factory(alg_name)()
                    )
                    rows.append(
                        _csv_row_exact(
                            f"eta2(k={k};bigK={10 * k};alg={alg_name})",
                            alg_name, game.instance, game.trace.cost, 1,
                        )
                    )
                index += 1
    comments = [
        f"# config: sweep family={args.family} k={args.k} l={args.l} "
        f"delta={args.delta} algs={args.algs} trials={args.trials} seed={args.seed}"
    ]
    _emit_csv(rows, args.out, comments)
    return 1 if flagged else 0


def _selftest_checks():
    from .adversaries import gen_ftp_lb, random_instance
    from .engine import ftp, gftp, run_cost

    def mst_matches_oracle() -> bool:
        for seed in range(200):
            inst = random_instance(3 + seed % 5, Fraction(3, 5), Fraction(1, 4), seed)
            tree = mst(inst.graph, inst.actual)
            cost, _ = brute_force_mst(inst.graph, inst.actual)
            if tree_cost(tree, inst.actual) != cost:
                return False
        return True

    def witness_pairs_cycles() -> bool:
        for seed in range(30):
            inst = random_instance(3 + seed % 4, Fraction(7, 10), Fraction(1, 2), seed)
            t1 = mst(inst.graph, inst.actual)
            t2 = mst(inst.graph, inst.predicted)
            for eid in t1.edge_ids - t2.edge_ids:
                e1 = inst.graph.edges[eid]
                e2 = exchange_witness(t1, t2, e1)
                cycle1 = {e.id for e in t1.tree_path(e2.u, e2.v)}
                cycle2 = {e.id for e in t2.tree_path(e1.u, e1.v)}
                if e1.id not in cycle1 or e2.id not in cycle2:
                    return False
        return True

    def online_bounds_hold() -> bool:
        for seed in range(200):
            inst = random_instance(4 + seed % 4, Fraction(3, 5), Fraction(1, 2), seed)
            order = ArrivalOrder.shuffled(inst.m, seed)
            opt = tree_cost(mst(inst.graph, inst.actual), inst.actual)
            err = metrics.eta(inst)
            for factory in (ftp, gftp):
                trace = run(factory(), inst, order, checked=True)
                if trace.cost > opt + 2 * err:
                    return False
            pred_tree = mst(inst.graph, inst.predicted)
            pred_cost = tree_cost(pred_tree, inst.predicted)
            if run_cost(gftp(), inst, order.edge_ids) > pred_cost + err:
                return False
        return True

    def family_ratio_identity() -> bool:
        for k, l in ((2, 1), (3, 3), (5, 4)):
            inst, natural, _ = gen_ftp_lb(k, l)
            cost = run_cost(ftp(), inst, natural.edge_ids)
            report = metrics.error_report(inst)
            closed = 1 + (2 - Fraction(2, l + 1)) * report.epsilon
            if cost / report.opt_actual != closed:
                return False
        return True

    def files_round_trip() -> bool:
        import tempfile

        inst = random_instance(6, Fraction(1, 2), Fraction(1, 4), 7)
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "inst.json"
            io.save_instance(inst, path)
            first = path.read_bytes()
            io.save_instance(io.load_instance(path), path)
            return first == path.read_bytes()

    def harmonic_values() -> bool:
        f2 = randomorder.harmonic_bound(2)
        f3 = randomorder.harmonic_bound(3)
        if f2 != Fraction(3, 2) or f3 != Fraction(19, 12):
            return False
        prev = f2
        for n in range(3, 200):
            cur = randomorder.harmonic_bound(n)
            if not prev < cur < Fraction(1_693_147, 1_000_000) + 1:
                return False
            prev = cur
        return True

    return [
        ("mst matches brute-force oracle", mst_matches_oracle),
        ("exchange witness pairs cycles", witness_pairs_cycles),
        ("online cost bounds and checked invariants", online_bounds_hold),
        ("hub-spoke ratio identity", family_ratio_identity),
        ("instance files round-trip byte-identically", files_round_trip),
        ("harmonic bound values and growth", harmonic_values),
    ]


def cmd_selftest(args) -> int:
    failures = 0
    for name, check in _selftest_checks():
        try:
            good = check()
        except WmstError as exc:
            good = False
            print(f"FAIL - {name}: {exc}")
            failures += 1
            continue
        if good:
            print(f"ok - {name}")
        else:
            failures += 1
            print(f"FAIL - {name}")
    print(f"selftest: {'all good' if failures == 0 else f'{failures} failure(s)'}")
    return 0 if failures == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wmst",
        description="Online minimum spanning trees with weight predictions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance family")
    gen.add_argument(
        "family", choices=["ftp-lb", "general-lb", "ro-lb", "eta2", "random"]
    )
    gen.add_argument("--k", type=parse_fraction, default=Fraction(2))
    gen.add_argument("--l", type=int, default=1, help="spoke or star count")
    gen.add_argument("--delta", type=parse_fraction, default=Fraction(1, 2))
    gen.add_argument("--big-k", dest="big_k", type=int, default=None)
    gen.add_argument("--alg", choices=sorted(ALGORITHMS), default="ftp")
    gen.add_argument("--n", type=int, default=6)
    gen.add_argument("--edge-prob", type=parse_fraction, default=Fraction(1, 2))
    gen.add_argument("--noise", type=parse_fraction, default=Fraction(1, 4))
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None)
    gen.set_defaults(func=_wrap_int_params(cmd_gen))

    runp = sub.add_parser("run", help="replay one arrival order")
    runp.add_argument("alg", choices=sorted(ALGORITHMS))
    runp.add_argument("instance")
    runp.add_argument("--order", default="id", help="id | seed:<u64> | given:<file>")
    runp.add_argument("--checked", action="store_true")
    runp.add_argument("--trace-out", default=None)
    runp.set_defaults(func=cmd_run)

    ro = sub.add_parser("ro", help="random-order cost estimate")
    ro.add_argument("alg", choices=sorted(ALGORITHMS))
    ro.add_argument("instance")
    ro.add_argument("--trials", type=int, default=10_000)
    ro.add_argument("--seed", type=int, default=0)
    ro.add_argument("--exact", action="store_true")
    ro.add_argument("--workers", type=int, default=None)
    ro.add_argument("--id", default=None, help="instance id for the CSV row")
    ro.add_argument("--out", default=None)
    ro.set_defaults(func=cmd_ro)

    sweep = sub.add_parser("sweep", help="CSV table over a parameter grid")
    sweep.add_argument("family", choices=["ftp-lb", "ro-lb", "general-lb", "eta2"])
    sweep.add_argument("--k", required=True, help="comma list, e.g. 2,3,4")
    sweep.add_argument("--l", required=True, help="comma list, e.g. 1,2,4")
    sweep.add_argument("--delta", type=parse_fraction, default=Fraction(1, 2))
    sweep.add_argument("--algs", default="ftp,gftp")
    sweep.add_argument("--trials", type=int, default=10_000)
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--workers", type=int, default=None)
    sweep.add_argument("--out", default=None)
    sweep.set_defaults(func=cmd_sweep)

    selftest = sub.add_parser("selftest", help="run the quick invariant suites")
    selftest.set_defaults(func=cmd_selftest)
    return parser


def _wrap_int_params(func):
    def wrapped(args):
        # game families take integer k; fail early with a clear message
        if args.family in ("general-lb", "eta2"):
            if args.k.denominator != 1:
                raise WmstError(f"family {args.family} needs an integer k, got {args.k}")
            args.k = int(args.k)
        return func(args)

    return wrapped


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WmstError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
