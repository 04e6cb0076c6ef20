"""Command-line workbench for rank-metric codes.

Subcommands: volumes, bounds, gv, perfect-search, spectrum, density,
gabidulin, simulate.  Tables go to stdout or --output as CSV (with the
resolved configuration echoed in ``# key=value`` comment lines) or as JSON
with identical numeric content; --plot renders a PNG figure of the same
rows.  Exit codes: 0 success, 1 usage or parameter error, 2 desk-scale
guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction

from .bounds import (CodeParams, covering_density, gv_exists,
                     gv_greedy_construct, gv_on_bound, perfect_code_search,
                     quasi_perfect_table, rank1_mrd_density, singleton_bound)
from .counting import Space, ball_volume, log_q, sphere_volume, volume_bounds
from .field import default_field
from .gabidulin import GabidulinCode, mrd_spectrum, write_codebook
from .limits import GuardExceeded
from .rank import RankVector, min_rank_distance, rank
from .random_codes import (Ensemble, distribution_upper_bound,
                           empirical_distribution, empirical_rank_census,
                           exact_distribution, predicted_moments,
                           total_variation)

# The census threshold under which --verify cross-checks the closed form.
_VERIFY_LIMIT = 2**16

_SPECTRUM_NOTE = ("closed form uses inner binomial index (l-t); the (l+t) "
                  "variant fails the census cross-check")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); usage errors are 1
        raise _UsageError(message)


# ---------------------------------------------------------------------------
# Value formatting: exact integers in full, probabilities to 12 significant
# digits, exact rationals as num/den.  CSV cells and JSON values carry the
# same numeric content.

def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else \
            f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _jsonable(v):
    if isinstance(v, Fraction):
        return _fmt(v)
    if isinstance(v, float):
        return float(f"{v:.12g}")
    return v


def _open_output(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", newline=""), True


def _write_table(args, config: dict, summary: dict,
                 columns: list[str], rows: list[dict]) -> None:
    fh, close = _open_output(args.output)
    try:
        if args.format == "csv":
            for k, v in config.items():
                fh.write(f"# {k}={_fmt(v)}\n")
            for k, v in summary.items():
                fh.write(f"# {k}={_fmt(v)}\n")
            writer = csv.writer(fh)
            writer.writerow(columns)
            for r in rows:
                writer.writerow([_fmt(r[c]) for c in columns])
        else:
            doc = {
                "config": {k: _jsonable(v) for k, v in config.items()},
                "summary": {k: _jsonable(v) for k, v in summary.items()},
                "columns": columns,
                "rows": [[_jsonable(r[c]) for c in columns] for r in rows],
            }
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    finally:
        if close:
            fh.close()


def _maybe_plot(args, saver, config, rows):
    if getattr(args, "plot", None):
        from . import plotting

        getattr(plotting, saver)(config, rows, args.plot)


def _codeword_str(word: RankVector) -> str:
    return " ".join(",".join(map(str, e.coords)) for e in word)


def _log2_or_none(num, den) -> float | None:
    if num <= 0:
        return None
    if isinstance(num, float):
        return math.log2(num) - math.log2(den)
    return log_q(Fraction(num, den), 2)


# ---------------------------------------------------------------------------
# Command handlers

def _cmd_volumes(args) -> None:
    sp = Space(args.q, args.m, args.n)
    rows = []
    for t in range(sp.max_rank + 1):
        s_t = sphere_volume(sp, t)
        b_t = ball_volume(sp, t)
        vb = volume_bounds(sp, t)
        rows.append({
            "t": t, "sphere": s_t, "ball": b_t,
            "sphere_lo": vb.sphere_lo, "sphere_hi": vb.sphere_hi,
            "ball_lo": vb.ball_lo, "ball_hi": vb.ball_hi,
            # extra keys for the figure
            "log_q_sphere": log_q(s_t, sp.q),
            "log_q_ball": log_q(b_t, sp.q),
            "lo_exponent": (sp.m + sp.n - 2) * t - t * t,
            "hi_exponent": (sp.m + sp.n + 1) * t - t * t,
        })
    config = {"command": "volumes", "q": sp.q, "m": sp.m, "n": sp.n,
              "format": args.format, "output": args.output}
    summary = {"space_size": sp.size}
    _write_table(args, config, summary,
                 ["t", "sphere", "ball", "sphere_lo", "sphere_hi",
                  "ball_lo", "ball_hi"], rows)
    _maybe_plot(args, "save_volumes_plot", config, rows)


def _cmd_bounds(args) -> None:
    sp = Space(args.q, args.m, args.n)
    ds = [args.d] if args.d is not None else list(range(1, sp.max_rank + 1))
    rows = []
    for d in ds:
        t = (d - 1) // 2
        ball_t = ball_volume(sp, t)
        ball_dm1 = ball_volume(sp, min(d - 1, sp.max_rank))
        row = {
            "d": d, "t": t,
            "singleton_M": singleton_bound(sp, d),
            "ball_t": ball_t,
            "ball_d_minus_1": ball_dm1,
            "packing_max_M": sp.size // ball_t,
            "gv_threshold_M": -(-sp.size // ball_dm1),
        }
        if args.M is not None:
            cp = CodeParams(sp, args.M, d)
            covered = args.M * ball_t
            row["sphere_packing_holds"] = covered <= sp.size
            row["gv_exists"] = gv_exists(sp, args.M, d)
            row["on_gv"] = gv_on_bound(cp)
        rows.append(row)
    columns = ["d", "t", "singleton_M", "ball_t", "ball_d_minus_1",
               "packing_max_M", "gv_threshold_M"]
    if args.M is not None:
        columns += ["sphere_packing_holds", "gv_exists", "on_gv"]
    config = {"command": "bounds", "q": sp.q, "m": sp.m, "n": sp.n,
              "d": args.d, "M": args.M,
              "format": args.format, "output": args.output}
    _write_table(args, config, {"space_size": sp.size}, columns, rows)


def _cmd_gv(args) -> None:
    sp = Space(args.q, args.m, args.n)
    code = gv_greedy_construct(sp, args.d, args.target_M, args.seed)
    verified = (min_rank_distance(code) if len(code) >= 2 else args.d)
    rows = [{"index": i, "codeword": _codeword_str(w), "rank": rank(w)}
            for i, w in enumerate(code)]
    config = {"command": "gv", "q": sp.q, "m": sp.m, "n": sp.n, "d": args.d,
              "target_M": args.target_M, "seed": args.seed,
              "format": args.format, "output": args.output}
    summary = {
        "verified_min_distance": verified,
        "distance_ok": verified >= args.d,
        "on_gv": gv_on_bound(CodeParams(sp, args.target_M, args.d)),
    }
    _write_table(args, config, summary, ["index", "codeword", "rank"], rows)


def _cmd_perfect_search(args) -> None:
    found = perfect_code_search(args.q, args.max_m, args.max_n,
                                include_trivial=args.include_trivial)
    rows = [{"m": cp.space.m, "n": cp.space.n, "d": cp.d, "M": cp.M}
            for cp in found]
    config = {"command": "perfect-search", "q": args.q,
              "max_m": args.max_m, "max_n": args.max_n,
              "include_trivial": args.include_trivial,
              "format": args.format, "output": args.output}
    _write_table(args, config, {"found": len(found)},
                 ["m", "n", "d", "M"], rows)


def _cmd_spectrum(args) -> None:
    sp = Space(args.q, args.m, args.n)
    spectrum = mrd_spectrum(sp, args.d)
    M = spectrum.total
    rows = [{"s": s, "count": c,
             "log2_proportion": _log2_or_none(c, M)}
            for s, c in spectrum.items()]
    k = sp.n - args.d + 1
    config = {"command": "spectrum", "q": sp.q, "m": sp.m, "n": sp.n,
              "d": args.d, "k": k, "format": args.format,
              "output": args.output}
    summary = {"M": M, "note": _SPECTRUM_NOTE}
    if args.verify:
        if M <= _VERIFY_LIMIT:
            field = default_field(sp.q, sp.m)
            g = RankVector(field.polynomial_basis().elements[: sp.n])
            census = GabidulinCode(g, k).rank_census()
            summary["verify"] = ("match" if census == dict(spectrum.items())
                                 else "mismatch")
        else:
            summary["verify"] = f"skipped (census of {M} words exceeds guard)"
    _write_table(args, config, summary,
                 ["s", "count", "log2_proportion"], rows)
    _maybe_plot(args, "save_spectrum_plot", config, rows)


def _cmd_density(args) -> None:
    if args.quasi_perfect is not None:
        table = quasi_perfect_table(args.q, args.quasi_perfect)
        rows = [{"n": n, "density": d, "density_float": float(d)}
                for n, d in table]
        config = {"command": "density", "q": args.q,
                  "quasi_perfect": args.quasi_perfect,
                  "format": args.format, "output": args.output}
        limit = Fraction(1, args.q - 1)
        _write_table(args, config, {"limit": limit},
                     ["n", "density", "density_float"], rows)
        _maybe_plot(args, "save_density_plot", config, rows)
        return
    if args.m is None or args.n is None or args.d is None:
        raise _UsageError("density needs --m, --n and --d "
                          "(or --quasi-perfect N_MAX)")
    sp = Space(args.q, args.m, args.n)
    M = args.M if args.M is not None else singleton_bound(sp, args.d)
    cp = CodeParams(sp, M, args.d)
    report = covering_density(cp)
    rows = [{
        "m": sp.m, "n": sp.n, "d": args.d, "t": cp.t, "M": M,
        "density": report.density, "density_float": float(report.density),
        "lower_bound": report.lower_bound, "upper_bound": report.upper_bound,
    }]
    config = {"command": "density", "q": sp.q, "m": sp.m, "n": sp.n,
              "d": args.d, "M": M, "format": args.format,
              "output": args.output}
    summary = {"is_mrd": cp.is_mrd}
    if sp.m == sp.n and args.d == 3 and cp.is_mrd:
        summary["closed_form"] = rank1_mrd_density(sp.q, sp.n)
    _write_table(args, config, summary,
                 ["m", "n", "d", "t", "M", "density", "density_float",
                  "lower_bound", "upper_bound"], rows)


def _parse_generator(field, text: str) -> RankVector:
    entries = [field.element([int(c) for c in part.split(",")])
               for part in text.split()]
    return RankVector(entries)


def _cmd_gabidulin(args) -> None:
    field = default_field(args.q, args.m)
    if args.g is not None:
        g = _parse_generator(field, args.g)
        if len(g) != args.n:
            raise _UsageError(f"--g has {len(g)} entries, expected n={args.n}")
    else:
        g = RankVector(field.polynomial_basis().elements[: args.n])
    code = GabidulinCode(g, args.k)
    verified = code.min_distance() if args.verify else None
    fh, close = _open_output(args.output)
    try:
        if args.format == "csv":
            fh.write("# command=gabidulin\n")
            fh.write(f"# size={code.size}\n")
            fh.write(f"# designed_distance={code.designed_distance}\n")
            if verified is not None:
                fh.write(f"# verified_min_distance={verified}\n")
            write_codebook(code, fh)
        else:
            doc = {
                "config": {"command": "gabidulin", "q": args.q, "m": args.m,
                           "n": args.n, "k": args.k,
                           "modulus": list(field.modulus)},
                "summary": {"size": code.size,
                            "designed_distance": code.designed_distance,
                            "verified_min_distance": verified},
                "g": [list(e.coords) for e in g],
                "codewords": [[list(e.coords) for e in w]
                              for w in code.codewords()],
            }
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    finally:
        if close:
            fh.close()


def _cmd_simulate(args) -> None:
    sp = Space(args.q, args.m, args.n)
    if (args.K is None) == (args.M is None):
        raise _UsageError("simulate needs exactly one of --K or --M")
    if args.K is not None:
        ens = Ensemble.of_dimension(sp, args.K)
    else:
        ens = Ensemble.of_size(sp, args.M)
    config = {"command": "simulate", "q": sp.q, "m": sp.m, "n": sp.n,
              "K": args.K, "M": ens.M, "linear": ens.linear,
              "N": ens.N, "trials": args.trials, "seed": args.seed,
              "workers": args.workers, "rank_census": args.rank_census,
              "format": args.format, "output": args.output}
    if args.rank_census:
        _simulate_rank_census(args, ens, config)
    else:
        _simulate_distribution(args, ens, config)


def _simulate_distribution(args, ens: Ensemble, config: dict) -> None:
    exact = exact_distribution(ens)
    empirical = empirical_distribution(ens, args.trials, args.seed,
                                       workers=args.workers)
    rows = []
    for i in range(1, ens.space.n + 1):
        pe = exact.as_float(i)
        pm = empirical.as_float(i)
        rows.append({
            "i": i,
            "p_exact": pe,
            "p_empirical": pm,
            "upper_bound": float(distribution_upper_bound(ens, i)),
            "log2_exact": math.log2(pe) if pe > 0 else None,
            "log2_empirical": math.log2(pm) if pm > 0 else None,
        })
    moments = predicted_moments(ens)
    e_emp, var_emp = empirical.moments()
    summary = {
        "sum_exact": float(exact.total()),
        "sum_empirical": empirical.total(),
        "tv_distance": total_variation(exact, empirical),
        "expectation_exact": moments.expectation,
        "expectation_empirical": e_emp,
        "variance_exact": moments.variance,
        "variance_empirical": var_emp,
        "center": moments.center,
        "a_n": moments.a_n,
        "b_n": moments.b_n,
        "hypothesis_ok": moments.hypothesis_ok,
    }
    if empirical.model_correction is not None:
        summary["distinctness_correction"] = empirical.model_correction
    _write_table(args, config, summary,
                 ["i", "p_exact", "p_empirical", "upper_bound",
                  "log2_exact", "log2_empirical"], rows)
    _maybe_plot(args, "save_distribution_plot", config, rows)


def _simulate_rank_census(args, ens: Ensemble, config: dict) -> None:
    sp = ens.space
    census = empirical_rank_census(ens, args.trials, args.seed,
                                   workers=args.workers)
    spectrum = None
    note = None
    if ens.linear and args.K % sp.m == 0 and sp.n <= sp.m:
        k = args.K // sp.m
        d = sp.n - k + 1
        if d >= 1:
            spectrum = mrd_spectrum(sp, d)
            config["mrd_d"] = d
    if spectrum is None:
        note = "no MRD reference: needs a linear ensemble with m | K and n <= m"
    rows = []
    for s in range(0, sp.max_rank + 1):
        mrd_count = spectrum[s] if spectrum is not None else None
        emp = census.get(s, 0.0)
        rows.append({
            "s": s,
            "mrd_count": mrd_count,
            "empirical_mean_count": emp,
            "log2_mrd_proportion":
                _log2_or_none(mrd_count, ens.M) if mrd_count is not None else None,
            "log2_empirical_proportion": _log2_or_none(emp, ens.M),
        })
    summary = {"M": ens.M}
    if note:
        summary["note"] = note
    _write_table(args, config, summary,
                 ["s", "mrd_count", "empirical_mean_count",
                  "log2_mrd_proportion", "log2_empirical_proportion"], rows)
    _maybe_plot(args, "save_rank_census_plot", config, rows)


# ---------------------------------------------------------------------------
# Parser

def _add_io(p, plot: bool = False):
    p.add_argument("--output", default="-", help="file path or - for stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    if plot:
        p.add_argument("--plot", default=None, metavar="PNG",
                       help="also render a figure of the table")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rankmetric",
                     description="workbench for codes in the rank metric")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("volumes", help="sphere/ball volumes and their bounds")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_io(p, plot=True)
    p.set_defaults(handler=_cmd_volumes)

    p = sub.add_parser("bounds", help="Singleton / sphere-packing / GV table")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--M", type=int, default=None,
                   help="also check this cardinality against each bound")
    _add_io(p)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("gv", help="greedy construction at the GV threshold")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--target-M", dest="target_M", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    _add_io(p)
    p.set_defaults(handler=_cmd_gv)

    p = sub.add_parser("perfect-search",
                       help="scan for parameters of perfect codes")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-m", dest="max_m", type=int, required=True)
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.add_argument("--include-trivial", action="store_true",
                   help="admit radius-0 (full space) solutions")
    _add_io(p)
    p.set_defaults(handler=_cmd_perfect_search)

    p = sub.add_parser("spectrum", help="rank spectrum of an MRD code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--verify", action="store_true",
                   help="cross-check against an exhaustive census")
    _add_io(p, plot=True)
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("density", help="covering density reports")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--M", type=int, default=None,
                   help="cardinality (default: Singleton equality)")
    p.add_argument("--quasi-perfect", dest="quasi_perfect", type=int,
                   default=None, metavar="N_MAX",
                   help="tabulate the rank-1 family for n = 3..N_MAX")
    _add_io(p, plot=True)
    p.set_defaults(handler=_cmd_density)

    p = sub.add_parser("gabidulin", help="construct and export a code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g", default=None,
                   help="generating vector: space-separated comma-joined "
                        "coordinate tuples (default: polynomial basis)")
    p.add_argument("--verify", action="store_true",
                   help="brute-force the minimum distance")
    _add_io(p)
    p.set_defaults(handler=_cmd_gabidulin)

    p = sub.add_parser("simulate",
                       help="exact vs Monte Carlo distance distribution")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--K", type=int, default=None,
                   help="F_q-dimension of linear samples (M = q^K)")
    p.add_argument("--M", type=int, default=None,
                   help="cardinality of non-linear samples")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--rank-census", dest="rank_census", action="store_true",
                   help="compare mean rank census with the MRD spectrum")
    _add_io(p, plot=True)
    p.set_defaults(handler=_cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.handler(args)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except GuardExceeded as e:
        print(f"guard exceeded: {e}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
