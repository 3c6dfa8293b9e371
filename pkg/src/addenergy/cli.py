"""Command-line interface.

Every subcommand prints one machine-readable result (JSON by default) on
stdout; diagnostics go to stderr.  All potentially large numbers are emitted
as decimal strings.  Exit codes: 0 success, 1 precondition error, 2 budget
exhaustion, 3 target energy unreached.
"""

from __future__ import annotations

import argparse
import json
import sys

import mpmath

from . import constructions as cons
from . import groups, products, spectrum
from .errors import BudgetError, default_budget
from .intset import IntSet, difference_profile, energy_oracle
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_BUDGET = 2
EXIT_UNREACHED = 3


def _emit(payload: dict, out) -> None:
    out.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")


def _parse_set(text: str) -> IntSet:
    return IntSet(int(tok) for tok in text.replace(",", " ").split())


def _load_factor(path: str) -> IntSet:
    with open(path, encoding="utf-8") as fh:
        return IntSet.from_json(json.load(fh))


def _fraction_json(fr) -> dict:
    return {"num": str(fr.numerator), "den": str(fr.denominator)}


def _mpf_str(x, digits: int = 50) -> str:
    return mpmath.nstr(x, digits, strip_zeros=False)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_energy(args, out) -> int:
    a = _parse_set(args.set)
    _emit({"n": len(a), "energy": str(energy_oracle(a))}, out)
    return EXIT_OK


def _cmd_profile(args, out) -> int:
    a = _parse_set(args.set)
    _emit(difference_profile(a).to_json(), out)
    return EXIT_OK


def _cmd_construct(args, out) -> int:
    res = cons.build_with_target_energy(args.n, args.target, args.base)
    stages = {"j": res.j, "k": res.k, "swaps": res.swaps}
    if res.reached:
        _emit({"n": res.n, "target": str(res.target),
               "witness": res.witness.to_json(), "stages": stages,
               "verified": True}, out)
        return EXIT_OK
    _emit({"n": res.n, "target": str(res.target), "verified": False,
           "closest": {"energy": str(res.energy),
                       "witness": res.witness.to_json(), "stages": stages}}, out)
    return EXIT_UNREACHED


def _cmd_spectrum(args, out) -> int:
    s = spectrum.enumerate_spectrum(args.n, args.diameter,
                                    budget=args.budget, threads=args.threads)
    if args.plot:
        _write_gap_svg(s, args.plot)
    if args.format == "csv":
        gaps = {g.from_energy: g.gap for g in spectrum.spectrum_gaps(s)}
        out.write("energy,witness,gap_to_next\n")
        for e, w in s.entries:
            gap = gaps.get(e)
            out.write(f"{e},{' '.join(w.to_json())},{'' if gap is None else gap}\n")
    else:
        _emit(s.to_json(), out)
    return EXIT_OK


def _cmd_product(args, out) -> int:
    factors = [_load_factor(p) for p in args.factors.split(",")]
    p = products.product_set(factors, args.alphabet)
    payload = {
        "alphabet_size": str(p.alphabet_size),
        "factor_sizes": [len(f) for f in p.factors],
        "size": str(p.size),
        "energy": str(products.product_energy(p)),
    }
    if args.oracle:
        oracle = products.product_energy_oracle(p)
        payload["oracle_energy"] = str(oracle)
        payload["agrees"] = oracle == products.product_energy(p)
    _emit(payload, out)
    return EXIT_OK


def _cmd_ratio_chain(args, out) -> int:
    chain = products.ratio_chain(args.w, args.n, args.base)
    payload = chain.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            _emit(payload, fh)
    _emit(payload, out)
    return EXIT_OK


def _cmd_min_ratio(args, out) -> int:
    res = products.min_ratio_empirical(args.M, args.w, args.n, budget=args.budget)
    _emit({
        "alphabet_size": res.alphabet_size,
        "factor_size": res.factor_size,
        "dimension": res.dimension,
        "factor_energies": [str(e) for e in res.factor_energies],
        "products": [str(v) for v in res.products],
        "min_ratio": None if res.degenerate else _fraction_json(res.min_ratio),
        "degenerate": res.degenerate,
    }, out)
    return EXIT_OK


def _cmd_sidon(args, out) -> int:
    s = groups.sidon_parabola(args.p)
    payload = {
        "p": args.p,
        "group_orders": [args.p, args.p],
        "size": len(s),
        "elements": [list(x) for x in sorted(s.elements)],
    }
    if args.check:
        payload["is_sidon"] = groups.is_sidon(s)
        payload["energy"] = str(groups.group_energy(s))
    _emit(payload, out)
    return EXIT_OK


def _cmd_density_curve(args, out) -> int:
    points = groups.density_curve(args.n, args.p)
    rows = [{
        "k": pt.k,
        "alpha": _fraction_json(pt.alpha),
        "delta": _mpf_str(pt.delta),
        "bound_gap": _mpf_str(pt.bound_gap),
        "size": str(pt.set_size),
        "energy": str(pt.energy),
    } for pt in points]
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("k,alpha,delta,bound_gap\n")
            for pt in points:
                fh.write(f"{pt.k},{_mpf_str(mpmath.mpf(pt.alpha.numerator) / pt.alpha.denominator, 30)},"
                         f"{_mpf_str(pt.delta, 30)},{_mpf_str(pt.bound_gap, 30)}\n")
    _emit({"n": args.n, "p": args.p, "points": rows}, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    results = run_suite(args.suite, seed=args.seed)
    width = max(len(f"{r.suite}: {r.name}") for r in results)
    for r in results:
        label = f"{r.suite}: {r.name}"
        line = f"{'PASS' if r.ok else 'FAIL'}  {label:<{width}}"
        if r.detail:
            line += f"  [{r.detail}]"
        out.write(line.rstrip() + "\n")
    failed = sum(1 for r in results if not r.ok)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return EXIT_OK if failed == 0 else EXIT_PRECONDITION


def _write_gap_svg(s: spectrum.EnergySpectrum, path: str) -> None:
    """Tick chart of attained energies: one vertical line per value."""
    energies = s.energies()
    lo, hi = energies[0], energies[-1]
    span = max(hi - lo, 1)
    width, height, pad = 800, 120, 20
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<line x1="{pad}" y1="{height - 40}" x2="{width - pad}" y2="{height - 40}" '
        'stroke="black"/>',
    ]
    for e in energies:
        x = pad + (width - 2 * pad) * (e - lo) / span
        parts.append(f'<line x1="{x:.2f}" y1="{height - 70}" x2="{x:.2f}" '
                     f'y2="{height - 40}" stroke="black"/>')
    parts.append(f'<text x="{pad}" y="{height - 10}" font-size="12">{lo}</text>')
    parts.append(f'<text x="{width - pad}" y="{height - 10}" font-size="12" '
                 f'text-anchor="end">{hi}</text>')
    parts.append(f'<text x="{width // 2}" y="{pad}" font-size="12" text-anchor="middle">'
                 f'energies of {s.n}-element sets, diameter &#8804; {s.diameter_bound}'
                 '</text>')
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="addenergy",
        description="Exact additive-energy computations and constructions.")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized verification sweeps")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker count for parallel enumeration")
    parser.add_argument("--budget", type=int, default=None,
                        help="work budget override (default: ADDENERGY_BUDGET or 10^7)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("energy", help="additive energy of an integer set")
    p.add_argument("--set", required=True, help="comma- or space-separated integers")
    p.set_defaults(func=_cmd_energy)

    p = sub.add_parser("profile", help="positive difference profile of a set")
    p.add_argument("--set", required=True)
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("construct", help="build a set with prescribed energy")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--base", type=int, default=10)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("spectrum", help="enumerate attainable energies")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diameter", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--plot", default=None, help="write an SVG tick chart here")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("product", help="energy of a coordinatewise product")
    p.add_argument("--factors", required=True,
                   help="comma-separated JSON files, each a decimal-string array")
    p.add_argument("--alphabet", type=int, default=None)
    p.add_argument("--oracle", action="store_true",
                   help="also materialize and count directly")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("ratio-chain", help="chain of products with ratio <= 1+360/w^3")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--out", default=None, help="also write the chain JSON here")
    p.set_defaults(func=_cmd_ratio_chain)

    p = sub.add_parser("min-ratio", help="minimum consecutive product-energy ratio")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_min_ratio)

    p = sub.add_parser("sidon", help="parabola Sidon set over an odd prime")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="verify the Sidon property and report the energy")
    p.set_defaults(func=_cmd_sidon)

    p = sub.add_parser("density-curve", help="density-energy tradeoff points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--csv", default=None, help="write k,alpha,delta,bound_gap here")
    p.set_defaults(func=_cmd_density_curve)

    p = sub.add_parser("verify", help="run the invariant battery")
    p.add_argument("--suite", default="all", choices=("all",) + SUITES)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None, out=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.budget is None:
        args.budget = default_budget()
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
