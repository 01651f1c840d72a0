"""Command-line surface: searches, table reproduction, and single-code checks.

Exit codes: 0 success, 1 mismatch or counterexample, 2 usage error.
The default worker count comes from DCCODES_WORKERS; a JSON config file
may supply search defaults, and explicit flags always win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bordered, dc_codes, linear_code
from .circulant import count_orthogonal, orthogonal_count_breakdown
from .figures import (
    render_search_summary,
    render_weight_distribution,
    weight_distribution_path,
)
from .gf2ring import RingElement, poly_text
from .search import (
    SearchConfig,
    SearchVerificationError,
    emit,
    search,
    _route_extremality,
)
from .tables import reproduce_tables

WORKERS_ENV = "DCCODES_WORKERS"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dccodes",
        description="exact workbench for binary double-circulant and bordered codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="exhaustive sweep over generator polynomials")
    p.add_argument("--kind", choices=("selfdual_dc", "extremal_dc", "lcd_dc", "bordered_selfdual", "bordered_lcd"))
    p.add_argument("--m", type=int, help="smallest m to sweep")
    p.add_argument("--m-max", type=int, help="largest m to sweep (default: --m)")
    p.add_argument("--weight", help="comma-separated weights to restrict the sweep to")
    p.add_argument("--workers", type=int, help=f"worker processes (default ${WORKERS_ENV} or 1)")
    p.add_argument("--format", choices=("csv", "json"), help="output format (default csv)")
    p.add_argument("--oracle", choices=("auto", "always", "spot", "off"), help="cross-check policy (default auto)")
    p.add_argument("--out", help="write the report stream to this file instead of stdout")
    p.add_argument("--figures", help="directory for rendered figures")
    p.add_argument("--config", help="JSON file with default values for the flags above")

    p = sub.add_parser("tables", help="reproduce the known classification tables")
    p.add_argument("--figures", help="directory for rendered figures")

    p = sub.add_parser("verify", help="exact metrics of one code as JSON")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--f", required=True, help="generator polynomial (sparse or m=<int>:0x<hex>)")
    p.add_argument("--bordered", action="store_true", help="verify the bordered construction")
    p.add_argument("--alpha", type=int, choices=(0, 1), help="bordered corner entry (default 0)")
    p.add_argument("--figures", help="directory for rendered figures")

    p = sub.add_parser("count-orthogonal", help="number of m x m orthogonal circulants")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--explain", action="store_true", help="show the coset decomposition")

    p = sub.add_parser("dc", help="pure double-circulant helpers")
    dc_sub = p.add_subparsers(dest="dc_command", required=True)
    q = dc_sub.add_parser("classify", help="predicate outcomes for one generator")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--f", required=True)
    q = dc_sub.add_parser("canonical", help="orbit-minimal equivalent generator")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--f", required=True)

    p = sub.add_parser("bordered", help="bordered double-circulant helpers")
    b_sub = p.add_subparsers(dest="bordered_command", required=True)
    q = b_sub.add_parser("classify", help="self-dual/LCD status of one bordered code")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--f", required=True)
    q.add_argument("--alpha", type=int, choices=(0, 1), required=True)
    q = b_sub.add_parser("lift", help="complement a self-dual DC generator to a bordered one")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--f", required=True)

    return parser


def _search_settings(args) -> dict:
    settings = {
        "kind": None,
        "m": None,
        "m_max": None,
        "weight": None,
        "workers": None,
        "format": "csv",
        "oracle": "auto",
        "out": None,
        "figures": None,
    }
    if args.config:
        with open(args.config) as handle:
            loaded = json.load(handle)
        unknown = set(loaded) - set(settings)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        settings.update(loaded)
    for key in ("kind", "m", "m_max", "weight", "workers", "format", "oracle", "out", "figures"):
        value = getattr(args, key)
        if value is not None:
            settings[key] = value
    if settings["workers"] is None:
        settings["workers"] = int(os.environ.get(WORKERS_ENV, "1"))
    if settings["kind"] is None or settings["m"] is None:
        raise ValueError("search needs --kind and --m (flags or config file)")
    if settings["m_max"] is None:
        settings["m_max"] = settings["m"]
    return settings


def _parse_weights(raw) -> frozenset[int] | None:
    if raw is None:
        return None
    if isinstance(raw, str):
        values = [int(part) for part in raw.split(",") if part.strip()]
    else:
        values = [int(v) for v in raw]
    return frozenset(values)


def _cmd_search(args) -> int:
    settings = _search_settings(args)
    cfg = SearchConfig(
        m_min=int(settings["m"]),
        m_max=int(settings["m_max"]),
        kind=settings["kind"],
        weight_filter=_parse_weights(settings["weight"]),
        workers=int(settings["workers"]),
        output_format=settings["format"],
        oracle=settings["oracle"],
    )
    reports = search(cfg)
    text = emit(reports, cfg.output_format)
    if settings["out"]:
        with open(settings["out"], "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    if settings["figures"]:
        directory = settings["figures"]
        render_search_summary(reports, os.path.join(directory, "search_summary.png"))
        for rep in reports:
            if rep._wd is not None:
                render_weight_distribution(
                    rep._wd,
                    f"[{rep.n}, {rep.k}, {rep.d}] m={rep.m}, f={rep.f}",
                    weight_distribution_path(directory, cfg.kind, rep.m, rep.f, rep.alpha),
                )
    return 0


def _cmd_tables(args) -> int:
    return reproduce_tables(out=sys.stdout, figures_dir=args.figures)


def _cmd_verify(args) -> int:
    f = RingElement.from_text(args.f, args.m)
    if args.alpha is not None and not args.bordered:
        raise ValueError("--alpha applies only to --bordered")
    alpha = args.alpha if args.alpha is not None else 0
    if args.bordered:
        code = bordered.build(bordered.BorderedDescriptor(args.m, f, alpha))
    else:
        code = dc_codes.build(dc_codes.DcDescriptor(args.m, f))
    got = linear_code.metrics(code)
    result = {
        "construction": "bordered" if args.bordered else "dc",
        "m": args.m,
        "f": str(f),
        "alpha": alpha if args.bordered else None,
        "n": code.n,
        "k": code.k,
        "d": got.min_distance,
        "weight_distribution": list(got.weight_distribution),
        "hull_dimension": got.hull_dimension,
        "self_dual": got.self_dual,
        "extremal": got.self_dual and got.min_distance == linear_code.extremal_bound(code.n),
    }
    print(json.dumps(result, indent=2))
    if args.figures:
        kind = "bordered" if args.bordered else "dc"
        render_weight_distribution(
            got.weight_distribution,
            f"[{code.n}, {code.k}, {got.min_distance}] {kind}, m={args.m}, f={f}",
            weight_distribution_path(args.figures, f"verify_{kind}", args.m, str(f),
                                     alpha if args.bordered else None),
        )
    return 0


def _cmd_count(args) -> int:
    if args.explain:
        for line in orthogonal_count_breakdown(args.m):
            print(line)
    else:
        print(count_orthogonal(args.m))
    return 0


def _cmd_dc(args) -> int:
    f = RingElement.from_text(args.f, args.m)
    desc = dc_codes.DcDescriptor(args.m, f)
    if args.dc_command == "canonical":
        print(dc_codes.canonical_form(desc))
        return 0
    self_dual = dc_codes.is_self_dual(desc)
    oracle_d = linear_code.min_distance(dc_codes.build(desc))
    if self_dual:
        extremal, predicate, _ = _route_extremality(args.m, f.bits)
        if extremal != (oracle_d == linear_code.extremal_bound(2 * args.m)):
            raise SearchVerificationError(
                f"oracle disagreement at m={args.m}, f={f}: predicate {predicate} "
                f"says extremal={extremal} but oracle d={oracle_d}"
            )
    else:
        extremal, predicate = False, "oracle_only"
    print(
        json.dumps(
            {
                "self_dual": self_dual,
                "weight": f.bits.bit_count(),
                "predicate_used": predicate,
                "extremal": extremal,
                "oracle_d": oracle_d,
            },
            indent=2,
        )
    )
    return 0


def _cmd_bordered(args) -> int:
    f = RingElement.from_text(args.f, args.m)
    if args.bordered_command == "lift":
        lifted = bordered.complement_lift(f)
        print(json.dumps({"m": lifted.m, "f": str(lifted.f), "alpha": lifted.alpha}, indent=2))
        return 0
    desc = bordered.BorderedDescriptor(args.m, f, args.alpha)
    code = bordered.build(desc)
    got = linear_code.metrics(code)
    print(
        json.dumps(
            {
                "self_dual": got.self_dual,
                "lcd": got.hull_dimension == 0,
                "n": code.n,
                "k": code.k,
                "d": got.min_distance,
                "hull_dim": got.hull_dimension,
            },
            indent=2,
        )
    )
    return 0


_COMMANDS = {
    "search": _cmd_search,
    "tables": _cmd_tables,
    "verify": _cmd_verify,
    "count-orthogonal": _cmd_count,
    "dc": _cmd_dc,
    "bordered": _cmd_bordered,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SearchVerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
