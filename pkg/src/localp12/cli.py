"""Command-line front end.

Four subcommands: `potential` prints the truncated potential as an exact
coefficient table, `invariants` prints a single invariant, `verify` runs
the verification suites, and `eval` embeds the truncated potential at a
numeric point.  Output is deterministic: identical configuration yields
byte-identical bytes, with terms sorted and rationals in canonical form.

Exit codes: 0 on success (all suites passing for `verify`), 1 on a
verification failure or an evaluation pole, 2 on a usage error.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .localization import assembly_suite, degree0_suite, resummation_suite
from .pcrc import bracket_suite, corollary_suite, residual_suite
from .potentials import degree0_triple, extended_potential, gw_invariant, potential

SUITE_NAMES = ("degree0", "resummation", "assembly", "bracket", "residual", "corollary")

#: per-command cap defaults (qmax, zorder, uorder)
_DEFAULT_CAPS = {
    "potential": (3, 6, 3),
    "eval": (3, 6, 3),
    "verify": (8, 10, 10),
    "invariants": (0, 0, 0),
}

_EVAL_VARS = ("z0", "z1", "z2", "q", "u")


@dataclass
class RunConfig:
    command: str
    qmax: int
    zorder: int
    uorder: int
    extended: bool
    suites: tuple
    format: str
    at: dict
    out: str


class UsageError(Exception):
    pass


def _build_parser():
    top = argparse.ArgumentParser(
        prog="localp12",
        description="Exact genus-0 potential and verification suites for local P(1,2).",
    )
    sub = top.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("potential", "print the truncated potential as a coefficient table"),
        ("invariants", "print one invariant value"),
        ("verify", "run verification suites"),
        ("eval", "numerically evaluate the truncated potential"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--qmax", type=_nat, default=None, help="curve-degree cap")
        p.add_argument("--zorder", type=_nat, default=None, help="cap on each z variable")
        p.add_argument("--uorder", type=_nat, default=None, help="cap on the angle variable")
        p.add_argument("--extended", action="store_true", default=None,
                       help="use the u-extended potential")
        p.add_argument("--format", choices=("json", "csv"), default=None)
        p.add_argument("--config", default=None, help="JSON file with the same keys as the flags")
        p.add_argument("--at", default=None, help="comma-separated k=v rational assignments")
        p.add_argument("--out", default=None, help="write output to this path instead of stdout")
        if name == "verify":
            p.add_argument("--suite", default=None,
                           help="one of %s, or 'all'" % (", ".join(SUITE_NAMES),))
        if name == "invariants":
            p.add_argument("--d", type=_nat, default=None, help="curve degree")
            p.add_argument("--n1", type=_nat, default=None, help="divisor insertions")
            p.add_argument("--n2", type=_nat, default=None, help="twisted insertions")
            p.add_argument("--classes", default=None,
                           help="three comma-separated classes for d=0, e.g. 1,H,H")
    return top


def _nat(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return value


_CONFIG_KEYS = ("qmax", "zorder", "uorder", "extended", "format", "at", "out",
                "suite", "d", "n1", "n2", "classes")


def _load_config(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError) as err:
        raise UsageError("cannot read config %s: %s" % (path, err))
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    for key in data:
        if key not in _CONFIG_KEYS:
            raise UsageError("unknown config key %r" % (key,))
    return data


def _merge(args):
    """Flags override config-file values; defaults fill the rest."""
    cfg = _load_config(args.config) if args.config else {}

    def pick(name, fallback=None):
        flag = getattr(args, name, None)
        if flag is not None:
            return flag
        if name in cfg:
            return cfg[name]
        return fallback

    caps = _DEFAULT_CAPS[args.command]
    qmax = int(pick("qmax", caps[0]))
    zorder = int(pick("zorder", caps[1]))
    uorder = int(pick("uorder", caps[2]))
    if min(qmax, zorder, uorder) < 0:
        raise UsageError("caps must be nonnegative")

    suite = pick("suite", "all") if args.command == "verify" else "all"
    if args.command == "verify":
        if suite == "all":
            suites = SUITE_NAMES
        elif suite in SUITE_NAMES:
            suites = (suite,)
        else:
            raise UsageError("unknown suite %r; choose from %s or 'all'"
                             % (suite, ", ".join(SUITE_NAMES)))
    else:
        suites = ()

    fmt = pick("format", "json")
    if fmt not in ("json", "csv"):
        raise UsageError("format must be json or csv")
    if fmt == "csv" and args.command != "potential":
        raise UsageError("csv output is only defined for the potential table")

    at = _parse_at(pick("at"))
    return RunConfig(
        command=args.command,
        qmax=qmax,
        zorder=zorder,
        uorder=uorder,
        extended=bool(pick("extended", False)),
        suites=suites,
        format=fmt,
        at=at,
        out=pick("out"),
    )


def _parse_at(spec):
    if spec is None:
        return {}
    if isinstance(spec, dict):
        items = spec.items()
    else:
        items = []
        for chunk in str(spec).split(","):
            if not chunk:
                continue
            if "=" not in chunk:
                raise UsageError("bad assignment %r in --at" % (chunk,))
            k, v = chunk.split("=", 1)
            items.append((k.strip(), v.strip()))
    out = {}
    for k, v in items:
        try:
            out[k] = Fraction(str(v))
        except (ValueError, ZeroDivisionError):
            raise UsageError("cannot parse %r as a rational" % (v,))
    return out


# --------------------------------------------------------------------------
# subcommands


def _the_series(cfg):
    if cfg.extended:
        return extended_potential(cfg.qmax, cfg.zorder, cfg.uorder)
    return potential(cfg.qmax, cfg.zorder)


def cmd_potential(cfg):
    series = _the_series(cfg)
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(series.vs.names) + ["num", "den"])
        for e, v in series.sorted_terms():
            writer.writerow([str(x) for x in e] + [str(v.num), str(v.den)])
        return buf.getvalue(), 0
    return _dump(series.to_json()), 0


def cmd_invariants(cfg, args):
    d = args.d if args.d is not None else 0
    if d == 0:
        if not args.classes:
            raise UsageError("degree 0 needs --classes, e.g. --classes 1,H,H")
        classes = tuple(c.strip() for c in args.classes.split(","))
        try:
            value = degree0_triple(classes)
        except ValueError as err:
            raise UsageError(str(err))
        record = {"d": 0, "classes": list(classes), "value": value.to_json(),
                  "pretty": str(value)}
        return _dump(record), 0
    if args.classes is not None:
        raise UsageError("--classes is only for degree 0")
    if args.n2 is None:
        raise UsageError("positive degree needs --n2 (twisted insertion count)")
    n1 = args.n1 if args.n1 is not None else 0
    try:
        value = gw_invariant(n1, args.n2, d)
    except ValueError as err:
        raise UsageError(str(err))
    record = {"d": d, "n1": n1, "n2": args.n2, "value": value.to_json(),
              "pretty": str(value)}
    return _dump(record), 0


def _run_suite(name, cfg):
    if name == "degree0":
        return degree0_suite()
    if name == "resummation":
        return resummation_suite()
    if name == "assembly":
        return assembly_suite()
    if name == "bracket":
        return bracket_suite(cfg.qmax, cfg.zorder)
    if name == "residual":
        return residual_suite(cfg.zorder)
    return corollary_suite()


def cmd_verify(cfg):
    reports = [_run_suite(name, cfg) for name in cfg.suites]
    ok = all(r.passed for r in reports)
    if len(reports) == 1:
        payload = reports[0].to_json()
    else:
        payload = [r.to_json() for r in reports]
    return _dump(payload), 0 if ok else 1


def cmd_eval(cfg):
    """Embed the truncated potential at a numeric point.

    The value depends on the truncation orders; it is the polynomial the
    caps retain, not the analytic sum.
    """
    for key in cfg.at:
        if key not in ("t1", "t2") + _EVAL_VARS:
            raise UsageError("unknown variable %r in --at" % (key,))
    if "t1" not in cfg.at or "t2" not in cfg.at:
        raise UsageError("--at must set t1 and t2")
    t1, t2 = cfg.at["t1"], cfg.at["t2"]
    series = _the_series(cfg)
    point = {"t1": t1, "t2": t2}
    for name in series.vs.names:
        point[name] = cfg.at.get(name, Fraction(0))
    total = None
    for e, coeff in series.sorted_terms():
        scalar = coeff.eval(t1, t2)
        for name, ev in zip(series.vs.names, e):
            if ev:
                scalar = scalar * cfg.at.get(name, Fraction(0)) ** ev
        total = scalar if total is None else total + scalar
    value = complex(0) if total is None else total.embed()
    record = {
        "at": {k: str(v) for k, v in sorted(point.items())},
        "extended": cfg.extended,
        "qmax": cfg.qmax,
        "zorder": cfg.zorder,
        "value": {"re": format(value.real, ".15g"), "im": format(value.imag, ".15g")},
    }
    if cfg.extended:
        record["uorder"] = cfg.uorder
    return _dump(record), 0


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _merge(args)
        if cfg.command == "potential":
            text, code = cmd_potential(cfg)
        elif cfg.command == "invariants":
            text, code = cmd_invariants(cfg, args)
        elif cfg.command == "verify":
            text, code = cmd_verify(cfg)
        else:
            text, code = cmd_eval(cfg)
    except UsageError as err:
        print("error: %s" % (err,), file=sys.stderr)
        return 2
    except ZeroDivisionError as err:
        print("error: %s" % (err,), file=sys.stderr)
        return 1

    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
