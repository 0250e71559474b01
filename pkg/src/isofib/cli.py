"""Command-line front end: ``isofib <subcommand> [options]``.

Exit codes: 0 success, 2 rejection (the rejection object is still printed),
1 internal error, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib

from . import __version__
from .classifier import FibrationDatum, classify, validate_datum
from .elliptic import aut_group, grid_curve, j_regime, parse_curve
from .errors import (ClassificationRejected, InvalidInput, IsofibError, NonExtendable, ResourceLimit,
                     UnsupportedSubgroup)
from .ffpoly import field
from .foliation import example_kodaira
from .groupscheme import parse_spec
from .torsorcoh import (brute_force_stabilizer, enumerate_classes, h1_description, parse_class,
                        reduce_rank_one, stabilizer_is_infinite, torsor_equation,
                        torsor_pair_classify)
from .torsorcoh.reduction import multisection_torsion_bound

SCHEMA = 1
EXIT_OK, EXIT_INTERNAL, EXIT_REJECTED, EXIT_USAGE = 0, 1, 2, 64
ENUMERATION_CAP = 10000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- input helpers ---------------------------------------------------------------

def fixture_dir():
    return resources.files("isofib") / "fixtures"


def load_document(ref: str):
    """Load JSON or TOML from a path, or from a bundled fixture name."""
    path = Path(ref)
    if not path.exists():
        bundled = fixture_dir() / ref
        if not bundled.is_file():
            raise InvalidInput(f"no such file or bundled fixture: {ref}")
        text, name = bundled.read_text(), ref
    else:
        text, name = path.read_text(), path.name
    if name.endswith(".toml"):
        return tomllib.loads(text)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{ref}: invalid JSON ({exc})") from None


def list_fixtures():
    return sorted(p.name for p in fixture_dir().iterdir() if p.name.endswith((".json", ".toml")))


def _datum_from_args(args):
    if args.datum:
        try:
            obj = json.loads(args.datum)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"--datum is not valid JSON ({exc})") from None
    elif args.fixture:
        obj = load_document(args.fixture)
    else:
        raise UsageError("one of --fixture or --datum is required")
    return FibrationDatum.from_json(obj)


def _field_from_args(args):
    return field(args.p, args.k)


def _curve_from_args(args):
    if getattr(args, "curve", None):
        return parse_curve(args.curve)
    if args.p is None or args.j is None:
        raise UsageError("give --curve, or both --p and --j")
    return grid_curve(args.p, args.j)


# -- subcommands -----------------------------------------------------------------

def cmd_aut_group(args):
    E = _curve_from_args(args)
    return EXIT_OK, aut_group(E).to_json()


def cmd_curve_info(args):
    E = _curve_from_args(args)
    n = E.point_count()
    return EXIT_OK, {
        "curve": E.to_text(),
        "j": E.ctx.json_code(E.j_invariant().code),
        "discriminant": E.ctx.json_code(E.discriminant().code),
        "regime": j_regime(E),
        "point_count": n,
        "trace": E.ctx.q + 1 - n,
        "supersingular_hasse": E.is_supersingular(),
        "supersingular_trace": (E.ctx.q + 1 - n) % E.p == 0,
    }


def cmd_torsor_classes(args):
    desc = h1_description(args.base, args.group, args.p)
    out = {"description": desc.to_json()}
    if desc.kind in ("zero", "finite") or args.max_degree is not None:
        F = _field_from_args(args)
        classes = []
        for cls in enumerate_classes(args.base, args.group, F, args.max_degree or 0):
            classes.append(cls.rep_text())
            if len(classes) > ENUMERATION_CAP:
                raise ResourceLimit(f"more than {ENUMERATION_CAP} classes; lower --max-degree")
        out["classes"] = classes
        out["count"] = len(classes)
    return EXIT_OK, out


def _class_from_args(args):
    return parse_class(args.base, args.group, _field_from_args(args), args.rep)


def cmd_stabilizer(args):
    cls = _class_from_args(args)
    verdict = stabilizer_is_infinite(cls)
    out = {"class": cls.to_json(), "infinite": verdict.infinite, "description": verdict.description}
    if not args.no_brute:
        F = field(args.p, args.brute_k or args.k)
        maps = brute_force_stabilizer(cls, F)
        out["brute_force"] = {"field_size": F.q, "size": len(maps),
                              "maps": [[F.json_code(a.code), F.json_code(b.code)] for a, b in maps[:64]]}
    return EXIT_OK, out


def cmd_reduce(args):
    cls = _class_from_args(args)
    out = {"reduction": reduce_rank_one(cls).to_json()}
    if cls.base.kind in ("A1", "A1*"):
        out["equation"] = torsor_equation(cls).to_json()
    return EXIT_OK, out


def cmd_torsion_bound(args):
    return EXIT_OK, {"degrees": args.degrees, "bound": multisection_torsion_bound(args.degrees)}


def cmd_foliation_trace(args):
    return EXIT_OK, example_kodaira(args.p).to_json()


def cmd_classify(args):
    if args.list:
        return EXIT_OK, {"fixtures": list_fixtures()}
    datum = _datum_from_args(args)
    return EXIT_OK, classify(datum).to_json()


def cmd_validate(args):
    datum = _datum_from_args(args)
    diag = validate_datum(datum)
    out = {"datum": datum.to_json(), "diagnostics": diag.to_json()}
    return (EXIT_OK if diag.ok else EXIT_REJECTED), out


def cmd_pair_classify(args):
    curve = parse_curve(args.curve) if args.curve else None
    p = curve.p if curve is not None else args.p
    case = torsor_pair_classify(args.curve_kind, parse_spec(args.group, p), curve)
    return EXIT_OK, case.to_json()


def build_parser():
    parser = _Parser(prog="isofib", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"isofib {__version__}")
    parser.add_argument("--format", choices=("json", "table"), default="json")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        sp.set_defaults(func=func)
        return sp

    def curve_args(sp):
        sp.add_argument("--curve", help='e.g. "p=3; k=1; a=[0,0,0,2,0]" or "y^2+y=x^3; p=2"')
        sp.add_argument("--p", type=int)
        sp.add_argument("--j", choices=("0", "1728", "generic"))

    def class_args(sp, rep=True):
        sp.add_argument("--base", required=True, help="P1, A1 or A1*")
        sp.add_argument("--group", required=True, help="alpha_p or mu_p")
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--k", type=int, default=1)
        if rep:
            sp.add_argument("--rep", default="0", help='representative, e.g. "t^2 + 2t^-1"')

    curve_args(add("aut-group", cmd_aut_group, "automorphism group of an elliptic curve"))
    curve_args(add("curve-info", cmd_curve_info, "invariants, point count, supersingularity"))

    sp = add("torsor-classes", cmd_torsor_classes, "describe or enumerate H^1 classes")
    class_args(sp, rep=False)
    sp.add_argument("--max-degree", type=int)

    sp = add("stabilizer", cmd_stabilizer, "stabilizer of a class under affine maps")
    class_args(sp)
    sp.add_argument("--brute-k", type=int, help="extension degree for the exhaustive check")
    sp.add_argument("--no-brute", action="store_true")

    class_args(add("reduce", cmd_reduce, "rank-one reduction and torsor equation"))

    sp = add("torsion-bound", cmd_torsion_bound, "gcd bound from multisection degrees")
    sp.add_argument("--degrees", type=int, nargs="+", required=True)

    sp = add("foliation-trace", cmd_foliation_trace, "canonical class of the foliation quotient example")
    sp.add_argument("--p", type=int, required=True)

    for name, func, text in (("classify", cmd_classify, "classify a fibration datum"),
                             ("validate", cmd_validate, "run hypothesis checks on a datum")):
        sp = add(name, func, text)
        sp.add_argument("--fixture", help="JSON/TOML file or bundled fixture name")
        sp.add_argument("--datum", help="inline JSON datum")
        if name == "classify":
            sp.add_argument("--list", action="store_true", help="list bundled fixtures")

    sp = add("pair-classify", cmd_pair_classify, "classify a (curve, group scheme) torsor pair")
    sp.add_argument("--curve-kind", required=True, help="elliptic, P1, A1 or A1*")
    sp.add_argument("--group", required=True, help='e.g. "mu_3 x Z/4"')
    sp.add_argument("--p", type=int)
    sp.add_argument("--curve")
    return parser


# -- output ----------------------------------------------------------------------

def _table_lines(obj, prefix=""):
    if isinstance(obj, dict):
        for key, val in obj.items():
            yield from _table_lines(val, f"{prefix}{key}.")
    elif isinstance(obj, list) and obj and any(isinstance(v, (dict, list)) for v in obj):
        for i, val in enumerate(obj):
            yield from _table_lines(val, f"{prefix}{i}.")
    else:
        yield f"{prefix[:-1]:<40} {json.dumps(obj) if not isinstance(obj, str) else obj}"


def emit(payload, fmt, stream):
    if fmt == "table":
        for line in _table_lines(payload):
            print(line, file=stream)
    else:
        print(json.dumps(payload, indent=2, sort_keys=False), file=stream)


def run(argv=None, stream=None):
    """Parse, dispatch and print; returns the exit code."""
    stream = stream or sys.stdout
    parser = build_parser()
    fmt = "json"
    try:
        args = parser.parse_args(argv)
        fmt = args.format
        code, payload = args.func(args)
        status = "ok" if code == EXIT_OK else "rejected"
        emit({"schema": SCHEMA, "command": args.command, "status": status, "result": payload}, fmt, stream)
        return code
    except UsageError as exc:
        emit({"schema": SCHEMA, "status": "usage-error", "error": str(exc)}, fmt, stream)
        return EXIT_USAGE
    except ClassificationRejected as exc:
        body = {"schema": SCHEMA, "status": "rejected", "error": str(exc)}
        if exc.diagnostics is not None:
            body["diagnostics"] = exc.diagnostics.to_json()
        emit(body, fmt, stream)
        return EXIT_REJECTED
    except (UnsupportedSubgroup, NonExtendable) as exc:
        emit({"schema": SCHEMA, "status": "rejected", "error": str(exc), "kind": type(exc).__name__},
             fmt, stream)
        return EXIT_REJECTED
    except (InvalidInput, ResourceLimit) as exc:
        emit({"schema": SCHEMA, "status": "usage-error", "error": str(exc), "kind": type(exc).__name__},
             fmt, stream)
        return EXIT_USAGE
    except IsofibError as exc:
        emit({"schema": SCHEMA, "status": "error", "error": str(exc)}, fmt, stream)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - report and map to the internal-error exit code
        emit({"schema": SCHEMA, "status": "internal-error", "error": f"{type(exc).__name__}: {exc}"},
             fmt, stream)
        return EXIT_INTERNAL


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
