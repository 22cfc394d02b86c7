"""Command-line front end.

Every subcommand prints one report ``{command, inputs, results, elapsed_ms,
version}`` as canonical JSON (sorted keys, rationals as ``"a/b"``, integers
beyond 2^53 as strings) or, with ``--text``, as indented plain text.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""
import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .cyclotomic import Cyclotomic
from .levirep import INVOLUTION_LABELS, eigen_dims, involution_fusion, weight_system
from .polynomial import IntPolynomial
from .qpoly import group_order_factored, group_order_poly, poincare_from_degrees, poincare_poly, torus_classes
from .rootdata import datum_for_type, datum_to_json, f4_datum
from .structconst import (
    BUILTIN_GROUPS,
    CharacterTable,
    PermGroup,
    builtin_group,
    builtin_table,
    check_table_matches,
    count_triples,
    get_class,
    is_rigid,
    structure_constant,
)
from .torus import semisimple_classes
from .verifier import DEFAULT_CONFIGS, report_soundness, verify_case
from .weyl import coxeter_data, enumerate_weyl

GENERIC_TORSION = (1, 2, 3, 4, 6)
SAFE_INT = 2 ** 53


class UsageError(Exception):
    pass


def canonical(obj):
    """Recursively convert a payload to plain JSON types."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= SAFE_INT else obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Cyclotomic):
        return canonical(obj.to_fraction()) if obj.is_rational() else obj.to_json()
    if isinstance(obj, IntPolynomial):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    if hasattr(obj, "to_json"):
        return canonical(obj.to_json())
    if hasattr(obj, "item"):  # numpy scalar
        return canonical(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def render_json(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _text_lines(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                yield f"{pad}{k}:"
                yield from _text_lines(v, indent + 1)
            else:
                yield f"{pad}{k}: {_inline(v)}"
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v and not _flat(v):
                yield f"{pad}-"
                yield from _text_lines(v, indent + 1)
            else:
                yield f"{pad}- {_inline(v)}"
    else:
        yield pad + _inline(obj)


def _flat(v):
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _inline(v):
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    return str(v)


def render_text(report):
    head = f"{report['command']} (f4rigid {report['version']})"
    body = "\n".join(_text_lines(report["results"]))
    return f"{head}\n{body}\n"


# ----------------------------------------------------------------- commands


def _datum(type_text):
    try:
        return f4_datum() if type_text == "F4" else datum_for_type(type_text)
    except ValueError as e:
        raise UsageError(str(e)) from e


def cmd_involutions(args):
    classes = semisimple_classes(f4_datum(), 2)
    rows = []
    for c in classes:
        if c.representative.order == 1:
            continue
        d = c.to_json()
        d["label"] = INVOLUTION_LABELS.get(d["centralizer_type"], "other")
        rows.append(d)
    results = {"classes": rows, "involution_count": sum(c.orbit_size for c in classes) - 1}
    return 0, results


def cmd_semisimple(args):
    n = args.torsion
    if n < 1:
        raise UsageError(f"torsion order must be positive, got {n}")
    if args.characteristic is None:
        if n not in GENERIC_TORSION:
            raise UsageError(f"in generic characteristic p > 3 only n in {list(GENERIC_TORSION)} are offered")
        char = "generic p > 3"
    else:
        p = args.characteristic
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise UsageError(f"characteristic must be a prime, got {p}")
        if n % p == 0:
            raise UsageError(f"torsion order {n} is divisible by the characteristic {p}")
        char = p
    datum = _datum(args.type)
    try:
        classes = semisimple_classes(datum, n)
    except ValueError as e:
        raise UsageError(str(e)) from e
    results = {
        "characteristic": char,
        "classes": [c.to_json() for c in classes],
        "scope": "fixed-n enumeration of Weyl orbits; the generic-q class count is not computed",
    }
    return 0, results


def cmd_torus_orders(args):
    datum = _datum(args.type)
    group = enumerate_weyl(datum)
    total = group_order_poly(datum)
    rows = []
    ok = True
    for rec in torus_classes(group):
        divides = rec["poly"].divides(total)
        ok = ok and divides
        rows.append({
            "representative": [list(r) for r in rec["representative"].matrix],
            "size": rec["size"],
            "element_order": rec["representative"].order,
            "torus_order": rec["poly"].to_json(rec["factored"]),
            "divides_group_order": divides,
        })
    results = {"weyl_order": group.order, "class_count": len(rows), "classes": rows}
    return (0 if ok else 1), results


def cmd_order_poly(args):
    datum = _datum(args.type)
    poly = group_order_poly(datum)
    cox = coxeter_data(datum)
    identity = poincare_poly(enumerate_weyl(datum)) == poincare_from_degrees(cox.degrees)
    results = {
        "label": datum.label,
        "order_poly": poly.to_json(group_order_factored(datum)),
        "degree": poly.degree,
        "monic": poly.leading == 1,
        "coxeter_number": cox.coxeter_number,
        "exponents": list(cox.exponents),
        "degrees": list(cox.degrees),
        "poincare_identity": identity,
    }
    return (0 if identity else 1), results


def cmd_levi(args):
    datum = f4_datum()
    i = args.index
    parts = [p for p in ("fusion", "weights", "eigen") if getattr(args, p)] or ["fusion", "weights", "eigen"]
    results = {"levi_index": i}
    if "weights" in parts:
        results["weights"] = weight_system(datum, i).to_json()
    if "fusion" in parts:
        results["fusion"] = involution_fusion(datum, i).to_json()
    if "eigen" in parts:
        ws = weight_system(datum, i)
        results["eigen"] = [dict(row.to_json(), eigen=eigen_dims(ws, row.levi_class_rep).to_json())
                            for row in involution_fusion(datum, i).rows]
    return 0, results


def cmd_verify_parabolics(args):
    datum = f4_datum()
    configs = [c for c in DEFAULT_CONFIGS if args.case is None or c.levi_index == args.case]
    cases = []
    ok = True
    for c in configs:
        rep = verify_case(c, datum)
        d = rep.to_json()
        ok = ok and rep.contradiction_holds
        if args.soundness:
            sound = report_soundness(rep, trials=args.soundness, seed=args.seed)
            d["soundness"] = sound
            ok = ok and all(s["product_violations"] == 0 and s["discount_violations"] == 0 for s in sound)
        cases.append(d)
    return (0 if ok else 1), {"cases": cases, "all_hold": ok}


def _load_group(source):
    if source in BUILTIN_GROUPS:
        return builtin_group(source)
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"no builtin group or file named {source!r} (builtins: {', '.join(BUILTIN_GROUPS)})")
    try:
        return PermGroup.load(path)
    except (ValueError, KeyError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read group {source}: {e}") from e


def _load_table(source):
    if source in BUILTIN_GROUPS:
        return builtin_table(source)
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"no builtin table or file named {source!r}")
    try:
        return CharacterTable.load(path)
    except (ValueError, KeyError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read table {source}: {e}") from e


def _parse_classes(group, text):
    names = [s.strip() for s in text.split(",")]
    if len(names) != 3:
        raise UsageError(f"expected three class names, got {text!r}")
    try:
        for n in names:
            get_class(group, n)
    except KeyError as e:
        raise UsageError(e.args[0]) from e
    return names


def cmd_structconst(args):
    group = _load_group(args.group)
    names = _parse_classes(group, args.classes)
    results = {"group_order": group.order, "classes": names}
    ok = True
    if args.table:
        table = _load_table(args.table)
        try:
            check_table_matches(group, table)
            formula = structure_constant(table, *names)
        except (ValueError, KeyError) as e:
            raise UsageError(str(e)) from e
        results["formula"] = formula
        results["formula_count"] = formula * group.order
    if args.brute_force or not args.table:
        count = count_triples(group, *names)
        results["count"] = count
        results["constant"] = Fraction(count, group.order)
        if args.table:
            ok = results["formula_count"] == count
            results["agree"] = ok
    return (0 if ok else 1), results


def cmd_rigidity(args):
    group = _load_group(args.group)
    names = _parse_classes(group, args.classes)
    report = is_rigid(group, *names)
    return (0 if report.rigid else 1), dict(report.to_json(), group_order=group.order)


def cmd_dump_datum(args):
    return 0, datum_to_json(_datum(args.type))


COMMANDS = {
    "involutions": cmd_involutions,
    "semisimple": cmd_semisimple,
    "torus-orders": cmd_torus_orders,
    "order-poly": cmd_order_poly,
    "levi": cmd_levi,
    "verify-parabolics": cmd_verify_parabolics,
    "structconst": cmd_structconst,
    "rigidity": cmd_rigidity,
    "dump-datum": cmd_dump_datum,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="f4rigid", description="Exact finite computations for F4 rigidity.")
    p.add_argument("--version", action="version", version=f"f4rigid {__version__}")
    p.add_argument("--dump-datum", metavar="FILE", help="also write the F4 root datum JSON to FILE")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", help="plain text output")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as null")
    p.set_defaults(fmt="json")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        f = sp.add_mutually_exclusive_group()
        f.add_argument("--json", dest="sub_fmt", action="store_const", const="json")
        f.add_argument("--text", dest="sub_fmt", action="store_const", const="text")
        return sp

    add("involutions", "classes of involutions in F4")

    sp = add("semisimple", "Weyl orbits on n-torsion points of the torus")
    sp.add_argument("--torsion", type=int, required=True, metavar="N")
    sp.add_argument("--characteristic", type=int, metavar="P")
    sp.add_argument("--type", default="F4", help="root system type, e.g. F4 or A2+A1")

    sp = add("torus-orders", "torus order polynomial of each Weyl class")
    sp.add_argument("--type", default="F4")

    sp = add("order-poly", "group order polynomial and Coxeter data")
    sp.add_argument("--type", default="F4")

    sp = add("levi", "weight systems, fusion and eigenvalues for a maximal Levi")
    sp.add_argument("--index", type=int, required=True, choices=(1, 2, 3, 4))
    sp.add_argument("--fusion", action="store_true")
    sp.add_argument("--weights", action="store_true")
    sp.add_argument("--eigen", action="store_true")

    sp = add("verify-parabolics", "eigenvalue contradiction for each maximal parabolic")
    sp.add_argument("--case", type=int, choices=(1, 2, 3, 4))
    sp.add_argument("--soundness", type=int, default=0, metavar="TRIALS",
                    help="also run the randomized bound check with this many trials per shape")
    sp.add_argument("--seed", type=int, default=0)

    sp = add("structconst", "class structure constant by formula and/or brute force")
    sp.add_argument("--group", required=True, help=f"builtin ({', '.join(BUILTIN_GROUPS)}) or JSON file")
    sp.add_argument("--classes", required=True, metavar="A,B,C")
    sp.add_argument("--table", help="builtin name or character table JSON file")
    sp.add_argument("--brute-force", action="store_true")

    sp = add("rigidity", "rigidity of a class triple by full enumeration")
    sp.add_argument("--group", required=True)
    sp.add_argument("--classes", required=True, metavar="A,B,C")

    sp = add("dump-datum", "root datum as JSON")
    sp.add_argument("--type", default="F4")
    return p


def _inputs(args):
    skip = {"command", "fmt", "sub_fmt", "no_timing", "dump_datum"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run(argv=None, out=None, err=None):
    """Parse ``argv``, run one command and write its report; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    old_err, sys.stderr = sys.stderr, err
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:  # --help / --version
            return int(e.code or 0)
        if args.dump_datum:
            Path(args.dump_datum).write_text(render_json(canonical(datum_to_json(f4_datum()))))
        if args.command is None:
            if args.dump_datum:
                return 0
            parser.print_usage(err)
            print("f4rigid: error: a subcommand is required", file=err)
            return 2
        start = time.perf_counter()
        status, results = COMMANDS[args.command](args)
        elapsed = round((time.perf_counter() - start) * 1000, 3)
    except UsageError as e:
        print(f"f4rigid: error: {e}", file=err)
        return 2
    finally:
        sys.stderr = old_err
    report = canonical({
        "command": args.command,
        "inputs": _inputs(args),
        "results": results,
        "version": __version__,
    })
    report["elapsed_ms"] = None if args.no_timing else elapsed
    fmt = args.sub_fmt or args.fmt
    out.write(render_text(report) if fmt == "text" else render_json(report))
    return status


def main(argv=None):
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
