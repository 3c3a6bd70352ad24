"""Command-line front end.

Exit codes: 0 = all requested checks pass, 1 = a mathematical check failed,
2 = input/format error.  Reports print as text by default, JSON with --json.
Output is deterministic for fixed inputs.
"""
from __future__ import annotations

import argparse
import sys

from . import serialize
from .biproduct import (
    check_dp_conditions,
    factorize_bialgebra,
    is_smash_biproduct,
    schrodinger_double,
)
from .catalog import (
    AbelianGroupSpec,
    GroupTable,
    PointedParams,
    dual_group_algebra,
    group_algebra,
    pointed_hopf,
    quaternion,
    radford,
    sweedler,
    taft,
    en,
)
from .classify import classification_budget, enumerate_normal_R
from .cosmash import is_smash_coproduct
from .errors import FormatError, SmashkitError
from .fields import FieldSpec, Scalar
from .hopfmod import compatibility_report
from .report import Check, Report
from .smash import is_smash_product
from .structures import (
    check_algebra,
    check_bialgebra,
    check_coalgebra,
    check_hopf,
    compute_antipode,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def parse_field(text: str) -> FieldSpec:
    if text == "rational":
        return FieldSpec.rational()
    if text.startswith("prime:"):
        try:
            return FieldSpec.prime(int(text.split(":", 1)[1]))
        except ValueError as exc:
            raise FormatError(f"bad field spec {text!r}: {exc}") from exc
    raise FormatError(f"bad field spec {text!r} (use 'rational' or 'prime:P')")


def _emit(doc: dict, out_path):
    text = serialize.dumps(doc)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_out(rep: Report, as_json: bool) -> int:
    if as_json:
        sys.stdout.write(serialize.dumps(rep.to_json()))
    else:
        print(rep.render())
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- catalog -----------------------------------------------------------------


def _group_from_spec(spec: str) -> GroupTable:
    kind, _, rest = spec.partition(":")
    if kind == "cyclic":
        return GroupTable.cyclic(int(rest))
    if kind == "product":
        parts = [int(x) for x in rest.split("x")]
        table = GroupTable.cyclic(parts[0])
        for n in parts[1:]:
            table = GroupTable.direct_product(table, GroupTable.cyclic(n))
        return table
    if kind == "symmetric":
        return GroupTable.symmetric(int(rest))
    raise FormatError(f"unknown group spec {spec!r}")


def _pointed_params_from_json(obj) -> PointedParams:
    try:
        orders = tuple(int(x) for x in obj["orders"])
        n = tuple(int(x) for x in obj["n"])
        g = tuple(tuple(int(e) for e in el) for el in obj["g"])
        gstar = tuple(tuple(int(e) for e in el) for el in obj["gstar"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"pointed params: {exc}") from exc
    field = serialize.field_from_json(obj.get("field"), "pointed.field")
    return PointedParams(AbelianGroupSpec(orders), n, g, gstar, field)


def run_catalog(args) -> int:
    name = args.name
    field = parse_field(args.field) if args.field else FieldSpec.rational()
    head, _, rest = name.partition(":")
    if head == "sweedler":
        doc = serialize.object_to_json(sweedler().K)
    elif head == "group":
        doc = serialize.object_to_json(group_algebra(_group_from_spec(rest), field))
    elif head == "dualgroup":
        cop = rest.startswith("cop:")
        doc = serialize.object_to_json(
            dual_group_algebra(_group_from_spec(rest[4:] if cop else rest), field, cop=cop)
        )
    elif head == "quaternion":
        try:
            a_txt, b_txt = rest.split(",")
        except ValueError as exc:
            raise FormatError("quaternion needs 'quaternion:a,b'") from exc
        a = Scalar.parse(field, a_txt)
        b = Scalar.parse(field, b_txt)
        doc = serialize.smash_to_json(quaternion(a, b).data)
    elif head == "taft":
        try:
            n, p = (int(x) for x in rest.split(":"))
        except ValueError as exc:
            raise FormatError("taft needs 'taft:n:p'") from exc
        doc = serialize.object_to_json(taft(n, p).K)
    elif head == "radford":
        parts = rest.split(":")
        if len(parts) == 5:
            n, qord, nn, nu, p = (int(x) for x in parts)
            if qord != n:
                raise FormatError("radford: q_order must equal n (q is a primitive n-th root)")
        elif len(parts) == 4:
            n, nn, nu, p = (int(x) for x in parts)
        else:
            raise FormatError("radford needs 'radford:n[:q_order]:N:nu:p'")
        doc = serialize.object_to_json(radford(n, nn, nu, p).K)
    elif head == "en":
        doc = serialize.object_to_json(en(int(rest)).K)
    elif head == "pointed":
        params = _pointed_params_from_json(serialize.load(rest))
        doc = serialize.object_to_json(pointed_hopf(params).K)
    elif head == "double":
        base = serialize.object_from_json(serialize.load(rest), rest).as_hopf(rest)
        doc = serialize.biproduct_to_json(schrodinger_double(base).data)
    else:
        raise FormatError(f"unknown catalog name {name!r}")
    _emit(doc, args.output)
    return EXIT_OK


# -- checking ---------------------------------------------------------------------


def run_check(args) -> int:
    obj = serialize.object_from_json(serialize.load(args.file), args.file)
    kind = args.as_kind
    if kind == "algebra":
        rep = check_algebra(obj.as_algebra(args.file))
    elif kind == "coalgebra":
        rep = check_coalgebra(obj.as_coalgebra(args.file))
    elif kind == "bialgebra":
        rep = check_bialgebra(obj.as_bialgebra(args.file))
    else:  # hopf
        if obj.antipode is not None:
            rep = check_hopf(obj.as_hopf(args.file))
        else:
            bial = obj.as_bialgebra(args.file)
            rep = Report("hopf (antipode via solver)")
            rep.subreports["bialgebra"] = check_bialgebra(bial)
            found = compute_antipode(bial) if rep.subreports["bialgebra"].passed else None
            rep.add(Check("antipode_exists", found is not None))
    return _report_out(rep, args.json)


def run_smash(args) -> int:
    d = serialize.smash_from_json(serialize.load(args.file), args.file)
    return _report_out(is_smash_product(d), args.json)


def run_cosmash(args) -> int:
    d = serialize.cosmash_from_json(serialize.load(args.file), args.file)
    return _report_out(is_smash_coproduct(d), args.json)


def run_biproduct(args) -> int:
    d = serialize.biproduct_from_json(serialize.load(args.file), args.file)
    rep = is_smash_biproduct(d)
    if args.dp:
        rep.subreports["dp_conditions"] = check_dp_conditions(d)
    return _report_out(rep, args.json)


def run_factorize(args) -> int:
    w = serialize.witness_from_json(serialize.load(args.file), args.file)
    d = factorize_bialgebra(w)
    doc = serialize.biproduct_to_json(d)
    _emit(doc, args.output)
    return EXIT_OK


def run_double(args) -> int:
    base = serialize.object_from_json(serialize.load(args.file), args.file).as_hopf(args.file)
    dd = schrodinger_double(base)
    _emit(serialize.biproduct_to_json(dd.data), args.output)
    return EXIT_OK


def run_hopfmod(args) -> int:
    t = serialize.hopfmod_from_json(serialize.load(args.file), args.file)
    return _report_out(compatibility_report(t), args.json)


def run_classify(args) -> int:
    a = serialize.object_from_json(serialize.load(args.A), args.A).as_algebra(args.A)
    b = serialize.object_from_json(serialize.load(args.B), args.B).as_algebra(args.B)
    if args.field:
        want = parse_field(args.field)
        if a.field != want or b.field != want:
            raise FormatError(f"inputs are over {a.field}, not {want}")
    budget = args.budget if args.budget else classification_budget()
    sols = enumerate_normal_R(a, b, budget=budget)
    if args.emit_solutions:
        import os

        os.makedirs(args.emit_solutions, exist_ok=True)
        from .smash import SmashData

        for idx, (r, _) in enumerate(sols):
            serialize.save(
                os.path.join(args.emit_solutions, f"solution_{idx:04d}.json"),
                serialize.smash_to_json(SmashData(a, b, r)),
            )
    if args.json:
        doc = {
            "count": len(sols),
            "solutions": [serialize.matrix_to_json(r) for r, _ in sols],
            "reports": [rep.to_json() for _, rep in sols],
        }
        sys.stdout.write(serialize.dumps(doc))
    else:
        print(f"{len(sols)} smash-product solutions over {a.field}")
        for idx, (r, _) in enumerate(sols):
            print(f"--- solution {idx}")
            print(r.pretty())
    return EXIT_OK


# -- entry point ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="smashkit",
        description="exact verification of smash products, coproducts and biproducts",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("catalog", help="emit a named catalog object as JSON")
    p.add_argument("name")
    p.add_argument("-o", "--output")
    p.add_argument("--field", help="rational or prime:P (where applicable)")
    p.add_argument("--json", action="store_true", help="(output is always JSON)")
    p.set_defaults(func=run_catalog)

    p = sub.add_parser("check", help="run axiom checkers on an object file")
    p.add_argument("file")
    p.add_argument("--as", dest="as_kind", required=True,
                   choices=["algebra", "coalgebra", "bialgebra", "hopf"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_check)

    p = sub.add_parser("smash", help="is the data a smash product?")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_smash)

    p = sub.add_parser("cosmash", help="is the data a smash coproduct?")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_cosmash)

    p = sub.add_parser("biproduct", help="is the data a smash biproduct?")
    p.add_argument("file")
    p.add_argument("--dp", action="store_true", help="also evaluate DP1-DP8 (bialgebra factors)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_biproduct)

    p = sub.add_parser("factorize", help="recover (R, W) from a factorisation witness")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_factorize)

    p = sub.add_parser("double", help="Drinfel'd double of a Hopf object")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_double)

    p = sub.add_parser("classify", help="enumerate normal multiplicative R over GF(p)")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--field")
    p.add_argument("--budget", type=int)
    p.add_argument("--emit-solutions")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_classify)

    p = sub.add_parser("hopfmod", help="check a twisted Hopf module file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_hopfmod)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SmashkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
