"""Command line surface with deterministic JSON or text output.

Exit codes: 0 success, 2 precondition violation, 3 unsupported input class.
Every rational is emitted in reduced p/q form; re-parsing an emitted
document and re-emitting it reproduces the bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import forms, modstruct
from .classify import (
    HpSeries,
    MultiplierSpec,
    RepInput,
    classify_dim1,
    classify_dim2,
    classify_dim3,
    classify_dim4,
    classify_dim5,
    dim5_data,
    hp_dimension,
)
from .errors import PreconditionError, UnsupportedInputError
from .frobenius import solve_fundamental_system
from .mmde import Mmde, unique_operator
from .qseries import QSeries
from .wronskian import wronskian_factorization

_MAX_CLI_ORDER = 6


def _parse_rat(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise PreconditionError("cannot parse rational %r" % s) from e


def _parse_rat_list(s: str):
    items = [x for x in s.split(",") if x != ""]
    if not items:
        raise PreconditionError("expected a comma-separated list of rationals")
    return [_parse_rat(x) for x in items]


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, QSeries):
        return x.to_record()
    return x


def _render_text(doc, indent=0, lines=None):
    out = lines if lines is not None else []
    pad = "  " * indent
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)):
                out.append("%s%s:" % (pad, k))
                _render_text(v, indent + 1, out)
            else:
                out.append("%s%s: %s" % (pad, k, v))
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)):
                out.append("%s-" % pad)
                _render_text(v, indent + 1, out)
            else:
                out.append("%s- %s" % (pad, v))
    else:
        out.append("%s%s" % (pad, doc))
    return out


def _emit(doc, fmt: str) -> None:
    doc = _jsonable(doc)
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(_render_text(doc)) + "\n")


def _vector_record(F) -> dict:
    return {
        "weight": str(F.weight),
        "exponents": [str(x) for x in F.exponents],
        "components": [f.to_record() for f in F.components],
    }


def _series_by_name(name: str, precision: int) -> QSeries:
    if name == "delta":
        return forms.delta(precision)
    if name.startswith("eta^"):
        return forms.eta_power(_parse_rat(name[4:]), precision)
    if name.startswith("E") and name[1:].isdigit():
        return forms.eisenstein(int(name[1:]), precision)
    raise PreconditionError(
        "unknown series %r; use E<k>, delta, or eta^<p/q>" % name
    )


def _operator_from_args(args) -> Mmde:
    if getattr(args, "operator", None):
        with open(args.operator, "r", encoding="utf-8") as fh:
            return Mmde.from_record(json.load(fh))
    if not getattr(args, "roots", None):
        raise PreconditionError("supply --roots or --operator")
    roots = args.roots
    if len(roots) > _MAX_CLI_ORDER:
        raise UnsupportedInputError("construction beyond order 6 is not supported")
    L = unique_operator(roots)
    cusp = getattr(args, "cusp", None)
    if cusp is not None and cusp != 0:
        L = Mmde(L.base, cusp_c=cusp, roots=L.indicial_roots)
    return L


def _multiplier_from_args(args) -> MultiplierSpec:
    return MultiplierSpec(args.eta_weight, args.chi)


def _cmd_forms(args) -> dict:
    s = _series_by_name(args.series, args.precision)
    return {"series": args.series, "precision": args.precision, "expansion": s.to_record()}


def _cmd_mmde_construct(args) -> dict:
    L = _operator_from_args(args)
    return {"operator": L.to_record()}


def _cmd_mmde_solve(args) -> dict:
    L = _operator_from_args(args)
    F = solve_fundamental_system(L, args.precision)
    return {"operator": L.to_record(), "system": _vector_record(F)}


def _cmd_wronskian(args) -> dict:
    L = _operator_from_args(args)
    F = solve_fundamental_system(L, args.precision)
    expo, g, g_weight = wronskian_factorization(F)
    return {
        "operator": L.to_record(),
        "exponent_sum": str(expo),
        "g_weight": str(g_weight),
        "gamma": str(g.coefficient_at(Fraction(0))),
        "g": g.to_record(),
    }


def _classifier_doc(h: HpSeries, banner=None, extra=None) -> dict:
    doc = {
        "k0": str(h.k0),
        "offsets": list(h.offsets),
        "numerator": h.numerator(),
        "dims": {str(h.k0 + 2 * kp): hp_dimension(h, h.k0 + 2 * kp) for kp in range(7)},
    }
    if extra:
        doc.update(extra)
    if banner:
        doc["assumption"] = banner
    return doc


def _cmd_classify(args) -> dict:
    m = _multiplier_from_args(args)
    rs = args.r
    if args.dim == 1:
        if len(rs) != 1:
            raise PreconditionError("dimension 1 takes a single angle")
        power = 12 * rs[0]
        if power.denominator != 1 or not (0 <= power <= 11):
            raise PreconditionError("dimension 1 angle must be a twelfth of an integer in 0..11")
        h = classify_dim1(int(power), m)
        return _classifier_doc(h)
    rep = RepInput(args.dim, rs, args.epsilon, m, args.assert_t_determined)
    if args.dim == 2:
        return _classifier_doc(classify_dim2(rep))
    if args.dim == 3:
        return _classifier_doc(classify_dim3(rep))
    banner = (
        "T-determined: asserted by caller"
        if rep.t_determined_asserted
        else "T-determined: auto-set, no proper sub-multiset of angles sums to a multiple of 1/12"
    )
    if args.dim == 4:
        return _classifier_doc(classify_dim4(rep), banner)
    data = dim5_data(rep)
    extra = {"N": data["N"], "k_N": str(data["k_N"]), "n_N": data["n_N"]}
    return _classifier_doc(classify_dim5(rep), banner, extra)


def _cmd_hp(args) -> dict:
    h = HpSeries(args.k0, args.offsets)
    return {
        "k0": str(h.k0),
        "offsets": list(h.offsets),
        "numerator": h.numerator(),
        "weight": str(Fraction(args.weight)),
        "dim": hp_dimension(h, args.weight),
    }


def _cmd_appendix(args) -> dict:
    return modstruct.appendix_demo(args.exponents, args.c, args.precision)


def _cmd_verify_structure(args) -> dict:
    m = _multiplier_from_args(args)
    rep = RepInput(args.dim, args.r, args.epsilon, m, args.assert_t_determined)
    if args.dim == 4:
        return modstruct.dim4_structure(rep, args.precision)
    if args.dim == 5:
        return modstruct.dim5_structure(rep, args.precision)
    raise UnsupportedInputError("structure verification covers dimensions 4 and 5")


def _add_common(p) -> None:
    p.add_argument("--precision", type=int, default=30)
    p.add_argument("--format", choices=("json", "text"), default="json")


def _add_rep_flags(p) -> None:
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--r", type=_parse_rat_list, required=True)
    p.add_argument("--eta-weight", type=_parse_rat, default=Fraction(0))
    p.add_argument("--chi", type=int, default=0)
    p.add_argument("--epsilon", type=int, choices=(1, -1), default=1)
    p.add_argument("--assert-t-determined", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vvmf")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("forms", help="classical q-expansions")
    p.add_argument("--series", required=True)
    _add_common(p)
    p.set_defaults(fn=_cmd_forms)

    pm = sub.add_parser("mmde", help="operators and their solutions")
    msub = pm.add_subparsers(dest="subcommand", required=True)
    for name, fn in (("construct", _cmd_mmde_construct), ("solve", _cmd_mmde_solve)):
        q = msub.add_parser(name)
        q.add_argument("--roots", type=_parse_rat_list)
        q.add_argument("--cusp", type=_parse_rat)
        q.add_argument("--operator")
        _add_common(q)
        q.set_defaults(fn=fn)

    p = sub.add_parser("wronskian", help="eta factorization of the wronskian")
    p.add_argument("--roots", type=_parse_rat_list)
    p.add_argument("--cusp", type=_parse_rat)
    p.add_argument("--operator")
    _add_common(p)
    p.set_defaults(fn=_cmd_wronskian)

    p = sub.add_parser("classify", help="minimal weight and generator offsets")
    _add_rep_flags(p)
    _add_common(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("hp", help="graded dimension from minimal weight and offsets")
    p.add_argument("--k0", type=_parse_rat, required=True)
    p.add_argument("--offsets", type=lambda s: [int(x) for x in s.split(",")], required=True)
    p.add_argument("--weight", type=_parse_rat, required=True)
    _add_common(p)
    p.set_defaults(fn=_cmd_hp)

    p = sub.add_parser("appendix", help="order-six one-parameter family checks")
    p.add_argument("--exponents", type=_parse_rat_list, required=True)
    p.add_argument("--c", type=_parse_rat_list, required=True)
    _add_common(p)
    p.set_defaults(fn=_cmd_appendix)

    p = sub.add_parser("verify-structure", help="scripted structure verification")
    _add_rep_flags(p)
    _add_common(p)
    p.set_defaults(fn=_cmd_verify_structure)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        doc = args.fn(args)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    except UnsupportedInputError as e:
        sys.stderr.write("unsupported input: %s\n" % e)
        return 3
    except PreconditionError as e:
        sys.stderr.write("precondition violated: %s\n" % e)
        return 2
    _emit(doc, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
