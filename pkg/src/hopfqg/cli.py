"""Command-line front end.

Subcommands: ``check`` (axiom checkers on a structure file), ``distlaw``
(distributive-law levels on a Ψ file), ``construct`` (builders writing
canonical files), ``eval`` (morphism expressions, optionally compared).

Exit codes: 0 every requested equation passed (or objects written / sides
equal), 1 some equation failed (the report names the witnesses), 2 malformed
input.  Reports are JSON on stdout.  The environment variable ``HQG_FIELD``
overrides the default field Q for constructions lacking ``--field``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import dsl
from .category import NotInvertibleError
from .checks import (
    check_antipode_properties,
    check_comonoid,
    check_flags,
    check_hopf_quasigroup,
    check_nonassoc_bimonoid,
    check_unital_magma,
)
from .constructions import (
    CharTwoError,
    PreconditionError,
    SkewPairing,
    group_algebra,
    loop_algebra,
    psi_from_skew_pairing,
    smash_psi,
    gamma_two_actions,
    taft_h4,
    twisted_smash_gamma,
)
from .distlaw import (
    DISTLAW_LEVELS,
    DistLaw,
    check_distlaw_level,
    flip_law,
    wreath_product,
)
from .fields import FieldError, field_from_tag
from .io import (
    StructureFileError,
    dumps,
    linmap_from_json,
    load_linmap,
    load_loop,
    load_structure,
    report_to_json,
    save_linmap,
    save_loop,
    save_structure,
    structure_from_json,
    _load_json,
)
from .linmap import ShapeError
from .loops import NotAGroupError, NotALoopError, NotIPLoopError, chein_double
from .reports import AxiomReport
from .structures import QuasimoduleAction

CHECK_AXIOMS = ("magma", "comonoid", "bimonoid", "hopf", "antipode", "flags", "all")

_CHECKERS = {
    "magma": check_unital_magma,
    "comonoid": check_comonoid,
    "bimonoid": check_nonassoc_bimonoid,
    "hopf": check_hopf_quasigroup,
    "antipode": check_antipode_properties,
}


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        self.code = code
        super().__init__(message)


def _default_field():
    tag = os.environ.get("HQG_FIELD", "Q")
    try:
        return field_from_tag(tag)
    except FieldError as exc:
        raise CliError(f"bad HQG_FIELD: {exc}", 2) from None


def _field_option(value: Optional[str]):
    if value is None:
        return _default_field()
    try:
        return field_from_tag(value)
    except FieldError as exc:
        raise CliError(str(exc), 2) from None


def _emit(report: AxiomReport, command: str, out, informational=None) -> int:
    out.write(dumps(report_to_json(report, command, informational)))
    return 0 if report.passed else 1


def _cmd_check(args, out) -> int:
    try:
        s = load_structure(args.file)
    except StructureFileError as exc:
        raise CliError(str(exc), 2) from None
    wanted = CHECK_AXIOMS[:-1] if args.axioms == "all" else (args.axioms,)
    entries = []
    info_entries = []
    flags = {}
    for name in wanted:
        if name == "flags":
            # classification, not axioms: reported with witnesses but never
            # counted toward the exit code
            fl = check_flags(s)
            info_entries.extend(fl.report.entries)
            flags.update(
                {
                    "associative": fl.associative,
                    "coassociative": fl.coassociative,
                    "commutative": fl.commutative,
                    "cocommutative": fl.cocommutative,
                }
            )
        else:
            entries.extend(_CHECKERS[name].__call__(s).entries)
    report = AxiomReport(tuple(entries), flags)
    return _emit(report, f"check --axioms {args.axioms}", out, tuple(info_entries))


def _load_distlaw(args) -> DistLaw:
    try:
        a = load_structure(args.a)
        h = load_structure(args.h)
        if args.psi == "flip":
            return flip_law(h, a)
        psi = load_linmap(args.psi)
        return DistLaw(h, a, psi)
    except (StructureFileError, ShapeError) as exc:
        raise CliError(str(exc), 2) from None


def _cmd_distlaw(args, out) -> int:
    d = _load_distlaw(args)
    levels = DISTLAW_LEVELS if args.level == "all" else (args.level,)
    entries = []
    flags = {}
    for level in levels:
        rep = check_distlaw_level(d, level)
        entries.extend(rep.entries)
        flags.update(rep.flags)
    return _emit(AxiomReport(tuple(entries), flags), f"distlaw --level {args.level}", out)


def _load_action(path: str, hopf, module, side: str) -> QuasimoduleAction:
    try:
        phi = load_linmap(path)
        return QuasimoduleAction(hopf=hopf, module=module, phi=phi, side=side)
    except (StructureFileError, ShapeError) as exc:
        raise CliError(str(exc), 2) from None


def _cmd_construct(args, out) -> int:
    kind = args.kind
    try:
        if kind == "taft4":
            save_structure(taft_h4(_field_option(args.field)), args.out)
        elif kind == "loop-algebra":
            loop = load_loop(args.loop)
            save_structure(loop_algebra(loop, _field_option(args.field), args.name), args.out)
        elif kind == "group-algebra":
            loop = load_loop(args.group)
            save_structure(group_algebra(loop, _field_option(args.field), args.name), args.out)
        elif kind == "chein":
            save_loop(chein_double(load_loop(args.group), args.name), args.out)
        elif kind == "wreath":
            d = _load_distlaw(args)
            save_structure(wreath_product(d, args.name), args.out)
        elif kind == "psi-skew":
            a = load_structure(args.a)
            h = load_structure(args.h)
            tau = load_linmap(args.tau)
            save_linmap(psi_from_skew_pairing(SkewPairing(a, h, tau)).psi, args.out)
        elif kind == "psi-smash":
            a = load_structure(args.a)
            h = load_structure(args.h)
            act = _load_action(args.phi, h, a, "left")
            save_linmap(smash_psi(act).psi, args.out)
        elif kind == "gamma":
            a = load_structure(args.a)
            h = load_structure(args.h)
            act = _load_action(args.phi, h, a, "left")
            act_hat = _load_action(args.phi_hat, h, a, "left")
            save_linmap(gamma_two_actions(act, act_hat).psi, args.out)
        elif kind == "twisted-smash":
            a = load_structure(args.a)
            h = load_structure(args.h)
            act = _load_action(args.phi, h, a, "left")
            act_r = _load_action(args.phi_right, h, a, "right")
            save_linmap(twisted_smash_gamma(act, act_r).psi, args.out)
        else:  # pragma: no cover - argparse restricts choices
            raise CliError(f"unknown construction {kind!r}", 2)
    except PreconditionError as exc:
        out.write(dumps(report_to_json(exc.report, f"construct {kind}")))
        return 1
    except (StructureFileError, ShapeError, ValueError) as exc:
        # NotALoopError, NotAGroupError, NotIPLoopError, CharTwoError, FieldError
        if isinstance(exc, CliError):
            raise
        raise CliError(str(exc), 2) from None
    return 0


def _parse_ctx(pairs) -> dsl.Context:
    ctx: dsl.Context = {}
    for chunk in pairs or ():
        for item in chunk.split(","):
            item = item.strip()
            if not item:
                continue
            if "=" not in item:
                raise CliError(f"--ctx expects name=file, got {item!r}", 2)
            name, path = item.split("=", 1)
            doc = _load_json(path)
            if isinstance(doc, dict) and "maps" in doc:
                ctx[name] = structure_from_json(doc)
            elif isinstance(doc, dict) and "entries" in doc:
                ctx[name] = linmap_from_json(doc)
            else:
                raise CliError(f"{path} is neither a structure nor a linear-map file", 2)
    return ctx


def _read_expr(text: str) -> str:
    if text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise CliError(f"cannot read expression file: {exc}", 2) from None
    return text


def _cmd_eval(args, out) -> int:
    try:
        ctx = _parse_ctx(args.ctx)
    except StructureFileError as exc:
        raise CliError(str(exc), 2) from None
    try:
        expr = dsl.parse(_read_expr(args.expr))
        value = dsl.eval_expr(expr, ctx)
        if args.compare is not None:
            entry = dsl.check_equal(expr, dsl.parse(_read_expr(args.compare)), ctx)
            doc = report_to_json(AxiomReport((entry,)), "eval --compare")
            out.write(dumps(doc))
            return 0 if entry.passed else 1
    except (dsl.DslSyntaxError, dsl.UnboundNameError, dsl.TypeMismatchError, ShapeError) as exc:
        raise CliError(f"{type(exc).__name__}: {exc}", 2) from None
    from .io import linmap_to_json

    out.write(dumps(linmap_to_json(value)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfqg", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run axiom checkers on a structure file")
    c.add_argument("file")
    c.add_argument("--axioms", choices=CHECK_AXIOMS, default="all")

    d = sub.add_parser("distlaw", help="check a distributive law at one or all levels")
    d.add_argument("--a", required=True, help="structure file for A")
    d.add_argument("--h", required=True, help="structure file for H")
    d.add_argument("--psi", required=True, help="linear-map file for Ψ, or 'flip'")
    d.add_argument("--level", choices=DISTLAW_LEVELS + ("all",), default="all")

    k = sub.add_parser("construct", help="build a structure, loop, or law and write it")
    k.add_argument(
        "kind",
        choices=(
            "taft4",
            "loop-algebra",
            "group-algebra",
            "chein",
            "wreath",
            "psi-skew",
            "psi-smash",
            "gamma",
            "twisted-smash",
        ),
    )
    k.add_argument("-o", "--out", required=True)
    k.add_argument("--field", default=None, help="Q or GF:p (default: HQG_FIELD or Q)")
    k.add_argument("--name", default=None, help="object name for the result")
    k.add_argument("--a", help="structure file for A")
    k.add_argument("--h", help="structure file for H")
    k.add_argument("--psi", help="linear-map file for Ψ, or 'flip'")
    k.add_argument("--loop", help="loop table file")
    k.add_argument("--group", help="group table file")
    k.add_argument("--tau", help="linear-map file for a pairing A⊗H → K")
    k.add_argument("--phi", help="linear-map file for a left action H⊗A → A")
    k.add_argument("--phi-hat", dest="phi_hat", help="linear-map file for a second left action")
    k.add_argument("--phi-right", dest="phi_right", help="linear-map file for a right action A⊗H → A")

    e = sub.add_parser("eval", help="evaluate a morphism expression, optionally compare two")
    e.add_argument("--expr", required=True, help="expression text, or @file")
    e.add_argument("--ctx", action="append", help="name=file bindings, comma-separable")
    e.add_argument("--compare", default=None, help="second expression to compare against")

    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "check": _cmd_check,
        "distlaw": _cmd_distlaw,
        "construct": _cmd_construct,
        "eval": _cmd_eval,
    }
    try:
        return handlers[args.command](args, out)
    except CliError as exc:
        print(f"hopfqg: {exc}", file=sys.stderr)
        return exc.code
    except NotInvertibleError as exc:
        print(f"hopfqg: {exc}", file=sys.stderr)
        return 1


def entry() -> None:  # console-script hook
    sys.exit(main())
