"""Command-line front end: ``gentle-hh <verb> ...``.

Exit codes: 0 success, 1 domain error (non-gentle input and the like),
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .ag import ag_equal, ag_invariant, format_ag
from .atilde import (
    BranchParams,
    StructureError,
    decompose,
    generate_normal_form,
    is_atilde_branched,
    is_m_cluster_tilted_atilde,
    params_from_decomposition,
)
from .gerstenhaber import gerstenhaber_nontrivial
from .hochschild import FieldSpec, hh_sequence
from .quiver import (
    QuiverError,
    QuiverSyntaxError,
    find_saturated_cycles,
    is_admissible,
    is_connected,
    is_gentle,
    load_bound_quiver,
    serialize_bound_quiver,
)

COMPARE_CHARACTERISTICS = (0, 2, 3)


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


class _UsageError(Exception):
    pass


def _field_arg(text: str) -> FieldSpec:
    try:
        return FieldSpec(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gentle-hh", description="Invariants of gentle bound quivers of type A-tilde.")
    parser.add_argument("--json", action="store_true", help="emit one JSON object instead of text")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    sub.add_parser("validate", help="gentleness and admissibility report").add_argument("file")
    sub.add_parser("ag", help="AG-invariant").add_argument("file")

    p = sub.add_parser("hh", help="Hochschild cohomology dimensions")
    p.add_argument("file")
    p.add_argument("--char", type=_field_arg, default=FieldSpec(0))
    p.add_argument("--max", type=int, default=24)

    for verb, text in (
        ("params", "structural parameters and root decomposition"),
        ("classify", "m-cluster tilted and A-tilde-branched verdicts"),
        ("saturated", "m-saturated cycles"),
    ):
        p = sub.add_parser(verb, help=text)
        p.add_argument("file")
        p.add_argument("--m", type=_positive, required=True)

    p = sub.add_parser("generate", help="normal-form quiver for given parameters")
    p.add_argument("--m", type=_positive, required=True)
    for name in ("s1", "s2", "k1", "k2"):
        p.add_argument(f"--{name}", type=int, default=0)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("-o", "--output")

    p = sub.add_parser("compare", help="compare two quivers")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--m", type=_positive)
    p.add_argument("--max", type=int, default=24)

    p = sub.add_parser("gerstenhaber", help="nontriviality of cup product and bracket")
    p.add_argument("file")
    p.add_argument("--m", type=_positive)
    p.add_argument("--char", type=_field_arg, default=FieldSpec(0))
    return parser


def _load_checked(path: str):
    bq = load_bound_quiver(path)
    report = is_gentle(bq)
    if not report:
        raise DomainError(f"{path}: not gentle: " + "; ".join(report.violations))
    if not is_admissible(bq):
        raise DomainError(f"{path}: not admissible: an oriented cycle carries no relation")
    if not is_connected(bq):
        raise DomainError(f"{path}: not connected; split it into components first")
    return bq


def _params_dict(p: BranchParams) -> dict:
    return {"m": p.m, "s1": p.s1, "s2": p.s2, "k1": p.k1, "k2": p.k2, "r": p.r}


def _verdict_dict(v) -> dict:
    return {
        "holds": v.holds,
        "conditions": {name: {"ok": ok, "detail": detail} for name, (ok, detail) in v.conditions.items()},
    }


def _result(**kw) -> dict:
    base = {"phi": None, "hh": None, "params": None, "verdicts": None}
    base.update(kw)
    return base


def cmd_validate(args):
    bq = load_bound_quiver(args.file)
    report = is_gentle(bq)
    admissible = is_admissible(bq)
    connected = is_connected(bq)
    lines = [f"quiver {bq.name}: {bq.num_vertices} vertices, {bq.num_arrows} arrows, {len(bq.relations)} relations"]
    lines.append("gentle: " + ("yes" if report else "no"))
    lines += [f"  {v}" for v in report.violations]
    lines.append("admissible: " + ("yes" if admissible else "no (an oriented cycle carries no relation)"))
    lines.append("connected: " + ("yes" if connected else "no"))
    data = _result(verdicts={"gentle": report.gentle, "violations": report.violations,
                             "admissible": admissible, "connected": connected})
    code = 0 if report and admissible else 1
    return code, "\n".join(lines), data


def cmd_ag(args):
    phi = ag_invariant(_load_checked(args.file))
    return 0, format_ag(phi), _result(phi=format_ag(phi))


def cmd_hh(args):
    bq = _load_checked(args.file)
    phi = ag_invariant(bq)
    hh = hh_sequence(phi, bq.num_vertices, bq.num_arrows, args.max, args.char)
    lines = [f"characteristic {args.char.characteristic}", "n  dim HH^n"]
    lines += [f"{n:<2} {d}" for n, d in enumerate(hh.dims)]
    return 0, "\n".join(lines), _result(phi=format_ag(phi), hh=list(hh.dims))


def cmd_params(args):
    bq = _load_checked(args.file)
    d = decompose(bq, args.m)
    p = params_from_decomposition(bq, d)
    text = f"{p}\n{d.summary()}"
    return 0, text, _result(params=_params_dict(p), decomposition=d.summary().splitlines())


def cmd_classify(args):
    bq = load_bound_quiver(args.file)
    ct = is_m_cluster_tilted_atilde(bq, args.m)
    br = is_atilde_branched(bq, args.m)
    lines = [f"{args.m}-cluster tilted of type A-tilde: {'yes' if ct else 'no'}", ct.report(),
             f"A-tilde-branched: {'yes' if br else 'no'}", br.report()]
    data = _result(verdicts={"m_cluster_tilted": _verdict_dict(ct), "atilde_branched": _verdict_dict(br)})
    return 0, "\n".join(lines), data


def cmd_generate(args):
    p = BranchParams(args.m, args.s1, args.s2, args.k1, args.k2, args.r)
    text = serialize_bound_quiver(generate_normal_form(p))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return 0, f"wrote {args.output}", _result(params=_params_dict(p.canonical()), file=args.output)
    return 0, text.rstrip("\n"), _result(params=_params_dict(p.canonical()), quiver=text)


def cmd_compare(args):
    a, b = _load_checked(args.file1), _load_checked(args.file2)
    phi_a, phi_b = ag_invariant(a), ag_invariant(b)
    same_phi = ag_equal(phi_a, phi_b)
    same_q0 = a.num_vertices == b.num_vertices
    hh = {}
    same_hh = True
    for c in COMPARE_CHARACTERISTICS:
        ha = hh_sequence(phi_a, a.num_vertices, a.num_arrows, args.max, c).dims
        hb = hh_sequence(phi_b, b.num_vertices, b.num_arrows, args.max, c).dims
        hh[str(c)] = {"equal": ha == hb, "first": list(ha), "second": list(hb)}
        same_hh &= ha == hb
    if not same_phi:
        verdict = ("same Hochschild data, different AG-invariant: not derived equivalent" if same_hh and same_q0
                   else "different AG-invariant: not derived equivalent")
    else:
        verdict = "AG-invariant and vertex count match (derived equivalence not decided by this tool alone)"
        if not same_q0:
            verdict = "AG-invariant matches but vertex counts differ: not derived equivalent"
    lines = [
        f"phi({a.name}) = {format_ag(phi_a)}",
        f"phi({b.name}) = {format_ag(phi_b)}",
        f"phi: {'equal' if same_phi else 'differ'}",
        f"|Q0|: {'equal' if same_q0 else 'differ'} ({a.num_vertices} vs {b.num_vertices})",
    ]
    for c in COMPARE_CHARACTERISTICS:
        lines.append(f"HH^n, n <= {args.max}, characteristic {c}: {'equal' if hh[str(c)]['equal'] else 'differ'}")
    params = None
    if args.m is not None:
        params = {}
        for q in (a, b):
            try:
                p = params_from_decomposition(q, decompose(q, args.m))
                params[q.name] = _params_dict(p)
                lines.append(f"params({q.name}): {p}")
            except StructureError as exc:
                params[q.name] = None
                lines.append(f"params({q.name}): unavailable ({exc})")
    lines.append(f"verdict: {verdict}")
    data = _result(
        phi={"first": format_ag(phi_a), "second": format_ag(phi_b), "equal": same_phi},
        hh=hh,
        params=params,
        verdicts={"phi_equal": same_phi, "q0_equal": same_q0, "hh_equal": same_hh, "verdict": verdict},
    )
    return 0, "\n".join(lines), data


def cmd_gerstenhaber(args):
    bq = _load_checked(args.file)
    v = gerstenhaber_nontrivial(bq, args.char)
    lines = [f"characteristic {args.char.characteristic}",
             f"cup product: {'nontrivial' if v.cup else 'no gentle pair found'}",
             f"Lie bracket: {'nontrivial' if v.bracket else 'not established'}"]
    if v.witness:
        lines.append(f"witness: ({' '.join(v.witness.path)}, e_{v.witness.base}) in degree {v.degree}")
    if args.m is not None:
        lines.append(f"{args.m}-saturated cycles: {len(find_saturated_cycles(bq, args.m))}")
    witness = None if v.witness is None else {"path": list(v.witness.path), "base": v.witness.base, "degree": v.degree}
    return 0, "\n".join(lines), _result(verdicts={"cup": v.cup, "bracket": v.bracket, "witness": witness})


def cmd_saturated(args):
    bq = _load_checked(args.file)
    cycles = find_saturated_cycles(bq, args.m)
    text = "\n".join(" ".join(c) for c in cycles) if cycles else f"no {args.m}-saturated cycles"
    return 0, text, _result(saturated=[list(c) for c in cycles])


COMMANDS = {
    "validate": cmd_validate,
    "ag": cmd_ag,
    "hh": cmd_hh,
    "params": cmd_params,
    "classify": cmd_classify,
    "generate": cmd_generate,
    "compare": cmd_compare,
    "gerstenhaber": cmd_gerstenhaber,
    "saturated": cmd_saturated,
}


def run(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        code, text, data = COMMANDS[args.verb](args)
    except (QuiverSyntaxError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except (DomainError, QuiverError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    if args.json:
        print(json.dumps(data, sort_keys=True), file=out)
    else:
        print(text, file=out)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
