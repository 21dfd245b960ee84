"""Command-line front end.

Exit codes: 0 success (including negative answers such as "inequivalent"),
1 invalid input (argument parsing or precondition violations), 2 a
requested verification failed.  JSON output is canonically sorted and
byte-stable for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import cyclic, fusion, metaplectic


@dataclass(frozen=True)
class CommandResult:
    status: int
    payload: object  # JSON-serializable
    table: str


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1, not argparse's default 2
        raise _ArgumentError(message)


def _dumps(payload: object) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _parse_subgroup(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise _ArgumentError(f"bad subgroup element list {text!r}") from exc


def _twist_lines(cat: cyclic.CyclicCategory) -> list[str]:
    return [f"  theta[{j}] = {t}" for j, t in enumerate(cat.twists)]


def _cmd_cyclic_build(args) -> CommandResult:
    cat = cyclic.build_cyclic(args.n, args.k)
    table = "\n".join([f"C({cat.n},{cat.k}): modular, rank {cat.n}"] + _twist_lines(cat))
    return CommandResult(0, cat.to_json_dict(), table)


def _cmd_cyclic_classify(args) -> CommandResult:
    reps = cyclic.classify(args.n)
    classes = [
        {"k": k, **cyclic.canonical_invariant(args.n, k).to_json_dict()} for k in reps
    ]
    payload = {"n": args.n, "count": len(reps), "classes": classes}
    lines = [f"{len(reps)} classes of cyclic modular categories on Z_{args.n}"]
    for entry in classes:
        signs = ", ".join(f"({f['pp']},{f['sign']:+d})" for f in entry["factors"])
        lines.append(f"  k = {entry['k']}  signs: [{signs}]")
    return CommandResult(0, payload, "\n".join(lines))


def _cmd_cyclic_equiv(args) -> CommandResult:
    equivalent = cyclic.are_equivalent(args.n, args.k1, args.k2)
    desc1 = cyclic.canonical_invariant(args.n, args.k1)
    desc2 = cyclic.canonical_invariant(args.n, args.k2)
    payload = {
        "n": args.n,
        "k1": args.k1,
        "k2": args.k2,
        "equivalent": equivalent,
        "descriptor1": desc1.to_json_dict(),
        "descriptor2": desc2.to_json_dict(),
    }
    verdict = "equivalent" if equivalent else "inequivalent"
    signs1 = ", ".join(f"{s:+d}" for _, s in desc1.factors)
    signs2 = ", ".join(f"{s:+d}" for _, s in desc2.factors)
    table = (
        f"C({args.n},{args.k1}) and C({args.n},{args.k2}) are {verdict}\n"
        f"  signs of k1: ({signs1})\n  signs of k2: ({signs2})"
    )
    return CommandResult(0, payload, table)


def _cmd_cyclic_autos(args) -> CommandResult:
    autos = cyclic.braided_autos(args.n, args.k)
    payload = {"n": args.n, "k": args.k, "autos": autos}
    table = f"twist-preserving automorphisms of C({args.n},{args.k}): " + ", ".join(
        str(u) for u in autos
    )
    return CommandResult(0, payload, table)


def _cmd_cyclic_bosons(args) -> CommandResult:
    cat = cyclic.build_cyclic(args.n, args.k)
    bosons = cyclic.find_bosons(cat)
    payload = {"n": args.n, "k": cat.k, "bosons": bosons}
    table = f"bosons of C({args.n},{cat.k}): " + ", ".join(str(b) for b in bosons)
    return CommandResult(0, payload, table)


def _cmd_cyclic_decompose(args) -> CommandResult:
    parts = cyclic.decompose(args.n, args.k)
    payload = {
        "n": args.n,
        "k": args.k % args.n,
        "factors": [p.to_json_dict() for p in parts],
    }
    table = f"C({args.n},{args.k}) = " + " x ".join(f"C({p.n},{p.k})" for p in parts)
    return CommandResult(0, payload, table)


def _cmd_cyclic_condense(args) -> CommandResult:
    cat = cyclic.build_cyclic(args.n, args.k)
    outcome = cyclic.condense_subgroup(cat, _parse_subgroup(args.subgroup))
    payload = {"n": args.n, "k": cat.k, **outcome.to_json_dict()}
    lines = [
        f"condensed C({args.n},{cat.k}) at H = {{{', '.join(map(str, outcome.subgroup))}}}",
        f"  |H-perp| = {len(outcome.perp)}",
        f"  quotient: C({outcome.quotient.n},{outcome.quotient.k})"
        + ("  [Lagrangian: trivial quotient]" if outcome.lagrangian else ""),
    ]
    return CommandResult(0, payload, "\n".join(lines))


def _cmd_cyclic_double(args) -> CommandResult:
    cat = cyclic.build_cyclic(args.n, args.k)
    witness = cyclic.find_lagrangian_subgroup(cat)
    payload = {
        "n": args.n,
        "k": cat.k,
        "quantum_double": witness is not None,
        "lagrangian_subgroup": list(witness) if witness is not None else None,
    }
    if witness is None:
        table = f"C({args.n},{cat.k}) is not a quantum double (no Lagrangian subgroup)"
    else:
        table = (
            f"C({args.n},{cat.k}) is a quantum double; Lagrangian subgroup "
            f"{{{', '.join(map(str, witness))}}}"
        )
    return CommandResult(0, payload, table)


def _cmd_so2_fusion(args) -> CommandResult:
    ring = metaplectic.so_n2_fusion(args.n)
    lines = [f"SO({args.n})_2 fusion ring, rank {ring.rank}"]
    for i in range(1, ring.rank):
        for j in range(i, ring.rank):
            terms = []
            for k, m in sorted(ring.fuse(i, j).items()):
                terms.append(f"{m} {ring.labels[k]}" if m > 1 else ring.labels[k])
            lines.append(f"  {ring.labels[i]} x {ring.labels[j]} = {' + '.join(terms)}")
    return CommandResult(0, ring.to_json_dict(), "\n".join(lines))


def _cmd_so2_verify(args) -> CommandResult:
    ring = metaplectic.so_n2_fusion(args.n)
    report = ring.verification()
    payload = {"N": args.n, **report.to_json_dict()}
    table = _render_report(f"SO({args.n})_2", report)
    return CommandResult(0 if report.all_passed else 2, payload, table)


def _cmd_so2_condense(args) -> CommandResult:
    ring = metaplectic.so_n2_fusion(args.n)
    data = metaplectic.condense_z2(ring, 1)
    group = metaplectic.reconstruct_group(data)
    ty = metaplectic.is_tambara_yamagami(group.data)
    payload = group.data.to_json_dict()
    lines = [f"condensed SO({args.n})_2 by Z:"]
    lines.append("  identity sector:")
    for obj in group.data.d0:
        lines.append(f"    {obj.name}  dim {obj.dim:g}  group element {obj.group_elem}")
    lines.append("  non-trivial sector:")
    for obj in group.data.d1:
        lines.append(f"    {obj.name}  dim {obj.dim:.6f}")
    lines.append(
        f"  Tambara-Yamagami: {'yes' if ty.is_ty else 'no'}; "
        f"group Z_{group.order} (cyclic)"
    )
    return CommandResult(0, payload, "\n".join(lines))


def _cmd_meta_count(args) -> CommandResult:
    count = metaplectic.count_metaplectic(args.n)
    payload = {"N": args.n, "count": count}
    table = f"{count} inequivalent metaplectic modular categories for N = {args.n}"
    return CommandResult(0, payload, table)


def _cmd_meta_enumerate(args) -> CommandResult:
    descriptors = metaplectic.enumerate_metaplectic(args.n)
    payload = {
        "N": args.n,
        "count": len(descriptors),
        "descriptors": [d.to_json_dict() for d in descriptors],
    }
    lines = [f"{len(descriptors)} metaplectic classes for N = {args.n}"]
    for d in descriptors:
        signs = ", ".join(f"eps_{p} = {e:+d}" for p, e in d.signs)
        lines.append(f"  {signs}; gauging bit {d.h3}")
    return CommandResult(0, payload, "\n".join(lines))


def _cmd_ring_verify(args) -> CommandResult:
    try:
        with open(args.file, encoding="utf-8") as fh:
            data = json.load(fh)
        ring = fusion.FusionRing.from_json_dict(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise _ArgumentError(f"cannot load fusion ring from {args.file}: {exc}")
    report = fusion.verify_fusion_ring(ring)
    payload = report.to_json_dict()
    table = _render_report(args.file, report)
    return CommandResult(0 if report.all_passed else 2, payload, table)


def _render_report(name: str, report: fusion.FusionReport) -> str:
    lines = [f"fusion axioms for {name}:"]
    for check in report.checks:
        status = "pass" if check.passed else f"FAIL at {check.witness}"
        lines.append(f"  {check.name:<14} {status}")
    return "\n".join(lines)


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "table"), default="table", dest="format"
    )
    parser = _Parser(prog="modcat", description=__doc__)
    groups = parser.add_subparsers(dest="group", required=True)

    cyc = groups.add_parser("cyclic", help="cyclic modular categories C(n,k)")
    cyc_sub = cyc.add_subparsers(dest="command", required=True)

    def cyc_cmd(name, func, *names, **extra):
        sub = cyc_sub.add_parser(name, parents=[common])
        for arg in names:
            sub.add_argument(arg, type=int)
        for arg, kwargs in extra.items():
            sub.add_argument(f"--{arg}", **kwargs)
        sub.set_defaults(func=func)

    cyc_cmd("build", _cmd_cyclic_build, "n", "k")
    cyc_cmd("classify", _cmd_cyclic_classify, "n")
    cyc_cmd("equiv", _cmd_cyclic_equiv, "n", "k1", "k2")
    cyc_cmd("autos", _cmd_cyclic_autos, "n", "k")
    cyc_cmd("bosons", _cmd_cyclic_bosons, "n", "k")
    cyc_cmd("decompose", _cmd_cyclic_decompose, "n", "k")
    cyc_cmd(
        "condense",
        _cmd_cyclic_condense,
        "n",
        "k",
        subgroup=dict(required=True, help="comma-separated subgroup elements"),
    )
    cyc_cmd("double", _cmd_cyclic_double, "n", "k")

    so2 = groups.add_parser("so2", help="SO(N)_2 fusion rings")
    so2_sub = so2.add_subparsers(dest="command", required=True)
    for name, func in (
        ("fusion", _cmd_so2_fusion),
        ("verify", _cmd_so2_verify),
        ("condense", _cmd_so2_condense),
    ):
        sub = so2_sub.add_parser(name, parents=[common])
        sub.add_argument("n", type=int)
        sub.set_defaults(func=func)

    meta = groups.add_parser("meta", help="metaplectic classification")
    meta_sub = meta.add_subparsers(dest="command", required=True)
    for name, func in (
        ("count", _cmd_meta_count),
        ("enumerate", _cmd_meta_enumerate),
    ):
        sub = meta_sub.add_parser(name, parents=[common])
        sub.add_argument("n", type=int)
        sub.set_defaults(func=func)

    ring = groups.add_parser("ring", help="fusion-ring files")
    ring_sub = ring.add_subparsers(dest="command", required=True)
    sub = ring_sub.add_parser("verify", parents=[common])
    sub.add_argument("--file", required=True)
    sub.set_defaults(func=_cmd_ring_verify)

    return parser


def run(argv: list[str]) -> CommandResult:
    """Dispatch a command line; never raises on user errors."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        result = args.func(args)
    except _ArgumentError as exc:
        msg = f"error: {exc}"
        return CommandResult(1, {"error": str(exc)}, msg)
    except ValueError as exc:
        msg = f"error: {exc}"
        return CommandResult(1, {"error": str(exc)}, msg)
    except SystemExit as exc:  # argparse -h and friends
        code = exc.code if isinstance(exc.code, int) else 0
        return CommandResult(code, None, "")
    if args.format == "json":
        return CommandResult(result.status, result.payload, _dumps(result.payload))
    return result


def main() -> None:
    result = run(sys.argv[1:])
    if result.status == 1:
        print(result.table, file=sys.stderr)
    else:
        if result.table:
            print(result.table)
        if result.status == 2:
            print("verification failed", file=sys.stderr)
    sys.exit(result.status)


if __name__ == "__main__":
    main()
