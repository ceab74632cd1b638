"""Command-line front end.

Subcommands: ``presets`` (list/show the shipped group datums),
``validate`` (check a JSON datum document), ``ext`` (one ordered pair),
``table`` (all nonzero pairs, TSV or DOT) and ``blocks`` (connected
components, optionally compared with diagram-orbit packets).

Exit codes: 0 success, 1 validation failure, 2 parse error, 3 resource
bound exceeded, 4 engine mismatch under --oracle --strict.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .coxeter import AffineCoxeterDatum
from .document import (
    DocumentError,
    DocumentParseError,
    dump_document,
    load_document,
)
from .formula import ext_dimension
from .hecke import (
    HeckeCharacter,
    HeckeCharacterError,
    format_spec,
    is_supersingular,
    parse_spec,
)
from .oracle import build_system, oracle_ext_dimension
from .presets import PRESET_BUILDERS, PresetError, build_preset
from .quiver import (
    blocks,
    build_quiver,
    compare_partitions,
    l_packets,
    identity_automorphism,
    to_dot,
)
from .torus import DEFAULT_ENUMERATION_BOUND, EnumerationBoundError, TorusDatum

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_BOUND = 3
EXIT_MISMATCH = 4

TSV_HEADER = "# heckext-table v1\n# columns: from\tto\tdimension"
TSV_HEADER_ORACLE = (
    "# heckext-table v1\n# columns: from\tto\tdimension\toracle\tverdict"
)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _preset_title(preset) -> str:
    return "%s(%s)" % (
        preset.name, ",".join(str(v) for v in preset.params.values())
    )


def _load_context(args) -> tuple[str, AffineCoxeterDatum, TorusDatum, tuple]:
    """Resolve --preset/--datum into (name, coxeter, torus, automorphisms)."""
    if getattr(args, "preset", None):
        try:
            preset = build_preset(args.preset)
        except PresetError as exc:
            raise CliError(str(exc), EXIT_PARSE)
        return _preset_title(preset), preset.coxeter, preset.torus, preset.automorphisms
    if getattr(args, "datum", None):
        try:
            datum = load_document(args.datum)
        except DocumentParseError as exc:
            raise CliError(str(exc), EXIT_PARSE)
        except DocumentError as exc:
            raise CliError(str(exc), EXIT_INVALID)
        autos = (identity_automorphism(datum.torus, datum.coxeter),)
        return datum.name, datum.coxeter, datum.torus, autos
    raise CliError("one of --preset or --datum is required", EXIT_PARSE)


def _warn_unverified(cox: AffineCoxeterDatum, strict: bool) -> bool:
    """Print the warning for exotic finite orders; return True when --strict
    must fall back to the oracle."""
    unverified = cox.unverified_orders()
    for s, t, m in unverified:
        print(
            "UNVERIFIED: coxeter order m(%s,%s)=%d is outside {2,3,inf}; "
            "the closed form is not vetted there" % (s, t, m),
            file=sys.stderr,
        )
    return strict and bool(unverified)


def cmd_presets(args) -> int:
    if args.action == "list":
        for name in sorted(PRESET_BUILDERS):
            _, arity = PRESET_BUILDERS[name]
            example = "%s:%s" % (name, ":".join(["3"] * arity))
            print("%s\t%d argument(s)\te.g. %s" % (name, arity, example))
        return EXIT_OK
    try:
        preset = build_preset(args.spec)
    except PresetError as exc:
        raise CliError(str(exc), EXIT_PARSE)
    name = _preset_title(preset)
    if args.json:
        sys.stdout.write(dump_document(name, preset.coxeter, preset.torus))
        return EXIT_OK
    print("preset %s" % name)
    print("reflections: %s" % ", ".join(preset.coxeter.labels))
    print("residue characteristic: %d" % preset.torus.residue_char)
    print("torus orders: %s" % ", ".join(str(d) for d in preset.torus.orders))
    print("diagram automorphisms: %d" % len(preset.automorphisms))
    return EXIT_OK


def cmd_validate(args) -> int:
    try:
        datum = load_document(args.path)
    except DocumentParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except DocumentError as exc:
        print("invalid datum: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    print(
        "valid: %s (%d reflections, torus order %d)"
        % (datum.name, len(datum.coxeter.labels), datum.torus.group_order)
    )
    return EXIT_OK


def _parse_pair(
    torus: TorusDatum, cox: AffineCoxeterDatum, args
) -> tuple[HeckeCharacter, HeckeCharacter]:
    try:
        xi1 = parse_spec(torus, cox, getattr(args, "from"))
        xi2 = parse_spec(torus, cox, args.to)
    except HeckeCharacterError as exc:
        # distinguish malformed text from an inadmissible marked set
        code = EXIT_INVALID if "cannot be marked" in str(exc) else EXIT_PARSE
        raise CliError(str(exc), code)
    return xi1, xi2


def cmd_ext(args) -> int:
    name, cox, torus, _ = _load_context(args)
    force_oracle = _warn_unverified(cox, args.strict)
    xi1, xi2 = _parse_pair(torus, cox, args)
    result = ext_dimension(torus, cox, xi1, xi2)
    use_oracle = args.oracle or force_oracle
    print("datum: %s" % name)
    print("from: %s" % format_spec(xi1))
    print("to:   %s" % format_spec(xi2))
    print("case: %s" % result.case_tag)
    for w in result.warnings:
        print("warning: %s" % w)
    print("dimension (closed form): %d" % result.dimension)
    for s in cox.labels:
        print("  %s: %s" % (s, result.per_reflection[s]))
    exit_code = EXIT_OK
    if use_oracle:
        oracle_dim = oracle_ext_dimension(torus, cox, xi1, xi2)
        verdict = "MATCH" if oracle_dim == result.dimension else "MISMATCH"
        print("dimension (oracle):      %d" % oracle_dim)
        print("verdict: %s" % verdict)
        if verdict == "MISMATCH" and args.strict:
            exit_code = EXIT_MISMATCH
    if args.explain:
        system = build_system(torus, cox, xi1, xi2)
        print("constraint rows over F_%d in (%s):" % (
            system.prime, ", ".join(system.unknowns)
        ))
        for coeffs, label in system.rows:
            print("  %-20s %s" % (label, " ".join(str(c) for c in coeffs)))
    return exit_code


def cmd_table(args) -> int:
    name, cox, torus, _ = _load_context(args)
    force_oracle = _warn_unverified(cox, args.strict)
    try:
        quiver = build_quiver(
            torus,
            cox,
            engine="oracle" if (args.oracle or force_oracle) else "formula",
            include_non_ss=not args.supersingular_only,
            bound=args.bound,
        )
    except EnumerationBoundError as exc:
        raise CliError(str(exc), EXIT_BOUND)
    if args.format == "dot":
        sys.stdout.write(to_dot(quiver))
        return EXIT_OK
    exit_code = EXIT_OK
    lines = []
    if args.oracle:
        lines.append(TSV_HEADER_ORACLE)
        # compare the engines on every pair that is nonzero for either
        other = build_quiver(
            torus,
            cox,
            engine="formula",
            include_non_ss=not args.supersingular_only,
            bound=args.bound,
        )
        keys = sorted(set(quiver.edges) | set(other.edges))
        for i, j in keys:
            d_oracle = quiver.edges.get((i, j), 0)
            d_formula = other.edges.get((i, j), 0)
            verdict = "MATCH" if d_oracle == d_formula else "MISMATCH"
            if verdict == "MISMATCH" and args.strict:
                exit_code = EXIT_MISMATCH
            lines.append(
                "%s\t%s\t%d\t%d\t%s"
                % (
                    format_spec(quiver.nodes[i]),
                    format_spec(quiver.nodes[j]),
                    d_formula,
                    d_oracle,
                    verdict,
                )
            )
    else:
        lines.append(TSV_HEADER)
        for i, j in sorted(quiver.edges):
            lines.append(
                "%s\t%s\t%d"
                % (
                    format_spec(quiver.nodes[i]),
                    format_spec(quiver.nodes[j]),
                    quiver.edges[(i, j)],
                )
            )
    print("\n".join(lines))
    return exit_code


def cmd_blocks(args) -> int:
    name, cox, torus, autos = _load_context(args)
    _warn_unverified(cox, strict=False)
    try:
        quiver = build_quiver(torus, cox, engine="formula", bound=args.bound)
    except EnumerationBoundError as exc:
        raise CliError(str(exc), EXIT_BOUND)
    block_partition = blocks(quiver)
    print("datum: %s" % name)
    print("%d supersingular characters, %d blocks" % (
        len(quiver.nodes), len(block_partition)
    ))
    for k, part in enumerate(block_partition):
        members = ", ".join(format_spec(quiver.nodes[i]) for i in part)
        print("block %d: %s" % (k, members))
    if not args.compare_l_packets:
        return EXIT_OK
    packet_partition = l_packets(torus, cox, autos, quiver.nodes)
    for k, part in enumerate(packet_partition):
        members = ", ".join(format_spec(quiver.nodes[i]) for i in part)
        print("packet %d: %s" % (k, members))
    comparison = compare_partitions(block_partition, packet_partition)
    print("comparison: %s" % ("EQUAL" if comparison.equal else "NOT EQUAL"))
    for part in comparison.blocks_meeting_multiple_packets:
        members = ", ".join(format_spec(quiver.nodes[i]) for i in part)
        print("block spanning several packets: %s" % members)
    for part in comparison.packets_split_across_blocks:
        members = ", ".join(format_spec(quiver.nodes[i]) for i in part)
        print("packet split across blocks: %s" % members)
    return EXIT_OK


def _add_datum_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--preset", help="preset reference, e.g. sl2:5 or sl_n:3:2")
    sub.add_argument("--datum", help="path to a JSON group-datum document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckext",
        description="Extension dimensions between characters of affine "
        "pro-p Iwahori-Hecke algebras.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_presets = subs.add_parser("presets", help="list or show shipped datums")
    presets_subs = p_presets.add_subparsers(dest="action", required=True)
    presets_subs.add_parser("list", help="list preset families")
    p_show = presets_subs.add_parser("show", help="show one preset")
    p_show.add_argument("spec", help="preset reference, e.g. u11:3")
    p_show.add_argument("--json", action="store_true", help="emit the JSON document")

    p_validate = subs.add_parser("validate", help="validate a JSON datum")
    p_validate.add_argument("path")

    p_ext = subs.add_parser("ext", help="dimension for one ordered pair")
    _add_datum_options(p_ext)
    p_ext.add_argument("--from", required=True, help='character spec "phases;marks"')
    p_ext.add_argument("--to", required=True, help='character spec "phases;marks"')
    p_ext.add_argument("--oracle", action="store_true", help="also run the oracle")
    p_ext.add_argument("--explain", action="store_true", help="dump constraint rows")
    p_ext.add_argument(
        "--strict", action="store_true",
        help="exit 4 on engine mismatch; force the oracle on exotic orders",
    )

    p_table = subs.add_parser("table", help="all nonzero ordered pairs")
    _add_datum_options(p_table)
    p_table.add_argument("--oracle", action="store_true", help="run both engines")
    p_table.add_argument(
        "--supersingular-only", action="store_true",
        help="restrict nodes to supersingular characters",
    )
    p_table.add_argument("--format", choices=("tsv", "dot"), default="tsv")
    p_table.add_argument("--strict", action="store_true")
    p_table.add_argument("--bound", type=int, default=DEFAULT_ENUMERATION_BOUND)

    p_blocks = subs.add_parser("blocks", help="block decomposition report")
    _add_datum_options(p_blocks)
    p_blocks.add_argument(
        "--compare-l-packets", action="store_true",
        help="also print diagram orbits and the comparison verdict",
    )
    p_blocks.add_argument("--bound", type=int, default=DEFAULT_ENUMERATION_BOUND)
    return parser


COMMANDS = {
    "presets": cmd_presets,
    "validate": cmd_validate,
    "ext": cmd_ext,
    "table": cmd_table,
    "blocks": cmd_blocks,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
