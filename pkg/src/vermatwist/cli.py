"""Command line front end.

Subcommands: ``sum-formula``, ``layers``, ``b2-table``, ``weyl``, ``sl2``.
All output is deterministic (stable orderings everywhere).  Exit codes:
0 on success, 1 on domain errors (the error class name is printed
verbatim), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .characters import (
    SIMPLE,
    BlockContext,
    CharVector,
    DecompositionMatrix,
    change_basis,
    decomposition_matrix,
    load_decomposition_file,
    make_block,
)
from .errors import VermatwistError
from .jantzen import (
    LayerTable,
    SumFormulaInput,
    SumFormulaResult,
    layers_multiplicity_free,
    sum_formula,
    sum_formula_xy,
)
from .rootsystem import Root, RootSystem, Weight, build_root_system
from .sl2lab import (
    DEFAULT_TRUNCATION,
    check_equivariance,
    coker_check_over_A,
    four_term_rank_check,
    is_natural,
    jantzen_layers_sl2,
    phi,
    psi,
)
from .weyl import (
    WeylElement,
    all_elements,
    bruhat_leq,
    element_from_word,
    longest_element,
    parse_word_text,
    word_text,
)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def _weight_text(lam: Weight) -> str:
    return "(" + ", ".join(str(c) for c in lam.coords) + ")"


def _root_text(beta: Root) -> str:
    return "(" + ",".join(str(c) for c in beta.coords) + ")"


def _vector_text(vec: CharVector) -> str:
    if vec.is_zero:
        return "0"
    return " ".join(f"{c:+}[{word_text(w)}]" for w, c in vec.items())


def _vector_json(vec: CharVector) -> dict[str, int]:
    return {word_text(w): c for w, c in vec.items()}


def _layers_json(table: LayerTable) -> dict[str, int]:
    ordered = sorted(table.layers, key=lambda w: (w.length, w.word))
    return {word_text(w): table.layers[w] for w in ordered}


def _layer_lines(table: LayerTable, name=word_text) -> list[str]:
    lines = []
    for k, row in enumerate(table.by_depth()):
        body = " ".join(f"L({name(x)})" for x in row) if row else "0"
        lines.append(f"  {k}: {body}")
    return lines


def _resolve_system(args, parser: argparse.ArgumentParser) -> RootSystem:
    if args.type and args.cartan_file:
        parser.error("give only one of --type and --cartan-file")
    if args.type:
        return build_root_system(args.type)
    if args.cartan_file:
        try:
            data = json.loads(Path(args.cartan_file).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ValueError(f"cannot read Cartan file: {exc}") from exc
        if not isinstance(data, dict) or "matrix" not in data:
            raise ValueError('Cartan file needs a "matrix" key')
        matrix = data["matrix"]
        if "rank" in data and len(matrix) != int(data["rank"]):
            raise ValueError("Cartan file rank does not match the matrix size")
        return build_root_system(matrix)
    parser.error("one of --type or --cartan-file is required")
    raise AssertionError("unreachable")


def _resolve_lambda(rs: RootSystem, text: str) -> Weight:
    if text == "default":
        return Weight(tuple(Fraction(-2) for _ in range(rs.rank)))
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    try:
        coords = tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse weight {text!r}: {exc}") from exc
    if len(coords) != rs.rank:
        raise ValueError(f"weight needs {rs.rank} coordinates, got {len(coords)}")
    return Weight(coords)


def _resolve_element(rs: RootSystem, text: str) -> WeylElement:
    return element_from_word(rs, parse_word_text(rs, text))


def _load_decomp(block: BlockContext, path: str | None) -> DecompositionMatrix | None:
    if path is None:
        return None
    return load_decomposition_file(block, path)


def _full_report(
    block: BlockContext,
    result: SumFormulaResult,
    w: WeylElement,
    y: WeylElement,
    decomp: DecompositionMatrix | None,
):
    """Simple-basis vector and layer table, or the error that blocks them."""
    try:
        # layer extraction first: its block requirements are stricter and
        # its refusal message names the real obstruction
        table = layers_multiplicity_free(
            SumFormulaInput(block=block, w=w, y=y), decomposition=decomp
        )
        dm = decomp if decomp is not None else decomposition_matrix(block)
        simple_vec = change_basis(block, result.vector, SIMPLE, dm)
        return simple_vec, table, None
    except VermatwistError as exc:
        return None, None, exc


def _sum_formula_data(args, parser):
    rs = _resolve_system(args, parser)
    lam = _resolve_lambda(rs, args.lam)
    block = make_block(rs, lam)
    w_in = _resolve_element(rs, args.w)
    y_in = _resolve_element(rs, args.y)
    if getattr(args, "xy", False):
        result = sum_formula_xy(block, w_in, y_in)
        w_eff = w_in * longest_element(rs)
        y_eff = block.param_for_weight(block.weight_of(w_in * y_in))
    else:
        result = sum_formula(SumFormulaInput(block=block, w=w_in, y=y_in))
        w_eff = w_in
        y_eff = block.param_for_weight(block.weight_of(y_in))
    decomp = _load_decomp(block, args.decomp_file)
    return block, result, w_eff, y_eff, decomp


def cmd_sum_formula(args, parser) -> int:
    block, result, w, y, decomp = _sum_formula_data(args, parser)
    simple_vec, table, blocked = _full_report(block, result, w, y, decomp)
    if args.format == "json":
        payload = {
            "w": word_text(w),
            "y": word_text(y),
            "verma": _vector_json(result.vector),
            "simple": _vector_json(simple_vec) if simple_vec is not None else None,
            "layers": _layers_json(table) if table is not None else None,
            "zero_top": table.zero_top if table is not None else None,
        }
        print(_dumps(payload))
        return 0
    lines = ["sum formula"]
    lines.append(f"block: lambda = {_weight_text(block.base)}")
    lines.append(f"w = {word_text(w)}")
    lines.append(f"y = {word_text(y)}  (mu = {_weight_text(block.weight_of(y))})")
    lines.append("R+(mu): " + (" ".join(_root_text(b) for b in result.rplus_mu) or "-"))
    lines.append("R+(w): " + (" ".join(_root_text(b) for b in result.rplus_w) or "-"))
    lines.append(f"verma vector: {_vector_text(result.vector)}")
    if blocked is None:
        lines.append(f"simple vector: {_vector_text(simple_vec)}")
        lines.append("layers:")
        lines.extend(_layer_lines(table))
        lines.append(f"zero top: {'yes' if table.zero_top else 'no'}")
    else:
        lines.append(f"layers: unavailable ({type(blocked).__name__}: {blocked})")
    print("\n".join(lines))
    return 0


def cmd_layers(args, parser) -> int:
    rs = _resolve_system(args, parser)
    lam = _resolve_lambda(rs, args.lam)
    block = make_block(rs, lam)
    w = _resolve_element(rs, args.w)
    y = _resolve_element(rs, args.y)
    decomp = _load_decomp(block, args.decomp_file)
    inp = SumFormulaInput(block=block, w=w, y=y)
    table = layers_multiplicity_free(inp, decomposition=decomp)
    result = sum_formula(inp)
    y_param = block.param_for_weight(block.weight_of(y))
    if args.format == "json":
        dm = decomp if decomp is not None else decomposition_matrix(block)
        simple_vec = change_basis(block, result.vector, SIMPLE, dm)
        payload = {
            "w": word_text(w),
            "y": word_text(y_param),
            "verma": _vector_json(result.vector),
            "simple": _vector_json(simple_vec),
            "layers": _layers_json(table),
            "zero_top": table.zero_top,
        }
        print(_dumps(payload))
        return 0
    lines = [f"layers of the twisted module at w = {word_text(w)}, y = {word_text(y_param)}"]
    lines.append(f"block: lambda = {_weight_text(block.base)}")
    lines.extend(_layer_lines(table))
    lines.append(f"zero top: {'yes' if table.zero_top else 'no'}")
    print("\n".join(lines))
    return 0


def render_b2_table() -> str:
    """The full B2 reproduction: every (w, y) pair, grouped by layer table."""
    rs = build_root_system("B2")
    lam = Weight((Fraction(-2), Fraction(-2)))
    block = make_block(rs, lam)
    w0 = longest_element(rs)

    def name(w: WeylElement) -> str:
        return "w0" if w == w0 else word_text(w)

    lines = ["Twisted Jantzen layer tables, type B2"]
    lines.append(
        f"block: lambda = {_weight_text(lam)}, regular integral; "
        "parameters by length: " + ", ".join(name(p) for p in block.params)
    )
    lines.append("w0 = stst; the module at (w, y) is dual to the module at (w*w0, y)")
    for y in block.params:
        lines.append("")
        lines.append(f"=== y = {name(y)} ===")
        groups: list[tuple[list[WeylElement], LayerTable]] = []
        for w in block.params:
            table = layers_multiplicity_free(SumFormulaInput(block=block, w=w, y=y))
            for members, known in groups:
                if known == table:
                    members.append(w)
                    break
            else:
                groups.append(([w], table))
        for members, table in groups:
            twists = ", ".join(name(m) for m in members)
            lines.append(f"M^w({name(y)}) for w in {{{twists}}}:")
            lines.extend(_layer_lines(table, name))
    lines.append("")
    return "\n".join(lines)


def golden_b2_text() -> str:
    """The frozen transcription shipped with the package."""
    return resources.files("vermatwist").joinpath("data/b2_golden.txt").read_text()


def cmd_b2_table(args, parser) -> int:
    sys.stdout.write(render_b2_table())
    return 0


def cmd_weyl(args, parser) -> int:
    rs = _resolve_system(args, parser)
    elements = all_elements(rs)
    w0 = longest_element(rs)
    covers = []
    for y in elements:
        for x in elements:
            if x.length + 1 == y.length and bruhat_leq(x, y):
                covers.append((x, y))
    if args.format == "json":
        payload = {
            "type": rs.label,
            "rank": rs.rank,
            "elements": [
                {
                    "word": word_text(w),
                    "length": w.length,
                    "inversions": [list(b.coords) for b in w.inversions],
                }
                for w in elements
            ],
            "covers": [[word_text(x), word_text(y)] for x, y in covers],
        }
        print(_dumps(payload))
        return 0
    label = rs.label if rs.label else "custom"
    lines = [f"Weyl group, type {label} (rank {rs.rank})"]
    lines.append(f"{len(elements)} elements; longest element = {word_text(w0)}")
    lines.append(
        "positive roots: " + " ".join(_root_text(b) for b in rs.positive_roots)
    )
    lines.append("elements (word: length, inversion set):")
    for w in elements:
        invs = " ".join(_root_text(b) for b in w.inversions) or "-"
        lines.append(f"  {word_text(w)}: {w.length}, {invs}")
    lines.append("bruhat covers:")
    for x, y in covers:
        lines.append(f"  {word_text(x)} < {word_text(y)}")
    print("\n".join(lines))
    return 0


def cmd_sl2(args, parser) -> int:
    try:
        lam = Fraction(args.lam)
    except (ValueError, ZeroDivisionError):
        parser.error(f"cannot parse --lambda value {args.lam!r} as a rational")
    trunc = args.trunc
    if trunc < 1:
        parser.error("--trunc must be at least 1")
    which = args.check
    natural = is_natural(lam)

    rows: list[tuple[str, object]] = []
    if which in ("all", "phi"):
        rows.append(("phi equivariance", check_equivariance(phi(lam, trunc))))
    if which in ("all", "psi"):
        rows.append(("psi equivariance", check_equivariance(psi(lam, trunc))))
    if which in ("all", "four-term"):
        rows.append(
            ("four-term exactness at X=0", four_term_rank_check(lam, trunc) if natural else None)
        )
        rows.append(("cokernel valuations over A", coker_check_over_A(lam, trunc)))
    if which in ("all", "jantzen"):
        rows.append(("jantzen valuations", jantzen_layers_sl2(lam, trunc)))

    if args.format == "json":
        payload: dict[str, object] = {"lambda": str(lam), "truncation": trunc}
        for label, value in rows:
            key = label.replace(" ", "_").replace("=", "").replace("-", "_")
            if isinstance(value, dict):
                payload["jantzen"] = {str(i): v for i, v in sorted(value.items())}
            else:
                payload[key] = value
        print(_dumps(payload))
        return 0
    lines = [f"sl2 deformation report: lambda = {lam}, truncation = {trunc}"]
    for label, value in rows:
        if isinstance(value, dict):
            vals = " ".join(f"{i}:{v}" for i, v in sorted(value.items()))
            lines.append(f"{label} (index:valuation): {vals}")
        elif value is None:
            lines.append(f"{label}: skipped (lambda is not a natural number)")
        else:
            lines.append(f"{label}: {'pass' if value else 'fail'}")
    print("\n".join(lines))
    return 0


def _add_system_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", help="root system label, e.g. B2 (see --help for the list)")
    p.add_argument("--cartan-file", help='JSON file {"rank": n, "matrix": [[...]]}')


def _add_block_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--lambda",
        dest="lam",
        default="default",
        help='base weight coordinates "m1,m2,..." (default: all -2)',
    )
    p.add_argument("--decomp-file", help="JSON decomposition matrix for rank > 2 blocks")


def _add_format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "json"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vermatwist",
        description="Twisted Verma module Jantzen filtrations, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("sum-formula", help="evaluate the twisted sum formula")
    _add_system_flags(p_sum)
    _add_block_flags(p_sum)
    _add_format_flag(p_sum)
    p_sum.add_argument("--w", required=True, help='twist word, e.g. "st" or "1,2"')
    p_sum.add_argument("--y", required=True, help="orbit parameter word")
    p_sum.add_argument(
        "--xy",
        action="store_true",
        help="interpret --w as x and --y as y in the two-letter form (parameter x*y)",
    )
    p_sum.set_defaults(func=cmd_sum_formula)

    p_layers = sub.add_parser("layers", help="full Jantzen layer table of one module")
    _add_system_flags(p_layers)
    _add_block_flags(p_layers)
    _add_format_flag(p_layers)
    p_layers.add_argument("--w", required=True, help="twist word")
    p_layers.add_argument("--y", required=True, help="orbit parameter word")
    p_layers.set_defaults(func=cmd_layers)

    p_b2 = sub.add_parser("b2-table", help="reproduce the full B2 table set")
    p_b2.set_defaults(func=cmd_b2_table)

    p_weyl = sub.add_parser("weyl", help="list the Weyl group with Bruhat covers")
    _add_system_flags(p_weyl)
    _add_format_flag(p_weyl)
    p_weyl.set_defaults(func=cmd_weyl)

    p_sl2 = sub.add_parser("sl2", help="rank 1 deformation checks")
    p_sl2.add_argument("--lambda", dest="lam", required=True, help="highest weight, a rational")
    p_sl2.add_argument("--trunc", type=int, default=DEFAULT_TRUNCATION)
    p_sl2.add_argument(
        "--check",
        choices=("all", "phi", "psi", "four-term", "jantzen"),
        default="all",
    )
    _add_format_flag(p_sl2)
    p_sl2.set_defaults(func=cmd_sl2)

    return parser


def _merge_value_flags(argv: list[str]) -> list[str]:
    # argparse rejects separated values that start with "-" (e.g. a weight
    # like -3,-1), so fold them into --flag=value form before parsing.
    merged: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--lambda", "--trunc") and i + 1 < len(argv):
            merged.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            merged.append(tok)
            i += 1
    return merged


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_value_flags(list(argv)))
    try:
        return args.func(args, parser)
    except (VermatwistError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
