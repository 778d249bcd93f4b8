"""
super-o: command-line front end.

Every subcommand prints one answer object (JSON by default) carrying the name of
the result it instantiates in `anchor`. Refusals are answers too: they carry a
`refusal` object and exit with status 1. Usage errors exit with status 2.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys
from functools import lru_cache, partial
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, TextIO

import jsonschema

from . import __version__
from .algebra import AlgebraDescriptor, atypical_roots, is_typical, parse_algebra, parse_weight, pe_atypical_pairs
from .config import Config, colour_enabled
from .errors import InvalidParameterError, SuperOError, UnsupportedError
from .homdim import (
    STRUCTURAL_KINDS,
    StructuralLabel,
    findim_block_pe,
    findim_gmod,
    findim_parabolic,
    findim_weight_cat,
    reduce_structural,
)
from .linkage import hom_dim_verma_even, hom_dim_verma_pe, linkage_dot, linkage_graph
from .oracle.highest_weight import hom_dim_oracle
from .oracle.suites import SUITES, run_suite
from .socle import (
    ext1_simple_verma_pe,
    has_simple_socle_quotient,
    lambda_plus_pe,
    socle_cokernel_even,
    socle_cokernel_pe,
    socle_cokernel_pe_oracle,
)
from .weyl import (
    bruhat_dot,
    bruhat_graph,
    descents,
    orbit_extreme,
    parse_element,
    parse_levi,
    pe_block_equivalent,
    pe_block_normal_form,
)

logger = logging.getLogger(__name__)

Answer = Dict[str, Any]

SCHEMA_PATH = Path(__file__).parent / "schema" / "answer.schema.json"

EXIT_OK = 0
EXIT_REFUSED = 1
EXIT_USAGE = 2


# ============================================================
# OUTPUT
# ============================================================

@lru_cache(maxsize=None)
def answer_schema() -> Dict[str, Any]:
    return json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))


def validate_answer(answer: Answer) -> None:
    jsonschema.validate(instance=answer, schema=answer_schema())


def _flat(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (str, int)):
        return str(value)
    return json.dumps(value, ensure_ascii=False)


def render_answer(answer: Answer, fmt: str, colour: bool = False) -> str:
    if fmt == "json":
        return json.dumps(answer, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key, value in answer.items():
            writer.writerow([key, _flat(value)])
        return buf.getvalue()
    if fmt == "table":
        width = max(len(k) for k in answer)
        lines = []
        for key, value in answer.items():
            label = key.ljust(width)
            if colour:
                label = f"\x1b[1m{label}\x1b[0m"
            lines.append(f"{label}  {_flat(value)}")
        return "\n".join(lines) + "\n"
    raise InvalidParameterError(f"format {fmt!r} only applies to the graph subcommand")


def _write(answer: Answer, config: Config, out: TextIO) -> None:
    validate_answer(answer)
    out.write(render_answer(answer, config.output_format, colour_enabled(out)))


# ============================================================
# SUBCOMMANDS
# ============================================================

def _algebra(args: argparse.Namespace) -> AlgebraDescriptor:
    return parse_algebra(args.algebra)


def _require_pe(a: AlgebraDescriptor, what: str) -> None:
    if a.kind != "pe":
        raise UnsupportedError(f"{what} is available for pe(n), not {a.name}")


def cmd_hom(args: argparse.Namespace, config: Config) -> Answer:
    a = _algebra(args)
    mu, lam = parse_weight(args.mu, a), parse_weight(args.lam, a)
    if args.method == "oracle":
        dim = hom_dim_oracle(a, mu, lam, args.depth, config)
        anchor = "verma-hom-oracle"
    elif a.kind == "pe":
        dim, anchor = hom_dim_verma_pe(a.n, mu, lam), "verma-hom-kac-functor"
    elif a.kind == "gl":
        dim, anchor = hom_dim_verma_even(a, mu, lam), "verma-hom-linkage"
    else:
        raise UnsupportedError(f"no Hom formula for {a.name}; use --method oracle")
    return {"command": "hom", "algebra": a.name, "method": args.method, "dim": dim, "anchor": anchor}


def cmd_socle(args: argparse.Namespace, config: Config) -> Answer:
    a = _algebra(args)
    top, sub = parse_weight(args.top, a), parse_weight(args.sub, a)
    if a.kind == "pe":
        if args.method == "oracle":
            socle, anchor = socle_cokernel_pe_oracle(a.n, top, sub, config), "socle-oracle"
        else:
            socle, anchor = socle_cokernel_pe(a.n, top, sub, config), "pe-socle-translation"
    elif a.kind == "gl":
        mu, x = orbit_extreme(a, top, "dominant")
        other, y = orbit_extreme(a, sub, "dominant")
        if other != mu:
            raise InvalidParameterError(f"{top.render()} and {sub.render()} lie in different orbits")
        socle = socle_cokernel_even(a, x, y, mu, verify=args.method == "oracle", config=config)
        anchor = "even-socle-wall-translation"
    else:
        raise UnsupportedError(f"socle formulas cover pe(n) and gl(n), not {a.name}")
    return {"command": "socle", "algebra": a.name, "socle": socle.render(), "anchor": anchor}


def cmd_ext1(args: argparse.Namespace, config: Config) -> Answer:
    a = _algebra(args)
    _require_pe(a, "Ext¹(L, Δ)")
    mu, lam = parse_weight(args.simple, a), parse_weight(args.verma, a)
    dim = ext1_simple_verma_pe(a.n, mu, lam, config)
    return {"command": "ext1", "algebra": a.name, "dim": dim, "anchor": "ext1-socle"}


def cmd_typical(args: argparse.Namespace, config: Config) -> Answer:
    a = _algebra(args)
    lam = parse_weight(args.weight, a)
    typical = is_typical(a, lam)
    if a.kind == "pe":
        witnesses = [f"({i},{j})" for i, j in pe_atypical_pairs(lam)]
    else:
        witnesses = [beta.render() for beta in atypical_roots(a, lam)]
    return {"command": "typical", "algebra": a.name, "typical": typical, "atypical": witnesses,
            "anchor": "typicality"}


def cmd_pd(args: argparse.Namespace, config: Config) -> Answer:
    a = _algebra(args)
    label = StructuralLabel(a, args.kind, parse_weight(args.weight, a), parse_levi(a, args.levi))
    status = reduce_structural(label, args.measure)
    return {"command": "pd", "algebra": a.name, "measure": args.measure, "label": label.render(),
            **status.render()}


def cmd_findim(args: argparse.Namespace, config: Config) -> Answer:
    a = _algebra(args)
    levi = parse_levi(a, args.levi)
    if args.category == "gmod":
        value, anchor = findim_gmod(a), "findim-gmod"
    elif args.category == "weight":
        value, anchor = findim_weight_cat(a), "findim-weight-category"
    elif args.category == "block":
        if args.weight is None:
            raise InvalidParameterError("--category block needs --weight")
        value, anchor = findim_block_pe(a, parse_weight(args.weight, a), levi), "findim-pe-block"
    else:
        value, anchor = findim_parabolic(a, levi), "findim-parabolic"
    return {"command": "findim", "algebra": a.name, "value": value, "anchor": anchor}


def cmd_block_eq(args: argparse.Namespace, config: Config) -> Answer:
    a = _algebra(args)
    _require_pe(a, "the block relation")
    lam, nu = parse_weight(args.weight, a), parse_weight(args.other, a)
    residues, parities = pe_block_normal_form(a, lam)
    return {
        "command": "block-eq",
        "algebra": a.name,
        "equivalent": pe_block_equivalent(a, lam, nu),
        "normal_form": {"residues": [str(r) for r in residues], "parities": [str(p) for p in parities]},
        "anchor": "pe-block-relation",
    }


def cmd_lambda_plus(args: argparse.Namespace, config: Config) -> Answer:
    a = _algebra(args)
    _require_pe(a, "λ⁺")
    plus = lambda_plus_pe(a.n, parse_weight(args.weight, a), config)
    return {"command": "lambda-plus", "algebra": a.name, "weight": plus.render(),
            "anchor": "odd-reflection-highest-weight"}


def cmd_bigrassmannian(args: argparse.Namespace, config: Config) -> Answer:
    a = _algebra(args)
    y = parse_element(a.weyl_family, args.element)
    if y.n != a.weyl_rank:
        raise InvalidParameterError(f"{y} is not in the Weyl group of {a.name}")
    return {
        "command": "bigrassmannian",
        "algebra": a.name,
        "bigrassmannian": has_simple_socle_quotient(y),
        "left_descents": sorted(descents(y, "left")),
        "right_descents": sorted(descents(y, "right")),
        "anchor": "bigrassmannian-simple-socle",
    }


def cmd_oracle_verify(args: argparse.Namespace, config: Config) -> Answer:
    if args.long:
        config = config.with_overrides(long_tests=True)
    report = run_suite(args.suite, config)
    return {"command": "oracle-verify", **report.render(), "anchor": "oracle-suite"}


def cmd_graph(args: argparse.Namespace, config: Config) -> Answer:
    a = _algebra(args)
    if args.kind == "bruhat":
        if a.kind == "glmn":
            raise UnsupportedError("Bruhat graphs are drawn for the full Weyl group of gl(n), pe(n), osp(2|2n)")
        graph = bruhat_graph(a.weyl_family, a.weyl_rank)
        nodes = [str(w) for w in graph.nodes]
        edges = [[str(u), str(v)] for u, v in graph.edges]
        dot = bruhat_dot(a.weyl_family, a.weyl_rank)
        anchor = "bruhat-order"
    else:
        if args.weight is None:
            raise InvalidParameterError("--kind linkage needs --weight")
        lam = parse_weight(args.weight, a)
        graph = linkage_graph(a, lam)
        nodes = [w.render() for w in graph.nodes]
        edges = [[u.render(), v.render()] for u, v in graph.edges]
        dot = linkage_dot(a, lam)
        anchor = "strong-linkage-order"
    return {"command": "graph", "algebra": a.name, "kind": args.kind,
            "graph": {"nodes": nodes, "edges": sorted(edges)}, "dot": dot, "anchor": anchor}


# ============================================================
# PARSER
# ============================================================

WEIGHT_FLAGS = frozenset({"--from", "--to", "--top", "--sub", "--simple", "--verma", "--weight", "--other"})
_NEGATIVE = re.compile(r"^-\d")


def glue_negative_weights(argv: List[str]) -> List[str]:
    """`--sub -1,2` becomes `--sub=-1,2` so argparse does not read the weight as a flag."""
    out: List[str] = []
    skip = False
    for k, token in enumerate(argv):
        if skip:
            skip = False
            continue
        nxt = argv[k + 1] if k + 1 < len(argv) else None
        if token in WEIGHT_FLAGS and nxt is not None and _NEGATIVE.match(nxt):
            out.append(f"{token}={nxt}")
            skip = True
        else:
            out.append(token)
    return out


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that writes usage, help and errors to the streams `run` was given."""

    def __init__(self, *args: Any, out: Optional[TextIO] = None, err: Optional[TextIO] = None,
                 **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self._out = out
        self._err = err

    def _print_message(self, message: str, file: Any = None) -> None:
        if not message:
            return
        stream = self._err if file is sys.stderr else self._out
        (stream or file or sys.stdout).write(message)


def _parse_args(argv: Optional[List[str]] = None, out: Optional[TextIO] = None,
                err: Optional[TextIO] = None) -> argparse.Namespace:
    parser_class = partial(_Parser, out=out, err=err)
    parser = parser_class(
        prog="super-o",
        description="Exact computations in category O for pe(n), osp(2|2n) and gl(m|n).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", type=Path, help="key = value configuration file")
    parser.add_argument("--format", choices=["json", "csv", "table"], help="output format")
    parser.add_argument("--max-depth", type=int, dest="max_depth")
    parser.add_argument("--max-basis-size", type=int, dest="max_basis_size")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=parser_class)

    def command(name: str, handler: Callable[[argparse.Namespace, Config], Answer], help_: str,
                algebra: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        if algebra:
            p.add_argument("--algebra", required=True, help="pe(3), osp(2|2), gl(2|1), gl(3)")
        p.set_defaults(handler=handler)
        return p

    p = command("hom", cmd_hom, "dim Hom(Δ(μ), Δ(λ))")
    p.add_argument("--from", dest="mu", required=True)
    p.add_argument("--to", dest="lam", required=True)
    p.add_argument("--method", choices=["formula", "oracle"], default="formula")
    p.add_argument("--depth", type=int)
    p.add_argument("--graph", action="store_true", help="print the linkage order of the orbit of --to as DOT")

    p = command("socle", cmd_socle, "soc(Δ(top)/Δ(sub))")
    p.add_argument("--top", required=True)
    p.add_argument("--sub", required=True)
    p.add_argument("--method", choices=["formula", "oracle"], default="formula")

    p = command("ext1", cmd_ext1, "dim Ext¹(L(μ), Δ(λ)) over pe(n)")
    p.add_argument("--simple", required=True)
    p.add_argument("--verma", required=True)

    p = command("typical", cmd_typical, "typicality of a weight")
    p.add_argument("--weight", required=True)

    p = command("pd", cmd_pd, "projective or injective dimension of a structural module")
    p.add_argument("--kind", choices=STRUCTURAL_KINDS, required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--levi", default="")
    p.add_argument("--measure", choices=["pd", "id"], default="pd")

    p = command("findim", cmd_findim, "finitistic dimensions")
    p.add_argument("--levi", default="")
    p.add_argument("--category", choices=["parabolic", "block", "gmod", "weight"], default="parabolic")
    p.add_argument("--weight")

    p = command("block-eq", cmd_block_eq, "block relation on pe(n)-weights")
    p.add_argument("--weight", required=True)
    p.add_argument("--other", required=True)

    p = command("lambda-plus", cmd_lambda_plus, "λ⁺ for pe(n)")
    p.add_argument("--weight", required=True)

    p = command("bigrassmannian", cmd_bigrassmannian, "bigrassmannian test for a Weyl group element")
    p.add_argument("--element", required=True, help="one-line notation, e.g. 231")

    p = command("graph", cmd_graph, "Bruhat or linkage graphs")
    p.add_argument("--kind", choices=["bruhat", "linkage"], required=True)
    p.add_argument("--weight")
    p.add_argument("--format", choices=["dot", "json", "csv", "table"], dest="graph_format",
                   help="dot (default) or any answer format")

    oracle = sub.add_parser("oracle", help="oracle verification suites")
    verbs = oracle.add_subparsers(dest="verb", required=True, parser_class=parser_class)
    verify = verbs.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=sorted(SUITES))
    verify.add_argument("--long", action="store_true", help="enlarge the grids")
    verify.set_defaults(handler=cmd_oracle_verify)

    if argv is None:
        argv = sys.argv[1:]
    return parser.parse_args(glue_negative_weights(list(argv)))


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _load_config(args: argparse.Namespace) -> Config:
    base = Config.from_file(args.config) if args.config is not None else Config()
    config = Config.from_env(base)
    fmt = args.format
    if args.command == "graph":
        fmt = args.graph_format or fmt or "dot"
    return config.with_overrides(
        output_format=fmt,
        max_depth=args.max_depth,
        max_basis_size=args.max_basis_size,
    )


def _refusal(command: str, exc: SuperOError) -> Answer:
    return {"command": command, "refusal": {"status": exc.status, "message": str(exc)}, "anchor": "refusal"}


def run(argv: Optional[List[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        args = _parse_args(argv, out, err)
    except SystemExit as exc:
        return int(exc.code or 0)
    _configure_logging(args.verbose)
    try:
        config = _load_config(args)
        if config.output_format == "dot" and args.command != "graph":
            raise InvalidParameterError("--format dot applies to the graph subcommand")
    except InvalidParameterError as exc:
        err.write(f"super-o: error: {exc}\n")
        return EXIT_USAGE

    try:
        if args.command == "hom" and args.graph:
            a = _algebra(args)
            out.write(linkage_dot(a, parse_weight(args.lam, a)))
            return EXIT_OK
        answer = args.handler(args, config)
    except InvalidParameterError as exc:
        err.write(f"super-o: error: {exc}\n")
        return EXIT_USAGE
    except SuperOError as exc:
        logger.warning("refused: %s", exc)
        _write(_refusal(args.command, exc), config, out)
        return EXIT_REFUSED

    if args.command == "graph" and config.output_format == "dot":
        out.write(answer["dot"])
        return EXIT_OK
    _write(answer, config, out)
    return EXIT_REFUSED if answer.get("passed") is False else EXIT_OK


def main() -> None:
    raise SystemExit(run())


__all__ = [
    "EXIT_OK",
    "EXIT_REFUSED",
    "EXIT_USAGE",
    "SCHEMA_PATH",
    "answer_schema",
    "glue_negative_weights",
    "main",
    "render_answer",
    "run",
    "validate_answer",
]
