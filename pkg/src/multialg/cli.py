"""Command line front end.

Exit codes are uniform across subcommands: 0 when the property holds or the
construction succeeded, 1 when the property fails (a witness is available
and written via --witness-out), 2 on input errors, 3 when the internal
equivalence cross-check fails (a bug, surfaced loudly).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable

from . import io as docio
from .chains import is_weakly_free
from .core import ElementMap, Signature, is_full_homomorphism, is_homomorphism, is_isomorphism
from .errors import EquivalenceViolation, MultialgError, NotWeaklyFree
from .hom import (
    ChoiceOracle,
    embed_into_terms,
    extend_cdf,
    injective_greedy,
    lexicographic_first,
    seeded_random,
    ump_refutation_demo,
)
from .nmatrix import entails, is_tautology, parse_formula
from .structure import ground
from .terms import truncate_mt


def _parse_sig_spec(spec: str) -> Signature:
    symbols: dict[str, int] = {}
    for piece in filter(None, (p.strip() for p in spec.split(","))):
        name, sep, arity = piece.partition(":")
        if not sep:
            raise ValueError(f"bad signature entry {piece!r}, expected name:arity")
        symbols[name.strip()] = int(arity)
    if not symbols:
        raise ValueError("empty signature specification")
    return Signature(symbols)


def _parse_vars_spec(spec: str) -> tuple[str, ...]:
    return tuple(sorted({v.strip() for v in spec.split(",") if v.strip()}))


def _load_json_map(path: str) -> dict[str, str]:
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in data.items()
    ):
        raise ValueError(f"{path}: expected a JSON object mapping elements to elements")
    return data


def _write_witness(path: str | None, payload: dict[str, Any]) -> None:
    if path:
        Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _emit(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _format_cycle(cycle: tuple[str, ...]) -> str:
    return " -> ".join(cycle + (cycle[0],))


def _make_oracle(name: str, a, b, seed: int) -> ChoiceOracle:
    if name == "first":
        return lexicographic_first(a, b)
    if name == "injective":
        return injective_greedy(a, b)
    return seeded_random(a, b, seed)


def cmd_check(args: argparse.Namespace) -> int:
    doc = docio.load_document(args.file)
    verdict = is_weakly_free(doc.algebra)

    if verdict.disconnected:
        print("disconnected:     yes")
    else:
        w = verdict.disconnected.witness
        print(f"disconnected:     no ({w.app1} and {w.app2} share {w.shared})")
    if verdict.ground_generated:
        print("ground-generated: yes")
    else:
        unreached = sorted(set(doc.algebra.universe) - verdict.ground_generated.trace.final)
        print(f"ground-generated: no (unreached: {', '.join(unreached)})")
    if verdict.strong_basis is not None:
        print(f"strong basis:     {{{', '.join(sorted(verdict.strong_basis))}}}")
    else:
        print("strong basis:     none")
    if verdict.chainless:
        print("chainless:        yes")
    else:
        print(f"chainless:        no (cycle: {_format_cycle(verdict.chain.cycle)})")
    print(f"weakly free:      {'YES' if verdict.weakly_free else 'NO'}")

    _write_witness(
        args.witness_out,
        {
            "command": "check",
            "input": args.file,
            "weakly_free": verdict.weakly_free,
            "clauses": {
                "disconnected": verdict.disconnected.ok,
                "ground_generated": verdict.ground_generated.ok,
                "strong_basis": sorted(verdict.strong_basis)
                if verdict.strong_basis is not None
                else None,
                "chainless": verdict.chainless,
            },
            "witnesses": {
                "overlap": docio.overlap_witness_json(verdict.disconnected.witness)
                if verdict.disconnected.witness
                else None,
                "chain": docio.chain_witness_json(verdict.chain) if verdict.chain else None,
                "generation": docio.generation_trace_json(verdict.ground_generated.trace),
                "basis": docio.basis_certificate_json(verdict.basis_certificate),
            },
        },
    )
    return 0 if verdict.weakly_free else 1


def cmd_hom(args: argparse.Namespace) -> int:
    source = docio.load_document(args.source).algebra
    target = docio.load_document(args.target).algebra
    f = ElementMap(source, target, _load_json_map(args.map))
    hom = is_homomorphism(f)
    full = is_full_homomorphism(f) if hom else hom
    iso = is_isomorphism(f) if full else False
    print(f"homomorphism: {'yes' if hom else 'no'}")
    print(f"full:         {'yes' if full else 'no'}")
    print(f"isomorphism:  {'yes' if iso else 'no'}")
    witness = full.witness if hom else hom.witness
    if witness:
        where = f"{witness.symbol}({','.join(witness.args)})"
        if witness.reason == "not-contained":
            print(f"witness: {witness.element} in {where} maps to {witness.image}, "
                  f"outside the target result set")
        else:
            print(f"witness: {witness.element} in the target of {where} is never attained")
    _write_witness(
        args.witness_out,
        {
            "command": "hom",
            "homomorphism": hom.ok,
            "full": full.ok,
            "isomorphism": iso,
            "witness": docio.hom_witness_json(witness) if witness else None,
        },
    )
    if args.iso:
        return 0 if iso else 1
    if args.full:
        return 0 if full else 1
    return 0 if hom else 1


def _not_weakly_free_payload(command: str, exc: NotWeaklyFree) -> dict[str, Any]:
    payload: dict[str, Any] = {"command": command, "ok": False, "failing_clause": exc.clause}
    if exc.clause == "disconnected":
        payload["witness"] = docio.overlap_witness_json(exc.witness)
    else:
        payload["witness"] = docio.generation_trace_json(exc.witness)
    return payload


def cmd_extend(args: argparse.Namespace) -> int:
    source = docio.load_document(args.source).algebra
    target = docio.load_document(args.target).algebra
    seed_map = _load_json_map(args.seed_map) if args.seed_map else {}
    oracle = _make_oracle(args.oracle, source, target, args.seed)
    try:
        extension = extend_cdf(source, seed_map, target, oracle)
    except NotWeaklyFree as exc:
        print(f"not extendable: source is not weakly free ({exc.clause} fails)")
        _write_witness(args.witness_out, _not_weakly_free_payload("extend", exc))
        return 1
    for x in extension.map.source.universe:
        marker = "seed" if x in extension.seed_map else extension.oracle.name
        print(f"{x} -> {extension.map(x)}    [{marker}]")
    _write_witness(
        args.witness_out,
        {
            "command": "extend",
            "ok": True,
            "oracle": oracle.name,
            "map": dict(extension.map.mapping),
            "consulted": [
                {"symbol": k[0], "args": list(k[1]), "target_args": list(k[2]),
                 "element": k[3], "answer": v}
                for k, v in sorted(oracle.consulted.items())
            ],
        },
    )
    return 0


def cmd_embed(args: argparse.Namespace) -> int:
    algebra = docio.load_document(args.file).algebra
    try:
        embedding = embed_into_terms(algebra)
    except NotWeaklyFree as exc:
        print(f"not embeddable: structure is not weakly free ({exc.clause} fails)")
        _write_witness(args.witness_out, _not_weakly_free_payload("embed", exc))
        return 1
    print(f"kappa: {embedding.kappa}")
    print(f"depth: {embedding.depth}")
    print(f"target universe: {len(embedding.target.universe)} terms")
    for x in embedding.map.source.universe:
        print(f"{x} -> {embedding.map(x)}")
    if args.out:
        payload = {
            "kappa": embedding.kappa,
            "depth": embedding.depth,
            "assignment": dict(embedding.map.mapping),
            "target": docio.document_dict(embedding.target),
        }
        Path(args.out).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_terms(args: argparse.Namespace) -> int:
    sig = _parse_sig_spec(args.sig)
    variables = _parse_vars_spec(args.vars)
    algebra = truncate_mt(sig, variables, args.kappa, args.depth)
    text = json.dumps(docio.document_dict(algebra), indent=2, sort_keys=True) + "\n"
    _emit(args.out, text)
    return 0


def cmd_ump_demo(args: argparse.Namespace) -> int:
    sig = _parse_sig_spec(args.sig)
    variables = _parse_vars_spec(args.vars)
    demo = ump_refutation_demo(sig, variables, args.depth)
    report = demo.report
    width = max((len(row[0]) for row in report.rows), default=10)
    print(f"{'term'.ljust(width)}  first-choice        second-choice")
    for term, left, right in report.rows:
        print(f"{term.ljust(width)}  {left.ljust(18)}  {right}")
    print(f"variables agree:            {'yes' if report.agree_on_variables else 'no'}")
    print(f"composites all differ:      {'yes' if report.differ_on_all_composites else 'no'}")
    print(f"both maps homomorphisms:    {'yes' if report.both_homomorphisms else 'no'}")
    ok = (
        report.agree_on_variables
        and report.differ_on_all_composites
        and report.both_homomorphisms
    )
    print("no unique extension exists." if ok else "demonstration failed.")
    _write_witness(
        args.witness_out,
        {
            "command": "ump-demo",
            "ok": ok,
            "variables": list(report.variables),
            "rows": [list(row) for row in report.rows],
        },
    )
    return 0 if ok else 1


def cmd_nm_taut(args: argparse.Namespace) -> int:
    doc = docio.load_document(args.file)
    matrix = doc.to_nmatrix()
    phi = parse_formula(args.formula, matrix.algebra.signature)
    verdict = is_tautology(phi, matrix)
    if verdict:
        print("tautology: yes")
    else:
        print("tautology: no")
        for key, value in sorted(verdict.witness.items()):
            print(f"  {key} = {value}")
    _write_witness(
        args.witness_out,
        {
            "command": "nm-taut",
            "formula": args.formula,
            "tautology": verdict.ok,
            "countervaluation": dict(verdict.witness) if verdict.witness else None,
        },
    )
    return 0 if verdict else 1


def cmd_nm_entails(args: argparse.Namespace) -> int:
    doc = docio.load_document(args.file)
    matrix = doc.to_nmatrix()
    sig = matrix.algebra.signature
    premises = [parse_formula(text, sig) for text in args.premises]
    conclusion = parse_formula(args.conclusion, sig)
    verdict = entails(premises, conclusion, matrix)
    if verdict:
        print("entails: yes")
    else:
        print("entails: no")
        for key, value in sorted(verdict.witness.items()):
            print(f"  {key} = {value}")
    _write_witness(
        args.witness_out,
        {
            "command": "nm-entails",
            "premises": list(args.premises),
            "conclusion": args.conclusion,
            "entails": verdict.ok,
            "countervaluation": dict(verdict.witness) if verdict.witness else None,
        },
    )
    return 0 if verdict else 1


def cmd_graph_import(args: argparse.Namespace) -> int:
    graph = docio.load_graph(args.file)
    algebra = docio.graph_to_multialgebra(graph, total=args.total)
    text = json.dumps(docio.document_dict(algebra), indent=2, sort_keys=True) + "\n"
    _emit(args.out, text)
    return 0


def cmd_graph_export(args: argparse.Namespace) -> int:
    algebra = docio.load_document(args.file).algebra
    graph = docio.multialgebra_to_graph(algebra)
    if args.dot:
        _emit(args.out, docio.graph_to_dot(graph))
    else:
        _emit(args.out, json.dumps(docio.graph_dict(graph), indent=2, sort_keys=True) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multialg",
        description="Finite multialgebras: freeness checks, extensions, embeddings, matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide weak freeness, reporting all four clauses")
    p.add_argument("file")
    p.add_argument("--witness-out", metavar="PATH")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hom", help="check a map between two structures")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map", help="JSON file mapping source elements to target elements")
    p.add_argument("--full", action="store_true", help="require a full homomorphism")
    p.add_argument("--iso", action="store_true", help="require an isomorphism")
    p.add_argument("--witness-out", metavar="PATH")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("extend", help="extend a ground assignment by oracle choices")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--seed-map", metavar="FILE", help="JSON object assigning ground elements")
    p.add_argument("--oracle", choices=["first", "injective", "random"], default="first")
    p.add_argument("--seed", type=int, default=0, help="seed for the random oracle")
    p.add_argument("--witness-out", metavar="PATH")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("embed", help="embed a weakly free structure into a truncation")
    p.add_argument("file")
    p.add_argument("-o", "--out", metavar="PATH", help="write the embedding as JSON")
    p.add_argument("--witness-out", metavar="PATH")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("terms", help="build a truncated term multialgebra document")
    p.add_argument("--sig", required=True, help="signature, e.g. s:1,f:2")
    p.add_argument("--vars", default="", help="comma-separated variable names")
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("-o", "--out", metavar="PATH")
    p.set_defaults(func=cmd_terms)

    p = sub.add_parser("ump-demo", help="two extensions of one assignment that disagree")
    p.add_argument("--sig", required=True)
    p.add_argument("--vars", default="")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--witness-out", metavar="PATH")
    p.set_defaults(func=cmd_ump_demo)

    p = sub.add_parser("nm-taut", help="tautology check over a matrix document")
    p.add_argument("file")
    p.add_argument("formula")
    p.add_argument("--witness-out", metavar="PATH")
    p.set_defaults(func=cmd_nm_taut)

    p = sub.add_parser("nm-entails", help="entailment check over a matrix document")
    p.add_argument("file")
    p.add_argument("conclusion")
    p.add_argument("premises", nargs="*", help="premise formulas")
    p.add_argument("--witness-out", metavar="PATH")
    p.set_defaults(func=cmd_nm_entails)

    p = sub.add_parser("graph-import", help="read a digraph as a one-operation structure")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--total", action="store_true", help="every vertex needs a successor")
    mode.add_argument("--partial", action="store_false", dest="total")
    p.add_argument("-o", "--out", metavar="PATH")
    p.set_defaults(func=cmd_graph_import, total=False)

    p = sub.add_parser("graph-export", help="write a one-operation structure as a digraph")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.add_argument("-o", "--out", metavar="PATH")
    p.set_defaults(func=cmd_graph_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except EquivalenceViolation as exc:
        print(f"internal error, equivalence cross-check failed: {exc}", file=sys.stderr)
        return 3
    except (MultialgError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
