"""JSON documents for structures, graphs and witnesses, plus DOT export.

The document layout is fixed:

    {"signature": {"s": 1},
     "universe": ["-1", "1"],
     "partial": false,
     "operations": {"s": [{"args": ["-1"], "result": ["1"]}]},
     "designated": null}

Deserialization is strict: schema problems raise DocumentError with a
JSON-pointer-style location, and the loaded structure must pass validation.
Serialization is canonical (sorted keys, sorted universe, sorted argument
tuples) so that save and load round-trip losslessly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .chains import ChainWitness, Justification
from .core import (
    Application,
    HomWitness,
    MultiAlgebra,
    Signature,
    SubWitness,
    validate,
)
from .errors import DocumentError, NotTotal
from .nmatrix import NMatrix
from .structure import BasisCertificate, GenerationTrace, OverlapWitness


@dataclass(frozen=True)
class MultiAlgebraDocument:
    """A loaded structure document; `designated` promotes it to a matrix."""

    algebra: MultiAlgebra
    designated: frozenset[str] | None

    def to_nmatrix(self) -> NMatrix:
        if self.designated is None:
            raise ValueError("document has no designated block")
        return NMatrix(self.algebra, self.designated)


def _fail(location: str, message: str) -> None:
    raise DocumentError(location, message)


def _need_string_list(value: Any, location: str) -> list[str]:
    if not isinstance(value, list):
        _fail(location, "expected a list of strings")
    for i, x in enumerate(value):
        if not isinstance(x, str) or not x:
            _fail(f"{location}/{i}", "expected a non-empty string")
    return value


def load_document(source: Mapping[str, Any] | str | Path) -> MultiAlgebraDocument:
    """Load and validate a structure document from a dict, path or file."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError("/", f"not valid JSON: {exc}") from None
    else:
        data = source
    if not isinstance(data, Mapping):
        _fail("/", "expected a JSON object")
    allowed = {"signature", "universe", "partial", "operations", "designated"}
    for key in data:
        if key not in allowed:
            _fail(f"/{key}", "unknown field")
    for key in ("signature", "universe", "partial", "operations"):
        if key not in data:
            _fail(f"/{key}", "missing field")

    raw_sig = data["signature"]
    if not isinstance(raw_sig, Mapping) or not raw_sig:
        _fail("/signature", "expected a non-empty object of symbol arities")
    for name, arity in raw_sig.items():
        if not isinstance(name, str) or not name:
            _fail(f"/signature/{name}", "bad symbol name")
        if not isinstance(arity, int) or isinstance(arity, bool) or arity < 0:
            _fail(f"/signature/{name}", "arity must be a non-negative integer")
    sig = Signature(raw_sig)

    universe = _need_string_list(data["universe"], "/universe")
    if not universe:
        _fail("/universe", "universe must be non-empty")
    if len(set(universe)) != len(universe):
        _fail("/universe", "duplicate elements")
    known = set(universe)

    partial = data["partial"]
    if not isinstance(partial, bool):
        _fail("/partial", "expected true or false")

    raw_ops = data["operations"]
    if not isinstance(raw_ops, Mapping):
        _fail("/operations", "expected an object keyed by symbol")
    table: dict[tuple[str, tuple[str, ...]], frozenset[str]] = {}
    for symbol, entries in raw_ops.items():
        here = f"/operations/{symbol}"
        if symbol not in sig:
            _fail(here, "symbol not declared in the signature")
        if not isinstance(entries, list):
            _fail(here, "expected a list of applications")
        for i, entry in enumerate(entries):
            loc = f"{here}/{i}"
            if not isinstance(entry, Mapping) or set(entry) != {"args", "result"}:
                _fail(loc, 'expected an object with exactly "args" and "result"')
            args = _need_string_list(entry["args"], f"{loc}/args")
            result = _need_string_list(entry["result"], f"{loc}/result")
            if len(args) != sig.arity(symbol):
                _fail(f"{loc}/args", f"expected {sig.arity(symbol)} arguments")
            for j, x in enumerate(args):
                if x not in known:
                    _fail(f"{loc}/args/{j}", f"{x!r} is not in the universe")
            if not result:
                _fail(f"{loc}/result", "result set must be non-empty")
            for j, x in enumerate(result):
                if x not in known:
                    _fail(f"{loc}/result/{j}", f"{x!r} is not in the universe")
            key = (symbol, tuple(args))
            if key in table:
                _fail(loc, "duplicate application")
            table[key] = frozenset(result)

    algebra = MultiAlgebra(sig, universe, table, total=not partial)
    report = validate(algebra)
    if not report:
        first = report.violations[0]
        _fail(f"/operations ({first.location})", first.rule)

    designated: frozenset[str] | None = None
    if data.get("designated") is not None:
        block = _need_string_list(data["designated"], "/designated")
        for i, x in enumerate(block):
            if x not in known:
                _fail(f"/designated/{i}", f"{x!r} is not in the universe")
        designated = frozenset(block)
    return MultiAlgebraDocument(algebra, designated)


def document_dict(a: MultiAlgebra, designated: frozenset[str] | None = None) -> dict[str, Any]:
    """Canonical JSON-ready dict for a structure (and optional matrix)."""
    operations: dict[str, list[dict[str, list[str]]]] = {name: [] for name, _ in a.signature.symbols}
    for app, result in a.applications():
        operations[app.symbol].append({"args": list(app.args), "result": sorted(result)})
    return {
        "signature": {name: arity for name, arity in a.signature.symbols},
        "universe": list(a.universe),
        "partial": not a.total,
        "operations": operations,
        "designated": sorted(designated) if designated is not None else None,
    }


def save_document(
    a: MultiAlgebra, path: str | Path, designated: frozenset[str] | None = None
) -> None:
    Path(path).write_text(json.dumps(document_dict(a, designated), indent=2, sort_keys=True) + "\n")


# ----- directed graphs -----

@dataclass(frozen=True)
class GraphDocument:
    """A finite directed graph: {"vertices": [...], "arrows": [["u","v"], ...]}."""

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...]


def load_graph(source: Mapping[str, Any] | str | Path) -> GraphDocument:
    if isinstance(source, (str, Path)):
        try:
            data = json.loads(Path(source).read_text())
        except json.JSONDecodeError as exc:
            raise DocumentError("/", f"not valid JSON: {exc}") from None
    else:
        data = source
    if not isinstance(data, Mapping) or set(data) != {"vertices", "arrows"}:
        _fail("/", 'expected an object with exactly "vertices" and "arrows"')
    vertices = _need_string_list(data["vertices"], "/vertices")
    if len(set(vertices)) != len(vertices):
        _fail("/vertices", "duplicate vertices")
    known = set(vertices)
    arrows: set[tuple[str, str]] = set()
    if not isinstance(data["arrows"], list):
        _fail("/arrows", "expected a list of [source, target] pairs")
    for i, pair in enumerate(data["arrows"]):
        if not isinstance(pair, list) or len(pair) != 2:
            _fail(f"/arrows/{i}", "expected a [source, target] pair")
        u, v = pair
        for x in (u, v):
            if not isinstance(x, str) or x not in known:
                _fail(f"/arrows/{i}", f"{x!r} is not a declared vertex")
        arrows.add((u, v))
    return GraphDocument(tuple(sorted(known)), tuple(sorted(arrows)))


def graph_dict(g: GraphDocument) -> dict[str, Any]:
    return {"vertices": list(g.vertices), "arrows": [list(pair) for pair in g.arrows]}


def graph_to_multialgebra(g: GraphDocument, total: bool = False) -> MultiAlgebra:
    """Read a graph as a one-successor-operation structure: s(u) = arrow targets.

    In total mode every vertex needs an outgoing arrow (NotTotal otherwise);
    in partial mode sink vertices simply have s undefined.
    """
    successors: dict[str, set[str]] = {}
    for u, v in g.arrows:
        successors.setdefault(u, set()).add(v)
    if total:
        sinks = [u for u in g.vertices if u not in successors]
        if sinks:
            raise NotTotal(f"vertices without outgoing arrows: {sinks}")
    table = {("s", (u,)): frozenset(vs) for u, vs in successors.items()}
    return MultiAlgebra(Signature({"s": 1}), g.vertices, table, total=total)


def multialgebra_to_graph(a: MultiAlgebra) -> GraphDocument:
    """Inverse bridge; only structures over a single unary symbol qualify."""
    if len(a.signature.symbols) != 1 or a.signature.symbols[0][1] != 1:
        raise ValueError("graph export needs a signature with exactly one unary symbol")
    arrows = sorted((app.args[0], v) for app, result in a.applications() for v in result)
    return GraphDocument(a.universe, tuple(arrows))


def graph_to_dot(g: GraphDocument) -> str:
    def quote(x: str) -> str:
        return '"' + x.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = ["digraph {"]
    lines.extend(f"  {quote(v)};" for v in g.vertices)
    lines.extend(f"  {quote(u)} -> {quote(v)};" for u, v in g.arrows)
    lines.append("}")
    return "\n".join(lines) + "\n"


# ----- witness serialization -----

def application_json(app: Application) -> dict[str, Any]:
    return {"symbol": app.symbol, "args": list(app.args)}


def application_from_json(data: Mapping[str, Any]) -> Application:
    return Application(data["symbol"], tuple(data["args"]))


def overlap_witness_json(w: OverlapWitness) -> dict[str, Any]:
    return {
        "kind": "overlap",
        "app1": application_json(Application(*w.app1)),
        "app2": application_json(Application(*w.app2)),
        "shared": w.shared,
    }


def overlap_witness_from_json(data: Mapping[str, Any]) -> OverlapWitness:
    return OverlapWitness(
        application_from_json(data["app1"]),
        application_from_json(data["app2"]),
        data["shared"],
    )


def justification_json(j: Justification) -> dict[str, Any]:
    return {"symbol": j.symbol, "args": list(j.args), "position": j.position}


def chain_witness_json(w: ChainWitness) -> dict[str, Any]:
    return {
        "kind": "chain",
        "stem": list(w.stem),
        "cycle": list(w.cycle),
        "justifications": [justification_json(j) for j in w.justifications],
    }


def chain_witness_from_json(data: Mapping[str, Any]) -> ChainWitness:
    return ChainWitness(
        tuple(data["stem"]),
        tuple(data["cycle"]),
        tuple(
            Justification(j["symbol"], tuple(j["args"]), j["position"])
            for j in data["justifications"]
        ),
    )


def generation_trace_json(trace: GenerationTrace) -> dict[str, Any]:
    return {
        "kind": "generation",
        "seed": sorted(trace.seed),
        "stages": [sorted(stage) for stage in trace.stages],
        "producer": {
            element: {"symbol": p.symbol, "args": list(p.args), "stage": p.stage}
            for element, p in sorted(trace.producer.items())
        },
    }


def basis_certificate_json(c: BasisCertificate) -> dict[str, Any]:
    return {
        "kind": "basis",
        "basis": sorted(c.basis),
        "co_generation_checks": dict(sorted(c.co_generation_checks.items())),
    }


def hom_witness_json(w: HomWitness) -> dict[str, Any]:
    return {
        "kind": "hom",
        "symbol": w.symbol,
        "args": list(w.args),
        "element": w.element,
        "image": w.image,
        "target_args": list(w.target_args),
        "target_result": sorted(w.target_result),
        "reason": w.reason,
    }


def sub_witness_json(w: SubWitness) -> dict[str, Any]:
    return {
        "kind": "sub",
        "symbol": w.symbol,
        "args": list(w.args),
        "element": w.element,
        "parent_result": sorted(w.parent_result) if w.parent_result is not None else None,
    }
