"""File schemas and JSON serialization of verdicts and run reports.

Matrix-set files::

    {"name": "optional", "matrices": [[[0, 1], [0, 0]], ...]}

Labelled-graph files::

    {"nodes": [{"id": 1, "label": "a"}, ...], "edges": [[1, 2], ...]}

Node ids are positive integers; they are renumbered densely in ascending
order. Everything on disk and in reports is 0-based.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from .classifier import (
    BoundedWitness,
    ExponentialWitness,
    GrowthClass,
    GrowthPair,
    GrowthVerdict,
    PolynomialWitness,
    ZeroWitness,
)
from .exceptions import InputError
from .matrix import MatrixSet, validate_set
from .oracle import OracleVerdict
from .trackability import LabelledGraph


class SchemaError(InputError):
    pass


def _load_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def parse_matrix_set(text: str, source: str = "<input>") -> tuple[MatrixSet, str | None]:
    doc = _load_json(text, source)
    if not isinstance(doc, dict) or "matrices" not in doc:
        raise SchemaError(f"{source}:1: expected an object with a 'matrices' field")
    grids = doc["matrices"]
    if not isinstance(grids, list):
        raise SchemaError(f"{source}: 'matrices' must be a list of row-major grids")
    for k, g in enumerate(grids):
        if not isinstance(g, list) or not all(isinstance(r, list) for r in g):
            raise SchemaError(f"{source}: matrices[{k}] must be a list of rows")
    try:
        S = validate_set(grids)
    except InputError as exc:
        raise SchemaError(f"{source}: {exc}") from None
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise SchemaError(f"{source}: 'name' must be a string")
    return S, name


def parse_labelled_graph(text: str, source: str = "<input>") -> LabelledGraph:
    doc = _load_json(text, source)
    if not isinstance(doc, dict) or "nodes" not in doc or "edges" not in doc:
        raise SchemaError(f"{source}:1: expected an object with 'nodes' and 'edges'")
    ids, labels = [], {}
    for k, node in enumerate(doc["nodes"]):
        if not isinstance(node, dict) or "id" not in node or "label" not in node:
            raise SchemaError(f"{source}: nodes[{k}] needs 'id' and 'label'")
        nid = node["id"]
        if isinstance(nid, bool) or not isinstance(nid, int) or nid < 1:
            raise SchemaError(f"{source}: nodes[{k}].id must be a positive integer")
        if nid in labels:
            raise SchemaError(f"{source}: duplicate node id {nid}")
        if not isinstance(node["label"], str) or not node["label"]:
            raise SchemaError(f"{source}: nodes[{k}].label must be a nonempty string")
        ids.append(nid)
        labels[nid] = node["label"]
    dense = {nid: pos for pos, nid in enumerate(sorted(ids))}
    edges = []
    for k, e in enumerate(doc["edges"]):
        if not isinstance(e, list) or len(e) != 2:
            raise SchemaError(f"{source}: edges[{k}] must be a [src, dst] pair")
        if e[0] not in dense or e[1] not in dense:
            raise SchemaError(f"{source}: edges[{k}] references an unknown node id")
        edges.append((dense[e[0]], dense[e[1]]))
    try:
        return LabelledGraph.build([labels[nid] for nid in sorted(ids)], edges)
    except InputError as exc:
        raise SchemaError(f"{source}: {exc}") from None


def read_input(path) -> tuple[str, str]:
    """Return (text, digest) of a UTF-8 file."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise SchemaError(f"{path}: {exc.strerror}") from None
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = raw.count(b"\n", 0, exc.start) + 1
        raise SchemaError(f"{path}:{line}: not valid UTF-8") from None
    return text, "sha256:" + hashlib.sha256(raw).hexdigest()


# -- verdict <-> dict -------------------------------------------------------------


def witness_to_dict(w) -> dict:
    if isinstance(w, ExponentialWitness):
        return {
            "kind": w.kind,
            "words": [list(w.word)],
            "indices": [w.index],
            "diagonal": w.diagonal,
        }
    if isinstance(w, PolynomialWitness):
        return {
            "kind": w.kind,
            "words": [list(p.word) for p in w.chain],
            "indices": [[p.i, p.j] for p in w.chain],
            "connectors": [list(c) for c in w.connectors],
        }
    return {"kind": w.kind, "words": [], "indices": []}


def witness_from_dict(d: dict):
    kind = d["kind"]
    if kind == "exponential":
        return ExponentialWitness(tuple(d["words"][0]), d["indices"][0], d["diagonal"])
    if kind == "polynomial":
        chain = tuple(
            GrowthPair(i, j, tuple(word)) for (i, j), word in zip(d["indices"], d["words"])
        )
        return PolynomialWitness(chain, tuple(tuple(c) for c in d["connectors"]))
    if kind == "zero":
        return ZeroWitness()
    if kind == "bounded":
        return BoundedWitness()
    raise SchemaError(f"unknown witness kind {kind!r}")


def verdict_to_dict(v: GrowthVerdict, witness: bool = True) -> dict:
    out = {"class": v.growth_class.value, "scc_count": v.scc_count}
    if v.t0 is not None:
        out["t0"] = v.t0
    if v.degree is not None:
        out["degree"] = v.degree
    if witness and v.witness is not None:
        out["witness"] = witness_to_dict(v.witness)
    return out


def verdict_from_dict(d: dict) -> GrowthVerdict:
    w = d.get("witness")
    return GrowthVerdict(
        GrowthClass(d["class"]),
        d["scc_count"],
        t0=d.get("t0"),
        degree=d.get("degree"),
        witness=witness_from_dict(w) if w is not None else None,
    )


def oracle_to_dict(o: OracleVerdict) -> dict:
    out = {
        "class": o.growth_class.value if o.growth_class else "inconclusive",
        "max_t": list(o.max_t),
    }
    if o.t0 is not None:
        out["t0"] = o.t0
    if o.closure is not None:
        out["closure"] = {
            "finite": o.closure.finite,
            "size": o.closure.size,
            "max_norm": o.closure.max_norm,
            "cap": o.closure.cap,
        }
    if o.exponential_word is not None:
        out["exponential_word"] = list(o.exponential_word)
        out["exponential_index"] = o.exponential_index
    if o.brackets:
        out["degree_candidates"] = list(o.degree_candidates)
        out["brackets"] = [
            {
                "k": b.k,
                "accepted": b.accepted,
                "c1": str(b.c1),
                "c2": str(b.c2),
                "reason": b.reason,
            }
            for b in o.brackets
        ]
    if o.notes:
        out["notes"] = list(o.notes)
    return out


@dataclass(frozen=True)
class RunReport:
    command: str
    input_digest: str
    verdict: GrowthVerdict | None = None
    trackable: bool | None = None
    oracle: dict | None = None
    extra: dict = field(default_factory=dict)
    wall_time: float | None = None

    def to_dict(self) -> dict:
        out = {"command": self.command, "input_digest": self.input_digest}
        if self.verdict is not None:
            out["verdict"] = verdict_to_dict(self.verdict)
        if self.trackable is not None:
            out["trackable"] = self.trackable
        if self.oracle is not None:
            out["oracle"] = self.oracle
        if self.extra:
            out["extra"] = self.extra
        out["wall_time"] = self.wall_time
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        v = d.get("verdict")
        return cls(
            command=d["command"],
            input_digest=d["input_digest"],
            verdict=verdict_from_dict(v) if v is not None else None,
            trackable=d.get("trackable"),
            oracle=d.get("oracle"),
            extra=d.get("extra", {}),
            wall_time=d.get("wall_time"),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"
