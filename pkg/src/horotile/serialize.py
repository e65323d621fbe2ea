"""Spec documents and JSON report serialization.

Spec document (JSON)::

    {"dim": 2, "coords": [{"pre": [1], "period": [-1]}, {"pre": [], "period": [1, -1]}]}
    {"dim": 1, "word": [[1], [-1], [-1]]}
"""
from __future__ import annotations

import hashlib
import json
from typing import Any

from .errors import ParseError, ValidationError
from .corona import CensusReport, CensusWindow, CoronaClass, CoronaCode
from .seqcore import SequenceSpec
from .tiling import TileAddress, TileComplex


def parse_spec(text: str) -> SequenceSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"spec is not valid JSON: {exc}") from None
    return spec_from_json(doc)


def spec_from_json(doc: Any) -> SequenceSpec:
    if not isinstance(doc, dict):
        raise ParseError("spec document must be a JSON object")
    if "dim" not in doc:
        raise ValidationError("missing 'dim'")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ValidationError(f"'dim' must be a positive integer, got {dim!r}")
    has_coords, has_word = "coords" in doc, "word" in doc
    if has_coords == has_word:
        raise ParseError("spec needs exactly one of 'coords' or 'word'")
    if has_coords:
        coords = doc["coords"]
        if not isinstance(coords, list) or not all(isinstance(c, dict) for c in coords):
            raise ParseError("'coords' must be a list of objects")
        if len(coords) != dim:
            raise ValidationError(f"'dim' is {dim} but {len(coords)} coordinates given")
        pairs = []
        for i, c in enumerate(coords):
            pre, period = c.get("pre", []), c.get("period")
            if period is None:
                raise ValidationError(f"coordinate {i}: missing 'period'")
            if not isinstance(pre, list) or not isinstance(period, list):
                raise ParseError(f"coordinate {i}: 'pre' and 'period' must be lists")
            pairs.append((tuple(pre), tuple(period)))
        return SequenceSpec(dim=dim, coords=tuple(pairs))
    word = doc["word"]
    if not isinstance(word, list) or not all(isinstance(s, list) for s in word):
        raise ParseError("'word' must be a list of lists")
    return SequenceSpec(dim=dim, word=tuple(tuple(s) for s in word))


def spec_to_json(spec: SequenceSpec) -> dict:
    if spec.is_periodic:
        return {"dim": spec.dim,
                "coords": [{"pre": list(p), "period": list(q)} for p, q in spec.coords]}
    return {"dim": spec.dim, "word": [list(s) for s in spec.word]}


def spec_hash(spec: SequenceSpec) -> str:
    canon = json.dumps(spec_to_json(spec), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()[:16]


def window_to_json(window: TileComplex) -> dict:
    return {
        "spec": spec_to_json(window.spec),
        "layers": list(window.layers),
        "box": None if window.box is None else window.box.to_json(),
        "nodes": [t.to_json() for t in window.nodes],
        "edges": [{"u": e.u.to_json(), "v": e.v.to_json(),
                   "u_facet": str(e.u_facet), "v_facet": str(e.v_facet)} for e in window.edges],
    }


def census_to_json(spec: SequenceSpec, report: CensusReport) -> dict:
    return {"spec": spec_to_json(spec), "spec_hash": spec_hash(spec), **report.to_json()}


def census_from_json(doc: dict) -> tuple[SequenceSpec, CensusReport]:
    """Inverse of :func:`census_to_json`; the embedded spec must match its hash."""
    try:
        spec = spec_from_json(doc["spec"])
        if doc.get("spec_hash", spec_hash(spec)) != spec_hash(spec):
            raise ValidationError("census file: spec does not match its hash")
        w = doc["window"]
        window = CensusWindow(w["layer"], w["half_width"], tuple(w["center"]))
        classes = tuple(
            CoronaClass(CoronaCode(tuple(tuple(s) for s in c["code"])),
                        TileAddress(c["witness"][0], tuple(c["witness"][1:])),
                        c["multiplicity"], c["stabilizer_order"])
            for c in doc["classes"])
        return spec, CensusReport(spec.dim, doc["k"], window, classes)
    except (KeyError, TypeError, IndexError) as exc:
        raise ParseError(f"malformed census file: {exc!r}") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"
