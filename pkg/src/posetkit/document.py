"""Poset documents: a JSON interchange format, plus DOT export.

A document is a single JSON object with fields `name`, `elements` (array of
strings), `covers` (array of two-element arrays), optional `labels` (object
mapping "a->b" to an integer, exactly one entry per cover), and optional
`chains` (object mapping a name to an array of element ids).  Serialization
is deterministic (sorted keys, two-space indent, LF newlines) and parsing a
serialized document reproduces it exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import ParseError, PosetError, ValidationError
from .labelling import EdgeLabelling
from .poset import Chain, Poset, _bits


@dataclass
class PosetDocument:
    name: str
    elements: list[str]
    covers: list[tuple[str, str]]
    labels: Optional[dict[str, int]] = None
    chains: Optional[dict[str, list[str]]] = None

    def to_poset(self) -> Poset:
        return Poset(self.elements, self.covers)

    def to_labelling(self, poset: Optional[Poset] = None) -> EdgeLabelling:
        if self.labels is None:
            raise ValidationError(f"document {self.name!r} carries no labels")
        p = poset if poset is not None else self.to_poset()
        return EdgeLabelling(
            p, {tuple(key.split("->", 1)): v for key, v in self.labels.items()}
        )

    def to_chain(self, name: str, poset: Optional[Poset] = None) -> Chain:
        if not self.chains or name not in self.chains:
            raise ValidationError(f"document {self.name!r} has no chain {name!r}")
        p = poset if poset is not None else self.to_poset()
        return Chain(p, tuple(self.chains[name]))


def poset_to_document(
    p: Poset,
    name: str,
    lab: Optional[EdgeLabelling] = None,
    chains: Optional[dict[str, Chain]] = None,
) -> PosetDocument:
    return PosetDocument(
        name=name,
        elements=[str(e) for e in p.elements],
        covers=[(str(a), str(b)) for a, b in p.cover_pairs],
        labels=None
        if lab is None
        else {f"{a}->{b}": v for (a, b), v in lab.items()},
        chains=None
        if chains is None
        else {k: [str(e) for e in ch.nodes] for k, ch in chains.items()},
    )


def serialize_poset_document(d: PosetDocument) -> str:
    obj: dict = {
        "name": d.name,
        "elements": list(d.elements),
        "covers": [list(c) for c in d.covers],
    }
    if d.labels is not None:
        obj["labels"] = dict(d.labels)
    if d.chains is not None:
        obj["chains"] = {k: list(v) for k, v in d.chains.items()}
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def parse_poset_document(text: str) -> PosetDocument:
    """Parse and fully validate a poset document.

    Syntax errors raise ParseError with a line and column; semantic problems
    (unknown ids, labels off the cover set, cyclic or unreduced covers) raise
    ValidationError.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict):
        raise ValidationError("document must be a single JSON object")
    name = obj.get("name")
    if not isinstance(name, str):
        raise ValidationError("field 'name' must be a string")
    elements = obj.get("elements")
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise ValidationError("field 'elements' must be an array of strings")
    known = set(elements)
    raw_covers = obj.get("covers")
    if not isinstance(raw_covers, list):
        raise ValidationError("field 'covers' must be an array")
    covers: list[tuple[str, str]] = []
    for item in raw_covers:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, str) for x in item)):
            raise ValidationError(f"cover entry {item!r} is not a pair of ids")
        if item[0] not in known or item[1] not in known:
            raise ValidationError(f"cover entry {item!r} references unknown elements")
        covers.append((item[0], item[1]))

    labels = None
    if "labels" in obj and obj["labels"] is not None:
        raw = obj["labels"]
        if not isinstance(raw, dict):
            raise ValidationError("field 'labels' must be an object")
        labels = {}
        for key, v in raw.items():
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"label {key!r} must be an integer")
            if "->" not in key:
                raise ValidationError(f"label key {key!r} is not of the form 'a->b'")
            a, b = key.split("->", 1)
            if (a, b) not in set(covers):
                raise ValidationError(f"label key {key!r} is not a cover edge")
            labels[key] = v
        if len(labels) != len(set(covers)):
            raise ValidationError("labels do not cover the full cover set")

    chains = None
    if "chains" in obj and obj["chains"] is not None:
        raw = obj["chains"]
        if not isinstance(raw, dict):
            raise ValidationError("field 'chains' must be an object")
        chains = {}
        for key, nodes in raw.items():
            if not (isinstance(nodes, list) and all(isinstance(x, str) for x in nodes)):
                raise ValidationError(f"chain {key!r} must be an array of ids")
            for x in nodes:
                if x not in known:
                    raise ValidationError(f"chain {key!r} references unknown element {x!r}")
            chains[key] = list(nodes)

    doc = PosetDocument(name, list(elements), covers, labels, chains)
    try:
        doc.to_poset()
    except PosetError as exc:
        raise ValidationError(f"covers do not form a reduced partial order: {exc}") from exc
    return doc


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(p: Poset, lab: Optional[EdgeLabelling] = None) -> str:
    """Hasse diagram in DOT, ranked bottom-up, deterministic output."""
    heights = {e: 0 for e in p.elements}
    order = []
    indeg = {e: len(p.lower_covers(e)) for e in p.elements}
    ready = [e for e in p.elements if indeg[e] == 0]
    while ready:
        e = ready.pop()
        order.append(e)
        for f in p.upper_covers(e):
            heights[f] = max(heights[f], heights[e] + 1)
            indeg[f] -= 1
            if indeg[f] == 0:
                ready.append(f)
    by_height: dict[int, list[str]] = {}
    for e in p.elements:
        by_height.setdefault(heights[e], []).append(str(e))
    lines = ["digraph poset {", "  rankdir=BT;"]
    for h in sorted(by_height):
        row = "; ".join(_dot_quote(e) for e in sorted(by_height[h]))
        lines.append(f"  {{ rank=same; {row}; }}")
    for a, b in sorted(p.cover_pairs, key=lambda ab: (str(ab[0]), str(ab[1]))):
        edge = f"  {_dot_quote(str(a))} -> {_dot_quote(str(b))}"
        if lab is not None:
            edge += f' [label="{lab.label(a, b)}"]'
        lines.append(edge + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"
