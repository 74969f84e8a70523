"""Command-line surface.

Subcommands: `gen` writes a family as a poset document, `check` decides a
property of a document, `label` induces an edge labelling from a named chain,
`export` renders DOT, and `verify` runs the theorem-verification harness.
Exit codes: 0 pass, 1 property fails, 2 input error, 3 size limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import __version__
from .document import (
    export_dot,
    parse_poset_document,
    poset_to_document,
    serialize_poset_document,
)
from .errors import PosetError, SizeLimit, ValidationError
from .families import (
    noncrossing_lattice,
    nonstraddling_lattice,
    partition_lattice,
    prefix_merge_chain,
    tamari_lattice,
)
from .labelling import induce_labelling, is_el_labelling, is_interpolating, is_sn_el_labelling
from .order_ops import find_left_modular_chains, find_viable_chains
from .poset import CheckReport, Poset, build_poset
from .supersolvability import is_distributive_lattice, is_supersolvable
from .verify import SCOPES, verify_theorems

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_SIZE = 3

FAMILIES = ("chain", "partition", "noncrossing", "nonstraddling", "tamari")

PROPERTIES = (
    "el",
    "sn-el",
    "interpolating",
    "left-modular",
    "viable",
    "graded",
    "distributive",
    "supersolvable",
)


def _gen(family: str, n: int, name: Optional[str]) -> str:
    doc_name = name or f"{family}-{n}"
    if family == "chain":
        if n < 1:
            raise ValidationError("chain length must be at least 1")
        ids = [f"c{i}" for i in range(n)]
        poset = build_poset(ids, list(zip(ids, ids[1:])))
        return serialize_poset_document(poset_to_document(poset, doc_name))
    if family == "tamari":
        poset = tamari_lattice(n)
        return serialize_poset_document(poset_to_document(poset, doc_name))
    maker = {
        "partition": partition_lattice,
        "noncrossing": noncrossing_lattice,
        "nonstraddling": nonstraddling_lattice,
    }[family]
    poset, lab = maker(n)
    chains = {"m_chain": prefix_merge_chain(poset, n)}
    return serialize_poset_document(poset_to_document(poset, doc_name, lab, chains))


def _check(prop: str, poset: Poset, doc) -> CheckReport:
    if prop in ("el", "sn-el", "interpolating"):
        lab = doc.to_labelling(poset)
        if prop == "el":
            return is_el_labelling(lab)
        if prop == "sn-el":
            return is_sn_el_labelling(lab)
        return is_interpolating(lab)
    if prop == "left-modular":
        chains = find_left_modular_chains(poset)
        return CheckReport(
            bool(chains),
            chains[0].nodes if chains else None,
            f"{len(chains)} left modular maximal chains",
        )
    if prop == "viable":
        chains = find_viable_chains(poset)
        return CheckReport(
            bool(chains),
            chains[0].nodes if chains else None,
            f"{len(chains)} viable maximal chains",
        )
    if prop == "graded":
        rank = poset.graded_rank()
        return CheckReport(rank is not None, None, f"rank {rank}" if rank is not None else "maximal chain lengths differ")
    if prop == "distributive":
        return is_distributive_lattice(poset)
    if prop == "supersolvable":
        return is_supersolvable(poset)
    raise ValidationError(f"unknown property {prop!r}")


def _report_json(rep: CheckReport) -> str:
    obj = {"verdict": rep.verdict, "note": rep.note}
    if rep.witness is not None:
        obj["witness"] = _plain(rep.witness)
    return json.dumps(obj, indent=2, sort_keys=True, default=str) + "\n"


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="posetkit",
        description="Finite poset toolkit: labellings, left modularity, supersolvability.",
    )
    parser.add_argument("--version", action="version", version=f"posetkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a family poset as a document")
    p_gen.add_argument("family", choices=FAMILIES)
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("--name", default=None)

    p_check = sub.add_parser("check", help="decide a property of a poset document")
    p_check.add_argument("property", choices=PROPERTIES)
    p_check.add_argument("file", type=Path)

    p_label = sub.add_parser("label", help="induce a labelling from a named chain")
    p_label.add_argument("file", type=Path)
    p_label.add_argument("--chain", required=True, help="name of a chain in the document")
    p_label.add_argument("--labels", default=None, help="comma-separated label set")

    p_export = sub.add_parser("export", help="export a document")
    p_export.add_argument("file", type=Path)
    p_export.add_argument("--dot", action="store_true", help="emit Graphviz DOT")

    p_verify = sub.add_parser("verify", help="run the theorem-verification harness")
    p_verify.add_argument("--scope", default="all", choices=SCOPES)
    p_verify.add_argument("--slow", action="store_true", help="include the large slow instances")
    p_verify.add_argument("--seed", type=int, default=0)

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except SizeLimit as exc:
        print(f"posetkit: size limit: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except PosetError as exc:
        print(f"posetkit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError) as exc:
        print(f"posetkit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "gen":
        sys.stdout.write(_gen(args.family, args.n, args.name))
        return EXIT_PASS

    if args.command == "check":
        doc = parse_poset_document(args.file.read_text(encoding="utf-8"))
        poset = doc.to_poset()
        rep = _check(args.property, poset, doc)
        sys.stdout.write(_report_json(rep))
        return EXIT_PASS if rep.verdict else EXIT_FAIL

    if args.command == "label":
        doc = parse_poset_document(args.file.read_text(encoding="utf-8"))
        poset = doc.to_poset()
        chain = doc.to_chain(args.chain, poset)
        label_set = None
        if args.labels:
            label_set = [int(t) for t in args.labels.split(",") if t.strip()]
        lab = induce_labelling(poset, chain, label_set)
        out = poset_to_document(
            poset, doc.name, lab, {k: doc.to_chain(k, poset) for k in (doc.chains or {})}
        )
        sys.stdout.write(serialize_poset_document(out))
        return EXIT_PASS

    if args.command == "export":
        if not args.dot:
            raise ValidationError("export currently supports --dot only")
        doc = parse_poset_document(args.file.read_text(encoding="utf-8"))
        poset = doc.to_poset()
        lab = doc.to_labelling(poset) if doc.labels else None
        sys.stdout.write(export_dot(poset, lab))
        return EXIT_PASS

    if args.command == "verify":
        results = verify_theorems(args.scope, slow=args.slow, seed=args.seed)
        failed = 0
        for res in results:
            sys.stdout.write(json.dumps(res.to_json_obj(), sort_keys=True, default=str) + "\n")
            if not res.passed:
                failed += 1
        summary = {"scope": args.scope, "claims": len(results), "failed": failed}
        sys.stdout.write(json.dumps({"summary": summary}, sort_keys=True) + "\n")
        return EXIT_PASS if failed == 0 else EXIT_FAIL

    raise ValidationError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
