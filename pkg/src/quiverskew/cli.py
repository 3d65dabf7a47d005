"""Command-line surface.

Exit codes: 0 success/PASS, 1 domain failure (validation or FAIL),
2 usage or parse error.  All output is deterministic byte-for-byte.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import io as qio
from .quiver import validate_quiver, IsoBudgetExceeded
from .group import validate_action, is_free
from .skew import (
    Section,
    default_section,
    gross_tucker_reconstruct,
    quotient_quiver,
    skew_product,
)
from .cstar import (
    acyclic_block_structure,
    graded_dimensions,
    is_acyclic,
    k_theory,
    regular_vertices,
    vertex_matrix,
)
from .verify import run_suite
from .randgen import random_cocycle, random_group, random_quiver


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise qio.ParseError(f"{path}: {exc}") from None


def _write_out(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_quiver(path):
    return qio.parse_quiver_document(_load_json(path))


def cmd_validate(args):
    q = _load_quiver(args.quiver)
    report = validate_quiver(q)
    if report:
        for line in report:
            print(line)
        return 1
    print("ok")
    return 0


def _validated_quiver(path):
    q = _load_quiver(path)
    report = validate_quiver(q)
    if report:
        raise DomainError("; ".join(report))
    return q


class DomainError(Exception):
    pass


def cmd_skew(args):
    q = _validated_quiver(args.quiver)
    kappa = qio.parse_cocycle_document(_load_json(args.cocycle), q)
    product = skew_product(q, kappa)
    _write_out(qio.dumps(qio.emit_quiver_document(product)), args.out)
    return 0


def _parse_validated_action(path, q):
    a = qio.parse_action_document(_load_json(path), q)
    bad = validate_action(q, a)
    if bad:
        raise DomainError(f"invalid action: {bad[0]}")
    return a


def cmd_quotient(args):
    q = _validated_quiver(args.quiver)
    a = _parse_validated_action(args.action, q)
    if not is_free(q, a):
        raise DomainError("quotient requires a free action")
    quot, proj = quotient_quiver(q, a)
    doc = {
        "quotient": qio.emit_quiver_document(quot),
        "projection": {"vmap": proj.vmap, "emap": proj.emap},
    }
    _write_out(qio.dumps(doc), args.out)
    return 0


def cmd_reconstruct(args):
    q = _validated_quiver(args.quiver)
    a = _parse_validated_action(args.action, q)
    if not is_free(q, a):
        raise DomainError("reconstruction requires a free action")
    if args.section:
        raw = _load_json(args.section)
        if not isinstance(raw, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in raw.items()
        ):
            raise qio.ParseError("section document must map orbit ids to vertex ids")
        section = Section(raw)
    else:
        section = default_section(q, a)
    witness = gross_tucker_reconstruct(q, a, section)
    doc = {
        "quotient": qio.emit_quiver_document(witness.quotient),
        "cocycle": dict(witness.cocycle.map),
        "phi": {v: list(pair) for v, pair in witness.phi.items()},
        "sigma": {e: list(pair) for e, pair in witness.sigma.items()},
    }
    _write_out(qio.dumps(doc), args.out)
    return 0


def cmd_invariants(args):
    q = _validated_quiver(args.quiver)
    kt = k_theory(q)
    doc = {
        "regular_vertices": list(regular_vertices(q)),
        "vertex_matrix": vertex_matrix(q),
        "k_theory": {
            "k0_invariant_factors": list(kt.k0_invariant_factors),
            "k0_free_rank": kt.k0_free_rank,
            "k1_rank": kt.k1_rank,
        },
        "acyclic": is_acyclic(q),
    }
    if doc["acyclic"]:
        doc["block_structure"] = list(acyclic_block_structure(q).blocks)
        if args.cocycle:
            kappa = qio.parse_cocycle_document(_load_json(args.cocycle), q)
            dims = graded_dimensions(q, kappa)
            doc["graded_dimensions"] = {g: dims[g] for g in kappa.group.elements}
    _write_out(qio.dumps(doc), args.out)
    return 0


def cmd_verify(args):
    if args.random:
        rng = random.Random(args.seed)
        failures = 0
        for i in range(args.random):
            q = random_quiver(rng)
            kappa = random_cocycle(rng, q, random_group(rng))
            results = run_suite(q, kappa, section_budget=args.budget)
            for name, ok, detail in results:
                tag = "PASS" if ok else "FAIL"
                suffix = f" ({detail})" if detail else ""
                print(f"{tag} case{i:03d} {name}{suffix}")
                failures += not ok
        return 1 if failures else 0
    if not args.quiver or not args.cocycle:
        raise qio.ParseError("verify requires a quiver and a cocycle (or --random N)")
    q = _validated_quiver(args.quiver)
    kappa = qio.parse_cocycle_document(_load_json(args.cocycle), q)
    results = run_suite(
        q, kappa, section_budget=args.budget, inject_fault=args.inject_fault
    )
    failures = 0
    for name, ok, detail in results:
        tag = "PASS" if ok else "FAIL"
        suffix = f" ({detail})" if detail else ""
        print(f"{tag} {name}{suffix}")
        failures += not ok
    return 1 if failures else 0


def cmd_export_dot(args):
    q = _validated_quiver(args.quiver)
    _write_out(qio.export_dot(q), args.out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="quiverskew",
        description="Skew products, quotients, and algebra invariants of finite weighted quivers.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="validate a quiver document")
    sp.add_argument("quiver")
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("skew", help="compute a skew product")
    sp.add_argument("quiver")
    sp.add_argument("cocycle")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_skew)

    sp = sub.add_parser("quotient", help="quotient by a free action")
    sp.add_argument("quiver")
    sp.add_argument("action")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_quotient)

    sp = sub.add_parser("reconstruct", help="Gross-Tucker reconstruction from a free action")
    sp.add_argument("quiver")
    sp.add_argument("action")
    sp.add_argument("--section")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_reconstruct)

    sp = sub.add_parser("invariants", help="algebra invariants of a quiver")
    sp.add_argument("quiver")
    sp.add_argument("--cocycle")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_invariants)

    sp = sub.add_parser("verify", help="run the full theorem suite")
    sp.add_argument("quiver", nargs="?")
    sp.add_argument("cocycle", nargs="?")
    sp.add_argument("--budget", type=int, default=24,
                    help="max sections tried in the reconstruction roundtrip")
    sp.add_argument("--random", type=int, metavar="N",
                    help="verify N seeded random fixtures instead of files")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--inject-fault", action="store_true",
                    help="mutate one skew-product weight to exercise FAIL paths")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("export-dot", help="export a quiver as Graphviz DOT")
    sp.add_argument("quiver")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_export_dot)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.fn(args)
    except qio.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, IsoBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
