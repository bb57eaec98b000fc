"""Command-line front end.

Every verb wraps one library operation (or a fixed composition); all
inputs and outputs are JSON with exact values carried as strings ("a/b"
phases, [phase, rational] scalar pairs).  Reports are deterministic:
dictionaries are emitted with sorted keys and all listings are sorted.
Failures exit with status 1 and a JSON error object {code, message,
witness} on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import algebra, constructions, reps
from .errors import (
    CapacityError,
    MorphismError,
    SpecMismatchError,
    TensorSplitRefusal,
)
from .groups import DEFAULT_ENUMERATION_CAP, Subgroup
from .triples import (
    CCRMorphism,
    CCRTriple,
    triple_from_dict,
    triple_to_dict,
)

PROVENANCE = {
    "validate": "diagonal-one, conjugate-symmetry and gcd-order conditions on the phase table",
    "dim": "the algebra's dimension equals the order of the group",
    "trace": "the trace reads the coefficient at the identity and is faithful",
    "l2": "basis unitaries are orthonormal for <a,b> = trace(b* a)",
    "expect": "coefficient restriction onto a subgroup is the trace-compatible conditional expectation",
    "centralizer": "elements pairing trivially against a set form a subgroup",
    "commutant": "the relative commutant is spanned by the unitaries of the pairing centralizer",
    "center": "the center is the span over the centralizer of all generators",
    "is-matrix": "trivial center forces a full matrix algebra of square dimension",
    "complemented": "complementation holds exactly when the subgroup and its centralizer generate the group",
    "split": "trivial cross-commutation makes the algebra a tensor product of the two restrictions",
    "rep": "exact verification of unitarity, generator orders and scalar commutation",
    "norm": "largest singular value; scalar multiples of basis unitaries are exact",
    "build": "structured commutation patterns: pairing, chain, and star fragments",
    "phi-chain": "half commutator norms of pair unitaries encode the chain order",
    "hom": "pairing-preserving injective group maps induce trace-preserving *-homomorphisms",
    "report": "full structural battery for one triple",
}


class CliError(Exception):
    def __init__(self, code: str, message: str, witness: Any = None) -> None:
        self.code = code
        self.message = message
        self.witness = witness
        super().__init__(message)


def _load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise CliError("missing-file", f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise CliError("schema-error", f"{path} is not valid JSON: {exc}")


def _load_triple(path: str) -> CCRTriple:
    data = _load_json(path)
    try:
        return triple_from_dict(data)
    except (KeyError, TypeError) as exc:
        raise CliError("schema-error", f"bad triple schema in {path}: {exc}")
    except ValueError as exc:
        raise CliError("invalid-triple", str(exc))


def _load_element(t: CCRTriple, path: str) -> algebra.AlgebraElement:
    data = _load_json(path)
    try:
        return algebra.element_from_dict(t, data)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError("schema-error", f"bad element schema in {path}: {exc}")


def _parse_indices(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(x) for x in text.split(",")]


def _parse_vectors(t: CCRTriple, text: str) -> list:
    data = json.loads(text)
    return [t.spec.element(v) for v in data]


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
        return
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, (dict, list)):
            print(f"{key}: {json.dumps(value, sort_keys=True)}")
        else:
            print(f"{key}: {value}")


def _subgroup_payload(t: CCRTriple, sub: Subgroup) -> dict:
    return {
        "size": len(sub),
        "members": [list(g.exponents) for g in sub],
    }


def _analysis(t: CCRTriple, cap: int) -> dict:
    report = t.validate()
    out: dict[str, Any] = {
        "validation": report.to_dict(),
        "dimension": t.dimension(),
    }
    if t.spec.size() <= cap:
        center = algebra.center_basis(t, cap)
        full, n = algebra.is_full_matrix(t, cap)
        out["center_size"] = len(center)
        out["full_matrix"] = {"full": full, "n": n}
    return out


def _singleton_splits(t: CCRTriple) -> list[dict]:
    out = []
    for i in range(t.ngens):
        entry: dict[str, Any] = {"left": [i]}
        if t.ngens < 2:
            entry.update({"ok": False, "witness": "fewer than two generators"})
            out.append(entry)
            continue
        try:
            algebra.tensor_split(t, [i])
            entry["ok"] = True
        except TensorSplitRefusal as exc:
            entry["ok"] = False
            entry["witness"] = {"pair": list(exc.pair), "phase": str(exc.phase)}
        out.append(entry)
    return out


def _cmd_validate(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    report = t.validate()
    payload = {"provenance": PROVENANCE["validate"], **report.to_dict()}
    _emit(payload, args.format)
    if not report.ok:
        return 1
    return 0


def _cmd_dim(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    _emit({"provenance": PROVENANCE["dim"], "dimension": t.dimension()}, args.format)
    return 0


def _cmd_mul(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    a = _load_element(t, args.a)
    b = _load_element(t, args.b)
    _emit(algebra.element_to_dict(algebra.multiply(a, b)), args.format)
    return 0


def _cmd_adjoint(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    a = _load_element(t, args.a)
    _emit(algebra.element_to_dict(a.adjoint()), args.format)
    return 0


def _cmd_trace(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    a = _load_element(t, args.a)
    _emit(
        {"provenance": PROVENANCE["trace"], "trace": a.trace().to_pairs()},
        args.format,
    )
    return 0


def _cmd_l2(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    a = _load_element(t, args.a)
    b = _load_element(t, args.b)
    _emit(
        {"provenance": PROVENANCE["l2"], "inner": a.inner(b).to_pairs()},
        args.format,
    )
    return 0


def _cmd_expect(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    a = _load_element(t, args.a)
    gens = _parse_vectors(t, args.subgroup)
    sub = Subgroup.generated(t.spec, gens, args.cap)
    _emit(algebra.element_to_dict(algebra.conditional_expectation(a, sub)), args.format)
    return 0


def _cmd_centralizer(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    elems = _parse_vectors(t, args.elements)
    sub = t.centralizer(elems, args.cap)
    payload = {"provenance": PROVENANCE["centralizer"], **_subgroup_payload(t, sub)}
    _emit(payload, args.format)
    return 0


def _cmd_commutant(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    basis = algebra.commutant_basis(t, _parse_indices(args.gens), args.cap)
    payload = {
        "provenance": PROVENANCE["commutant"],
        "size": len(basis),
        "members": [list(g.exponents) for g in basis],
    }
    _emit(payload, args.format)
    return 0


def _cmd_center(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    basis = algebra.center_basis(t, args.cap)
    payload = {
        "provenance": PROVENANCE["center"],
        "size": len(basis),
        "members": [list(g.exponents) for g in basis],
    }
    _emit(payload, args.format)
    return 0


def _cmd_is_matrix(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    full, n = algebra.is_full_matrix(t, args.cap)
    payload = {
        "provenance": PROVENANCE["is-matrix"],
        "full_matrix": full,
        "n": n,
        "dimension": t.dimension(),
    }
    _emit(payload, args.format)
    return 0


def _cmd_complemented(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    value = algebra.is_complemented(t, _parse_indices(args.gens), args.cap)
    _emit(
        {"provenance": PROVENANCE["complemented"], "complemented": value},
        args.format,
    )
    return 0


def _cmd_split(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    left = _parse_indices(args.left)
    t1, t2 = algebra.tensor_split(t, left)
    _emit(
        {
            "provenance": PROVENANCE["split"],
            "left": triple_to_dict(t1),
            "right": triple_to_dict(t2),
        },
        args.format,
    )
    return 0


def _cmd_rep(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    if args.space == "regular":
        rep = reps.regular_rep(t, min(args.cap, reps.DEFAULT_REGULAR_CAP))
    else:
        rep = reps.witness_rep(t, combine=args.combine)
    report = reps.check_relations(rep)
    payload: dict[str, Any] = {
        "provenance": PROVENANCE["rep"],
        "space": rep.space,
        "dimension": rep.dim,
        **report.to_dict(),
    }
    if args.emit_matrices:
        mats = []
        for op in rep.operators:
            mat = op.materialize() if isinstance(op, reps.TensorUnitary) else op
            mats.append([[c.to_pairs() for c in row] for row in mat.to_rows()])
        payload["matrices"] = mats
    _emit(payload, args.format)
    return 0 if report.ok else 1


def _cmd_norm(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    a = _load_element(t, args.a)
    rep = reps.regular_rep(t, min(args.cap, reps.DEFAULT_REGULAR_CAP))
    _emit(
        {"provenance": PROVENANCE["norm"], "norm": reps.operator_norm(rep, a)},
        args.format,
    )
    return 0


def _parse_minus(text: str) -> list[tuple[int, int]]:
    out = []
    for chunk in text.split(","):
        prime, mult = chunk.split(":")
        out.append((int(prime), int(mult)))
    return out


def _cmd_build(args: argparse.Namespace) -> int:
    cap = args.cap
    if args.what == "pairing":
        built = constructions.pairing_triple(args.k, args.p, cap)
        t = built.triple
        analysis = _analysis(t, cap)
    elif args.what == "chain":
        built = constructions.chain_triple(args.k, args.p, cap=cap)
        t = built.triple
        analysis = _analysis(t, cap)
        analysis["phi"] = constructions.phi_matrix(built)
        analysis["recovered_order"] = constructions.recover_order(built)
        sub = constructions.chain_change_of_generators(
            built, literal=args.literal_formulas, cap=cap
        )
        analysis["change_of_generators"] = sub.to_dict()
    elif args.what == "nonuniq":
        built = constructions.nonuniqueness_fragment(
            _parse_minus(args.minus), args.p, args.pairs, cap
        )
        t = built.triple
        analysis = _analysis(t, cap)
        sub = constructions.substitute_and_verify(
            built, literal=args.literal_formulas, cap=cap
        )
        analysis["substitution"] = sub.to_dict()
    else:  # pragma: no cover - argparse restricts choices
        raise CliError("schema-error", f"unknown construction {args.what}")
    payload = {
        "provenance": PROVENANCE["build"],
        "triple": triple_to_dict(t),
        "analysis": analysis,
    }
    _emit(payload, args.format)
    return 0


def _cmd_phi_chain(args: argparse.Namespace) -> int:
    ct = constructions.chain_triple(args.k, args.p, cap=args.cap)
    _emit(
        {
            "provenance": PROVENANCE["phi-chain"],
            "phi": constructions.phi_matrix(ct),
        },
        args.format,
    )
    return 0


def _cmd_hom(args: argparse.Namespace) -> int:
    src = _load_triple(args.source)
    tgt = _load_triple(args.target)
    data = json.loads(args.images)
    images = tuple(tgt.spec.element(v) for v in data)
    mor = CCRMorphism(src, tgt, images)
    report = mor.check(args.cap)
    payload: dict[str, Any] = {
        "provenance": PROVENANCE["hom"],
        "morphism": report.to_dict(),
    }
    if not report.ok:
        _emit(payload, args.format)
        return 1
    if args.element:
        a = _load_element(src, args.element)
        payload["image"] = algebra.element_to_dict(algebra.induced_hom(mor, a))
    _emit(payload, args.format)
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    t = _load_triple(args.triple)
    payload = {
        "provenance": PROVENANCE["report"],
        **_analysis(t, args.cap),
        "singleton_splits": _singleton_splits(t),
    }
    _emit(payload, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccralg",
        description="Exact computer algebra for finite twisted group algebras.",
    )
    parser.add_argument(
        "--format", choices=["json", "text"], default="text", help="output format"
    )
    parser.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_ENUMERATION_CAP,
        help="enumeration cap override",
    )
    parser.add_argument(
        "--literal-formulas",
        action="store_true",
        help="audit the uncorrected substitution candidates instead",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("validate", _cmd_validate)
    p.add_argument("triple")
    p = add("dim", _cmd_dim)
    p.add_argument("triple")
    p = add("mul", _cmd_mul)
    p.add_argument("triple")
    p.add_argument("a")
    p.add_argument("b")
    p = add("adjoint", _cmd_adjoint)
    p.add_argument("triple")
    p.add_argument("a")
    p = add("trace", _cmd_trace)
    p.add_argument("triple")
    p.add_argument("a")
    p = add("l2", _cmd_l2)
    p.add_argument("triple")
    p.add_argument("a")
    p.add_argument("b")
    p = add("expect", _cmd_expect)
    p.add_argument("triple")
    p.add_argument("a")
    p.add_argument("--subgroup", required=True, help="JSON list of exponent vectors")
    p = add("centralizer", _cmd_centralizer)
    p.add_argument("triple")
    p.add_argument("--elements", required=True, help="JSON list of exponent vectors")
    p = add("commutant", _cmd_commutant)
    p.add_argument("triple")
    p.add_argument("--gens", required=True, help="comma-separated generator indices")
    p = add("center", _cmd_center)
    p.add_argument("triple")
    p = add("is-matrix", _cmd_is_matrix)
    p.add_argument("triple")
    p = add("complemented", _cmd_complemented)
    p.add_argument("triple")
    p.add_argument("--gens", required=True)
    p = add("split", _cmd_split)
    p.add_argument("triple")
    p.add_argument("--left", required=True, help="generator indices of the left part")
    p = add("rep", _cmd_rep)
    p.add_argument("triple")
    p.add_argument("--space", choices=["witness", "regular"], default="witness")
    p.add_argument("--combine", choices=["tensor", "direct-sum"], default="tensor")
    p.add_argument("--emit-matrices", action="store_true")
    p = add("norm", _cmd_norm)
    p.add_argument("triple")
    p.add_argument("a")
    p = add("build", _cmd_build)
    p.add_argument("what", choices=["pairing", "chain", "nonuniq"])
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--minus", default="3:1", help="core primes as p:mult,p:mult")
    p.add_argument("--pairs", type=int, default=2, help="whole pairs in the fragment")
    p = add("phi-chain", _cmd_phi_chain)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p = add("hom", _cmd_hom)
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--images", required=True, help="JSON list of exponent vectors")
    p.add_argument("--element", default=None, help="element file to map through")
    p = add("report", _cmd_report)
    p.add_argument("triple")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(
            json.dumps(
                {"code": exc.code, "message": exc.message, "witness": exc.witness},
                sort_keys=True,
            )
        )
        return 1
    except TensorSplitRefusal as exc:
        print(
            json.dumps(
                {
                    "code": "split-refused",
                    "message": str(exc),
                    "witness": {"pair": list(exc.pair), "phase": str(exc.phase)},
                },
                sort_keys=True,
            )
        )
        return 1
    except CapacityError as exc:
        print(
            json.dumps(
                {"code": "cap-exceeded", "message": str(exc), "witness": None},
                sort_keys=True,
            )
        )
        return 1
    except MorphismError as exc:
        print(
            json.dumps(
                {"code": "morphism-error", "message": str(exc), "witness": None},
                sort_keys=True,
            )
        )
        return 1
    except SpecMismatchError as exc:
        print(
            json.dumps(
                {"code": "mismatch", "message": str(exc), "witness": None},
                sort_keys=True,
            )
        )
        return 1
    except ValueError as exc:
        print(
            json.dumps(
                {"code": "schema-error", "message": str(exc), "witness": None},
                sort_keys=True,
            )
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
