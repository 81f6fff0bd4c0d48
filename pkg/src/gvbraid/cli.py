"""Command-line interface.

All subcommands print JSON (single documents) or JSON lines (verification
batteries) on stdout; progress and summaries go to stderr.  Exit status is
0 when every requested check passes, 1 when any verification fails, and 2
on usage errors (argparse's convention).

Algebras are named by compact specs — ``stuffle:6``, ``qpoly:4``,
``diag:3`` — or by a path to a JSON file in the structure-constant format
of :func:`gvbraid.braided.from_json`.  Set ``GVB_WORKERS=K`` to spread the
(p,q) sweeps of ``verify-theorem`` over K worker processes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from time import perf_counter

from .braided import (
    BraidedAlgebra,
    acts_as_gvb,
    check_axioms,
    diagonal_braiding,
    from_json,
    hoffman_stuffle,
    qpoly,
    to_json,
)
from .qshuffle import (
    Tensor,
    quantum_shuffle,
    quasi_shuffle_inductive,
    quasi_shuffle_section,
    verify_quasi_shuffle,
    verify_shuffle_specialization,
)
from .report import VerificationReport
from .rmatrix import (
    check_gvb_matrix_relations,
    check_twist_axioms,
    gvb_generator_tables,
)
from .section import lift_sum_block_identities, lift_sum_recursion_holds, section_table
from .symgroup import bubble_decompose, enumerate_shuffles, profile_law_violations

__all__ = ["load_algebra", "main"]


def load_algebra(spec: str) -> BraidedAlgebra:
    """Resolve ``stuffle:N`` / ``qpoly:N`` / ``diag:D`` or a JSON file path."""
    kind, sep, arg = spec.partition(":")
    if sep and not os.path.exists(spec):
        if kind == "stuffle":
            return hoffman_stuffle(int(arg))
        if kind == "qpoly":
            return qpoly(int(arg))
        if kind == "diag":
            d = int(arg)
            return diagonal_braiding([[j - i for j in range(d)] for i in range(d)])
        raise ValueError(f"unknown algebra family {kind!r}")
    path = Path(spec)
    if not path.exists():
        raise ValueError(f"no such algebra spec or file: {spec}")
    algebra = from_json(json.loads(path.read_text()))
    if algebra.name == "custom":
        algebra.name = path.stem
    return algebra


def _print_doc(doc: dict) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _emit(report: VerificationReport) -> bool:
    print(json.dumps(report.to_json(), sort_keys=True))
    print(report.summary_line(), file=sys.stderr)
    return report.ok


def _bool_report(subject: str, passed: bool, seconds: float, witness: str | None = None,
                 checked: int = 1) -> VerificationReport:
    return VerificationReport(
        subject=subject,
        checked=checked,
        failed=0 if passed else 1,
        first_counterexample=None if passed else witness,
        seconds=seconds,
    )


def _parse_degrees(text: str | None, max_degree: int) -> list[tuple[int, int]]:
    if text:
        out = []
        for chunk in text.split(";"):
            p, q = chunk.split(",")
            out.append((int(p), int(q)))
        return out
    return [
        (p, d - p)
        for d in range(2, max_degree + 1)
        for p in range(1, d)
    ]


# -- subcommands -----------------------------------------------------------------


def cmd_shuffles(args: argparse.Namespace) -> int:
    shuffles = enumerate_shuffles(args.left, args.right)
    rows = []
    for sigma in shuffles:
        d = bubble_decompose(sigma)
        rows.append(
            {
                "images": list(sigma.images),
                "profile": list(d.profile),
                "length": sigma.coxeter_length(),
            }
        )
    _print_doc(
        {"left": args.left, "right": args.right, "count": len(rows), "shuffles": rows}
    )
    return 0


def cmd_section(args: argparse.Namespace) -> int:
    rows = []
    for row in section_table(args.left, args.right, args.kind):
        value = row["value"]
        if args.kind == "braid":
            words = [str(value)]
        else:
            words = [str(w) for w, _ in value.sorted_terms()]
        rows.append(
            {
                "images": list(row["shuffle"].images),
                "profile": list(row["profile"]),
                "components": row["components"],
                "words": words,
            }
        )
    _print_doc(
        {
            "left": args.left,
            "right": args.right,
            "kind": args.kind,
            "word_count": sum(len(r["words"]) for r in rows),
            "rows": rows,
        }
    )
    return 0


def cmd_axioms(args: argparse.Namespace) -> int:
    algebra = load_algebra(args.algebra)
    checks = check_axioms(algebra)
    doc = {
        "algebra": algebra.name,
        "ok": all(c.passed for c in checks),
        "checks": [
            {"name": c.name, "passed": c.passed, "counterexample": c.counterexample}
            for c in checks
        ],
    }
    _print_doc(doc)
    return 0 if doc["ok"] else 1


def cmd_export_algebra(args: argparse.Namespace) -> int:
    algebra = load_algebra(args.algebra)
    doc = to_json(algebra)
    doc["name"] = algebra.name
    _print_doc(doc)
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    algebra = load_algebra(args.algebra)

    def tensor_of(text: str) -> Tensor:
        labels = [s.strip() for s in text.split(",") if s.strip()]
        return Tensor.from_labels(algebra, labels)

    left, right = tensor_of(args.left), tensor_of(args.right)
    compute = {
        "inductive": quasi_shuffle_inductive,
        "section": quasi_shuffle_section,
        "shuffle": quantum_shuffle,
    }[args.definition]
    result = compute(left, right)
    _print_doc(
        {
            "algebra": algebra.name,
            "definition": args.definition,
            "left": str(left),
            "right": str(right),
            "result": str(result),
            "terms": [
                {"factors": [algebra.labels[i] for i in tup], "coeff": str(c)}
                for tup, c in result.sorted_terms()
            ],
        }
    )
    return 0


def _theorem_task(task: tuple) -> dict:
    spec, p, q, cap, sample, seed, specialization = task
    algebra = load_algebra(spec)
    if specialization:
        report = verify_shuffle_specialization(
            algebra, p, q, cap=cap, sample=sample, seed=seed
        )
    else:
        report = verify_quasi_shuffle(algebra, p, q, cap=cap, sample=sample, seed=seed)
    return report.to_json()


def _run_theorem_sweep(
    spec: str,
    degrees: list[tuple[int, int]],
    cap: int,
    sample: int,
    seed: int,
    specialization: bool = False,
) -> bool:
    workers = int(os.environ.get("GVB_WORKERS", "1"))
    ok = True
    if workers > 1:
        from multiprocessing import Pool

        tasks = [(spec, p, q, cap, sample, seed, specialization) for p, q in degrees]
        with Pool(workers) as pool:
            for doc in pool.imap(_theorem_task, tasks):
                print(json.dumps(doc, sort_keys=True))
                ok = ok and doc["ok"]
        return ok
    algebra = load_algebra(spec)
    verify = verify_shuffle_specialization if specialization else verify_quasi_shuffle
    for p, q in degrees:
        report = verify(algebra, p, q, cap=cap, sample=sample, seed=seed)
        ok = _emit(report) and ok
    return ok


def cmd_verify_theorem(args: argparse.Namespace) -> int:
    degrees = _parse_degrees(args.degrees, args.max_degree)
    ok = _run_theorem_sweep(args.algebra, degrees, args.cap, args.sample, args.seed)
    return 0 if ok else 1


def cmd_verify_gvb_rep(args: argparse.Namespace) -> int:
    ok = True
    t0 = perf_counter()
    for name, passed, witness in check_twist_axioms(args.dim):
        ok = _emit(
            _bool_report(
                f"twist axiom {name} (dim {args.dim})", passed, perf_counter() - t0, witness
            )
        ) and ok
        t0 = perf_counter()

    tables = gvb_generator_tables(args.dim)
    for strands in args.strands:
        ok = _emit(
            check_gvb_matrix_relations(
                tables["crossing"], tables["virtual"], args.dim, strands
            )
        ) and ok
    return 0 if ok else 1


def cmd_verify_all(args: argparse.Namespace) -> int:
    def want(name: str) -> bool:
        return args.only is None or args.only in name

    ok = True

    if want("axioms"):
        for spec in args.algebras:
            algebra = load_algebra(spec)
            t0 = perf_counter()
            checks = check_axioms(algebra)
            bad = [c for c in checks if not c.passed]
            ok = _emit(
                VerificationReport(
                    subject=f"{algebra.name}: braided-algebra axioms",
                    checked=len(checks),
                    failed=len(bad),
                    first_counterexample=bad[0].counterexample if bad else None,
                    seconds=perf_counter() - t0,
                )
            ) and ok

    if want("recursion"):
        t0 = perf_counter()
        failures = []
        checked = 0
        for p, q in _parse_degrees(None, args.profile_degree):
            checked += 1
            if not lift_sum_recursion_holds(p, q):
                failures.append(f"recursion fails at ({p},{q})")
            for name, holds in lift_sum_block_identities(p, q).items():
                checked += 1
                if not holds:
                    failures.append(f"{name} fails at ({p},{q})")
        ok = _emit(
            VerificationReport(
                subject=f"shuffle-lift recursion and block identities "
                f"(degree <= {args.profile_degree})",
                checked=checked,
                failed=len(failures),
                first_counterexample=failures[0] if failures else None,
                seconds=perf_counter() - t0,
            )
        ) and ok

    if want("profiles"):
        t0 = perf_counter()
        failures = []
        checked = 0
        for p, q in _parse_degrees(None, args.profile_degree):
            checked += 1
            bad = profile_law_violations(p, q)
            if bad:
                failures.append(f"({p},{q}): {bad[0]}")
        ok = _emit(
            VerificationReport(
                subject=f"bubble-profile laws (degree <= {args.profile_degree})",
                checked=checked,
                failed=len(failures),
                first_counterexample=failures[0] if failures else None,
                seconds=perf_counter() - t0,
            )
        ) and ok

    if want("theorem"):
        degrees = _parse_degrees(None, args.max_degree)
        for spec in args.algebras:
            algebra = load_algebra(spec)
            hat_product_zero = not any(
                algebra.product.get((a, b))
                for a in algebra.hat_basis
                for b in algebra.hat_basis
            )
            ok = (
                _run_theorem_sweep(
                    spec, degrees, args.cap, args.sample, args.seed,
                    specialization=hat_product_zero,
                )
                and ok
            )

    if want("relations"):
        from .words import relation_instances

        for spec in args.algebras:
            algebra = load_algebra(spec)
            for strands in (3, 4):
                t0 = perf_counter()
                _, failures = acts_as_gvb(algebra, strands)
                ok = _emit(
                    VerificationReport(
                        subject=f"{algebra.name}: monoid relations on "
                        f"{strands} tensor factors",
                        checked=len(relation_instances(strands)),
                        failed=len(failures),
                        first_counterexample=failures[0] if failures else None,
                        seconds=perf_counter() - t0,
                    )
                ) and ok

    if want("matrix"):
        rep_args = argparse.Namespace(dim=3, strands=[3, 4])
        ok = (cmd_verify_gvb_rep(rep_args) == 0) and ok

    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gvbraid",
        description="Exact computations with shuffle lifts, quantum "
        "quasi-shuffle products and generalized virtual braid representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shuffles", help="list (p,q)-shuffles with bubble profiles")
    p.add_argument("left", type=int)
    p.add_argument("right", type=int)
    p.set_defaults(func=cmd_shuffles)

    p = sub.add_parser("section", help="tabulate the canonical lift of each shuffle")
    p.add_argument("left", type=int)
    p.add_argument("right", type=int)
    p.add_argument(
        "--kind", choices=("full", "braid", "involutive"), default="full"
    )
    p.set_defaults(func=cmd_section)

    p = sub.add_parser("axioms", help="check the braided-algebra axioms of an algebra")
    p.add_argument("--algebra", required=True)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser(
        "export-algebra", help="print an algebra's structure constants as JSON"
    )
    p.add_argument("--algebra", required=True)
    p.set_defaults(func=cmd_export_algebra)

    p = sub.add_parser("product", help="multiply two pure tensors")
    p.add_argument("--algebra", required=True)
    p.add_argument("--left", required=True, help="comma-separated basis labels")
    p.add_argument("--right", required=True, help="comma-separated basis labels")
    p.add_argument(
        "--definition",
        choices=("inductive", "section", "shuffle"),
        default="inductive",
    )
    p.set_defaults(func=cmd_product)

    p = sub.add_parser(
        "verify-theorem",
        help="compare the two quasi-shuffle definitions over basis tensors",
    )
    p.add_argument("--algebra", required=True)
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument(
        "--degrees", help='explicit list like "2,2;3,1" (overrides --max-degree)'
    )
    p.add_argument("--cap", type=int, default=100_000)
    p.add_argument("--sample", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser(
        "verify-gvb-rep",
        help="check the R-matrix/twist matrix representation of the monoid",
    )
    p.add_argument("--dim", type=int, default=3)
    p.add_argument(
        "--strands", type=int, nargs="+", default=[3], help="strand counts to check"
    )
    p.set_defaults(func=cmd_verify_gvb_rep)

    p = sub.add_parser("verify-all", help="run the full verification battery")
    p.add_argument(
        "--algebras",
        nargs="+",
        default=["stuffle:6", "qpoly:4", "diag:3"],
    )
    p.add_argument("--only", help="run only sections whose name contains this")
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--profile-degree", type=int, default=7)
    p.add_argument("--cap", type=int, default=100_000)
    p.add_argument("--sample", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        parser.exit(2, f"gvbraid: error: {exc}\n")
        return 2  # unreachable; keeps type-checkers content


if __name__ == "__main__":
    sys.exit(main())
