"""Command-line front-end: variety checks, the golden example suite, and sweeps.

Subcommands: segre, toric, presented, examples, sweep.  Reports are emitted
as text or JSON; exit codes encode the verdict (0 presented or generated by
multiple, 1 not by the given splits, 2 not determined), with 64 for usage
errors, 65 for bad input data, and 70 for resource/internal failures.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from importlib import resources
from math import comb

from .groebner import BudgetExceeded, GroebnerBudget
from .poly import PolynomialSyntaxError
from .presentation import (
    Factorization,
    PresentationReport,
    SoundnessError,
    VERDICT_DET_PRESENTED,
    VERDICT_GENERATED_BY_MULTIPLE,
    VERDICT_NOT_DETERMINED,
    check_presentation,
    enumerate_splits,
    theorem_split,
)
from .varieties import (
    EmbeddedVariety,
    ExpansionError,
    presented_variety,
    presentation_from_json,
    segre_veronese,
    toric_variety,
    variety_from_json,
)

EXIT_OK = 0
EXIT_NOT_BY_SPLIT = 1
EXIT_NOT_DETERMINED = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_RESOURCE = 70

GOLDEN_CASES = ("pp1cubed-o211", "pp1cubed-o111", "del-pezzo", "grassmannian")


class DataError(ValueError):
    """Bad input data: malformed files, impossible splits, degenerate input."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _csv_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise DataError(f"expected a comma-separated integer list, got {text!r}") from exc


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--level", type=int, choices=(1, 2), default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH", default=None)
    p.add_argument("--pair-budget", type=int, default=500_000)
    p.add_argument("--term-budget", type=int, default=5_000_000)
    p.add_argument("--witness-budget", type=int, default=0)
    p.add_argument("--section-order", choices=("grevlex", "lex"), default="grevlex")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock timings in JSON output (breaks "
                        "bit-for-bit reproducibility)")


def _budget(args: argparse.Namespace) -> GroebnerBudget:
    return GroebnerBudget(
        max_pairs=args.pair_budget, max_basis_terms=args.term_budget
    )


def _exit_code(verdicts: list[str]) -> int:
    if any(
        v in (VERDICT_DET_PRESENTED, VERDICT_GENERATED_BY_MULTIPLE) for v in verdicts
    ):
        return EXIT_OK
    if any(v == VERDICT_NOT_DETERMINED for v in verdicts):
        return EXIT_NOT_DETERMINED
    return EXIT_NOT_BY_SPLIT


def _emit(payload: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(payload)
    else:
        print(payload)


def _run_and_report(
    variety: EmbeddedVariety,
    split_groups: list[list[Factorization]],
    args: argparse.Namespace,
) -> int:
    """Run one check per split group, emit reports, return the exit code."""
    budget = _budget(args)
    reports: list[PresentationReport] = []
    for group in split_groups:
        reports.append(
            check_presentation(
                variety,
                group,
                level=args.level,
                budget=budget,
                witness_budget=args.witness_budget,
            )
        )
    timed = getattr(args, "timings", False)
    if args.format == "json":
        if len(reports) == 1:
            payload = json.dumps(
                reports[0].to_dict(include_timings=timed), indent=2, sort_keys=True
            )
        else:
            payload = json.dumps(
                {"runs": [r.to_dict(include_timings=timed) for r in reports]},
                indent=2,
                sort_keys=True,
            )
    else:
        payload = "\n\n".join(r.to_text() for r in reports)
    _emit(payload + "\n", args.out)
    return _exit_code([r.verdict for r in reports])


def _resolve_splits(
    variety: EmbeddedVariety,
    args: argparse.Namespace,
    explicit: list[tuple[int, ...]],
) -> list[list[Factorization]]:
    """Translate --split/--splits/--pool flags into split groups to check."""
    m = variety.bundle_degree
    factorizations: list[Factorization] = []
    if explicit:
        for u in explicit:
            if len(u) != len(m):
                raise DataError(f"split {u} has wrong length for bundle degree {m}")
            comp = tuple(a - b for a, b in zip(m, u))
            factorizations.append(Factorization(u, comp))
    elif args.splits == "all":
        factorizations = enumerate_splits(variety)
        if not factorizations:
            raise DataError("no nontrivial factorization")
    elif args.splits == "theorem":
        f = theorem_split(variety)
        if f is None:
            raise DataError("no nontrivial factorization")
        factorizations = [f]
    else:
        raise DataError("supply --split or --splits")
    if getattr(args, "pool", False):
        return [factorizations]
    return [[f] for f in factorizations]


# -- subcommands -----------------------------------------------------------------


def cmd_segre(args: argparse.Namespace) -> int:
    dims = _csv_ints(args.dims)
    multidegree = _csv_ints(args.multidegree)
    variety = segre_veronese(dims, multidegree, section_order=args.section_order)
    explicit = [_csv_ints(s) for s in args.split or []]
    groups = _resolve_splits(variety, args, explicit)
    return _run_and_report(variety, groups, args)


def cmd_toric(args: argparse.Namespace) -> int:
    with open(args.points_file) as fh:
        data = json.load(fh)
    if isinstance(data, list):
        data = {"points": data}
    order = data.get("section_order", args.section_order)
    variety = toric_variety(data["points"], args.dilation, section_order=order)
    groups: list[list[Factorization]]
    if args.split:
        splits = []
        for a, b in args.split:
            if a < 1 or b < 1 or a + b != args.dilation:
                raise DataError(
                    f"split {a} {b} is not a positive splitting of dilation {args.dilation}"
                )
            splits.append(Factorization((a,), (b,)))
        groups = [splits] if args.pool else [[f] for f in splits]
    else:
        if args.splits == "theorem":
            raise DataError("the theorem split applies to products of projective spaces")
        factorizations = enumerate_splits(variety)
        if not factorizations:
            raise DataError("no nontrivial factorization")
        groups = [factorizations] if args.pool else [[f] for f in factorizations]
    return _run_and_report(variety, groups, args)


def cmd_presented(args: argparse.Namespace) -> int:
    with open(args.ring_file) as fh:
        data = json.load(fh)
    data.setdefault("kind", "presented")
    if args.degree:
        data["bundle_degree"] = list(_csv_ints(args.degree))
    if "bundle_degree" not in data:
        raise DataError("supply --degree or a bundle_degree in the ring file")
    variety = variety_from_json(data)
    explicit = [_csv_ints(s) for s in args.split or []]
    if not explicit:
        # No factorization: report the quadratic part and, at level 2, the
        # full ideal; this is the honest "cannot be presented this way" run.
        budget = _budget(args)
        report = check_presentation(
            variety, [], level=args.level, budget=budget,
            witness_budget=args.witness_budget,
        )
        report.notes.append("no nontrivial factorization supplied")
        payload = (
            json.dumps(
                report.to_dict(include_timings=args.timings), indent=2, sort_keys=True
            )
            if args.format == "json"
            else report.to_text()
        )
        _emit(payload + "\n", args.out)
        return _exit_code([report.verdict])
    groups = _resolve_splits(variety, args, explicit)
    return _run_and_report(variety, groups, args)


# -- the golden example suite ------------------------------------------------------


def _plucker_presentation():
    data = json.loads(
        resources.files("detpres").joinpath("data/plucker_o1.json").read_text()
    )
    return presentation_from_json(data)


def _plucker_o2_sections() -> list[str]:
    data = json.loads(
        resources.files("detpres").joinpath("data/plucker_o2.json").read_text()
    )
    return data["section_order"]


def _hexagon_points() -> list[list[int]]:
    data = json.loads(
        resources.files("detpres").joinpath("data/hexagon.json").read_text()
    )
    return data["points"]


def _golden_reports(name: str, budget: GroebnerBudget) -> dict:
    """Compute the reports for one golden case; timings are excluded."""
    if name == "pp1cubed-o211":
        variety = segre_veronese((1, 1, 1), (2, 1, 1), section_order="lex")
        report = check_presentation(
            variety, [Factorization((1, 1, 0), (1, 0, 1))], level=1, budget=budget
        )
        return {"report": report.to_dict(include_timings=False)}
    if name == "pp1cubed-o111":
        variety = segre_veronese((1, 1, 1), (1, 1, 1), section_order="lex")
        splits = [
            Factorization((1, 0, 0), (0, 1, 1)),
            Factorization((0, 1, 0), (1, 0, 1)),
            Factorization((0, 0, 1), (1, 1, 0)),
        ]
        single = [
            check_presentation(variety, [f], level=1, budget=budget).to_dict(
                include_timings=False
            )
            for f in splits
        ]
        pooled = check_presentation(variety, splits, level=1, budget=budget)
        return {"single": single, "pooled": pooled.to_dict(include_timings=False)}
    if name == "del-pezzo":
        variety = toric_variety(_hexagon_points(), 2, section_order="lex")
        report = check_presentation(
            variety, [Factorization((1,), (1,))], level=1, budget=budget
        )
        counts = {
            str(d): toric_variety(_hexagon_points(), d).num_sections for d in (1, 2, 4)
        }
        return {
            "report": report.to_dict(include_timings=False),
            "dilation_section_counts": counts,
        }
    if name == "grassmannian":
        pres = _plucker_presentation()
        v1 = presented_variety(pres, (1,), section_order="lex")
        r1 = check_presentation(v1, [], level=2, budget=budget)
        v2 = presented_variety(
            pres, (2,), section_order="lex", gamma_monomials=_plucker_o2_sections()
        )
        r2 = check_presentation(
            v2, [Factorization((1,), (1,))], level=1, budget=budget
        )
        return {
            "o1": r1.to_dict(include_timings=False),
            "o2": r2.to_dict(include_timings=False),
        }
    raise DataError(f"unknown example {name!r}")


def _canonical(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _first_difference(a, b, path="$") -> str:
    if type(a) is not type(b):
        return f"{path}: type {type(a).__name__} != {type(b).__name__}"
    if isinstance(a, dict):
        for k in sorted(set(a) | set(b)):
            if k not in a:
                return f"{path}.{k}: missing in fresh run"
            if k not in b:
                return f"{path}.{k}: missing in golden file"
            if a[k] != b[k]:
                return _first_difference(a[k], b[k], f"{path}.{k}")
    if isinstance(a, list):
        if len(a) != len(b):
            return f"{path}: length {len(a)} != {len(b)}"
        for i, (x, y) in enumerate(zip(a, b)):
            if x != y:
                return _first_difference(x, y, f"{path}[{i}]")
    return f"{path}: {a!r} != {b!r}"


def cmd_examples(args: argparse.Namespace) -> int:
    names = [args.only] if args.only else list(GOLDEN_CASES)
    for n in names:
        if n not in GOLDEN_CASES:
            raise DataError(f"unknown example {n!r}; choose from {', '.join(GOLDEN_CASES)}")
    budget = _budget(args)
    failures = []
    for name in names:
        t0 = time.perf_counter()
        fresh = _golden_reports(name, budget)
        elapsed = time.perf_counter() - t0
        if args.write:
            path = f"src/detpres/golden/{name}.json"
            with open(path, "w") as fh:
                fh.write(_canonical(fresh))
            print(f"WROTE  {name}  ({elapsed:.1f}s) -> {path}")
            continue
        golden_text = (
            resources.files("detpres").joinpath(f"golden/{name}.json").read_text()
        )
        if _canonical(fresh) == golden_text:
            print(f"PASS  {name}  ({elapsed:.1f}s)")
        else:
            where = _first_difference(fresh, json.loads(golden_text))
            failures.append(name)
            print(f"FAIL  {name}  ({elapsed:.1f}s)  first difference at {where}")
    if failures:
        print(f"{len(failures)} golden case(s) differ: {', '.join(failures)}")
        return 1
    return 0


# -- the product sweep --------------------------------------------------------------


def _split_minor_count(dims: tuple[int, ...], f: Factorization) -> int:
    s = 1
    t = 1
    for n, a, b in zip(dims, f.e, f.e_prime):
        s *= comb(n + a, a)
        t *= comb(n + b, b)
    return comb(s, 2) * comb(t, 2)


def cmd_sweep(args: argparse.Namespace) -> int:
    budget = _budget(args)
    rows = []
    counterexamples = 0
    for ell in range(1, args.max_factors + 1):
        for dims in itertools.product(range(1, args.max_dim + 1), repeat=ell):
            for m in itertools.product(range(1, args.max_degree + 1), repeat=ell):
                hypothesis = sum(1 for x in m if x >= 2) >= ell - 2
                variety = segre_veronese(dims, m)
                splits = enumerate_splits(variety)
                splits.sort(key=lambda f: (-_split_minor_count(dims, f), f.e))
                status = "OK"
                best_verdict = None
                best_span = -1
                best_split = None
                dim_i2 = None
                try:
                    if not splits:
                        report = check_presentation(
                            variety, [], level=args.level, budget=budget,
                            include_entries=False,
                        )
                        best_verdict = report.verdict
                        best_span = report.minor_span_dim
                        dim_i2 = report.dim_I2
                    for f in splits:
                        report = check_presentation(
                            variety, [f], level=args.level, budget=budget,
                            include_entries=False,
                        )
                        dim_i2 = report.dim_I2
                        if report.minor_span_dim > best_span:
                            best_span = report.minor_span_dim
                            best_verdict = report.verdict
                            best_split = f
                        if report.verdict == VERDICT_DET_PRESENTED:
                            break
                except BudgetExceeded:
                    status = "SKIPPED"
                if status != "SKIPPED":
                    passed = best_verdict == VERDICT_DET_PRESENTED
                    if hypothesis and not passed:
                        status = "COUNTEREXAMPLE"
                        counterexamples += 1
                    if not hypothesis and passed:
                        status = "COUNTEREXAMPLE"
                        counterexamples += 1
                rows.append(
                    {
                        "dims": list(dims),
                        "m": list(m),
                        "hypothesis": hypothesis,
                        "best_split": list(best_split.e) if best_split else None,
                        "dim_I2": dim_i2,
                        "minor_span": best_span,
                        "verdict": best_verdict,
                        "status": status,
                    }
                )
    if args.format == "json":
        payload = json.dumps(
            {"rows": rows, "counterexamples": counterexamples},
            indent=2,
            sort_keys=True,
        )
    else:
        lines = ["dims,m,hypothesis,best_split,dim_I2,minor_span,verdict,status"]
        for r in rows:
            lines.append(
                "{};{};{};{};{};{};{};{}".format(
                    " ".join(map(str, r["dims"])),
                    " ".join(map(str, r["m"])),
                    r["hypothesis"],
                    " ".join(map(str, r["best_split"])) if r["best_split"] else "-",
                    r["dim_I2"],
                    r["minor_span"],
                    r["verdict"],
                    r["status"],
                ).replace(";", ",")
            )
        lines.append(f"counterexamples: {counterexamples}")
        payload = "\n".join(lines)
    _emit(payload + "\n", args.out)
    return 0 if counterexamples == 0 else 1


# -- entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="detpres", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("segre", help="check a product of projective spaces")
    p.add_argument("--dims", required=True, help="factor dimensions, e.g. 1,1,1")
    p.add_argument("--multidegree", required=True, help="bundle class, e.g. 2,1,1")
    p.add_argument("--split", action="append", metavar="U",
                   help="degree of the first factor (complement implied); repeatable")
    p.add_argument("--splits", choices=("all", "theorem"), default=None)
    p.add_argument("--pool", action="store_true",
                   help="pool the minors of all splits into one check")
    _add_common_flags(p)
    p.set_defaults(func=cmd_segre)

    p = sub.add_parser("toric", help="check a polytope dilation variety")
    p.add_argument("points_file", help="JSON file with the polytope points")
    p.add_argument("--dilation", type=int, required=True)
    p.add_argument("--split", action="append", nargs=2, type=int, metavar=("A", "B"),
                   help="dilation split a + b; repeatable")
    p.add_argument("--splits", choices=("all",), default=None)
    p.add_argument("--pool", action="store_true")
    _add_common_flags(p)
    p.set_defaults(func=cmd_toric)

    p = sub.add_parser("presented", help="check a presented coordinate ring")
    p.add_argument("ring_file", help="JSON file with variables/grading/relations")
    p.add_argument("--degree", default=None, help="bundle multidegree, e.g. 2")
    p.add_argument("--split", action="append", metavar="U",
                   help="degree vector of the first factor; repeatable")
    p.add_argument("--pool", action="store_true")
    _add_common_flags(p)
    p.set_defaults(func=cmd_presented)

    p = sub.add_parser("examples", help="run the golden example suite")
    p.add_argument("--only", default=None, help="run a single named case")
    p.add_argument("--write", action="store_true",
                   help="regenerate the committed golden files (maintenance)")
    _add_common_flags(p)
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("sweep", help="sweep products of projective spaces")
    p.add_argument("--max-factors", type=int, default=3)
    p.add_argument("--max-dim", type=int, default=2)
    p.add_argument("--max-degree", type=int, default=3)
    _add_common_flags(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DataError, PolynomialSyntaxError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"detpres: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"detpres: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except BudgetExceeded as exc:
        print(f"detpres: resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (SoundnessError, ExpansionError, ArithmeticError) as exc:
        print(f"detpres: internal error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
