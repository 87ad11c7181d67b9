import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO, Tuple

import pandas as pd

from idealpow.constants import Constants
from idealpow.constructions import (
    GrowthTable,
    ProbeReport,
    analytic_spread,
    form_algebra_probe,
    form_ideal,
    growth_table,
    rees_presentation,
    sharp_ideal,
    symbolic_power,
    veronese_probe,
)
from idealpow.errors import AlgebraError, ParseError
from idealpow.groebner import Ideal, MonomialIdeal, initial_ideal
from idealpow.ideal_ops import colon_ideal, power, saturate_ideal
from idealpow.invariants import INFINITE, HilbertData, hilbert_series, local_colength, quotient_length
from idealpow.utils.logger import get_logger
from utils.parsing import ProblemFile, load_problem

logger = get_logger("runners")

COMMANDS = (
    "power",
    "colon",
    "saturate",
    "symbolic",
    "form-ideal",
    "sharp",
    "spread",
    "rees",
    "length",
    "growth",
    "veronese-probe",
    "form-probe",
    "hilbert",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="run.py", description="Powers, saturations and form ideals of polynomial ideals."
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub = commands.add_parser(name)
        sub.add_argument("--file", required=True, help="problem file")
        sub.add_argument("--ideal", default="I", help="name of the ideal I")
        sub.add_argument("--aux", default=None, help="name of the auxiliary ideal J")
        sub.add_argument("-k", type=int, default=None)
        sub.add_argument("--kmax", type=int, default=Constants.default_kmax)
        sub.add_argument("-d", type=int, default=1)
        sub.add_argument("-e", type=int, default=1)
        sub.add_argument("--format", choices=("text", "json", "tsv"), default="text")
        if name in ("growth", "veronese-probe"):
            sub.add_argument(
                "--sharp", action="store_true", help="use the deformed ideal and J = (s)"
            )
    return parser


# output


def render_ideal(ideal: Ideal, fmt: str) -> str:
    gens = [str(g) for g in ideal.groebner_basis()]
    if fmt == "json":
        return json.dumps({"ring": str(ideal.ring), "generators": gens}, indent=2)
    if fmt == "tsv":
        return "\n".join(gens)
    return str(ideal)


def render_value(value, fmt: str) -> str:
    text = "infinite" if value == INFINITE else str(value)
    if fmt == "json":
        return json.dumps({"value": None if value == INFINITE else value}, indent=2)
    return text


def render_hilbert(data: HilbertData, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "numerator": data.numerator_text(),
            "dimension": data.dimension,
            "multiplicity": data.multiplicity,
        }
        return json.dumps(payload, indent=2)
    if fmt == "tsv":
        return f"{data.numerator_text()}\t{data.dimension}\t{data.multiplicity}"
    return str(data)


def render_table(table, fmt: str) -> str:
    if fmt == "json":
        return table.to_json()
    if fmt == "tsv":
        return table.to_tsv().rstrip("\n")
    return str(table)


# dispatch


def _k(args, default: int = 1) -> int:
    k = default if args.k is None else args.k
    if k < 0:
        raise ValueError(f"-k must be non-negative, got {k}")
    return k


def _pair(args, problem: ProblemFile) -> Tuple[Ideal, Ideal]:
    ideal = problem.ideal(args.ideal)
    if args.aux is None:
        return ideal, Ideal.maximal(problem.ring)
    return ideal, problem.ideal(args.aux)


def _sharp_pair(args, problem: ProblemFile) -> Tuple[Ideal, Ideal]:
    ideal, other = _pair(args, problem)
    if not getattr(args, "sharp", False):
        return ideal, other
    deformed = sharp_ideal(ideal)
    s = deformed.ring.gen(Constants.sharp_variable)
    return deformed, Ideal(deformed.ring, [s])


def _powered(args, problem: ProblemFile) -> Ideal:
    ideal = problem.ideal(args.ideal)
    return ideal if args.k is None else power(ideal, _k(args))


def _length(args, problem: ProblemFile):
    if args.aux is None:
        return local_colength(_powered(args, problem))
    ideal, other = _pair(args, problem)
    k = _k(args)
    return quotient_length(power(ideal, k), symbolic_power(ideal, other, k))


def _hilbert(args, problem: ProblemFile) -> HilbertData:
    ideal = _powered(args, problem)
    monomial = MonomialIdeal(ideal.ring) if ideal.is_zero() else initial_ideal(ideal)
    return hilbert_series(monomial)


HANDLERS: Dict[str, Tuple[Callable, Callable]] = {
    "power": (lambda a, p: power(p.ideal(a.ideal), _k(a, 2)), render_ideal),
    "colon": (lambda a, p: colon_ideal(*_pair(a, p)), render_ideal),
    "saturate": (lambda a, p: saturate_ideal(*_pair(a, p)), render_ideal),
    "symbolic": (lambda a, p: symbolic_power(*_pair(a, p), _k(a)), render_ideal),
    "form-ideal": (lambda a, p: form_ideal(_powered(a, p)), render_ideal),
    "sharp": (lambda a, p: sharp_ideal(_powered(a, p)), render_ideal),
    "spread": (lambda a, p: analytic_spread(_powered(a, p)), render_value),
    "rees": (lambda a, p: rees_presentation(_powered(a, p)), render_ideal),
    "length": (_length, render_value),
    "growth": (lambda a, p: growth_table(*_sharp_pair(a, p), a.e, a.kmax), render_table),
    "veronese-probe": (
        lambda a, p: veronese_probe(*_sharp_pair(a, p), a.d, a.kmax),
        render_table,
    ),
    "form-probe": (lambda a, p: form_algebra_probe(p.ideal(a.ideal), a.kmax), render_table),
    "hilbert": (_hilbert, render_hilbert),
}


def run_command(argv: List[str], out: TextIO = None) -> int:
    """Run one subcommand; 0 on success, 1 on a mathematical error, 2 on bad input."""
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logger.log(logging.INFO, f"running {args.command} on {args.file}")
    compute, render = HANDLERS[args.command]
    try:
        problem = load_problem(args.file)
        result = compute(args, problem)
    except (ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        logger.log(logging.DEBUG, f"{args.command} failed", exc)
        print(f"error: {exc}", file=sys.stderr)
        return 1

    print(render(result, args.format), file=out)
    return 0


# batch runs over the bundled problems


def run_example(example: dict) -> Tuple[dict, Optional[object]]:
    """Run one settings entry; returns a summary row and the table or report it produced."""
    problem = load_problem(example["file"])
    ideal = problem.ideal(example.get("ideal", "I"))
    other = problem.ideal(example["aux"]) if "aux" in example else Ideal.maximal(problem.ring)
    if example.get("sharp"):
        ideal = sharp_ideal(ideal)
        other = Ideal(ideal.ring, [ideal.ring.gen(Constants.sharp_variable)])
    task = example["task"]
    summary = {"name": example["name"], "task": task, "ring": str(ideal.ring)}
    expected = example.get("expected")

    product = None
    if task == "growth":
        product = growth_table(ideal, other, example["e"], example["kmax"], example.get("ks"))
        lengths = [row.length for row in product.rows]
        summary["result"] = " ".join(str(x) for x in lengths)
    elif task == "veronese-probe":
        product = veronese_probe(ideal, other, example.get("d", 1), example["kmax"])
        summary["result"] = product.summary
    elif task == "form-probe":
        product = form_algebra_probe(ideal, example["kmax"])
        summary["result"] = product.summary
    elif task == "form-ideal":
        summary["result"] = str(form_ideal(ideal))
    elif task == "spread":
        summary["result"] = str(analytic_spread(ideal))
    elif task == "colength":
        summary["result"] = str(local_colength(ideal))
    else:
        raise ValueError(f"unknown task {task!r}")

    summary["expected"] = expected if expected is not None else ""
    summary["status"] = "reported" if expected is None else (
        "agree" if summary["result"] == expected else "DIFFER"
    )
    return summary, product


def run_examples(settings: dict) -> Tuple[list, pd.DataFrame, Dict[str, object]]:
    rows, products = [], {}
    for example in settings["examples"]:
        try:
            summary, product = run_example(example)
        except AlgebraError as exc:
            logger.log(logging.WARNING, f"{example['name']} failed: {exc}")
            summary = {"name": example["name"], "task": example["task"], "status": "ERROR"}
            product = None
        rows.append(summary)
        if product is not None:
            products[example["name"]] = product
    return rows, process_example_results(rows), products


def process_example_results(rows: list) -> pd.DataFrame:
    column_order = ["name", "task", "ring", "result", "expected", "status"]
    summary = pd.DataFrame(rows)
    for column in column_order:
        if column not in summary:
            summary[column] = ""
    summary = summary.fillna("")
    return summary[column_order]


def write_products(products: Dict[str, object], results_dir) -> None:
    for name, product in products.items():
        if isinstance(product, (GrowthTable, ProbeReport)):
            (results_dir / f"{name}.tsv").write_text(product.to_tsv())
            (results_dir / f"{name}.json").write_text(product.to_json())
