"""Command-line front end.

    regtorus betti --n 4 --chi-order 2
    regtorus character --n 3 --chi-order 3 --degree 2 --format json
    regtorus traces --n 3 --format latex
    regtorus verify --suite induction --max-n 6

Exit status: 0 on success or PASS, 1 on a verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import formulas, suites
from .combinat import partitions
from .numkit import QPoly, divisors, euler_phi
from .reps import betti_numbers, decompose, isotypic_character, total_character

FORMATS = ("text", "json", "csv", "latex")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    chi_order: int | None = None
    degree: int | None = None
    truncate: int | None = None
    q_list: list[int] = field(default_factory=lambda: list(suites.DEFAULT_Q))
    format: str = "text"
    max_n: int = 5
    suite: str | None = None

    def validate(self):
        if self.n is not None and self.n < 1:
            raise UsageError("--n must be positive")
        if self.n is not None and self.chi_order is not None and self.n % self.chi_order:
            raise UsageError(f"--chi-order {self.chi_order} does not divide --n {self.n}")
        if self.truncate is not None and self.n is not None and self.truncate < self.n:
            raise UsageError("--truncate must be at least --n")


def _rat(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _poly_latex(p: QPoly) -> str:
    return str(p).replace("*", "")


def _factored_latex(n: int, r: int) -> str:
    """The closed form c (q - r - 1)(q - 2r - 1)... of the isotypic Betti polynomial."""
    b = n // r
    c = formulas.betti_closed_form(n, r).coeffs[-1]
    factors = "".join(f"(q-{j * r + 1})" for j in range(1, b))
    if not factors:
        return _rat(c)
    if c == 1:
        return factors
    if c == -1:
        return "-" + factors
    return f"{_rat(c)}{factors}"


# -- commands ----------------------------------------------------------------------


def cmd_betti(cfg: RunConfig) -> dict:
    n, r = cfg.n, cfg.chi_order
    if n is None:
        raise UsageError("betti needs --n")
    if n > 10:
        raise UsageError("betti supports n <= 10")
    dims = betti_numbers(n, r)
    if r is None:
        poly = sum((euler_phi(d) * formulas.betti_closed_form(n, d) for d in divisors(n)), QPoly())
        factored = " + ".join(
            f"{euler_phi(d)}\\cdot {_factored_latex(n, d)}" if euler_phi(d) > 1 else _factored_latex(n, d)
            for d in divisors(n)
        )
    else:
        poly = formulas.betti_closed_form(n, r)
        factored = _factored_latex(n, r)
    return {
        "n": n,
        "chi_order": r,
        "betti": dims,
        "weight_polynomial": poly.to_json(),
        "_poly": poly,
        "_factored": factored,
    }


def cmd_character(cfg: RunConfig) -> dict:
    n, r, j = cfg.n, cfg.chi_order, cfg.degree
    if n is None or j is None:
        raise UsageError("character needs --n and --degree")
    if not 0 <= j <= n - 1:
        raise UsageError(f"--degree must lie in 0..{n - 1}")
    if n > 10:
        raise UsageError("character supports n <= 10")
    chi = total_character(n, j) if r is None else isotypic_character(n, r, j)
    decomposition = decompose(chi)
    for mu, mult in decomposition.items():
        if mult.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {mult} of {mu}")
    return {
        "n": n,
        "chi_order": r,
        "degree": j,
        "classes": [{"cycle_type": list(lam), "trace": _rat(chi[lam])} for lam in partitions(n)],
        "decomposition": [
            {"irreducible": list(mu), "multiplicity": int(decomposition[mu])}
            for mu in partitions(n)
            if mu in decomposition
        ],
    }


def cmd_traces(cfg: RunConfig) -> dict:
    n, r = cfg.n, cfg.chi_order
    if n is None:
        raise UsageError("traces needs --n")
    if n > 10:
        raise UsageError("traces supports n <= 10")
    rows = []
    for lam in partitions(n):
        p = formulas.trace_ST_total(lam) if r is None else formulas.trace_ST(lam, r)
        rows.append({"cycle_type": list(lam), "weight_polynomial": p.to_json(), "_poly": p})
    return {"n": n, "chi_order": r, "classes": rows}


def cmd_verify(cfg: RunConfig):
    if cfg.suite == "identities":
        N = cfg.truncate or 6
        orders = [cfg.chi_order] if cfg.chi_order else [r for r in suites.DEFAULT_ORDERS if r <= N]
        return suites.identities(N, orders)
    if cfg.suite == "induction":
        if cfg.max_n > 6:
            raise UsageError("induction suite supports --max-n <= 6")
        return suites.induction(cfg.max_n)
    if cfg.suite == "oracle":
        ns = [cfg.n] if cfg.n else list(range(2, min(cfg.max_n, 4) + 1))
        return suites.oracle_suite(ns, cfg.q_list)
    raise UsageError(f"unknown suite {cfg.suite!r}")


# -- rendering -------------------------------------------------------------------


def _public(obj):
    if isinstance(obj, dict):
        return {k: _public(v) for k, v in obj.items() if not k.startswith("_")}
    if isinstance(obj, list):
        return [_public(v) for v in obj]
    return obj


def render(command: str, result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_public(result), indent=2)
    buf = io.StringIO()
    if command == "betti":
        if fmt == "csv":
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["degree", "dimension"])
            w.writerows(enumerate(result["betti"]))
        elif fmt == "latex":
            n = result["n"]
            buf.write(
                f"\\sum_i (-1)^i \\dim H^i q^{{{n - 1}-i}} = {_poly_latex(result['_poly'])}"
                f" = {result['_factored']}\n"
            )
        else:
            label = "total" if result["chi_order"] is None else f"chi of order {result['chi_order']}"
            buf.write(f"H^j(ST(1,{result['n']})), {label}\n")
            for j, d in enumerate(result["betti"]):
                buf.write(f"  j={j}: {d}\n")
            buf.write(f"weight polynomial: {result['_poly']}\n")
    elif command == "character":
        if fmt == "csv":
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["cycle_type", "trace"])
            for row in result["classes"]:
                w.writerow([",".join(map(str, row["cycle_type"])), row["trace"]])
        elif fmt == "latex":
            cols = " & ".join(f"({','.join(map(str, row['cycle_type']))})" for row in result["classes"])
            vals = " & ".join(row["trace"] for row in result["classes"])
            buf.write("\\begin{tabular}{" + "c" * len(result["classes"]) + "}\n")
            buf.write(f"{cols} \\\\\n{vals}\n\\end{{tabular}}\n")
        else:
            buf.write(f"H^{result['degree']}(ST(1,{result['n']}))")
            buf.write("" if result["chi_order"] is None else f"_chi, chi of order {result['chi_order']}")
            buf.write("\n")
            for row in result["classes"]:
                buf.write(f"  ({','.join(map(str, row['cycle_type']))}): {row['trace']}\n")
            parts = [
                f"{d['multiplicity']}*chi^({','.join(map(str, d['irreducible']))})"
                for d in result["decomposition"]
            ]
            buf.write("  = " + (" + ".join(parts) if parts else "0") + "\n")
    elif command == "traces":
        if fmt == "csv":
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["cycle_type", "weight_polynomial"])
            for row in result["classes"]:
                w.writerow([",".join(map(str, row["cycle_type"])), str(row["_poly"])])
        elif fmt == "latex":
            for row in result["classes"]:
                ct = ",".join(map(str, row["cycle_type"]))
                buf.write(f"P(({ct}), q) = {_poly_latex(row['_poly'])} \\\\\n")
        else:
            for row in result["classes"]:
                buf.write(f"({','.join(map(str, row['cycle_type']))}): {row['_poly']}\n")
    return buf.getvalue().rstrip("\n")


# -- entry point -------------------------------------------------------------------


def _q_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad q list {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regtorus",
        description="Cohomology characters of the regular elements of a maximal torus of SL_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int)
        p.add_argument("--chi-order", type=int, help="order r of the central character (omit for total)")
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("betti", help="Betti numbers of ST(1,n) or an isotypic part")
    common(p)
    p = sub.add_parser("character", help="S_n character on H^j(ST(1,n))")
    common(p)
    p.add_argument("--degree", type=int, required=True)
    p = sub.add_parser("traces", help="weight polynomials P(w, chi, ST(1,n), q) per cycle type")
    common(p)
    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("--suite", choices=("identities", "induction", "oracle"), required=True)
    p.add_argument("--truncate", type=int)
    p.add_argument("--q-list", type=_q_list, default=list(suites.DEFAULT_Q))
    p.add_argument("--max-n", type=int, default=5)
    return parser


COMMANDS = {"betti": cmd_betti, "character": cmd_character, "traces": cmd_traces}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        n=args.n,
        chi_order=args.chi_order,
        degree=getattr(args, "degree", None),
        truncate=getattr(args, "truncate", None),
        q_list=getattr(args, "q_list", list(suites.DEFAULT_Q)),
        format=args.format,
        max_n=getattr(args, "max_n", 5),
        suite=getattr(args, "suite", None),
    )
    try:
        cfg.validate()
        if cfg.command == "verify":
            report = cmd_verify(cfg)
            if cfg.format == "json":
                print(json.dumps({"suite": report.name, "passed": report.passed,
                                  "cases": report.cases, "failures": report.failures}, indent=2))
            else:
                print(report.summary())
                for line in report.failures:
                    print(f"  FAIL {line}")
            return 0 if report.passed else 1
        result = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"regtorus: error: {exc}", file=sys.stderr)
        return 2
    print(render(cfg.command, result, cfg.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
