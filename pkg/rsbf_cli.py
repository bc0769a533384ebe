"""
RSBF CLI - command-line front end for the RSBF matrix toolkit

Usage:
    python rsbf_cli.py orbits --n 4
    python rsbf_cli.py matrix --n 4 --format csv
    python rsbf_cli.py verify --n 4
    python rsbf_cli.py spectrum --n 4 --function 000110 --format csv
    python rsbf_cli.py eigen --n 5
    python rsbf_cli.py bent-search --n 6 --exhaustive
    python rsbf_cli.py oracle --n 8

Exit codes:
    0 success, 1 verification failed, 2 usage error,
    3 budget exceeded, 4 internal consistency / overflow error

Errors print one JSON line {"error": ..., "message": ...} on stderr.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler

from bent_search import BentSearch, SearchMode
from config.settings import (
    DEFAULT_SEED,
    DEFAULT_THREADS,
    LOG_LEVEL,
    MAX_ENUMERATION_N,
    MAX_MATRIX_N,
)
from tools.bitvec_tools import validate_dimension
from tools.errors import (
    ArithmeticOverflowError,
    BudgetExceededError,
    DimensionError,
    InternalConsistencyError,
    InvalidFunctionError,
    RsbfError,
    TheoremScopeError,
    check_budget,
)
from tools.matrix_tools import (
    CyclicShift,
    RsbfMatrix,
    build,
    eigen_multiplicities,
    eigen_report_from_matrix,
    probe_square_identity,
    sigma_sum_closed_form,
    trace_closed_form,
    trace_direct,
    trace_via_orbit_stabilizer,
    trace_via_sigma_sums,
    verify_square_identity,
)
from tools.oracle_tools import orbit_count_brute, sigma_sum_brute, trace_brute
from tools.orbit_tools import count_orbits_burnside, enumerate_orbits
from tools.report_tools import FORMATS, Report, render, write
from tools.walsh_tools import (
    RsbfFunction,
    contract,
    is_bent,
    spectrum_via_matrix,
    truth_table_from_string,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4

VERIFY_CHECKS = ("square", "trace", "eigen", "oracle", "probe")
DEFAULT_VERIFY_CHECKS = ("square", "trace", "eigen")


class UsageError(RsbfError):
    kind = "usage"


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of printing usage and exiting"""

    def error(self, message: str):
        raise UsageError(message)


@dataclass(frozen=True)
class CliConfig:
    """One parsed invocation"""

    command: str
    n: int
    fmt: str = "json"
    out: Optional[str] = None
    threads: int = DEFAULT_THREADS
    max_n_override: Optional[int] = None
    function: Optional[str] = None
    exhaustive: bool = False
    sample: Optional[int] = None
    seed: int = DEFAULT_SEED
    elements: bool = False
    checks: tuple[str, ...] = ()

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "CliConfig":
        checks = tuple(c for c in VERIFY_CHECKS if getattr(ns, c, False))
        return cls(
            command=ns.command,
            n=ns.n,
            fmt=ns.format,
            out=ns.out,
            threads=ns.threads,
            max_n_override=ns.max_n_override,
            function=getattr(ns, "function", None),
            exhaustive=getattr(ns, "exhaustive", False),
            sample=getattr(ns, "sample", None),
            seed=getattr(ns, "seed", DEFAULT_SEED),
            elements=getattr(ns, "elements", False),
            checks=checks,
        )


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="rsbf",
        description="Exact computations with the RSBF matrix nA: orbits, identities, Walsh spectra, bentness.",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name: str, help_text: str) -> CliArgumentParser:
        sub = commands.add_parser(name, help=help_text, description=help_text)
        sub.add_argument("--n", type=_positive_int, required=True, help="dimension n")
        sub.add_argument("--format", choices=FORMATS, default="json", help="output format (default: json)")
        sub.add_argument("--out", default=None, help="output path (default: stdout)")
        sub.add_argument("--threads", type=_positive_int, default=DEFAULT_THREADS, help="worker threads")
        sub.add_argument("--max-n-override", type=_positive_int, default=None,
                         help="raise or lower this command's n-budget")
        return sub

    orbits = command("orbits", "list the orbits of C_n on F2^n")
    orbits.add_argument("--elements", action="store_true", help="include every orbit element")

    command("matrix", "build the RSBF matrix nA")

    verify = command("verify", "check A^2 = 2^n I, trace identities and eigenvalue counts")
    verify.add_argument("--square", action="store_true", help="full A^2 = 2^n I product")
    verify.add_argument("--trace", action="store_true", help="trace: direct vs shift sums vs closed forms")
    verify.add_argument("--eigen", action="store_true", help="multiplicities: closed form vs built matrix")
    verify.add_argument("--oracle", action="store_true", help="compare with brute-force oracles")
    verify.add_argument("--probe", action="store_true", help="A(Ax) = 2^n x on seeded random vectors")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED, help="probe seed")

    spectrum = command("spectrum", "orbit-level Walsh spectrum of an RSBF")
    spectrum.add_argument("--function", required=True,
                          help="g_n orbit bits or a 2^n truth table; @path reads it from a file")

    command("eigen", "eigenvalue multiplicities of nA from closed forms")

    search = command("bent-search", "search RSBFs for bent functions")
    mode = search.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true", help="all 2^g_n functions (even n)")
    mode.add_argument("--sample", type=_non_negative_int, metavar="COUNT", help="COUNT random functions")
    search.add_argument("--seed", type=int, default=DEFAULT_SEED, help="sampling seed")

    command("oracle", "brute-force orbit count, shift sums and trace")
    return parser


def parse_config(argv: Optional[Sequence[str]]) -> CliConfig:
    return CliConfig.from_namespace(build_parser().parse_args(argv))


def configure_logging(level: Optional[str] = None) -> None:
    logging.basicConfig(
        level=(level or LOG_LEVEL).upper(),
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_time=False, show_path=False)],
        force=True,
    )


# --- commands ----------------------------------------------------------------

def _matrix_for(config: CliConfig) -> RsbfMatrix:
    # checked before enumerating all 2^n encodings
    limit = MAX_MATRIX_N if config.max_n_override is None else config.max_n_override
    check_budget("matrix build", validate_dimension(config.n), limit)
    table = enumerate_orbits(config.n, max_n=max(limit, MAX_ENUMERATION_N))
    return build(table, threads=config.threads, max_n=limit)


def cmd_orbits(config: CliConfig) -> tuple[Report, bool]:
    table = enumerate_orbits(config.n, max_n=config.max_n_override)
    data = table.to_dict(include_elements=config.elements)
    header = ["representative", "size"]
    rows = [[o["representative"], o["size"]] for o in data["orbits"]]
    if config.elements:
        header.append("elements")
        for row, orbit in zip(rows, data["orbits"]):
            row.append(" ".join(orbit["elements"]))
    report = Report(
        title=f"Orbits of C_{config.n} on F2^{config.n}",
        data=data,
        rows=rows,
        header=header,
        notes=[f"g = {table.g}"],
    )
    return report, True


def cmd_matrix(config: CliConfig) -> tuple[Report, bool]:
    matrix = _matrix_for(config)
    report = Report(
        title=f"RSBF matrix, n={config.n}, g={matrix.g}",
        data=matrix.to_dict(),
        rows=matrix.rows(),
        notes=["rows/columns: " + " ".join(matrix.representatives)],
    )
    return report, True


def _check_trace(matrix) -> dict:
    values = {
        "direct": trace_direct(matrix),
        "via_sigma_sums": trace_via_sigma_sums(matrix.n),
        "closed_form": trace_closed_form(matrix.n),
        "orbit_stabilizer": trace_via_orbit_stabilizer(matrix.table),
    }
    values["agree"] = len(set(values.values())) == 1
    return values


def _check_eigen(matrix, max_n: Optional[int]) -> dict:
    if matrix.n <= 2:
        return {"skipped": "eigenvalue multiplicities are stated for n > 2", "agree": True}
    closed_form = eigen_multiplicities(matrix.n, max_n=max_n)
    measured = eigen_report_from_matrix(matrix)
    result = closed_form.to_dict()
    result["agree"] = closed_form == measured
    return result


def _check_oracle(matrix, max_n: Optional[int]) -> dict:
    n = matrix.n
    shifts = []
    for k in range(n):
        brute = sigma_sum_brute(n, k, max_n=max_n)
        closed = sigma_sum_closed_form(CyclicShift.of(n, k))
        shifts.append({"k": k, "brute": brute, "closed_form": closed})
    g = orbit_count_brute(n, max_n=max_n)
    trace = trace_brute(n, max_n=max_n)
    agree = (
        all(s["brute"] == s["closed_form"] for s in shifts)
        and g == matrix.g == count_orbits_burnside(n)
        and trace == trace_direct(matrix)
    )
    return {"g": g, "trace": trace, "sigma_sums": shifts, "agree": agree}


def cmd_verify(config: CliConfig) -> tuple[Report, bool]:
    checks = config.checks or DEFAULT_VERIFY_CHECKS
    matrix = _matrix_for(config)

    results: dict[str, dict] = {}
    passed: dict[str, bool] = {}
    for check in checks:
        if check == "square":
            verdict = verify_square_identity(matrix, threads=config.threads, max_n=config.max_n_override)
            results[check], passed[check] = verdict.to_dict(), verdict.holds
        elif check == "probe":
            verdict = probe_square_identity(matrix, seed=config.seed)
            results[check], passed[check] = verdict.to_dict(), verdict.holds
        elif check == "trace":
            results[check] = _check_trace(matrix)
            passed[check] = results[check]["agree"]
        elif check == "eigen":
            results[check] = _check_eigen(matrix, config.max_n_override)
            passed[check] = results[check]["agree"]
        elif check == "oracle":
            results[check] = _check_oracle(matrix, config.max_n_override)
            passed[check] = results[check]["agree"]

    ok = all(passed.values())
    rows = [[check, "ok" if passed[check] else "FAILED"] for check in checks]
    notes = []
    if "square" in results:
        notes.append(f"A^2 diagonal: {results['square']['diagonal']}")
    if "trace" in results:
        notes.append(f"trace: {results['trace']['direct']}")
    report = Report(
        title=f"Verification, n={config.n}, g={matrix.g}",
        data={"n": config.n, "g": matrix.g, "checks": results, "ok": ok},
        rows=rows,
        header=["check", "result"],
        notes=notes,
    )
    return report, ok


def _read_function_text(value: str) -> str:
    if value.startswith("@"):
        return Path(value[1:]).read_text(encoding="utf-8").strip()
    return value.strip()


def cmd_spectrum(config: CliConfig) -> tuple[Report, bool]:
    matrix = _matrix_for(config)
    table = matrix.table
    text = _read_function_text(config.function)
    if len(text) == table.g:
        function = RsbfFunction.from_string(text, config.n)
    elif len(text) == 1 << config.n:
        function = contract(truth_table_from_string(text), table)
    else:
        raise InvalidFunctionError(
            f"function has {len(text)} bits; expected {table.g} orbit values or {1 << config.n} truth-table bits"
        )
    spectrum = spectrum_via_matrix(function, matrix)
    bent = is_bent(function, matrix)
    data = {"n": config.n, "function": function.to_string(), "bent": bent}
    data["spectrum"] = spectrum.to_dict(table)["spectrum"]
    report = Report(
        title=f"Walsh spectrum, n={config.n}, f={function.to_string()}",
        data=data,
        rows=[list(row) for row in spectrum.to_rows(table)],
        header=["representative", "walsh_value"],
        notes=[f"bent: {str(bent).lower()}"],
    )
    return report, True


def cmd_eigen(config: CliConfig) -> tuple[Report, bool]:
    eigen = eigen_multiplicities(config.n, max_n=config.max_n_override)
    data = eigen.to_dict()
    report = Report(
        title=f"Eigenvalues +-2^(n/2) of nA, n={config.n}",
        data=data,
        rows=[list(data.values())],
        header=list(data.keys()),
    )
    return report, True


def cmd_bent_search(config: CliConfig) -> tuple[Report, bool]:
    max_orbits = None
    if config.max_n_override is not None:
        max_orbits = count_orbits_burnside(min(config.max_n_override, 32))
    search = BentSearch(
        config.n,
        threads=config.threads,
        max_orbits=max_orbits,
        max_n=config.max_n_override,
        show_progress=sys.stderr.isatty(),
    )
    mode = SearchMode.exhaustive() if config.exhaustive else SearchMode.sampled(config.sample, config.seed)
    result = search.run(mode)
    report = Report(
        title=f"Bent RSBFs, n={config.n} ({mode.kind})",
        data=result.to_dict(),
        rows=[[bits] for bits in result.bent],
        header=["orbit_values"],
        notes=[f"tested {result.functions_tested}, bent {result.bent_count}"]
        + ([result.reason] if result.reason else []),
    )
    return report, True


def cmd_oracle(config: CliConfig) -> tuple[Report, bool]:
    n, max_n = config.n, config.max_n_override
    sums = [sigma_sum_brute(n, k, max_n=max_n) for k in range(n)]
    data = {
        "n": n,
        "g": orbit_count_brute(n, max_n=max_n),
        "trace": trace_brute(n, max_n=max_n),
        "sigma_sums": [{"k": k, "sigma_sum": s} for k, s in enumerate(sums)],
    }
    report = Report(
        title=f"Brute-force oracle, n={n}",
        data=data,
        rows=[[k, s] for k, s in enumerate(sums)],
        header=["k", "sigma_sum"],
        notes=[f"g = {data['g']}", f"trace = {data['trace']}"],
    )
    return report, True


COMMANDS: dict[str, Callable[[CliConfig], tuple[Report, bool]]] = {
    "orbits": cmd_orbits,
    "matrix": cmd_matrix,
    "verify": cmd_verify,
    "spectrum": cmd_spectrum,
    "eigen": cmd_eigen,
    "bent-search": cmd_bent_search,
    "oracle": cmd_oracle,
}


def _report_error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    sys.stderr.flush()


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv, dispatch one command and emit its report.

    Returns:
        Process exit code
    """
    try:
        config = parse_config(argv)
    except UsageError as e:
        _report_error(e.kind, str(e))
        return EXIT_USAGE

    configure_logging()
    try:
        report, ok = COMMANDS[config.command](config)
        write(render(report, config.fmt), config.out)
    except BudgetExceededError as e:
        _report_error(e.kind, str(e))
        return EXIT_BUDGET
    except (DimensionError, InvalidFunctionError, TheoremScopeError) as e:
        _report_error(e.kind, str(e))
        return EXIT_USAGE
    except (InternalConsistencyError, ArithmeticOverflowError) as e:
        logger.debug(f"{e.kind}: {e}", exc_info=True)
        _report_error(e.kind, str(e))
        return EXIT_INTERNAL
    except OSError as e:
        _report_error("io", str(e))
        return EXIT_USAGE

    if not ok:
        failed = [
            name for name, check in report.data["checks"].items()
            if not check.get("agree", check.get("holds", True))
        ]
        _report_error("verification_failed", f"checks failed: {', '.join(failed)}")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def main():
    """
    Main entry point

    Usage:
        python rsbf_cli.py <command> --n <int> [options]
    """
    sys.exit(run())


if __name__ == "__main__":
    main()
