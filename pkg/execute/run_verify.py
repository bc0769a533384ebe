"""
Standalone invocation of the RSBF identity checks
Builds nA for each n and checks A^2 = 2^n I plus the three trace computations
"""

import os
import sys
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rich.console import Console
from rich.table import Table

from tools.matrix_tools import (
    build,
    trace_closed_form,
    trace_direct,
    trace_via_sigma_sums,
    verify_square_identity,
)
from tools.orbit_tools import enumerate_orbits

console = Console()


def run_verify(n_values: list[int], threads: int = 1) -> bool:
    """
    Run the square identity and trace checks for several n

    Args:
        n_values: Dimensions to check
        threads: Worker threads for the matrix work

    Returns:
        True when every check passed
    """

    print(f"\n{'='*60}")
    print(f"RSBF IDENTITY CHECKS - n in {n_values}")
    print(f"{'='*60}\n")

    table = Table(title="A^2 = 2^n I and Tr(A)")
    for column in ("n", "g", "square", "trace", "via shifts", "closed form"):
        table.add_column(column, justify="right")

    all_ok = True
    for n in n_values:
        matrix = build(enumerate_orbits(n), threads=threads)
        verdict = verify_square_identity(matrix, threads=threads)
        traces = (trace_direct(matrix), trace_via_sigma_sums(n), trace_closed_form(n))
        ok = verdict.holds and len(set(traces)) == 1
        all_ok = all_ok and ok
        table.add_row(
            str(n), str(matrix.g),
            "[green]ok[/green]" if verdict.holds else "[red]FAILED[/red]",
            *(str(t) for t in traces),
        )

    console.print(table)
    print(f"\n{'='*60}\n")
    return all_ok


if __name__ == "__main__":
    upper = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    sys.exit(0 if run_verify(list(range(1, upper + 1))) else 1)
