"""
Standalone invocation of the eigenvalue report
Prints the multiplicities of +-2^(n/2) for a range of n from closed forms only
"""

import os
import sys
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rich.console import Console
from rich.table import Table

from tools.matrix_tools import eigen_multiplicities

console = Console()


def run_eigen(low: int = 3, high: int = 24):
    """
    Print eigenvalue multiplicities for low..high

    Args:
        low: First n (at least 3)
        high: Last n
    """

    print(f"\n{'='*60}")
    print(f"RSBF EIGENVALUES - n = {low}..{high}")
    print(f"{'='*60}\n")

    table = Table(title="Multiplicities of +2^(n/2) / -2^(n/2)")
    for column in ("n", "g", "trace", "+", "-"):
        table.add_column(column, justify="right")

    reports = [eigen_multiplicities(n) for n in range(max(3, low), high + 1)]
    for report in reports:
        table.add_row(*(str(v) for v in report.to_dict().values()))

    console.print(table)
    print(f"\n{'='*60}\n")
    return reports


if __name__ == "__main__":
    high = int(sys.argv[1]) if len(sys.argv) > 1 else 24
    run_eigen(high=high)
