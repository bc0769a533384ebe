"""
Standalone invocation of the bent search
Exhaustive for small even n, seeded sampling otherwise
"""

import os
import sys
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rich.console import Console
from rich.panel import Panel

from bent_search import BentSearch, SearchMode
from tools.orbit_tools import count_orbits_burnside
from config.settings import MAX_SEARCH_ORBITS

console = Console()


def run_bent_search(n: int = 6, samples: int = 100000, seed: int = 0, threads: int = 4):
    """
    Run Bent Search standalone

    Args:
        n: Dimension (default: 6)
        samples: Sample count when exhaustive search is over budget
        seed: Sampling seed
        threads: Worker threads
    """

    print(f"\n{'='*60}")
    print(f"BENT RSBF SEARCH - n={n}")
    print(f"{'='*60}\n")

    if count_orbits_burnside(n) <= MAX_SEARCH_ORBITS:
        mode = SearchMode.exhaustive()
    else:
        mode = SearchMode.sampled(samples, seed)

    report = BentSearch(n, threads=threads, show_progress=True).run(mode)
    lines = [f"tested: {report.functions_tested}", f"bent: {report.bent_count}"]
    if report.reason:
        lines.append(report.reason)
    lines.extend(report.bent[:20])
    if report.bent_count > 20:
        lines.append(f"... {report.bent_count - 20} more")

    console.print(Panel.fit("\n".join(lines), title=f"[bold]{mode.kind}[/bold]", border_style="cyan"))
    print(f"\n{'='*60}\n")
    return report


if __name__ == "__main__":
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    run_bent_search(n)
