"""
Bent Search - exhaustive and sampled search for bent RSBFs

Every candidate is scored at orbit level: its Walsh spectrum is the row vector
of orbit signs times nA, and it is bent when every value is +-2^(n/2).

Usage:
    from bent_search import BentSearch, SearchMode

    search = BentSearch(n=4)
    report = search.run(SearchMode.exhaustive())
    report.bent_count        # 8
    report.bent[0]           # "000110"

Work is split into chunks of function indices; chunks run on a thread pool
and are merged in index order, so reports never depend on the worker count.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Any, Iterator, Optional

import numpy as np
from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn

from config.settings import (
    DEFAULT_SEED,
    MAX_SAMPLE_N,
    MAX_SEARCH_ORBITS,
    SEARCH_CHUNK_SIZE,
)
from tools.bitvec_tools import validate_dimension
from tools.errors import BudgetExceededError, check_budget
from tools.matrix_tools import RsbfMatrix, build
from tools.orbit_tools import count_orbits_burnside, enumerate_orbits

logger = logging.getLogger(__name__)

ODD_N_REASON = "no bent functions for odd n"


@dataclass(frozen=True)
class SearchMode:
    """exhaustive, or sampled(count, seed)"""

    kind: str
    count: int = 0
    seed: Optional[int] = None

    @classmethod
    def exhaustive(cls) -> "SearchMode":
        return cls("exhaustive")

    @classmethod
    def sampled(cls, count: int, seed: int = DEFAULT_SEED) -> "SearchMode":
        if count < 0:
            raise ValueError(f"sample count must be non-negative, got {count}")
        return cls("sampled", count, seed)

    @property
    def is_exhaustive(self) -> bool:
        return self.kind == "exhaustive"


@dataclass
class SearchReport:
    """
    Outcome of a bent search.

    bent holds orbit-value bitstrings: ascending and each exactly once in
    exhaustive mode, in sample order (duplicates kept) in sampled mode.
    """

    n: int
    mode: SearchMode
    functions_tested: int
    bent: list[str] = field(default_factory=list)
    reason: Optional[str] = None

    @property
    def bent_count(self) -> int:
        return len(self.bent)

    def to_dict(self) -> dict[str, Any]:
        report: dict[str, Any] = {"n": self.n, "mode": self.mode.kind}
        if not self.mode.is_exhaustive:
            report["seed"] = self.mode.seed
        report["functions_tested"] = self.functions_tested
        report["bent_count"] = self.bent_count
        report["bent"] = list(self.bent)
        if self.reason:
            report["reason"] = self.reason
        return report


class BentSearch:
    """
    Bent-function search over the RSBFs of one dimension.

    The orbit table and matrix are built on first use, so an odd-n exhaustive
    request returns immediately.
    """

    def __init__(
        self,
        n: int,
        threads: int = 1,
        max_orbits: Optional[int] = None,
        max_n: Optional[int] = None,
        chunk_size: int = SEARCH_CHUNK_SIZE,
        show_progress: bool = False,
    ):
        """
        Args:
            n: Dimension
            threads: Worker threads over chunks
            max_orbits: Exhaustive budget on g_n (default: MAX_SEARCH_ORBITS)
            max_n: Sampled budget on n (default: MAX_SAMPLE_N)
            chunk_size: Functions per work unit
            show_progress: Spinner on stderr while searching
        """
        self.n = validate_dimension(n)
        self.g = count_orbits_burnside(self.n)
        self.threads = max(1, threads)
        self.max_orbits = MAX_SEARCH_ORBITS if max_orbits is None else max_orbits
        self.max_n = MAX_SAMPLE_N if max_n is None else max_n
        self.chunk_size = max(1, chunk_size)
        self.show_progress = show_progress
        self._matrix: Optional[RsbfMatrix] = None

    @property
    def matrix(self) -> RsbfMatrix:
        if self._matrix is None:
            self._matrix = build(enumerate_orbits(self.n), threads=self.threads)
        return self._matrix

    def run(self, mode: SearchMode) -> SearchReport:
        """
        Run the search.

        Raises:
            BudgetExceededError: 2^g_n too large (exhaustive) or n too large (sampled)
        """
        if mode.is_exhaustive:
            work = self._exhaustive
        else:
            work = lambda: self._sampled(mode)
        if not self.show_progress:
            return work()

        console = Console(stderr=True)
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=console,
            transient=True,
        ) as progress:
            task = progress.add_task(f"[cyan]Searching bent RSBFs, n={self.n} ({mode.kind})...", total=None)
            report = work()
            progress.update(task, description="[green]Search complete")
        return report

    def _bent_mask(self, bits: np.ndarray, entries: Optional[np.ndarray]) -> np.ndarray:
        """Row mask of bent functions for a (count, g) array of orbit bits"""
        if entries is None or self.n % 2:
            return np.zeros(bits.shape[0], dtype=bool)
        spectra = (1 - 2 * bits.astype(np.int64)) @ entries
        return np.all(np.abs(spectra) == 1 << (self.n // 2), axis=1)

    def _map_chunks(self, worker, chunks: list) -> list:
        if self.threads <= 1 or len(chunks) <= 1:
            return [worker(chunk) for chunk in chunks]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(worker, chunks))

    def _exhaustive(self) -> SearchReport:
        mode = SearchMode.exhaustive()
        if self.n % 2:
            logger.info(f"Exhaustive search skipped for odd n={self.n}")
            return SearchReport(self.n, mode, 0, [], ODD_N_REASON)
        if self.g > self.max_orbits:
            message = f"exhaustive bent search for n={self.n} needs 2^{self.g} functions, budget g<={self.max_orbits}"
            logger.warning(message)
            raise BudgetExceededError(message)

        total = 1 << self.g
        shifts = np.arange(self.g - 1, -1, -1, dtype=np.int64)
        matrix = self.matrix

        def score(bounds: tuple[int, int]) -> np.ndarray:
            start, stop = bounds
            indices = np.arange(start, stop, dtype=np.int64)
            bits = (indices[:, None] >> shifts[None, :]) & 1
            return indices[self._bent_mask(bits, matrix.entries)]

        chunks = [(s, min(s + self.chunk_size, total)) for s in range(0, total, self.chunk_size)]
        found = self._map_chunks(score, chunks)
        bent = [format(int(u), f"0{self.g}b") for part in found for u in part]
        logger.info(f"Exhaustive search n={self.n}: {len(bent)} bent of {total} ({matrix.g} orbits)")
        return SearchReport(self.n, mode, total, bent)

    def _sample_chunks(self, mode: SearchMode) -> Iterator[np.ndarray]:
        """Draw uint8 orbit bits one chunk at a time, in sample order"""
        rng = np.random.default_rng(mode.seed)
        remaining = mode.count
        while remaining > 0:
            size = min(remaining, self.chunk_size)
            yield rng.integers(0, 2, size=(size, self.g), dtype=np.uint8)
            remaining -= size

    def _sampled(self, mode: SearchMode) -> SearchReport:
        check_budget("sampled bent search", self.n, self.max_n)
        entries = None if self.n % 2 else self.matrix.entries

        def score(bits: np.ndarray) -> list[str]:
            return ["".join(map(str, row)) for row in bits[self._bent_mask(bits, entries)].tolist()]

        # at most one window of chunks is held in memory at a time
        chunks = self._sample_chunks(mode)
        bent: list[str] = []
        while window := list(islice(chunks, self.threads)):
            for part in self._map_chunks(score, window):
                bent.extend(part)
        logger.info(f"Sampled search n={self.n} seed={mode.seed}: {len(bent)} bent of {mode.count}")
        return SearchReport(self.n, mode, mode.count, bent)


def search_bent(n: int, mode: SearchMode, threads: int = 1, **kwargs) -> SearchReport:
    """Convenience wrapper: BentSearch(n, threads, **kwargs).run(mode)"""
    return BentSearch(n, threads=threads, **kwargs).run(mode)
