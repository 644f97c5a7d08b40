import math
import threading

from typing import List


class BinomialTable:
    """Triangular memo of binomial coefficients, grown on demand.

    Rows are replaced wholesale on growth, so readers never see a
    half-built row and need no lock.
    """

    # Rows past this are computed directly instead of memoized.
    max_rows = 1024

    def __init__(self) -> None:
        self._rows: List[List[int]] = [[1]]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._rows)

    def get(self, n: int, c: int) -> int:
        """C(n, c) for n, c >= 0; zero when c > n."""
        if c > n:
            return 0
        if n >= self.max_rows:
            return math.comb(n, c)
        rows = self._rows
        if n >= len(rows):
            rows = self._grow(n)
        return rows[n][c]

    def _grow(self, n: int) -> List[List[int]]:
        with self._lock:
            rows = list(self._rows)
            while len(rows) <= n:
                prev = rows[-1]
                row = [1]
                row.extend(prev[i - 1] + prev[i] for i in range(1, len(prev)))
                row.append(1)
                rows.append(row)
            self._rows = rows
            return rows

    def clear(self) -> None:
        with self._lock:
            self._rows = [[1]]


table = BinomialTable()
