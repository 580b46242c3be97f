"""Gelfand-Tsetlin patterns: validation, the bijection with Weyl tableaux,
partial hooks, weights, and the single-letter insertion rule.

Rows are stored bottom-up: ``rows[0]`` has one entry and ``rows[n-1]`` is the
partition labelling the representation.  The text format reads top row first
(``3,1,0/2,1/2``).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache

from .tableaux import Partition, WeightVector, WeylTableau, pad


def _interlaces(upper, lower) -> bool:
    # len(upper) == len(lower) + 1; upper[i] >= lower[i] >= upper[i+1]
    return all(upper[i] >= lower[i] >= upper[i + 1] for i in range(len(lower)))


@dataclass(frozen=True)
class GTPattern:
    """Triangular array of nonnegative integers satisfying betweenness:
    each row interlaces the row above it."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("pattern needs at least one row")
        for j, row in enumerate(rows, 1):
            if len(row) != j:
                raise ValueError(f"pattern row {j} must have {j} entries, got {len(row)}")
            if any(v < 0 for v in row):
                raise ValueError(f"pattern row {j} has negative entries: {row}")
        for j in range(2, len(rows) + 1):
            if not _interlaces(rows[j - 1], rows[j - 2]):
                raise ValueError(f"betweenness violated between rows {j} and {j - 1}: {rows[j - 1]} / {rows[j - 2]}")

    @classmethod
    def zero(cls, n: int) -> "GTPattern":
        return cls(tuple((0,) * j for j in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def top(self) -> Partition:
        return self.rows[-1]

    def entry(self, i: int, j: int) -> int:
        """m[j][i] with 1-based indices, 1 <= i <= j <= n."""
        if not 1 <= i <= j <= self.n:
            raise IndexError(f"(i={i}, j={j}) outside the triangle with n={self.n}")
        return self.rows[j - 1][i - 1]

    def partial_hook(self, i: int, j: int) -> int:
        """p(i, j) = m[j][i] + j - i, the shifted entry used by the operator
        formula."""
        return self.entry(i, j) + j - i

    def weight(self) -> WeightVector:
        """Row-sum differences: how many boxes each letter contributes."""
        sums = [sum(row) for row in self.rows]
        return tuple(sums[j] - (sums[j - 1] if j else 0) for j in range(self.n))

    @classmethod
    def from_string(cls, text: str) -> "GTPattern":
        chunks = text.strip().split("/")
        rows = []
        for r, chunk in enumerate(chunks, 1):
            row = []
            for c, tok in enumerate(chunk.split(","), 1):
                tok = tok.strip()
                if not tok.isdigit():
                    raise ValueError(f"pattern {text!r}: row {r}, entry {c}: expected a nonnegative integer, got {tok!r}")
                row.append(int(tok))
            rows.append(tuple(row))
        return cls(tuple(reversed(rows)))

    def to_string(self) -> str:
        return "/".join(",".join(str(v) for v in row) for row in reversed(self.rows))


@dataclass(frozen=True)
class ShiftVector:
    """One insertion event: the inserted letter k and the increment positions
    (tau_k, ..., tau_n), one per pattern row from k upward."""

    letter: int
    taus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "taus", tuple(int(v) for v in self.taus))
        if self.letter < 1:
            raise ValueError(f"letter must be positive, got {self.letter}")
        if not self.taus:
            raise ValueError("a shift needs at least one increment position")
        for offset, tau in enumerate(self.taus):
            j = self.letter + offset
            if not 1 <= tau <= j:
                raise ValueError(f"tau_{j} = {tau} outside 1..{j}")


def from_weyl(t: WeylTableau, n: int) -> GTPattern:
    """Pattern whose j-th row is the shape of the subtableau of entries <= j."""
    if t.max_letter() > n:
        raise ValueError(f"tableau uses letter {t.max_letter()} > n = {n}")
    rows = []
    for j in range(1, n + 1):
        shape_j = tuple(bisect_right(row, j) for row in t.rows[:j])
        rows.append(shape_j + (0,) * (j - len(shape_j)))
    return GTPattern(tuple(rows))


def to_weyl(p: GTPattern) -> WeylTableau:
    """Inverse bijection: read off which letter filled each box."""
    rows: list[list[int]] = []
    for j in range(1, p.n + 1):
        cur = p.rows[j - 1]
        prev = p.rows[j - 2] if j >= 2 else ()
        for i in range(j):
            before = prev[i] if i < len(prev) else 0
            added = cur[i] - before
            if added:
                while len(rows) <= i:
                    rows.append([])
                rows[i].extend([j] * added)
    return WeylTableau(tuple(tuple(r) for r in rows if r))


@lru_cache(maxsize=None)
def _insert_letter_cached(p: GTPattern, k: int, tgt: Partition):
    n = p.n
    top = p.top
    diff = [i for i in range(n) if tgt[i] != top[i]]
    if len(diff) != 1 or tgt[diff[0]] - top[diff[0]] != 1:
        raise ValueError(f"target top row {tgt} must differ from {top} by exactly one box")
    tau_n = diff[0] + 1
    found: list[tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]] = []

    def descend(j: int, above: tuple[int, ...], new_rows_rev: list, taus_rev: list):
        # new_rows_rev collects rows n..j+1 (already final); choose row j next
        if j < k:
            if k > 1 and not _interlaces(new_rows_rev[-1], p.rows[k - 2]):
                return
            found.append((tuple(reversed(taus_rev)), tuple(reversed(new_rows_rev))))
            return
        old = p.rows[j - 1]
        for tau in range(1, j + 1):
            cand = old[: tau - 1] + (old[tau - 1] + 1,) + old[tau:]
            if _interlaces(above, cand):
                new_rows_rev.append(cand)
                taus_rev.append(tau)
                descend(j - 1, cand, new_rows_rev, taus_rev)
                new_rows_rev.pop()
                taus_rev.pop()

    descend(n - 1, tgt, [tgt], [tau_n])
    results = []
    for taus, new_rows in sorted(found):
        pattern = GTPattern(p.rows[: k - 1] + new_rows)
        results.append((pattern, ShiftVector(k, taus)))
    return tuple(results)


def insert_letter(p: GTPattern, k: int, target_top) -> list[tuple[GTPattern, ShiftVector]]:
    """All patterns reachable from p by inserting letter k.

    The insertion adds 1 at position tau_j of every row j = k..n; the new top
    row must equal ``target_top`` (which fixes tau_n) and the result must stay
    a valid pattern.  Results come in lexicographic order of
    (tau_k, ..., tau_n).  An empty list means no legal insertion exists, which
    is a legitimate zero-amplitude outcome.
    """
    if not 1 <= k <= p.n:
        raise ValueError(f"letter {k} outside 1..{p.n}")
    return list(_insert_letter_cached(p, k, pad(target_top, p.n)))
