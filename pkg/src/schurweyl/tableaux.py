"""Partition and tableau combinatorics.

Partitions, configurations (words over the single-node alphabet) and weight
vectors are plain integer tuples.  Standard and semistandard tableaux get
small immutable classes because they carry validation and a text format of
their own.  Everything here is pure and deterministic; enumeration orders are
fixed so downstream matrix layouts are reproducible across runs.

Text formats: tableau rows are separated by ``/`` and entries by ``,``
(``1,1,3/2`` is [[1,1,3],[2]]); partitions are comma-separated parts
(``3,1``); configurations are comma-separated letters (``1,3,2,1``).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import factorial

Partition = tuple[int, ...]
Configuration = tuple[int, ...]
WeightVector = tuple[int, ...]


@dataclass(frozen=True)
class SystemShape:
    """Chain geometry: single-node dimension n = 2s+1 and node count N."""

    n: int
    N: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ValueError(f"single-node dimension n must be a positive integer, got {self.n!r}")
        if not (isinstance(self.N, int) and self.N >= 1):
            raise ValueError(f"node count N must be a positive integer, got {self.N!r}")

    @property
    def dim(self) -> int:
        return self.n ** self.N


# ---------------------------------------------------------------------------
# partitions


def is_partition(parts) -> bool:
    parts = tuple(parts)
    if not all(isinstance(p, int) and p >= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def strip_zeros(lam) -> Partition:
    lam = tuple(lam)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def pad(lam, n: int) -> Partition:
    """Zero-pad a partition to length n; rejects more than n nonzero parts."""
    lam = tuple(int(p) for p in lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    core = strip_zeros(lam)
    if len(core) > n:
        raise ValueError(f"partition {core} has more than {n} parts")
    return core + (0,) * (n - len(core))


def conjugate(lam) -> Partition:
    lam = strip_zeros(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def parse_partition(text: str) -> Partition:
    parts = []
    for i, tok in enumerate(text.strip().split(","), 1):
        tok = tok.strip()
        if not tok.isdigit():
            raise ValueError(f"partition {text!r}: part {i}: expected a nonnegative integer, got {tok!r}")
        parts.append(int(tok))
    lam = tuple(parts)
    if not is_partition(lam):
        raise ValueError(f"partition {text!r}: parts must be weakly decreasing")
    return lam


def format_partition(lam) -> str:
    core = strip_zeros(lam)
    return ",".join(str(p) for p in core) if core else "0"


def enumerate_partitions(N: int, n: int) -> list[Partition]:
    """All partitions of N into at most n parts, descending lexicographic.

    Results are zero-padded to length n (the canonical storage form).
    """
    if N < 1 or n < 1:
        raise ValueError("N and n must be positive integers")
    out: list[Partition] = []

    def extend(prefix: list[int], remaining: int, max_part: int):
        if remaining == 0:
            out.append(tuple(prefix) + (0,) * (n - len(prefix)))
            return
        slots = n - len(prefix)
        if slots == 0:
            return
        smallest = -(-remaining // slots)  # next part must leave room for the rest
        for part in range(min(max_part, remaining), smallest - 1, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], N, N)
    return out


# ---------------------------------------------------------------------------
# tableaux


def _parse_rows(text: str, kind: str) -> tuple[tuple[int, ...], ...]:
    rows = []
    for r, chunk in enumerate(text.strip().split("/"), 1):
        row = []
        for c, tok in enumerate(chunk.split(","), 1):
            tok = tok.strip()
            if not tok.isdigit() or int(tok) < 1:
                raise ValueError(f"{kind} {text!r}: row {r}, entry {c}: expected a positive integer, got {tok!r}")
            row.append(int(tok))
        rows.append(tuple(row))
    return tuple(rows)


def _format_rows(rows) -> str:
    return "/".join(",".join(str(v) for v in row) for row in rows)


def _check_shape(rows, kind: str) -> Partition:
    shape = tuple(len(row) for row in rows)
    if any(s == 0 for s in shape) or not is_partition(shape):
        raise ValueError(f"{kind} rows must have weakly decreasing positive lengths, got shape {shape}")
    return shape


@dataclass(frozen=True)
class StandardTableau:
    """Bijective filling of a Young diagram with 1..N, strictly increasing
    along rows and down columns."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = _check_shape(rows, "standard tableau") if rows else ()
        N = sum(shape)
        seen = sorted(v for row in rows for v in row)
        if seen != list(range(1, N + 1)):
            raise ValueError(f"standard tableau must contain 1..{N} exactly once, got {seen}")
        for r, row in enumerate(rows):
            for c in range(len(row)):
                if c + 1 < len(row) and row[c + 1] <= row[c]:
                    raise ValueError(f"standard tableau: row {r + 1} not strictly increasing")
                if r > 0 and rows[r - 1][c] >= row[c]:
                    raise ValueError(f"standard tableau: column {c + 1} not strictly increasing")

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @classmethod
    def from_string(cls, text: str) -> "StandardTableau":
        return cls(_parse_rows(text, "standard tableau"))

    def to_string(self) -> str:
        return _format_rows(self.rows)


@dataclass(frozen=True)
class WeylTableau:
    """Filling over the letter alphabet: rows weakly increase, columns
    strictly increase."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if rows:
            _check_shape(rows, "Weyl tableau")
        for r, row in enumerate(rows):
            for c in range(len(row)):
                if row[c] < 1:
                    raise ValueError("Weyl tableau entries must be positive letters")
                if c + 1 < len(row) and row[c + 1] < row[c]:
                    raise ValueError(f"Weyl tableau: row {r + 1} not weakly increasing")
                if r > 0 and rows[r - 1][c] >= row[c]:
                    raise ValueError(f"Weyl tableau: column {c + 1} not strictly increasing")

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def max_letter(self) -> int:
        return max((row[-1] for row in self.rows), default=0)

    @classmethod
    def from_string(cls, text: str) -> "WeylTableau":
        return cls(_parse_rows(text, "Weyl tableau"))

    def to_string(self) -> str:
        return _format_rows(self.rows)

    def restricted_shape(self, letter: int) -> Partition:
        """Shape of the subtableau holding entries <= letter."""
        return strip_zeros(tuple(bisect_right(row, letter) for row in self.rows))


# ---------------------------------------------------------------------------
# enumeration


def enumerate_syt(lam) -> list[StandardTableau]:
    """All standard fillings of lam, ordered lexicographically by the
    sequence (row of 1, row of 2, ...)."""
    lam = strip_zeros(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    N = sum(lam)
    rows: list[list[int]] = [[] for _ in lam]
    counts = [0] * len(lam)
    out: list[StandardTableau] = []

    def place(letter: int):
        if letter > N:
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for r in range(len(lam)):
            if counts[r] < lam[r] and (r == 0 or counts[r] < counts[r - 1]):
                rows[r].append(letter)
                counts[r] += 1
                place(letter + 1)
                rows[r].pop()
                counts[r] -= 1

    place(1)
    return out


def _gt_sort_key(t: WeylTableau, n: int) -> tuple[int, ...]:
    # flatten the associated triangular pattern, top row first
    key: list[int] = []
    for j in range(n, 0, -1):
        shape_j = tuple(bisect_right(row, j) for row in t.rows[:j])
        key.extend(shape_j + (0,) * (j - len(shape_j)))
    return tuple(key)


def enumerate_sswt(lam, n: int) -> list[WeylTableau]:
    """All semistandard fillings of lam over 1..n, ordered by ascending
    lexicographic order of the associated triangular pattern (top row
    first)."""
    lam_core = strip_zeros(pad(lam, n))  # pad() rejects > n parts
    if not lam_core:
        return [WeylTableau(())]
    rows = [[0] * part for part in lam_core]
    cells = [(r, c) for r, part in enumerate(lam_core) for c in range(part)]
    out: list[WeylTableau] = []

    def fill(idx: int):
        if idx == len(cells):
            out.append(WeylTableau(tuple(tuple(r) for r in rows)))
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, n + 1):
            rows[r][c] = v
            fill(idx + 1)
        rows[r][c] = 0

    fill(0)
    out.sort(key=lambda t: _gt_sort_key(t, n))
    return out


# ---------------------------------------------------------------------------
# dimensions


def dim_symmetric(lam) -> int:
    """Number of standard tableaux of shape lam, via the hook-length formula."""
    lam = strip_zeros(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    N = sum(lam)
    if N == 0:
        return 1
    conj = conjugate(lam)
    hooks = 1
    for r, part in enumerate(lam):
        for c in range(part):
            hooks *= (part - c) + (conj[c] - r) - 1
    return factorial(N) // hooks


def dim_unitary(lam, n: int) -> int:
    """Number of semistandard fillings over 1..n, via the Weyl dimension
    formula."""
    lam_p = pad(lam, n)
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam_p[i] - lam_p[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# chains, RSK, weights


def chain_from_syt(y: StandardTableau) -> tuple[Partition, ...]:
    """Growth sequence encoded by a standard tableau: the j-th entry is the
    shape of the subtableau holding letters 1..j."""
    row_of = {}
    for r, row in enumerate(y.rows):
        for v in row:
            row_of[v] = r
    counts = [0] * max(len(y.rows), 1)
    chain = []
    for j in range(1, y.size + 1):
        counts[row_of[j]] += 1
        chain.append(strip_zeros(tuple(counts)))
    return tuple(chain)


def rsk(word) -> tuple[WeylTableau, StandardTableau]:
    """Row-insertion RSK: returns the (insertion, recording) tableau pair."""
    word = tuple(int(v) for v in word)
    if any(v < 1 for v in word):
        raise ValueError("word letters must be positive")
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(word, 1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            row = p_rows[r]
            idx = bisect_right(row, x)
            if idx == len(row):
                row.append(x)
                q_rows[r].append(step)
                break
            row[idx], x = x, row[idx]
            r += 1
    P = WeylTableau(tuple(tuple(row) for row in p_rows))
    Q = StandardTableau(tuple(tuple(row) for row in q_rows))
    return P, Q


def content(f, n: int) -> WeightVector:
    """Letter multiplicities of a configuration."""
    counts = [0] * n
    for v in f:
        if not 1 <= v <= n:
            raise ValueError(f"letter {v} outside 1..{n}")
        counts[v - 1] += 1
    return tuple(counts)


def weight(t: WeylTableau, n: int) -> WeightVector:
    """Letter multiplicities of a Weyl tableau."""
    return content([v for row in t.rows for v in row], n)


def validate_configuration(f, n: int, N: int | None = None) -> Configuration:
    f = tuple(int(v) for v in f)
    if N is not None and len(f) != N:
        raise ValueError(f"configuration has {len(f)} letters, expected {N}")
    content(f, n)  # raises on out-of-range letters
    return f


def parse_configuration(text: str, n: int, N: int | None = None) -> Configuration:
    letters = []
    for i, tok in enumerate(text.strip().split(","), 1):
        tok = tok.strip()
        if not tok.isdigit() or int(tok) < 1:
            raise ValueError(f"configuration {text!r}: letter {i}: expected a positive integer, got {tok!r}")
        letters.append(int(tok))
    return validate_configuration(tuple(letters), n, N)


def format_configuration(f) -> str:
    return ",".join(str(v) for v in f)
