"""Assembly of the full transform matrix and its verification suite.

Rows are configurations in ascending lexicographic order; columns are
(lambda, t, y) triads ordered by descending-lex lambda, then the canonical
semistandard order of t, then the canonical standard order of y.  Entries are
exact radical sums; floating-point views are derived on demand for the checks
that need complex phases.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import Sequence

import numpy as np

from .gt_patterns import GTPattern, from_weyl
from .insertion_graph import final_amplitudes
from .radicals import RadicalSum, SignedRadical
from .tableaux import (
    Configuration,
    Partition,
    StandardTableau,
    SystemShape,
    WeylTableau,
    chain_from_syt,
    content,
    dim_symmetric,
    dim_unitary,
    enumerate_partitions,
    enumerate_sswt,
    enumerate_syt,
    format_configuration,
    format_partition,
    strip_zeros,
    weight,
)

DEFAULT_SIZE_CAP = 4096


class SizeCapExceeded(RuntimeError):
    """Raised when an assembly would exceed the configured row cap."""

    def __init__(self, dim: int, cap: int):
        super().__init__(f"matrix would have {dim} rows, exceeding the size cap of {cap}")
        self.dim = dim
        self.cap = cap


@dataclass(frozen=True)
class ColumnKey:
    """One irreducible-basis label (lambda, t, y)."""

    lam: Partition
    t: WeylTableau
    y: StandardTableau

    def __post_init__(self):
        lam = strip_zeros(self.lam)
        object.__setattr__(self, "lam", lam)
        if self.t.shape != lam or self.y.shape != lam:
            raise ValueError(f"column shapes disagree: lambda={lam}, t={self.t.shape}, y={self.y.shape}")

    def label(self) -> str:
        return f"{format_partition(self.lam)}|{self.t.to_string()}|{self.y.to_string()}"


@dataclass(frozen=True)
class LambdaBlock:
    """Contiguous column range carried by one partition sector."""

    lam: Partition
    start: int
    n_t: int
    n_y: int

    @property
    def stop(self) -> int:
        return self.start + self.n_t * self.n_y


class SchurWeylMatrix:
    """The assembled transform: exact entries plus cached derived views."""

    def __init__(self, shape: SystemShape, rows: list[Configuration], columns: list[ColumnKey],
                 entries: dict[tuple[int, int], RadicalSum], blocks: list[LambdaBlock]):
        self.shape = shape
        self.rows = rows
        self.columns = columns
        self.entries = entries
        self.blocks = blocks
        self._dense: np.ndarray | None = None
        self._supports: list[dict[int, RadicalSum]] | None = None
        self.row_index = {f: i for i, f in enumerate(rows)}

    @property
    def dim(self) -> int:
        return self.shape.dim

    def entry(self, row: int, col: int) -> RadicalSum:
        return self.entries.get((row, col), RadicalSum.zero())

    def row_contents(self) -> list[tuple[int, ...]]:
        return [content(f, self.shape.n) for f in self.rows]

    def column_weights(self) -> list[tuple[int, ...]]:
        return [weight(key.t, self.shape.n) for key in self.columns]

    def to_array(self) -> np.ndarray:
        if self._dense is None:
            dense = np.zeros((self.dim, self.dim))
            for (r, c), v in self.entries.items():
                dense[r, c] = v.to_float()
            self._dense = dense
        return self._dense

    def column_supports(self) -> list[dict[int, RadicalSum]]:
        if self._supports is None:
            supports: list[dict[int, RadicalSum]] = [{} for _ in self.columns]
            for (r, c), v in self.entries.items():
                supports[c][r] = v
            self._supports = supports
        return self._supports

    # -- serialization -----------------------------------------------------

    def to_json_doc(self) -> dict:
        entries = sorted((r, c, v.triples()) for (r, c), v in self.entries.items())
        return {
            "shape": {"n": self.shape.n, "N": self.shape.N},
            "rows": [format_configuration(f) for f in self.rows],
            "columns": [
                {"lambda": format_partition(k.lam), "t": k.t.to_string(), "y": k.y.to_string()}
                for k in self.columns
            ],
            "entries": [[r, c, triples] for r, c, triples in entries],
        }

    def to_csv_text(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["config"] + [k.label() for k in self.columns])
        dense = self.to_array()
        for i, f in enumerate(self.rows):
            writer.writerow([format_configuration(f)] + [repr(float(v)) for v in dense[i]])
        return buf.getvalue()


def assemble(shape: SystemShape, size_cap: int | None = DEFAULT_SIZE_CAP) -> SchurWeylMatrix:
    """Build the full transform matrix for a chain shape.

    One dynamic-programming pass per (configuration, growth chain) pair fills
    every t-column sharing that chain at once; the letter-count selection rule
    prunes configurations that cannot reach any column of the block.
    """
    n, N = shape.n, shape.N
    if size_cap is not None and shape.dim > size_cap:
        raise SizeCapExceeded(shape.dim, size_cap)

    rows: list[Configuration] = [tuple(f) for f in iter_product(range(1, n + 1), repeat=N)]
    row_contents = [content(f, n) for f in rows]

    columns: list[ColumnKey] = []
    blocks: list[LambdaBlock] = []
    entries: dict[tuple[int, int], RadicalSum] = {}

    for lam_p in enumerate_partitions(N, n):
        lam = strip_zeros(lam_p)
        ts = enumerate_sswt(lam, n)
        ys = enumerate_syt(lam)
        base = len(columns)
        blocks.append(LambdaBlock(lam, base, len(ts), len(ys)))
        for t in ts:
            for y in ys:
                columns.append(ColumnKey(lam, t, y))
        # group this block's target patterns by weight for the selection rule
        wanted: dict[tuple[int, ...], list[tuple[int, GTPattern]]] = {}
        for ti, t in enumerate(ts):
            wanted.setdefault(weight(t, n), []).append((ti, from_weyl(t, n)))
        for yi, y in enumerate(ys):
            chain = chain_from_syt(y)
            for ri, f in enumerate(rows):
                targets = wanted.get(row_contents[ri])
                if not targets:
                    continue
                final = final_amplitudes(f, chain, n)
                if not final:
                    continue
                for ti, pattern in targets:
                    amp = final.get(pattern)
                    if amp is not None and not amp.is_zero():
                        entries[(ri, base + ti * len(ys) + yi)] = amp

    if len(columns) != shape.dim:
        raise AssertionError(f"column census {len(columns)} != {shape.dim}")
    return SchurWeylMatrix(shape, rows, columns, entries, blocks)


# ---------------------------------------------------------------------------
# applying the transform


def _as_exact_pair(x) -> tuple[RadicalSum, RadicalSum]:
    if isinstance(x, tuple) and len(x) == 2:
        re, im = x
    else:
        re, im = x, 0
    def coerce(v):
        if isinstance(v, RadicalSum):
            return v
        if isinstance(v, SignedRadical):
            return v.canonical()
        return RadicalSum.from_rational(Fraction(v))
    return coerce(re), coerce(im)


def apply_forward(matrix: SchurWeylMatrix, state, mode: str = "float"):
    """Coefficients of a product-basis state in the irreducible basis (M† v).

    ``float`` mode takes and returns complex numpy vectors; ``exact`` mode
    takes a sequence of rationals or (re, im) pairs and returns a list of
    (RadicalSum, RadicalSum) pairs.
    """
    if mode == "float":
        v = np.asarray(state, dtype=complex).reshape(-1)
        if v.shape[0] != matrix.dim:
            raise ValueError(f"state has dimension {v.shape[0]}, expected {matrix.dim}")
        return matrix.to_array().T @ v
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    pairs = [_as_exact_pair(x) for x in state]
    if len(pairs) != matrix.dim:
        raise ValueError(f"state has dimension {len(pairs)}, expected {matrix.dim}")
    out = []
    for support in matrix.column_supports():
        re = RadicalSum.zero()
        im = RadicalSum.zero()
        for r, m in support.items():
            re = re + m * pairs[r][0]
            im = im + m * pairs[r][1]
        out.append((re, im))
    return out


def apply_inverse(matrix: SchurWeylMatrix, coeffs, mode: str = "float"):
    """Expand irreducible-basis coefficients back over configurations (M w)."""
    if mode == "float":
        w = np.asarray(coeffs, dtype=complex).reshape(-1)
        if w.shape[0] != matrix.dim:
            raise ValueError(f"state has dimension {w.shape[0]}, expected {matrix.dim}")
        return matrix.to_array() @ w
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    pairs = [_as_exact_pair(x) for x in coeffs]
    if len(pairs) != matrix.dim:
        raise ValueError(f"state has dimension {len(pairs)}, expected {matrix.dim}")
    re_out = [RadicalSum.zero() for _ in range(matrix.dim)]
    im_out = [RadicalSum.zero() for _ in range(matrix.dim)]
    for (r, c), m in matrix.entries.items():
        re_out[r] = re_out[r] + m * pairs[c][0]
        im_out[r] = im_out[r] + m * pairs[c][1]
    return list(zip(re_out, im_out))


# ---------------------------------------------------------------------------
# checks


@dataclass
class UnitarityReport:
    mode: str
    tol: float
    max_offdiag: float
    max_diag_dev: float
    passed: bool

    def as_dict(self) -> dict:
        return {"name": "unitarity", "mode": self.mode, "tol": self.tol,
                "max_offdiag": self.max_offdiag, "max_diag_dev": self.max_diag_dev,
                "passed": self.passed}


def check_unitarity(matrix: SchurWeylMatrix, mode: str = "exact", tol: float = 1e-12) -> UnitarityReport:
    """Gram matrix of the columns: must be the identity.

    Exact mode computes every inner product in radical arithmetic and demands
    literal zero/one; float mode bounds the numpy residual by ``tol``.
    Columns whose tableau weights differ have disjoint row support, so their
    inner product is identically zero and is skipped.
    """
    if mode == "float":
        dense = matrix.to_array()
        gram = dense.T @ dense
        off = gram - np.diag(np.diag(gram))
        max_off = float(np.max(np.abs(off))) if matrix.dim else 0.0
        max_diag = float(np.max(np.abs(np.diag(gram) - 1.0)))
        return UnitarityReport("float", tol, max_off, max_diag, max_off <= tol and max_diag <= tol)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    supports = matrix.column_supports()
    groups: dict[tuple[int, ...], list[int]] = {}
    for c, w in enumerate(matrix.column_weights()):
        groups.setdefault(w, []).append(c)
    one = RadicalSum.one()
    max_off = 0.0
    max_diag = 0.0
    ok = True
    for cols in groups.values():
        for a_pos, ca in enumerate(cols):
            sa = supports[ca]
            for cb in cols[a_pos:]:
                sb = supports[cb]
                if len(sb) < len(sa):
                    sa_, sb_ = sb, sa
                else:
                    sa_, sb_ = sa, sb
                dot = RadicalSum.zero()
                for r, v in sa_.items():
                    other = sb_.get(r)
                    if other is not None:
                        dot = dot + v * other
                dev = dot - one if ca == cb else dot
                if not dev.is_zero():
                    ok = False
                    mag = abs(dev.to_float())
                    if ca == cb:
                        max_diag = max(max_diag, mag)
                    else:
                        max_off = max(max_off, mag)
    return UnitarityReport("exact", 0.0, max_off, max_diag, ok)


@dataclass
class SelectionRuleReport:
    violations: int
    max_violation: float
    passed: bool

    def as_dict(self) -> dict:
        return {"name": "selection_rule", "violations": self.violations,
                "max_violation": self.max_violation, "passed": self.passed}


def check_selection_rule(matrix: SchurWeylMatrix) -> SelectionRuleReport:
    """Every stored entry must pair a configuration with a tableau of the
    same letter counts; anything else must be exactly zero."""
    contents = matrix.row_contents()
    weights = matrix.column_weights()
    violations = 0
    worst = 0.0
    for (r, c), v in matrix.entries.items():
        if contents[r] != weights[c] and not v.is_zero():
            violations += 1
            worst = max(worst, abs(v.to_float()))
    return SelectionRuleReport(violations, worst, violations == 0)


@dataclass
class CensusReport:
    rows: list[tuple[Partition, int, int, int]]
    total: int
    expected: int
    passed: bool

    def as_dict(self) -> dict:
        return {"name": "census",
                "rows": [[format_partition(lam), ds, du, prod] for lam, ds, du, prod in self.rows],
                "total": self.total, "expected": self.expected, "passed": self.passed}


def census(shape: SystemShape) -> CensusReport:
    """Dimension bookkeeping: sum over sectors of dim_symmetric * dim_unitary
    must exhaust the product space."""
    rows = []
    total = 0
    for lam_p in enumerate_partitions(shape.N, shape.n):
        lam = strip_zeros(lam_p)
        ds = dim_symmetric(lam)
        du = dim_unitary(lam, shape.n)
        rows.append((lam, ds, du, ds * du))
        total += ds * du
    return CensusReport(rows, total, shape.dim, total == shape.dim)


def transposition_permutation(shape: SystemShape, k: int) -> np.ndarray:
    """Row permutation swapping node slots k and k+1 on the product basis."""
    if not 1 <= k <= shape.N - 1:
        raise ValueError(f"transposition index {k} outside 1..{shape.N - 1}")
    n, N = shape.n, shape.N
    rows = list(iter_product(range(1, n + 1), repeat=N))
    index = {f: i for i, f in enumerate(rows)}
    perm = np.empty(len(rows), dtype=np.intp)
    for i, f in enumerate(rows):
        g = list(f)
        g[k - 1], g[k] = g[k], g[k - 1]
        perm[i] = index[tuple(g)]
    return perm


def conjugated_transposition(matrix: SchurWeylMatrix, k: int) -> np.ndarray:
    """C_k = M† P_k M for the adjacent transposition (k, k+1)."""
    dense = matrix.to_array()
    perm = transposition_permutation(matrix.shape, k)
    return dense.T @ dense[perm]


@dataclass
class PermutationBlockReport:
    k: int
    tol: float
    max_cross_block: float
    max_t_mixing: float
    max_block_spread: float
    max_orthogonality: float
    max_involution: float
    blocks: dict[Partition, np.ndarray]
    passed: bool

    def as_dict(self) -> dict:
        return {"name": "permutation_blocks", "k": self.k, "tol": self.tol,
                "max_cross_block": self.max_cross_block, "max_t_mixing": self.max_t_mixing,
                "max_block_spread": self.max_block_spread,
                "max_orthogonality": self.max_orthogonality,
                "max_involution": self.max_involution, "passed": self.passed}


def check_permutation_blocks(matrix: SchurWeylMatrix, k: int, tol: float = 1e-10) -> PermutationBlockReport:
    """Structure of a conjugated adjacent transposition.

    The conjugate must vanish between different lambda sectors; inside a
    sector it must act as identity on the t index tensored with one y-by-y
    matrix B that is the same for every t, orthogonal, and an involution.
    """
    C = conjugated_transposition(matrix, k)
    mask = np.ones_like(C, dtype=bool)
    max_t_mixing = 0.0
    max_spread = 0.0
    max_orth = 0.0
    max_invol = 0.0
    blocks: dict[Partition, np.ndarray] = {}
    for blk in matrix.blocks:
        sl = slice(blk.start, blk.stop)
        mask[sl, sl] = False
        sector = C[sl, sl].reshape(blk.n_t, blk.n_y, blk.n_t, blk.n_y)
        B = sector[0, :, 0, :].copy()
        blocks[blk.lam] = B
        for ti in range(blk.n_t):
            for tj in range(blk.n_t):
                piece = sector[ti, :, tj, :]
                if ti == tj:
                    max_spread = max(max_spread, float(np.max(np.abs(piece - B))))
                else:
                    max_t_mixing = max(max_t_mixing, float(np.max(np.abs(piece))))
        eye = np.eye(blk.n_y)
        max_orth = max(max_orth, float(np.max(np.abs(B @ B.T - eye))))
        max_invol = max(max_invol, float(np.max(np.abs(B @ B - eye))))
    max_cross = float(np.max(np.abs(C[mask]))) if mask.any() else 0.0
    passed = max(max_cross, max_t_mixing, max_spread, max_orth, max_invol) <= tol
    return PermutationBlockReport(k, tol, max_cross, max_t_mixing, max_spread,
                                  max_orth, max_invol, blocks, passed)


@dataclass
class CoxeterReport:
    tol: float
    max_involution: float
    max_braid: float
    passed: bool

    def as_dict(self) -> dict:
        return {"name": "coxeter", "tol": self.tol, "max_involution": self.max_involution,
                "max_braid": self.max_braid, "passed": self.passed}


def check_coxeter(matrix: SchurWeylMatrix, tol: float = 1e-9) -> CoxeterReport:
    """Coxeter relations of the conjugated adjacent transpositions."""
    N = matrix.shape.N
    Cs = [conjugated_transposition(matrix, k) for k in range(1, N)]
    eye = np.eye(matrix.dim)
    max_invol = 0.0
    max_braid = 0.0
    for C in Cs:
        max_invol = max(max_invol, float(np.max(np.abs(C @ C - eye))))
    for a, b in zip(Cs, Cs[1:]):
        lhs = a @ b @ a
        rhs = b @ a @ b
        max_braid = max(max_braid, float(np.max(np.abs(lhs - rhs))))
    passed = max_invol <= tol and max_braid <= tol
    return CoxeterReport(tol, max_invol, max_braid, passed)


@dataclass
class TorusReport:
    tol: float
    max_offdiag: float
    max_phase_dev: float
    passed: bool

    def as_dict(self) -> dict:
        return {"name": "torus", "tol": self.tol, "max_offdiag": self.max_offdiag,
                "max_phase_dev": self.max_phase_dev, "passed": self.passed}


def check_torus_action(matrix: SchurWeylMatrix, thetas: Sequence[float], tol: float = 1e-10) -> TorusReport:
    """Conjugated diagonal rotation: must be diagonal with phases determined
    by the tableau weights."""
    thetas = np.asarray(thetas, dtype=float)
    if thetas.shape != (matrix.shape.n,):
        raise ValueError(f"need {matrix.shape.n} angles, got {thetas.shape}")
    dense = matrix.to_array()
    row_phase = np.array([math.fsum(c * th for c, th in zip(content_f, thetas))
                          for content_f in matrix.row_contents()])
    D = np.exp(1j * row_phase)
    C = dense.T @ (D[:, None] * dense)
    expected = np.exp(1j * np.array([math.fsum(w * th for w, th in zip(wt, thetas))
                                     for wt in matrix.column_weights()]))
    off = C - np.diag(np.diag(C))
    max_off = float(np.max(np.abs(off)))
    max_phase = float(np.max(np.abs(np.diag(C) - expected)))
    return TorusReport(tol, max_off, max_phase, max_off <= tol and max_phase <= tol)
