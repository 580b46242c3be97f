"""Matrix elements of fundamental tensor operators between adjacent patterns.

Adding one node in state k shifts a pattern by +1 at positions
(tau_k, ..., tau_n).  The matrix element of that elementary step is a signed
square root of a rational number built entirely from partial hooks
p(i, j) = m[j][i] + j - i of the pattern *before* the shift:

* sign: product over j = k+1..n of sgn(tau_{j-1} - tau_j), with sgn(0) = +1;
* for each j = k+1..n a magnitude factor

      sqrt| prod_{i != tau_{j-1}, i<j} (p(tau_j, j) - p(i, j-1))
           * prod_{i != tau_j, i<=j} (p(tau_{j-1}, j-1) - p(i, j) + 1)
         / prod_{i != tau_j, i<=j} (p(tau_j, j) - p(i, j))
           * prod_{i != tau_{j-1}, i<j} (p(tau_{j-1}, j-1) - p(i, j-1) + 1) |

* a closing single-row factor

      sqrt| prod_{i<k} (p(tau_k, k) - p(i, k-1))
         / prod_{i != tau_k, i<=k} (p(tau_k, k) - p(i, k)) |

Empty products are 1: the row-pair block disappears for k = n and the closing
factor disappears for k = 1, so the one-letter one-row case is exactly +1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .gt_patterns import GTPattern, ShiftVector
from .radicals import SignedRadical


def fundamental_element(initial: GTPattern, shift: ShiftVector) -> SignedRadical:
    """Amplitude of one insertion step, evaluated on the initial pattern.

    The caller guarantees that applying the shift to ``initial`` yields a
    valid pattern (the insertion rule enumerates only such shifts).  A zero
    numerator is a legitimate zero amplitude; a zero denominator on a valid
    input is a bug and raises ArithmeticError.
    """
    return _element(initial, shift.letter, shift.taus)


@lru_cache(maxsize=None)
def _element(m: GTPattern, k: int, taus: tuple[int, ...]) -> SignedRadical:
    n = m.n
    if not 1 <= k <= n:
        raise ValueError(f"letter {k} outside 1..{n}")
    if len(taus) != n - k + 1:
        raise ValueError(f"need one increment position per row {k}..{n}, got {len(taus)}")

    def tau(j: int) -> int:
        return taus[j - k]

    def hook(i: int, j: int) -> int:
        return m.rows[j - 1][i - 1] + j - i

    sign = 1
    num = 1
    den = 1
    for j in range(k + 1, n + 1):
        tj = tau(j)
        tp = tau(j - 1)
        if tp < tj:
            sign = -sign  # sgn(0) counts as +1
        for i in range(1, j):
            if i != tp:
                num *= hook(tj, j) - hook(i, j - 1)
                den *= hook(tp, j - 1) - hook(i, j - 1) + 1
        for i in range(1, j + 1):
            if i != tj:
                num *= hook(tp, j - 1) - hook(i, j) + 1
                den *= hook(tj, j) - hook(i, j)
    if k > 1:
        tk = tau(k)
        for i in range(1, k):
            num *= hook(tk, k) - hook(i, k - 1)
        for i in range(1, k + 1):
            if i != tk:
                den *= hook(tk, k) - hook(i, k)

    if den == 0:
        raise ArithmeticError(f"vanishing denominator for shift {taus} of letter {k} on {m.to_string()}")
    if num == 0:
        return SignedRadical.zero()
    return SignedRadical(sign, Fraction(abs(num), abs(den)))
