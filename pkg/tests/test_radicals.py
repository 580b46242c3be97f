import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from schurweyl.radicals import RadicalSum, SignedRadical, squarefree_split


small_rationals = st.fractions(
    min_value=Fraction(0), max_value=Fraction(100), max_denominator=60
)


def test_squarefree_split_golden():
    assert squarefree_split(0) == (0, 1)
    assert squarefree_split(1) == (1, 1)
    assert squarefree_split(6) == (1, 6)
    assert squarefree_split(36) == (6, 1)
    assert squarefree_split(72) == (6, 2)
    assert squarefree_split(510510) == (1, 510510)


@given(st.integers(min_value=0, max_value=10**6))
def test_squarefree_split_property(m):
    a, d = squarefree_split(m)
    assert a * a * d == m or (m == 0 and (a, d) == (0, 1))
    if m > 0:
        assert squarefree_split(d) == (1, d)


def test_mul_radical():
    a = SignedRadical(1, Fraction(1, 2))
    b = SignedRadical(-1, Fraction(1, 3))
    assert a * b == SignedRadical(-1, Fraction(1, 6))
    assert a * SignedRadical.zero() == SignedRadical.zero()
    c = SignedRadical(-1, Fraction(2))
    assert c * c == SignedRadical(1, Fraction(4))


def test_signed_radical_validation():
    with pytest.raises(ValueError):
        SignedRadical(2, Fraction(1))
    with pytest.raises(ValueError):
        SignedRadical(1, Fraction(-1))
    with pytest.raises(ValueError):
        SignedRadical(0, Fraction(1))
    with pytest.raises(ValueError):
        SignedRadical(1, Fraction(0))


def test_canonicalize_golden():
    assert SignedRadical(-1, Fraction(1, 6)).canonical() == RadicalSum({6: Fraction(-1, 6)})
    assert SignedRadical(1, Fraction(9, 4)).canonical() == RadicalSum({1: Fraction(3, 2)})
    # sqrt(1/72) = sqrt(2)/12, checked numerically below
    c = SignedRadical(1, Fraction(1, 72)).canonical()
    assert c == RadicalSum({2: Fraction(1, 12)})
    assert math.isclose(c.to_float(), math.sqrt(1 / 72), rel_tol=1e-14)


def test_add_golden():
    assert RadicalSum({6: Fraction(1, 6)}) + RadicalSum({6: Fraction(-1, 6)}) == RadicalSum.zero()
    assert RadicalSum({1: Fraction(1, 24)}) + RadicalSum({1: Fraction(3, 8)}) == RadicalSum({1: Fraction(5, 12)})
    both = RadicalSum({2: 1}) + RadicalSum({3: 1})
    assert both.terms == {2: Fraction(1), 3: Fraction(1)}


def test_to_float_golden():
    assert math.isclose(RadicalSum({1: Fraction(5, 12)}).to_float(), 5 / 12)
    assert math.isclose(RadicalSum({2: Fraction(1, 2)}).to_float(), 0.7071067811865476)
    assert RadicalSum.zero().to_float() == 0.0


def test_canonical_form_unique():
    a = RadicalSum({2: Fraction(1, 2), 3: Fraction(1, 3)})
    b = RadicalSum([(3, Fraction(1, 3)), (2, Fraction(1, 4)), (2, Fraction(1, 4))])
    assert a == b
    assert hash(a) == hash(b)
    assert a != RadicalSum({2: Fraction(1, 2)})


def test_rejects_non_squarefree_keys():
    with pytest.raises(ValueError):
        RadicalSum({4: Fraction(1)})
    with pytest.raises(ValueError):
        RadicalSum({0: Fraction(1)})


def test_sum_multiplication():
    root2 = RadicalSum({2: 1})
    root3 = RadicalSum({3: 1})
    s = root2 + root3
    assert s * s == RadicalSum({1: 5, 6: 2})
    assert root2 * root2 == RadicalSum({1: 2})
    assert s * RadicalSum.zero() == RadicalSum.zero()
    assert s * Fraction(1, 2) == RadicalSum({2: Fraction(1, 2), 3: Fraction(1, 2)})


def test_mixed_equality_and_str():
    assert RadicalSum({1: Fraction(5, 12)}) == Fraction(5, 12)
    assert RadicalSum.from_rational(3) == 3
    assert str(RadicalSum.zero()) == "0"
    assert str(RadicalSum({1: Fraction(5, 12)})) == "5/12"
    assert str(RadicalSum({6: Fraction(-1, 6)})) == "-1/6*sqrt(6)"
    assert str(RadicalSum({1: Fraction(1, 2), 6: Fraction(-1, 3)})) == "1/2 - 1/3*sqrt(6)"


def test_triples_serialization():
    s = RadicalSum({6: Fraction(-1, 6), 1: Fraction(5, 12)})
    assert s.triples() == [[5, 12, 1], [-1, 6, 6]]
    assert RadicalSum.from_triples(s.triples()) == s
    assert RadicalSum({1: Fraction(5, 12)}).triples() == [[5, 12, 1]]


@given(
    sign=st.sampled_from([-1, 1]),
    radicand=small_rationals.filter(lambda q: q > 0),
)
def test_canonical_matches_float(sign, radicand):
    x = SignedRadical(sign, radicand)
    direct = sign * math.sqrt(radicand)
    via_canonical = x.canonical().to_float()
    assert math.isclose(direct, via_canonical, rel_tol=1e-12)


radical_sums = st.lists(
    st.tuples(st.sampled_from([1, 2, 3, 5, 6, 7, 10]), st.fractions(max_denominator=20)),
    max_size=4,
).map(RadicalSum)


@given(a=radical_sums, b=radical_sums, c=radical_sums)
def test_add_associative_commutative(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + RadicalSum.zero() == a


@given(a=radical_sums, b=radical_sums)
def test_mul_matches_float(a, b):
    assert math.isclose((a * b).to_float(), a.to_float() * b.to_float(), rel_tol=1e-9, abs_tol=1e-9)
