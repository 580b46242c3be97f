import pytest
from hypothesis import given, strategies as st

from schurweyl.gt_patterns import GTPattern, ShiftVector, from_weyl, insert_letter, to_weyl
from schurweyl.tableaux import WeylTableau, enumerate_partitions, enumerate_sswt, strip_zeros


def test_from_weyl_golden():
    t = WeylTableau(((1, 1, 3), (2,)))
    assert from_weyl(t, 3).to_string() == "3,1,0/2,1/2"
    assert from_weyl(WeylTableau(((1,),)), 1).to_string() == "1"
    assert from_weyl(WeylTableau(((1,), (2,))), 2).to_string() == "1,1/1"


def test_from_weyl_rejects_large_letters():
    with pytest.raises(ValueError):
        from_weyl(WeylTableau(((1, 3),)), 2)


def test_to_weyl_golden():
    assert to_weyl(GTPattern.from_string("3,1,0/2,1/2")).rows == ((1, 1, 3), (2,))
    assert to_weyl(GTPattern.from_string("1,0/0")).rows == ((2,),)
    assert to_weyl(GTPattern.zero(3)).rows == ()


def test_round_trip_all_small_sswt():
    for n in range(1, 4):
        for N in range(1, 5):
            for lam in enumerate_partitions(N, n):
                for t in enumerate_sswt(strip_zeros(lam), n):
                    assert to_weyl(from_weyl(t, n)) == t


def test_betweenness_validation():
    # both middle-level patterns of the four-node reference element are valid
    GTPattern.from_string("2,1,0/2,0/1")
    GTPattern.from_string("2,1,0/1,1/1")
    with pytest.raises(ValueError):
        GTPattern(((2,), (1, 0)))  # lower row exceeds upper
    with pytest.raises(ValueError):
        GTPattern(((0,), (0, 1)))  # row not within the triangle order
    with pytest.raises(ValueError):
        GTPattern(((0,), (0, 0), (0,)))  # wrong row length
    with pytest.raises(ValueError):
        GTPattern(((-1,),))


def test_partial_hook():
    p = GTPattern.from_string("2,0,0/1,0/1")
    assert p.partial_hook(1, 3) == 4
    assert GTPattern.zero(2).partial_hook(1, 2) == 1
    assert p.partial_hook(3, 3) == p.entry(3, 3)
    with pytest.raises(IndexError):
        p.partial_hook(3, 2)


def test_pattern_weight():
    assert GTPattern.from_string("3,1,0/2,1/2").weight() == (2, 1, 1)
    assert GTPattern.zero(3).weight() == (0, 0, 0)
    assert GTPattern.from_string("1,0/0").weight() == (0, 1)


def test_pattern_text_round_trip():
    for text in ("3,1,0/2,1/2", "2,0,0/1,0/1", "1", "1,1/1"):
        assert GTPattern.from_string(text).to_string() == text
    with pytest.raises(ValueError, match="row 2, entry 1"):
        GTPattern.from_string("1,0/x")


def test_insert_letter_golden_branching():
    p = GTPattern.from_string("2,0,0/1,0/1")
    results = insert_letter(p, 2, (2, 1, 0))
    assert [(pat.to_string(), sh.taus) for pat, sh in results] == [
        ("2,1,0/2,0/1", (1, 2)),
        ("2,1,0/1,1/1", (2, 2)),
    ]


def test_insert_letter_golden_first_step():
    results = insert_letter(GTPattern.zero(3), 1, (1,))
    assert [(pat.to_string(), sh.taus) for pat, sh in results] == [("1,0,0/1,0/1", (1, 1, 1))]


def test_insert_letter_golden_two_rows():
    results = insert_letter(GTPattern.from_string("1,0/1"), 1, (2,))
    assert [(pat.to_string(), sh.taus) for pat, sh in results] == [("2,0/2", (1, 1))]


def test_insert_letter_empty_is_legal():
    # letter 1 can never land in the second diagram row
    p = GTPattern.from_string("1,0/1")
    assert insert_letter(p, 1, (1, 1)) == []


def test_insert_letter_errors():
    p = GTPattern.zero(3)
    with pytest.raises(ValueError):
        insert_letter(p, 0, (1,))
    with pytest.raises(ValueError):
        insert_letter(p, 4, (1,))
    with pytest.raises(ValueError):
        insert_letter(p, 1, (2,))  # target differs by two boxes
    with pytest.raises(ValueError):
        insert_letter(p, 1, (0,))  # target equals the top row


def test_shift_vector_validation():
    ShiftVector(2, (1, 2))
    with pytest.raises(ValueError):
        ShiftVector(2, (3, 2))  # tau_2 = 3 > 2
    with pytest.raises(ValueError):
        ShiftVector(0, (1,))
    with pytest.raises(ValueError):
        ShiftVector(1, ())


@st.composite
def patterns_and_letters(draw):
    n = draw(st.integers(1, 3))
    N = draw(st.integers(1, 4))
    lam = draw(st.sampled_from(enumerate_partitions(N, n)))
    ts = enumerate_sswt(strip_zeros(lam), n)
    t = draw(st.sampled_from(ts))
    k = draw(st.integers(1, n))
    return from_weyl(t, n), k


def _brute_insertions(p, k, target):
    """Oracle: try every combination of one +1 per row k..n and keep the
    patterns that validate."""
    from itertools import product as iproduct

    n = p.n
    hits = []
    for taus in iproduct(*(range(1, j + 1) for j in range(k, n + 1))):
        rows = list(p.rows)
        for offset, tau in enumerate(taus):
            j = k + offset
            row = list(rows[j - 1])
            row[tau - 1] += 1
            rows[j - 1] = tuple(row)
        if rows[-1] != tuple(target):
            continue
        try:
            hits.append((GTPattern(tuple(rows)), taus))
        except ValueError:
            pass
    return sorted(hits, key=lambda item: item[1])


@given(patterns_and_letters())
def test_insert_letter_matches_brute_force(case):
    p, k = case
    n = p.n
    for pos in range(n):
        target = list(p.top)
        target[pos] += 1
        if any(target[i] < target[i + 1] for i in range(n - 1)):
            continue
        got = [(pattern, shift.taus) for pattern, shift in insert_letter(p, k, tuple(target))]
        assert got == _brute_insertions(p, k, tuple(target))


@given(patterns_and_letters())
def test_insert_letter_properties(case):
    p, k = case
    n = p.n
    top = p.top
    # try every single-box growth of the top row
    for pos in range(n):
        target = list(top)
        target[pos] += 1
        if any(target[i] < target[i + 1] for i in range(n - 1)):
            continue  # not a partition
        results = insert_letter(p, k, tuple(target))
        taus_seen = set()
        for pattern, shift in results:
            assert shift.letter == k
            assert shift.taus not in taus_seen
            taus_seen.add(shift.taus)
            before = p.weight()
            after = pattern.weight()
            gained = [a - b for a, b in zip(after, before)]
            assert gained[k - 1] == 1
            assert all(g == 0 for i, g in enumerate(gained) if i != k - 1)
            # constructor already re-validated betweenness
            assert pattern.top == tuple(target)
        assert [sh.taus for _, sh in results] == sorted(sh.taus for _, sh in results)
