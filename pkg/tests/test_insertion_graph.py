from fractions import Fraction

import pytest

from schurweyl.insertion_graph import (
    amplitude,
    amplitude_from_paths,
    build_graph,
    count_paths,
    iter_paths,
    path_count,
)
from schurweyl.radicals import RadicalSum
from schurweyl.tableaux import (
    StandardTableau,
    WeylTableau,
    content,
    enumerate_partitions,
    enumerate_sswt,
    enumerate_syt,
    strip_zeros,
    weight,
)

F4 = (1, 3, 2, 1)
T4 = WeylTableau(((1, 1, 3), (2,)))
Y4 = StandardTableau(((1, 2, 4), (3,)))


def test_reference_element_graph_shape():
    g = build_graph(F4, Y4, T4, 3)
    assert g.vertex_count == 6
    assert [len(level) for level in g.levels] == [1, 1, 1, 2, 1]
    assert g.levels[-1] == [g.target]
    assert g.target.to_string() == "3,1,0/2,1/2"
    assert count_paths(g) == 2


def test_reference_element_amplitude():
    amp = amplitude(F4, (3, 1), T4, Y4, 3)
    assert amp == RadicalSum({1: Fraction(5, 12)})
    assert amplitude(F4, (3, 1), T4, Y4, 3, by_paths=True) == amp


def test_reference_element_path_products():
    g = build_graph(F4, Y4, T4, 3)
    contributions = set()
    for path in iter_paths(g):
        prod = path[0].value
        for e in path[1:]:
            prod = prod * e.value
        contributions.add(prod.canonical())
    assert contributions == {
        RadicalSum({1: Fraction(1, 24)}),
        RadicalSum({1: Fraction(3, 8)}),
    }


def test_trivial_single_edge():
    t = WeylTableau(((1,),))
    y = StandardTableau(((1,),))
    g = build_graph((1,), y, t, 2)
    assert [len(level) for level in g.levels] == [1, 1]
    edges = g.all_edges()
    assert len(edges) == 1
    assert edges[0].value.canonical() == RadicalSum.one()
    assert amplitude((1,), (1,), t, y, 2) == RadicalSum.one()


def test_weight_mismatch_gives_empty_final_level():
    t = WeylTableau(((1,), (2,)))
    y = StandardTableau(((1,), (2,)))
    g = build_graph((1, 1), y, t, 2)
    assert g.levels[-1] == []
    assert amplitude((1, 1), (1, 1), t, y, 2) == RadicalSum.zero()
    assert path_count((1, 1), (1, 1), t, y, 2) == 0


def test_singlet_amplitudes():
    t = WeylTableau(((1,), (2,)))
    y = StandardTableau(((1,), (2,)))
    assert amplitude((2, 1), (1, 1), t, y, 2) == RadicalSum({2: Fraction(-1, 2)})
    assert amplitude((1, 2), (1, 1), t, y, 2) == RadicalSum({2: Fraction(1, 2)})


def test_path_count_golden():
    assert path_count(F4, (3, 1), T4, Y4, 3) == 2
    assert path_count((1,), (1,), WeylTableau(((1,),)), StandardTableau(((1,),)), 2) == 1


def test_amplitude_rejects_shape_mismatch():
    with pytest.raises(ValueError):
        amplitude(F4, (2, 2), T4, Y4, 3)
    with pytest.raises(ValueError):
        amplitude((1, 3, 2), (3, 1), T4, Y4, 3)
    with pytest.raises(ValueError):
        amplitude(F4, (3, 1), T4, StandardTableau(((1, 2), (3, 4))), 3)


def test_level_invariants():
    g = build_graph(F4, Y4, T4, 3)
    for j, level in enumerate(g.levels):
        tops = {p.top for p in level}
        weights = {p.weight() for p in level}
        assert len(tops) <= 1
        assert len(weights) <= 1
        if j and level:
            assert weights == {content(F4[:j], 3)}


def test_amplitude_independent_of_branch_order():
    g = build_graph(F4, Y4, T4, 3)
    assert amplitude_from_paths(g) == amplitude_from_paths(g, reverse=True)


def _all_elements(n, N):
    for lam_p in enumerate_partitions(N, n):
        lam = strip_zeros(lam_p)
        for t in enumerate_sswt(lam, n):
            for y in enumerate_syt(lam):
                yield lam, t, y


def test_dp_matches_path_enumeration_small():
    from itertools import product

    for n, N in [(2, 3), (3, 2)]:
        for f in product(range(1, n + 1), repeat=N):
            for lam, t, y in _all_elements(n, N):
                dp = amplitude(f, lam, t, y, n)
                literal = amplitude(f, lam, t, y, n, by_paths=True)
                assert dp == literal


def test_every_path_product_is_single_radical():
    g = build_graph(F4, Y4, T4, 3)
    for path in iter_paths(g):
        prod = path[0].value
        for e in path[1:]:
            prod = prod * e.value
        assert len(prod.canonical().terms) <= 1
