import pytest
from conftest import MOEBIUS_PRIMES, RP2_PRIMES, numbered
from hypothesis import given
from hypothesis import strategies as st

from seqcm.combinatorics import (
    DecompositionError,
    GeneralMonomialIdeal,
    RingMismatchError,
    RingSpec,
    SquarefreeIdeal,
    associated_primes,
    complex_facets,
    dim_of_quotient,
    ideal_sum,
    intersect,
    intersect_primes,
    minimal_primes,
    minimal_transversals,
    minimalize,
    squarefree_antichains,
)
from seqcm.corpus import DEDEKIND

R22 = RingSpec(2, 2)


def ideals(nvars=5):
    ring = RingSpec(2, nvars - 2)
    masks = st.integers(1, (1 << nvars) - 1)
    return st.lists(masks, min_size=1, max_size=6).map(
        lambda gs: SquarefreeIdeal(ring, frozenset(gs)))


def test_variable_names_round_trip():
    ring = RingSpec(3, 2)
    assert [ring.var_name(i) for i in range(5)] == ["x1", "x2", "x3", "y1", "y2"]
    assert ring.var_index("y2") == 4
    for bad in ("x4", "y0", "z1", "x01", "y"):
        with pytest.raises(KeyError):
            ring.var_index(bad)


def test_torsion_masks():
    ring = RingSpec(2, 3)
    assert ring.torsion("P") == 0b00011
    assert ring.torsion("Q") == 0b11100
    assert ring.torsion("m") == 0b11111
    with pytest.raises(ValueError):
        ring.torsion("R")


def test_minimalize_drops_multiples():
    assert minimalize([0b011, 0b001, 0b110, 0b111]) == frozenset({0b001, 0b110})


def test_generator_outside_ring_rejected():
    with pytest.raises(RingMismatchError):
        SquarefreeIdeal(RingSpec(1, 1), frozenset({0b100}))


def test_printing():
    I = SquarefreeIdeal.from_names(R22, [["x1", "x2"], ["y1"]])
    assert str(I) == "(y1, x1*x2)"
    assert str(SquarefreeIdeal.zero(R22)) == "(0)"


def test_minimal_primes_of_projective_plane(rp2):
    assert set(minimal_primes(rp2)) == set(numbered(RP2_PRIMES).values())


def test_minimal_primes_of_moebius(moebius):
    assert set(minimal_primes(moebius)) == set(numbered(MOEBIUS_PRIMES).values())


def test_minimal_primes_reject_unit_and_zero():
    for I in (SquarefreeIdeal.unit(R22), SquarefreeIdeal.zero(R22)):
        with pytest.raises(DecompositionError):
            minimal_primes(I)


@given(ideals())
def test_radical_round_trip(I):
    assert intersect_primes(I.ring, minimal_primes(I)) == I


@given(ideals(), ideals())
def test_intersection_membership(I, J):
    K = intersect([I, J])
    for u in range(1 << I.ring.nvars):
        assert K.contains(u) == (I.contains(u) and J.contains(u))
    S = ideal_sum(I, J)
    for u in range(1 << I.ring.nvars):
        assert S.contains(u) == (I.contains(u) or J.contains(u))


@given(st.lists(st.integers(1, 31), min_size=1, max_size=6))
def test_transversals_against_brute_force(edges):
    got = minimal_transversals(edges)
    hits = [t for t in range(32) if all(t & e for e in edges)]
    want = {t for t in hits if not any(h != t and h & t == h for h in hits)}
    assert got == want


def test_facets_and_dimension(rp2):
    assert len(complex_facets(rp2)) == 10
    assert dim_of_quotient(rp2) == 3
    assert dim_of_quotient(SquarefreeIdeal.unit(R22)) == -1
    assert dim_of_quotient(SquarefreeIdeal.zero(R22)) == 4


@pytest.mark.parametrize("n", range(5))
def test_antichain_counts_are_dedekind_numbers(n):
    assert sum(1 for _ in squarefree_antichains(n)) == DEDEKIND[n]


def test_general_ideal_minimalizes_and_detects_squarefree():
    I = GeneralMonomialIdeal(R22, frozenset({(2, 0, 0, 0), (1, 0, 0, 0), (0, 1, 1, 0)}))
    assert I.gens == frozenset({(1, 0, 0, 0), (0, 1, 1, 0)})
    assert I.is_squarefree
    assert I.to_squarefree() == SquarefreeIdeal.from_names(R22, [["x1"], ["x2", "y1"]])


def test_associated_primes_include_embedded(squares):
    got = {str(p) for p in associated_primes(squares)}
    assert got == {"(x1, y1)", "(x1, y1, y2)", "(x1, x2, y1)", "(x1, x2, y1, y2)"}


@given(ideals(4))
def test_associated_primes_of_radical_are_minimal(I):
    assert associated_primes(I.to_general()) == minimal_primes(I)


def test_associated_primes_of_power_of_prime():
    I = GeneralMonomialIdeal(R22, frozenset({(2, 0, 0, 0), (1, 1, 0, 0), (0, 2, 0, 0)}))
    assert [str(p) for p in associated_primes(I)] == ["(x1, x2)"]
