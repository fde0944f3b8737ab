import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqcm.combinatorics import DecompositionError, RingSpec, SquarefreeIdeal
from seqcm.homology import (
    SimplicialComplex,
    depth_dim_oracle,
    reduced_homology_dims,
    stanley_reisner_complex,
)
from seqcm.linalg import GF2, QQ, FieldSpec

HOLLOW_TRIANGLE = SimplicialComplex((0b011, 0b101, 0b110))


def test_hollow_triangle():
    assert reduced_homology_dims(HOLLOW_TRIANGLE, QQ) == [0, 0, 1]


@pytest.mark.parametrize("k", range(1, 6))
def test_simplex_is_acyclic(k):
    assert not any(reduced_homology_dims(SimplicialComplex(((1 << k) - 1,)), QQ))


def test_void_and_irrelevant_complexes():
    assert reduced_homology_dims(SimplicialComplex(()), QQ) == []
    assert reduced_homology_dims(SimplicialComplex((0,)), QQ) == [1]


def test_projective_plane_torsion_shows_only_in_char_two(rp2):
    cx = stanley_reisner_complex(rp2)
    assert cx.f_vector() == [1, 6, 15, 10]
    assert reduced_homology_dims(cx, QQ) == [0, 0, 0, 0]
    assert reduced_homology_dims(cx, GF2) == [0, 0, 1, 1]
    assert reduced_homology_dims(cx, FieldSpec(3)) == [0, 0, 0, 0]


@pytest.mark.parametrize("char, expected", [(0, (3, 3)), (2, (2, 3)), (3, (3, 3))])
def test_projective_plane_depth(rp2, char, expected):
    assert depth_dim_oracle(rp2, FieldSpec(char)) == expected


def test_moebius_depth(moebius):
    assert depth_dim_oracle(moebius) == (2, 3)


def test_zero_ideal_is_the_polynomial_ring():
    R = RingSpec(2, 3)
    assert depth_dim_oracle(SquarefreeIdeal.zero(R)) == (5, 5)


def test_unit_ideal_rejected():
    with pytest.raises(DecompositionError):
        depth_dim_oracle(SquarefreeIdeal.unit(RingSpec(1, 1)))


def test_link_removes_the_face():
    cx = SimplicialComplex((0b0111, 0b1100))
    assert cx.link(0b0100).facets == (0b0011, 0b1000)


@settings(max_examples=60)
@given(st.lists(st.integers(1, 63), min_size=1, max_size=6), st.sampled_from([0, 2, 3]))
def test_euler_characteristic_matches_face_counts(facets, c):
    cx = SimplicialComplex(tuple(facets))
    h = reduced_homology_dims(cx, FieldSpec(c))
    f = cx.f_vector()
    assert sum((-1) ** k * x for k, x in enumerate(h)) == sum((-1) ** k * x for k, x in enumerate(f))
