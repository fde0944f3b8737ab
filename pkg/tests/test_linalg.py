from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqcm.linalg import (
    GF2,
    QQ,
    ChainComplex,
    FieldSpec,
    SignMatrix,
    StructuralError,
    cohomology_dims,
    rank,
    rank_rows,
)


def fraction_rank(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    rk = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        for i in range(len(a)):
            if i != rk and a[i][c]:
                f = a[i][c] / a[rk][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rk])]
        rk += 1
    return rk


sign_rows = st.integers(1, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-1, 1), min_size=c, max_size=c),
                       min_size=1, max_size=7))
int_rows = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c),
                       min_size=1, max_size=6))


@pytest.mark.parametrize("c", [0, 2, 3, 5, 65521])
def test_field_accepts_zero_and_primes(c):
    assert FieldSpec(c).characteristic == c


@pytest.mark.parametrize("c", [1, 4, 9, -3, 65537 * 2])
def test_field_rejects_composites(c):
    with pytest.raises(ValueError):
        FieldSpec(c)


def test_field_names():
    assert str(QQ) == "QQ" and str(GF2) == "GF(2)"


def test_sign_matrix_validates_entries_and_shape():
    with pytest.raises(ValueError):
        SignMatrix.from_rows([[2, 0]])
    with pytest.raises(ValueError):
        SignMatrix(2, 2, ((1, 0),))


def test_rank_depends_on_characteristic():
    # boundary of a triangle plus its filling: the 2x2 all-ones pattern
    m = SignMatrix.from_rows([[1, 1], [1, -1]])
    assert rank(m, QQ) == 2
    assert rank(m, GF2) == 1
    assert rank(m, FieldSpec(3)) == 2


def test_empty_and_zero_matrices():
    assert rank_rows([], 0) == 0
    assert rank(SignMatrix.zeros(3, 4)) == 0


@given(int_rows)
def test_bareiss_matches_fraction_elimination(rows):
    assert rank_rows(rows, 0) == fraction_rank(rows)


@given(sign_rows, st.randoms(use_true_random=False))
def test_rank_invariant_under_permutations(rows, rnd):
    perm_rows = rows[:]
    rnd.shuffle(perm_rows)
    cols = list(range(len(rows[0])))
    rnd.shuffle(cols)
    permuted = [[r[c] for c in cols] for r in perm_rows]
    for c in (0, 2, 3, 5):
        assert rank_rows(rows, c) == rank_rows(permuted, c)


@given(sign_rows)
def test_prime_field_rank_never_exceeds_rational(rows):
    q = rank_rows(rows, 0)
    for p in (2, 3, 5):
        assert rank_rows(rows, p) <= q
    # a large prime cannot divide the small minors of a 7x7 sign matrix
    assert rank_rows(rows, 65521) == q


@given(sign_rows)
def test_gf2_packed_matches_generic_elimination(rows):
    from seqcm.linalg import _rank_mod_p

    assert rank_rows(rows, 2) == _rank_mod_p(rows, 2)


def _interval_complex():
    # cochains of a 1-simplex relative to nothing: C^0 = K^2 -> C^1 = K
    d0 = SignMatrix.from_rows([[-1, 1]])
    return ChainComplex((2, 1), (d0,))


def test_cohomology_of_small_complex():
    assert cohomology_dims(_interval_complex()) == [1, 0]


def test_shape_mismatch_rejected():
    with pytest.raises(ValueError):
        ChainComplex((2, 2), (SignMatrix.from_rows([[1, 1]]),))


def test_non_complex_raises_structural_error():
    d0 = SignMatrix.from_rows([[1], [1]])
    d1 = SignMatrix.from_rows([[1, 1]])
    with pytest.raises(StructuralError):
        cohomology_dims(ChainComplex((1, 2, 1), (d0, d1)))


@settings(max_examples=50)
@given(st.integers(0, 5), st.sampled_from([0, 2, 3]))
def test_euler_characteristic_of_koszul_type_complex(n, c):
    # the full Čech-type complex on n letters is a cone for n >= 1
    from seqcm.cech import complex_on_family

    universe = (1 << n) - 1
    family = range(1 << n)
    cx = complex_on_family(family, universe)
    h = cohomology_dims(cx, FieldSpec(c))
    assert sum((-1) ** i * x for i, x in enumerate(h)) == cx.euler_characteristic()
    assert h == ([1] if n == 0 else [0] * (n + 1))
