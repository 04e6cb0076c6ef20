import itertools
import random
from collections import Counter

import pytest

from rankmetric.counting import Space, sphere_volume
from rankmetric.field import Basis, default_field
from rankmetric.gabidulin import GabidulinCode
from rankmetric.limits import GuardExceeded
from rankmetric.rank import (RankVector, enumerate_span, min_rank_distance,
                             rank, rank_distance, to_matrix, transpose_vector,
                             vector_from_matrix)

F4 = default_field(2, 2)
F8 = default_field(2, 3)
F16 = default_field(2, 4)


def test_to_matrix_zero():
    v = RankVector.zero(F4, 3)
    assert to_matrix(v) == ((0, 0, 0), (0, 0, 0))


def test_to_matrix_basis_columns():
    b = F4.polynomial_basis()
    v = RankVector(b.elements)  # (beta_1, beta_2)
    assert to_matrix(v) == ((1, 0), (0, 1))


def test_matrix_roundtrip_random():
    rng = random.Random(2)
    basis = F16.polynomial_basis()
    for _ in range(100):
        v = RankVector.random(F16, 3, rng)
        assert vector_from_matrix(to_matrix(v), basis) == v


def test_rank_zero_iff_zero_vector():
    assert rank(RankVector.zero(F16, 4)) == 0
    rng = random.Random(3)
    for _ in range(20):
        v = RankVector.random(F16, 4, rng)
        if v:
            assert rank(v) >= 1


def test_rank_of_proportional_columns():
    rng = random.Random(4)
    for _ in range(20):
        g = F16.random_element(rng)
        if not g:
            continue
        # lambda in F_q: proportional (or zero) columns leave rank 1
        for lam in range(2):
            assert rank(RankVector([g, F16.scalar(lam) * g])) == 1


def _full_space_census(field, n):
    census = Counter()
    for ids in itertools.product(range(field.order), repeat=n):
        census[rank(RankVector.from_indices(field, ids))] += 1
    return census


@pytest.mark.parametrize("q,m,n", [(2, 2, 2), (2, 3, 3), (3, 2, 2)])
def test_rank_census_equals_sphere_volumes(q, m, n):
    census = _full_space_census(default_field(q, m), n)
    sp = Space(q, m, n)
    expected = {t: sphere_volume(sp, t) for t in range(min(m, n) + 1)}
    assert dict(census) == expected


def test_rank_census_f4_squared_values():
    census = _full_space_census(F4, 2)
    assert (census[0], census[1], census[2]) == (1, 9, 6)


def test_rank_upper_bounds():
    rng = random.Random(5)
    for _ in range(50):
        v = RankVector.random(F8, 5, rng)
        r = rank(v)
        assert r <= min(3, 5)
        assert r <= sum(1 for e in v if e)


def test_rank_basis_invariance():
    rng = random.Random(6)
    els = None
    while els is None:
        try:
            cand = [F16.random_element(rng) for _ in range(4)]
            Basis(cand)
            els = cand
        except ValueError:
            continue
    basis = Basis(els)
    for _ in range(30):
        ids = [rng.randrange(16) for _ in range(3)]
        v_poly = RankVector.from_indices(F16, ids)
        v_alt = RankVector.from_indices(F16, ids, basis)
        assert rank(v_poly) == rank(v_alt)


def test_rank_distance_basics():
    rng = random.Random(7)
    x = RankVector.random(F16, 4, rng)
    y = RankVector.random(F16, 4, rng)
    z = RankVector.random(F16, 4, rng)
    assert rank_distance(x, x) == 0
    assert rank_distance(x, RankVector.zero(F16, 4)) == rank(x)
    assert rank_distance(x, y) == rank_distance(y, x)
    # translation invariance
    assert rank_distance(x + z, y + z) == rank_distance(x, y)


def test_rank_distance_triangle_inequality():
    rng = random.Random(8)
    sample = [RankVector.random(F16, 4, rng) for _ in range(20)]
    d = {(i, j): rank_distance(sample[i], sample[j])
         for i in range(20) for j in range(20)}
    for i, j, k in itertools.product(range(20), repeat=3):
        assert d[i, k] <= d[i, j] + d[j, k]


def test_rank_distance_mismatched_spaces():
    with pytest.raises(ValueError):
        rank_distance(RankVector.zero(F16, 3), RankVector.zero(F16, 4))
    with pytest.raises(ValueError):
        rank_distance(RankVector.zero(F16, 3), RankVector.zero(F8, 3))


def test_transpose_zero():
    v = RankVector.zero(F16, 3)
    w = transpose_vector(v)
    assert not w and len(w) == 4 and w.field.order == 8


def test_transpose_preserves_rank():
    rng = random.Random(9)
    for _ in range(200):
        v = RankVector.random(F16, 3, rng)
        assert rank(transpose_vector(v)) == rank(v)


def test_double_transpose_matrix_roundtrip():
    rng = random.Random(10)
    for _ in range(50):
        v = RankVector.random(F16, 3, rng)
        w = transpose_vector(v)
        back = transpose_vector(w, F16.polynomial_basis())
        assert to_matrix(back) == to_matrix(v)
        # matrix view of the transpose is the transposed matrix
        mv, mw = to_matrix(v), to_matrix(w)
        assert mw == tuple(zip(*mv))


def test_transpose_is_fq_linear():
    rng = random.Random(11)
    for _ in range(20):
        x = RankVector.random(F16, 3, rng)
        y = RankVector.random(F16, 3, rng)
        assert transpose_vector(x + y) == transpose_vector(x) + transpose_vector(y)


def test_transpose_rejects_wrong_target():
    v = RankVector.zero(F16, 3)
    with pytest.raises(ValueError):
        transpose_vector(v, F16.polynomial_basis())  # degree 4 != n = 3


def test_min_rank_distance_two_words():
    rng = random.Random(12)
    x = RankVector.random(F16, 3, rng)
    assert min_rank_distance([RankVector.zero(F16, 3), x]) == rank(x)


def test_min_rank_distance_full_space_length_one():
    words = [RankVector.from_indices(F4, (i,)) for i in range(4)]
    assert min_rank_distance(words, linear=True) == 1
    assert min_rank_distance(words) == 1


def test_min_rank_distance_gabidulin_brute():
    code = GabidulinCode(RankVector(F16.polynomial_basis().elements), 2)
    words = list(code.codewords())
    assert len(words) == 256
    assert min_rank_distance(words, linear=True) == 3
    assert min_rank_distance(words) == 3  # pairwise route agrees


def test_min_rank_distance_full_list_reduces_to_basis():
    # passing the whole code is equivalent to passing an F_q-basis of it
    code = GabidulinCode(RankVector(F8.polynomial_basis().elements), 1)
    words = list(code.codewords())
    assert min_rank_distance(words, linear=True) == 3


def test_min_rank_distance_degenerate_inputs():
    with pytest.raises(ValueError):
        min_rank_distance([])
    z = RankVector.zero(F4, 2)
    with pytest.raises(ValueError):
        min_rank_distance([z, z])
    with pytest.raises(ValueError):
        min_rank_distance([z], linear=True)


def test_enumerate_span_size_and_content():
    gens = [RankVector.from_indices(F16, (1, 0, 2)),
            RankVector.from_indices(F16, (0, 1, 3))]
    span = list(enumerate_span(gens))
    assert len(span) == 4
    assert len(set(span)) == 4
    assert RankVector.zero(F16, 3) in span
    assert gens[0] + gens[1] in span


def test_enumerate_span_guard():
    f2 = default_field(2, 1)
    gens = [RankVector.from_indices(
        f2, tuple(int(i == j) for i in range(30))) for j in range(30)]
    with pytest.raises(GuardExceeded):
        list(enumerate_span(gens))


def test_span_partitioning_independence():
    # the span as a set is the same whatever generating order is used
    rng = random.Random(13)
    gens = [RankVector.random(F4, 3, rng) for _ in range(3)]
    a = set(enumerate_span(gens))
    b = set(enumerate_span(list(reversed(gens))))
    assert a == b
