import math
from fractions import Fraction

import pytest

from rankmetric.bounds import (CodeParams, covering_density,
                               gv_asymptotic_distance, gv_exists,
                               gv_greedy_construct, gv_on_bound,
                               mrd_code_params, perfect_code_search,
                               quasi_perfect_table, rank1_mrd_density,
                               singleton_bound, sphere_packing_holds)
from rankmetric.counting import Space, ball_volume
from rankmetric.limits import GuardExceeded
from rankmetric.rank import min_rank_distance


def test_singleton_examples():
    assert singleton_bound(Space(2, 4, 4), 3) == 256
    assert singleton_bound(Space(2, 4, 4), 1) == 2**16  # full space allowed
    assert singleton_bound(Space(2, 5, 3), 2) == 2**10  # min(5*2, 3*4) = 10


def test_singleton_out_of_range():
    with pytest.raises(ValueError):
        singleton_bound(Space(2, 4, 4), 0)
    with pytest.raises(ValueError):
        singleton_bound(Space(2, 4, 4), 5)


def test_sphere_packing_examples():
    check = sphere_packing_holds(CodeParams(Space(2, 4, 4), 256, 3))
    assert check.holds and (check.covered, check.total) == (57856, 65536)

    full = sphere_packing_holds(CodeParams(Space(2, 4, 4), 2**16, 1))
    assert full.holds and full.covered == full.total

    over = sphere_packing_holds(CodeParams(Space(2, 4, 4), 512, 3))
    assert not over.holds and over.covered == 512 * 226


@pytest.mark.parametrize("q,size", [(2, 8), (3, 6)])
def test_no_perfect_codes(q, size):
    assert perfect_code_search(q, size, size) == []


def test_perfect_search_trivial_solutions():
    found = perfect_code_search(2, 3, 3, include_trivial=True)
    assert all(cp.t == 0 for cp in found)
    small = [cp for cp in found if cp.space.m == cp.space.n == 1]
    assert any(cp.d == 1 and cp.M == 2 for cp in small)


def test_gv_exists_examples():
    sp = Space(2, 2, 2)
    assert ball_volume(sp, 1) == 10
    assert gv_exists(sp, 1, 2)       # 10 < 16
    assert not gv_exists(sp, 2, 2)   # 20 >= 16
    # d = 1: B_0 = 1
    assert gv_exists(sp, 15, 1)
    assert not gv_exists(sp, 16, 1)


def test_gv_on_bound_examples():
    sp = Space(2, 2, 2)
    assert gv_on_bound(CodeParams(sp, 2, 2))        # 10 < 16 <= 20
    assert not gv_on_bound(CodeParams(sp, 1, 2))    # 16 > 10
    assert gv_on_bound(CodeParams(sp, 16, 1))       # 15 < 16 <= 16


def test_gv_consistency_sweep():
    # gv_exists(M-1) and not gv_exists(M)  <=>  on GV at M
    for q, m, n in [(2, 2, 2), (2, 3, 2), (2, 3, 3), (3, 2, 2)]:
        sp = Space(q, m, n)
        for d in range(1, sp.max_rank + 1):
            for M in range(1, sp.size + 2):
                lhs = gv_exists(sp, M - 1, d) and not gv_exists(sp, M, d)
                rhs = gv_on_bound(CodeParams(sp, M, d))
                assert lhs == rhs


def test_gv_greedy_two_words():
    sp = Space(2, 2, 2)
    code = gv_greedy_construct(sp, 2, 2, seed=0)
    assert len(code) == 2
    assert min_rank_distance(code) >= 2


def test_gv_greedy_single_word():
    code = gv_greedy_construct(Space(2, 2, 2), 2, 1, seed=9)
    assert len(code) == 1


def test_gv_greedy_at_threshold():
    sp = Space(2, 3, 3)
    # d = 3: B_2 = 344, so (M-1) * 344 < 512 allows target_M = 2
    code = gv_greedy_construct(sp, 3, 2, seed=1)
    assert min_rank_distance(code) >= 3
    # d = 2: B_1 = 50 allows target_M = 11
    code = gv_greedy_construct(sp, 2, 11, seed=1)
    assert len(code) == 11
    assert min_rank_distance(code) >= 2


def test_gv_greedy_seed_determinism():
    sp = Space(2, 3, 3)
    a = gv_greedy_construct(sp, 2, 5, seed=42)
    b = gv_greedy_construct(sp, 2, 5, seed=42)
    c = gv_greedy_construct(sp, 2, 5, seed=43)
    assert a == b
    assert a != c  # different seed explores a different code (overwhelmingly)


def test_gv_greedy_contract_violation():
    with pytest.raises(ValueError):
        gv_greedy_construct(Space(2, 2, 2), 2, 3, seed=0)  # 2 * 10 >= 16


def test_gv_greedy_space_guard():
    with pytest.raises(GuardExceeded):
        gv_greedy_construct(Space(2, 5, 6), 3, 2, seed=0)  # 2^30 vectors


def test_gv_asymptotic_distance():
    assert gv_asymptotic_distance(8, 8, 64.0) == pytest.approx(0.0)  # R = 1
    # m = n, R = 1/4: d/n -> 1 - sqrt(R) = 1/2, ratio = 1/4
    n = 10
    assert gv_asymptotic_distance(n, n, n * n * 0.25) == pytest.approx(0.25)
    # rectangular spot check: always below 1/2, decreasing in log_q M
    prev = 0.5
    for logM in (1.0, 4.0, 16.0, 32.0):
        val = gv_asymptotic_distance(8, 4, logM)
        assert 0 <= val < 0.5
        assert val < prev
        prev = val


def test_gv_asymptotic_domain():
    with pytest.raises(ValueError):
        gv_asymptotic_distance(4, 4, 0.0)
    with pytest.raises(ValueError):
        gv_asymptotic_distance(4, 4, 17.0)


def test_covering_density_example():
    report = covering_density(CodeParams(Space(2, 4, 4), 256, 3))
    assert report.density == Fraction(57856, 65536)
    assert float(report.density) == 0.8828125
    assert report.lower_bound == Fraction(1, 8)
    assert report.upper_bound == 1
    assert report.lower_bound <= report.density <= report.upper_bound


def test_covering_density_full_space():
    report = covering_density(CodeParams(Space(2, 3, 3), 2**9, 1))
    assert report.density == 1


def test_covering_density_bounds_only_for_mrd():
    report = covering_density(CodeParams(Space(2, 4, 4), 128, 3))
    assert report.lower_bound is None and report.upper_bound is None
    even_d = covering_density(CodeParams(Space(2, 4, 4), 16, 4))
    assert even_d.lower_bound is None


def test_mrd_density_sandwich_sweep():
    for q in (2, 3):
        for m in range(1, 7):
            for n in range(1, m + 1):
                sp = Space(q, m, n)
                for d in range(1, n + 1, 2):
                    cp = mrd_code_params(sp, d)
                    assert sphere_packing_holds(cp).holds
                    rep = covering_density(cp)
                    assert rep.lower_bound <= rep.density <= rep.upper_bound


def test_rank1_mrd_density_values():
    assert rank1_mrd_density(2, 3) == Fraction(25, 32)
    assert float(rank1_mrd_density(2, 3)) == 0.78125
    # direct count: M = 2^3 = 8 words, B_1 = 50, space 512
    assert rank1_mrd_density(2, 3) == Fraction(8 * 50, 512)
    assert float(rank1_mrd_density(2, 4)) == 0.8828125


def test_rank1_mrd_density_matches_covering_density():
    for q in (2, 3):
        for n in range(3, 9):
            cp = CodeParams(Space(q, n, n), q ** (n * (n - 2)), 3)
            assert cp.is_mrd
            assert rank1_mrd_density(q, n) == covering_density(cp).density


def test_rank1_mrd_density_needs_n_at_least_3():
    with pytest.raises(ValueError):
        rank1_mrd_density(2, 2)


def test_quasi_perfect_table_binary():
    table = dict(quasi_perfect_table(2, 10))
    assert table[3] == Fraction(25, 32)
    assert table[4] == Fraction(113, 128)
    assert table[5] == Fraction(481, 512)
    assert table[6] == Fraction(1985, 2048)
    assert table[10] == 1 - Fraction(1, 2**9) + Fraction(1, 2**19)
    densities = [table[n] for n in range(3, 11)]
    assert all(a < b for a, b in zip(densities, densities[1:]))
    assert table[10] > Fraction(998, 1000)
    # deficit is dominated by the 2^(1-n) term
    assert 1 - table[8] < Fraction(1, 2**7)


def test_quasi_perfect_table_ternary_capped():
    for n, density in quasi_perfect_table(3, 8):
        assert density <= Fraction(1, 2)
    # the cap is approached from below
    assert quasi_perfect_table(3, 20)[-1][1] > Fraction(49, 100)


def test_code_params_validation():
    with pytest.raises(ValueError):
        CodeParams(Space(2, 4, 4), 256, 5)  # d > min(m, n)
    with pytest.raises(ValueError):
        CodeParams(Space(2, 4, 4), 0, 3)
    cp = CodeParams.from_dimension(Space(2, 4, 4), 2, 3)
    assert cp.M == 256 and cp.t == 1 and cp.is_mrd
