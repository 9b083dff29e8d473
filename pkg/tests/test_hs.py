import itertools

import numpy as np
import pytest

from framehs.frames import Frame, canonical_dual, frame_bounds
from framehs.hs import (
    HsMethod,
    RankOne,
    hs_inner_all_pairs,
    hs_inner_direct,
    hs_inner_kron,
    hs_inner_table,
    hs_inner_vec_pair,
    hs_norm_via_frame,
    lower_symbol,
    op_count_formula,
    rank_one_matrix,
)
from framehs.linalg import OpCount, frobenius_inner, mat_cols


def _rand(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_frame(rng, d, K) -> Frame:
    return Frame(_rand(rng, d, K))


# ------------------------------------------------------------------ rank one

def test_rank_one_basis_pair():
    M = rank_one_matrix([1.0, 0.0], [0.0, 1.0])
    assert np.array_equal(M, [[0.0, 1.0], [0.0, 0.0]])


def test_rank_one_defining_property():
    rng = np.random.default_rng(30)
    f, g = _rand(rng, 3), _rand(rng, 4)
    op = RankOne(f, g)
    M = op.matrix()
    for _ in range(5):
        h = _rand(rng, 4)
        expected = np.vdot(g, h) * f  # <h, g> f
        assert np.linalg.norm(M @ h - expected) <= 1e-12 * np.linalg.norm(expected)
        assert np.linalg.norm(op.apply(h) - expected) <= 1e-12 * np.linalg.norm(expected)


def test_rank_one_hs_inner_factorizes():
    # <f (x) conj(g), h (x) conj(l)>_HS = <f, h> <l, g>, evaluated densely
    rng = np.random.default_rng(31)
    for _ in range(10):
        f, h = _rand(rng, 3), _rand(rng, 3)
        g, l = _rand(rng, 5), _rand(rng, 5)
        lhs = frobenius_inner(rank_one_matrix(f, g), rank_one_matrix(h, l))
        rhs = np.vdot(h, f) * np.vdot(g, l)  # <f, h> <l, g>
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


def test_rank_one_counted_cost():
    ctr = OpCount()
    rank_one_matrix(np.ones(3), np.ones(4), ctr)
    assert ctr.count == 12


# ------------------------------------------------- the four strategy values

def test_vec_pair_count_and_identity_value():
    rep = hs_inner_vec_pair(np.eye(2), [1.0, 0.0], [1.0, 0.0])
    assert rep.ops == 13  # 3mn + m - 1 at m = n = 2
    assert rep.value == pytest.approx(1.0)
    assert rep.method is HsMethod.VEC_PAIR


def test_vec_pair_agrees_with_direct():
    rng = np.random.default_rng(32)
    for _ in range(10):
        m, n = rng.integers(1, 6, size=2)
        T, g, h = _rand(rng, m, n), _rand(rng, m), _rand(rng, n)
        a = hs_inner_vec_pair(T, g, h).value
        b = hs_inner_direct(T, g, h).value
        assert abs(a - b) <= 1e-12 * max(1.0, abs(b))


def test_direct_count_and_example_value():
    rep = hs_inner_direct(np.zeros((2, 2)), [1.0, 0.0], [0.0, 1.0])
    assert rep.ops == 9  # 2mn + m - 1 at m = n = 2
    assert rep.value == 0
    g = np.array([0.5, np.sqrt(3) / 2])
    rep = hs_inner_direct(np.diag([3.0, 5.0]), g, g)
    assert rep.value == pytest.approx(4.5)


def test_all_pairs_count_and_onb_table():
    rng = np.random.default_rng(33)
    G = random_frame(rng, 2, 2)
    H = random_frame(rng, 2, 2)
    rep = hs_inner_all_pairs(_rand(rng, 2, 2), G, H)
    assert rep.ops == 24  # L(2mn - m + 2mK - K) at m = n = K = L = 2
    T = _rand(rng, 3, 3)
    onb = Frame(np.eye(3))
    table = hs_inner_all_pairs(T, onb, onb).value
    assert np.allclose(table, T.T, atol=1e-13)  # entry (l, k) = <T e_l, e_k> = T[k, l]


def test_all_pairs_entries_match_direct():
    rng = np.random.default_rng(34)
    T = _rand(rng, 3, 4)
    G, H = random_frame(rng, 3, 5), random_frame(rng, 4, 2)
    table = hs_inner_all_pairs(T, G, H).value
    assert table.shape == (2, 5)
    for k in range(5):
        for l in range(2):
            ref = hs_inner_direct(T, G.element(k), H.element(l)).value
            assert abs(table[l, k] - ref) <= 1e-12 * max(1.0, abs(ref))


def test_kron_count_stacking_and_zero():
    rng = np.random.default_rng(35)
    G, H = random_frame(rng, 2, 2), random_frame(rng, 2, 2)
    rep = hs_inner_kron(_rand(rng, 2, 2), G, H)
    assert rep.ops == 44  # KL(3mn - 1) at m = n = K = L = 2
    T = _rand(rng, 3, 4)
    G, H = random_frame(rng, 3, 5), random_frame(rng, 4, 2)
    stacked = hs_inner_kron(T, G, H).value
    assert stacked.shape == (10,)
    table = hs_inner_all_pairs(T, G, H).value
    assert np.allclose(mat_cols(stacked, 5), table.T, atol=1e-12)
    zero = hs_inner_kron(np.zeros((3, 4)), G, H).value
    assert np.allclose(zero, 0.0, atol=1e-15)


def test_strategy_shape_validation():
    rng = np.random.default_rng(36)
    T = _rand(rng, 2, 3)
    with pytest.raises(ValueError):
        hs_inner_direct(T, _rand(rng, 3), _rand(rng, 3))
    with pytest.raises(ValueError):
        hs_inner_vec_pair(T, _rand(rng, 2), _rand(rng, 2))
    with pytest.raises(ValueError):
        hs_inner_all_pairs(T, random_frame(rng, 3, 2), random_frame(rng, 3, 2))
    with pytest.raises(ValueError):
        hs_inner_kron(T, random_frame(rng, 2, 2), random_frame(rng, 2, 2))


# -------------------------------------------------------------- exact counts

def test_exact_counts_full_grid():
    rng = np.random.default_rng(37)
    for m, n, K, L in itertools.product(range(1, 6), repeat=4):
        T = _rand(rng, m, n)
        G, H = random_frame(rng, m, K), random_frame(rng, n, L)
        assert hs_inner_vec_pair(T, G.element(0), H.element(0)).ops == 3 * m * n + m - 1
        assert hs_inner_direct(T, G.element(0), H.element(0)).ops == 2 * m * n + m - 1
        assert hs_inner_all_pairs(T, G, H).ops == L * (2 * m * n - m + 2 * m * K - K)
        assert hs_inner_kron(T, G, H).ops == K * L * (3 * m * n - 1)


def test_counts_accumulate_in_shared_counter():
    rng = np.random.default_rng(38)
    T = _rand(rng, 2, 2)
    ctr = OpCount()
    hs_inner_direct(T, _rand(rng, 2), _rand(rng, 2), ctr)
    hs_inner_vec_pair(T, _rand(rng, 2), _rand(rng, 2), ctr)
    assert ctr.count == 9 + 13


def test_formula_helper_matches_spelled_out_forms():
    assert op_count_formula(HsMethod.VEC_PAIR, 3, 4) == 3 * 12 + 3 - 1
    assert op_count_formula(HsMethod.DIRECT, 3, 4) == 2 * 12 + 3 - 1
    assert op_count_formula(HsMethod.ALL_PAIRS, 3, 4, K=5, L=6) == 6 * (24 - 3 + 30 - 5)
    assert op_count_formula(HsMethod.KRON, 3, 4, K=5, L=6) == 30 * 35


def test_full_table_sandwich_beats_kron_on_square_grids():
    for size in range(2, 17):
        f3 = op_count_formula(HsMethod.ALL_PAIRS, size, size, K=size, L=size)
        f4 = op_count_formula(HsMethod.KRON, size, size, K=size, L=size)
        assert f3 <= f4


def test_table_defaults_to_sandwich_and_honors_overrides():
    rng = np.random.default_rng(99)
    T = _rand(rng, 3, 4)
    G, H = random_frame(rng, 3, 5), random_frame(rng, 4, 2)
    default = hs_inner_table(T, G, H)
    assert default.method is HsMethod.ALL_PAIRS
    assert default.ops == op_count_formula(HsMethod.ALL_PAIRS, 3, 4, K=5, L=2)
    for method in HsMethod:
        rep = hs_inner_table(T, G, H, method=method)
        assert rep.value.shape == (2, 5)
        assert np.max(np.abs(rep.value - default.value)) <= 1e-12
        expected = op_count_formula(method, 3, 4, K=5, L=2)
        if method in (HsMethod.VEC_PAIR, HsMethod.DIRECT):
            expected *= 5 * 2
        assert rep.ops == expected


def test_four_methods_agree_on_random_fixtures():
    for seed in range(10):
        rng = np.random.default_rng(100 + seed)
        m, n = rng.integers(1, 6, size=2)
        K, L = rng.integers(1, 8, size=2)
        T = _rand(rng, m, n)
        G, H = random_frame(rng, m, K), random_frame(rng, n, L)
        table = hs_inner_all_pairs(T, G, H).value
        from_kron = mat_cols(hs_inner_kron(T, G, H).value, K).T
        scale = max(1.0, float(np.max(np.abs(table))))
        assert np.max(np.abs(from_kron - table)) <= 1e-10 * scale
        for k in range(K):
            for l in range(L):
                v1 = hs_inner_vec_pair(T, G.element(k), H.element(l)).value
                v2 = hs_inner_direct(T, G.element(k), H.element(l)).value
                assert abs(v1 - table[l, k]) <= 1e-10 * scale
                assert abs(v2 - table[l, k]) <= 1e-10 * scale


# -------------------------------------------------------------- lower symbol

def test_lower_symbol_rotated_basis_values():
    F = Frame(np.array([[0.5, np.sqrt(3) / 2], [np.sqrt(3) / 2, -0.5]]))
    sig = lower_symbol(np.diag([3.0, 5.0]), F, F)
    assert np.allclose(sig, [4.5, 3.5], atol=1e-12)


def test_lower_symbol_identity_against_onb():
    onb = Frame(np.eye(4))
    assert np.allclose(lower_symbol(np.eye(4), onb, onb), np.ones(4))


def test_lower_symbol_mixed_frames():
    rng = np.random.default_rng(39)
    T = _rand(rng, 3, 4)
    G, F = random_frame(rng, 3, 5), random_frame(rng, 4, 5)
    sig = lower_symbol(T, G, F)
    for k in range(5):
        assert sig[k] == pytest.approx(np.vdot(G.element(k), T @ F.element(k)))
    with pytest.raises(ValueError):
        lower_symbol(T, G, random_frame(rng, 4, 3))


def test_lower_symbol_bessel_norm_bound():
    rng = np.random.default_rng(40)
    for _ in range(10):
        T = _rand(rng, 3, 3)
        G, F = random_frame(rng, 3, 6), random_frame(rng, 3, 6)
        sig = lower_symbol(T, G, F)
        B = frame_bounds(G).upper
        Bp = frame_bounds(F).upper
        bound = np.sqrt(B * Bp) * np.linalg.norm(T)
        assert np.linalg.norm(sig) <= bound + 1e-9


# ---------------------------------------------------------- norm via frame

def test_hs_norm_via_onb_is_exact():
    rng = np.random.default_rng(41)
    T = _rand(rng, 3, 3)
    chk = hs_norm_via_frame(T, Frame(np.eye(3)))
    assert chk.value == pytest.approx(chk.hs_norm, rel=1e-14)
    assert chk.within_bounds()


def test_hs_norm_via_tight_frame_collapses():
    rng = np.random.default_rng(42)
    Q1, _ = np.linalg.qr(_rand(rng, 3, 3))
    Q2, _ = np.linalg.qr(_rand(rng, 3, 3))
    F = Frame(np.hstack([Q1, Q2]))  # tight, bound 2
    T = _rand(rng, 3, 3)
    chk = hs_norm_via_frame(T, F)
    assert chk.value == pytest.approx(np.sqrt(2.0) * chk.hs_norm, rel=1e-10)


def test_hs_norm_three_element_frame_identity_target():
    F = Frame(np.array([[np.cos(np.pi / 6), 1.0, 0.0], [np.sin(np.pi / 6), 1.0, -1.0]]))
    chk = hs_norm_via_frame(np.eye(2), F)
    # sum of squared element norms is the trace of the frame operator
    assert chk.value ** 2 == pytest.approx(4.0, rel=1e-12)
    assert chk.lower_edge <= chk.value <= chk.upper_edge
    assert 0.5453 * 2 <= chk.value ** 2 <= 3.4547 * 2


def test_hs_norm_sandwich_on_random_frames():
    rng = np.random.default_rng(43)
    for _ in range(20):
        d = int(rng.integers(2, 7))
        F = random_frame(rng, d, int(rng.integers(d, 2 * d + 3)))
        T = _rand(rng, d, d)
        chk = hs_norm_via_frame(T, F)
        assert chk.lower_edge - 1e-9 <= chk.value <= chk.upper_edge + 1e-9


def test_hs_norm_rejects_rank_deficient_frames():
    F = Frame(np.array([[1.0, 2.0], [0.0, 0.0]]))
    with pytest.raises(ValueError, match="rank"):
        hs_norm_via_frame(np.eye(2), F)


def test_bessel_upper_bound_for_operator_images():
    rng = np.random.default_rng(44)
    for _ in range(15):
        d = int(rng.integers(2, 6))
        K = int(rng.integers(1, 2 * d))  # may be rank deficient: Bessel only
        F = random_frame(rng, d, K)
        B = frame_bounds(F).upper
        T = _rand(rng, d, d)
        total = float(np.linalg.norm(T @ F.synthesis) ** 2)
        assert total <= B * np.linalg.norm(T) ** 2 + 1e-9


# --------------------------------------------------- tensor product families

def test_tensor_frame_bound_inequality():
    rng = np.random.default_rng(45)
    for _ in range(15):
        m, n = int(rng.integers(2, 5)), int(rng.integers(2, 5))
        F = random_frame(rng, m, int(rng.integers(m, m + 4)))
        G = random_frame(rng, n, int(rng.integers(n, n + 4)))
        bf, bg = frame_bounds(F), frame_bounds(G)
        O = _rand(rng, m, n)
        table = hs_inner_all_pairs(O, F, G).value  # entries <O, f_k (x) conj(g_j)>
        total = float(np.sum(np.abs(table) ** 2))
        hs2 = float(np.linalg.norm(O) ** 2)
        eps = 1e-8 * max(1.0, bf.upper * bg.upper * hs2)
        assert bf.lower * bg.lower * hs2 - eps <= total <= bf.upper * bg.upper * hs2 + eps


def test_tensor_riesz_biorthogonality():
    rng = np.random.default_rng(46)
    m, n = 3, 4
    F = Frame(_rand(rng, m, m))  # invertible square: a Riesz basis
    G = Frame(_rand(rng, n, n))
    Fd, Gd = canonical_dual(F), canonical_dual(G)
    for k1 in range(m):
        for j1 in range(n):
            R = rank_one_matrix(F.element(k1), G.element(j1))
            for k2 in range(m):
                for j2 in range(n):
                    Rd = rank_one_matrix(Fd.element(k2), Gd.element(j2))
                    got = frobenius_inner(R, Rd)
                    want = float(k1 == k2 and j1 == j2)
                    assert abs(got - want) <= 1e-9
