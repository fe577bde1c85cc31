"""Flag expansion, weights, degrees, and the size-sequence fast path."""

import random
from fractions import Fraction
from math import comb, factorial

import pytest

from mixeuler import (
    build_boolean,
    build_projective_geometry,
    build_sparse_paving,
    build_uniform,
    mask_of,
)
from mixeuler.errors import CompositionMismatch, VOutOfRange
from mixeuler.expansion import (
    composition_to_indices,
    compositions,
    count_initial_descending_flags,
    expand_gamma_product,
    gamma_product_degree,
    indices_to_composition,
    log_concavity_check,
    mixed_eulerian_degree,
    mult_weight,
    oi_weight,
    pvol,
)


def eulerian_number(n, k):
    if n == 0:
        return 1 if k == 0 else 0
    if not 0 <= k < n:
        return 0
    return sum((-1) ** j * comb(n + 1, j) * (k + 1 - j) ** n for j in range(k + 2))


def test_weight_formulas():
    # inside {0..4}: S = {0,1,2}, T = {2,3,4}
    assert oi_weight(0b00111, 0b11100, 0b11111) == 1 - max(0, 3 + 3 - 5)
    assert mult_weight(3, 2, 5) == 2 - Fraction(6, 5)
    assert mult_weight(2, 4, 5) == 2 - Fraction(8, 5)
    # boundary sizes give zero weight
    assert mult_weight(5, 2, 5) == 0
    assert mult_weight(0, 2, 5) == 0


def test_weight_conventions_differ_termwise_agree_on_degree():
    m = build_uniform(3, 5)
    a = expand_gamma_product(m, (1, 2), "oi")
    b = expand_gamma_product(m, (1, 2), "mult")
    assert a.terms != b.terms
    assert a.total() == b.total() == gamma_product_degree(m, (1, 2))


def test_composition_helpers():
    assert composition_to_indices((2, 0, 1)) == (1, 1, 3)
    assert indices_to_composition((1, 1, 3), 3) == (2, 0, 1)
    assert sorted(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(compositions(0, 0)) == [()]
    with pytest.raises(VOutOfRange):
        indices_to_composition((0,), 3)


def test_gamma1_expansion_lists_flats_avoiding_a_point():
    # under oi the reference set for gamma_1 is the n largest elements, so
    # the weight is 1 exactly on flats avoiding element 0
    m = build_boolean(4)
    ex = expand_gamma_product(m, (1,), "oi")
    got = {flag[0] for flag, w in ex.terms.items() if w}
    want = {f for f in m.proper_flats() if not f & 1}
    assert got == want
    assert all(w == 1 for w in ex.terms.values())


def test_gamma_n_expansion_lists_flats_containing_a_point():
    m = build_boolean(4)
    ex = expand_gamma_product(m, (3,), "oi")
    got = {flag[0] for flag, w in ex.terms.items() if w}
    want = {f for f in m.proper_flats() if (f >> 3) & 1}
    assert got == want


def test_expand_validates_input():
    m = build_uniform(3, 5)
    with pytest.raises(VOutOfRange):
        expand_gamma_product(m, (0,))
    with pytest.raises(VOutOfRange):
        expand_gamma_product(m, (5,))
    with pytest.raises(VOutOfRange):
        expand_gamma_product(m, (1, 1, 1))
    with pytest.raises(VOutOfRange):
        gamma_product_degree(m, (1, 2), convention="nope")


def test_degree_liberal_conventions():
    m = build_uniform(3, 5)
    assert gamma_product_degree(m, (0, 2)) == 0
    assert gamma_product_degree(m, (2, 5)) == 0
    assert gamma_product_degree(m, (2,)) == 0
    assert gamma_product_degree(m, (1, 1, 1)) == 0


def test_mixed_eulerian_validates_composition():
    m = build_uniform(3, 5)
    with pytest.raises(CompositionMismatch):
        mixed_eulerian_degree(m, (1, 1))
    with pytest.raises(CompositionMismatch):
        mixed_eulerian_degree(m, (1, 1, 1, 0))
    with pytest.raises(CompositionMismatch):
        mixed_eulerian_degree(m, (1, -1, 1, 1))


FROZEN = [
    # (builder args, composition, value)
    (("boolean", 4), (0, 3, 0), 4),
    (("boolean", 4), (1, 0, 2), 3),
    (("boolean", 4), (1, 1, 1), 6),
    (("boolean", 4), (2, 1, 0), 2),
    (("boolean", 4), (3, 0, 0), 1),
    (("boolean", 4), (0, 0, 3), 1),
]


def _build(spec):
    kind = spec[0]
    if kind == "boolean":
        return build_boolean(spec[1])
    if kind == "uniform":
        return build_uniform(spec[1], spec[2])
    raise AssertionError(kind)


@pytest.mark.parametrize("spec,c,want", FROZEN)
@pytest.mark.parametrize("convention", ["oi", "mult"])
@pytest.mark.parametrize("engine", ["flag", "sizes"])
def test_frozen_boolean_degrees(spec, c, want, convention, engine):
    assert mixed_eulerian_degree(_build(spec), c, convention, engine) == want


def test_frozen_fano_degrees():
    f = build_projective_geometry(2, 2)
    for conv in ("oi", "mult"):
        assert gamma_product_degree(f, (1, 1), conv) == 8
        assert gamma_product_degree(f, (1, 3), conv) == 24
        assert gamma_product_degree(f, (3, 3), conv) == 16


def test_frozen_other_degrees():
    u35 = build_uniform(3, 5)
    assert gamma_product_degree(u35, (3, 3)) == 4
    sp = build_sparse_paving(3, 6, [(0, 1, 2), (3, 4, 5)])
    assert gamma_product_degree(sp, (1, 2)) == 16
    assert gamma_product_degree(sp, (1, 2), "mult") == 16


def test_degree_is_order_invariant():
    rng = random.Random(20240817)
    pool = [
        build_uniform(3, 5),
        build_projective_geometry(2, 2),
        build_sparse_paving(3, 6, [(0, 1, 2), (3, 4, 5)]),
    ]
    for _ in range(30):
        m = pool[rng.randrange(len(pool))]
        v = [rng.randint(1, m.n) for _ in range(m.r)]
        base = gamma_product_degree(m, v)
        w = list(v)
        rng.shuffle(w)
        ex = expand_gamma_product(m, w)
        deg = sum(wt for flag, wt in ex.terms.items() if len(flag) == m.r)
        assert deg == base


def test_sizes_engine_matches_flag_engine_exhaustively():
    for rank, m in ((2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (2, 6), (5, 5)):
        M = build_uniform(rank, m)
        for c in compositions(M.r, M.n):
            for conv in ("oi", "mult"):
                assert mixed_eulerian_degree(M, c, conv, "sizes") == mixed_eulerian_degree(
                    M, c, conv, "flag"
                ), (rank, m, c, conv)


def test_sizes_engine_matches_flag_engine_sampled_large():
    rng = random.Random(99)
    for rank, m in ((4, 7), (5, 7), (7, 7), (4, 8)):
        M = build_uniform(rank, m)
        for _ in range(6):
            v = sorted(rng.randint(1, M.n) for _ in range(M.r))
            for conv in ("oi", "mult"):
                assert gamma_product_degree(M, v, conv, "sizes") == gamma_product_degree(
                    M, v, conv, "flag"
                ), (rank, m, v, conv)


def test_sizes_engine_refuses_nonuniform():
    f = build_projective_geometry(2, 2)
    with pytest.raises(VOutOfRange):
        gamma_product_degree(f, (1, 1), engine="sizes")


def test_boolean_single_support_is_eulerian():
    for n in (2, 3, 4, 5):
        B = build_boolean(n + 1)
        for k in range(1, n + 1):
            c = [0] * n
            c[k - 1] = n
            assert mixed_eulerian_degree(B, c) == eulerian_number(n, k - 1)


def test_uniform_repeated_class_closed_form():
    for rank, m in ((2, 4), (2, 5), (3, 5), (3, 6), (4, 6)):
        M = build_uniform(rank, m)
        n, r = M.n, M.r
        for k in range(1, n + 1):
            want = sum(comb(n - j, r) * eulerian_number(r, k - j - 1) for j in range(k))
            c = [0] * n
            c[k - 1] = r
            assert mixed_eulerian_degree(M, c) == want
        for k in range(r, n + 1):
            c = [0] * n
            c[k - 1] = r
            assert mixed_eulerian_degree(M, c) == (n + 1 - k) ** r


def test_descending_flag_counts():
    # frozen mu-vectors
    cases = [
        (build_projective_geometry(2, 2), (1, 6, 8)),
        (build_boolean(4), (1, 3, 3, 1)),
        (build_uniform(3, 5), (1, 4, 6)),
        (build_uniform(2, 3), (1, 2)),
    ]
    for M, mus in cases:
        r, n = M.r, M.n
        for k in range(r + 1):
            v = [1] * k + [n] * (r - k)
            assert gamma_product_degree(M, v) == mus[k]
            assert count_initial_descending_flags(M, k) == mus[k]
    with pytest.raises(VOutOfRange):
        count_initial_descending_flags(build_uniform(2, 3), 5)


def test_boolean_descending_flags_are_binomial():
    for n in (2, 3, 4, 5):
        B = build_boolean(n + 1)
        for k in range(n + 1):
            assert count_initial_descending_flags(B, k) == comb(n, k)


def test_pvol_frozen_and_identity():
    assert pvol(build_uniform(2, 3)) == 3
    assert pvol(build_boolean(4)) == 96
    for n in (1, 2, 3, 4):
        B = build_boolean(n + 1)
        assert pvol(B) == factorial(n) * (n + 1) ** (n - 1)
        assert pvol(B, "mult") == pvol(B)
    f = build_projective_geometry(2, 2)
    assert pvol(f) == pvol(f, "mult") == pvol(f, engine="flag")


def test_pvol_is_multinomial_sum_of_degrees():
    for M in (build_uniform(2, 3), build_uniform(2, 4), build_boolean(4)):
        n, r = M.n, M.r
        total = 0
        for c in compositions(r, n):
            coef = factorial(r)
            for x in c:
                coef //= factorial(x)
            total += coef * mixed_eulerian_degree(M, c)
        assert total == pvol(M)


def test_degrees_are_nonnegative():
    rng = random.Random(5)
    pool = [
        build_uniform(2, 5),
        build_uniform(4, 6),
        build_projective_geometry(2, 2),
        build_sparse_paving(3, 6, [(0, 1, 2), (2, 3, 4)]),
    ]
    for _ in range(40):
        M = pool[rng.randrange(len(pool))]
        v = sorted(rng.randint(1, M.n) for _ in range(M.r))
        assert gamma_product_degree(M, v) >= 0


def test_mult_class_identity_against_top_class():
    # gamma_k aggregates as (n+1-k) gamma_n minus overweight of large flats:
    # per flat of size s the weight identity
    # mult(s,k) = (n+1-k) mult(s,n) - max(s-k, 0) over universe n+1
    for m in (4, 5, 7):
        n = m - 1
        for k in range(1, n + 1):
            for s in range(1, m):
                lhs = mult_weight(s, k, m)
                rhs = (n + 1 - k) * mult_weight(s, n, m) - max(s - k, 0)
                assert lhs == rhs


def test_log_concavity_small():
    for M in (build_uniform(3, 5), build_projective_geometry(2, 2), build_boolean(5)):
        n, r = M.n, M.r
        base = [0] * n
        extra = r - 2
        base[n - 1] = extra  # park leftover weight on gamma_n
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                res = log_concavity_check(M, base, i, j)
                assert res.holds, (M.provenance, i, j, res)


def test_log_concavity_validates():
    M = build_uniform(3, 5)
    with pytest.raises(CompositionMismatch):
        log_concavity_check(M, [1, 0, 0, 0], 1, 2)
    with pytest.raises(VOutOfRange):
        log_concavity_check(M, [0, 0, 0, 0], 0, 2)
