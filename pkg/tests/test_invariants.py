import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracle
from conftest import DESK_AMBIENTS, oracle_gens, random_nonzero_code
from codedist.code import AmbientSpace, LinearCode, max_weight, min_distance, puncture
from codedist.constructions import builtin, even_weight, full_space, reed_solomon, simplex
from codedist.errors import AmbientMismatch, LevelSetOverflow, NotABasis, NotApplicable, NotInvertible, RankDeficient
from codedist.field import GF
from codedist.invariants import (
    asymptotic_distance,
    compare_codes,
    covering_radius,
    distance_profile,
    exponent,
    extended_distance,
    generalized_covering_radius,
    generalized_radius,
    greedy_generator,
    greedy_lower_bound,
    greedy_profile,
    is_maximal,
    maximality_degree,
    partial_distances,
    singleton_ceiling,
    singleton_profile,
    subcode_distance,
    supercode_distance,
    supercode_distance_direct,
    supercode_via_radii,
)


def alphas(C, lo=1, hi=None):
    hi = C.N if hi is None else hi
    return distance_profile(C, range(lo, hi + 1)).sequence(lo, hi)


# -- worked examples ---------------------------------------------------------------------


def test_subcode_examples():
    assert subcode_distance(builtin("F2^3"), 2)[0] == 2
    assert [subcode_distance(builtin("F2^4"), i)[0] for i in (2, 3)] == [2, 2]
    rs, tw = builtin("rs-9-4"), builtin("twisted-rs-9")
    assert subcode_distance(rs, 2)[0] == subcode_distance(tw, 2)[0] == 8
    assert (subcode_distance(rs, 3)[0], subcode_distance(tw, 3)[0]) == (7, 6)


def test_supercode_examples():
    assert supercode_distance(builtin("BR17-C1"), 5)[0] == 2
    assert [supercode_distance(builtin("gabidulin-4x4"), i)[0] for i in range(5, 9)] == [3, 3, 3, 3]
    assert supercode_distance(builtin("duality-C1"), 5)[0] == 1


def test_profiles_of_examples():
    assert alphas(builtin("ternary-422")) == [4, 2, 2, 1]
    assert alphas(builtin("duality-C1")) == [4, 2, 2, 2, 1]
    assert alphas(builtin("duality-C2")) == [4, 2, 2, 2, 1]
    assert alphas(builtin("F4-C2"), 1, 4) == [2, 2, 2, 2]


def test_recomputed_profiles_match_brute_force():
    # values where the published examples disagree with exhaustive enumeration
    for name, want in [("duality-C1-dual", [5, 2, 2, 1, 1]), ("duality-C2-dual", [5, 3, 1, 1, 1])]:
        C = builtin(name)
        assert alphas(C) == want == oracle.profile(oracle_gens(C), 2, 5)
    F4C1 = builtin("F4-C1")
    w = oracle.rank_weight(2, 4)
    assert alphas(F4C1, 1, 4) == [2, 2, 1, 1] == [oracle.code_distance(oracle_gens(F4C1), 2, 8, i, w) for i in range(1, 5)]
    assert alphas(builtin("even-7"))[2] == 4
    assert alphas(builtin("even-8")) == [8, 4, 4, 4, 2, 2, 2, 1]


def test_witnesses_reverify():
    for name in ("duality-C1", "ternary-422", "F4-C2", "nested-D2"):
        C = builtin(name)
        prof = distance_profile(C)
        for i, W in prof.witnesses.items():
            D = LinearCode(C.field, C.ambient, W)
            assert D.k == i
            assert min_distance(D) == prof.alpha[i]
            assert D.contains_code(C) if i >= C.k else C.contains_code(D)


def test_budget_skips_are_recorded():
    C = builtin("BR17-C1")
    prof = distance_profile(C, range(1, 7), budget=20000)
    assert prof.alpha[4] == 4
    assert set(prof.skipped) == {5, 6}
    assert prof.sequence(1, 6)[4:] == [None, None]


def test_nested_examples_are_not_comparable():
    C1, D1, C2, D2 = (builtin(n) for n in ("nested-C1", "nested-D1", "nested-C2", "nested-D2"))
    assert D1.contains_code(C1) and D2.contains_code(C2)
    a, b = supercode_distance(C1, 2)[0], supercode_distance(C2, 2)[0]
    assert (a, b) == (3, 2)


# -- greedy ------------------------------------------------------------------------------


def test_greedy_examples():
    assert greedy_profile(builtin("F2^3"))[0] == [3, 1, 1]
    assert greedy_profile(reed_solomon(GF(3), 3))[0] == [3, 2, 1]
    assert greedy_profile(reed_solomon(GF(5), 4, [0, 1, 2, 3]))[0] == [4, 3, 2, 1]
    for q, n in [(3, 3), (5, 3), (5, 4), (7, 3)]:
        assert greedy_profile(full_space(GF(q), AmbientSpace.hamming(n)))[0] == list(range(n, 0, -1))


def test_greedy_chain_is_nested_and_attains_values():
    C = builtin("duality-C1")
    vals, chain = greedy_profile(C)
    assert vals == [4, 2, 2, 2, 1]
    for j, G in enumerate(chain.generators, 1):
        D = LinearCode(C.field, C.ambient, G)
        assert D.k == j and min_distance(D) == vals[j - 1]
        if j > 1:
            assert D.contains_code(LinearCode(C.field, C.ambient, chain.generators[j - 2]))
    assert LinearCode(C.field, C.ambient, chain.generators[C.k - 1]) == C


def test_greedy_chain_prefix_property():
    C = simplex(2, 3)
    vals, chain = greedy_profile(C)
    for j in range(1, C.k + 1):
        D = LinearCode(C.field, C.ambient, chain.generators[j - 1])
        assert greedy_profile(D)[0][:j] == vals[:j]


def test_level_cap_overflow():
    with pytest.raises(LevelSetOverflow):
        greedy_profile(full_space(GF(2), AmbientSpace.hamming(6)), cap=3)


def test_greedy_generator_examples():
    G = greedy_generator(builtin("F2^3"))
    assert (G != 0).sum(axis=1).tolist() == [3, 1, 1]
    assert partial_distances(GF(2), G).deltas == [3, 1, 1]
    S = greedy_generator(simplex(2, 3))
    assert (S != 0).sum(axis=1).tolist() == [4, 4, 4]


def test_greedy_lower_bound():
    S = simplex(2, 3)
    assert greedy_lower_bound(S, S.gen).bound == [4, 4, 4]
    res = greedy_lower_bound(builtin("F2^3"), np.eye(3, dtype=int))
    assert all(b <= g for b, g in zip(res.bound, [3, 1, 1]))
    one = LinearCode(GF(2), AmbientSpace.hamming(4), [[1, 1, 1, 0]])
    assert greedy_lower_bound(one, one.gen).bound == [3] == greedy_profile(one)[0][:1]
    # prefix spans are reported but are not bounds: <110, 011> has d_min 2 > alpha^g_2(F_2^3) = 1
    res = greedy_lower_bound(builtin("F2^3"), [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert res.prefix[1] == 2
    with pytest.raises(NotABasis):
        greedy_lower_bound(builtin("F2^3"), [[1, 1, 0], [0, 1, 1]])


# -- radii and maximality ----------------------------------------------------------------


def test_covering_radius_examples():
    assert covering_radius(full_space(GF(2), AmbientSpace.hamming(4))) == 0
    for n in range(2, 8):
        assert covering_radius(even_weight(n)) == 1
    C = builtin("duality-C1")
    assert min(min_distance(C), covering_radius(C)) == alphas(C, 3, 3)[0] == 2
    assert generalized_radius(builtin("BR17-C1"), 1) == 2


def test_covering_radius_matches_oracle(rng):
    for _ in range(20):
        C = random_nonzero_code(rng, 2, AmbientSpace.hamming(5), 3)
        assert covering_radius(C) == oracle.covering_radius(oracle_gens(C), 2, 5)


def test_radii_properties(rng):
    for _ in range(25):
        q = int(rng.choice([2, 3]))
        C = random_nonzero_code(rng, q, AmbientSpace.hamming(5), 3)
        if C.k == C.N:
            continue
        rho = [generalized_radius(C, i) for i in range(1, C.N - C.k + 1)]
        assert rho[0] == covering_radius(C)
        assert all(a >= b for a, b in zip(rho, rho[1:]))
        assert rho[-1] == 1
        for i in range(C.k + 1, C.N + 1):
            assert supercode_via_radii(C, i) == supercode_distance_direct(C, i)[0]


def test_maximality():
    assert maximality_degree(even_weight(4)) == 1 and is_maximal(even_weight(4))
    assert not is_maximal(builtin("not-maximal"))
    with pytest.raises(NotApplicable):
        maximality_degree(full_space(GF(2), AmbientSpace.hamming(3)))


def test_maximality_range(rng):
    for _ in range(20):
        C = random_nonzero_code(rng, 2, AmbientSpace.hamming(5), 3)
        if C.k == C.N:
            continue
        mu = maximality_degree(C)
        d = min_distance(C)
        assert 0 <= mu <= d - 1
        assert is_maximal(C) == (alphas(C, C.k + 1, C.k + 1)[0] < d)


# -- partial distances -------------------------------------------------------------------


def test_partial_distances_examples():
    prof = partial_distances(GF(2), np.eye(4, dtype=int))
    assert prof.deltas == [1, 1, 1, 1] and prof.exponent == 0
    A = [[1, 1, 0], [0, 1, 1], [1, 1, 1]]
    prof = partial_distances(GF(2), A)
    assert prof.deltas == [2, 2, 1]
    assert math.isclose(prof.exponent, 2 * math.log(2, 3) / 3, abs_tol=1e-12)
    E, ceil = exponent(GF(2), A)
    assert math.isclose(E, 0.420620, abs_tol=1e-6) and E <= ceil
    with pytest.raises(RankDeficient):
        partial_distances(GF(2), [[1, 1], [1, 1]])
    with pytest.raises(NotInvertible):
        exponent(GF(2), [[1, 1, 0], [0, 1, 1]])


def test_exponent_below_ceiling(rng):
    F = GF(2)
    seen = 0
    while seen < 30:
        A = rng.integers(0, 2, (4, 4))
        try:
            E, ceil = exponent(F, A)
        except NotInvertible:
            continue
        seen += 1
        assert E <= ceil + 1e-12


# -- bounds ------------------------------------------------------------------------------


def test_singleton_examples():
    assert singleton_profile(builtin("ternary-422")).flags["is_MDS"]
    assert singleton_profile(builtin("BR17-C1")).flags["is_MRD"]
    amb = AmbientSpace.hamming(9)
    assert [singleton_ceiling(amb, i) for i in range(1, 10)] == list(range(9, 0, -1))
    assert alphas(builtin("rs-9-4")) == list(range(9, 0, -1))


def test_rank_ceiling_forms():
    sp = singleton_profile(builtin("gabidulin-4x4"))
    assert sp.bounds[:8] == [4, 4, 4, 4, 3, 3, 3, 3]
    # the floor form, capped at n
    assert sp.floor_form[:8] == [4, 4, 4, 4, 4, 4, 4, 3]
    assert alphas(builtin("gabidulin-4x4"), 1, 8) == sp.bounds[:8]


def test_quasi_mrd_flag():
    from codedist.constructions import gabidulin
    from codedist.field import field_new
    # an F_2-subcode of dimension 5 of a 3x3 Gabidulin code with k=2 is not MRD
    C = gabidulin(GF(2), field_new(2, 3), 1)
    flags = singleton_profile(C).flags
    assert flags["is_MRD"] and not flags["is_QMRD"]


# -- extension ---------------------------------------------------------------------------


def test_extension_examples():
    assert extended_distance(builtin("even-3"), 2, 1) == 3
    assert extended_distance(builtin("duality-C1"), 2, 1) == 5
    assert extended_distance(builtin("duality-C2"), 2, 1) == 4
    res = asymptotic_distance(builtin("duality-C2"), 1, 3)
    assert res.value == 4 and not res.certified and res.marker == "uncertified, swept l <= 3"
    res = asymptotic_distance(builtin("duality-C1"), 1, 3)
    assert (res.value, res.stabilized_at) == (5, 2)
    for name in ("duality-C1", "duality-C2"):
        C = builtin(name)
        assert [asymptotic_distance(C, j, 2).value for j in (2, 3, 4)] == [2, 2, 2]


def test_generalized_covering_radius():
    C = builtin("duality-C1")
    assert generalized_covering_radius(C, 1) == covering_radius(C)
    assert generalized_covering_radius(full_space(GF(2), AmbientSpace.hamming(3)), 2) == 0


def test_genradii_relation_small():
    for name in ("duality-C1", "duality-C2", "even-4", "nested-C1"):
        C = builtin(name)
        lhs = extended_distance(C, 2, C.k + 1)
        assert lhs == min(min_distance(C), generalized_covering_radius(C, 2))


# -- comparison --------------------------------------------------------------------------


def test_compare():
    cmp = compare_codes(builtin("rs-9-4"), builtin("twisted-rs-9"), range(1, 5))
    assert cmp.inequivalent and cmp.first_difference == "alpha_3"
    cmp = compare_codes(builtin("BR17-C1"), builtin("gabidulin-4x4"), range(1, 6))
    assert cmp.first_difference == "alpha_5"
    same = compare_codes(builtin("duality-C1"), builtin("duality-C1"))
    assert not same.inequivalent and "indistinguishable" in same.verdict
    pair = compare_codes(builtin("duality-C1"), builtin("duality-C2"))
    assert not pair.inequivalent
    assert compare_codes(builtin("duality-C1"), builtin("duality-C2"), asymptotic=2).first_difference == "alpha_inf_1"
    with pytest.raises(AmbientMismatch):
        compare_codes(builtin("duality-C1"), builtin("F2^3"))


# -- property tests ----------------------------------------------------------------------


@st.composite
def small_codes(draw):
    q, amb = draw(st.sampled_from(DESK_AMBIENTS))
    k = draw(st.integers(1, min(4, amb.N)))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=amb.N, max_size=amb.N), min_size=k, max_size=k))
    C = LinearCode(GF(q), amb, rows)
    return C


@given(small_codes())
def test_profile_properties(C):
    if C.k == 0:
        return
    prof = distance_profile(C)
    a = prof.sequence()
    assert all(x >= y for x, y in zip(a, a[1:]))
    assert a[0] == max_weight(C)
    assert a[C.k - 1] == min_distance(C)
    assert a[-1] == 1
    assert all(a[i - 1] <= singleton_ceiling(C.ambient, i) for i in range(1, C.N + 1))
    g, _ = greedy_profile(C)
    assert all(x <= y for x, y in zip(g, a))
    for i in {1, C.k, min(C.k + 1, C.N), C.N}:
        assert g[i - 1] == a[i - 1]


@given(small_codes())
def test_search_route_agrees_with_exhaustive(C):
    if C.k == 0:
        return
    for i in range(1, C.N + 1):
        if i <= C.k:
            assert subcode_distance(C, i, route="search")[0] == subcode_distance(C, i, route="exhaustive")[0]
        else:
            assert supercode_distance(C, i, route="search")[0] == supercode_distance(C, i, route="exhaustive")[0]


@given(small_codes())
def test_puncturing_drops_at_most_one(C):
    if C.ambient.metric != "hamming" or C.k == 0 or C.N < 2:
        return
    a = distance_profile(C).sequence()
    for pos in range(C.N):
        P = puncture(C, pos)
        if P.k == 0:
            continue
        b = distance_profile(P).sequence()
        for i in range(1, P.N + 1):
            assert b[i - 1] >= a[i - 1] - 1


def test_nesting(rng):
    for _ in range(30):
        q = int(rng.choice([2, 3]))
        D = random_nonzero_code(rng, q, AmbientSpace.hamming(5), 3)
        if D.k < 2:
            continue
        C = LinearCode(D.field, D.ambient, D.gen[: D.k - 1])
        a, b = alphas(C), alphas(D)
        for i in range(1, C.k + 1):
            assert a[i - 1] <= b[i - 1]
        for i in range(D.k, C.N + 1):
            assert a[i - 1] >= b[i - 1]


def test_extension_sandwich_hamming(rng):
    for _ in range(10):
        C = random_nonzero_code(rng, 2, AmbientSpace.hamming(4), 2)
        for i in range(1, C.N + 1):
            res = asymptotic_distance(C, i, 2)
            assert alphas(C, i, i)[0] == res.values[1] <= res.values[2] <= res.value
