from fractions import Fraction

import pytest
from hypothesis import given, settings

from steinergut import (
    BOUND_GROUPS,
    BOUND_IDS,
    ComplementDisconnected,
    KOutOfRange,
    NotTight,
    SquareRoot,
    amgm_sum,
    complement,
    diagnose_equality,
    equality_witness,
    evaluate_bounds,
    expand_bound_ids,
    from_edge_list,
    graph6_decode,
    is_connected,
    lem22,
    prop21,
    ps_product,
    steiner_gutman,
    thm32,
)
from strategies import connected_graphs


def path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def house():
    # C5 plus one chord: degrees 2,2,2,3,3 and a connected complement
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])


def test_bound_id_inventory():
    assert len(BOUND_IDS) == 16
    assert len(set(BOUND_IDS)) == 16
    assert tuple(sorted(set(b.split(".")[0] for b in BOUND_IDS))) == tuple(sorted(BOUND_GROUPS))


def test_expand_bound_ids():
    assert expand_bound_ids(None) == list(BOUND_IDS)
    assert expand_bound_ids(["all"]) == list(BOUND_IDS)
    assert expand_bound_ids(["thm32"]) == [
        "thm32.1.sum_upper",
        "thm32.1.product_upper",
        "thm32.2.sum_lower",
        "thm32.3.product_lower",
    ]
    # canonical order and dedup regardless of request order
    assert expand_bound_ids(["amgm.sum_lower", "prop21.upper", "prop21.upper"]) == [
        "prop21.upper",
        "amgm.sum_lower",
    ]
    with pytest.raises(ValueError):
        expand_bound_ids(["thm99"])


def test_prop21_on_p3():
    up, lo = prop21(path(3), 2)
    assert up.bound_id == "prop21.upper"
    assert up.bound_value == 16 and up.actual == 6 and up.holds and not up.tight
    assert lo.case_label == "min_deg=1"
    assert lo.bound_value == 6 and lo.holds and lo.tight


def test_prop21_needs_order_three():
    with pytest.raises(KOutOfRange):
        prop21(path(2), 2)


def test_lem22_on_p3():
    up, lo = lem22(path(3), 2)
    assert up.bound_value == 32 and up.holds
    assert lo.case_label == "min_deg=1"
    assert lo.bound_value == 3 and lo.holds and not lo.tight


def test_lem22_lower_case_switch():
    _, lo = lem22(cycle(4), 2)
    assert lo.case_label == "min_deg>=2"
    assert lo.bound_value == 2 * 4 * 1 * 3  # 2m(k-1)C(n-1,k-1)


def test_paired_bounds_need_connected_complement():
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(ComplementDisconnected):
        thm32(star, 2)
    with pytest.raises(ComplementDisconnected):
        amgm_sum(star, 2)


def test_cor41_needs_order_four():
    with pytest.raises(KOutOfRange):
        evaluate_bounds(complete(3), 2, ["cor41"])


def test_case_labels_cover_the_degree_splits():
    for g, expected in [
        (cycle(5), "min_deg>=2,max_deg<=n-3"),
        (house(), "min_deg>=2,max_deg=n-2"),
        (path(5), "min_deg=1,max_deg<=n-3"),
        (path(4), "min_deg=1,max_deg=n-2"),
    ]:
        checks = thm32(g, 2)
        assert checks[2].bound_id == "thm32.2.sum_lower"
        assert checks[2].case_label == expected
        assert checks[3].case_label == expected


def test_branch_labels():
    cases = [
        (cycle(6), "min+max<n-1"),
        (complement(cycle(6)), "min+max>n-1"),
        (cycle(5), "min+max=n-1"),
        (path(4), "min+max=n-1"),
    ]
    for g, expected in cases:
        _, lo = ps_product(g, 2)
        assert lo.case_label == expected
        _, lo = amgm_sum(g, 2)
        assert lo.case_label == expected


def test_cycle5_attains_nearly_everything_at_k5():
    checks = evaluate_bounds(cycle(5), 5)
    assert [c.bound_id for c in checks] == list(BOUND_IDS)
    assert all(c.holds for c in checks)
    by_id = {c.bound_id: c for c in checks}
    assert by_id["thm32.1.sum_upper"].bound_value == 256
    assert by_id["thm32.1.sum_upper"].actual == 256
    assert by_id["thm32.1.product_upper"].actual == 16384
    not_tight = [c.bound_id for c in checks if not c.tight]
    assert not_tight == ["lem22.lower"]


def test_amgm_root_lower_on_p4():
    up, lo = amgm_sum(path(4), 3)
    assert lo.case_label == "min+max=n-1"
    assert isinstance(lo.bound_value, SquareRoot)
    assert lo.bound_value.square == Fraction(2048)
    assert lo.actual == 56
    assert lo.holds == (2048 <= 56 * 56)
    assert not lo.tight
    assert up.bound_value == 192 and up.holds


def test_amgm_perfect_square_stays_rational():
    _, lo = amgm_sum(cycle(5), 5)
    assert not isinstance(lo.bound_value, SquareRoot)
    assert lo.bound_value == 256 and lo.tight


def test_known_sum_upper_violation():
    g = graph6_decode("DBg")
    checks = evaluate_bounds(g, 5, ["cor41.1.sum_upper"])
    assert len(checks) == 1
    assert not checks[0].holds
    assert checks[0].bound_value == 256
    assert checks[0].actual == 320
    # the max-aggregate companion holds on the same graph
    companion = evaluate_bounds(g, 5, ["thm32.1.sum_upper"])[0]
    assert companion.holds


def test_evaluate_bounds_subset_and_order():
    checks = evaluate_bounds(path(3), 2, ["lem22.upper"])
    assert [c.bound_id for c in checks] == ["lem22.upper"]
    checks = evaluate_bounds(path(4), 2, ["amgm", "prop21"])
    assert [c.bound_id for c in checks] == [
        "prop21.upper",
        "prop21.lower",
        "amgm.sum_upper",
        "amgm.sum_lower",
    ]


@given(connected_graphs(min_n=3, max_n=6))
@settings(max_examples=60)
def test_single_graph_bounds_hold(g):
    for check in evaluate_bounds(g, 2, ["prop21", "lem22"]):
        assert check.holds


@given(connected_graphs(min_n=4, max_n=6).filter(lambda g: is_connected(complement(g))))
@settings(max_examples=40)
def test_paired_bounds_hold_except_the_min_aggregate(g):
    for k in range(2, g.n + 1):
        for check in evaluate_bounds(g, k):
            if check.bound_id != "cor41.1.sum_upper":
                assert check.holds, (check.bound_id, k)


def test_equality_witness_on_complete_graph():
    w = equality_witness(complete(4), 4, "prop21.upper")
    assert w.regular and w.k_equals_n
    assert w.n_minus_k_plus_1_connected
    assert not w.path_with_k_equals_n


def test_equality_witness_rejects_strict_bounds():
    with pytest.raises(NotTight):
        equality_witness(complete(4), 3, "prop21.upper")
    with pytest.raises(ValueError):
        equality_witness(complete(4), 4, "nope.upper")


def test_diagnose_equality_fields():
    w = diagnose_equality(cycle(5), 5)
    assert w.regular and w.k_equals_n
    assert w.n_minus_k_plus_1_connected
    assert w.all_k_subsets_induce_connected
    assert w.steiner_minimal_in_both
    assert not w.path_with_k_equals_n
    d = w.as_dict()
    assert set(d) == {
        "regular",
        "k_equals_n",
        "n_minus_k_plus_1_connected",
        "all_k_subsets_induce_connected",
        "steiner_minimal_in_both",
        "path_with_k_equals_n",
        "p3_with_k_2",
    }

    w = diagnose_equality(path(3), 2)
    assert w.p3_with_k_2 and not w.regular


def test_sum_upper_dominates_sum_lower_across_instances():
    # lattice consistency: the max-aggregate sum upper never dips below the
    # size-free sum lower, even where the min-aggregate upper misbehaves
    from steinergut import EnumerationSpec, enumerate_graphs, steiner_all_subsets

    for n in range(4, 7):
        for g in enumerate_graphs(EnumerationSpec(n=n, require_coconnected=True)):
            table = steiner_all_subsets(g)
            co_table = steiner_all_subsets(complement(g))
            for k in range(2, n + 1):
                checks = evaluate_bounds(
                    g, k, ["thm32.1.sum_upper", "cor41.1.sum_lower"],
                    table=table, co_table=co_table,
                )
                assert checks[0].bound_value >= checks[1].bound_value


def test_amgm_root_tracks_a_float_evaluation():
    import math
    import random

    from steinergut import EnumerationSpec, degree_profile, enumerate_graphs

    pool = []
    for n in range(4, 7):
        for g in enumerate_graphs(EnumerationSpec(n=n, require_coconnected=True)):
            pool.extend((g, k) for k in range(2, n + 1))
    rng = random.Random(61803)
    for g, k in rng.sample(pool, 100):
        _, lo = amgm_sum(g, k)
        value = lo.bound_value
        as_float = math.sqrt(value.square) if isinstance(value, SquareRoot) else float(value)
        prof = degree_profile(g)
        n, dmin, dmax = g.n, prof.min_degree, prof.max_degree
        base = dmin * (n - dmin - 1) if dmin + dmax <= n - 1 else dmax * (n - dmax - 1)
        from math import comb

        expected = 2 * (k - 1) * comb(n, k) * base ** (k / 2)
        assert math.isclose(as_float, expected, rel_tol=1e-9)


@given(connected_graphs(min_n=2, max_n=7))
def test_branch_bases_coincide_on_the_boundary(g):
    from steinergut import degree_profile

    prof = degree_profile(g)
    n, dmin, dmax = g.n, prof.min_degree, prof.max_degree
    if dmin + dmax == n - 1:
        assert dmin * (n - dmin - 1) == dmax * (n - dmax - 1)


def test_prop21_lower_tight_on_kn_minus_matching():
    from math import comb

    g = from_edge_list(6, [(i, j) for i in range(6) for j in range(i + 1, 6)
                           if (i, j) not in {(0, 1), (2, 3), (4, 5)}])
    assert steiner_gutman(g, 3) == 2 * 4**3 * comb(6, 3)
    _, lo = prop21(g, 3)
    assert lo.case_label == "min_deg>=2" and lo.tight
