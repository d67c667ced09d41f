import math

import pytest

from spectral_turan import (
    Graph,
    Verdict,
    chromatic_number,
    complete_graph,
    complete_multipartite,
    contains_subgraph,
    count_cliques,
    cycle_graph,
    fact1_check,
    fact1_rhs,
    fact2_check,
    fact3_check,
    gnp,
    proof_chain_check,
    spex_scan,
    theorem1_check,
    theorem1_params,
    theorem2_gap,
    turan_graph,
)

from oracles import brute_contains_injection, brute_spex, k100_minus_50_edges, petersen


# ---------------------------------------------------------------------------
# clique lower bound from the spectral radius
# ---------------------------------------------------------------------------

def test_fact1_rhs_hand_values():
    assert abs(fact1_rhs(4, 3, 3.0) - 8 / 27) <= 1e-12
    assert abs(fact1_rhs(5, 2, 2.0) - (-5 / 12)) <= 1e-12
    for n, r in [(10, 3), (7, 2), (50, 4)]:
        assert abs(fact1_rhs(n, r, n * (1 - 1 / r))) <= 1e-9


def test_fact1_check_examples():
    rep = fact1_check(complete_graph(4), 3)
    assert rep.verdict is Verdict.CONFIRMED
    assert rep.kr == 4
    assert abs(rep.quantities["rhs_low"] - 8 / 27) <= 1e-6

    rep = fact1_check(cycle_graph(5), 2)
    assert rep.verdict is Verdict.CONFIRMED
    assert rep.kr == 5
    assert rep.quantities["rhs_low"] < 0

    rep = fact1_check(Graph.empty(10), 2)
    assert rep.verdict is Verdict.CONFIRMED
    assert rep.kr == 0
    assert rep.quantities["rhs_low"] < 0


def test_fact1_interval_honesty():
    for g in [gnp(20, 0.5, 3), turan_graph(15, 4), complete_graph(9)]:
        for r in (2, 3):
            coarse = fact1_check(g, r, tol=1e-10)
            fine = fact1_check(g, r, tol=1e-11)
            assert coarse.verdict is fine.verdict


def test_chain_interval_honesty():
    for g in [complete_graph(12), turan_graph(12, 4), gnp(15, 0.7, 1)]:
        for c in (0.05, 0.2):
            coarse = proof_chain_check(g, 3, c, tol=1e-10)
            fine = proof_chain_check(g, 3, c, tol=1e-11)
            assert coarse.verdict is fine.verdict


def test_fact1_domain():
    with pytest.raises(ValueError):
        fact1_check(complete_graph(3), 1)


# ---------------------------------------------------------------------------
# parameter arithmetic
# ---------------------------------------------------------------------------

def test_theorem1_params_examples():
    s, t, pre = theorem1_params(3, 0.3, 10**6)
    assert s == 0 and not pre

    _, t, _ = theorem1_params(3, 0.3, 100)
    assert abs(t - 100**0.91) <= 1e-9 * 100**0.91


def test_theorem1_params_precondition_boundary_huge_n():
    # (c/r^r)^r = 1/729 at r=3, c=3, so the precondition flips at ln n = 729
    n_above = 2**1052  # ln = 729.15...
    n_below = 2**1051  # ln = 728.46...
    s, _, pre = theorem1_params(3, 3.0, n_above)
    assert pre and s == 1
    s, _, pre = theorem1_params(3, 3.0, n_below)
    assert not pre and s == 0


def test_theorem1_params_monotone():
    # s_target nondecreasing in c
    n = 2**1060
    prev = -1
    for c in [0.5, 1.0, 1.5, 2.0, 2.5, 3.0]:
        s, _, _ = theorem1_params(3, c, n)
        assert s >= prev
        prev = s
    # s_target nondecreasing in n
    prev = -1
    for k in [1040, 1051, 1052, 1100, 1500]:
        s, _, _ = theorem1_params(3, 3.0, 2**k)
        assert s >= prev
        prev = s
    # t_target decreasing in c
    prev = math.inf
    for c in [0.1, 0.3, 0.5, 0.7, 0.9]:
        _, t, _ = theorem1_params(3, c, 100)
        assert t < prev
        prev = t


def test_theorem1_params_floor_positive_when_precondition_holds():
    for c, n in [(3.0, 2**1052), (2.0, 2**3000), (1.0, 2**30000)]:
        s, _, pre = theorem1_params(3, c, n)
        if pre:
            assert s >= 1


def test_theorem1_check_vacuous_paths():
    # K9 satisfies the spectral hypothesis at c = 0.3 but fails the precondition
    rep = theorem1_check(complete_graph(9), 3, 0.3)
    assert rep.verdict is Verdict.VACUOUS
    assert rep.hypothesis_satisfied
    assert "precondition" in rep.notes

    # hypothesis fails outright
    rep = theorem1_check(turan_graph(10, 2), 3, 0.01)
    assert rep.verdict is Verdict.VACUOUS
    assert not rep.hypothesis_satisfied

    # c outside (0, 1/(r-1)) is flagged, not rejected
    rep = theorem1_check(complete_graph(9), 3, 0.9)
    assert rep.verdict is Verdict.VACUOUS
    assert "outside" in rep.notes


# ---------------------------------------------------------------------------
# proof chain
# ---------------------------------------------------------------------------

def test_proof_chain_examples():
    rep = proof_chain_check(complete_graph(9), 3, 0.3)
    assert rep.verdict is Verdict.CONFIRMED
    assert rep.kr == 84
    assert abs(rep.quantities["bound_strict"] - 8.1) <= 1e-9

    rep = proof_chain_check(turan_graph(10, 2), 3, 0.01)
    assert rep.verdict is Verdict.VACUOUS  # mu = 5 < 5.1

    rep = proof_chain_check(complete_graph(12), 4, 0.2)
    assert rep.verdict is Verdict.CONFIRMED
    assert rep.kr == 495
    assert abs(rep.quantities["bound_strict"] - 32.4) <= 1e-9


def test_proof_chain_never_violates_on_complete_graphs():
    for n in range(6, 26):
        for r in (3, 4):
            c = 0.9 * (1 / (r - 1) - 1 / n)
            rep = proof_chain_check(complete_graph(n), r, c)
            assert rep.verdict is Verdict.CONFIRMED
            assert rep.hypothesis_satisfied


# ---------------------------------------------------------------------------
# clique density forces a multipartite subgraph
# ---------------------------------------------------------------------------

def test_fact2_desk_instance():
    g = k100_minus_50_edges()
    assert g.edge_count() == 4900
    rep = fact2_check(g, 2, 0.49)
    assert rep.verdict is Verdict.CONFIRMED
    assert rep.quantities["s_target"] == 1
    assert rep.quantities["t_part"] == 11
    assert rep.witness is not None
    assert sorted(rep.witness.sizes()) == [1, 11]


def test_fact2_vacuous_paths():
    rep = fact2_check(cycle_graph(5), 2, 0.49)
    assert rep.verdict is Verdict.VACUOUS  # k_2 = 5 < 12.25

    # r = 3 at desk scale: c <= 1/6 forces ln n >= 216
    rep = fact2_check(complete_graph(30), 3, 1 / 6)
    assert rep.verdict is Verdict.VACUOUS
    assert "precondition" in rep.notes


def test_fact2_search_parameters_monotone_in_smaller_sizes():
    # the searched size is the floor; any smaller K_2(s', t) follows by
    # deleting vertices from the found witness
    g = k100_minus_50_edges()
    rep = fact2_check(g, 2, 0.49)
    w = rep.witness
    big = max(w.parts, key=len)
    assert len(big) >= 11


# ---------------------------------------------------------------------------
# Turan edge bound
# ---------------------------------------------------------------------------

def test_fact3_examples():
    rep = fact3_check(7, 3)
    assert rep.verdict is Verdict.CONFIRMED
    assert rep.quantities["edges"] == 16
    assert rep.quantities["lhs_8re"] == 384
    assert rep.quantities["rhs_4r1nn_rr"] == 383  # slack below 1: integers matter

    assert fact3_check(6, 2).verdict is Verdict.CONFIRMED
    assert fact3_check(5, 5).verdict is Verdict.CONFIRMED
    assert fact3_check(0, 1).verdict is Verdict.CONFIRMED


def test_fact3_tightness_on_balanced_instances():
    # equality of 2e = (1 - 1/r) n^2 when r divides n; slack is exactly r^2/(4r)
    rep = fact3_check(12, 3)
    e = rep.quantities["edges"]
    assert 2 * e * 3 == 2 * 12 * 12  # 2e = (2/3) * 144


# ---------------------------------------------------------------------------
# chromatic number and containment
# ---------------------------------------------------------------------------

def test_chromatic_examples():
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(complete_graph(4)) == 4
    assert chromatic_number(petersen()) == 3
    assert chromatic_number(complete_multipartite((3, 3))) == 2
    assert chromatic_number(Graph.empty(5)) == 1
    assert chromatic_number(Graph.empty(0)) == 0


def test_chromatic_at_least_clique_number():
    for g in [petersen(), gnp(10, 0.5, 2), turan_graph(9, 3), cycle_graph(7)]:
        clique = max(r for r in range(1, g.n + 1) if count_cliques(g, r) > 0)
        assert chromatic_number(g) >= clique


def test_chromatic_domain():
    with pytest.raises(ValueError):
        chromatic_number(Graph.empty(17))


def test_contains_examples():
    assert not contains_subgraph(complete_multipartite((3, 3)), complete_graph(3))
    assert contains_subgraph(petersen(), cycle_graph(5))
    assert not contains_subgraph(cycle_graph(5), complete_multipartite((2, 2)))


def test_contains_agrees_with_injection_enumerator():
    patterns = [
        complete_graph(3),
        complete_graph(4),
        cycle_graph(4),
        cycle_graph(5),
        complete_multipartite((3, 1)),
        Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]),  # path
    ]
    hosts = [gnp(7, p, s) for p in (0.3, 0.6) for s in range(3)]
    hosts += [cycle_graph(7), turan_graph(7, 3), complete_graph(6)]
    for g in hosts:
        for f in patterns:
            assert contains_subgraph(g, f) == brute_contains_injection(g, f)


def test_contains_domain():
    with pytest.raises(ValueError):
        contains_subgraph(complete_graph(12), Graph.empty(11))


# ---------------------------------------------------------------------------
# spectral extremal scan and gap
# ---------------------------------------------------------------------------

def test_spex_triangle_free_values():
    assert abs(spex_scan(4, complete_graph(3)).max_mu - 2.0) <= 1e-6
    assert abs(spex_scan(5, complete_graph(3)).max_mu - math.sqrt(6)) <= 1e-6
    assert abs(spex_scan(6, complete_graph(3)).max_mu - 3.0) <= 1e-6


def test_spex_matches_brute_force_small():
    for f in [complete_graph(3), complete_graph(4), cycle_graph(5)]:
        for n in (1, 2, 3, 4, 5):
            assert abs(spex_scan(n, f).max_mu - brute_spex(n, f)) <= 1e-8


def test_spex_witness_is_f_free():
    res = spex_scan(6, complete_graph(3))
    assert not contains_subgraph(res.witness, complete_graph(3))


def test_spex_domain():
    with pytest.raises(ValueError):
        spex_scan(9, complete_graph(3))
    with pytest.raises(ValueError):
        spex_scan(4, Graph.empty(1))  # contained in every graph


def test_theorem2_gap_examples():
    rep = theorem2_gap(6, complete_graph(3))
    assert rep.verdict is Verdict.CONFIRMED
    assert abs(rep.quantities["lower"] - 0.5) <= 1e-9
    assert abs(rep.quantities["upper"] - 0.5) <= 1e-9
    assert abs(rep.quantities["gap"]) <= 1e-9
    assert rep.quantities["lower"] >= 0.5 - 2 / (4 * 36) - 1e-9

    rep = theorem2_gap(5, complete_graph(3))
    assert abs(rep.quantities["lower"] - math.sqrt(6) / 5) <= 1e-9
    assert abs(rep.quantities["upper"] - math.sqrt(6) / 5) <= 1e-9


def test_theorem2_gap_rejects_bipartite_pattern():
    with pytest.raises(ValueError):
        theorem2_gap(6, complete_multipartite((2, 2)))


# ---------------------------------------------------------------------------
# no-violation meta-invariant on a mixed mini corpus
# ---------------------------------------------------------------------------

def test_no_violations_across_checkers():
    corpus = [gnp(18, p, s) for p in (0.2, 0.5, 0.8) for s in (1, 2)]
    corpus += [turan_graph(n, r) for n in (10, 17) for r in (2, 3, 5)]
    corpus += [complete_graph(9), petersen()]
    for g in corpus:
        for r in (2, 3, 4):
            assert fact1_check(g, r).verdict is not Verdict.VIOLATION
        for c in (0.05, 0.3):
            assert proof_chain_check(g, 3, c).verdict is not Verdict.VIOLATION
            assert theorem1_check(g, 3, c).verdict is not Verdict.VIOLATION
        assert fact2_check(g, 2, 0.49).verdict is not Verdict.VIOLATION
    for n in range(0, 40):
        for r in range(1, 8):
            assert fact3_check(n, r).verdict is Verdict.CONFIRMED
