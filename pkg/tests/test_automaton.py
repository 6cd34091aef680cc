import networkx as nx
import pytest
from hypothesis import assume, given

from ncgrowth.automaton import (EXPONENTIAL, GuardError, build_ufnarovski,
                                circuit_chain_depth, count_normal_words,
                                enumerate_words_bruteforce, has_shared_circuits,
                                simple_circuits, strongly_connected_components,
                                to_dot, to_json)
from ncgrowth.catalog import example52, free, two_cycle_tail, xx_algebra, yx_algebra

from strategies import monomial_presentations


def _nx(g):
    G = nx.MultiDiGraph()
    G.add_nodes_from(range(g.n_states))
    for u, v, a in g.transitions:
        G.add_edge(u, v, key=a)
    return G


def test_xx_automaton():
    g = build_ufnarovski(xx_algebra())
    assert g.n_states == 2
    assert sorted((u, v) for u, v, _ in g.transitions) == [(0, 1), (1, 0), (1, 1)]
    assert [c.total for c in count_normal_words(g, 8)] == [1, 2, 3, 5, 8, 13, 21, 34, 55]


def test_yx_counts_are_linear():
    g = build_ufnarovski(yx_algebra())
    assert [c.total for c in count_normal_words(g, 10)] == list(range(1, 12))


def test_free_has_vertex_states():
    g = build_ufnarovski(free(3))
    assert g.state_len == 0 and g.n_states == 1
    assert [c.total for c in count_normal_words(g, 5)] == [3 ** n for n in range(6)]


@given(monomial_presentations())
def test_counts_match_bruteforce(mp):
    g = build_ufnarovski(mp)
    auto = count_normal_words(g, 7)
    for n in range(8):
        assert enumerate_words_bruteforce(mp, n).counts == auto[n].counts


@given(monomial_presentations())
def test_scc_matches_networkx(mp):
    g = build_ufnarovski(mp)
    ours = {frozenset(c) for c in strongly_connected_components(g.n_states, g.successors)}
    theirs = {frozenset(c) for c in nx.strongly_connected_components(_nx(g))}
    assert ours == theirs


@given(monomial_presentations(vmax=3, amax=4))
def test_simple_circuits_match_networkx(mp):
    g = build_ufnarovski(mp)
    G = nx.DiGraph()
    G.add_nodes_from(range(g.n_states))
    G.add_edges_from((u, v) for u, v, _ in g.transitions)
    mult = {}
    for u, v, _ in g.transitions:
        mult[(u, v)] = mult.get((u, v), 0) + 1
    expected = 0
    for cyc in nx.simple_cycles(G):
        k = 1
        for i in range(len(cyc)):
            k *= mult[(cyc[i], cyc[(i + 1) % len(cyc)])]
        expected += k
        assume(expected <= 5000)
    assert len(simple_circuits(g)) == expected


@given(monomial_presentations())
def test_shared_circuits_iff_exponential(mp):
    g = build_ufnarovski(mp)
    shared = has_shared_circuits(g)
    assert shared == (circuit_chain_depth(g) == EXPONENTIAL)
    counts = [c.total for c in count_normal_words(g, 60)]
    if not shared:
        # polynomial bound of degree depth - 1
        d = circuit_chain_depth(g)
        assert counts[60] <= (61 ** max(d - 1, 0)) * 10 ** 4


@pytest.mark.parametrize("mp, depth", [(example52(), 2), (two_cycle_tail(), 1),
                                       (yx_algebra(), 2), (free(1), 1),
                                       (xx_algebra(), EXPONENTIAL)])
def test_chain_depth(mp, depth):
    assert circuit_chain_depth(build_ufnarovski(mp)) == depth


def test_circuit_guard():
    with pytest.raises(GuardError):
        simple_circuits(build_ufnarovski(free(4)), limit=2)


def test_bruteforce_guard():
    with pytest.raises(GuardError):
        enumerate_words_bruteforce(free(2), 20)


def test_exports():
    g = build_ufnarovski(xx_algebra())
    assert to_dot(g).startswith("digraph")
    assert '"arrow": "y"' in to_json(g)
