import pydot

from paritydet.core import ACC_SINK, REJ_SINK, TOP, OnePairRabinNPA, ParityNPA
from paritydet.dot import export_dot
from paritydet.lir import determinise_parity_to_dpa
from paritydet.nht import determinise_parity_to_rabin
from paritydet.oracle import GenConfig, random_npa
from paritydet.rht import initial_rht, rht_step


def two_state_buchi():
    return OnePairRabinNPA(2, ["a"], {0}, {(0, "a", 0), (0, "a", 1), (1, "a", 1)},
                           {(0, "a", 1), (1, "a", 1)}, set())


def parse(text):
    graphs = pydot.graph_from_dot_data(text)
    assert graphs and len(graphs) == 1
    return graphs[0]


def test_rht_caption_snapshot():
    t = rht_step(initial_rht({0}), "a", two_state_buchi()).target
    text = export_dot(t)
    assert 'label="ε:{0,1} 0:{0,1} 00:{1}";' in text
    g = parse(text)
    assert len(g.get_edges()) == 2


def test_two_state_automaton_nodes():
    g = parse(export_dot(two_state_buchi()))
    names = {n.get_name() for n in g.get_nodes()} - {"node", "init"}
    assert names == {"q0", "q1"}


def test_top_node_rendered():
    p = ParityNPA(2, ["a"], {0}, {(0, "a", 1): 2, (1, "a", TOP): 1})
    g = parse(export_dot(p))
    assert "top" in {n.get_name() for n in g.get_nodes()}


def test_one_edge_per_state_and_letter():
    for seed in range(5):
        p = random_npa(GenConfig(n=3, c=4, letters=2, density=0.4, seed=seed))
        for d in (determinise_parity_to_rabin(p), determinise_parity_to_dpa(p)):
            g = parse(export_dot(d))
            edges = [e for e in g.get_edges() if e.get_source() != "init"]
            assert len(edges) == len(d.states) * len(d.alphabet)
            sinks = [s for s in d.states if s in (ACC_SINK, REJ_SINK)]
            assert len(g.get_nodes()) - 2 == len(d.states)  # minus "node" defaults and init
            assert len(sinks) <= 2


def test_output_is_deterministic():
    p = random_npa(GenConfig(n=3, c=3, letters=2, density=0.4, seed=1))
    assert export_dot(determinise_parity_to_dpa(p)) == export_dot(determinise_parity_to_dpa(p))
