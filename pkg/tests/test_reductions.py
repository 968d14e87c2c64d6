import random

import pytest

from isisor.bruteforce import WordInstance, solve_bfs, word_reachability
from isisor.errors import FormatError, InvalidInputError
from isisor.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
)
from isisor.analysis import is_bipartite
from isisor.isomorphism import brute_isomorphic, find_induced_copy, is_induced_copy
from isisor.reductions import (
    balanced_biclique_gadget,
    induced_subgraph_gadget,
    instance_to_text,
    parse_instance_text,
    word_gadget,
)
from isisor.rules import ReconfigInstance, Rule, verify_sequence
from corpus import random_graph


def fs(*v):
    return frozenset(v)


def word(symbols, relation, src, dst):
    return WordInstance(tuple(symbols), frozenset(relation), tuple(src), tuple(dst))


FULL_AB = [("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")]


class TestWordGadget:
    def test_two_layer_two_symbol_sizes(self):
        w = word("ab", FULL_AB, "aa", "bb")
        out = word_gadget(w, complete_graph(1), 2)
        inst = out.instance
        assert inst.host.n == 8
        assert (inst.pattern.n, inst.pattern.m) == (4, 0)
        assert out.parameters == {
            "budget": 2,
            "copies": 2,
            "copies_exponent": 1,
            "layers": 2,
            "alphabet_size": 2,
            "unit_vertices": 1,
        }
        assert inst.rule == Rule("jump", 2)

    def test_copies_follow_power_of_two_rule(self):
        w = word("ab", FULL_AB, "a", "b")
        for unit, budget, want in [
            (complete_graph(1), 2, 2),
            (complete_graph(1), 3, 2),
            (complete_graph(1), 4, 4),
            (complete_graph(2), 4, 2),
            (complete_graph(2), 5, 2),
            (complete_graph(2), 8, 4),
        ]:
            out = word_gadget(w, unit, budget)
            assert out.parameters["copies"] == want
            assert out.instance.host.n == 2 * want * unit.n

    def test_equal_words_give_yes_instance(self):
        w = word("ab", FULL_AB, "ab", "ab")
        out = word_gadget(w, complete_graph(1), 2)
        assert out.instance.source == out.instance.target
        ok, _ = solve_bfs(out.instance)
        assert ok

    def test_alternation_swap_gives_no_instance(self):
        w = word("ab", [("a", "b"), ("b", "a")], "ab", "ba")
        out = word_gadget(w, complete_graph(1), 2)
        assert not word_reachability(w)
        ok, _ = solve_bfs(out.instance)
        assert not ok

    def test_slide_variant_carries_rule_kind(self):
        w = word("ab", FULL_AB, "aa", "bb")
        out = word_gadget(w, complete_graph(1), 2, kind="slide")
        assert out.instance.rule == Rule("slide", 2)
        ok, seq = solve_bfs(out.instance)
        assert ok and verify_sequence(out.instance, seq).ok

    def test_preconditions(self):
        w = word("ab", FULL_AB, "a", "a")
        with pytest.raises(InvalidInputError):
            word_gadget(w, complete_graph(2), 3)
        with pytest.raises(InvalidInputError):
            word_gadget(w, empty_graph(2), 4)
        with pytest.raises(InvalidInputError):
            word_gadget(w, Graph(0), 2)

    def test_provenance_covers_every_host_vertex(self):
        w = word("abc", [(x, y) for x in "abc" for y in "abc"], "abc", "cba")
        out = word_gadget(w, complete_graph(2), 4)
        host = out.instance.host
        assert sorted(out.provenance) == list(range(host.n))
        blobs = {}
        for v, tag in out.provenance.items():
            blobs.setdefault(tag.rsplit(".", 1)[0], set()).add(v)
        assert len(blobs) == 3 * 3
        assert all(len(b) == 2 * 2 for b in blobs.values())

    def test_endpoints_select_source_and_target_blobs(self):
        w = word("ab", FULL_AB, "ab", "ba")
        out = word_gadget(w, complete_graph(1), 2)
        by_tag = {}
        for v, tag in out.provenance.items():
            layer, sym, _ = tag.split(".")
            by_tag.setdefault((layer, sym), set()).add(v)
        assert out.instance.source == frozenset(
            by_tag[("layer1", "a")] | by_tag[("layer2", "b")]
        )
        assert out.instance.target == frozenset(
            by_tag[("layer1", "b")] | by_tag[("layer2", "a")]
        )

    def test_endpoints_induce_the_pattern(self):
        rng = random.Random(51)
        for _ in range(25):
            rel = [
                (x, y)
                for x in "ab"
                for y in "ab"
                if rng.random() < 0.7
            ] + [("a", "a")]
            n = rng.randint(1, 3)
            ws = wt = ("a",) * n
            w = word("ab", rel, ws, wt)
            unit = complete_graph(rng.choice((1, 2)))
            out = word_gadget(w, unit, 2 * unit.n)
            inst = out.instance
            assert is_induced_copy(inst.host, inst.pattern, inst.source)
            assert is_induced_copy(inst.host, inst.pattern, inst.target)


class TestInducedSubgraphGadget:
    def test_triangle_contains_an_edge(self):
        out = induced_subgraph_gadget(complete_graph(3), complete_graph(2), 2)
        inst = out.instance
        assert inst.host.n == 21
        assert inst.rule == Rule("jump", 6)
        assert brute_isomorphic(inst.pattern, Graph(8, [(0, 1), (2, 3), (4, 5), (6, 7)]))
        ok, seq = solve_bfs(inst)
        assert ok and verify_sequence(inst, seq).ok

    def test_edgeless_graph_contains_no_edge(self):
        out = induced_subgraph_gadget(empty_graph(3), complete_graph(2), 1)
        ok, _ = solve_bfs(out.instance)
        assert not ok

    def test_host_size_formula(self):
        rng = random.Random(52)
        for _ in range(15):
            gp = random_graph(rng, rng.randint(1, 5), rng.random())
            hp = random_graph(rng, rng.randint(1, 2), rng.random())
            out = induced_subgraph_gadget(gp, hp, 1)
            assert out.instance.host.n == gp.n + 9 * hp.n
            assert out.instance.rule.k == 4 * hp.n - 1

    def test_anchor_size_bounds(self):
        for bad in (0, 5, -2):
            with pytest.raises(InvalidInputError):
                induced_subgraph_gadget(complete_graph(3), complete_graph(2), bad)
        with pytest.raises(InvalidInputError):
            induced_subgraph_gadget(Graph(0), complete_graph(2), 1)
        with pytest.raises(InvalidInputError):
            induced_subgraph_gadget(complete_graph(3), Graph(0), 1)

    def test_provenance_parts_and_endpoints(self):
        out = induced_subgraph_gadget(path_graph(3), complete_graph(1), 1)
        groups = {}
        for v, tag in out.provenance.items():
            groups.setdefault(tag, set()).add(v)
        assert sorted(out.provenance) == list(range(out.instance.host.n))
        assert len(groups["input"]) == 3
        assert len(groups["spare"]) == 1
        for part in ("hub_a", "hub_b", "wing_x", "wing_y"):
            assert len(groups[f"{part}.copy0"]) == 1
            assert len(groups[f"{part}.copy1"]) == 1
        src = groups["hub_a.copy0"] | groups["hub_a.copy1"]
        src |= groups["wing_y.copy0"] | groups["wing_y.copy1"]
        assert out.instance.source == frozenset(src)

    def test_endpoints_induce_the_pattern(self):
        rng = random.Random(53)
        for _ in range(20):
            gp = random_graph(rng, rng.randint(1, 4), rng.random())
            hp = random_graph(rng, rng.randint(1, 2), rng.random())
            mu = rng.randint(1, 2 * hp.n)
            inst = induced_subgraph_gadget(gp, hp, mu).instance
            assert is_induced_copy(inst.host, inst.pattern, inst.source)
            assert is_induced_copy(inst.host, inst.pattern, inst.target)

    def test_verdict_matches_direct_search(self):
        rng = random.Random(54)
        units = [complete_graph(1), complete_graph(2), empty_graph(2)]
        for _ in range(25):
            gp = random_graph(rng, rng.randint(1, 4), rng.random())
            hp = units[rng.randrange(len(units))]
            mu = rng.randint(1, 2 * hp.n)
            out = induced_subgraph_gadget(gp, hp, mu)
            want = find_induced_copy(gp, hp) is not None
            got, _ = solve_bfs(out.instance)
            assert got == want


class TestBalancedBicliqueGadget:
    def test_complete_bipartite_full_order(self):
        g = complete_bipartite(2, 2)
        out = balanced_biclique_gadget(g, fs(0, 1), fs(2, 3), 2)
        inst = out.instance
        assert inst.host.n == 12
        assert out.parameters == {
            "biclique_order": 2,
            "extra_copies": 0,
            "budget": 2,
            "anchor_size": 2,
            "block_size": 4,
        }
        assert inst.pattern == empty_graph(4)
        assert inst.rule == Rule("jump", 2)
        ok, seq = solve_bfs(inst)
        assert ok and verify_sequence(inst, seq).ok

    def test_perfect_matching_has_no_order_two_biclique(self):
        g = Graph(4, [(0, 2), (1, 3)])
        out = balanced_biclique_gadget(g, fs(0, 1), fs(2, 3), 2)
        ok, _ = solve_bfs(out.instance)
        assert not ok

    def test_single_edge_is_an_order_one_biclique(self):
        g = Graph(3, [(0, 1)])
        out = balanced_biclique_gadget(g, fs(0), fs(1, 2), 1)
        ok, _ = solve_bfs(out.instance)
        assert ok

    def test_order_bounds(self):
        g = complete_bipartite(2, 2)
        for bad in (0, 3):
            with pytest.raises(InvalidInputError):
                balanced_biclique_gadget(g, fs(0, 1), fs(2, 3), bad)
        with pytest.raises(InvalidInputError):
            balanced_biclique_gadget(complete_graph(3), fs(0, 1), fs(2), 1)

    def test_host_stays_bipartite(self):
        rng = random.Random(55)
        for _ in range(20):
            na, nb = rng.randint(1, 3), rng.randint(1, 3)
            cross = [
                (i, na + j)
                for i in range(na)
                for j in range(nb)
                if rng.random() < 0.5
            ]
            g = Graph(na + nb, cross)
            b = rng.randint(1, na)
            out = balanced_biclique_gadget(
                g, frozenset(range(na)), frozenset(range(na, na + nb)), b
            )
            assert is_bipartite(out.instance.host)[0]

    def test_provenance_and_block_sizes(self):
        g = complete_bipartite(3, 2)
        out = balanced_biclique_gadget(g, fs(0, 1, 2), fs(3, 4), 2)
        extra = out.parameters["extra_copies"]
        assert extra == 1
        groups = {}
        for v, tag in out.provenance.items():
            groups.setdefault(tag, set()).add(v)
        assert sorted(out.provenance) == list(range(out.instance.host.n))
        assert len(groups["side_a"]) == 3
        assert len(groups["side_b.copy0"]) == 2
        assert len(groups["side_b.copy1"]) == 2
        assert len(groups["start_block"]) == len(groups["target_block"]) == 6
        assert out.instance.source == frozenset(groups["start_block"])
        assert out.instance.target == frozenset(groups["target_block"])

    def test_cross_edges_are_flipped(self):
        g = Graph(2, [(0, 1)])
        out = balanced_biclique_gadget(g, fs(0), fs(1), 1)
        rev = {tag: v for v, tag in out.provenance.items()}
        assert not out.instance.host.has_edge(rev["side_a"], rev["side_b.copy0"])


class TestInstanceFormat:
    def sample(self):
        return ReconfigInstance(
            cycle_graph(4), empty_graph(2), fs(0, 2), fs(1, 3), Rule("jump", 2)
        )

    def test_golden_output(self):
        assert instance_to_text(self.sample()) == (
            "p graph 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n"
            "h p graph 2 0\nss 1 3\ntt 2 4\nr tj 2\n"
        )

    def test_provenance_written_as_comments(self):
        text = instance_to_text(self.sample(), provenance={0: "corner"})
        assert "c part 1 corner\n" in text

    def test_round_trip(self):
        insts = [
            self.sample(),
            ReconfigInstance(
                path_graph(5),
                complete_graph(2),
                fs(0, 1),
                fs(3, 4),
                Rule("slide", 1),
            ),
        ]
        for inst in insts:
            back = parse_instance_text(instance_to_text(inst))
            assert back == inst

    def test_gadget_outputs_round_trip(self):
        w = word("ab", FULL_AB, "ab", "ba")
        for out in (
            word_gadget(w, complete_graph(1), 2),
            induced_subgraph_gadget(complete_graph(3), complete_graph(2), 1),
            balanced_biclique_gadget(
                complete_bipartite(2, 2), fs(0, 1), fs(2, 3), 1
            ),
        ):
            text = instance_to_text(out.instance, provenance=out.provenance)
            assert parse_instance_text(text) == out.instance

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "p graph 1 0\nh p graph 1 0\nss 1\ntt 1\n",
            "p graph 1 0\nh p graph 1 0\nss 1\ntt 1\nr tj 1\nr tj 2\n",
            "p graph 1 0\nh p graph 1 0\nss 1\nss 1\ntt 1\nr tj 1\n",
            "p graph 1 0\nh p graph 1 0\nss 1\ntt 1\nr fly 1\n",
            "p graph 1 0\nh p graph 1 0\nss 2\ntt 1\nr tj 1\n",
            "p graph 2 0\nh p graph 1 0\nss 1 2\ntt 1\nr tj 1\n",
        ],
    )
    def test_malformed_inputs_rejected(self, text):
        with pytest.raises((FormatError, InvalidInputError)):
            parse_instance_text(text)
