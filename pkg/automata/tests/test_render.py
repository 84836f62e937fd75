import re
import tempfile
from pathlib import Path

from django.test import SimpleTestCase, override_settings

from automata.compgraph import build_computation_graph
from automata.execution import show_transitions
from automata.models import EMP, make_ndfa
from automata.render import (
    DotDocument,
    cgraph_summary,
    cgraph_to_dot,
    format_trace,
    machine_to_dot,
    merge_labels,
)

from .machines import build_ab_star, build_m, word

EDGE_LINE = re.compile(r"^\s*(\S+) -> (\S+)(?: \[(.*)\])?$")
NODE_LINE = re.compile(r"^\s*(\S+) \[(.*)\]$")
ATTRIBUTE = re.compile(r'(\w+)=("(?:[^"\\]|\\.)*"|[^\s\]]+)')


def _unquote(value):
    return value[1:-1] if value.startswith('"') else value


def _attrs(text):
    return {key: _unquote(value) for key, value in ATTRIBUTE.findall(text or "")}


def parse_dot(text):
    """DOT の本文からノードと辺を取り出す（graph / node / edge の既定属性行は除く）。"""
    nodes, edges = {}, {}
    for line in text.splitlines():
        if match := EDGE_LINE.match(line):
            source, target, attrs = match.groups()
            edges[(_unquote(source), _unquote(target))] = _attrs(attrs)
        elif match := NODE_LINE.match(line):
            name, attrs = match.groups()
            if name in ("graph", "node", "edge"):
                continue
            nodes[_unquote(name)] = _attrs(attrs)
    return nodes, edges


class MachineToDotTests(SimpleTestCase):
    def test_ab_star(self):
        nodes, edges = parse_dot(machine_to_dot(build_ab_star()).text)
        self.assertEqual(set(nodes), {"S", "F", "ds"})
        self.assertEqual(nodes["S"]["color"], "forestgreen")
        self.assertEqual(nodes["F"]["shape"], "doublecircle")
        self.assertEqual(nodes["ds"]["shape"], "circle")
        self.assertEqual(
            {pair: attrs["label"] for pair, attrs in edges.items()},
            {
                ("S", "F"): "a",
                ("S", "ds"): "b",
                ("F", "F"): "b",
                ("F", "ds"): "a",
                ("ds", "ds"): "a, b",
            },
        )

    def test_single_state_without_rules(self):
        m = make_ndfa(["S"], ["a"], "S", [], [])
        nodes, edges = parse_dot(machine_to_dot(m).text)
        self.assertEqual(list(nodes), ["S"])
        self.assertEqual(edges, {})

    def test_branching_ndfa(self):
        nodes, edges = parse_dot(machine_to_dot(build_m()).text)
        self.assertEqual(len(nodes), 8)
        self.assertEqual(len(edges), 10)
        self.assertEqual(nodes["S"]["shape"], "doublecircle")
        epsilon = [pair for pair, attrs in edges.items() if attrs["label"] == "ε"]
        self.assertEqual(sorted(epsilon), [("D", "S"), ("E", "S")])

    def test_output_is_deterministic(self):
        m = build_m()
        self.assertEqual(machine_to_dot(m).text, machine_to_dot(build_m()).text)

    def test_rankdir(self):
        self.assertIn("rankdir=LR", machine_to_dot(build_m()).text)
        self.assertIn("rankdir=TB", machine_to_dot(build_m(), rankdir="TB").text)
        with override_settings(FA_DOT_RANKDIR="BT"):
            self.assertIn("rankdir=BT", machine_to_dot(build_m()).text)


class MergeLabelsTests(SimpleTestCase):
    def test_labels_are_sorted_per_pair(self):
        m = make_ndfa(
            ["S"], ["a", "b"], "S", [], [("S", "b", "S"), ("S", EMP, "S"), ("S", "a", "S")]
        )
        self.assertEqual(
            merge_labels(rule.triple for rule in m.rules), {("S", "S"): "a, b, ε"}
        )


class ComputationGraphDotTests(SimpleTestCase):
    def test_rejected_word(self):
        cg = build_computation_graph(build_m(), word("a b b a b b"))
        nodes, edges = parse_dot(cgraph_to_dot(cg).text)
        self.assertEqual(set(nodes), {"S", "A", "B", "C", "D", "F", "G", "ds"})
        crimson = {name for name, attrs in nodes.items() if attrs["fillcolor"] == "crimson"}
        self.assertEqual(crimson, {"G", "ds"})
        self.assertEqual(nodes["G"]["fontcolor"], "white")
        self.assertEqual(nodes["A"]["fillcolor"], "white")
        dashed = {pair for pair, attrs in edges.items() if attrs["style"] == "dashed"}
        self.assertEqual(dashed, {("C", "ds"), ("D", "ds"), ("S", "ds")})
        self.assertEqual(len(edges), 11)
        self.assertTrue(all(attrs["color"] == "black" for attrs in edges.values()))

    def test_accepted_word(self):
        cg = build_computation_graph(build_m(), word("a b a a b a"))
        nodes, edges = parse_dot(cgraph_to_dot(cg).text)
        self.assertEqual(set(nodes), {"S", "A", "C", "E"})
        # 開始状態でもあるので、塗りつぶしに加えて緑の輪郭を残す
        self.assertEqual(nodes["S"]["fillcolor"], "crimson")
        self.assertEqual(nodes["S"]["color"], "forestgreen")
        self.assertEqual(set(edges), {("S", "A"), ("A", "C"), ("C", "E"), ("E", "S")})
        self.assertEqual(edges[("E", "S")]["label"], "ε")

    def test_empty_word_shows_only_start(self):
        cg = build_computation_graph(build_m(), ())
        nodes, edges = parse_dot(cgraph_to_dot(cg).text)
        self.assertEqual(list(nodes), ["S"])
        self.assertEqual(edges, {})

    def test_edges_are_machine_edges(self):
        m = build_m()
        _, machine_edges = parse_dot(machine_to_dot(m).text)
        cg = build_computation_graph(m, word("a b b a b b"))
        _, cg_edges = parse_dot(cgraph_to_dot(cg).text)
        for pair, attrs in cg_edges.items():
            if attrs["style"] == "solid":
                self.assertIn(pair, machine_edges)

    def test_output_is_byte_identical(self):
        first = cgraph_to_dot(build_computation_graph(build_m(), word("a b b a b b")))
        second = cgraph_to_dot(build_computation_graph(build_m(), word("a b b a b b")))
        self.assertEqual(first.text.encode(), second.text.encode())


class SummaryTests(SimpleTestCase):
    def test_rejected_word(self):
        cg = build_computation_graph(build_m(), word("a b b a b b"))
        self.assertEqual(
            cgraph_summary(cg),
            "verdict: reject\n"
            "end states: G, ds\n"
            "edges: 8\n"
            "dead edges: C -b-> ds, D -b-> ds, S -b-> ds",
        )

    def test_accepted_word(self):
        cg = build_computation_graph(build_m(), word("a b a a b a"))
        self.assertEqual(
            cgraph_summary(cg),
            "verdict: accept\nend states: S\nedges: 4\ndead edges: none",
        )


class FormatTraceTests(SimpleTestCase):
    def test_dfa_run(self):
        trace = show_transitions(build_ab_star(), word("a b"))
        self.assertEqual(format_trace(trace), ["(a b) S", "(b) F", "() F", "accept"])

    def test_empty_word(self):
        trace = show_transitions(build_m(), ())
        self.assertEqual(format_trace(trace), ["() S", "accept"])


class DotDocumentTests(SimpleTestCase):
    def test_write_uses_utf8_and_lf(self):
        document = machine_to_dot(build_m())
        with tempfile.TemporaryDirectory() as directory:
            path = document.write(Path(directory) / "m.dot")
            data = path.read_bytes()
        self.assertNotIn(b"\r\n", data)
        self.assertEqual(data.decode("utf-8"), document.text)
        self.assertIn("ε".encode("utf-8"), data)

    def test_str(self):
        self.assertEqual(str(DotDocument("digraph {}\n")), "digraph {}\n")
