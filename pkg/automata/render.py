# automata/render.py

"""
automata.render モジュール

機械の遷移図と計算グラフを DOT 形式に変換する（graphviz パッケージで生成）。
レイアウトは外部の DOT レンダラーに任せ、座標は出力しない。

表示の約束:
- 開始状態: 緑（forestgreen）の輪郭
- 最終状態: 二重丸（doublecircle）
- 計算が終わる状態: 深紅（crimson）で塗りつぶし、文字は白
- 死状態への辺: 黒の破線、それ以外は黒の実線
- 同じ端点の辺はラベルをソートしてカンマ区切りで一本にまとめる
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path

import graphviz
from django.conf import settings

from .compgraph import CGEdge, ComputationGraph
from .execution import Trace
from .models import Label, Machine

START_COLOR = "forestgreen"
HIGHLIGHT_COLOR = "crimson"
EPSILON_GLYPH = "ε"


@dataclass(frozen=True)
class DotDocument:
    text: str

    def write(self, path: str | Path) -> Path:
        target = Path(path)
        target.write_text(self.text, encoding="utf-8", newline="\n")
        return target

    def __str__(self) -> str:
        return self.text


def dot_label(label: Label) -> str:
    return EPSILON_GLYPH if label.is_epsilon else label.symbol


def _digraph(name: str, rankdir: str | None) -> graphviz.Digraph:
    return graphviz.Digraph(
        name,
        graph_attr={"rankdir": rankdir or settings.FA_DOT_RANKDIR},
        node_attr={"shape": "circle"},
    )


def _state_attrs(machine: Machine, state: str) -> dict[str, str]:
    attrs = {"shape": "doublecircle" if machine.is_final(state) else "circle"}
    if state == machine.start:
        attrs["color"] = START_COLOR
        attrs["penwidth"] = "2"
    else:
        attrs["color"] = "black"
    return attrs


def merge_labels(
    triples: Iterable[tuple[str, Label, str]],
) -> dict[tuple[str, str], str]:
    """同じ (from, to) の辺のラベルをまとめる。キーはソート済み。"""
    grouped: defaultdict[tuple[str, str], set[str]] = defaultdict(set)
    for from_state, label, to_state in triples:
        grouped[(from_state, to_state)].add(dot_label(label))
    return {pair: ", ".join(sorted(grouped[pair])) for pair in sorted(grouped)}


def machine_to_dot(machine: Machine, rankdir: str | None = None) -> DotDocument:
    """機械の遷移図を DOT にする。"""
    dot = _digraph("machine", rankdir)
    for state in sorted(machine.states):
        dot.node(state, **_state_attrs(machine, state))
    for (from_state, to_state), label in merge_labels(
        rule.triple for rule in machine.rules
    ).items():
        dot.edge(from_state, to_state, label=label)
    return DotDocument(dot.source)


def cgraph_nodes(cg: ComputationGraph) -> list[str]:
    nodes = {cg.machine.start}
    for edge in cg.edges:
        nodes.update((edge.from_state, edge.to_state))
    return sorted(nodes)


def cgraph_to_dot(cg: ComputationGraph, rankdir: str | None = None) -> DotDocument:
    """計算グラフを DOT にする。"""
    dot = _digraph("computation_graph", rankdir)
    for state in cgraph_nodes(cg):
        attrs = _state_attrs(cg.machine, state)
        attrs["style"] = "filled"
        if state in cg.highlighted:
            attrs.update(fillcolor=HIGHLIGHT_COLOR, fontcolor="white")
        else:
            attrs.update(fillcolor="white", fontcolor="black")
        dot.node(state, **attrs)

    # 死状態への辺と機械の辺は行き先が異なるので、端点ごとの統合で混ざらない
    dead_pairs = {(edge.from_state, edge.to_state) for edge in cg.edges if edge.to_dead}
    merged = merge_labels(edge.triple for edge in cg.edges)
    for (from_state, to_state), label in merged.items():
        style = "dashed" if (from_state, to_state) in dead_pairs else "solid"
        dot.edge(from_state, to_state, label=label, style=style, color="black")
    return DotDocument(dot.source)


def _edge_text(edge: CGEdge) -> str:
    return f"{edge.from_state} -{edge.label}-> {edge.to_state}"


def cgraph_summary(cg: ComputationGraph) -> str:
    """計算グラフの要約（判定・計算が終わる状態・使われた辺の数・死状態への辺）。"""
    dead_edges = ", ".join(_edge_text(edge) for edge in cg.dead_edges) or "none"
    lines = [
        f"verdict: {cg.verdict}",
        f"end states: {', '.join(sorted(cg.highlighted))}",
        f"edges: {len(cg.machine_edges)}",
        f"dead edges: {dead_edges}",
    ]
    return "\n".join(lines)


def format_trace(trace: Trace) -> list[str]:
    return [str(config) for config in trace.steps] + [str(trace.verdict)]
