# automata/compgraph.py

"""
automata.compgraph モジュール

機械と入力語から計算グラフ（computation graph）を構築する。

計算グラフのノードは機械の状態（必要なら新しい死状態を追加）、
辺は語を消費するいずれかの計算で使われた遷移である。
計算が終わる状態（入力を消費し切った状態）は強調表示される。

構築手順:
1. 計算木を幅優先で辿り、様相ごとに辺を生成する（computation_tree_to_cg_edges）
2. 重複した辺を除く
3. 特殊辺（SPECIAL）と同じ遷移を表す通常辺（REGULAR）を除く
4. 語が受理される場合は、受理計算一つ分の辺だけを残す（prune_on_accept）
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):  # type: ignore[no-redef]
        __str__ = str.__str__
        __format__ = str.__format__

from .execution import Configuration, Trace, Verdict, apply, applicable, show_transitions
from .models import Label, Machine, Rule, Word, check_word, fresh_dead_state

logger = logging.getLogger(__name__)


class EdgeKind(StrEnum):
    REGULAR = "regular"
    # 適用後に未消費入力が空になる辺、または死状態への辺。行き先を強調表示する
    SPECIAL = "special"


@dataclass(frozen=True, order=True)
class CGEdge:
    from_state: str
    label: Label
    to_state: str
    kind: EdgeKind = EdgeKind.REGULAR
    to_dead: bool = False

    @classmethod
    def regular(cls, rule: Rule) -> CGEdge:
        return cls(rule.from_state, rule.label, rule.to_state, EdgeKind.REGULAR)

    @classmethod
    def special(cls, rule: Rule) -> CGEdge:
        return cls(rule.from_state, rule.label, rule.to_state, EdgeKind.SPECIAL)

    @classmethod
    def dead(cls, state: str, symbol: str, dead: str) -> CGEdge:
        return cls(state, Label.read(symbol), dead, EdgeKind.SPECIAL, to_dead=True)

    @property
    def triple(self) -> tuple[str, Label, str]:
        return (self.from_state, self.label, self.to_state)

    @property
    def is_special(self) -> bool:
        return self.kind is EdgeKind.SPECIAL

    def with_kind(self, kind: EdgeKind) -> CGEdge:
        return CGEdge(self.from_state, self.label, self.to_state, kind, self.to_dead)


@dataclass(frozen=True)
class ComputationGraph:
    machine: Machine
    word: Word
    edges: frozenset[CGEdge]
    highlighted: frozenset[str]
    dead: str | None
    verdict: Verdict

    @property
    def dead_edges(self) -> tuple[CGEdge, ...]:
        return tuple(sorted(edge for edge in self.edges if edge.to_dead))

    @property
    def machine_edges(self) -> tuple[CGEdge, ...]:
        return tuple(sorted(edge for edge in self.edges if not edge.to_dead))


def edges_for_configuration(
    machine: Machine, config: Configuration, dead: str
) -> list[CGEdge]:
    """一つの様相から生成される計算グラフの辺を返す。

    - 未消費入力が空: 適用可能な EMP 規則の特殊辺のみ（死状態への辺は作らない）
    - 未消費入力の長さが 1: 最後の記号を読む規則の特殊辺 + EMP 規則の通常辺
    - 未消費入力の長さが 2 以上: 適用可能なすべての規則の通常辺

    入力が残っているのに辺が一つもない場合は死状態への辺だけを返し、
    EMP の辺しかない場合は死状態への辺を先頭に加える。
    """
    rules = [rule for rule in machine.rules if applicable(rule, config)]
    if config.is_consumed:
        return [CGEdge.special(rule) for rule in rules]

    if config.remaining == 1:
        edges = [CGEdge.special(rule) for rule in rules if not rule.label.is_epsilon]
        edges += [CGEdge.regular(rule) for rule in rules if rule.label.is_epsilon]
    else:
        edges = [CGEdge.regular(rule) for rule in rules]

    head = config.head
    assert head is not None
    if not edges:
        return [CGEdge.dead(config.state, head, dead)]
    if all(edge.label.is_epsilon for edge in edges):
        return [CGEdge.dead(config.state, head, dead), *edges]
    return edges


def _successors(edges: Sequence[CGEdge], config: Configuration) -> list[Configuration]:
    successors = []
    for edge in edges:
        if edge.to_dead or edge.from_state != config.state:
            continue
        if edge.label.is_epsilon:
            successors.append(Configuration(edge.to_state, config.word, config.offset))
        elif edge.label.symbol == config.head:
            successors.append(Configuration(edge.to_state, config.word, config.offset + 1))
    return successors


def next_configurations(
    edges: Sequence[CGEdge],
    frontier: Sequence[Configuration],
    visited: Iterable[Configuration],
) -> list[Configuration]:
    """辺の一覧から、次に探索する様相を frontier の順に求める。

    後続がすべて訪問済み（または後続なし）の様相は何も追加しない。
    追加した後続は同じ呼び出しの中で以降の様相に対して訪問済みとして扱う。
    死状態は探索しない（残りの入力は死状態で消費される）。
    """
    seen = set(visited)
    result: list[Configuration] = []
    for config in frontier:
        successors = _successors(edges, config)
        if all(successor in seen for successor in successors):
            continue
        result.extend(successors)
        seen.update(successors)
    return result


def remove_duplicate_edges(edges: Iterable[CGEdge]) -> list[CGEdge]:
    return list(dict.fromkeys(edges))


def computation_tree_to_cg_edges(
    machine: Machine,
    frontier: Sequence[Configuration],
    visited: Sequence[Configuration],
    dead: str | None = None,
) -> list[CGEdge]:
    """計算木を幅優先で辿り、各階層で生成された辺を順に連結して返す。

    Accumulator:
        frontier: 未探索の様相（現在の階層）
        visited: 探索済みの様相
    """
    dead = dead if dead is not None else fresh_dead_state(machine)
    to_visit = list(frontier)
    explored = list(visited)
    result: list[CGEdge] = []
    level = 0
    while True:
        new_edges = remove_duplicate_edges(
            edge
            for config in to_visit
            for edge in edges_for_configuration(machine, config, dead)
        )
        result.extend(new_edges)
        new_frontier = next_configurations(new_edges, to_visit, explored)
        logger.debug(
            "level %d: %d configurations, %d edges, %d next",
            level, len(to_visit), len(new_edges), len(new_frontier),
        )
        if not new_frontier:
            return result
        explored = to_visit + explored
        to_visit = new_frontier
        level += 1


def remove_redundant_edges(edges: Iterable[CGEdge]) -> list[CGEdge]:
    """特殊辺と同じ遷移を表す通常辺を除く（強調表示に必要なのは特殊辺）。"""
    edges = list(edges)
    special = {edge.triple for edge in edges if edge.is_special}
    return [edge for edge in edges if edge.is_special or edge.triple not in special]


def prune_on_accept(
    machine: Machine, word: Sequence[str], edges: Iterable[CGEdge]
) -> frozenset[CGEdge]:
    """語が受理される場合、受理計算一つで使われた辺だけを残す。

    受理計算の最後の遷移だけを特殊辺とし、それ以外は通常辺にする。
    拒否される場合は辺をそのまま返す。
    """
    edges = frozenset(edges)
    trace = show_transitions(machine, word)
    if not isinstance(trace, Trace) or trace.verdict is Verdict.REJECT:
        return edges

    used = {rule.triple for rule in trace.rules}
    final = trace.rules[-1].triple if trace.rules else None
    return frozenset(
        edge.with_kind(EdgeKind.SPECIAL if edge.triple == final else EdgeKind.REGULAR)
        for edge in edges
        if not edge.to_dead and edge.triple in used
    )


def make_cg_edges(machine: Machine, word: Sequence[str]) -> frozenset[CGEdge]:
    """機械と語の計算グラフの辺を返す。"""
    checked = check_word(machine, word)
    start = Configuration.initial(machine, checked)
    edges = computation_tree_to_cg_edges(machine, [start], [])
    edges = remove_redundant_edges(remove_duplicate_edges(edges))
    return prune_on_accept(machine, checked, edges)


def build_computation_graph(machine: Machine, word: Sequence[str]) -> ComputationGraph:
    """計算グラフを構築する。

    強調表示する状態は特殊辺の行き先（空語の場合は開始状態も含む）。
    死状態への辺がある場合のみ死状態を持つ。
    """
    checked = check_word(machine, word)
    edges = make_cg_edges(machine, checked)
    highlighted = {edge.to_state for edge in edges if edge.is_special}
    if not checked:
        highlighted.add(machine.start)
    dead = fresh_dead_state(machine) if any(edge.to_dead for edge in edges) else None
    verdict = apply(machine, checked)
    logger.debug(
        "computation graph: %d edges, end states %s, %s",
        len(edges), sorted(highlighted), verdict,
    )
    return ComputationGraph(
        machine=machine,
        word=checked,
        edges=edges,
        highlighted=frozenset(highlighted),
        dead=dead,
        verdict=verdict,
    )
