# automata/models/machine.py

"""
automata.models.machine モジュール

有限オートマトン（DFA / NDFA）を表す不変値と、そのコンストラクタを定義する。

主な要素:
- Label / Rule: 遷移規則 (from, 読む記号または EMP, to)
- Machine: 状態集合・アルファベット・開始状態・最終状態・遷移規則をまとめた不変値
- make_ndfa / make_dfa: 検証付きコンストラクタ（DFA は不足遷移を死状態で補完）
- fresh_dead_state: 機械のどの状態とも衝突しない死状態名
- validate: 構築済みの機械に対する不変条件の再検査
- parse_word / check_word: 入力語の表記と検証

ORM モデルではない（データベースは使用しない）。
"""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):  # type: ignore[no-redef]
        __str__ = str.__str__
        __format__ = str.__format__
from typing import TypeAlias

from ..exceptions import (
    DuplicateSymbolInSigma,
    EmptyStateSet,
    FinalNotInStates,
    IncompleteWithNoDead,
    InvalidStateName,
    InvalidSymbol,
    MachineValidationError,
    NondeterministicRules,
    RuleReadsUnknownSymbol,
    RuleReferencesUnknownState,
    StartNotInStates,
    StateSymbolClash,
    WordSymbolNotInSigma,
)

logger = logging.getLogger(__name__)

# 空遷移（何も読まない遷移）のラベル、および空語の表記
EMP = "EMP"

DEAD_STATE_NAME = "ds"

STATE_NAME_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9]*")
SYMBOL_PATTERN = re.compile(r"[a-z0-9]")

Word: TypeAlias = tuple[str, ...]


class MachineKind(StrEnum):
    DFA = "dfa"
    NDFA = "ndfa"


@dataclass(frozen=True, order=True)
class Label:
    """遷移ラベル。記号 1 文字を読むか、EMP（何も読まない）のどちらか。"""

    symbol: str

    @classmethod
    def read(cls, symbol: str) -> Label:
        return cls(symbol)

    @classmethod
    def parse(cls, text: str) -> Label:
        return EPSILON if text == EMP else cls.read(text)

    @property
    def is_epsilon(self) -> bool:
        return self.symbol == EMP

    def __str__(self) -> str:
        return self.symbol


EPSILON = Label(EMP)


@dataclass(frozen=True, order=True)
class Rule:
    from_state: str
    label: Label
    to_state: str

    @classmethod
    def coerce(cls, value: Rule | Sequence[str]) -> Rule:
        """Rule またはトリプル ("S", "a", "F") を Rule に変換する。"""
        if isinstance(value, Rule):
            return value
        from_state, label, to_state = value
        return cls(from_state, Label.parse(label), to_state)

    @property
    def triple(self) -> tuple[str, Label, str]:
        return (self.from_state, self.label, self.to_state)

    def __str__(self) -> str:
        return f"({self.from_state} {self.label} {self.to_state})"


RuleLike: TypeAlias = Rule | Sequence[str]


@dataclass(frozen=True)
class Machine:
    """構築済みの有限オートマトン。

    各成分は入力順（重複除去後）を保つタプルで、下流の処理はすべてこの順序で
    決定的に反復する。コンストラクタ（make_ndfa / make_dfa）経由で生成すること。

    Attributes:
        kind (MachineKind): dfa または ndfa
        states (tuple[str, ...]): 状態集合 K
        sigma (tuple[str, ...]): 入力アルファベット Σ
        start (str): 開始状態 s
        finals (tuple[str, ...]): 最終状態の集合 F
        rules (tuple[Rule, ...]): 遷移関係 δ
    """

    kind: MachineKind
    states: tuple[str, ...]
    sigma: tuple[str, ...]
    start: str
    finals: tuple[str, ...]
    rules: tuple[Rule, ...]

    @property
    def is_dfa(self) -> bool:
        return self.kind is MachineKind.DFA

    def is_final(self, state: str) -> bool:
        return state in self.finals

    def rules_from(self, state: str) -> tuple[Rule, ...]:
        return tuple(rule for rule in self.rules if rule.from_state == state)


def _unique(items: Iterable[str]) -> tuple[str, ...]:
    # 最初の出現順を保ったまま重複を除く
    return tuple(dict.fromkeys(items))


def _fresh_name(states: Iterable[str]) -> str:
    taken = set(states)
    if DEAD_STATE_NAME not in taken:
        return DEAD_STATE_NAME
    index = 0
    while f"{DEAD_STATE_NAME}{index}" in taken:
        index += 1
    return f"{DEAD_STATE_NAME}{index}"


def fresh_dead_state(machine: Machine) -> str:
    """機械の状態と衝突しない死状態名を返す（ds, ds0, ds1, ...）。"""
    return _fresh_name(machine.states)


def _check_components(
    states: tuple[str, ...],
    sigma: Sequence[str],
    start: str,
    finals: tuple[str, ...],
    rules: tuple[Rule, ...],
) -> None:
    if not states:
        raise EmptyStateSet()
    for state in states:
        if not isinstance(state, str) or not STATE_NAME_PATTERN.fullmatch(state):
            raise InvalidStateName(state=state)

    seen: set[str] = set()
    for symbol in sigma:
        if not isinstance(symbol, str) or not SYMBOL_PATTERN.fullmatch(symbol):
            raise InvalidSymbol(symbol=symbol)
        if symbol in seen:
            raise DuplicateSymbolInSigma(symbol=symbol)
        seen.add(symbol)

    for state in states:
        if state in seen:
            raise StateSymbolClash(state=state)

    known = set(states)
    if start not in known:
        raise StartNotInStates(start=start)
    for final in finals:
        if final not in known:
            raise FinalNotInStates(final=final)

    for rule in rules:
        for state in (rule.from_state, rule.to_state):
            if state not in known:
                raise RuleReferencesUnknownState(rule=rule, state=state)
        if not rule.label.is_epsilon and rule.label.symbol not in seen:
            raise RuleReadsUnknownSymbol(rule=rule, symbol=rule.label.symbol)


def _normalize(
    states: Iterable[str],
    finals: Iterable[str],
    rules: Iterable[RuleLike],
) -> tuple[tuple[str, ...], tuple[str, ...], tuple[Rule, ...]]:
    unique_rules = tuple(dict.fromkeys(Rule.coerce(rule) for rule in rules))
    return _unique(states), _unique(finals), unique_rules


def make_ndfa(
    states: Iterable[str],
    sigma: Sequence[str],
    start: str,
    finals: Iterable[str],
    rules: Iterable[RuleLike],
) -> Machine:
    """NDFA を構築する。

    重複した規則・状態・最終状態は最初の出現順を保って除去する。

    Raises:
        MachineValidationError: 構成要素が不正な場合（サブクラスで種類を区別）
    """
    unique_states, unique_finals, unique_rules = _normalize(states, finals, rules)
    _check_components(unique_states, sigma, start, unique_finals, unique_rules)
    return Machine(
        kind=MachineKind.NDFA,
        states=unique_states,
        sigma=tuple(sigma),
        start=start,
        finals=unique_finals,
        rules=unique_rules,
    )


def _transition_table(rules: tuple[Rule, ...]) -> dict[tuple[str, str], Rule]:
    table: dict[tuple[str, str], Rule] = {}
    for rule in rules:
        if rule.label.is_epsilon:
            raise NondeterministicRules(rule=rule)
        key = (rule.from_state, rule.label.symbol)
        if key in table:
            raise NondeterministicRules(rule=rule)
        table[key] = rule
    return table


def make_dfa(
    states: Iterable[str],
    sigma: Sequence[str],
    start: str,
    finals: Iterable[str],
    rules: Iterable[RuleLike],
    no_dead: bool = False,
) -> Machine:
    """DFA を構築する。

    no_dead が偽で遷移関数が部分関数の場合は、新しい死状態を追加し、
    不足している (状態, 記号) の遷移をすべて死状態へ向ける。
    死状態はすべての記号で自身へ遷移する。

    Args:
        no_dead: 遷移関数が全域関数であることを呼び出し側が保証する

    Raises:
        NondeterministicRules: EMP 遷移がある、または (状態, 記号) が重複する
        IncompleteWithNoDead: no_dead 指定時に遷移が不足している
        MachineValidationError: その他 make_ndfa と同じ検証エラー
    """
    unique_states, unique_finals, unique_rules = _normalize(states, finals, rules)
    _check_components(unique_states, sigma, start, unique_finals, unique_rules)
    table = _transition_table(unique_rules)

    missing = [
        (state, symbol)
        for state in unique_states
        for symbol in sigma
        if (state, symbol) not in table
    ]
    if missing and no_dead:
        state, symbol = missing[0]
        raise IncompleteWithNoDead(state=state, symbol=symbol)

    if missing:
        dead = _fresh_name(unique_states)
        completion = [
            Rule(state, Label.read(symbol), dead) for state, symbol in missing
        ]
        completion += [Rule(dead, Label.read(symbol), dead) for symbol in sigma]
        logger.debug(
            "dead state %s added with %d completion rules", dead, len(completion)
        )
        unique_states += (dead,)
        unique_rules += tuple(completion)

    return Machine(
        kind=MachineKind.DFA,
        states=unique_states,
        sigma=tuple(sigma),
        start=start,
        finals=unique_finals,
        rules=unique_rules,
    )


def validate(machine: Machine) -> None:
    """構築済みの機械がすべての不変条件を満たすことを再検査する。"""
    _check_components(
        machine.states, machine.sigma, machine.start, machine.finals, machine.rules
    )
    seen: set[Rule] = set()
    for rule in machine.rules:
        if rule in seen:
            raise MachineValidationError("遷移規則 %(rule)s が重複しています", rule=rule)
        seen.add(rule)
    if not machine.is_dfa:
        return
    table = _transition_table(machine.rules)
    for state in machine.states:
        for symbol in machine.sigma:
            if (state, symbol) not in table:
                raise IncompleteWithNoDead(state=state, symbol=symbol)


def parse_word(text: str) -> Word:
    """空白区切りの語を解析する。"EMP" または空文字列は空語を表す。"""
    symbols = tuple(text.split())
    if symbols == (EMP,):
        return ()
    return symbols


def check_word(machine: Machine, word: Sequence[str]) -> Word:
    for symbol in word:
        if symbol not in machine.sigma:
            raise WordSymbolNotInSigma(symbol=symbol)
    return tuple(word)
