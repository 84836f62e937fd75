# automata/execution.py

"""
automata.execution モジュール

機械を入力語に適用し、受理／拒否の判定と様相（configuration）の列を返す。

NDFA の実行は様相 (状態, 未消費の入力) 上の幅優先探索で行う。
訪問済み集合により同じ様相を二度探索しないため、EMP 遷移のループがあっても停止する。

含まれる主な要素:
- Configuration: 状態と未消費入力（入力語のオフセットで表す）
- Verdict: accept / reject
- Trace: 様相の列と判定
- NoTraceAvailable: NDFA が拒否した語に対する「トレースなし」の結果（例外ではない）
- step / apply / show_transitions
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):  # type: ignore[no-redef]
        __str__ = str.__str__
        __format__ = str.__format__

from .models import Machine, Rule, Word, check_word

logger = logging.getLogger(__name__)


class Verdict(StrEnum):
    ACCEPT = "accept"
    REJECT = "reject"


@dataclass(frozen=True)
class Configuration:
    """様相。同じ入力語上では (state, offset) が等しければ等しい。"""

    state: str
    word: Word = field(compare=False, repr=False)
    offset: int = 0

    @classmethod
    def initial(cls, machine: Machine, word: Word) -> Configuration:
        return cls(machine.start, word, 0)

    @property
    def unconsumed(self) -> Word:
        return self.word[self.offset:]

    @property
    def remaining(self) -> int:
        return len(self.word) - self.offset

    @property
    def is_consumed(self) -> bool:
        return self.offset >= len(self.word)

    @property
    def head(self) -> str | None:
        return None if self.is_consumed else self.word[self.offset]

    def follow(self, rule: Rule) -> Configuration:
        """規則を適用した次の様相（EMP なら入力はそのまま）。"""
        offset = self.offset if rule.label.is_epsilon else self.offset + 1
        return Configuration(rule.to_state, self.word, offset)

    def __str__(self) -> str:
        return f"({' '.join(self.unconsumed)}) {self.state}"


@dataclass(frozen=True)
class Trace:
    """一つの計算の様相列。rules[i] は steps[i] から steps[i + 1] への遷移。"""

    steps: tuple[Configuration, ...]
    rules: tuple[Rule, ...]
    verdict: Verdict

    @property
    def last(self) -> Configuration:
        return self.steps[-1]


@dataclass(frozen=True)
class NoTraceAvailable:
    reason: str = "word rejected by ndfa"


NO_TRACE = NoTraceAvailable()


def applicable(rule: Rule, config: Configuration) -> bool:
    if rule.from_state != config.state:
        return False
    return rule.label.is_epsilon or rule.label.symbol == config.head


def step(machine: Machine, config: Configuration) -> list[tuple[Rule, Configuration]]:
    """様相に適用できるすべての規則と、その後続様相を規則順に返す。"""
    return [
        (rule, config.follow(rule))
        for rule in machine.rules
        if applicable(rule, config)
    ]


def _is_accepting(machine: Machine, config: Configuration) -> bool:
    return config.is_consumed and machine.is_final(config.state)


Parents = dict[Configuration, tuple[Configuration, Rule] | None]


def _search(machine: Machine, word: Word) -> tuple[Configuration | None, Parents]:
    """幅優先探索で最初に取り出された受理様相を返す。なければ None。"""
    start = Configuration.initial(machine, word)
    parents: Parents = {start: None}
    queue = deque([start])
    while queue:
        config = queue.popleft()
        if _is_accepting(machine, config):
            return config, parents
        for rule, successor in step(machine, config):
            if successor in parents:
                continue
            parents[successor] = (config, rule)
            queue.append(successor)
    logger.debug("search exhausted after %d configurations", len(parents))
    return None, parents


def _unwind(config: Configuration, parents: Parents) -> tuple[list[Configuration], list[Rule]]:
    steps = [config]
    rules: list[Rule] = []
    link = parents[config]
    while link is not None:
        previous, rule = link
        steps.append(previous)
        rules.append(rule)
        link = parents[previous]
    steps.reverse()
    rules.reverse()
    return steps, rules


def apply(machine: Machine, word: Sequence[str]) -> Verdict:
    """機械を語に適用し、accept / reject を返す。

    Raises:
        WordSymbolNotInSigma: 語にアルファベット外の記号が含まれる場合
    """
    accepting, _ = _search(machine, check_word(machine, word))
    return Verdict.REJECT if accepting is None else Verdict.ACCEPT


def _run_dfa(machine: Machine, word: Word) -> Trace:
    config = Configuration.initial(machine, word)
    steps = [config]
    rules: list[Rule] = []
    while not config.is_consumed:
        successors = step(machine, config)
        if not successors:
            break
        rule, config = successors[0]
        steps.append(config)
        rules.append(rule)
    verdict = Verdict.ACCEPT if _is_accepting(machine, config) else Verdict.REJECT
    return Trace(tuple(steps), tuple(rules), verdict)


def show_transitions(machine: Machine, word: Sequence[str]) -> Trace | NoTraceAvailable:
    """計算のトレースを返す。

    DFA は唯一の実行（判定に関わらず）を返す。NDFA は受理した場合のみ、
    幅優先探索で最初に見つかった受理計算を返し、拒否した場合は NO_TRACE を返す。
    """
    checked = check_word(machine, word)
    if machine.is_dfa:
        return _run_dfa(machine, checked)

    accepting, parents = _search(machine, checked)
    if accepting is None:
        return NO_TRACE
    steps, rules = _unwind(accepting, parents)
    return Trace(tuple(steps), tuple(rules), Verdict.ACCEPT)
