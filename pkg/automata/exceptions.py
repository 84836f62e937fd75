# automata/exceptions.py

"""
automata.exceptions モジュール

機械の構築・実行・ファイル読み込みで発生するエラーを定義する。

すべて django.core.exceptions.ValidationError を継承しているため、
``code`` と ``params`` を持ち、``messages`` で整形済みメッセージを取得できる。

- MachineValidationError: 機械の構成要素・入力語の検証エラー（基底クラス）
- MachineFileError: 機械ファイル（JSON ドキュメント）のエラー（基底クラス）
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from django.core.exceptions import ValidationError


@dataclass(frozen=True)
class SourceLocation:
    """エラー発生箇所（ファイルパスと行番号）"""

    path: str
    line: int | None = None

    def __str__(self) -> str:
        if self.line is None:
            return self.path
        return f"{self.path}:{self.line}"


class LocatedError(ValidationError):
    """発生箇所を後から付与できる ValidationError"""

    default_code = "invalid"
    default_message = "入力が不正です"
    # 機械ファイル中で関係するキー（行番号の特定に使う）
    field: str | None = None

    def __init__(self, message: str | None = None, **params: Any) -> None:
        super().__init__(
            message or self.default_message,
            code=self.default_code,
            params=params,
        )
        self.location: SourceLocation | None = None

    def with_location(self, location: SourceLocation) -> LocatedError:
        self.location = location
        return self

    def describe(self) -> str:
        text = "; ".join(self.messages)
        if self.location is None:
            return text
        return f"{self.location}: {text}"


class MachineValidationError(LocatedError):
    default_code = "invalid_machine"
    default_message = "機械の定義が不正です"


class EmptyStateSet(MachineValidationError):
    default_code = "empty_state_set"
    default_message = "状態集合が空です"
    field = "states"


class InvalidStateName(MachineValidationError):
    default_code = "invalid_state_name"
    default_message = "状態名 %(state)r は英字で始まる英数字でなければなりません"
    field = "states"


class InvalidSymbol(MachineValidationError):
    default_code = "invalid_symbol"
    default_message = "記号 %(symbol)r は英小文字または数字 1 文字でなければなりません"
    field = "sigma"


class DuplicateSymbolInSigma(MachineValidationError):
    default_code = "duplicate_symbol"
    default_message = "アルファベットに記号 %(symbol)r が重複しています"
    field = "sigma"


class StateSymbolClash(MachineValidationError):
    default_code = "state_symbol_clash"
    default_message = "状態名 %(state)r がアルファベットの記号と衝突しています"
    field = "states"


class StartNotInStates(MachineValidationError):
    default_code = "start_not_in_states"
    default_message = "開始状態 %(start)r が状態集合に含まれていません"
    field = "start"


class FinalNotInStates(MachineValidationError):
    default_code = "final_not_in_states"
    default_message = "最終状態 %(final)r が状態集合に含まれていません"
    field = "finals"


class RuleReferencesUnknownState(MachineValidationError):
    default_code = "rule_unknown_state"
    default_message = "遷移規則 %(rule)s が未定義の状態 %(state)r を参照しています"
    field = "rules"


class RuleReadsUnknownSymbol(MachineValidationError):
    default_code = "rule_unknown_symbol"
    default_message = "遷移規則 %(rule)s がアルファベットにない記号 %(symbol)r を読みます"
    field = "rules"


class NondeterministicRules(MachineValidationError):
    default_code = "nondeterministic_rules"
    default_message = "DFA の遷移関係が関数ではありません: %(rule)s"
    field = "rules"


class IncompleteWithNoDead(MachineValidationError):
    default_code = "incomplete_with_no_dead"
    default_message = (
        "no_dead が指定されていますが、状態 %(state)r と記号 %(symbol)r の遷移がありません"
    )
    field = "no_dead"


class WordSymbolNotInSigma(MachineValidationError):
    default_code = "word_symbol_not_in_sigma"
    default_message = "入力語の記号 %(symbol)r はアルファベットに含まれていません"


class MachineFileError(LocatedError):
    default_code = "invalid_machine_file"
    default_message = "機械ファイルが不正です"


class MalformedDocument(MachineFileError):
    default_code = "malformed_document"
    default_message = "機械ファイルの形式が不正です: %(detail)s"


class UnknownKind(MachineFileError):
    default_code = "unknown_kind"
    default_message = "未知の機械の種類です: %(kind)r（dfa または ndfa）"
    field = "kind"
