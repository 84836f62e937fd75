"""
automata.serializers
---------------------------
機械ファイル（JSON ドキュメント）を読み書きするシリアライザを定義するモジュール。

- BaseMachineSerializer: 状態・アルファベット・開始状態・最終状態・規則の共通処理
- NdfaMachineSerializer: NDFA 用（EMP ラベルを許可）
- DfaMachineSerializer: DFA 用（no_dead を追加、EMP ラベルは不可）

ドキュメントの形だけをここで検証し、機械としての検証は make_dfa / make_ndfa に任せる。
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

from rest_framework import serializers

from .exceptions import LocatedError, MalformedDocument, SourceLocation, UnknownKind
from .models import EMP, Machine, MachineKind, Rule, make_dfa, make_ndfa

logger = logging.getLogger(__name__)


class RuleField(serializers.Field):
    """[from, label, to] の 3 要素リスト。label は記号 1 文字または "EMP"。"""

    default_error_messages = {
        "invalid": "遷移規則は [from, label, to] の 3 要素のリストで指定してください",
    }

    def to_internal_value(self, data: Any) -> tuple[str, str, str]:
        if not isinstance(data, list) or len(data) != 3:
            self.fail("invalid")
        if not all(isinstance(part, str) and part for part in data):
            self.fail("invalid")
        from_state, label, to_state = data
        return (from_state, label, to_state)

    def to_representation(self, value: Rule) -> list[str]:
        return [value.from_state, str(value.label), value.to_state]


class BaseMachineSerializer(serializers.Serializer):
    """
    機械ファイルの共通フィールドをまとめたベースクラス。
    種類別のシリアライザはこれを継承して create() を実装する。
    """

    kind = serializers.ChoiceField(choices=[kind.value for kind in MachineKind])
    states = serializers.ListField(child=serializers.CharField())
    sigma = serializers.ListField(child=serializers.CharField())
    start = serializers.CharField()
    finals = serializers.ListField(child=serializers.CharField())
    rules = serializers.ListField(child=RuleField())

    def update(self, instance: Machine, validated_data: dict[str, Any]) -> Machine:
        # 機械は不変値なので更新はしない
        raise NotImplementedError("Machine は不変です")


class NdfaMachineSerializer(BaseMachineSerializer):
    def create(self, validated_data: dict[str, Any]) -> Machine:
        return make_ndfa(
            validated_data["states"],
            validated_data["sigma"],
            validated_data["start"],
            validated_data["finals"],
            validated_data["rules"],
        )


class DfaMachineSerializer(BaseMachineSerializer):
    """
    DFA 用のシリアライザ。
    no_dead は書き込み専用。構築済みの DFA は全域関数なので、出力時は常に true。
    """

    no_dead = serializers.BooleanField(required=False, default=False, write_only=True)

    def validate_rules(self, value: list[tuple[str, str, str]]) -> list[tuple[str, str, str]]:
        for rule in value:
            if rule[1] == EMP:
                raise serializers.ValidationError("DFA の遷移規則に EMP は使えません")
        return value

    def create(self, validated_data: dict[str, Any]) -> Machine:
        return make_dfa(
            validated_data["states"],
            validated_data["sigma"],
            validated_data["start"],
            validated_data["finals"],
            validated_data["rules"],
            no_dead=validated_data.get("no_dead", False),
        )

    def to_representation(self, instance: Machine) -> dict[str, Any]:
        data = super().to_representation(instance)
        data["no_dead"] = True
        return data


SERIALIZER_BY_KIND: dict[str, type[BaseMachineSerializer]] = {
    MachineKind.DFA.value: DfaMachineSerializer,
    MachineKind.NDFA.value: NdfaMachineSerializer,
}


def _line_of(text: str, key: str | None) -> int | None:
    """キーが最初に現れる行番号（1 始まり）。"""
    if key is None:
        return None
    needle = f'"{key}"'
    for number, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return number
    return None


def _first_error(errors: dict[str, Any]) -> tuple[str, str]:
    field, detail = next(iter(errors.items()))
    # ListField のエラーは {index: [...]} の入れ子になる
    while isinstance(detail, dict):
        index, detail = next(iter(detail.items()))
        field = f"{field}[{index}]"
    if isinstance(detail, list):
        detail = detail[0]
    return field, str(detail)


def parse_machine_text(text: str, source: str = "<string>") -> Machine:
    """機械ファイルの内容を解析して Machine を返す。

    Raises:
        MalformedDocument: JSON として不正、またはフィールドの形が不正
        UnknownKind: kind が dfa / ndfa 以外
        MachineValidationError: 機械の検証エラー（発生箇所付き）
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(detail=exc.msg).with_location(
            SourceLocation(source, exc.lineno)
        ) from exc
    if not isinstance(document, dict):
        raise MalformedDocument(detail="トップレベルはオブジェクトでなければなりません").with_location(
            SourceLocation(source, 1)
        )

    kind = document.get("kind")
    serializer_class = SERIALIZER_BY_KIND.get(kind) if isinstance(kind, str) else None
    if serializer_class is None:
        raise UnknownKind(kind=kind).with_location(
            SourceLocation(source, _line_of(text, UnknownKind.field))
        )

    serializer = serializer_class(data=document)
    if not serializer.is_valid():
        field, detail = _first_error(serializer.errors)
        raise MalformedDocument(detail=f"{field}: {detail}").with_location(
            SourceLocation(source, _line_of(text, field.split("[")[0]))
        )

    try:
        machine: Machine = serializer.save()
    except LocatedError as exc:
        raise exc.with_location(SourceLocation(source, _line_of(text, exc.field)))
    logger.debug("parsed %s machine from %s", machine.kind, source)
    return machine


def parse_machine_file(path: str | Path) -> Machine:
    """機械ファイルを読み込む。OSError はそのまま送出する。"""
    path = Path(path)
    return parse_machine_text(path.read_text(encoding="utf-8"), source=str(path))


def dump_machine(machine: Machine) -> str:
    serializer = SERIALIZER_BY_KIND[machine.kind.value](instance=machine)
    return json.dumps(serializer.data, indent=2, ensure_ascii=False) + "\n"
