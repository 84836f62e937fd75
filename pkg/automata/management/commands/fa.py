# automata/management/commands/fa.py

"""
管理コマンド ``fa``

機械ファイルを読み込み、語への適用・トレース・遷移図・計算グラフの生成を行う。

    python manage.py fa validate  <machine-file>
    python manage.py fa apply     <machine-file> [word...]
    python manage.py fa trace     <machine-file> [word...]
    python manage.py fa graph     <machine-file> [--out FILE]
    python manage.py fa compgraph <machine-file> [word...] [--out FILE] [--summary]

語は空白区切りの記号列で、"EMP" または省略は空語を表す。
終了コード: 0 = accept（および成功）、1 = reject、2 = 使い方・検証エラー
"""

from __future__ import annotations

import logging
from enum import IntEnum
from typing import Any

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError, CommandParser

from automata.compgraph import build_computation_graph
from automata.exceptions import LocatedError
from automata.execution import Trace, Verdict, apply, show_transitions
from automata.models import Machine, Word, parse_word, validate
from automata.render import DotDocument, cgraph_summary, cgraph_to_dot, format_trace, machine_to_dot
from automata.serializers import parse_machine_file

logger = logging.getLogger(__name__)


class ExitStatus(IntEnum):
    ACCEPT = 0
    REJECT = 1
    USAGE = 2


class Command(BaseCommand):
    help = "有限オートマトンを語に適用し、トレース・遷移図・計算グラフを出力します。"
    requires_system_checks: list[str] = []

    def add_arguments(self, parser: CommandParser) -> None:
        actions = parser.add_subparsers(dest="action", required=True, metavar="ACTION")

        validate_parser = actions.add_parser("validate", help="機械ファイルを検証する")
        validate_parser.add_argument("machine_file")

        for name, help_text in (
            ("apply", "語を受理するか判定する"),
            ("trace", "計算のトレースを表示する"),
        ):
            action = actions.add_parser(name, help=help_text)
            action.add_argument("machine_file")
            action.add_argument("word", nargs="*")

        graph = actions.add_parser("graph", help="遷移図を DOT で出力する")
        graph.add_argument("machine_file")
        graph.add_argument("--out", help="DOT の出力先（省略時は標準出力）")

        compgraph = actions.add_parser("compgraph", help="計算グラフを DOT で出力する")
        compgraph.add_argument("machine_file")
        compgraph.add_argument("word", nargs="*")
        compgraph.add_argument("--out", help="DOT の出力先（省略時は標準出力）")
        compgraph.add_argument("--summary", action="store_true", help="要約も表示する")

    def execute(self, *args: Any, **options: Any) -> str | None:
        # FA_COLOR は Django の --no-color / --force-color より優先する
        if settings.FA_COLOR == "never":
            options.update(no_color=True, force_color=False)
        elif settings.FA_COLOR == "always":
            options.update(no_color=False, force_color=True)
        return super().execute(*args, **options)

    def handle(self, *args: Any, **options: Any) -> None:
        action = options["action"]
        logger.info("fa %s %s", action, options["machine_file"])
        machine = self._load(options["machine_file"])
        word = parse_word(" ".join(options.get("word") or []))

        try:
            if action == "validate":
                self._validate(machine)
            elif action == "apply":
                self._exit(self._verdict(apply(machine, word)))
            elif action == "trace":
                self._exit(self._trace(machine, word))
            elif action == "graph":
                self._emit(machine_to_dot(machine), options.get("out"))
            elif action == "compgraph":
                self._exit(
                    self._compgraph(machine, word, options.get("out"), options["summary"])
                )
        except LocatedError as exc:
            raise CommandError(exc.describe(), returncode=ExitStatus.USAGE) from exc

    def _load(self, path: str) -> Machine:
        try:
            return parse_machine_file(path)
        except LocatedError as exc:
            raise CommandError(exc.describe(), returncode=ExitStatus.USAGE) from exc
        except OSError as exc:
            raise CommandError(f"{path}: {exc.strerror}", returncode=ExitStatus.USAGE) from exc

    def _exit(self, verdict: Verdict) -> None:
        if verdict is Verdict.REJECT:
            raise SystemExit(ExitStatus.REJECT)

    def _verdict(self, verdict: Verdict) -> Verdict:
        style = self.style.SUCCESS if verdict is Verdict.ACCEPT else self.style.ERROR
        self.stdout.write(style(str(verdict)))
        return verdict

    def _validate(self, machine: Machine) -> None:
        validate(machine)
        self.stdout.write(
            f"valid {machine.kind}: {len(machine.states)} states, "
            f"{len(machine.sigma)} symbols, {len(machine.rules)} rules"
        )

    def _trace(self, machine: Machine, word: Word) -> Verdict:
        trace = show_transitions(machine, word)
        if not isinstance(trace, Trace):
            self.stdout.write(self.style.ERROR(f"no trace: {trace.reason}"))
            return Verdict.REJECT
        *configurations, _ = format_trace(trace)
        for line in configurations:
            self.stdout.write(line)
        return self._verdict(trace.verdict)

    def _emit(self, document: DotDocument, out: str | None) -> None:
        if out is None:
            self.stdout.write(document.text, ending="")
            return
        try:
            path = document.write(out)
        except OSError as exc:
            raise CommandError(f"{out}: {exc.strerror}", returncode=ExitStatus.USAGE) from exc
        self.stdout.write(str(path))

    def _compgraph(
        self, machine: Machine, word: Word, out: str | None, summary: bool
    ) -> Verdict:
        cg = build_computation_graph(machine, word)
        self._emit(cgraph_to_dot(cg), out)
        if summary:
            verdict_line, *rest = cgraph_summary(cg).splitlines()
            style = self.style.SUCCESS if cg.verdict is Verdict.ACCEPT else self.style.ERROR
            self.stdout.write(style(verdict_line))
            for line in rest:
                self.stdout.write(line)
        return cg.verdict
