import json

from django.test import SimpleTestCase

from automata.exceptions import (
    IncompleteWithNoDead,
    MalformedDocument,
    StartNotInStates,
    UnknownKind,
)
from automata.models import MachineKind
from automata.serializers import (
    DfaMachineSerializer,
    NdfaMachineSerializer,
    dump_machine,
    parse_machine_file,
    parse_machine_text,
)

from .machines import SAMPLES_DIR, build_ab_star, build_m


def document(**overrides):
    data = {
        "kind": "ndfa",
        "states": ["S", "F"],
        "sigma": ["a"],
        "start": "S",
        "finals": ["F"],
        "rules": [["S", "a", "F"]],
    }
    data.update(overrides)
    return json.dumps(data, indent=2)


class ParseSamplesTests(SimpleTestCase):
    def test_branching_ndfa(self):
        self.assertEqual(parse_machine_file(SAMPLES_DIR / "ndfa_m.json"), build_m())

    def test_dfa_is_completed_on_load(self):
        self.assertEqual(parse_machine_file(SAMPLES_DIR / "dfa_ab_star.json"), build_ab_star())

    def test_epsilon_loop(self):
        m = parse_machine_file(SAMPLES_DIR / "ndfa_epsilon_loop.json")
        self.assertIs(m.kind, MachineKind.NDFA)
        self.assertEqual(len(m.rules), 3)


class ParseErrorTests(SimpleTestCase):
    def test_start_not_in_states_reports_line(self):
        with self.assertRaises(StartNotInStates) as cm:
            parse_machine_text(document(start="Q"), source="m.json")
        error = cm.exception
        self.assertEqual(error.location.path, "m.json")
        # indent=2 ではリストの要素も 1 行ずつなので start は 10 行目
        self.assertEqual(error.location.line, 10)
        self.assertTrue(error.describe().startswith("m.json:10: "))

    def test_malformed_json(self):
        with self.assertRaises(MalformedDocument) as cm:
            parse_machine_text('{\n  "kind": "ndfa",\n  oops\n}', source="broken.json")
        self.assertEqual(cm.exception.location.line, 3)

    def test_top_level_must_be_an_object(self):
        with self.assertRaises(MalformedDocument):
            parse_machine_text("[]")

    def test_unknown_kind(self):
        with self.assertRaises(UnknownKind) as cm:
            parse_machine_text(document(kind="pda"))
        self.assertEqual(cm.exception.code, "unknown_kind")
        self.assertEqual(cm.exception.location.line, 2)

    def test_missing_field(self):
        data = json.loads(document())
        del data["finals"]
        with self.assertRaises(MalformedDocument) as cm:
            parse_machine_text(json.dumps(data))
        self.assertIn("finals", cm.exception.messages[0])

    def test_rule_must_be_a_triple(self):
        with self.assertRaises(MalformedDocument) as cm:
            parse_machine_text(document(rules=[["S", "a"]]))
        self.assertIn("rules[0]", cm.exception.messages[0])

    def test_dfa_rejects_epsilon_rules(self):
        with self.assertRaises(MalformedDocument) as cm:
            parse_machine_text(document(kind="dfa", rules=[["S", "EMP", "F"]]))
        self.assertIn("EMP", cm.exception.messages[0])

    def test_no_dead_requires_total_function(self):
        with self.assertRaises(IncompleteWithNoDead):
            parse_machine_text(document(kind="dfa", no_dead=True))


class SerializerTests(SimpleTestCase):
    def test_ndfa_serializer_creates_machine(self):
        serializer = NdfaMachineSerializer(data=json.loads(document()))
        self.assertTrue(serializer.is_valid(), serializer.errors)
        m = serializer.save()
        self.assertEqual(m.states, ("S", "F"))

    def test_dfa_representation_is_total(self):
        data = DfaMachineSerializer(instance=build_ab_star()).data
        self.assertEqual(data["kind"], "dfa")
        self.assertTrue(data["no_dead"])
        self.assertIn(["ds", "b", "ds"], data["rules"])

    def test_dump_and_parse(self):
        for machine in (build_m(), build_ab_star()):
            with self.subTest(kind=machine.kind):
                text = dump_machine(machine)
                self.assertTrue(text.endswith("}\n"))
                self.assertEqual(parse_machine_text(text), machine)
