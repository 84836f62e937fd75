# automata/models/__init__.py
from .machine import (
    DEAD_STATE_NAME,
    EMP,
    EPSILON,
    Label,
    Machine,
    MachineKind,
    Rule,
    Word,
    check_word,
    fresh_dead_state,
    make_dfa,
    make_ndfa,
    parse_word,
    validate,
)

__all__ = [
    "DEAD_STATE_NAME",
    "EMP",
    "EPSILON",
    "Label",
    "Machine",
    "MachineKind",
    "Rule",
    "Word",
    "check_word",
    "fresh_dead_state",
    "make_dfa",
    "make_ndfa",
    "parse_word",
    "validate",
]
