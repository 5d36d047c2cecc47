"""JSON schemas for the reports printed by the command line tool."""

IDEAL_SCHEMA = {
    "type": "object",
    "required": ["n", "hnf", "norm"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 3},
        "hnf": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}},
        },
        "norm": {"type": "integer", "minimum": 1},
        "generator": {"type": "string", "pattern": r"^-?\d+(,-?\d+)*$"},
    },
}

_REPORT = {
    "type": "object",
    "required": ["n", "ideal", "norm", "perfect", "H", "S", "K", "quotient_order"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 3},
        "ideal": IDEAL_SCHEMA,
        "norm": {"type": "integer", "minimum": 1},
        "perfect": {"type": "boolean"},
        "H": {"type": "string", "pattern": r"^M\d+:[CD]\d+$"},
        "S": {"type": "string", "pattern": r"^(C_\d+|D_\d+\(axis=\d+\))$"},
        "K": {"type": "string", "pattern": r"^T:[CD]_\d+$"},
        "quotient_order": {"type": "integer", "minimum": 1},
    },
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ColouringReport",
    **_REPORT,
}

ENUMERATION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Enumeration",
    "type": "object",
    "required": ["n", "colours", "j", "reports"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 3},
        "colours": {"type": "integer", "minimum": 1},
        "j": {"type": "integer", "minimum": 0},
        "reports": {"type": "array", "items": _REPORT},
    },
}
