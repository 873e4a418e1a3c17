"""JSON Schemas (draft 2020-12) for every document the package emits.

Exact scalars are ``[re, im]`` pairs of rational strings such as ``"-3/2"``.
Simple-root indices are 1-based; roots are coefficient vectors.
"""

_ROOT = {"type": "array", "items": {"type": "integer"}, "minItems": 1}
_RAT = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_SCALAR = {"type": "array", "prefixItems": [_RAT, _RAT], "minItems": 2, "maxItems": 2}
_CLASS = {"enum": ["Zero", "Indefinite", "SemidefinitePositive", "SemidefiniteNegative"]}
_DECISION = {"enum": ["EssentiallyPseudoconcave", "Not", "TriviallyYes", "Inapplicable"]}
_INDICES = {"type": "array", "items": {"type": "integer", "minimum": 1}}

SATAKE_ENTRY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "SatakeDiagram",
    "type": "object",
    "required": ["name", "family", "label", "type", "rank", "black", "arrows", "dim_k"],
    "properties": {
        "name": {"type": "string"},
        "family": {"type": "string"},
        "label": {"type": "string"},
        "type": {"enum": list("ABCDEFG")},
        "rank": {"type": "integer", "minimum": 1},
        "black": _INDICES,
        "arrows": {"type": "array", "items": {"type": "array", "items": {"type": "integer"},
                                               "minItems": 2, "maxItems": 2}},
        "dim_k": {"type": "integer", "minimum": 0},
        "params": {"type": "object", "additionalProperties": {"type": "integer"}},
    },
}

CATALOG = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Catalog",
    "type": "array",
    "items": SATAKE_ENTRY,
}

_ROOT_LIST = {"type": "array", "items": _ROOT}

SPEC = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "CRAlgebraSpec",
    "type": "object",
    "required": ["algebra", "phi", "q_roots", "nilradical", "conj_nilradical", "characteristic",
                 "holomorphic_index", "real_characteristic"],
    "properties": {
        "algebra": {"type": "string"},
        "phi": _INDICES,
        **{k: _ROOT_LIST for k in ("q_roots", "nilradical", "conj_nilradical", "characteristic",
                                   "holomorphic_index", "real_characteristic")},
    },
}

_GAMMA_CLASS = {
    "type": "object",
    "required": ["gamma", "real", "rank"],
    "properties": {
        "gamma": _ROOT,
        "real": {"type": "boolean"},
        "rank": {"type": "integer", "minimum": 0},
        "class": _CLASS,
        "re_class": _CLASS,
        "im_class": _CLASS,
    },
}

VERDICT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Verdict",
    "type": "object",
    "required": ["algebra", "family", "phi", "fundamental", "degenerate", "decision", "route",
                 "per_gamma", "witness", "certificate", "note"],
    "properties": {
        "algebra": {"type": "string"},
        "family": {"type": "string"},
        "phi": _INDICES,
        "fundamental": {"type": "boolean"},
        "degenerate": {"type": "boolean"},
        "decision": _DECISION,
        "route": {"enum": ["proposition", "lemma-iii", "table"]},
        "per_gamma": {"type": "array", "items": _GAMMA_CLASS},
        "witness": {"oneOf": [{"type": "null"}, _GAMMA_CLASS]},
        "certificate": {"oneOf": [
            {"type": "null"},
            {"type": "array", "items": {"type": "object", "required": ["root", "weight"],
                                        "properties": {"root": _ROOT, "weight": _RAT}}},
        ]},
        "note": {"type": "string"},
        "spec": SPEC,
    },
}

MATRIX_DUMP = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "LeviFormDump",
    "type": "object",
    "required": ["gamma", "index", "entries", "pairs", "signature", "class"],
    "properties": {
        "gamma": _ROOT,
        "real": {"type": "boolean"},
        "index": _ROOT_LIST,
        "entries": {"type": "array", "items": {"type": "array", "items": _SCALAR}},
        "pairs": {"type": "array", "items": {"type": "array", "items": _ROOT, "minItems": 2, "maxItems": 2}},
        "signature": {
            "type": "object",
            "required": ["n_plus", "n_minus", "n_zero", "class"],
            "properties": {"n_plus": {"type": "integer"}, "n_minus": {"type": "integer"},
                           "n_zero": {"type": "integer"}, "class": _CLASS},
        },
        "class": _CLASS,
        "parts": {"type": "object"},
    },
}

REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "CrosscheckReport",
    "type": "object",
    "required": ["max_rank", "n_rows", "n_disagreements", "summary", "rows"],
    "properties": {
        "max_rank": {"type": "integer"},
        "n_rows": {"type": "integer"},
        "n_disagreements": {"type": "integer"},
        "summary": {"type": "object", "additionalProperties": {
            "type": "object", "additionalProperties": {"type": "integer"}}},
        "rows": {"type": "array", "items": {
            "type": "object",
            "required": ["form", "label", "family", "phi", "fundamental", "decision_algorithmic",
                         "decision_table", "agree", "status"],
            "properties": {
                "form": {"type": "string"},
                "label": {"type": "string"},
                "family": {"type": "string"},
                "phi": _INDICES,
                "fundamental": {"type": "boolean"},
                "decision_algorithmic": _DECISION,
                "decision_table": _DECISION,
                "agree": {"type": ["boolean", "null"]},
                "status": {"type": "string"},
                "witness": {"type": ["object", "null"]},
            },
        }},
    },
}
