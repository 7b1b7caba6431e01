"""JSON schemas for the counts file and for every CLI JSON output."""

from __future__ import annotations

_number = {"type": "number"}
_str = {"type": "string"}
_int = {"type": "integer"}

COUNTS_FILE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["n", "settings"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "settings": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["bases", "counts"],
                "properties": {
                    "label": _str,
                    "bases": {
                        "type": "array",
                        "minItems": 1,
                        "items": {
                            "oneOf": [
                                {
                                    "type": "object",
                                    "required": ["type"],
                                    "properties": {"type": {"const": "computational"}},
                                    "additionalProperties": False,
                                },
                                {
                                    "type": "object",
                                    "required": ["type", "phase_rad"],
                                    "properties": {
                                        "type": {"const": "equatorial"},
                                        "phase_rad": _number,
                                    },
                                    "additionalProperties": False,
                                },
                            ]
                        },
                    },
                    "counts": {
                        "type": "object",
                        "patternProperties": {"^[01]+$": {"type": "integer", "minimum": 0}},
                        "additionalProperties": False,
                    },
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

_scenario_fields = {"n": _int, "ka": _int, "kb": _int, "x": _str, "y": _str}
_scenario = {
    "type": "object",
    "required": list(_scenario_fields),
    "properties": _scenario_fields,
}

_waveplate = {
    "type": "object",
    "required": ["qwpDeg", "hwpDeg"],
    "properties": {"qwpDeg": _number, "hwpDeg": _number},
}

_settings = {
    "type": "object",
    "required": ["thetaA", "thetaB", "aAmpH", "aAmpV", "bAmpH", "bAmpV", "m1", "m2"],
    "properties": {
        "thetaA": _number, "thetaB": _number,
        "aAmpH": _number, "aAmpV": _number, "bAmpH": _number, "bAmpV": _number,
        "m1": _int, "m2": _int,
    },
}

IVALUE = {
    "type": "object",
    "required": ["value", "sigma", "f", "n", "ka", "kb", "x", "y"],
    "properties": {
        "value": _number, "sigma": {"type": "number", "minimum": 0}, "f": _str,
        "n": _int, "ka": _int, "kb": _int, "x": _str, "y": _str,
    },
}

_estimate = {
    "type": "object",
    "required": ["value", "sigma", "source"],
    "properties": {
        "value": _number,
        "sigma": {"type": "number", "minimum": 0},
        "source": _str,
        "k": _int,
        "N": _int,
        "zeroCount": {"type": "boolean"},
    },
}

SOLVE = {
    "type": "object",
    "required": ["scenario", "settings", "waveplates"],
    "properties": {
        "scenario": _scenario,
        "settings": _settings,
        "waveplates": {
            "type": "object",
            "required": ["a", "b"],
            "properties": {"a": _waveplate, "b": _waveplate},
        },
    },
}

VERIFY = {
    "type": "object",
    "required": ["scenario", "constraints", "success", "successClosedForm", "paradox"],
    "properties": {
        "scenario": _scenario,
        "constraints": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["string", "kind", "probability"],
                "properties": {"string": _str, "kind": _str, "probability": _number},
            },
        },
        "success": _number,
        "successClosedForm": _number,
        "maxConstraint": _number,
        "paradox": {"type": "boolean"},
    },
}

LHV = {
    "type": "object",
    "required": ["scenario", "classicalMax", "saturatingCount"],
    "properties": {
        "scenario": _scenario,
        "classicalMax": _str,
        "saturatingCount": _int,
        "polytopeDim": _int,
        "saturatingDim": _int,
        "isFacet": {"type": "boolean"},
    },
}

FACET = {
    "type": "object",
    "required": ["scenario", "saturatingCount", "polytopeDim", "saturatingDim", "isFacet"],
    "properties": LHV["properties"],
}

PARADOX = {
    "type": "object",
    "required": ["scenario", "holds", "successStrategies", "witness"],
    "properties": {
        "scenario": _scenario,
        "holds": {"type": "boolean"},
        "successStrategies": _int,
        "minWeightedViolation": {"type": ["string", "null"]},
        "witness": {"type": ["object", "null"]},
    },
}

VISIBILITY = {
    "type": "object",
    "required": ["scenario", "iAtV0", "iAtV1", "vCrit"],
    "properties": {
        "scenario": _str,
        "iAtV0": _number,
        "iAtV1": _number,
        "vCrit": _number,
        "sweep": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["visibility", "I"],
                "properties": {"visibility": _number, "I": _number},
            },
        },
    },
}

_plan_setting = {
    "type": "object",
    "required": ["label", "purpose", "bases"],
    "properties": {
        "label": _str,
        "purpose": _str,
        "bases": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["type", "qwpDeg", "hwpDeg"],
                "properties": {
                    "type": _str, "phaseRad": _number, "qwpDeg": _number, "hwpDeg": _number,
                },
            },
        },
        "strings": {"type": "array", "items": _str},
    },
}

PLAN = {
    "type": "object",
    "required": ["scenario", "settings", "waveplates", "hardySettings", "witnessSettings"],
    "properties": {
        "scenario": _scenario,
        "settings": _settings,
        "waveplates": SOLVE["properties"]["waveplates"],
        "hardySettings": {"type": "array", "items": _plan_setting},
        "witnessSettings": {"type": "array", "items": _plan_setting},
    },
}

ANALYZE = {
    "type": "object",
    "required": ["scenario", "rows", "I", "nSigma", "violated"],
    "properties": {
        "scenario": _scenario,
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["string", "kind", "setting", "estimate"],
                "properties": {
                    "string": _str, "kind": _str, "setting": _str, "estimate": _estimate,
                },
            },
        },
        "I": IVALUE,
        "nSigma": {"type": ["number", "string"]},
        "violated": {"type": "boolean"},
    },
}

WITNESS = {
    "type": "object",
    "required": ["n", "wValue", "wSigma", "fidelity", "fidelitySigma"],
    "properties": {
        "n": _int,
        "wValue": _number,
        "wSigma": {"type": "number", "minimum": 0},
        "fidelity": _number,
        "fidelitySigma": {"type": "number", "minimum": 0},
    },
}

IVALUE_OUTPUT = IVALUE

BY_COMMAND = {
    "solve": SOLVE,
    "verify": VERIFY,
    "ivalue": IVALUE_OUTPUT,
    "lhv-bound": LHV,
    "paradox": PARADOX,
    "facet": FACET,
    "visibility": VISIBILITY,
    "plan": PLAN,
    "analyze": ANALYZE,
    "witness": WITNESS,
}
