"""JSON product-spec files.

Schema::

    {
      "factors": [
        {"kind": "affine_power", "c": 2, "b": 3, "beta": 1},
        {"kind": "power_law", "A": 3, "alpha": 0.7},
        {"kind": "explicit", "values": [1.0, 2.5, 2.5]}
      ],
      "arithmeticMode": "auto"          # optional: auto|integer_exact|float_log
    }

Unknown keys are rejected and named in the error message.
"""

from __future__ import annotations

import json

from .counting import ProductSpec
from .errors import SpecFileError
from .sequences import AffinePower, Explicit, PowerLaw, SequenceSpec

_FACTOR_KEYS = {
    "affine_power": {"c", "b", "beta"},
    "power_law": {"A", "alpha"},
    "explicit": {"values"},
}


def _require_number(obj, key, where):
    value = obj.get(key)
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise SpecFileError(f"key '{key}' in {where} must be a number")
    return float(value)


def sequence_from_obj(obj, where: str = "factor") -> SequenceSpec:
    if not isinstance(obj, dict):
        raise SpecFileError(f"{where} must be a JSON object")
    kind = obj.get("kind")
    if kind not in _FACTOR_KEYS:
        raise SpecFileError(
            f"key 'kind' in {where} must be one of {sorted(_FACTOR_KEYS)}, got {kind!r}"
        )
    expected = _FACTOR_KEYS[kind] | {"kind"}
    for key in obj:
        if key not in expected:
            raise SpecFileError(f"unknown key '{key}' in {where}")
    for key in _FACTOR_KEYS[kind]:
        if key not in obj:
            raise SpecFileError(f"missing key '{key}' in {where}")
    try:
        if kind == "affine_power":
            return AffinePower(
                _require_number(obj, "c", where),
                _require_number(obj, "b", where),
                _require_number(obj, "beta", where),
            )
        if kind == "power_law":
            return PowerLaw(_require_number(obj, "A", where), _require_number(obj, "alpha", where))
        values = obj["values"]
        if not isinstance(values, list):
            raise SpecFileError(f"key 'values' in {where} must be a list")
        return Explicit(tuple(values))
    except ValueError as exc:
        raise SpecFileError(f"invalid {where}: {exc}") from exc


def sequence_to_obj(spec: SequenceSpec) -> dict:
    if isinstance(spec, AffinePower):
        return {"kind": "affine_power", "c": spec.c, "b": spec.b, "beta": spec.beta}
    if isinstance(spec, PowerLaw):
        return {"kind": "power_law", "A": spec.big_a, "alpha": spec.alpha}
    return {"kind": "explicit", "values": list(spec.values)}


def product_from_obj(obj) -> ProductSpec:
    if not isinstance(obj, dict):
        raise SpecFileError("spec file must contain a JSON object")
    for key in obj:
        if key not in ("factors", "arithmeticMode"):
            raise SpecFileError(f"unknown key '{key}' in spec file")
    factors = obj.get("factors")
    if not isinstance(factors, list) or not factors:
        raise SpecFileError("key 'factors' must be a nonempty list")
    specs = tuple(
        sequence_from_obj(f, where=f"factors[{i}]") for i, f in enumerate(factors)
    )
    mode = obj.get("arithmeticMode", "auto")
    try:
        return ProductSpec(specs, mode)
    except ValueError as exc:
        raise SpecFileError(f"invalid key 'arithmeticMode': {exc}") from exc


def product_to_obj(spec: ProductSpec) -> dict:
    return {
        "factors": [sequence_to_obj(f) for f in spec.factors],
        "arithmeticMode": spec.arithmetic_mode,
    }


def load_product_spec(path) -> ProductSpec:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"not valid JSON: {exc}") from exc
    return product_from_obj(obj)


def dump_product_spec(spec: ProductSpec) -> str:
    return json.dumps(product_to_obj(spec), indent=2)
