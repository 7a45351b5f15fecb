"""Input validation functions."""

from marshmallow import ValidationError

from koszul.models.monomial import v_degree
from koszul.utils.schemas import ModuleFileSchema


def _flatten(messages, prefix=''):
    if isinstance(messages, dict):
        out = []
        for key, value in messages.items():
            out.extend(_flatten(value, f'{prefix}{key}.'))
        return out
    if isinstance(messages, list) and messages and all(isinstance(m, str) for m in messages):
        return [f"{prefix.rstrip('.')}: {m}" for m in messages]
    if isinstance(messages, list):
        out = []
        for m in messages:
            out.extend(_flatten(m, prefix))
        return out
    return [f"{prefix.rstrip('.')}: {messages}"]


def validate_module_document(data):
    """Validate a module file document; returns (valid, errors, loaded)."""
    try:
        loaded = ModuleFileSchema().load(data)
    except ValidationError as e:
        return False, _flatten(e.messages), None

    errors = []
    degrees = {}
    for generator in loaded['generators']:
        if generator['id'] in degrees:
            errors.append(f"duplicate generator id '{generator['id']}'")
        degrees[generator['id']] = generator['degree']

    for source, terms in loaded['differential'].items():
        if source not in degrees:
            errors.append(f"differential given for unknown generator '{source}'")
            continue
        for position, term in enumerate(terms):
            target = term['gen']
            where = f"d({source}) term {position}"
            if target not in degrees:
                errors.append(f"{where}: unknown generator '{target}'")
                continue
            expected = degrees[source] - 1
            if 'R' in term:
                actual = -term['R'] + degrees[target]
                label = f"R{term['R']} {target}"
            else:
                actual = v_degree(term['v']) + degrees[target]
                label = f"v{term['v']} {target}"
            if actual != expected:
                errors.append(
                    f"{where}: {label} has degree {actual}, expected {expected} "
                    f"(deg({source}) - 1)"
                )
    return len(errors) == 0, errors, loaded


def validate_window_bounds(x_min, x_max, s_max, n, weight_max=None, s_min=0):
    """Validate window bounds."""
    errors = []
    if x_min > x_max:
        errors.append(f"x_min ({x_min}) must not exceed x_max ({x_max})")
    if s_max < 0:
        errors.append("s_max must be non-negative")
    if s_min < 0 or s_min > max(s_max, 0):
        errors.append(f"s_min ({s_min}) must lie in [0, s_max]")
    if n < -1:
        errors.append("n must be at least -1")
    if weight_max is not None and weight_max < 0:
        errors.append("weight_max must be non-negative")
    return len(errors) == 0, errors
