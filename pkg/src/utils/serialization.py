"""Plain-JSON forms of polynomials, presentations, resolutions and verdicts."""
import json
import math
from enum import Enum

from src.algebra.field import coefficient_from_parts, coefficient_parts
from src.algebra.polynomials import format_polynomial, polynomial_from_terms


def polynomial_to_json(p):
    """[[exponents, [numerator, denominator]], ...] sorted by exponent vector."""
    domain = p.ring.domain
    return [[list(m), list(coefficient_parts(domain, c))] for m, c in sorted(p.items())]


def polynomial_from_json(poly_ring, data):
    domain = poly_ring.domain
    return polynomial_from_terms(poly_ring, {tuple(m): coefficient_from_parts(domain, n, d) for m, (n, d) in data})


def resolution_to_json(resolution):
    return {
        'twists': [list(t) for t in resolution.twists],
        'maps': [[[polynomial_to_json(p) for p in column] for column in d] for d in resolution.maps],
        'complete': resolution.complete,
    }


def resolution_from_json(ring, data):
    from src.modules.resolution import Resolution

    poly_ring = ring.poly_ring
    maps = tuple(tuple(tuple(polynomial_from_json(poly_ring, p) for p in column) for column in d)
                 for d in data['maps'])
    return Resolution(ring, tuple(tuple(t) for t in data['twists']), maps, bool(data['complete']))


def presentation_to_json(M):
    return {
        'ring': str(M.ring),
        'gen_twists': list(M.gen_twists),
        'rel_twists': list(M.rel_twists),
        'matrix': [[format_polynomial(p) for p in row] for row in M.rows],
    }


def to_jsonable(value):
    """Converts workbench values into JSON-ready data with a fixed key order."""
    from src.algebra.hilbert import HilbertSeries
    from src.modules.presentation import ModulePresentation
    from src.modules.resolution import BettiTable

    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, ModulePresentation):
        return presentation_to_json(value)
    if isinstance(value, BettiTable):
        return [[i, j, c] for (i, j), c in value.entries]
    if isinstance(value, HilbertSeries):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    return str(value)


def dumps(data):
    """Deterministic JSON text."""
    return json.dumps(data, ensure_ascii=False, indent=2)
