"""Polynomial rings over a Field and the flat term representation used by the
Gröbner engine.

Polynomials are sympy ``PolyElement`` objects (sparse dicts monomial -> coefficient).
Free-module vectors are tuples of such polynomials; inside the engine a vector is
flattened to a dict ``{(position, monomial): coefficient}``.
"""
from enum import Enum

from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import ring as sympy_ring

from src.algebra.field import coefficient_parts
from src.errors import HomogeneityError, StructuralError


class MonomialOrder(Enum):
    GREVLEX = 'grevlex'
    LEX = 'lex'

    @property
    def key(self):
        return grevlex if self is MonomialOrder.GREVLEX else lex


def make_polynomial_ring(field, variables, order=MonomialOrder.GREVLEX):
    """Creates the sympy polynomial ring k[x_1..x_n].

    Parameters:

    field (Field): coefficient field

    variables (list of str): variable names, in order x_1 > ... > x_n

    order (MonomialOrder) - optional: monomial order, grevlex by default

    Returns:

    sympy.polys.rings.PolyRing: the polynomial ring
    """
    if len(variables) == 0:
        raise StructuralError('a ring needs at least one variable')
    if len(set(variables)) != len(variables):
        raise StructuralError(f'repeated variable names in {list(variables)}')
    result = sympy_ring(','.join(variables), field.domain, order.key)
    return result[0]


def total_degree(monomial):
    return sum(monomial)


def is_homogeneous(p):
    degrees = {total_degree(m) for m in p.keys()}
    return len(degrees) <= 1


def degree_of(p):
    """Degree of a nonzero homogeneous polynomial; None for zero."""
    for m in p.keys():
        return total_degree(m)
    return None


def require_homogeneous(p, what='polynomial'):
    if is_homogeneous(p):
        return
    terms = sorted(p.keys(), key=total_degree)
    lowest, highest = terms[0], terms[-1]
    raise HomogeneityError(f'{what} {format_polynomial(p)} is not homogeneous',
                           monomial=format_monomial(p.ring, highest if total_degree(highest) != total_degree(lowest) else lowest))


def monomial_basis(num_variables, degree):
    """All exponent vectors of the given total degree, largest in lex first."""
    if degree < 0:
        return []
    if num_variables == 1:
        return [(degree,)]
    result = []
    for first in range(degree, -1, -1):
        for rest in monomial_basis(num_variables - 1, degree - first):
            result.append((first,) + rest)
    return result


def format_monomial(poly_ring, monomial):
    factors = []
    for name, exponent in zip(poly_ring.symbols, monomial):
        if exponent == 1:
            factors.append(str(name))
        elif exponent > 1:
            factors.append(f'{name}^{exponent}')
    return '*'.join(factors) if factors else '1'


def format_polynomial(p):
    """Canonical text of a polynomial: terms in decreasing monomial order,
    coefficients as reduced integers or fractions."""
    if not p:
        return '0'
    poly_ring = p.ring
    domain = poly_ring.domain
    pieces = []
    for monomial in sorted(p.keys(), key=poly_ring.order, reverse=True):
        numerator, denominator = coefficient_parts(domain, p[monomial])
        negative = numerator < 0
        numerator = abs(numerator)
        coefficient = f'{numerator}/{denominator}' if denominator != 1 else str(numerator)
        body = format_monomial(poly_ring, monomial)
        if body == '1':
            term = coefficient
        elif coefficient == '1':
            term = body
        else:
            term = f'{coefficient}*{body}'
        if not pieces:
            pieces.append(f'-{term}' if negative else term)
        else:
            pieces.append(f'- {term}' if negative else f'+ {term}')
    return ' '.join(pieces)


def polynomial_from_terms(poly_ring, terms):
    """Builds a polynomial from a {monomial: coefficient} dict, dropping zeros."""
    result = poly_ring.zero.copy()
    for monomial, c in terms.items():
        if c:
            result[monomial] = c
    return result


def flatten(vector):
    """Tuple of polynomials -> {(position, monomial): coefficient}."""
    terms = {}
    for position, p in enumerate(vector):
        for monomial, c in p.items():
            terms[(position, monomial)] = c
    return terms


def unflatten(poly_ring, terms, rank):
    buckets = [dict() for _ in range(rank)]
    for (position, monomial), c in terms.items():
        buckets[position][monomial] = c
    return tuple(polynomial_from_terms(poly_ring, bucket) for bucket in buckets)


def unit_vector(poly_ring, rank, position):
    return tuple(poly_ring.one if i == position else poly_ring.zero for i in range(rank))


def vector_degree(vector, twists):
    """Degree of a homogeneous vector in a free module with the given twists;
    None for the zero vector."""
    for position, p in enumerate(vector):
        if p:
            return degree_of(p) + twists[position]
    return None


def require_homogeneous_vector(vector, twists, what='vector'):
    degree = None
    for position, p in enumerate(vector):
        if not p:
            continue
        require_homogeneous(p, what)
        d = degree_of(p) + twists[position]
        if degree is None:
            degree = d
        elif d != degree:
            raise HomogeneityError(f'{what} mixes degrees {degree} and {d}',
                                   monomial=format_polynomial(p))
    return degree


