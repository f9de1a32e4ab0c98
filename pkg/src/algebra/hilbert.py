"""Hilbert series of graded modules via leading-term modules."""
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from sympy.polys.monomials import monomial_div, monomial_lcm

from src.algebra.polynomials import total_degree


def _clean(numerator):
    return tuple(sorted((e, c) for e, c in numerator.items() if c != 0))


@dataclass(frozen=True)
class HilbertSeries:
    """HS(t) = numerator(t) / (1 - t)^num_variables with an integer Laurent numerator.

    The numerator is stored as sorted (exponent, coefficient) pairs.
    """
    numerator: tuple
    num_variables: int

    @classmethod
    def from_dict(cls, numerator, num_variables):
        return cls(_clean(numerator), num_variables)

    @classmethod
    def zero(cls, num_variables):
        return cls((), num_variables)

    def as_dict(self):
        return dict(self.numerator)

    def __add__(self, other):
        total = self.as_dict()
        for e, c in other.numerator:
            total[e] = total.get(e, 0) + c
        return HilbertSeries.from_dict(total, self.num_variables)

    def __sub__(self, other):
        return self + other.shift(0, -1)

    def shift(self, a, sign=1):
        """Multiplies by sign·t^a."""
        return HilbertSeries.from_dict({e + a: sign * c for e, c in self.numerator}, self.num_variables)

    def is_zero(self):
        return not self.numerator

    def reduced(self):
        """Cancels the factors (1 - t) shared by numerator and denominator.

        Returns:

        tuple: (numerator dict, power p) with HS = numerator / (1 - t)^p and numerator(1) != 0
        """
        numerator = self.as_dict()
        power = self.num_variables
        if not numerator:
            return {}, 0
        while power > 0 and sum(numerator.values()) == 0:
            quotient = {}
            carry = 0
            for e in range(min(numerator), max(numerator) + 1):
                carry += numerator.get(e, 0)
                if carry:
                    quotient[e] = carry
            numerator = quotient
            power -= 1
        return numerator, power

    @property
    def dimension(self):
        """Krull dimension: the pole order at t = 1; -1 for the zero module."""
        numerator, power = self.reduced()
        return power if numerator else -1

    def coefficient(self, degree):
        """dim_k of the degree-`degree` component."""
        numerator, power = self.reduced()
        if power == 0:
            return numerator.get(degree, 0)
        total = 0
        for e, c in numerator.items():
            if degree - e >= 0:
                total += c * comb(degree - e + power - 1, power - 1)
        return total

    @property
    def length(self):
        """Total dimension over k when finite, else None."""
        numerator, power = self.reduced()
        if power > 0:
            return None
        return sum(numerator.values())

    def __str__(self):
        numerator, power = self.reduced()
        if not numerator:
            return '0'
        pieces = []
        for e in sorted(numerator):
            c = numerator[e]
            body = '1' if e == 0 else ('t' if e == 1 else f't^{e}')
            magnitude = '' if abs(c) == 1 and body != '1' else str(abs(c))
            text = f'{magnitude}*{body}' if magnitude and body != '1' else (magnitude or body)
            if not pieces:
                pieces.append(f'-{text}' if c < 0 else text)
            else:
                pieces.append(f'- {text}' if c < 0 else f'+ {text}')
        top = ' '.join(pieces)
        if power == 0:
            return top
        bottom = '(1 - t)' if power == 1 else f'(1 - t)^{power}'
        return f'({top})/{bottom}'


def _minimal_monomials(monomials):
    unique = sorted(set(monomials), key=lambda m: (total_degree(m), m))
    minimal = []
    for m in unique:
        if not any(monomial_div(m, g) is not None for g in minimal):
            minimal.append(m)
    return tuple(minimal)


@lru_cache(maxsize=4096)
def _numerator_of_monomial_quotient(generators):
    """K-polynomial of S/J for a minimal tuple of monomial generators of J."""
    if not generators:
        return ((0, 1),)
    if any(total_degree(m) == 0 for m in generators):
        return ()
    if len(generators) == 1:
        return _clean({0: 1, total_degree(generators[0]): -1})
    *rest, last = generators
    rest = _minimal_monomials(rest)
    colon = _minimal_monomials([monomial_div(monomial_lcm(m, last), last) for m in rest])
    upper = dict(_numerator_of_monomial_quotient(rest))
    lower = _numerator_of_monomial_quotient(colon)
    shift = total_degree(last)
    for e, c in lower:
        upper[e + shift] = upper.get(e + shift, 0) - c
    return _clean(upper)


def monomial_quotient_series(monomials, num_variables):
    """HS(S / (monomials))."""
    return HilbertSeries(_numerator_of_monomial_quotient(_minimal_monomials(monomials)), num_variables)


def series_of_basis(basis, twists, num_variables):
    """HS(S^rank / L) from a Gröbner basis of L, with the given generator twists."""
    by_position = {i: [] for i in range(len(twists))}
    for position, monomial in basis.leading_terms:
        by_position[position].append(monomial)
    total = HilbertSeries.zero(num_variables)
    for position, monomials in by_position.items():
        total = total + monomial_quotient_series(monomials, num_variables).shift(twists[position])
    return total


def hilbert_series(M):
    """Hilbert series of a module presentation over a graded quotient ring.

    Parameters:

    M (ModulePresentation): the graded module

    Returns:

    HilbertSeries: numerator(t) / (1 - t)^n
    """
    return series_of_basis(M.relation_basis, M.gen_twists, M.ring.num_variables)
