import re
from dataclasses import dataclass
from enum import Enum

from sympy import isprime
from sympy.polys.domains import GF, QQ

from src.errors import StructuralError


MAX_PRIME = 2 ** 31


class FieldKind(Enum):
    EXACT_RATIONALS = 'QQ'
    PRIME_FIELD = 'GF'


@dataclass(frozen=True)
class Field:
    """Coefficient field: exact rationals or a prime field GF(p) with p < 2^31."""
    kind: FieldKind = FieldKind.EXACT_RATIONALS
    characteristic: int = 0

    def __post_init__(self):
        if self.kind is FieldKind.PRIME_FIELD:
            if not (1 < self.characteristic < MAX_PRIME) or not isprime(self.characteristic):
                raise StructuralError(f'GF({self.characteristic}) needs a prime below 2^31')
        elif self.characteristic != 0:
            raise StructuralError('the rationals have characteristic 0')

    @property
    def domain(self):
        if self.kind is FieldKind.PRIME_FIELD:
            return GF(self.characteristic)
        return QQ

    @property
    def name(self):
        if self.kind is FieldKind.PRIME_FIELD:
            return f'GF({self.characteristic})'
        return 'QQ'

    def __str__(self):
        return self.name


RATIONALS = Field()


def prime_field(p):
    return Field(FieldKind.PRIME_FIELD, p)


def parse_field(text):
    """Parses 'QQ' or 'GF(p)'.

    Parameters:

    text (str): field name as written in scripts and on the command line

    Returns:

    Field: the parsed field
    """
    text = text.strip()
    if text == 'QQ':
        return RATIONALS
    match = re.fullmatch(r'GF\(\s*(\d+)\s*\)', text)
    if match is None:
        raise StructuralError(f'unknown field "{text}"')
    return prime_field(int(match.group(1)))


def coefficient_parts(domain, c):
    """Numerator and denominator of a field element as plain integers."""
    if domain.is_FiniteField:
        return int(c) % domain.characteristic(), 1
    return int(c.numerator), int(c.denominator)


def coefficient_from_parts(domain, numerator, denominator=1):
    return domain.quo(domain.convert(numerator), domain.convert(denominator))
