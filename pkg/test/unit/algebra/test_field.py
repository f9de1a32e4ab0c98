import pytest
from src.algebra import field
from src.errors import StructuralError


class TestParseField:
    def test_rationals(self):
        result = field.parse_field('QQ')

        assert result == field.RATIONALS
        assert result.name == 'QQ'


    def test_prime_field_with_spaces(self):
        result = field.parse_field(' GF( 7 ) ')

        assert result == field.prime_field(7)
        assert str(result) == 'GF(7)'


    def test_composite_characteristic_is_rejected(self):
        with pytest.raises(StructuralError):
            field.parse_field('GF(9)')


    def test_unknown_field_is_rejected(self):
        with pytest.raises(StructuralError):
            field.parse_field('RR')


    def test_prime_at_the_limit_is_rejected(self):
        with pytest.raises(StructuralError):
            field.prime_field(field.MAX_PRIME)


class TestCoefficientParts:
    def test_rational_parts(self):
        domain = field.RATIONALS.domain
        c = field.coefficient_from_parts(domain, -3, 6)

        assert field.coefficient_parts(domain, c) == (-1, 2)


    def test_prime_field_parts_are_canonical_residues(self):
        domain = field.prime_field(5).domain
        c = field.coefficient_from_parts(domain, -1)

        assert field.coefficient_parts(domain, c) == (4, 1)
