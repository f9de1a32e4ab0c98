import pytest
from src.errors import HomogeneityError, ScriptSyntaxError
from src.parsers import script_parser
from src.parsers.script_parser import (Assert, Call, Check, Integer, LetBinding, ModuleDecl, PolynomialList, Print,
                                       Ref, RingDecl, Suite)


HEADER = '''
ring S = poly(QQ, x, y);
ring R = quotient(S, [x*y]);
module M = coker(R, twists=[0], matrix=[[x]]);
'''

SCRIPT = HEADER + '''
# the branches of the node are linked to each other
let N = lambda(M);
assert is_horizontally_linked(M);
assert depth(N) >= 1;
print betti(N, 3);
check THM_MS(M = M);
check COR_COR6(M = M, a = [x*y]);
suite [THM_MS, COR_SELF] on corpus(R, small);
'''


def _error(source):
    with pytest.raises(ScriptSyntaxError) as error:
        script_parser.parse(source)
    return error.value


class TestParse:
    def test_statements(self):
        statements = script_parser.parse(SCRIPT).statements

        assert statements == (
            RingDecl('S', 'QQ', ('x', 'y')),
            RingDecl('R', base='S', relations=('x*y',)),
            ModuleDecl('M', 'R', (0,), (('x',),)),
            LetBinding('N', Call('lambda', (Ref('M'),))),
            Assert(Call('is_horizontally_linked', (Ref('M'),))),
            Assert(Call('depth', (Ref('N'),)), '>=', 1),
            Print(Call('betti', (Ref('N'), Integer(3)))),
            Check('THM_MS', (('M', Ref('M')),)),
            Check('COR_COR6', (('M', Ref('M')), ('a', PolynomialList(('x*y',), 'R')))),
            Suite(('THM_MS', 'COR_SELF'), 'R', 'small'),
        )


    def test_positions(self):
        statements = script_parser.parse(SCRIPT).statements

        assert statements[0].position == (2, 6)


    def test_declarations(self):
        assert len(script_parser.parse(SCRIPT).declarations()) == 4


    def test_prime_field(self):
        statement = script_parser.parse('ring S = poly(GF(7), x);').statements[0]

        assert statement.coefficients == 'GF(7)'


    def test_explicit_relation_twists(self):
        source = HEADER + 'module Z = coker(R, twists=[0], matrix=[[0]], rel_twists=[1]);'

        assert script_parser.parse(source).statements[-1].rel_twists == (1,)


    def test_free_module_constructor(self):
        call = script_parser.parse(HEADER + 'print free(R, [0, -1]);').statements[-1].target

        assert call.args[1].values == (0, -1)


    def test_pretty_print_round_trip(self):
        script = script_parser.parse(SCRIPT)

        assert script_parser.parse(script_parser.pretty_print(script)) == script


class TestSyntaxErrors:
    def test_missing_semicolon(self):
        error = _error('ring S = poly(QQ, x, y)\nring R = quotient(S, [x*y]);')

        assert (error.line, error.column) == (2, 1)
        assert error.expected == ('";"',)


    def test_unexpected_character(self):
        error = _error(HEADER + 'print @;')

        assert error.line == 5
        assert 'identifier' in error.expected


    def test_end_of_input(self):
        assert 'end of input' in str(_error('ring S = poly(QQ, x'))


class TestSemanticErrors:
    def test_non_homogeneous_entry(self):
        with pytest.raises(HomogeneityError) as error:
            script_parser.parse(HEADER + 'module B = coker(R, twists=[0], matrix=[[x + 1]]);')

        assert 'matrix entry x + 1 is not homogeneous' in str(error.value)
        assert error.value.monomial == 'x'


    def test_non_homogeneous_column(self):
        with pytest.raises(HomogeneityError):
            script_parser.parse(HEADER + 'module B = coker(R, twists=[0, 0], matrix=[[x], [y^2]]);')


    def test_zero_column_needs_relation_twists(self):
        assert 'rel_twists' in _error(HEADER + 'module Z = coker(R, twists=[0], matrix=[[0]]);').message


    def test_redeclaration(self):
        assert _error(HEADER + 'ring M = poly(QQ, x);').message == 'M is already declared'


    def test_unknown_function(self):
        assert _error(HEADER + 'print foo(M);').message == 'unknown function foo'


    def test_unknown_variable(self):
        assert 'unknown variable z' in _error(HEADER + 'module B = coker(R, twists=[0], matrix=[[z]]);').message


    def test_comparison_needs_a_number(self):
        assert 'does not return a number' in _error(HEADER + 'assert is_cm(M) == 1;').message


    def test_bare_assert_needs_a_predicate(self):
        assert 'is not a predicate' in _error(HEADER + 'assert depth(M);').message


    def test_argument_kinds(self):
        assert _error(HEADER + 'print depth(R);').message == 'R is a ring; a module was expected'


    def test_operands_over_different_rings(self):
        source = HEADER + 'module B = coker(S, twists=[0], matrix=[[x]]);\nprint tensor(M, B);'

        assert 'mixes operands' in _error(source).message


    def test_unknown_theorem(self):
        assert 'unknown theorem id' in _error(HEADER + 'check THM_NOPE(M = M);').message


    def test_ideal_needs_a_ring(self):
        assert 'cannot tell which ring' in _error(HEADER + 'check COR_COR6(a = [x*y]);').message
