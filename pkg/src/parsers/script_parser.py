"""The workbench scripting language.

A script declares rings and modules, derives new modules with `let`, and then
asks questions about them:

    ring R = poly(QQ, x, y);
    ring A = quotient(R, [x*y]);
    module M = coker(A, twists=[0], matrix=[[x]]);
    let N = lambda(M);
    assert is_horizontally_linked(M);
    print depth(N);
    check THM_MS(M = M);
    suite [THM_TH1, COR_COR5] on corpus(A, small);

Parsing resolves every name and checks every polynomial for homogeneity, so a
script that parses only fails at run time for mathematical reasons.
"""
import logging
from dataclasses import dataclass, field

import lark
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from src.algebra.field import parse_field
from src.algebra.polynomials import (format_monomial, format_polynomial, is_homogeneous, make_polynomial_ring,
                                     require_homogeneous_vector, total_degree)
from src.errors import HomogeneityError, ScriptSyntaxError, StructuralError
from src.parsers.polynomial_parser import POLYNOMIAL_GRAMMAR, evaluate
from src.services.reports import TheoremId


logger = logging.getLogger(__name__)

GRAMMAR = r"""
script: statement*

?statement: ring_decl
    | module_decl
    | let_stmt
    | assert_stmt
    | print_stmt
    | check_stmt
    | suite_stmt

ring_decl: "ring" NAME "=" ring_expr ";"
ring_expr: "poly" "(" field "," NAME ("," NAME)* ")" -> poly_ring
    | "quotient" "(" NAME "," poly_list ")" -> quotient_ring
field: NAME
    | NAME "(" INT ")"

module_decl: "module" NAME "=" "coker" "(" NAME "," "twists" "=" int_list "," "matrix" "=" matrix [rel_twists] ")" ";"
rel_twists: "," "rel_twists" "=" int_list
matrix: "[" [poly_list ("," poly_list)*] "]"
int_list: "[" [SIGNED_INT ("," SIGNED_INT)*] "]"
poly_list: "[" [polynomial ("," polynomial)*] "]"

let_stmt: "let" NAME "=" expr ";"
assert_stmt: "assert" call [COMPARISON SIGNED_INT] ";"
print_stmt: "print" expr ";"
check_stmt: "check" NAME "(" [binding ("," binding)*] ")" ";"
binding: NAME "=" arg
suite_stmt: "suite" "[" [NAME ("," NAME)*] "]" "on" "corpus" "(" NAME "," NAME ")" ";"

?expr: call
    | NAME -> ref
call: NAME "(" [arg ("," arg)*] ")"
?arg: expr
    | SIGNED_INT -> integer
    | poly_list

COMPARISON: "==" | "!=" | "<=" | ">=" | "<" | ">"
COMMENT: /#[^\n]*/

%import common.SIGNED_INT
%import common.WS
%ignore WS
%ignore COMMENT
""" + POLYNOMIAL_GRAMMAR

MODULE, RING, INT, INTS, POLYS = 'module', 'ring', 'int', 'ints', 'polys'
CONSTRUCTOR, PREDICATE, NUMBER, VALUE = 'constructor', 'predicate', 'number', 'value'


@dataclass(frozen=True)
class Signature:
    params: tuple
    result: str


FUNCTIONS = {
    'lambda': Signature((MODULE,), CONSTRUCTOR),
    'transpose': Signature((MODULE,), CONSTRUCTOR),
    'transpose_wrt': Signature((MODULE, MODULE), CONSTRUCTOR),
    'syzygy': Signature((MODULE, INT), CONSTRUCTOR),
    'ext': Signature((MODULE, MODULE, INT), CONSTRUCTOR),
    'tor': Signature((MODULE, MODULE, INT), CONSTRUCTOR),
    'tensor': Signature((MODULE, MODULE), CONSTRUCTOR),
    'hom': Signature((MODULE, MODULE), CONSTRUCTOR),
    'canonical': Signature((RING,), CONSTRUCTOR),
    'dual': Signature((MODULE,), CONSTRUCTOR),
    'pushforward': Signature((MODULE, MODULE), CONSTRUCTOR),
    'free': Signature((RING, INTS), CONSTRUCTOR),
    'cyclic': Signature((RING, POLYS), CONSTRUCTOR),
    'ideal': Signature((RING, POLYS), CONSTRUCTOR),
    'residue': Signature((RING,), CONSTRUCTOR),
    'direct_sum': Signature((MODULE, MODULE), CONSTRUCTOR),
    'twist': Signature((MODULE, INT), CONSTRUCTOR),
    'stable_part': Signature((MODULE,), CONSTRUCTOR),
    'link': Signature((MODULE,), CONSTRUCTOR),
    'is_horizontally_linked': Signature((MODULE,), PREDICATE),
    'is_stable': Signature((MODULE,), PREDICATE),
    'is_self_linked': Signature((MODULE,), PREDICATE),
    'serre_tilde': Signature((MODULE, INT), PREDICATE),
    'is_cm': Signature((MODULE,), PREDICATE),
    'is_mcm': Signature((MODULE,), PREDICATE),
    'in_auslander_class': Signature((MODULE, MODULE), PREDICATE),
    'is_semidualizing': Signature((MODULE,), PREDICATE),
    'iso': Signature((MODULE, MODULE), PREDICATE),
    'linked_by_ideal': Signature((RING, POLYS, POLYS, POLYS), PREDICATE),
    'depth': Signature((MODULE,), NUMBER),
    'dim': Signature((MODULE,), NUMBER),
    'rgr': Signature((MODULE, MODULE), NUMBER),
    'grade': Signature((MODULE,), NUMBER),
    'pd': Signature((MODULE,), NUMBER),
    'cc': Signature((MODULE,), NUMBER),
    'betti': Signature((MODULE, INT), VALUE),
    'hilbert': Signature((MODULE,), VALUE),
    'gc_dim': Signature((MODULE, MODULE), VALUE),
    'lc_degrees': Signature((MODULE,), VALUE),
}

_NAMED_TOKENS = {
    'NAME': 'identifier',
    'SIGNED_INT': 'integer',
    'INT': 'integer',
    'COMPARISON': 'comparison',
    '$END': 'end of input',
}


# Syntax tree. Positions are (line, column) and take no part in equality.

@dataclass(frozen=True)
class Ref:
    name: str
    position: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Integer:
    value: int
    position: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class IntegerList:
    values: tuple
    position: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class PolynomialList:
    """Polynomials in canonical text form, read in the ring `ring`."""
    polynomials: tuple
    ring: str = None
    position: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Call:
    function: str
    args: tuple
    position: tuple = field(default=None, compare=False, repr=False)

    @property
    def signature(self):
        return FUNCTIONS[self.function]


@dataclass(frozen=True)
class RingDecl:
    """poly(field, variables) when `base` is None, quotient(base, relations) otherwise."""
    name: str
    coefficients: str = None
    variables: tuple = ()
    base: str = None
    relations: tuple = ()
    position: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class ModuleDecl:
    name: str
    ring: str
    twists: tuple
    matrix: tuple
    rel_twists: tuple = None
    position: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class LetBinding:
    name: str
    expr: object
    position: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Assert:
    predicate: Call
    comparison: str = None
    value: int = None
    position: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Print:
    target: object
    position: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Check:
    theorem: str
    bindings: tuple
    position: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Suite:
    theorems: tuple
    ring: str
    size: str
    position: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Script:
    statements: tuple = ()

    def declarations(self):
        return tuple(s for s in self.statements if isinstance(s, (RingDecl, ModuleDecl, LetBinding)))


def _position(node):
    if isinstance(node, lark.Token):
        return (node.line, node.column)
    if node.meta.empty:
        return None
    return (node.meta.line, node.meta.column)


def _fail(message, node):
    position = _position(node) if node is not None else None
    line, column = position if position else (None, None)
    raise ScriptSyntaxError(message, line, column)


def _display(terminal):
    if terminal in _NAMED_TOKENS:
        return _NAMED_TOKENS[terminal]
    try:
        pattern = parse.parser.get_terminal(terminal).pattern
    except KeyError:
        return terminal
    return f'"{pattern.value}"' if pattern.type == 'str' else terminal


def _syntax_error(error):
    if isinstance(error, UnexpectedCharacters):
        return ScriptSyntaxError(f'unexpected character {error.char!r}', error.line, error.column,
                                 {_display(t) for t in error.allowed or ()})
    if isinstance(error, UnexpectedEOF):
        return ScriptSyntaxError('unexpected end of input', None, None, {_display(t) for t in error.expected})
    if isinstance(error, UnexpectedToken):
        found = 'end of input' if error.token.type == '$END' else repr(str(error.token))
        return ScriptSyntaxError(f'unexpected {found}', error.line, error.column,
                                 {_display(t) for t in error.expected})
    return ScriptSyntaxError(str(error), getattr(error, 'line', None), getattr(error, 'column', None))


@dataclass
class _Scope:
    """Declared names: rings map to their polynomial rings, modules to the name of their ring."""
    poly_rings: dict = field(default_factory=dict)
    module_rings: dict = field(default_factory=dict)

    def declare(self, name, node):
        if name in self.poly_rings or name in self.module_rings:
            _fail(f'{name} is already declared', node)

    def ring(self, token):
        name = str(token)
        if name not in self.poly_rings:
            kind = 'a module' if name in self.module_rings else 'not declared'
            _fail(f'{name} is {kind}; a ring was expected', token)
        return name

    def module_ring(self, token):
        name = str(token)
        if name not in self.module_rings:
            kind = 'a ring' if name in self.poly_rings else 'not declared'
            _fail(f'{name} is {kind}; a module was expected', token)
        return self.module_rings[name]


class _ScriptBuilder:
    """Turns the lark tree into the syntax tree, resolving names and degrees."""

    def __init__(self):
        self.scope = _Scope()

    def build(self, tree):
        return Script(tuple(self.statement(child) for child in tree.children))

    def statement(self, node):
        return getattr(self, node.data)(node)

    def _polynomial(self, node, ring, what):
        poly_ring = self.scope.poly_rings[ring]
        try:
            p = evaluate(node, poly_ring)
        except StructuralError as error:
            _fail(str(error), node)
        if not is_homogeneous(p):
            terms = sorted(p.keys(), key=total_degree)
            line, column = _position(node) or (None, None)
            raise HomogeneityError(f'Line {line}, column {column}: {what} {format_polynomial(p)} is not homogeneous',
                                   monomial=format_monomial(poly_ring, terms[-1]))
        return p

    def _polynomials(self, node, ring, what):
        return [self._polynomial(child, ring, what) for child in node.children if child is not None]

    def _integers(self, node):
        return tuple(int(child) for child in node.children if child is not None)

    def ring_decl(self, node):
        name_token, expr = node.children
        name = str(name_token)
        self.scope.declare(name, name_token)
        if expr.data == 'poly_ring':
            field_node, *variables = expr.children
            field_text = self._field(field_node)
            variables = tuple(str(v) for v in variables)
            try:
                poly_ring = make_polynomial_ring(parse_field(field_text), list(variables))
            except StructuralError as error:
                _fail(str(error), field_node)
            self.scope.poly_rings[name] = poly_ring
            return RingDecl(name, field_text, variables, position=_position(name_token))
        base_token, relations = expr.children
        base = self.scope.ring(base_token)
        polynomials = self._polynomials(relations, base, 'relation')
        self.scope.poly_rings[name] = self.scope.poly_rings[base]
        return RingDecl(name, base=base, relations=tuple(format_polynomial(p) for p in polynomials if p),
                        position=_position(name_token))

    def _field(self, node):
        if len(node.children) == 1:
            return str(node.children[0])
        return f'{node.children[0]}({node.children[1]})'

    def module_decl(self, node):
        name_token, ring_token, twists_node, matrix_node, rel_node = node.children
        name = str(name_token)
        self.scope.declare(name, name_token)
        ring = self.scope.ring(ring_token)
        twists = self._integers(twists_node)
        rows = [self._polynomials(row, ring, 'matrix entry') for row in matrix_node.children if row is not None]
        if len(rows) != len(twists):
            _fail(f'{len(twists)} generator twists but {len(rows)} matrix rows', matrix_node)
        num_columns = len(rows[0]) if rows else 0
        if any(len(row) != num_columns for row in rows):
            _fail('matrix rows have different lengths', matrix_node)
        rel_twists = self._integers(rel_node.children[0]) if rel_node is not None else None
        if rel_twists is not None and len(rel_twists) != num_columns:
            _fail(f'{num_columns} matrix columns but {len(rel_twists)} relation twists', rel_node)
        for j in range(num_columns):
            column = tuple(row[j] for row in rows)
            try:
                degree = require_homogeneous_vector(column, twists, f'matrix column {j}')
            except HomogeneityError as error:
                line, col = _position(matrix_node) or (None, None)
                located = HomogeneityError(f'Line {line}, column {col}: {error}')
                located.monomial = error.monomial
                raise located from None
            if degree is None and rel_twists is None:
                _fail(f'matrix column {j} is zero; give rel_twists explicitly', matrix_node)
            if degree is not None and rel_twists is not None and degree != rel_twists[j]:
                _fail(f'matrix column {j} has degree {degree} but rel_twists gives {rel_twists[j]}', rel_node)
        self.scope.module_rings[name] = ring
        matrix = tuple(tuple(format_polynomial(p) for p in row) for row in rows)
        return ModuleDecl(name, ring, twists, matrix, rel_twists, position=_position(name_token))

    def let_stmt(self, node):
        name_token, expr_node = node.children
        expr, kind, ring = self.expr(expr_node)
        if kind != MODULE:
            _fail(f'let needs a module on the right-hand side, not a {kind}', expr_node)
        name = str(name_token)
        self.scope.declare(name, name_token)
        self.scope.module_rings[name] = ring
        return LetBinding(name, expr, position=_position(name_token))

    def assert_stmt(self, node):
        call_node, comparison, value = node.children
        call, _, _ = self.expr(call_node)
        result = call.signature.result
        if comparison is None and result != PREDICATE:
            _fail(f'{call.function} is not a predicate; compare it with an integer', call_node)
        if comparison is not None and result != NUMBER:
            _fail(f'{call.function} does not return a number', call_node)
        return Assert(call, str(comparison) if comparison is not None else None,
                      int(value) if value is not None else None, position=_position(call_node))

    def print_stmt(self, node):
        target, _, _ = self.expr(node.children[0], allow_ring=True)
        return Print(target, position=_position(node.children[0]))

    def check_stmt(self, node):
        theorem_token, *binding_nodes = node.children
        try:
            theorem = TheoremId.parse(str(theorem_token)).value
        except ValueError as error:
            _fail(str(error), theorem_token)
        binding_nodes = [b for b in binding_nodes if b is not None]
        ring = None
        for binding in binding_nodes:
            value = binding.children[1]
            if isinstance(value, lark.Tree) and value.data in ('ref', 'call'):
                _, kind, value_ring = self.expr(value, allow_ring=True)
                ring = ring or value_ring
        bindings = []
        names = set()
        for binding in binding_nodes:
            name_token, value = binding.children
            name = str(name_token)
            if name in names:
                _fail(f'{name} is bound twice', name_token)
            names.add(name)
            if value.data == 'integer':
                bindings.append((name, Integer(int(value.children[0]), position=_position(value))))
            elif value.data == 'poly_list':
                if ring is None:
                    _fail(f'cannot tell which ring the ideal {name} lives in; bind a module or ring first', value)
                bindings.append((name, self._polynomial_list(value, ring)))
            else:
                expr, kind, _ = self.expr(value, allow_ring=True)
                if kind not in (MODULE, RING):
                    _fail(f'{name} must be bound to a module, a ring, an ideal or an integer', value)
                bindings.append((name, expr))
        return Check(theorem, tuple(bindings), position=_position(theorem_token))

    def suite_stmt(self, node):
        *theorem_tokens, ring_token, size_token = node.children
        theorems = []
        for token in theorem_tokens:
            if token is None:
                continue
            try:
                theorems.append(TheoremId.parse(str(token)).value)
            except ValueError as error:
                _fail(str(error), token)
        ring = self.scope.ring(ring_token)
        return Suite(tuple(theorems), ring, str(size_token), position=_position(ring_token))

    def _polynomial_list(self, node, ring):
        polynomials = self._polynomials(node, ring, 'ideal generator')
        return PolynomialList(tuple(format_polynomial(p) for p in polynomials), ring, position=_position(node))

    def expr(self, node, allow_ring=False):
        """(syntax node, kind, ring name) of an expression."""
        if node.data == 'ref':
            token = node.children[0]
            name = str(token)
            if allow_ring and name in self.scope.poly_rings:
                return Ref(name, _position(token)), RING, name
            return Ref(name, _position(token)), MODULE, self.scope.module_ring(token)
        return self.call(node)

    def call(self, node):
        function_token, *arg_nodes = node.children
        function = str(function_token)
        if function not in FUNCTIONS:
            _fail(f'unknown function {function}', function_token)
        signature = FUNCTIONS[function]
        arg_nodes = [a for a in arg_nodes if a is not None]
        if len(arg_nodes) != len(signature.params):
            _fail(f'{function} takes {len(signature.params)} arguments, got {len(arg_nodes)}', function_token)
        ring = None
        operands = {}
        for i, (param, arg) in enumerate(zip(signature.params, arg_nodes)):
            if param not in (MODULE, RING):
                continue
            if arg.data not in ('ref', 'call'):
                _fail(f'{function} expects a {param} here', arg)
            operand, kind, arg_ring = self.expr(arg, allow_ring=param == RING)
            if kind != param:
                _fail(f'{function} expects a {param} here', arg)
            if ring is not None and arg_ring != ring:
                _fail(f'{function} mixes operands over {ring} and {arg_ring}', arg)
            ring = arg_ring
            operands[i] = operand
        args = []
        for i, (param, arg) in enumerate(zip(signature.params, arg_nodes)):
            if i in operands:
                args.append(operands[i])
            elif param == INT:
                if not isinstance(arg, lark.Tree) or arg.data != 'integer':
                    _fail(f'{function} expects an integer here', arg)
                args.append(Integer(int(arg.children[0]), position=_position(arg)))
            elif param == INTS:
                if not isinstance(arg, lark.Tree) or arg.data != 'poly_list':
                    _fail(f'{function} expects a list of integers here', arg)
                args.append(IntegerList(tuple(_integer_of(child) for child in arg.children if child is not None),
                                        position=_position(arg)))
            else:
                if not isinstance(arg, lark.Tree) or arg.data != 'poly_list':
                    _fail(f'{function} expects a list of polynomials here', arg)
                args.append(self._polynomial_list(arg, ring))
        kind = MODULE if signature.result == CONSTRUCTOR else signature.result
        return Call(function, tuple(args), position=_position(function_token)), kind, ring


def _integer_of(node):
    if isinstance(node, lark.Tree) and node.data == 'number':
        return int(node.children[0])
    if isinstance(node, lark.Tree) and node.data == 'neg':
        return -_integer_of(node.children[0])
    _fail('an integer was expected', node)


def parse(source):
    """Parses a script.

    Parameters:

    source (str): the script text

    Returns:

    Script: the syntax tree, every name resolved and every polynomial homogeneous

    Raises ScriptSyntaxError with line, column and the expected tokens, or
    HomogeneityError naming the offending polynomial.
    """
    try:
        tree = parse.parser.parse(source)
    except UnexpectedInput as error:
        raise _syntax_error(error) from None
    script = _ScriptBuilder().build(tree)
    logger.info(f'Parsed {len(script.statements)} statements')
    return script


parse.parser = lark.Lark(GRAMMAR, start='script', parser='lalr', propagate_positions=True,
                         maybe_placeholders=True)


def format_expr(expr):
    if isinstance(expr, Ref):
        return expr.name
    if isinstance(expr, Integer):
        return str(expr.value)
    if isinstance(expr, IntegerList):
        return '[' + ', '.join(str(v) for v in expr.values) + ']'
    if isinstance(expr, PolynomialList):
        return '[' + ', '.join(expr.polynomials) + ']'
    return f'{expr.function}(' + ', '.join(format_expr(a) for a in expr.args) + ')'


def format_statement(statement):
    if isinstance(statement, RingDecl):
        if statement.base is None:
            return f'ring {statement.name} = poly({statement.coefficients}, {", ".join(statement.variables)});'
        return f'ring {statement.name} = quotient({statement.base}, [{", ".join(statement.relations)}]);'
    if isinstance(statement, ModuleDecl):
        rows = ', '.join('[' + ', '.join(row) + ']' for row in statement.matrix)
        text = (f'module {statement.name} = coker({statement.ring}, twists=[{", ".join(map(str, statement.twists))}], '
                f'matrix=[{rows}]')
        if statement.rel_twists is not None:
            text += f', rel_twists=[{", ".join(map(str, statement.rel_twists))}]'
        return text + ');'
    if isinstance(statement, LetBinding):
        return f'let {statement.name} = {format_expr(statement.expr)};'
    if isinstance(statement, Assert):
        text = format_expr(statement.predicate)
        if statement.comparison is not None:
            text += f' {statement.comparison} {statement.value}'
        return f'assert {text};'
    if isinstance(statement, Print):
        return f'print {format_expr(statement.target)};'
    if isinstance(statement, Check):
        bindings = ', '.join(f'{name} = {format_expr(value)}' for name, value in statement.bindings)
        return f'check {statement.theorem}({bindings});'
    return f'suite [{", ".join(statement.theorems)}] on corpus({statement.ring}, {statement.size});'


def pretty_print(script):
    """Script text, one statement per line; parse(pretty_print(s)) == s."""
    return ''.join(format_statement(statement) + '\n' for statement in script.statements)
