"""Polynomial expressions in the notation the workbench prints: 2*x^2 - 1/3*x*y."""
import lark
from lark.exceptions import UnexpectedInput, VisitError

from src.errors import ScriptSyntaxError, StructuralError


POLYNOMIAL_GRAMMAR = r"""
?polynomial: sum
?sum: product
    | sum "+" product -> add
    | sum "-" product -> sub
?product: factor
    | product "*" factor -> mul
    | product "/" factor -> div
?factor: power
    | "-" factor -> neg
?power: atom
    | atom "^" INT -> pow
    | atom "**" INT -> pow
?atom: INT -> number
    | NAME -> variable
    | "(" sum ")"

NAME: /[A-Za-z_][A-Za-z0-9_]*/
%import common.INT
"""

_STANDALONE = POLYNOMIAL_GRAMMAR + r"""
%import common.WS
%ignore WS
"""


class PolynomialBuilder(lark.Transformer):
    """Evaluates a polynomial parse tree in a sympy PolyRing."""

    def __init__(self, poly_ring):
        super().__init__()
        self.poly_ring = poly_ring
        self.variables = {str(s): g for s, g in zip(poly_ring.symbols, poly_ring.gens)}

    def number(self, children):
        return self.poly_ring(int(children[0]))

    def variable(self, children):
        name = str(children[0])
        if name not in self.variables:
            raise StructuralError(f'unknown variable {name}; the ring has {", ".join(self.variables)}')
        return self.variables[name]

    def add(self, children):
        return children[0] + children[1]

    def sub(self, children):
        return children[0] - children[1]

    def mul(self, children):
        return children[0] * children[1]

    def div(self, children):
        left, right = children
        if not right.is_ground:
            raise StructuralError('only division by a constant is supported')
        if not right:
            raise StructuralError('division by zero')
        return left.quo_ground(right.LC)

    def neg(self, children):
        return -children[0]

    def pow(self, children):
        return children[0] ** int(children[1])


def evaluate(tree, poly_ring):
    """The polynomial a parse tree denotes."""
    if isinstance(tree, lark.Token):
        tree = lark.Tree('variable' if tree.type == 'NAME' else 'number', [tree])
    try:
        return PolynomialBuilder(poly_ring).transform(tree)
    except VisitError as error:
        raise error.orig_exc from None


def parse_polynomial(text, poly_ring):
    """Parses `text` into an element of `poly_ring`.

    Parameters:

    text (str): the polynomial, e.g. "x^2 - 2*y*z"

    poly_ring (sympy.polys.rings.PolyRing): the ring whose variables may appear

    Returns:

    PolyElement: the polynomial
    """
    try:
        tree = parse_polynomial.parser.parse(text)
    except UnexpectedInput as error:
        raise ScriptSyntaxError(f'cannot read polynomial {text!r}', getattr(error, 'line', None),
                                getattr(error, 'column', None)) from None
    return evaluate(tree, poly_ring)


parse_polynomial.parser = lark.Lark(_STANDALONE, start='polynomial', parser='lalr')
