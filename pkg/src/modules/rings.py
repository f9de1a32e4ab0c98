"""Standard graded quotient rings R = k[x_1..x_n]/I."""
import logging
from dataclasses import dataclass, field, replace

from src.algebra.field import RATIONALS
from src.algebra.groebner import ideal_basis, ideal_sum
from src.algebra.polynomials import MonomialOrder, make_polynomial_ring, require_homogeneous
from src.errors import StructuralError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedRing:
    """A standard graded ring with its ring invariants cached.

    The invariants are excluded from equality: two rings are equal when their
    field, variables and relation bases agree.
    """
    field: object
    variables: tuple
    poly_ring: object
    ideal: object
    dim: int = field(default=None, compare=False)
    depth: int = field(default=None, compare=False)
    is_cm: bool = field(default=None, compare=False)
    is_gorenstein: bool = field(default=None, compare=False)

    @property
    def num_variables(self):
        return len(self.variables)

    @property
    def codim(self):
        return self.num_variables - self.dim

    @property
    def gens(self):
        return self.poly_ring.gens

    @property
    def relations(self):
        return self.ideal.polynomials

    def is_polynomial_ring(self):
        return self.ideal.is_zero()

    @property
    def ambient(self):
        """The polynomial ring S this ring is a quotient of."""
        if self.is_polynomial_ring():
            return self
        return polynomial_ring(self.field, self.variables)

    def key(self):
        return (self.field.name, self.variables, self.ideal.key())

    def __str__(self):
        base = f'{self.field.name}[{", ".join(self.variables)}]'
        if self.is_polynomial_ring():
            return base
        from src.algebra.polynomials import format_polynomial
        return f'{base}/({", ".join(format_polynomial(p) for p in self.relations)})'


def polynomial_ring(field, variables, order=MonomialOrder.GREVLEX):
    poly_ring = make_polynomial_ring(field, list(variables), order)
    n = len(variables)
    return GradedRing(field, tuple(variables), poly_ring, ideal_basis([], poly_ring),
                      dim=n, depth=n, is_cm=True, is_gorenstein=True)


def make_ring(field=RATIONALS, variables=('x',), relation_generators=(), order=MonomialOrder.GREVLEX):
    """Builds S/I and computes its invariants.

    Parameters:

    field (Field): coefficient field

    variables (list of str): variable names

    relation_generators (list of PolyElement): homogeneous generators of I, elements of
        make_polynomial_ring(field, variables)

    Returns:

    GradedRing: the ring with dim, depth, CM and Gorenstein flags filled in
    """
    base = polynomial_ring(field, variables, order)
    relations = []
    for p in relation_generators:
        if p.ring != base.poly_ring:
            raise StructuralError(f"relation {p} does not belong to {base}")
        if not p:
            continue
        require_homogeneous(p, 'relation')
        relations.append(p)
    if not relations:
        return base
    ideal = ideal_basis(relations, base.poly_ring)
    if ideal.is_unit():
        raise StructuralError('the relations generate the unit ideal')
    bare = GradedRing(field, tuple(variables), base.poly_ring, ideal)
    return replace(bare, **ring_invariants(bare))


def ring_invariants(ring):
    """dim, depth, CM and Gorenstein flags from Ext^j_S(R, S)."""
    from src.homological.functors import ambient_ext_modules
    from src.modules.presentation import free_module

    n = ring.num_variables
    exts = ambient_ext_modules(free_module(ring, [0]))
    nonzero = [j for j, E in enumerate(exts) if not E.is_zero()]
    depth, dim = n - max(nonzero), n - min(nonzero)
    is_cm = depth == dim
    is_gorenstein = is_cm and exts[n - dim].num_generators == 1
    logger.info(f'Ring {ring}: dim {dim}, depth {depth}, CM {is_cm}, Gorenstein {is_gorenstein}')
    return {'dim': dim, 'depth': depth, 'is_cm': is_cm, 'is_gorenstein': is_gorenstein}


def quotient_ring(ring, ideal):
    """R/c for an ideal c given as a Gröbner basis of S (or a list of polynomials)."""
    if not hasattr(ideal, 'polynomials'):
        ideal = ideal_basis(list(ideal), ring.poly_ring)
    total = ideal_sum(ring.ideal, ideal)
    return make_ring(ring.field, ring.variables, total.polynomials)

