"""Graded module presentations M = coker(F_1 -> F_0) over a GradedRing."""
import logging
from dataclasses import dataclass
from functools import cached_property

from src.algebra.field import coefficient_parts
from src.algebra.groebner import buchberger, normal_form
from src.algebra.polynomials import degree_of, require_homogeneous, vector_degree
from src.algebra.syzygies import ideal_multiples, syzygy_basis
from src.errors import HomogeneityError, StructuralError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModulePresentation:
    """coker of a homogeneous matrix, stored column by column.

    `columns[j][i]` is the matrix entry (i, j) and has degree
    rel_twists[j] - gen_twists[i] (zero entries allowed).
    """
    ring: object
    gen_twists: tuple
    rel_twists: tuple
    columns: tuple

    def __post_init__(self):
        object.__setattr__(self, 'gen_twists', tuple(self.gen_twists))
        object.__setattr__(self, 'rel_twists', tuple(self.rel_twists))
        object.__setattr__(self, 'columns', tuple(tuple(c) for c in self.columns))
        if len(self.rel_twists) != len(self.columns):
            raise StructuralError(f'{len(self.columns)} relation columns but {len(self.rel_twists)} relation twists')
        for j, column in enumerate(self.columns):
            if len(column) != len(self.gen_twists):
                raise StructuralError(f'relation column {j} has {len(column)} entries for {len(self.gen_twists)} generators')
            for i, entry in enumerate(column):
                if not entry:
                    continue
                if entry.ring != self.ring.poly_ring:
                    raise StructuralError(f'entry ({i}, {j}) lives in another polynomial ring')
                require_homogeneous(entry, f'matrix entry ({i}, {j})')
                expected = self.rel_twists[j] - self.gen_twists[i]
                if degree_of(entry) != expected:
                    raise HomogeneityError(f'matrix entry ({i}, {j}) has degree {degree_of(entry)}, expected {expected}')

    @property
    def num_generators(self):
        return len(self.gen_twists)

    @property
    def num_relations(self):
        return len(self.columns)

    @property
    def poly_ring(self):
        return self.ring.poly_ring

    @property
    def rows(self):
        return tuple(tuple(column[i] for column in self.columns) for i in range(self.num_generators))

    def entry(self, i, j):
        return self.columns[j][i]

    @cached_property
    def relation_basis(self):
        """Gröbner basis of im(matrix) + I·F_0 in F_0."""
        generators = list(self.columns) + ideal_multiples(self.ring.ideal, self.num_generators)
        return buchberger(generators, self.poly_ring, self.num_generators, twists=self.gen_twists)

    def is_zero(self):
        return self.num_generators == 0 or self.relation_basis.is_unit()

    def reduce(self, vector):
        """Normal form of an element of F_0 modulo the relations."""
        return normal_form(tuple(vector), self.relation_basis)

    def key(self):
        """Canonical, hashable content: ring, twists and reduced entries."""
        def entry_key(p):
            return tuple(sorted((m, coefficient_parts(self.ring.poly_ring.domain, c)) for m, c in p.items()))
        return (self.ring.key(), self.gen_twists, self.rel_twists,
                tuple(tuple(entry_key(p) for p in column) for column in self.columns))

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        if not isinstance(other, ModulePresentation):
            return NotImplemented
        return self.key() == other.key()

    def __str__(self):
        from src.algebra.polynomials import format_polynomial
        rows = ', '.join('[' + ', '.join(format_polynomial(p) for p in row) + ']' for row in self.rows)
        return f'coker(twists={list(self.gen_twists)}, matrix=[{rows}])'


def presentation_from_rows(ring, gen_twists, rows, rel_twists=None):
    """Builds a presentation from a row-major matrix, inferring column degrees when needed.

    Parameters:

    ring (GradedRing): base ring

    gen_twists (list of int): degrees of the generators

    rows (list of list of PolyElement): the matrix, one row per generator

    rel_twists (list of int) - optional: degrees of the relation columns

    Returns:

    ModulePresentation: the module coker(matrix)
    """
    num_columns = len(rows[0]) if rows else 0
    if any(len(row) != num_columns for row in rows):
        raise StructuralError('matrix rows have different lengths')
    columns = [tuple(row[j] for row in rows) for j in range(num_columns)]
    if rel_twists is None:
        rel_twists = []
        for j, column in enumerate(columns):
            degree = vector_degree(column, gen_twists)
            if degree is None:
                raise StructuralError(f'column {j} is zero; its degree must be given explicitly')
            rel_twists.append(degree)
    return ModulePresentation(ring, tuple(gen_twists), tuple(rel_twists), tuple(columns))


def zero_module(ring):
    return ModulePresentation(ring, (), (), ())


def free_module(ring, twists):
    """R(-t_1) ⊕ ... ⊕ R(-t_r): generators in the given degrees, no relations."""
    return ModulePresentation(ring, tuple(twists), (), ())


def cyclic_module(ring, polynomials, twist_degree=0):
    """R/J for J generated by homogeneous polynomials, generator in degree `twist_degree`."""
    polynomials = [p for p in polynomials if p]
    for p in polynomials:
        require_homogeneous(p, 'ideal generator')
    return ModulePresentation(ring, (twist_degree,), tuple(degree_of(p) + twist_degree for p in polynomials),
                              tuple((p,) for p in polynomials))


def residue_field(ring):
    """k = R/(x_1, ..., x_n)."""
    return cyclic_module(ring, list(ring.gens))


def ideal_module(ring, polynomials):
    """An ideal J of R as a module: generators g_i in degree deg g_i, relations their syzygies over R."""
    polynomials = [p for p in polynomials if p and normal_form(p, ring.ideal)]
    for p in polynomials:
        require_homogeneous(p, 'ideal generator')
    twists = tuple(degree_of(p) for p in polynomials)
    vectors = [(p,) for p in polynomials]
    relations = syzygy_basis(vectors, ring.poly_ring, 1, modulo=ideal_multiples(ring.ideal, 1),
                             twists=(0,), source_twists=twists, reduce_by=ring.ideal)
    rel_twists = tuple(vector_degree(r, twists) for r in relations)
    return ModulePresentation(ring, twists, rel_twists, tuple(relations))


def twist(M, a):
    """M(a): every degree shifted down by a, so generators of M(a) sit in degree g - a."""
    return ModulePresentation(M.ring, tuple(g - a for g in M.gen_twists),
                              tuple(d - a for d in M.rel_twists), M.columns)


def direct_sum(M, N):
    if M.ring != N.ring:
        raise StructuralError('direct sum of modules over different rings')
    zero = M.poly_ring.zero
    left = [tuple(column) + (zero,) * N.num_generators for column in M.columns]
    right = [(zero,) * M.num_generators + tuple(column) for column in N.columns]
    return ModulePresentation(M.ring, M.gen_twists + N.gen_twists, M.rel_twists + N.rel_twists,
                              tuple(left + right))


def as_ambient_module(M):
    """M viewed as a module over the polynomial ring S: the relations of R become columns."""
    ambient = M.ring.ambient
    columns = list(M.columns)
    rel_twists = list(M.rel_twists)
    for f in M.ring.relations:
        for i in range(M.num_generators):
            column = [M.poly_ring.zero] * M.num_generators
            column[i] = f
            columns.append(tuple(column))
            rel_twists.append(degree_of(f) + M.gen_twists[i])
    return ModulePresentation(ambient, M.gen_twists, tuple(rel_twists), tuple(columns))


def change_ring(M, ring, check=True):
    """Re-presents M over another quotient of the same polynomial ring.

    With `check`, the relations of the target ring must annihilate M.
    """
    if ring.poly_ring != M.ring.poly_ring:
        raise StructuralError('rings over different polynomial rings')
    if check:
        for f in ring.relations:
            for i in range(M.num_generators):
                vector = [M.poly_ring.zero] * M.num_generators
                vector[i] = f
                if any(M.reduce(vector)):
                    raise StructuralError(f'{f} does not annihilate the module')
    columns = [tuple(normal_form(p, ring.ideal) for p in column) for column in M.columns]
    keep = [j for j, column in enumerate(columns) if any(column)]
    return ModulePresentation(ring, M.gen_twists, tuple(M.rel_twists[j] for j in keep),
                              tuple(columns[j] for j in keep))


def is_zero(M):
    return M.is_zero()


def restrict_scalars(M, ring):
    """An R/c-module viewed over R: the relations of R/c become columns."""
    return change_ring(as_ambient_module(M), ring, check=False)


def quotient_by_ideal(M, polynomials):
    """M / JM for the ideal J generated by `polynomials`."""
    columns, rel_twists = list(M.columns), list(M.rel_twists)
    for f in polynomials:
        if not f:
            continue
        require_homogeneous(f, 'ideal generator')
        for i in range(M.num_generators):
            column = [M.poly_ring.zero] * M.num_generators
            column[i] = f
            columns.append(tuple(column))
            rel_twists.append(degree_of(f) + M.gen_twists[i])
    return ModulePresentation(M.ring, M.gen_twists, tuple(rel_twists), tuple(columns))
