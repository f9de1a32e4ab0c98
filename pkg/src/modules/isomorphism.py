"""Graded isomorphism testing through degree-0 homomorphisms."""
import logging
import random
from dataclasses import dataclass
from enum import Enum

from sympy.polys.monomials import monomial_div, monomial_mul

from src.algebra.hilbert import hilbert_series
from src.algebra.linear import is_invertible, nullspace, solve
from src.algebra.polynomials import flatten, monomial_basis, unflatten
from src.config import DEFAULT_SEED
from src.errors import StructuralError
from src.modules.minimalize import minimalize


logger = logging.getLogger(__name__)

RANDOM_TRIES = 24


class IsoKind(Enum):
    ISOMORPHIC = 'Isomorphic'
    NOT_ISOMORPHIC = 'NotIsomorphic'
    UNKNOWN = 'Unknown'


@dataclass(frozen=True)
class IsoWitness:
    """Images of the generators under a degree-0 map and its inverse."""
    forward: tuple
    backward: tuple


@dataclass(frozen=True)
class IsoVerdict:
    kind: IsoKind
    witness: IsoWitness = None
    certificate: str = None
    note: str = None

    @property
    def is_isomorphic(self):
        return self.kind is IsoKind.ISOMORPHIC

    @property
    def resolved(self):
        return self.kind is not IsoKind.UNKNOWN

    def __str__(self):
        detail = self.certificate or self.note
        return f'{self.kind.value} ({detail})' if detail else self.kind.value


def _standard_monomials(basis, position, degree, num_variables):
    leads = [m for p, m in basis.leading_terms if p == position]
    return [m for m in monomial_basis(num_variables, degree)
            if not any(monomial_div(m, lead) is not None for lead in leads)]


def _shift_terms(terms, position, monomial):
    return {(position, monomial_mul(m, monomial)): c for (_, m), c in terms.items()}


def degree_zero_homs(M, N):
    """Basis of Hom(M, N)_0 for minimal presentations M and N.

    Returns:

    list of tuple: each homomorphism as the tuple of generator images, vectors of F_N in normal form
    """
    ring = M.ring
    domain = ring.poly_ring.domain
    n = ring.num_variables
    basis_N = N.relation_basis
    unknowns = []
    for i, a in enumerate(M.gen_twists):
        for k, g in enumerate(N.gen_twists):
            for m in _standard_monomials(basis_N, k, a - g, n):
                unknowns.append((i, k, m))
    if not unknowns:
        return []

    equations = {}
    for j, column in enumerate(M.columns):
        for u, (i, k, m) in enumerate(unknowns):
            entry = column[i]
            if not entry:
                continue
            image = [N.poly_ring.zero] * N.num_generators
            image[k] = entry
            terms = basis_N.reduce_terms(_shift_terms(flatten(tuple(image)), k, m))
            for coordinate, c in terms.items():
                equations.setdefault((j, coordinate), {})[u] = c
    rows = [[row.get(u, domain.zero) for u in range(len(unknowns))]
            for _, row in sorted(equations.items(), key=lambda item: (item[0][0], item[0][1]))]
    solutions = nullspace(rows, len(unknowns), domain) if rows else [
        [domain.one if v == u else domain.zero for v in range(len(unknowns))] for u in range(len(unknowns))]

    homs = []
    for x in solutions:
        images = [dict() for _ in range(M.num_generators)]
        for u, (i, k, m) in enumerate(unknowns):
            if x[u]:
                images[i][(k, m)] = x[u]
        homs.append(tuple(unflatten(N.poly_ring, terms, N.num_generators) for terms in images))
    return homs


def _constant_part(hom, M, N):
    domain = M.poly_ring.domain
    one = (0,) * M.ring.num_variables
    return [[hom[i][k].get(one, domain.zero) if hom[i][k] else domain.zero
             for i in range(M.num_generators)] for k in range(N.num_generators)]


def _combine(homs, coefficients, N):
    result = []
    for i in range(len(homs[0])):
        vector = [N.poly_ring.zero] * N.num_generators
        for hom, c in zip(homs, coefficients):
            if c:
                for k in range(N.num_generators):
                    if hom[i][k]:
                        vector[k] = vector[k] + hom[i][k].mul_ground(c)
        result.append(tuple(vector))
    return tuple(result)


def compose(outer, inner, target):
    """outer ∘ inner on generators: inner maps into the source of outer, outer into `target`."""
    result = []
    for image in inner:
        vector = [target.poly_ring.zero] * target.num_generators
        for k, coefficient in enumerate(image):
            if not coefficient:
                continue
            for l in range(target.num_generators):
                if outer[k][l]:
                    vector[l] = vector[l] + coefficient * outer[k][l]
        result.append(target.reduce(vector))
    return tuple(result)


def _is_identity(hom, M):
    poly_ring = M.poly_ring
    for i, image in enumerate(hom):
        expected = M.reduce(tuple(poly_ring.one if k == i else poly_ring.zero for k in range(M.num_generators)))
        if M.reduce(image) != expected:
            return False
    return True


def _inverse(forward, M, N):
    """ψ in Hom(N, M)_0 with ψ∘φ = id_M, or None."""
    domain = M.poly_ring.domain
    candidates = degree_zero_homs(N, M)
    if not candidates:
        return None
    compositions = [compose(psi, forward, M) for psi in candidates]
    coordinates = {}
    for b, composed in enumerate(compositions):
        for i, image in enumerate(composed):
            for coordinate, c in flatten(image).items():
                coordinates.setdefault((i, coordinate), {})[b] = c
    one = (0,) * M.ring.num_variables
    for i in range(M.num_generators):
        coordinates.setdefault((i, (i, one)), {})
    keys = sorted(coordinates)
    rows = [[coordinates[key].get(b, domain.zero) for b in range(len(candidates))] for key in keys]
    rhs = [domain.one if key[1] == (key[0], one) else domain.zero for key in keys]
    x = solve(rows, rhs, len(candidates), domain)
    if x is None:
        return None
    return _combine(candidates, x, M)


def is_isomorphic(M, N, seed=DEFAULT_SEED, tries=RANDOM_TRIES):
    """Graded isomorphism test.

    Parameters:

    M, N (ModulePresentation): modules over the same ring

    seed (int) - optional: seed of the random combinations tried after the basis

    tries (int) - optional: number of random combinations

    Returns:

    IsoVerdict: Isomorphic with a verified witness, NotIsomorphic with an invariant
        mismatch, or Unknown
    """
    if M.ring != N.ring:
        raise StructuralError('isomorphism test between modules over different rings')
    M, N = minimalize(M), minimalize(N)
    hs_M, hs_N = hilbert_series(M), hilbert_series(N)
    if hs_M != hs_N:
        return IsoVerdict(IsoKind.NOT_ISOMORPHIC, certificate=f'Hilbert series differ: {hs_M} vs {hs_N}')
    if sorted(M.gen_twists) != sorted(N.gen_twists):
        return IsoVerdict(IsoKind.NOT_ISOMORPHIC,
                          certificate=f'generator degrees differ: {sorted(M.gen_twists)} vs {sorted(N.gen_twists)}')
    if sorted(M.rel_twists) != sorted(N.rel_twists):
        return IsoVerdict(IsoKind.NOT_ISOMORPHIC,
                          certificate=f'relation degrees differ: {sorted(M.rel_twists)} vs {sorted(N.rel_twists)}')
    if M.num_generators == 0:
        return IsoVerdict(IsoKind.ISOMORPHIC, IsoWitness((), ()), note='both modules are zero')

    domain = M.poly_ring.domain
    homs = degree_zero_homs(M, N)
    if not homs:
        return IsoVerdict(IsoKind.NOT_ISOMORPHIC, certificate='no nonzero degree-0 homomorphism')
    constants = [_constant_part(h, M, N) for h in homs]
    if all(not any(any(row) for row in c) for c in constants):
        return IsoVerdict(IsoKind.NOT_ISOMORPHIC, certificate='every degree-0 homomorphism maps into mN')

    generator = random.Random(seed)
    candidates = [[domain.one if b == a else domain.zero for b in range(len(homs))] for a in range(len(homs))]
    candidates += [[domain.convert(generator.randint(-3, 3)) for _ in homs] for _ in range(tries)]
    for coefficients in candidates:
        matrix = [[sum((c * m[k][i] for c, m in zip(coefficients, constants)), domain.zero)
                   for i in range(M.num_generators)] for k in range(N.num_generators)]
        if not is_invertible(matrix, domain):
            continue
        forward = tuple(N.reduce(v) for v in _combine(homs, coefficients, N))
        backward = _inverse(forward, M, N)
        if backward is None:
            continue
        backward = tuple(M.reduce(v) for v in backward)
        if _is_identity(compose(backward, forward, M), M) and _is_identity(compose(forward, backward, N), N):
            return IsoVerdict(IsoKind.ISOMORPHIC, IsoWitness(forward, backward))
    logger.info('Isomorphism search exhausted without a decision')
    return IsoVerdict(IsoKind.UNKNOWN, note=f'no invertible map among {len(candidates)} candidates')
