"""Syzygies, annihilators and ideal operations, all by block elimination over S."""
import logging

from src.algebra.groebner import basis_from_terms, module_order, ideal_basis, normal_form
from src.algebra.polynomials import flatten, unflatten, vector_degree
from src.errors import StructuralError


logger = logging.getLogger(__name__)


def ideal_multiples(ideal, rank, offset=0, total_rank=None):
    """The vectors f·e_i (f a generator of the ideal) for i < rank, placed from `offset`."""
    total_rank = total_rank if total_rank is not None else offset + rank
    poly_ring = ideal.poly_ring
    result = []
    for f in ideal.polynomials:
        for i in range(rank):
            vector = [poly_ring.zero] * total_rank
            vector[offset + i] = f
            result.append(tuple(vector))
    return result


def syzygy_basis(vectors, poly_ring, rank, modulo=(), twists=None, source_twists=None, reduce_by=None):
    """Generators of the kernel of the map S^m -> S^rank / <modulo> sending e_j to vectors[j].

    Parameters:

    vectors (list of tuple of PolyElement): images of the basis of S^m

    poly_ring (PolyRing): the ambient polynomial ring

    rank (int): rank of the target free module

    modulo (list of tuple of PolyElement) - optional: extra generators the images are taken modulo

    twists (list of int) - optional: degrees of the target basis

    source_twists (list of int) - optional: degrees of the source basis, inferred from the vectors when missing

    reduce_by (GroebnerBasis) - optional: ideal whose multiples are dropped from the answer

    Returns:

    list of tuple of PolyElement: kernel generators, each of length m
    """
    m = len(vectors)
    if m == 0:
        return []
    for v in list(vectors) + list(modulo):
        if len(v) != rank:
            raise StructuralError(f'vector of rank {len(v)} in a free module of rank {rank}')
    one_monomial = (0,) * poly_ring.ngens
    one = poly_ring.domain.one

    all_twists = None
    if twists is not None:
        degrees = list(source_twists) if source_twists is not None else [
            vector_degree(v, twists) for v in vectors]
        if all(d is not None for d in degrees):
            all_twists = tuple(twists) + tuple(degrees)

    rows = []
    for j, v in enumerate(vectors):
        terms = flatten(v)
        terms[(rank + j, one_monomial)] = one
        rows.append(terms)
    for w in modulo:
        terms = flatten(w)
        if terms:
            rows.append(terms)

    order = module_order(poly_ring, split=rank)
    basis = basis_from_terms(rows, poly_ring, rank + m, order, all_twists)
    syzygies = []
    for entry in basis.entries:
        if entry.position < rank:
            continue
        shifted = {(position - rank, monomial): c for (position, monomial), c in entry.terms.items()}
        vector = unflatten(poly_ring, shifted, m)
        if reduce_by is not None:
            vector = tuple(normal_form(p, reduce_by) for p in vector)
            if all(not p for p in vector):
                continue
        syzygies.append(vector)
    logger.debug(f'Found {len(syzygies)} syzygies among {m} vectors')
    return syzygies


def annihilator_of_cokernel(poly_ring, rank, columns, ideal=None):
    """The ideal {f in S : f·S^rank ⊆ <columns> + ideal·S^rank}, as a Gröbner basis.

    Computed as the kernel of S -> (S^rank / L)^rank sending 1 to (e_1, ..., e_rank),
    which is the intersection of the quotients (L : e_i).
    """
    if rank == 0:
        return ideal_basis([poly_ring.one], poly_ring)
    total = rank * rank
    image = [poly_ring.zero] * total
    for i in range(rank):
        image[i * rank + i] = poly_ring.one
    modulo = []
    for copy in range(rank):
        for column in columns:
            vector = [poly_ring.zero] * total
            vector[copy * rank:(copy + 1) * rank] = column
            modulo.append(tuple(vector))
        if ideal is not None:
            modulo.extend(ideal_multiples(ideal, rank, copy * rank, total))
    kernel = syzygy_basis([tuple(image)], poly_ring, total, modulo)
    return ideal_basis([v[0] for v in kernel], poly_ring)


def annihilator(M):
    """ann_S(M) for a module presentation M over S/I; the result contains I."""
    return annihilator_of_cokernel(M.ring.poly_ring, M.num_generators, M.columns, M.ring.ideal)


def ideal_intersection(I, J):
    poly_ring = I.poly_ring
    modulo = ideal_multiples(I, 1, 0, 2) + ideal_multiples(J, 1, 1, 2)
    kernel = syzygy_basis([(poly_ring.one, poly_ring.one)], poly_ring, 2, modulo)
    return ideal_basis([v[0] for v in kernel], poly_ring)


def ideal_quotient(I, J):
    """The colon ideal (I : J) = {f : f·J ⊆ I}."""
    poly_ring = I.poly_ring
    generators = J.polynomials
    if not generators:
        return ideal_basis([poly_ring.one], poly_ring)
    k = len(generators)
    modulo = ideal_multiples(I, k)
    kernel = syzygy_basis([tuple(generators)], poly_ring, k, modulo)
    return ideal_basis([v[0] for v in kernel], poly_ring)
