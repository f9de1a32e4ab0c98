"""Minimal presentations: unit pivoting followed by pruning of redundant relations."""
import logging

from src.algebra.groebner import buchberger, normal_form
from src.algebra.linear import IncrementalEchelon
from src.algebra.polynomials import degree_of, flatten, vector_degree
from src.algebra.syzygies import ideal_multiples
from src.config import active_budget
from src.modules.presentation import ModulePresentation


logger = logging.getLogger(__name__)


def _reduce_column(column, ideal):
    return [normal_form(p, ideal) for p in column]


def minimal_generators(vectors, twists, ring):
    """Indices of a minimal homogeneous generating subset of the submodule the
    vectors generate in F/I·F, F free with the given twists.

    Vectors are taken in increasing degree; a vector is kept when its normal form
    modulo the kept lower-degree vectors is independent over k of the normal forms
    already kept in its degree.
    """
    vectors = [tuple(vector) for vector in vectors]
    rank = len(twists)
    by_degree = {}
    for index, vector in enumerate(vectors):
        vector = _reduce_column(vector, ring.ideal)
        if not any(vector):
            continue
        by_degree.setdefault(vector_degree(vector, twists), []).append(index)
    multiples = ideal_multiples(ring.ideal, rank)
    kept = []
    for degree in sorted(by_degree):
        active_budget().check_time('minimal generators')
        lower = buchberger([vectors[k] for k in kept] + multiples, ring.poly_ring, rank, twists=twists)
        echelon = IncrementalEchelon(ring.poly_ring.domain)
        for index in by_degree[degree]:
            if echelon.insert(lower.reduce_terms(flatten(vectors[index]))):
                kept.append(index)
    return sorted(kept)


def _find_unit(columns):
    for j, column in enumerate(columns):
        for i, entry in enumerate(column):
            if entry and degree_of(entry) == 0:
                return i, j
    return None


def minimalize_tracking(M):
    """Minimal presentation of M together with the indices of the original
    generators that survive (the remaining generators are a subset of the old ones).
    """
    ring = M.ring
    domain = ring.poly_ring.domain
    generators = list(range(M.num_generators))
    gen_twists = list(M.gen_twists)
    columns = [_reduce_column(column, ring.ideal) for column in M.columns]
    rel_twists = list(M.rel_twists)

    while True:
        pivot = _find_unit(columns)
        if pivot is None:
            break
        i, j = pivot
        inverse = domain.quo(domain.one, columns[j][i].LC)
        unit_column = columns[j]
        for l, column in enumerate(columns):
            if l == j or not column[i]:
                continue
            factor = column[i].mul_ground(inverse)
            columns[l] = _reduce_column([a - factor * b for a, b in zip(column, unit_column)], ring.ideal)
        del columns[j]
        del rel_twists[j]
        for column in columns:
            del column[i]
        del generators[i]
        del gen_twists[i]
        nonzero = [l for l, column in enumerate(columns) if any(column)]
        columns = [columns[l] for l in nonzero]
        rel_twists = [rel_twists[l] for l in nonzero]

    kept = minimal_generators(columns, gen_twists, ring) if columns else []
    result = ModulePresentation(ring, tuple(gen_twists), tuple(rel_twists[l] for l in kept),
                                tuple(tuple(columns[l]) for l in kept))
    logger.debug(f'Minimalized {M.num_generators}x{M.num_relations} presentation to '
                 f'{result.num_generators}x{result.num_relations}')
    return result, tuple(generators)


def minimalize(M):
    """A presentation of the same module with β_0(M) generators and β_1(M) relations.

    Parameters:

    M (ModulePresentation): any presentation

    Returns:

    ModulePresentation: presentation whose matrix has no unit entries modulo the ring relations
    """
    return minimalize_tracking(M)[0]


def is_minimal(M):
    if _find_unit([_reduce_column(c, M.ring.ideal) for c in M.columns]) is not None:
        return False
    return len(minimal_generators(M.columns, M.gen_twists, M.ring)) == M.num_relations
