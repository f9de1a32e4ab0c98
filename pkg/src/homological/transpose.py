"""Transposes, the linkage operator λ = ΩTr and the modules 𝒯_n M."""
import logging

from src.modules.minimalize import minimalize
from src.modules.presentation import ModulePresentation
from src.modules.resolution import syzygy


logger = logging.getLogger(__name__)

# Test-only switches for negative controls.
FAULTS = {
    'skip_minimalization': False,
}


def _prepared(M):
    if FAULTS['skip_minimalization']:
        logger.warning('Transpose is running on an unminimalized presentation')
        return M
    return minimalize(M)


def transpose(M):
    """Tr M = coker of the dual of the minimal presentation P_1 -> P_0 -> M.

    Generators of Tr M are the duals of the relations (degree -b_j), relations
    are the duals of the generators (degree -a_i).
    """
    M = _prepared(M)
    if M.num_relations == 0:
        return ModulePresentation(M.ring, (), (), ())
    return _prepared(ModulePresentation(M.ring, tuple(-b for b in M.rel_twists),
                                        tuple(-a for a in M.gen_twists), M.rows))


def transpose_wrt(M, C):
    """Tr_C M = coker Hom(f, C) for the minimal presentation f: P_1 -> P_0 of M.

    Hom(P_1, C) is presented on positions (j, k) = j·s_0 + k, j a relation of M and
    k a generator of C, modulo copies of the relations of C.
    """
    M = _prepared(M)
    zero = M.poly_ring.zero
    s0 = C.num_generators
    r1 = M.num_relations
    twists = tuple(C.gen_twists[k] - M.rel_twists[j] for j in range(r1) for k in range(s0))
    columns, rel_twists = [], []
    for j in range(r1):
        for q, column in enumerate(C.columns):
            vector = [zero] * (r1 * s0)
            vector[j * s0:(j + 1) * s0] = column
            columns.append(tuple(vector))
            rel_twists.append(C.rel_twists[q] - M.rel_twists[j])
    for i in range(M.num_generators):
        for k in range(s0):
            vector = [zero] * (r1 * s0)
            for j in range(r1):
                vector[j * s0 + k] = M.columns[j][i]
            columns.append(tuple(vector))
            rel_twists.append(C.gen_twists[k] - M.gen_twists[i])
    return _prepared(ModulePresentation(M.ring, twists, tuple(rel_twists), tuple(columns)))


def lambda_(M):
    """λM = Ω Tr M."""
    return syzygy(transpose(M), 1)


def t_module(M, n):
    """𝒯_n M = Tr Ω^{n-1} M."""
    if n < 1:
        raise ValueError('𝒯_n needs n >= 1')
    return transpose(syzygy(M, n - 1))
