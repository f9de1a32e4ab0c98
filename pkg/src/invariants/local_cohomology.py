"""Depth, dimension and local cohomology through graded local duality.

H^i_m(M) != 0 exactly when Ext^{n-i}_S(M, S) != 0, S the ambient polynomial ring
in n variables. The Ext modules are finite to compute since S is regular.
"""
import logging
import math

from src.algebra.hilbert import hilbert_series
from src.errors import InapplicableError
from src.homological.functors import ambient_ext_modules, hom_module
from src.modules.minimalize import minimalize
from src.modules.presentation import residue_field


logger = logging.getLogger(__name__)


def nonvanishing_ambient_ext(M):
    """{j : Ext^j_S(M, S) != 0}, sorted."""
    return [j for j, E in enumerate(ambient_ext_modules(minimalize(M))) if not E.is_zero()]


def ambient_ext_dimension(M, j):
    """Krull dimension of Ext^j_S(M, S); -1 when it vanishes."""
    modules = ambient_ext_modules(minimalize(M))
    if j < 0 or j >= len(modules):
        return -1
    return hilbert_series(modules[j]).dimension


def depth(M):
    """depth M = n - max{j : Ext^j_S(M, S) != 0}; +∞ for the zero module."""
    nonzero = nonvanishing_ambient_ext(M)
    if not nonzero:
        return math.inf
    return M.ring.num_variables - max(nonzero)


def krull_dim(M):
    """Pole order of the Hilbert series at t = 1; -1 for the zero module."""
    return hilbert_series(minimalize(M)).dimension


def local_cohomology_degrees(M):
    """{i : H^i_m(M) != 0} = {n - j : Ext^j_S(M, S) != 0}, sorted."""
    n = M.ring.num_variables
    return sorted(n - j for j in nonvanishing_ambient_ext(M))


def cc(M):
    """Largest i < dim M with H^i_m(M) != 0, for M not Cohen-Macaulay."""
    if is_cohen_macaulay(M):
        raise InapplicableError('M is not Cohen-Macaulay', witness=f'depth = dim = {krull_dim(M)}')
    dimension = krull_dim(M)
    return max(i for i in local_cohomology_degrees(M) if i < dimension)


def is_cohen_macaulay(M):
    """depth M = dim M; the zero module counts as Cohen-Macaulay."""
    degrees = local_cohomology_degrees(M)
    return len(degrees) <= 1


def is_maximal_cohen_macaulay(M):
    """depth M = dim R; the zero module counts as maximal Cohen-Macaulay."""
    nonzero = nonvanishing_ambient_ext(M)
    if not nonzero:
        return True
    return nonzero == [M.ring.codim]


def is_finite_length(M):
    """(True, length) when dim M <= 0, else (False, None)."""
    series = hilbert_series(minimalize(M))
    if series.dimension <= 0:
        return True, series.length or 0
    return False, None


def m_in_ass(M):
    """m ∈ Ass M iff the socle Hom_R(k, M) is nonzero."""
    return not hom_module(residue_field(M.ring), M).is_zero()


def is_eilenberg_maclane(M):
    """H^i_m(M) = 0 for every i other than depth M and dim M."""
    degrees = local_cohomology_degrees(M)
    if not degrees:
        return True
    return set(degrees) <= {min(degrees), max(degrees)} and max(degrees) == krull_dim(M)


def is_generalized_cm(M):
    """ℓ(H^i_m(M)) < ∞ for 0 <= i < dim M, tested as dim Ext^{n-i}_S(M, S) <= 0."""
    dimension = krull_dim(M)
    if dimension < 1:
        raise InapplicableError('dim M >= 1', witness=f'dim M = {dimension}')
    n = M.ring.num_variables
    for i in range(dimension):
        if ambient_ext_dimension(M, n - i) > 0:
            logger.debug(f'H^{i}_m(M) has infinite length')
            return False
    return True
