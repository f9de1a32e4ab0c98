"""The Serre-type condition S̃_k: depth M_p >= min(k, depth R_p) for every prime p."""
import logging

from src.invariants.local_cohomology import ambient_ext_dimension
from src.invariants.probes import depth_at_prime, in_support, probe_primes, probe_set_label
from src.invariants.verdicts import BoundedVerdict
from src.modules.presentation import free_module


logger = logging.getLogger(__name__)

CM_CRITERION = ('over a Cohen-Macaulay ring depth R_p = ht p - codim R, so S̃_k holds iff '
                'dim Ext^j_S(M, S) <= n - j - k for every j > codim R')


def serre_tilde(M, k, primes=None):
    """S̃_k for M.

    Parameters:

    M (ModulePresentation): the module

    k (int): the index, at least 1

    primes (list of ProbePrime) - optional: probe set used over non-CM rings

    Returns:

    BoundedVerdict: exact over Cohen-Macaulay rings, sampled at the probe primes otherwise
    """
    if k < 1:
        raise ValueError('S̃_k needs k >= 1')
    ring = M.ring
    if M.is_zero():
        return BoundedVerdict.true(note='zero module')
    if ring.is_cm:
        n, c = ring.num_variables, ring.codim
        for j in range(c + 1, n + 1):
            dimension = ambient_ext_dimension(M, j)
            if dimension >= 0 and dimension > n - j - k:
                logger.debug(f'S̃_{k} fails: dim Ext^{j}_S(M, S) = {dimension}')
                return BoundedVerdict.false(j, note=f'dim Ext^{j}_S(M, S) = {dimension} > {n - j - k}')
        return BoundedVerdict.true(note=CM_CRITERION)

    primes = primes if primes is not None else probe_primes(ring)
    R = free_module(ring, [0])
    for p in primes:
        if not in_support(M, p):
            continue
        local_depth = depth_at_prime(M, p)
        if local_depth < min(k, depth_at_prime(R, p)):
            return BoundedVerdict.false(p.label, note=f'depth M_p = {local_depth} at p = {p}')
    return BoundedVerdict.up_to(probe_set=probe_set_label(primes))
