"""Grade, reduced grade and projective dimension."""
import logging
import math

from src.homological.functors import ext
from src.invariants.local_cohomology import krull_dim
from src.invariants.verdicts import InfinityUpTo
from src.modules.presentation import free_module
from src.modules.resolution import minimal_free_resolution


logger = logging.getLogger(__name__)


def grade_module(M):
    """min{i : Ext^i_R(M, R) != 0}; +∞ for the zero module.

    Over a Cohen-Macaulay ring this is dim R - dim M. Otherwise Ext is searched
    up to depth R, which bounds the grade of every nonzero module.
    """
    ring = M.ring
    if M.is_zero():
        return math.inf
    if ring.is_cm:
        return ring.dim - krull_dim(M)
    R = free_module(ring, [0])
    for i in range(ring.depth + 1):
        if not ext(M, R, i).is_zero():
            return i
    raise AssertionError('a nonzero module has grade at most depth R')


def reduced_grade(M, C, bound):
    """rgr(M, C): the least i in 1..bound with Ext^i_R(M, C) != 0, else InfinityUpTo(bound)."""
    if bound < 1:
        raise ValueError('the bound must be at least 1')
    for i in range(1, bound + 1):
        if not ext(M, C, i).is_zero():
            return i
    return InfinityUpTo(bound)


def projective_dimension(M, bound):
    """Length of the minimal resolution when it ends by `bound`; -1 for the zero module."""
    if M.is_zero():
        return -1
    resolution = minimal_free_resolution(M, bound + 1)
    if resolution.complete and resolution.length <= bound:
        return resolution.length
    return InfinityUpTo(bound)
