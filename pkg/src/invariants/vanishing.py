"""Bounded vanishing checks for Ext and Tor, exact once a resolution terminates."""
import logging

from src.homological.functors import ext_from_resolution, tor
from src.invariants.verdicts import BoundedVerdict
from src.modules.resolution import minimal_free_resolution


logger = logging.getLogger(__name__)


def ext_vanishing(M, N, bound, start=1):
    """Ext^i_R(M, N) = 0 for start <= i <= bound.

    Returns:

    BoundedVerdict: False with the first nonvanishing index, True when the resolution
        of M ends within the bound, TrueUpToBound otherwise
    """
    resolution = minimal_free_resolution(M, bound + 1)
    for i in range(start, bound + 1):
        if resolution.complete and i > resolution.length:
            break
        if not ext_from_resolution(resolution, N, i).is_zero():
            logger.debug(f'Ext^{i} does not vanish')
            return BoundedVerdict.false(i, note=f'Ext^{i} != 0')
    if resolution.complete and resolution.length <= bound:
        return BoundedVerdict.true(note=f'projective dimension {resolution.length}')
    return BoundedVerdict.up_to(bound)


def tor_vanishing(M, N, bound, start=1):
    """Tor_i^R(M, N) = 0 for start <= i <= bound."""
    resolution = minimal_free_resolution(M, bound + 1)
    for i in range(start, bound + 1):
        if resolution.complete and i > resolution.length:
            break
        if not tor(M, N, i).is_zero():
            return BoundedVerdict.false(i, note=f'Tor_{i} != 0')
    if resolution.complete and resolution.length <= bound:
        return BoundedVerdict.true(note=f'projective dimension {resolution.length}')
    return BoundedVerdict.up_to(bound)


def ext_vanishing_through(M, N, n):
    """Ext^i_R(M, N) = 0 for 1 <= i <= n; exact, since only finitely many indices are involved."""
    if n < 1:
        return BoundedVerdict.true(note='empty range')
    verdict = ext_vanishing(M, N, n)
    if verdict.failed:
        return verdict
    return BoundedVerdict.true(note=f'Ext^i = 0 for 1 <= i <= {n}')
