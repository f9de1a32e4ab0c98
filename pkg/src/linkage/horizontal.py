"""Stability and horizontal linkage of modules."""
import logging
from dataclasses import dataclass

from src.config import DEFAULT_SEED
from src.errors import InconsistentLinkageError
from src.homological.biduality import is_first_syzygy
from src.homological.functors import ext
from src.homological.transpose import lambda_, transpose
from src.modules.isomorphism import IsoKind, is_isomorphic
from src.modules.minimalize import minimalize
from src.modules.presentation import ModulePresentation, free_module


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinkageReport:
    """The three horizontal-linkage criteria evaluated on one module.

    `verdict` is stable ∧ syzygy_test; `double_link_iso` compares M with λ²M.
    """
    module: ModulePresentation
    stable: bool
    syzygy_test: bool
    first_syzygy: bool
    double_link_iso: object
    verdict: bool
    free_rank_stripped: int

    @property
    def consistent(self):
        """False when the iso search resolved against the Ext criterion."""
        if not self.double_link_iso.resolved:
            return True
        return self.double_link_iso.is_isomorphic == self.verdict

    def __str__(self):
        return (f'stable={self.stable}, Ext^1(Tr M, R)=0: {self.syzygy_test}, '
                f'M ≅ λ²M: {self.double_link_iso}, linked={self.verdict}')


def is_stable(M):
    """(stable, free rank): the free rank is β_0(M) - β_0(Tr Tr M).

    Returns:

    tuple: (bool, int)
    """
    stable_rank = minimalize(transpose(transpose(M))).num_generators
    free_rank = minimalize(M).num_generators - stable_rank
    return free_rank == 0, free_rank


def stable_part(M):
    """Tr Tr M: M with its free summands stripped."""
    return minimalize(transpose(transpose(M)))


def link(M):
    """λM, minimally presented."""
    return lambda_(M)


def linkage_report(M, seed=DEFAULT_SEED):
    """Evaluates every criterion on the presentation as given, without raising on a disagreement."""
    stable, free_rank = is_stable(M)
    R = free_module(M.ring, [0])
    syzygy_test = ext(transpose(M), R, 1).is_zero()
    first_syzygy = is_first_syzygy(M)
    double_link = lambda_(lambda_(M))
    iso = is_isomorphic(M, double_link, seed=seed)
    report = LinkageReport(minimalize(M), stable, syzygy_test, first_syzygy, iso, stable and syzygy_test, free_rank)
    logger.info(f'Linkage report for {M}: {report}')
    return report


def is_horizontally_linked(M, seed=DEFAULT_SEED):
    """M ≅ λ²M, decided by the criterion "stable and Ext^1_R(Tr M, R) = 0".

    Raises InconsistentLinkageError when the iso search resolves the other way.
    """
    report = linkage_report(M, seed)
    if not report.consistent:
        raise InconsistentLinkageError(f'criteria disagree on {report.module}: {report}')
    if report.double_link_iso.kind is IsoKind.UNKNOWN:
        logger.info('λ² cross-check unresolved; verdict taken from the Ext criterion')
    return report


def is_self_linked(M, seed=DEFAULT_SEED):
    """M ≅ λM."""
    return is_isomorphic(M, lambda_(M), seed=seed)
