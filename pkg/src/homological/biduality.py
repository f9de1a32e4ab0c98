"""Biduality defects, universal pushforwards and syzygy tests with respect to a module C."""
import logging
from dataclasses import dataclass

from src.algebra.polynomials import vector_degree
from src.errors import InapplicableError
from src.homological.functors import block_copies, ext, hom_subquotient, homology
from src.homological.transpose import transpose, transpose_wrt
from src.modules.minimalize import minimalize
from src.modules.presentation import ModulePresentation, free_module, zero_module


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BidualityDefect:
    """Kernel and cokernel of M -> M^∇∇, as Ext^1 and Ext^2 of Tr_C M against C."""
    kernel_module: ModulePresentation
    cokernel_module: ModulePresentation

    @property
    def torsionless(self):
        return self.kernel_module.is_zero()

    @property
    def reflexive(self):
        return self.kernel_module.is_zero() and self.cokernel_module.is_zero()


@dataclass(frozen=True)
class Pushforward:
    """0 -> M -> ⊕_s C(δ_s) -> N -> 0 built from minimal generators f_s of M^∇.

    `map_matrix` holds the image of each generator of M, one vector per generator,
    in the free module with `target_twists`.
    """
    map_matrix: tuple
    target_twists: tuple
    cokernel: ModulePresentation
    m: int
    dual_exact: bool


@dataclass(frozen=True)
class SyzygyWitness:
    """Iterated pushforwards M = M_0 -> C^{m_0} -> M_1 -> ...; `steps` counts the injective ones."""
    steps: int
    requested: int
    pushforwards: tuple

    @property
    def holds(self):
        return self.steps >= self.requested


def biduality_defect(M, C):
    """Ext^1_R(Tr_C M, C) and Ext^2_R(Tr_C M, C).

    Parameters:

    M (ModulePresentation): the module

    C (ModulePresentation): the dualizing candidate, over the same ring

    Returns:

    BidualityDefect: kernel and cokernel of the natural map M -> M^∇∇
    """
    T = transpose_wrt(M, C)
    return BidualityDefect(ext(T, C, 1), ext(T, C, 2))


def _universal_map(M, C):
    """Images of the generators of M under (f_1, ..., f_m): M -> ⊕ C(δ_s).

    Returns:

    tuple: (images, target twists, target relations, m)
    """
    zero = M.poly_ring.zero
    s0 = C.num_generators
    homs = hom_subquotient(M, C)
    generators = homs.minimal_generators
    degrees = homs.presentation.gen_twists
    m = len(generators)
    target_twists = tuple(g - degrees[s] for s in range(m) for g in C.gen_twists)
    images = []
    for a in range(M.num_generators):
        vector = [zero] * (m * s0)
        for s, f in enumerate(generators):
            vector[s * s0:(s + 1) * s0] = f[a * s0:(a + 1) * s0]
        images.append(tuple(vector))
    relations = block_copies(C.columns, m, s0, m * s0, zero)
    return images, target_twists, relations, m


def evaluation_kernel(M, C):
    """Kernel of the universal map M -> C^m; for C = R this is the kernel of M -> M**."""
    M = minimalize(M)
    if M.num_generators == 0:
        return zero_module(M.ring)
    images, target_twists, relations, _ = _universal_map(M, C)
    if not target_twists:
        return M
    return homology(M.ring, M.gen_twists, images, target_twists, relations, M.columns).presentation


def universal_pushforward(M, C):
    """The universal pushforward of M with respect to C.

    Parameters:

    M (ModulePresentation): the module; Ext^1_R(Tr_C M, C) must vanish

    C (ModulePresentation): the target module

    Returns:

    Pushforward: the map, its cokernel N and whether Ext^1_R(N, C) = 0 was confirmed
    """
    M = minimalize(M)
    obstruction = ext(transpose_wrt(M, C), C, 1)
    if not obstruction.is_zero():
        raise InapplicableError('Ext^1_R(Tr_C M, C) = 0', witness=f'Ext^1 has generators in degrees {list(obstruction.gen_twists)}')
    if M.num_generators == 0:
        return Pushforward((), (), zero_module(M.ring), 0, True)

    images, target_twists, relations, m = _universal_map(M, C)
    rel_twists = [vector_degree(column, target_twists) for column in relations]
    columns = list(relations)
    for a, image in enumerate(images):
        columns.append(image)
        rel_twists.append(M.gen_twists[a])
    keep = [j for j, column in enumerate(columns) if any(column)]
    N = minimalize(ModulePresentation(M.ring, target_twists, tuple(rel_twists[j] for j in keep),
                                      tuple(columns[j] for j in keep)))
    dual_exact = ext(N, C, 1).is_zero()
    if not dual_exact:
        logger.warning('Ext^1(N, C) does not vanish; C is probably not semidualizing')
    logger.debug(f'Pushforward into {m} copies of C, cokernel with {N.num_generators} generators')
    return Pushforward(tuple(images), target_twists, N, m, dual_exact)


def c_syzygy_witness(M, C, n):
    """Tries to exhibit M as an n-th C-syzygy by iterating universal pushforwards.

    Step i succeeds when M_i -> C^{m_i} is injective; the cokernel feeds step i + 1.
    """
    pushforwards = []
    current = M
    for step in range(n):
        try:
            pushforward = universal_pushforward(current, C)
        except InapplicableError:
            logger.info(f'Pushforward chain stops after {step} steps')
            return SyzygyWitness(step, n, tuple(pushforwards))
        pushforwards.append(pushforward)
        current = pushforward.cokernel
    return SyzygyWitness(n, n, tuple(pushforwards))


def is_first_syzygy(M):
    """M is a first syzygy (torsionless) iff M -> M** is injective."""
    return evaluation_kernel(M, free_module(M.ring, [0])).is_zero()


def torsion_free_degree(M, bound):
    """max{n <= bound : Ext^i_R(Tr M, R) = 0 for 1 <= i <= n}."""
    T = transpose(M)
    R = free_module(M.ring, [0])
    for i in range(1, bound + 1):
        if not ext(T, R, i).is_zero():
            return i - 1
    return bound
