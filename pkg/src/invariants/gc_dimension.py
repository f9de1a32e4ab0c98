"""G_C-dimension, G_C-perfect and G_C-Gorenstein ideals, reduced G_C-perfect modules."""
import logging

from src.errors import BudgetExceededError, InapplicableError
from src.homological.biduality import biduality_defect
from src.homological.functors import ext, hom_module
from src.invariants.grade import grade_module, reduced_grade
from src.invariants.local_cohomology import depth
from src.invariants.vanishing import ext_vanishing
from src.invariants.verdicts import BoundedVerdict, GcDimKind, GcDimVerdict
from src.modules.minimalize import minimalize
from src.modules.presentation import cyclic_module
from src.modules.resolution import syzygy


logger = logging.getLogger(__name__)


def quotient_module(ring, ideal):
    """R/I as a cyclic module; the ideal is a Gröbner basis or a list of polynomials."""
    polynomials = list(ideal.polynomials) if hasattr(ideal, 'polynomials') else list(ideal)
    return cyclic_module(ring, polynomials)


def is_totally_reflexive(N, C, bound):
    """N ≅ N^∇∇ and Ext^i(N, C) = Ext^i(N^∇, C) = 0 for 1 <= i <= bound.

    Returns:

    BoundedVerdict: False names the failing condition
    """
    defect = biduality_defect(N, C)
    if not defect.reflexive:
        return BoundedVerdict.false('biduality', note='N -> N^∇∇ is not bijective')
    ext_module = ext_vanishing(N, C, bound)
    if ext_module.failed:
        return BoundedVerdict.false(('Ext(N, C)', ext_module.witness), note=ext_module.note)
    ext_dual = ext_vanishing(hom_module(N, C), C, bound)
    if ext_dual.failed:
        return BoundedVerdict.false(('Ext(N^∇, C)', ext_dual.witness), note=ext_dual.note)
    return BoundedVerdict.up_to(bound)


def gc_dim(M, C, bound, certificate=None):
    """G_C-dimension of M.

    With r = depth R - depth M, M has finite G_C-dimension iff Ω^r M is totally
    C-reflexive, and then the dimension is r. A failure of any condition on Ω^r M
    is therefore an exact proof of infinite dimension.

    Parameters:

    M, C (ModulePresentation): modules over the same ring

    bound (int): Ext bound B for the vanishing conditions

    certificate (SemidualizingCertificate) - optional: rejected when invalid

    Returns:

    GcDimVerdict: Zero, Finite(r, B), Infinite(witness) or PositiveUnknown(B)
    """
    if certificate is not None and not certificate.valid:
        raise InapplicableError('C is semidualizing', witness=str(certificate))
    M = minimalize(M)
    if M.is_zero():
        return GcDimVerdict(GcDimKind.ZERO, 0, bound)
    r = M.ring.depth - depth(M)
    if r < 0:
        return GcDimVerdict(GcDimKind.INFINITE, witness=f'depth M exceeds depth R by {-r}')
    try:
        verdict = is_totally_reflexive(syzygy(M, r), C, bound)
    except BudgetExceededError as error:
        logger.warning(f'G_C-dimension undecided: {error}')
        return GcDimVerdict(GcDimKind.POSITIVE_UNKNOWN, bound=bound)
    if verdict.failed:
        return GcDimVerdict(GcDimKind.INFINITE, witness=(f'syzygy {r}', verdict.witness))
    if r == 0:
        return GcDimVerdict(GcDimKind.ZERO, 0, bound)
    return GcDimVerdict(GcDimKind.FINITE, r, bound)


def is_gc_perfect_module(M, C, bound):
    """gr M = G_C-dim M."""
    dimension = gc_dim(M, C, bound)
    if dimension.kind is GcDimKind.INFINITE:
        return BoundedVerdict.false(dimension.witness, note='infinite G_C-dimension')
    if dimension.kind is GcDimKind.POSITIVE_UNKNOWN:
        return BoundedVerdict.unknown(f'G_C-dimension undecided at bound {bound}')
    grade = grade_module(M)
    if grade != dimension.value:
        return BoundedVerdict.false((grade, dimension.value), note=f'grade {grade} != G_C-dimension {dimension.value}')
    return BoundedVerdict.up_to(bound)


def is_gc_perfect(ideal, C, bound):
    return is_gc_perfect_module(quotient_module(C.ring, ideal), C, bound)


def is_gc_gorenstein(ideal, C, bound):
    """G_C-perfect and Ext^{gr I}_R(R/I, C) cyclic."""
    M = quotient_module(C.ring, ideal)
    perfect = is_gc_perfect_module(M, C, bound)
    if not perfect.holds:
        return perfect
    grade = grade_module(M)
    generators = minimalize(ext(M, C, grade)).num_generators
    if generators != 1:
        return BoundedVerdict.false(('Ext', grade), note=f'Ext^{grade}(R/I, C) needs {generators} generators')
    return perfect


def is_reduced_gc_perfect(M, C, bound):
    """0 < G_C-dim M = rgr(M, C)."""
    dimension = gc_dim(M, C, bound)
    if dimension.kind is GcDimKind.POSITIVE_UNKNOWN:
        return BoundedVerdict.unknown(f'G_C-dimension undecided at bound {bound}')
    if not dimension.is_finite:
        return BoundedVerdict.false(dimension.witness, note='infinite G_C-dimension')
    if dimension.value == 0:
        return BoundedVerdict.false(0, note='G_C-dimension is zero')
    rgr = reduced_grade(M, C, bound)
    if rgr != dimension.value:
        return BoundedVerdict.false((str(rgr), dimension.value), note=f'rgr = {rgr}, G_C-dim = {dimension.value}')
    return BoundedVerdict.up_to(bound)
