"""Semidualizing and canonical modules, and Auslander-class membership."""
import logging
import random
from dataclasses import dataclass

from src.algebra.groebner import buchberger
from src.algebra.hilbert import hilbert_series
from src.algebra.syzygies import ideal_multiples
from src.config import DEFAULT_SEED, default_bound
from src.errors import InapplicableError
from src.homological.functors import ext, ext_to_ambient, hom_module, hom_subquotient, homology, tensor_presentation
from src.invariants.gc_dimension import is_gc_perfect, quotient_module
from src.invariants.grade import grade_module
from src.invariants.vanishing import ext_vanishing, tor_vanishing
from src.invariants.verdicts import BoundedVerdict, SemidualizingCertificate, combine
from src.modules.isomorphism import IsoKind, IsoVerdict, is_isomorphic
from src.modules.minimalize import minimalize
from src.modules.presentation import change_ring, free_module, twist
from src.modules.rings import quotient_ring


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CanonicalIdeal:
    """ω_R ≅ J(shift) for the ideal J generated by `generators`."""
    generators: tuple
    shift: int


def is_free_of_rank_one(C):
    C = minimalize(C)
    return C.num_generators == 1 and C.num_relations == 0


def is_semidualizing(C, bound=None):
    """Certificate for Definition-style semidualizing: homothety iso and Ext^i(C, C) = 0, 1 <= i <= bound.

    The homothety R -> Hom(C, C) is an isomorphism iff Hom(C, C) ≅ R: an isomorphism
    makes Hom(C, C) cyclic on a degree-0 generator, and id_C is a nonzero scalar multiple of it.
    """
    ring = C.ring
    bound = bound if bound is not None else default_bound(ring.num_variables)
    C = minimalize(C)
    R = free_module(ring, [0])
    if is_free_of_rank_one(C):
        homothety = IsoVerdict(IsoKind.ISOMORPHIC, note='C is free of rank one')
        return SemidualizingCertificate(C, homothety, BoundedVerdict.true(note='C is free'))
    homothety = is_isomorphic(hom_module(C, C), R)
    if homothety.kind is IsoKind.NOT_ISOMORPHIC:
        return SemidualizingCertificate(C, homothety, BoundedVerdict.unknown('not checked'))
    vanishing = ext_vanishing(C, C, bound)
    logger.info(f'Semidualizing test: homothety {homothety}, Ext vanishing {vanishing}')
    return SemidualizingCertificate(C, homothety, vanishing)


def canonical_module(ring):
    """ω_R = Ext^c_S(R, S)(-n), re-presented over R."""
    if not ring.is_cm:
        logger.warning(f'{ring} is not Cohen-Macaulay; returning Ext^c_S(R, S)(-n)')
    E = ext_to_ambient(free_module(ring, [0]), ring.codim)
    omega = minimalize(twist(E, -ring.num_variables))
    return minimalize(change_ring(omega, ring, check=False))


def _injective(images, M, degree):
    """Whether M -> R(degree) sending generator a to images[a] is injective."""
    ring = M.ring
    outgoing = [(p,) for p in images]
    kernel = homology(ring, M.gen_twists, outgoing, (-degree,), [], M.columns)
    return kernel.presentation.is_zero()


def embed_canonical_as_ideal(ring, tries=24, seed=DEFAULT_SEED):
    """An injection ω_R -> R, realizing ω_R as an ideal up to a shift.

    Candidates are the minimal generators of Hom(ω_R, R) and random scalar
    combinations of generators of equal degree.
    """
    omega = canonical_module(ring)
    homs = hom_subquotient(omega, free_module(ring, [0]))
    generators = homs.minimal_generators
    degrees = homs.presentation.gen_twists
    domain = ring.poly_ring.domain
    generator = random.Random(seed)
    candidates = [(g, d) for g, d in zip(generators, degrees)]
    for degree in sorted(set(degrees)):
        same = [g for g, d in zip(generators, degrees) if d == degree]
        if len(same) < 2:
            continue
        for _ in range(tries):
            coefficients = [domain.convert(generator.randint(-3, 3)) for _ in same]
            combined = tuple(sum((g[a].mul_ground(c) for g, c in zip(same, coefficients)), ring.poly_ring.zero)
                             for a in range(omega.num_generators))
            candidates.append((combined, degree))
    for images, degree in candidates:
        if any(images) and _injective(images, omega, degree):
            return CanonicalIdeal(tuple(images), degree)
    raise InapplicableError('R is generically Gorenstein', witness='no injective map ω_R -> R found')


def _mu_is_isomorphism(M, C):
    """μ: M -> Hom(C, M ⊗ C) is surjective with equal Hilbert series."""
    T = tensor_presentation(M, C)
    homs = hom_subquotient(C, T)
    s0 = C.num_generators
    t0 = T.num_generators
    zero = M.poly_ring.zero
    images = []
    for a in range(M.num_generators):
        vector = [zero] * (s0 * t0)
        for b in range(s0):
            vector[b * t0 + a * s0 + b] = M.poly_ring.one
        images.append(tuple(vector))
    rank = len(homs.twists)
    span = buchberger(images + list(homs.relations) + ideal_multiples(M.ring.ideal, rank),
                      M.poly_ring, rank, twists=homs.twists)
    if not all(span.contains(h) for h in homs.minimal_generators):
        return False
    return hilbert_series(homs.presentation) == hilbert_series(M)


def in_auslander_class(M, C, bound=None, certificate=None):
    """M ∈ A_C: μ an isomorphism, Tor_i(M, C) = 0 and Ext^i(C, M ⊗ C) = 0 for 1 <= i <= bound.

    Parameters:

    M, C (ModulePresentation): modules over the same ring

    bound (int) - optional: Tor/Ext bound B

    certificate (SemidualizingCertificate) - optional: computed when missing

    Returns:

    BoundedVerdict: False names the failing test ('mu', ('Tor', i) or ('Ext', i))
    """
    bound = bound if bound is not None else default_bound(M.ring.num_variables)
    if is_free_of_rank_one(C):
        return BoundedVerdict.true(note='C = R')
    certificate = certificate or is_semidualizing(C, bound)
    if not certificate.valid:
        raise InapplicableError('C is semidualizing', witness=str(certificate))
    M, C = minimalize(M), minimalize(C)
    if M.num_generators == 0:
        return BoundedVerdict.true(note='zero module')
    if not _mu_is_isomorphism(M, C):
        return BoundedVerdict.false('mu', note='M -> Hom(C, M ⊗ C) is not an isomorphism')
    tors = tor_vanishing(M, C, bound)
    if tors.failed:
        return BoundedVerdict.false(('Tor', tors.witness), note=tors.note)
    T = minimalize(tensor_presentation(M, C))
    exts = ext_vanishing(C, T, bound)
    if exts.failed:
        return BoundedVerdict.false(('Ext', exts.witness), note=exts.note)
    return combine([tors, exts])


def induced_semidualizing(ideal, C, bound=None):
    """K = Ext^{gr I}_R(R/I, C) over R/I with its certificate, for a G_C-perfect ideal I.

    Returns:

    tuple: (K as a module over R/I, SemidualizingCertificate over R/I)
    """
    ring = C.ring
    bound = bound if bound is not None else default_bound(ring.num_variables)
    perfect = is_gc_perfect(ideal, C, bound)
    if perfect.failed:
        raise InapplicableError('I is G_C-perfect', witness=str(perfect))
    quotient = quotient_module(ring, ideal)
    if quotient.is_zero():
        raise InapplicableError('I is a proper ideal')
    g = grade_module(quotient)
    K = ext(quotient, C, g)
    target = quotient_ring(ring, _ideal_polynomials(ideal))
    K = minimalize(change_ring(K, target))
    return K, is_semidualizing(K, bound)


def _ideal_polynomials(ideal):
    return list(ideal.polynomials) if hasattr(ideal, 'polynomials') else list(ideal)
