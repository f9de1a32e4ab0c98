"""Linkage by an ideal: M ∼_c N when M and N are horizontally linked as R/c-modules."""
import logging
from dataclasses import dataclass

from src.algebra.groebner import ideal_basis, ideal_sum, normal_form
from src.algebra.syzygies import annihilator, ideal_intersection, ideal_quotient
from src.config import DEFAULT_SEED
from src.errors import InapplicableError
from src.homological.transpose import lambda_
from src.modules.isomorphism import IsoKind, is_isomorphic
from src.modules.presentation import change_ring, cyclic_module
from src.modules.rings import quotient_ring


logger = logging.getLogger(__name__)


def _as_basis(ideal, ring):
    if hasattr(ideal, 'polynomials'):
        return ideal
    return ideal_basis(list(ideal), ring.poly_ring)


@dataclass(frozen=True)
class IdealLinkPair:
    """Ideals a, b of R and c ⊆ a ∩ b; R/a ∼_c R/b is the claim."""
    a: object
    b: object
    c: object
    over: object

    def __post_init__(self):
        for name in ('a', 'b', 'c'):
            object.__setattr__(self, name, _as_basis(getattr(self, name), self.over))
        intersection = ideal_intersection(ideal_sum(self.a, self.over.ideal), ideal_sum(self.b, self.over.ideal))
        for f in self.c.polynomials:
            if normal_form(f, intersection):
                raise InapplicableError('c ⊆ a ∩ b', witness=str(f))

    def modules(self):
        return (cyclic_module(self.over, list(self.a.polynomials)),
                cyclic_module(self.over, list(self.b.polynomials)))


@dataclass(frozen=True)
class IdealLinkResult:
    ring: object
    forward: object
    backward: object

    @property
    def linked(self):
        return self.forward.is_isomorphic and self.backward.is_isomorphic

    @property
    def refuted(self):
        return IsoKind.NOT_ISOMORPHIC in (self.forward.kind, self.backward.kind)

    def __str__(self):
        return f'over {self.ring}: M ≅ λN {self.forward}; N ≅ λM {self.backward}'


def _require_annihilates(c, M, name):
    ann = annihilator(M)
    for f in c.polynomials:
        if normal_form(f, ann):
            raise InapplicableError(f'c ⊆ ann({name})', witness=str(f))


def linked_by_ideal(M, N, c, seed=DEFAULT_SEED):
    """Checks M ≅ λ_{R/c} N and N ≅ λ_{R/c} M.

    Parameters:

    M, N (ModulePresentation): modules over R annihilated by c

    c (GroebnerBasis | list of PolyElement): the linking ideal

    Returns:

    IdealLinkResult: the ring R/c and both iso verdicts
    """
    ring = M.ring
    c = _as_basis(c, ring)
    _require_annihilates(c, M, 'M')
    _require_annihilates(c, N, 'N')
    target = quotient_ring(ring, list(c.polynomials))
    M_c, N_c = change_ring(M, target), change_ring(N, target)
    logger.info(f'Linking over {target}')
    forward = is_isomorphic(M_c, lambda_(N_c), seed=seed)
    backward = is_isomorphic(N_c, lambda_(M_c), seed=seed)
    return IdealLinkResult(target, forward, backward)


def linked_ideals(pair, seed=DEFAULT_SEED):
    """Checks R/a ∼_c R/b for an IdealLinkPair."""
    M, N = pair.modules()
    return linked_by_ideal(M, N, pair.c, seed)


def is_ideal_linked_by_zero(I, J, ring):
    """I = 0 :_R J and J = 0 :_R I."""
    I, J = _as_basis(I, ring), _as_basis(J, ring)
    return (ideal_quotient(ring.ideal, J) == ideal_sum(I, ring.ideal)
            and ideal_quotient(ring.ideal, I) == ideal_sum(J, ring.ideal))
