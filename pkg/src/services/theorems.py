"""Machine-checkable theorem instances: hypotheses first, then both sides of each claim."""
import logging
import math
import time
from dataclasses import dataclass
from functools import lru_cache

from src.algebra.groebner import ideal_basis, ideal_product, ideal_sum
from src.algebra.polynomials import format_polynomial
from src.algebra.syzygies import annihilator, ideal_intersection
from src.config import RunConfig, use_budget
from src.errors import BudgetExceededError, InapplicableError, StructuralError
from src.homological.biduality import c_syzygy_witness, torsion_free_degree
from src.homological.functors import ext, tensor
from src.homological.transpose import lambda_, transpose, transpose_wrt
from src.invariants.gc_dimension import (gc_dim, is_gc_gorenstein, is_gc_perfect, is_reduced_gc_perfect,
                                         is_totally_reflexive, quotient_module)
from src.invariants.grade import grade_module, projective_dimension, reduced_grade
from src.invariants.local_cohomology import (ambient_ext_dimension, cc, depth, is_cohen_macaulay,
                                             is_eilenberg_maclane, is_generalized_cm, is_maximal_cohen_macaulay,
                                             krull_dim, local_cohomology_degrees, m_in_ass)
from src.invariants.probes import depth_at_prime, dim_at_prime, in_support, probe_primes, probe_set_label
from src.invariants.semidualizing import (canonical_module, embed_canonical_as_ideal, in_auslander_class,
                                          induced_semidualizing, is_free_of_rank_one, is_semidualizing)
from src.invariants.serre import serre_tilde
from src.invariants.vanishing import ext_vanishing_through
from src.invariants.verdicts import BoundedVerdict, GcDimKind, InfinityUpTo, at_least, combine
from src.linkage.horizontal import is_self_linked, linkage_report
from src.linkage.ideal_linkage import is_ideal_linked_by_zero, linked_by_ideal
from src.modules.isomorphism import IsoKind, is_isomorphic
from src.modules.minimalize import minimalize
from src.modules.presentation import ModulePresentation, change_ring, free_module, quotient_by_ideal
from src.modules.rings import GradedRing, quotient_ring
from src.modules.resolution import syzygy
from src.services.reports import HypothesisFailed, ReportBuilder, TheoremId


logger = logging.getLogger(__name__)

MAX_LEVEL = 3
SYZ_RATIONALE = ('syz(M) is taken as the torsion-free degree max{n : Ext^i(Tr M, R) = 0, 1 <= i <= n}; '
                 'for modules of finite Gorenstein dimension the two agree')


@dataclass(frozen=True)
class Check:
    theorem_id: TheoremId
    required: tuple
    optional: tuple
    procedure: object
    summary: str


@dataclass(frozen=True)
class CheckContext:
    """What every check needs besides its bindings."""
    ring: object
    bound: int
    seed: int
    primes: tuple
    levels: tuple

    @property
    def R(self):
        return free_module(self.ring, [0])


CHECKS = {}


def theorem(theorem_id, required, optional=('C', 'n'), summary=''):
    def register(procedure):
        CHECKS[theorem_id] = Check(theorem_id, tuple(required), tuple(optional), procedure, summary)
        return procedure
    return register


def _ring_of(bindings):
    if isinstance(bindings.get('R'), GradedRing):
        return bindings['R']
    for value in bindings.values():
        if isinstance(value, ModulePresentation):
            return value.ring
    raise StructuralError('bindings name no module, so the ring is unknown')


def _levels(bindings, ring):
    if 'n' in bindings:
        n = int(bindings['n'])
        if n < 1:
            raise StructuralError('n must be at least 1')
        return (n,)
    return tuple(range(1, min(max(ring.dim, 1), MAX_LEVEL) + 1))


def describe(bindings):
    parts = []
    for name, value in bindings.items():
        if isinstance(value, ModulePresentation):
            parts.append(f'{name} = {value}')
        elif isinstance(value, (list, tuple)) or hasattr(value, 'polynomials'):
            polynomials = value.polynomials if hasattr(value, 'polynomials') else value
            parts.append(f'{name} = ({", ".join(format_polynomial(p) for p in polynomials)})')
        else:
            parts.append(f'{name} = {value}')
    return '; '.join(parts)


def check(theorem_id, bindings, config=None, extra_primes=(), instance=None):
    """Runs one theorem check on one instance.

    Parameters:

    theorem_id (TheoremId): which result to check

    bindings (dict): named modules ('M', 'C', ...), ideals (lists of polynomials or Gröbner
        bases) and the optional level 'n'

    config (RunConfig) - optional: bound, seed and budgets

    extra_primes (list of ProbePrime) - optional: added to the variable-subset probe primes

    instance (str) - optional: label used in the report instead of the printed bindings

    Returns:

    TheoremReport: Verified, Refuted, Inapplicable or PartiallyVerified
    """
    entry = CHECKS[theorem_id]
    missing = [name for name in entry.required if name not in bindings]
    if missing:
        raise StructuralError(f'{theorem_id.value} needs the bindings {", ".join(missing)}')
    config = config or RunConfig()
    ring = _ring_of(bindings)
    for name, value in bindings.items():
        if isinstance(value, ModulePresentation) and value.ring != ring:
            raise StructuralError(f'binding {name} lives over {value.ring}, expected {ring}')
    builder = ReportBuilder(theorem_id, instance or describe(bindings))
    started = time.monotonic()
    try:
        with use_budget(config.budget()):
            context = CheckContext(ring, config.bound_for(ring), config.seed,
                                   tuple(probe_primes(ring, extra_primes)), _levels(bindings, ring))
            entry.procedure(builder, bindings, context)
    except HypothesisFailed:
        pass
    except InapplicableError as error:
        builder.inapplicable_reason = error.hypothesis
        if error.witness is not None:
            builder.note(f'witness: {error.witness}')
    except BudgetExceededError as error:
        logger.warning(f'{theorem_id.value}: {error}')
        builder.inapplicable_reason = f'budget exceeded: {error}'
        builder.budget_exceeded = True
    report = builder.build({'seconds': time.monotonic() - started})
    logger.info(f'{theorem_id.value} on {report.instance}: {report.verdict.value}')
    return report


# Shared evidence.

@lru_cache(maxsize=None)
def _canonical(ring):
    return canonical_module(ring)


def _C(bindings, context):
    C = bindings.get('C')
    return minimalize(C) if C is not None else context.R


def _ideal(bindings, name, ring):
    value = bindings[name]
    if hasattr(value, 'polynomials'):
        return value
    return ideal_basis(list(value), ring.poly_ring)


def _finite(verdict):
    if verdict.is_finite:
        return BoundedVerdict.up_to(verdict.bound, note=str(verdict))
    if verdict.kind is GcDimKind.INFINITE:
        return BoundedVerdict.false(verdict.witness, note=str(verdict))
    return BoundedVerdict.unknown(str(verdict))


def _zero(verdict):
    if verdict.kind is GcDimKind.ZERO:
        return BoundedVerdict.up_to(verdict.bound, note=str(verdict))
    if verdict.kind is GcDimKind.POSITIVE_UNKNOWN:
        return BoundedVerdict.unknown(str(verdict))
    return BoundedVerdict.false(verdict.value if verdict.value is not None else verdict.witness, note=str(verdict))


def _require_cm(builder, ring):
    builder.require('R is Cohen-Macaulay', ring.is_cm)


def _require_semidualizing(builder, C, context):
    certificate = is_semidualizing(C, context.bound)
    homothety = certificate.homothety
    if homothety.kind is IsoKind.UNKNOWN:
        verdict = BoundedVerdict.unknown(f'homothety {homothety}')
    elif not homothety.is_isomorphic:
        verdict = BoundedVerdict.false('homothety', note=str(homothety))
    else:
        verdict = certificate.ext_vanishing
    builder.require('C is semidualizing', verdict)
    return certificate


def _require_linked(builder, M, context, name='M'):
    report = linkage_report(M, context.seed)
    builder.require(f'{name} is horizontally linked', report.verdict)
    return report


def _require_gc_finite(builder, M, C, context, name='G_C-dim M < ∞'):
    verdict = gc_dim(M, C, context.bound)
    builder.value(name.replace(' < ∞', ''), verdict)
    builder.require(name, _finite(verdict))
    return verdict


def _require_auslander(builder, M, C, context, certificate=None, name='λM ∈ A_C'):
    if is_free_of_rank_one(C):
        builder.require(name, BoundedVerdict.true(note='C = R'))
        return
    certificate = certificate or is_semidualizing(C, context.bound)
    builder.require(name, in_auslander_class(M, C, context.bound, certificate))


def _g_finite(M, context):
    """G-dim M < ∞; automatic over Gorenstein rings."""
    if context.ring.is_gorenstein:
        return BoundedVerdict.true(note='R is Gorenstein')
    return _finite(gc_dim(M, context.R, context.bound))


def _dualizing(C, context):
    """C has finite injective dimension everywhere: R over a Gorenstein ring or ω_R over a CM ring."""
    ring = context.ring
    if is_free_of_rank_one(C):
        return BoundedVerdict.true(note='R is Gorenstein') if ring.is_gorenstein \
            else BoundedVerdict.unknown('R is not Gorenstein')
    if ring.is_cm and is_isomorphic(C, _canonical(ring), seed=context.seed).is_isomorphic:
        return BoundedVerdict.true(note='C ≅ ω_R')
    return BoundedVerdict.unknown('injective dimension of C not determined')


def _gc_finite_everywhere(M, C, context):
    """Finite G_C-dimension at every prime, in particular on X^{n-1}(R)."""
    dualizing = _dualizing(C, context)
    if dualizing.holds:
        return dualizing
    verdict = gc_dim(M, C, context.bound)
    if verdict.is_finite:
        return BoundedVerdict.up_to(verdict.bound, note='G_C-dimension localizes')
    return BoundedVerdict.unknown('local G_C-dimensions not determined')


def _serre(M, n, context):
    return serre_tilde(M, n, list(context.primes))


def _lc_vanishing(M, low, high):
    """H^i_m(M) = 0 for low <= i <= high."""
    hits = [i for i in local_cohomology_degrees(M) if low <= i <= high]
    if hits:
        return BoundedVerdict.false(hits[0], note=f'H^{hits[0]}_m != 0')
    return BoundedVerdict.true()


def _over_probes(primes, test, keep=lambda p: True):
    """Samples a per-prime statement; a failing prime is an exact counterexample to it."""
    for p in primes:
        if not keep(p):
            continue
        holds, detail = test(p)
        if not holds:
            return BoundedVerdict.false(p.label, note=f'at {p}: {detail}')
    return BoundedVerdict.up_to(probe_set=probe_set_label(primes))


def _is_maximal(p, ring):
    return p.subset is not None and len(p.subset) == ring.num_variables


def _non_cm_locus(M):
    return lambda p: in_support(M, p) and depth_at_prime(M, p) < dim_at_prime(M, p)


def _local_depth_R(context):
    R = context.R
    return lambda p: depth_at_prime(R, p)


def _le(left, right):
    """left <= right, where InfinityUpTo(B) stands for a value beyond B."""
    left_open, right_open = isinstance(left, InfinityUpTo), isinstance(right, InfinityUpTo)
    if left_open and right_open:
        return BoundedVerdict.unknown('both sides beyond the bound')
    if right_open:
        return BoundedVerdict.true() if left <= right.bound else BoundedVerdict.unknown('beyond the bound')
    if left_open:
        return BoundedVerdict.false(str(left)) if left.bound >= right else BoundedVerdict.unknown('beyond the bound')
    return BoundedVerdict.true() if left <= right else BoundedVerdict.false((left, right))


def _bool(value):
    return BoundedVerdict.true() if value else BoundedVerdict.false(value)


def _link_verdict(result):
    if result.linked:
        return BoundedVerdict.true(note=str(result))
    if result.refuted:
        return BoundedVerdict.false('not linked', note=str(result))
    return BoundedVerdict.unknown(str(result))


def _as_int(value, fallback):
    return fallback if isinstance(value, InfinityUpTo) or value == math.inf else value


def _tensor_omega(builder, M, context):
    omega = _canonical(context.ring)
    Mw = minimalize(tensor(M, omega))
    builder.require('M ⊗ ω_R satisfies S_1', _serre(Mw, 1, context))
    return Mw


# Checks.

@theorem(TheoremId.THM_MS, ['M'], optional=(),
         summary='horizontally linked <=> stable and Ext^1(Tr M, R) = 0 <=> stable and a syzygy')
def _check_ms(builder, bindings, context):
    report = linkage_report(bindings['M'], context.seed)
    builder.value('free rank stripped', report.free_rank_stripped)
    ext_criterion = report.stable and report.syzygy_test
    syzygy_criterion = report.stable and report.first_syzygy
    builder.equivalent('stable ∧ Ext^1(Tr M, R) = 0 <=> stable ∧ first syzygy', ext_criterion, syzygy_criterion)
    builder.equivalent('stable ∧ Ext^1(Tr M, R) = 0 <=> M ≅ λ²M', ext_criterion, report.double_link_iso)


@theorem(TheoremId.PROP_T1, ['M'], summary='Ext vanishing of Tr_C M => n-th C-syzygy => S̃_n')
def _check_t1(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    _require_semidualizing(builder, C, context)
    finite = _gc_finite_everywhere(M, C, context)
    T = transpose_wrt(M, C)
    for n in context.levels:
        vanishing = ext_vanishing_through(T, C, n)
        witness = c_syzygy_witness(M, C, n)
        builder.value(f'C-syzygy steps [n={n}]', witness.steps)
        syzygy_holds = witness.holds
        serre = _serre(M, n, context)
        builder.implication(f'(i) => (ii) [n={n}]', vanishing, syzygy_holds)
        builder.implication(f'(ii) => (iii) [n={n}]', syzygy_holds, serre)
        if finite.holds:
            builder.implication(f'(iii) => (i) [n={n}]', combine([finite, serre]), vanishing)
        else:
            builder.note(f'converse not checked: {finite}')


@theorem(TheoremId.PROP_P3, ['M'], optional=('n',),
         summary='λM satisfies S_n <=> H^i_m(M ⊗ ω) = 0 for d - n < i < d')
def _check_p3(builder, bindings, context):
    M = minimalize(bindings['M'])
    _require_cm(builder, context.ring)
    _require_linked(builder, M, context)
    Mw = _tensor_omega(builder, M, context)
    linked = lambda_(M)
    d = context.ring.dim
    for n in context.levels:
        builder.equivalent(f'λM satisfies S_{n} <=> H^i_m(M ⊗ ω) = 0 for {d - n} < i < {d}',
                           _serre(linked, n, context), _lc_vanishing(Mw, d - n + 1, d - 1))
    builder.note('S_n and S̃_n agree for horizontally linked modules over Cohen-Macaulay rings')


@theorem(TheoremId.PROP_T13, ['M'], summary='Ext^i(Tr M, C) = 0 => M ⊗ C is an n-th C-syzygy => S̃_n')
def _check_t13(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    _require_semidualizing(builder, C, context)
    T = transpose(M)
    MC = minimalize(tensor(M, C))
    dualizing = _dualizing(C, context)
    for n in context.levels:
        vanishing = ext_vanishing_through(T, C, n)
        syzygy_holds = c_syzygy_witness(MC, C, n).holds
        serre = _serre(MC, n, context)
        builder.implication(f'(i) => (ii) [n={n}]', vanishing, syzygy_holds)
        builder.implication(f'(ii) => (iii) [n={n}]', syzygy_holds, serre)
        if dualizing.holds:
            builder.implication(f'(iii) => (i) [n={n}]', serre, vanishing)
        else:
            builder.note(f'converse not checked: {dualizing}')


@theorem(TheoremId.COR_C2, ['M'], optional=('n',),
         summary='M ⊗ ω satisfies S_n <=> H^i_m(λM) = 0 for d - n < i < d')
def _check_c2(builder, bindings, context):
    M = minimalize(bindings['M'])
    _require_cm(builder, context.ring)
    _require_linked(builder, M, context)
    Mw = _tensor_omega(builder, M, context)
    linked = lambda_(M)
    d = context.ring.dim
    for n in context.levels:
        builder.equivalent(f'M ⊗ ω satisfies S_{n} <=> H^i_m(λM) = 0 for {d - n} < i < {d}',
                           _serre(Mw, n, context), _lc_vanishing(linked, d - n + 1, d - 1))


@theorem(TheoremId.LEM_LEM2, ['M'], summary='M ∈ A_C preserves depth, dimension, S̃_n and the CM property')
def _check_lem2(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    certificate = _require_semidualizing(builder, C, context)
    _require_auslander(builder, M, C, context, certificate, name='M ∈ A_C')
    MC = minimalize(tensor(M, C))
    builder.equal('depth M = depth M ⊗ C', depth(M), depth(MC))
    builder.equal('dim M = dim M ⊗ C', krull_dim(M), krull_dim(MC))
    for n in context.levels:
        builder.equivalent(f'M satisfies S̃_{n} <=> M ⊗ C does', _serre(M, n, context), _serre(MC, n, context))
    builder.equivalent('M is CM <=> M ⊗ C is CM', is_cohen_macaulay(M), is_cohen_macaulay(MC))


@theorem(TheoremId.THM_TH5, ['M'], summary='for M ∈ A_C: Ext^i(Tr M, R) = 0 => Ext^i(Tr M, C) = 0 => S̃_n')
def _check_th5(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    certificate = _require_semidualizing(builder, C, context)
    _require_auslander(builder, M, C, context, certificate, name='M ∈ A_C')
    finite = _g_finite(M, context)
    T = transpose(M)
    MC = minimalize(tensor(M, C))
    for n in context.levels:
        over_R = ext_vanishing_through(T, context.R, n)
        over_C = ext_vanishing_through(T, C, n)
        serre_MC, serre_M = _serre(MC, n, context), _serre(M, n, context)
        builder.implication(f'(i) => (ii) [n={n}]', over_R, over_C)
        builder.implication(f'(ii) => (iii) [n={n}]', over_C, serre_MC)
        builder.equivalent(f'(iii) <=> (iv) [n={n}]', serre_MC, serre_M)
        if finite.holds:
            builder.implication(f'(iv) => (i) [n={n}]', combine([finite, serre_M]), over_R)
        else:
            builder.note(f'part (b) not checked: {finite}')


@theorem(TheoremId.COR_FINITE_PD, ['M'],
         summary='pd M < ∞: S̃_n <=> M ⊗ C satisfies S̃_n <=> Ext^i(Tr M, C) = 0 for 1 <= i <= n')
def _check_finite_pd(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    _require_semidualizing(builder, C, context)
    pd = builder.value('pd M', projective_dimension(M, context.bound))
    builder.require('pd M < ∞', BoundedVerdict.unknown(str(pd)) if isinstance(pd, InfinityUpTo) else True)
    T = transpose(M)
    MC = minimalize(tensor(M, C))
    for n in context.levels:
        serre_M = _serre(M, n, context)
        builder.equivalent(f'S̃_{n}(M) <=> S̃_{n}(M ⊗ C)', serre_M, _serre(MC, n, context))
        builder.equivalent(f'S̃_{n}(M) <=> Ext^i(Tr M, C) = 0, i <= {n}', serre_M, ext_vanishing_through(T, C, n))


@theorem(TheoremId.COR_COR7, ['M'], summary='S̃_n <=> horizontally linked and Ext^i(λM, C) = 0 for 0 < i < n')
def _check_cor7(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    certificate = _require_semidualizing(builder, C, context)
    report = linkage_report(M, context.seed)
    builder.require('M is stable', report.stable)
    _require_auslander(builder, M, C, context, certificate, name='M ∈ A_C')
    builder.require('G-dim finite on X^{n-1}(R)', _g_finite(M, context))
    linked = lambda_(M)
    for n in context.levels:
        right = combine([BoundedVerdict.true() if report.verdict else BoundedVerdict.false('not linked'),
                         ext_vanishing_through(linked, C, n - 1)])
        builder.equivalent(f'S̃_{n}(M) <=> linked ∧ Ext^i(λM, C) = 0 for 0 < i < {n}', _serre(M, n, context), right)


@theorem(TheoremId.THM_THEOREM1, ['M'], optional=(),
         summary='M ⊗ ω mCM <=> λM mCM <=> S_n conditions above d - depth')
def _check_theorem1(builder, bindings, context):
    M = minimalize(bindings['M'])
    _require_cm(builder, context.ring)
    _require_linked(builder, M, context)
    Mw = _tensor_omega(builder, M, context)
    linked = lambda_(M)
    d = context.ring.dim
    level_w = max(1, d - _as_int(depth(linked), d) + 1)
    level_l = max(1, d - _as_int(depth(Mw), d) + 1)
    tensor_mcm = is_maximal_cohen_macaulay(Mw)
    builder.equivalent('M ⊗ ω mCM <=> λM mCM', tensor_mcm, is_maximal_cohen_macaulay(linked))
    builder.equivalent(f'M ⊗ ω mCM <=> M ⊗ ω satisfies S_{level_w}', tensor_mcm, _serre(Mw, level_w, context))
    builder.equivalent(f'M ⊗ ω mCM <=> λM satisfies S_{level_l}', tensor_mcm, _serre(linked, level_l, context))


def _canonical_ideal(builder, context):
    ring = context.ring
    builder.require('R is not Gorenstein', not ring.is_gorenstein)
    try:
        embedding = embed_canonical_as_ideal(ring, seed=context.seed)
    except InapplicableError:
        builder.require('R is generically Gorenstein', BoundedVerdict.unknown('no embedding ω_R -> R found'))
    builder.require('R is generically Gorenstein', BoundedVerdict.true(note='ω_R embeds in R'))
    return embedding


@theorem(TheoremId.THM_THE1, ['M'], optional=(), summary='λM mCM <=> M / ωM is CM of dimension d - 1')
def _check_the1(builder, bindings, context):
    M = minimalize(bindings['M'])
    _require_cm(builder, context.ring)
    embedding = _canonical_ideal(builder, context)
    builder.require('M is maximal Cohen-Macaulay', is_maximal_cohen_macaulay(M))
    _require_linked(builder, M, context)
    _tensor_omega(builder, M, context)
    quotient = minimalize(quotient_by_ideal(M, embedding.generators))
    d = context.ring.dim
    right = not quotient.is_zero() and is_cohen_macaulay(quotient) and krull_dim(quotient) == d - 1
    builder.value('dim M / ωM', krull_dim(quotient))
    builder.equivalent('λM mCM <=> M / ωM CM of dimension d - 1', is_maximal_cohen_macaulay(lambda_(M)), right)


@theorem(TheoremId.COR_THEOREM3, ['I', 'J'], optional=('n',),
         summary='R/J CM <=> R/(I + ω) CM of dimension d - 1 for ideals linked by zero')
def _check_theorem3(builder, bindings, context):
    ring = context.ring
    I, J = _ideal(bindings, 'I', ring), _ideal(bindings, 'J', ring)
    _require_cm(builder, ring)
    embedding = _canonical_ideal(builder, context)
    W = ideal_basis(list(embedding.generators), ring.poly_ring)
    builder.require('I and J are linked by zero', is_ideal_linked_by_zero(I, J, ring))
    product = ideal_sum(ideal_product(I, W), ring.ideal)
    intersection = ideal_intersection(ideal_sum(I, ring.ideal), ideal_sum(W, ring.ideal))
    builder.require('Iω = I ∩ ω', product == intersection)
    builder.require('R/I is Cohen-Macaulay', is_cohen_macaulay(quotient_module(ring, I)))
    sum_quotient = quotient_module(ring, ideal_sum(I, W))
    right = (not sum_quotient.is_zero() and is_cohen_macaulay(sum_quotient)
             and krull_dim(sum_quotient) == ring.dim - 1)
    builder.equivalent('R/J CM <=> R/(I + ω) CM of dimension d - 1',
                       is_cohen_macaulay(quotient_module(ring, J)), right)


def _linked_over(builder, M, c, context, name):
    """M as a module over R/c, required to be horizontally linked there."""
    ring = context.ring
    for f in c.polynomials:
        if not annihilator(M).contains((f,)):
            builder.require(f'c ⊆ ann({name})', False)
    target = quotient_ring(ring, list(c.polynomials))
    M_c = minimalize(change_ring(M, target))
    builder.require(f'{name} is linked by c', linkage_report(M_c, context.seed).verdict)
    return M_c


@theorem(TheoremId.THM_PROP_EVEN, ['M1', 'M', 'M2', 'c1', 'c2'],
         summary='M1 ∼ M ∼ M2 through G_C-Gorenstein ideals: S̃_n(M1) <=> S̃_n(M2)')
def _check_even(builder, bindings, context):
    ring = context.ring
    M, C = minimalize(bindings['M']), _C(bindings, context)
    c1, c2 = _ideal(bindings, 'c1', ring), _ideal(bindings, 'c2', ring)
    builder.require('c1 is G_C-Gorenstein', is_gc_gorenstein(c1, C, context.bound))
    builder.require('c2 is G_C-Gorenstein', is_gc_gorenstein(c2, C, context.bound))
    _require_gc_finite(builder, M, C, context)
    M1, M2 = minimalize(bindings['M1']), minimalize(bindings['M2'])
    first = linked_by_ideal(M1, M, c1, context.seed)
    second = linked_by_ideal(M, M2, c2, context.seed)
    builder.require('M1 ∼_c1 M', _link_verdict(first))
    builder.require('M ∼_c2 M2', _link_verdict(second))
    for n in context.levels:
        builder.equivalent(f'S̃_{n}(M1) <=> S̃_{n}(M2)', _serre(M1, n, context), _serre(M2, n, context))


def _require_linked_hypotheses(builder, M, C, context):
    """Horizontally linked, finite G_C-dimension and λM ∈ A_C."""
    report = _require_linked(builder, M, context)
    dimension = _require_gc_finite(builder, M, C, context)
    linked = lambda_(M)
    _require_auslander(builder, linked, C, context)
    return report, dimension, linked


@theorem(TheoremId.THM_TH1, ['M'], summary='S̃_n <=> linked and rgr(λM) >= n; rgr(M, C) >= n <=> S̃_n(λM)')
def _check_th1(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    report = linkage_report(M, context.seed)
    builder.require('M is stable', report.stable)
    _require_gc_finite(builder, M, C, context)
    linked = lambda_(M)
    _require_auslander(builder, linked, C, context)
    rgr_linked = builder.value('rgr(λM)', reduced_grade(linked, context.R, context.bound))
    rgr_MC = builder.value('rgr(M, C)', reduced_grade(M, C, context.bound))
    for n in context.levels:
        right = combine([BoundedVerdict.true() if report.verdict else BoundedVerdict.false('not linked'),
                         at_least(rgr_linked, n)])
        builder.equivalent(f'(i) S̃_{n}(M) <=> linked ∧ rgr(λM) >= {n}', _serre(M, n, context), right)
        if report.verdict:
            builder.equivalent(f'(ii) rgr(M, C) >= {n} <=> S̃_{n}(λM)', at_least(rgr_MC, n), _serre(linked, n, context))


@theorem(TheoremId.COR_COR5, ['M'], optional=('C',), summary='M mCM <=> λM mCM and linked <=> S_n(λM) and linked')
def _check_cor5(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    _require_cm(builder, context.ring)
    report = linkage_report(M, context.seed)
    builder.require('M is stable', report.stable)
    _require_gc_finite(builder, M, C, context)
    linked = lambda_(M)
    _require_auslander(builder, linked, C, context)
    d = context.ring.dim
    level = max(1, d - _as_int(depth(M), d) + 1)
    mcm = is_maximal_cohen_macaulay(M)
    linked_verdict = BoundedVerdict.true() if report.verdict else BoundedVerdict.false('not linked')
    builder.equivalent('M mCM <=> λM mCM ∧ linked', mcm, combine([_bool(is_maximal_cohen_macaulay(linked)), linked_verdict]))
    builder.equivalent(f'M mCM <=> S_{level}(λM) ∧ linked', mcm, combine([_serre(linked, level, context), linked_verdict]))


@theorem(TheoremId.COR_COR6, ['M', 'a'], optional=('C',), summary='M CM <=> λ_{R/a} M CM for a G_C-perfect linking ideal')
def _check_cor6(builder, bindings, context):
    ring = context.ring
    M, C = minimalize(bindings['M']), _C(bindings, context)
    a = _ideal(bindings, 'a', ring)
    _require_cm(builder, ring)
    builder.require('a is G_C-perfect', is_gc_perfect(a, C, context.bound))
    _require_gc_finite(builder, M, C, context)
    M_a = _linked_over(builder, M, a, context, 'M')
    K, certificate = induced_semidualizing(a, C, context.bound)
    builder.require('K is semidualizing over R/a', certificate.valid)
    linked = lambda_(M_a)
    _require_auslander(builder, linked, K, context, certificate, name='λ_{R/a} M ∈ A_K')
    builder.equivalent('M CM <=> λ_{R/a} M CM', is_cohen_macaulay(M), is_cohen_macaulay(linked))


@theorem(TheoremId.THM_COR3, ['M'], optional=(),
         summary='H^cc_m(M) finitely generated <=> depth λM + cc(M) = d with strict inequalities on cm(M)')
def _check_cor3(builder, bindings, context):
    M = minimalize(bindings['M'])
    ring = context.ring
    _require_cm(builder, ring)
    _require_linked(builder, M, context)
    builder.require('M is not Cohen-Macaulay', not is_cohen_macaulay(M))
    linked = lambda_(M)
    builder.require('G-dim λM < ∞', _g_finite(linked, context))
    c = builder.value('cc(M)', cc(M))
    d = ring.dim
    finitely_generated = ambient_ext_dimension(M, ring.num_variables - c) <= 0
    depth_linked = depth(linked)
    global_part = _bool(depth_linked + c == d)
    non_cm = _non_cm_locus(M)
    local_part = _over_probes(context.primes,
                              lambda p: (depth_at_prime(linked, p) + c > d, f'depth (λM)_p = {depth_at_prime(linked, p)}'),
                              keep=lambda p: not _is_maximal(p, ring) and non_cm(p))
    builder.equivalent('H^cc_m(M) finitely generated <=> depth conditions', finitely_generated,
                       combine([global_part, local_part]))


def _depth_sum_criterion(M, other, context, scale=1):
    """depth M_p + depth other_p > depth R_p (scale 2 compares 2 depth M_p) off X^0(R)."""
    local_R = _local_depth_R(context)

    def test(p):
        left = depth_at_prime(M, p) * scale if other is None else depth_at_prime(M, p) + depth_at_prime(other, p)
        return left > local_R(p), f'{left} <= depth R_p = {local_R(p)}'

    return _over_probes(context.primes, test, keep=lambda p: local_R(p) > 0 and in_support(M, p))


@theorem(TheoremId.THM_TH2, ['M'], summary='G_C-dim M = 0 <=> depth M_p + depth (λM)_p > depth R_p off X^0')
def _check_th2(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    _, dimension, linked = _require_linked_hypotheses(builder, M, C, context)
    builder.equivalent('G_C-dim M = 0 <=> depth inequality at every prime off X^0', _zero(dimension),
                       _depth_sum_criterion(M, linked, context))


@theorem(TheoremId.COR_SELF, ['M'], summary='self-linked M: G_C-dim M = 0 <=> depth M_p > depth R_p / 2 off X^0')
def _check_self(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    builder.require('M is horizontally self-linked', is_self_linked(M, context.seed))
    dimension = _require_gc_finite(builder, M, C, context)
    _require_auslander(builder, M, C, context, name='M ∈ A_C')
    builder.equivalent('G_C-dim M = 0 <=> 2 depth M_p > depth R_p off X^0', _zero(dimension),
                       _depth_sum_criterion(M, None, context, scale=2))


def _not_gc_zero(M, context):
    """p ∈ ng(M): for finite G_C-dimension, G_C-dim M_p = depth R_p - depth M_p."""
    local_R = _local_depth_R(context)
    return lambda p: in_support(M, p) and depth_at_prime(M, p) < local_R(p)


@theorem(TheoremId.THM_TH3, ['M'], summary='depth M = syz(M) = rgr(λM) <=> m ∈ Ass Ext^rgr(λM, R) <=> depth minimal on ng(M)')
def _check_th3(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    _, dimension, linked = _require_linked_hypotheses(builder, M, C, context)
    builder.require('G_C-dim M > 0', not dimension.is_zero)
    builder.note(SYZ_RATIONALE)
    rgr = builder.value('rgr(λM)', reduced_grade(linked, context.R, context.bound))
    if isinstance(rgr, InfinityUpTo):
        builder.inapplicable(f'rgr(λM) not found up to {rgr.bound}')
    depth_M = builder.value('depth M', depth(M))
    syz = builder.value('syz(M)', torsion_free_degree(M, context.bound))
    builder.claim('rgr(λM) <= syz(M) <= depth M', rgr <= syz <= depth_M)
    first = depth_M == syz == rgr
    second = m_in_ass(ext(linked, context.R, rgr))
    third = _over_probes(context.primes, lambda p: (depth_M <= depth_at_prime(M, p), f'depth M_p = {depth_at_prime(M, p)}'),
                         keep=_not_gc_zero(M, context))
    builder.equivalent('(i) <=> (ii)', first, second)
    builder.equivalent('(ii) <=> (iii)', second, third)


@theorem(TheoremId.THM_TH6, ['M'], summary='rgr(M, C) = inf{depth (λM)_p : G_C-dim M_p != 0}')
def _check_th6(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    _, _, linked = _require_linked_hypotheses(builder, M, C, context)
    rgr_MC = builder.value('rgr(M, C)', reduced_grade(M, C, context.bound))
    ng = _not_gc_zero(M, context)
    values = [(p, depth_at_prime(linked, p)) for p in context.primes if ng(p)]
    for p, value in values:
        builder.claim(f'rgr(M, C) <= depth (λM)_p at {p}', _le(rgr_MC, value))
    attained = [p for p, value in values if value == rgr_MC]
    if attained:
        builder.claim('infimum attained', BoundedVerdict.up_to(probe_set=probe_set_label(context.primes),
                                                              note=f'at {attained[0]}'))
    else:
        builder.claim('infimum attained', BoundedVerdict.unknown('not attained at a probe prime'))
    rgr_M = builder.value('rgr(M)', reduced_grade(M, context.R, context.bound))
    builder.claim('rgr(M) <= rgr(M, C)', _le(rgr_M, rgr_MC))
    pd = projective_dimension(linked, context.bound)
    if not isinstance(pd, InfinityUpTo):
        builder.equal('rgr(M) = rgr(M, C) when pd λM < ∞', rgr_M, rgr_MC,
                      exact=not isinstance(rgr_M, InfinityUpTo))


@theorem(TheoremId.PROP_XTM, ['M'], summary='G_C-dim M_p = 0 on X^{t_M - 1}(R), t_M = rgr(M, C) + rgr(λM)')
def _check_xtm(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    _, dimension, linked = _require_linked_hypotheses(builder, M, C, context)
    builder.require('G_C-dim M > 0', not dimension.is_zero)
    cap = context.ring.num_variables + 1
    t = _as_int(reduced_grade(M, C, context.bound), cap) + _as_int(reduced_grade(linked, context.R, context.bound), cap)
    builder.value('t_M', t)
    local_R = _local_depth_R(context)
    builder.claim(f'G_C-dim M_p = 0 where depth R_p <= {t - 1}',
                  _over_probes(context.primes, lambda p: (depth_at_prime(M, p) >= local_R(p), f'depth M_p = {depth_at_prime(M, p)}'),
                               keep=lambda p: local_R(p) <= t - 1 and in_support(M, p)))


@theorem(TheoremId.THM_TH4, ['M'], summary='depth M + depth λM = depth R + depth Ext^n(M, C)')
def _check_th4(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    _require_cm(builder, context.ring)
    builder.require('M is reduced G_C-perfect', is_reduced_gc_perfect(M, C, context.bound))
    linked = lambda_(M)
    _require_auslander(builder, linked, C, context)
    n = builder.value('G_C-dim M', gc_dim(M, C, context.bound).value)
    left = depth(M) + depth(linked)
    right = context.ring.depth + depth(ext(M, C, n))
    builder.equal('depth M + depth λM = depth R + depth Ext^n(M, C)', left, right)


@theorem(TheoremId.THM_TH7, ['M'], summary='reduced G_C-perfect <=> λM satisfies S̃_n, n = G_C-dim M')
def _check_th7(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    _, dimension, linked = _require_linked_hypotheses(builder, M, C, context)
    builder.require('G_C-dim M > 0', not dimension.is_zero)
    n = dimension.value
    builder.equivalent(f'reduced G_C-perfect <=> S̃_{n}(λM)', is_reduced_gc_perfect(M, C, context.bound),
                       _serre(linked, n, context))


@theorem(TheoremId.COR_COR1, ['M'], optional=(), summary='Eilenberg-Maclane <=> λM satisfies S̃_{d - depth M}')
def _check_cor1(builder, bindings, context):
    M = minimalize(bindings['M'])
    _require_cm(builder, context.ring)
    _require_linked(builder, M, context)
    d = context.ring.dim
    n = depth(M)
    builder.require('depth M < dim R', n < d)
    linked = lambda_(M)
    builder.require('G-dim λM < ∞', _g_finite(linked, context))
    builder.equivalent(f'Eilenberg-Maclane <=> S̃_{d - n}(λM)', is_eilenberg_maclane(M), _serre(linked, d - n, context))


@theorem(TheoremId.COR_COR4, ['M'], optional=(),
         summary='for Eilenberg-Maclane non-CM M: generalized CM <=> depth conditions on λM')
def _check_cor4(builder, bindings, context):
    M = minimalize(bindings['M'])
    ring = context.ring
    _require_cm(builder, ring)
    _require_linked(builder, M, context)
    builder.require('M is not Cohen-Macaulay', not is_cohen_macaulay(M))
    builder.require('M is Eilenberg-Maclane', is_eilenberg_maclane(M))
    linked = lambda_(M)
    builder.require('G-dim λM < ∞', _g_finite(linked, context))
    d, depth_M = ring.dim, depth(M)
    global_part = _bool(depth(linked) + depth_M == d)
    non_cm = _non_cm_locus(M)
    local_part = _over_probes(context.primes,
                              lambda p: (depth_at_prime(linked, p) + depth_M > d, f'depth (λM)_p = {depth_at_prime(linked, p)}'),
                              keep=lambda p: not _is_maximal(p, ring) and non_cm(p))
    builder.equivalent('generalized CM <=> depth conditions', is_generalized_cm(M), combine([global_part, local_part]))


@theorem(TheoremId.REMARK3_I, ['M'], optional=('C',), summary='Tr M ⊗ C ≅ Tr_C M')
def _check_remark3(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    builder.claim('Tr M ⊗ C ≅ Tr_C M', is_isomorphic(tensor(transpose(M), C), transpose_wrt(M, C), seed=context.seed))


def _first_reflexive_syzygy(M, C, context):
    """Least r with Ω^r M totally C-reflexive, searched up to depth R."""
    for r in range(context.ring.depth + 1):
        verdict = is_totally_reflexive(syzygy(M, r), C, context.bound)
        if verdict.holds:
            return r
    return None


def _last_nonvanishing_ext(M, C, context):
    last = None
    for i in range(context.bound + 1):
        if not ext(M, C, i).is_zero():
            last = i
    return last


@theorem(TheoremId.G3_AB_FORMULA, ['M'], optional=('C',),
         summary='G_C-dim M = sup{i : Ext^i(M, C) != 0} = depth R - depth M')
def _check_g3(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    _require_semidualizing(builder, C, context)
    builder.require('M is nonzero', not M.is_zero())
    _require_gc_finite(builder, M, C, context)
    r = builder.value('least r with Ω^r M totally C-reflexive', _first_reflexive_syzygy(M, C, context))
    builder.equal('G_C-dim M = depth R - depth M', r, context.ring.depth - depth(M))
    builder.equal('G_C-dim M = sup{i : Ext^i(M, C) != 0}', r, _last_nonvanishing_ext(M, C, context))


@theorem(TheoremId.REMARK_REM1, ['M'], optional=('C',), summary='G_C-dim M = 0 <=> G_C-dim Tr_C M = 0')
def _check_rem1(builder, bindings, context):
    M, C = minimalize(bindings['M']), _C(bindings, context)
    _require_semidualizing(builder, C, context)
    builder.equivalent('G_C-dim M = 0 <=> G_C-dim Tr_C M = 0', _zero(gc_dim(M, C, context.bound)),
                       _zero(gc_dim(transpose_wrt(M, C), C, context.bound)))


@theorem(TheoremId.PROP_GORENSTEIN_LINK, ['M', 'c'],
         summary='S_n(M) <=> H^i_m(λ_{R/c} M) = 0 for dim R/c - n < i < dim R/c')
def _check_gorenstein_link(builder, bindings, context):
    ring = context.ring
    M, C = minimalize(bindings['M']), _C(bindings, context)
    c = _ideal(bindings, 'c', ring)
    _require_cm(builder, ring)
    _require_gc_finite(builder, M, C, context)
    builder.require('c is G_C-Gorenstein', is_gc_gorenstein(c, C, context.bound))
    M_c = _linked_over(builder, M, c, context, 'M')
    linked = lambda_(M_c)
    d = M_c.ring.dim
    for n in context.levels:
        builder.equivalent(f'S_{n}(M) <=> H^i_m(λ_(R/c) M) = 0 for {d - n} < i < {d}', serre_tilde(M_c, n),
                           _lc_vanishing(linked, d - n + 1, d - 1))


@theorem(TheoremId.G2_DIMENSION_SHIFT, ['M', 'I'], optional=('C',),
         summary='G_C-dim_R M = gr I + G_K-dim_{R/I} M for a G_C-perfect ideal I')
def _check_g2(builder, bindings, context):
    ring = context.ring
    M, C = minimalize(bindings['M']), _C(bindings, context)
    I = _ideal(bindings, 'I', ring)
    builder.require('I is G_C-perfect', is_gc_perfect(I, C, context.bound))
    builder.require('I annihilates M', all(annihilator(M).contains((f,)) for f in I.polynomials))
    K, certificate = induced_semidualizing(I, C, context.bound)
    builder.require('K is semidualizing over R/I', certificate.valid)
    M_I = minimalize(change_ring(M, K.ring))
    g = builder.value('gr I', grade_module(quotient_module(ring, I)))
    over_R = builder.value('G_C-dim_R M', gc_dim(M, C, context.bound))
    over_quotient = builder.value('G_K-dim_{R/I} M', gc_dim(M_I, K, context.bound))
    builder.equivalent('G_C-dim_R M < ∞ <=> G_K-dim_{R/I} M < ∞', _finite(over_R), _finite(over_quotient))
    if over_R.is_finite and over_quotient.is_finite:
        builder.equal('G_C-dim_R M = gr I + G_K-dim_{R/I} M', over_R.value, g + over_quotient.value)


def signature(theorem_id):
    entry = CHECKS[theorem_id]
    return entry.required, entry.optional
