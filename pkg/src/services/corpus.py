"""The builtin corpus: deterministic module families and the theorem instances drawn from them."""
import logging
from dataclasses import dataclass
from itertools import combinations

from src.algebra.groebner import ideal_basis, ideal_contains, normal_form
from src.algebra.polynomials import format_polynomial
from src.algebra.syzygies import annihilator, ideal_quotient
from src.errors import InapplicableError, StructuralError
from src.homological.transpose import lambda_, transpose
from src.invariants.semidualizing import canonical_module
from src.modules.minimalize import minimalize
from src.modules.presentation import (ModulePresentation, change_ring, cyclic_module, direct_sum, ideal_module,
                                      residue_field, restrict_scalars, twist)
from src.modules.resolution import syzygy
from src.modules.rings import quotient_ring
from src.services.reports import TheoremId
from src.services.theorems import signature


logger = logging.getLogger(__name__)

SIZES = {
    'small': 2,
    'medium': 3,
    'large': 4,
}
DERIVED_BASES = {
    'small': 4,
    'medium': 6,
    'large': 10,
}
MAX_IDEAL_INSTANCES = 4


@dataclass(frozen=True)
class CorpusEntry:
    """A module with the provenance tag shown in reports."""
    tag: str
    module: ModulePresentation


@dataclass(frozen=True)
class Instance:
    label: str
    bindings: dict


def _ideal_label(polynomials):
    return '(' + ', '.join(format_polynomial(p) for p in polynomials) + ')'


def _base_ideals(ring, cap):
    """Monomial and binomial ideals with generators of degree <= cap, in a fixed order."""
    x = ring.gens
    n = ring.num_variables
    ideals = []
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            ideals.append([x[i] for i in subset])
    for degree in range(2, cap + 1):
        for i in range(n):
            ideals.append([x[i] ** degree])
        ideals.append([x[i] ** degree for i in range(n)])
    for i, j in combinations(range(n), 2):
        ideals.append([x[i] * x[j]])
        ideals.append([x[i] - x[j]])
        ideals.append([x[i] ** 2, x[i] * x[j]])
        if cap >= 2:
            ideals.append([x[i] ** 2 - x[j] ** 2])
    return ideals


def _reduced(polynomials, ring):
    return [p for p in polynomials if normal_form(p, ring.ideal)]


def generate_corpus(ring, size='small'):
    """Cyclic modules R/J and modules derived from them, each tagged with its provenance.

    Parameters:

    ring (GradedRing): base ring

    size (str) - optional: 'small', 'medium' or 'large'; bounds the ideal degrees and the
        number of modules the derived families start from

    Returns:

    list of CorpusEntry: in a fixed order, without repeated modules
    """
    if size not in SIZES:
        raise StructuralError(f'unknown corpus size {size!r}; expected one of {", ".join(SIZES)}')
    entries = []
    seen = set()

    def add(tag, M, dedupe=True):
        key = minimalize(M).key()
        if dedupe and key in seen:
            return
        seen.add(key)
        entries.append(CorpusEntry(tag, M))

    add('R', cyclic_module(ring, []))
    add('k', residue_field(ring))
    one, zero = ring.poly_ring.one, ring.poly_ring.zero
    add('R^2/(e1) (redundant presentation)', ModulePresentation(ring, (0, 0), (0,), ((one, zero),)), dedupe=False)

    cyclic = []
    for polynomials in _base_ideals(ring, SIZES[size]):
        polynomials = _reduced(polynomials, ring)
        if not polynomials:
            continue
        try:
            M = cyclic_module(ring, polynomials)
        except StructuralError:
            continue
        if minimalize(M).is_zero():
            continue
        tag = f'R/{_ideal_label(polynomials)}'
        before = len(entries)
        add(tag, M)
        if len(entries) > before:
            cyclic.append(entries[-1])

    bases = [entries[1]] + cyclic[:DERIVED_BASES[size] - 1]
    for entry in bases:
        add(f'Ω {entry.tag}', syzygy(entry.module, 1))
        add(f'Tr {entry.tag}', transpose(entry.module))
        add(f'λ {entry.tag}', lambda_(entry.module))

    maximal = list(ring.gens)
    add(f'ideal {_ideal_label(maximal)}', ideal_module(ring, maximal))
    if ring.num_variables > 1:
        add(f'ideal {_ideal_label(maximal[:1])}', ideal_module(ring, maximal[:1]))

    for left, right in combinations(cyclic[:3], 2):
        add(f'{left.tag} ⊕ {right.tag}', direct_sum(left.module, right.module))
    for entry in cyclic[:2]:
        add(f'{entry.tag}(-1)', twist(entry.module, -1))
    logger.info(f'Corpus over {ring}: {len(entries)} modules')
    return entries


def linking_ideals(ring):
    """Candidate linking ideals: the squares of the variables, and their sum over quotient rings."""
    squares = [g ** 2 for g in ring.gens]
    ideals = [('(squares)', ideal_basis(squares, ring.poly_ring))]
    if not ring.is_polynomial_ring():
        total = sum(squares, ring.poly_ring.zero)
        ideals.append(('(sum of squares)', ideal_basis([total], ring.poly_ring)))
    return ideals


def _annihilates(ideal, M):
    return ideal_contains(annihilator(M), ideal)


def _linked_image(M, c):
    """λ_{R/c} M viewed over R."""
    ring = M.ring
    target = quotient_ring(ring, list(c.polynomials))
    return restrict_scalars(lambda_(change_ring(M, target)), ring)


def _variable_ideals(ring):
    x = ring.gens
    return [[x[i] for i in subset] for size in range(1, ring.num_variables)
            for subset in combinations(range(ring.num_variables), size)]


def _dualizing_options(ring):
    """C = R, plus ω_R when R is Cohen-Macaulay but not Gorenstein."""
    options = [('R', None)]
    if ring.is_cm and not ring.is_gorenstein:
        options.append(('ω', canonical_module(ring)))
    return options


def instances(theorem_id, corpus):
    """Bindings for one theorem drawn from the corpus, in corpus order.

    Parameters:

    theorem_id (TheoremId): the theorem

    corpus (list of CorpusEntry): modules over a single ring

    Returns:

    list of Instance
    """
    if not corpus:
        return []
    ring = corpus[0].module.ring
    _, optional = signature(theorem_id)
    if theorem_id is TheoremId.COR_THEOREM3:
        return _zero_linked_pairs(ring)
    if theorem_id is TheoremId.THM_PROP_EVEN:
        return _even_linkage(corpus)
    if theorem_id in (TheoremId.COR_COR6, TheoremId.PROP_GORENSTEIN_LINK):
        name = 'a' if theorem_id is TheoremId.COR_COR6 else 'c'
        return _ideal_pairs(corpus, name, linking_ideals(ring))
    if theorem_id is TheoremId.G2_DIMENSION_SHIFT:
        ideals = [(_ideal_label(p), ideal_basis(p, ring.poly_ring)) for p in _variable_ideals(ring)]
        return _ideal_pairs(corpus, 'I', ideals)
    options = _dualizing_options(ring) if 'C' in optional else [('R', None)]
    result = []
    for entry in corpus:
        for label, C in options:
            bindings = {'M': entry.module}
            if C is not None:
                bindings['C'] = C
            result.append(Instance(f'{entry.tag} over {ring}' + (f', C = {label}' if C is not None else ''),
                                   bindings))
    return result


def _ideal_pairs(corpus, name, ideals):
    result = []
    for label, ideal in ideals:
        count = 0
        for entry in corpus:
            if count >= MAX_IDEAL_INSTANCES:
                break
            M = minimalize(entry.module)
            if M.is_zero() or not _annihilates(ideal, M):
                continue
            result.append(Instance(f'{entry.tag} over {M.ring}, {name} = {label}', {'M': M, name: ideal}))
            count += 1
    return result


def _zero_linked_pairs(ring):
    """I, J with I = 0 : J and J = 0 : I, from variable ideals."""
    result = []
    for polynomials in _variable_ideals(ring):
        I = ideal_basis(polynomials, ring.poly_ring)
        J = ideal_quotient(ring.ideal, I)
        if J.is_unit() or not [p for p in J.polynomials if normal_form(p, ring.ideal)]:
            continue
        result.append(Instance(f'I = {_ideal_label(polynomials)}, J = {_ideal_label(J.polynomials)} over {ring}',
                               {'R': ring, 'I': I, 'J': J}))
    return result


def _even_linkage(corpus):
    """M1 = λ_{R/c1} M and M2 = λ_{R/c2} M for two linking ideals annihilating M."""
    ring = corpus[0].module.ring
    ideals = linking_ideals(ring)
    first, second = ideals[0], ideals[-1]
    result = []
    for entry in corpus:
        if len(result) >= MAX_IDEAL_INSTANCES:
            break
        M = minimalize(entry.module)
        if M.is_zero() or not (_annihilates(first[1], M) and _annihilates(second[1], M)):
            continue
        try:
            M1, M2 = _linked_image(M, first[1]), _linked_image(M, second[1])
        except (InapplicableError, StructuralError) as error:
            logger.debug(f'No even-linkage instance from {entry.tag}: {error}')
            continue
        result.append(Instance(f'{entry.tag} over {ring}, c1 = {first[0]}, c2 = {second[0]}',
                               {'M1': M1, 'M': M, 'M2': M2, 'c1': first[1], 'c2': second[1]}))
    return result
