"""Reduced Gröbner bases of submodules of graded free modules S^r.

The engine works on flat term dicts ``{(position, monomial): coefficient}``.
Ideals are the rank-1 case. The module order is term-over-position refining the
ring order, lower position index winning ties; an optional ``split`` puts every
position below it above every position at or after it (block elimination, used
for syzygies).
"""
import logging
from dataclasses import dataclass, field

from sympy.polys.monomials import monomial_div, monomial_lcm, monomial_mul
from sympy.polys.orderings import lex

from src.algebra.field import coefficient_parts
from src.algebra.polynomials import MonomialOrder, flatten, total_degree, unflatten
from src.config import active_budget
from src.errors import StructuralError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModuleOrder:
    ring_order: MonomialOrder = MonomialOrder.GREVLEX
    split: int = 0

    def key(self, term):
        position, monomial = term
        return (position < self.split, self.ring_order.key(monomial), -position)


def module_order(poly_ring, split=0):
    """Term-over-position order refining the monomial order of `poly_ring`."""
    ring_order = MonomialOrder.LEX if poly_ring.order == lex else MonomialOrder.GREVLEX
    return ModuleOrder(ring_order, split)


class _Entry:
    __slots__ = ('terms', 'position', 'monomial', 'coefficient')

    def __init__(self, terms, lead):
        self.terms = terms
        self.position, self.monomial = lead
        self.coefficient = terms[lead]


def leading_term(terms, order):
    return max(terms, key=order.key)


def _make_monic(terms, lead, domain):
    c = terms[lead]
    if c == domain.one:
        return terms
    return {t: domain.quo(v, c) for t, v in terms.items()}


def _subtract_multiple(target, terms, shift, factor):
    for (position, monomial), c in terms.items():
        t = (position, monomial_mul(monomial, shift))
        value = target.get(t)
        value = -factor * c if value is None else value - factor * c
        if value:
            target[t] = value
        else:
            target.pop(t, None)


def reduce_terms(terms, entries, order, domain):
    """Full reduction of a flat vector by a list of entries; returns the remainder."""
    work = dict(terms)
    remainder = {}
    while work:
        lead = leading_term(work, order)
        position, monomial = lead
        c = work[lead]
        for entry in entries:
            if entry.position != position:
                continue
            shift = monomial_div(monomial, entry.monomial)
            if shift is None:
                continue
            _subtract_multiple(work, entry.terms, shift, domain.quo(c, entry.coefficient))
            break
        else:
            remainder[lead] = c
            del work[lead]
    return remainder


def _term_degree(term, twists):
    position, monomial = term
    return total_degree(monomial) + (twists[position] if twists else 0)


def _s_vector(a, b, lcm, domain):
    result = {}
    for (position, monomial), c in a.terms.items():
        result[(position, monomial_mul(monomial, monomial_div(lcm, a.monomial)))] = c
    _subtract_multiple(result, b.terms, monomial_div(lcm, b.monomial), domain.one)
    return result


def _buchberger_entries(vectors, order, domain, rank, twists):
    budget = active_budget()
    entries = []
    pending = set()

    def add(terms):
        lead = leading_term(terms, order)
        entry = _Entry(_make_monic(terms, lead, domain), lead)
        index = len(entries)
        for other_index, other in enumerate(entries):
            if other.position == entry.position:
                pending.add((other_index, index))
        entries.append(entry)

    for terms in vectors:
        remainder = reduce_terms(terms, entries, order, domain)
        if remainder:
            add(remainder)

    def pair_key(pair):
        i, j = pair
        lcm = monomial_lcm(entries[i].monomial, entries[j].monomial)
        return (_term_degree((entries[i].position, lcm), twists), j, i)

    while pending:
        pair = min(pending, key=pair_key)
        pending.discard(pair)
        i, j = pair
        a, b = entries[i], entries[j]
        lcm = monomial_lcm(a.monomial, b.monomial)
        degree = _term_degree((a.position, lcm), twists)
        budget.check_degree(degree, 'Gröbner basis')
        budget.check_time('Gröbner basis')
        if rank == 1 and monomial_mul(a.monomial, b.monomial) == lcm:
            continue
        if _chain_criterion(i, j, lcm, entries, pending):
            continue
        remainder = reduce_terms(_s_vector(a, b, lcm, domain), entries, order, domain)
        if remainder:
            add(remainder)
    return entries


def _chain_criterion(i, j, lcm, entries, pending):
    position = entries[i].position
    for k, entry in enumerate(entries):
        if k in (i, j) or entry.position != position:
            continue
        if monomial_div(lcm, entry.monomial) is None:
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _interreduce(entries, order, domain):
    minimal = []
    for index, entry in enumerate(entries):
        redundant = False
        for other_index, other in enumerate(entries):
            if other_index == index or other.position != entry.position:
                continue
            if monomial_div(entry.monomial, other.monomial) is None:
                continue
            if other.monomial != entry.monomial or other_index < index:
                redundant = True
                break
        if not redundant:
            minimal.append(entry)
    reduced = []
    for entry in minimal:
        lead = (entry.position, entry.monomial)
        tail = {t: c for t, c in entry.terms.items() if t != lead}
        terms = reduce_terms(tail, minimal, order, domain)
        terms[lead] = entry.coefficient
        reduced.append(_Entry(terms, lead))
    reduced.sort(key=lambda e: order.key((e.position, e.monomial)))
    return reduced


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis of a submodule of S^rank (an ideal when rank is 1).

    Entries are flat term dicts, sorted increasingly by leading term.
    """
    poly_ring: object
    rank: int
    order: ModuleOrder
    entries: tuple = field(default=(), compare=False)
    twists: tuple = None
    reduced: bool = True

    @property
    def domain(self):
        return self.poly_ring.domain

    @property
    def generators(self):
        """The basis elements as tuples of polynomials."""
        return tuple(unflatten(self.poly_ring, e.terms, self.rank) for e in self.entries)

    @property
    def polynomials(self):
        """The basis of an ideal as polynomials."""
        if self.rank != 1:
            raise StructuralError('only an ideal basis has polynomial generators')
        return tuple(vector[0] for vector in self.generators)

    @property
    def leading_terms(self):
        return tuple((e.position, e.monomial) for e in self.entries)

    def is_zero(self):
        return len(self.entries) == 0

    def is_unit(self):
        """True when the basis generates the whole free module."""
        units = {e.position for e in self.entries if total_degree(e.monomial) == 0}
        return len(units) == self.rank

    def reduce_terms(self, terms):
        return reduce_terms(terms, self.entries, self.order, self.domain)

    def normal_form(self, vector):
        return normal_form(vector, self)

    def contains(self, vector):
        return not self.reduce_terms(flatten(_as_vector(vector)))

    def key(self):
        """Canonical, hashable content of the basis."""
        return tuple(tuple(sorted((t, coefficient_parts(self.domain, c)) for t, c in e.terms.items()))
                     for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.rank == other.rank and self.poly_ring == other.poly_ring and self.key() == other.key()

    def __hash__(self):
        return hash((self.rank, self.key()))


def _as_vector(f):
    if isinstance(f, tuple):
        return f
    return (f,)


def normal_form(f, G):
    """Unique remainder of a vector (or a polynomial, for ideals) modulo G.

    Parameters:

    f (tuple of PolyElement | PolyElement): element of S^rank

    G (GroebnerBasis): reduced basis of the submodule

    Returns:

    tuple of PolyElement (or PolyElement when a polynomial was given): the remainder
    """
    vector = _as_vector(f)
    if len(vector) != G.rank:
        raise StructuralError(f'vector of rank {len(vector)} reduced by a basis of rank {G.rank}')
    remainder = unflatten(G.poly_ring, G.reduce_terms(flatten(vector)), G.rank)
    return remainder if isinstance(f, tuple) else remainder[0]


def buchberger(generators, poly_ring, rank=1, order=None, twists=None):
    """Reduced Gröbner basis of the submodule generated by `generators`.

    Parameters:

    generators (list of tuple of PolyElement | list of PolyElement): generators in S^rank

    poly_ring (PolyRing): the ambient polynomial ring S

    rank (int) - optional: rank of the ambient free module

    order (ModuleOrder) - optional: term order, TOP(grevlex) by default

    twists (list of int) - optional: degrees of the basis vectors, used by pair selection

    Returns:

    GroebnerBasis: the reduced basis
    """
    order = order or module_order(poly_ring)
    vectors = []
    for g in generators:
        vector = _as_vector(g)
        if len(vector) != rank:
            raise StructuralError(f'generator of rank {len(vector)} in a free module of rank {rank}')
        terms = flatten(vector)
        if terms:
            vectors.append(terms)
    return basis_from_terms(vectors, poly_ring, rank, order, twists)


def basis_from_terms(vectors, poly_ring, rank, order, twists=None):
    logger.debug(f'Computing Gröbner basis of {len(vectors)} vectors in rank {rank}')
    domain = poly_ring.domain
    entries = _buchberger_entries(vectors, order, domain, rank, twists)
    return GroebnerBasis(poly_ring, rank, order, tuple(_interreduce(entries, order, domain)),
                         tuple(twists) if twists is not None else None)


def ideal_basis(polynomials, poly_ring, order=None):
    return buchberger(list(polynomials), poly_ring, 1, order)


def reduce_polynomial(p, ideal):
    """Normal form of a ring element modulo the relations of a quotient ring."""
    return normal_form(p, ideal)


def ideal_product(I, J):
    products = [f * g for f in I.polynomials for g in J.polynomials]
    return ideal_basis(products, I.poly_ring, I.order)


def ideal_sum(I, J):
    return ideal_basis(list(I.polynomials) + list(J.polynomials), I.poly_ring, I.order)


def ideal_contains(I, J):
    """True when J ⊆ I."""
    return all(not normal_form(g, I) for g in J.polynomials)
