"""Probe primes: the finitely many homogeneous primes at which per-prime quantifiers are sampled."""
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from src.algebra.groebner import ideal_basis, normal_form
from src.algebra.hilbert import hilbert_series
from src.algebra.syzygies import annihilator
from src.homological.functors import ambient_ext_modules
from src.modules.minimalize import minimalize
from src.modules.presentation import cyclic_module


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProbePrime:
    """A homogeneous prime of S containing the ring relations.

    `subset` holds the variable indices of a variable-subset prime; user primes
    have no subset and are trusted to be prime.
    """
    generators: tuple
    label: str
    subset: tuple = None
    trusted: bool = False

    def contains(self, p):
        if not p:
            return True
        if self.subset is not None:
            return all(any(m[i] > 0 for i in self.subset) for m in p.monoms())
        return not normal_form(p, self.basis)

    def contains_ideal(self, ideal):
        return all(self.contains(f) for f in ideal.polynomials)

    @cached_property
    def basis(self):
        return ideal_basis(list(self.generators), self.generators[0].ring)

    def height(self, ring):
        if self.subset is not None:
            return len(self.subset)
        S = ring.ambient
        return ring.num_variables - hilbert_series(cyclic_module(S, list(self.generators))).dimension

    def __str__(self):
        return self.label


def variable_prime(ring, subset):
    gens = ring.gens
    label = '(' + ', '.join(ring.variables[i] for i in subset) + ')' if subset else '(0)'
    return ProbePrime(tuple(gens[i] for i in subset), label, tuple(subset))


def user_prime(ring, generators, label=None):
    logger.warning(f'Probe prime {label or generators} is trusted to be prime')
    return ProbePrime(tuple(generators), label or f'({", ".join(str(g) for g in generators)})', None, True)


def probe_primes(ring, extra=()):
    """Variable-subset primes containing the relations of `ring`, then the extra primes."""
    n = ring.num_variables
    primes = []
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            prime = variable_prime(ring, subset)
            if prime.contains_ideal(ring.ideal):
                primes.append(prime)
    for prime in extra:
        if not prime.contains_ideal(ring.ideal):
            logger.warning(f'Probe prime {prime} does not contain the ring relations; skipped')
            continue
        primes.append(prime)
    return primes


def probe_set_label(primes):
    user = sum(1 for p in primes if p.subset is None)
    label = f'{len(primes) - user} variable-subset primes'
    return f'{label} + {user} user primes' if user else label


def _supported_indices(M, p):
    exts = ambient_ext_modules(minimalize(M))
    return [j for j, E in enumerate(exts) if not E.is_zero() and p.contains_ideal(annihilator(E))]


def depth_at_prime(M, p):
    """depth_{R_p} M_p = ht p - max{j : Ext^j_S(M, S)_p != 0}; +∞ when M_p = 0."""
    supported = _supported_indices(M, p)
    if not supported:
        return math.inf
    return p.height(M.ring) - max(supported)


def dim_at_prime(M, p):
    """dim M_p = ht p - min{j : Ext^j_S(M, S)_p != 0}; -1 when M_p = 0."""
    supported = _supported_indices(M, p)
    if not supported:
        return -1
    return p.height(M.ring) - min(supported)


def in_support(M, p):
    return bool(_supported_indices(M, p))
