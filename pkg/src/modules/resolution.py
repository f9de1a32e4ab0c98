"""Minimal graded free resolutions and Betti tables."""
import logging
from dataclasses import dataclass

from src.algebra.polynomials import vector_degree
from src.algebra.syzygies import ideal_multiples, syzygy_basis
from src.config import active_budget
from src.db.cache import resolution_cache
from src.modules.minimalize import minimal_generators, minimalize
from src.modules.presentation import ModulePresentation


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers β_{i,j}, stored as sorted ((i, j), count) pairs."""
    entries: tuple

    @classmethod
    def from_twists(cls, twists):
        counts = {}
        for i, degrees in enumerate(twists):
            for j in degrees:
                counts[(i, j)] = counts.get((i, j), 0) + 1
        return cls(tuple(sorted(counts.items())))

    def as_dict(self):
        return dict(self.entries)

    def total(self, i):
        return sum(c for (k, _), c in self.entries if k == i)

    @property
    def totals(self):
        if not self.entries:
            return ()
        length = max(i for (i, _), _ in self.entries)
        return tuple(self.total(i) for i in range(length + 1))

    def __str__(self):
        return ', '.join(f'β({i},{j})={c}' for (i, j), c in self.entries)


@dataclass(frozen=True)
class Resolution:
    """F_0 <- F_1 <- ... <- F_L with maps[k] = d_{k+1}: F_{k+1} -> F_k stored by columns.

    `complete` is set when the resolution terminated (F_{L+1} = 0).
    """
    ring: object
    twists: tuple
    maps: tuple
    complete: bool
    minimal: bool = True

    @property
    def length(self):
        return len(self.maps)

    def rank(self, i):
        return len(self.twists[i]) if i < len(self.twists) else 0

    def twists_at(self, i):
        return self.twists[i] if i < len(self.twists) else ()

    def map_at(self, i):
        """d_i as a tuple of columns; empty beyond the computed or terminated range."""
        if 1 <= i <= len(self.maps):
            return self.maps[i - 1]
        return ()

    def betti(self):
        return BettiTable.from_twists(self.twists)

    def truncate(self, length):
        if length >= self.length:
            return self
        return Resolution(self.ring, self.twists[:length + 1], self.maps[:length], False, self.minimal)

    def syzygy_module(self, i):
        """Ω^i M = coker(d_{i+1}) on F_i; needs the resolution computed to length i + 1."""
        if i > self.length and not self.complete:
            raise ValueError(f'syzygy {i} needs a resolution of length {i + 1}')
        twists = self.twists_at(i)
        d = self.map_at(i + 1)
        return ModulePresentation(self.ring, twists, self.twists_at(i + 1) if d else (), d)

    def covers(self, length):
        return self.complete or self.length >= length


def _extend(resolution, length):
    ring = resolution.ring
    poly_ring = ring.poly_ring
    budget = active_budget()
    twists = list(resolution.twists)
    maps = list(resolution.maps)
    complete = resolution.complete
    while not complete and len(maps) < length:
        budget.check_time('resolution')
        step = len(maps) + 1
        source = twists[step - 1]
        target = twists[step - 2] if step >= 2 else None
        if step == 1:
            raise ValueError('resolutions start from a minimal presentation')
        previous = maps[step - 2]
        logger.debug(f'Computing syzygies of d_{step - 1} ({len(target)}x{len(source)})')
        kernel = syzygy_basis(list(previous), poly_ring, len(target),
                              modulo=ideal_multiples(ring.ideal, len(target)),
                              twists=target, source_twists=source, reduce_by=ring.ideal)
        kept = minimal_generators(kernel, source, ring) if kernel else []
        columns = tuple(kernel[k] for k in kept)
        if not columns:
            complete = True
            break
        degrees = tuple(vector_degree(c, source) for c in columns)
        budget.check_rank(len(degrees), f'F_{step}')
        budget.check_degree(max(degrees), f'F_{step}')
        twists.append(degrees)
        maps.append(columns)
    return Resolution(ring, tuple(twists), tuple(maps), complete)


def _start(M):
    if M.num_relations == 0:
        return Resolution(M.ring, (M.gen_twists,), (), True)
    return Resolution(M.ring, (M.gen_twists, M.rel_twists), (M.columns,), False)


def minimal_free_resolution(M, length):
    """Minimal graded free resolution of M up to homological degree `length`.

    Parameters:

    M (ModulePresentation): the module

    length (int): last homological degree to compute

    Returns:

    Resolution: possibly a truncation of an infinite resolution; `complete` tells whether it ended
    """
    if length < 0:
        raise ValueError('resolution length must be non-negative')
    M = minimalize(M)
    cached = resolution_cache.get(M, length)
    if cached is not None:
        return cached
    logger.info(f'Computing resolution up to length {length}')
    start = resolution_cache.longest(M) or _start(M)
    resolution = _extend(start, length) if length >= 1 else start
    resolution_cache.put(M, resolution)
    return resolution.truncate(length)


def betti(M, length):
    return minimal_free_resolution(M, length).betti()


def syzygy(M, i):
    """i-th syzygy in the minimal resolution; Ω^0 M is the minimal presentation of M."""
    if i < 0:
        raise ValueError(f'syzygy index must be non-negative, got {i}')
    if i == 0:
        return minimalize(M)
    return minimal_free_resolution(M, i + 1).syzygy_module(i)
