"""Hom, tensor, Ext and Tor of graded modules.

Every functor value is built as a subquotient of a free module: the cycles of
a map of free modules (taken modulo a submodule of the target) divided by a
submodule of boundaries. Positions of Hom(F, G_0) are indexed a·s_0 + k for the
basis map e_a -> g_k; positions of F ⊗ G_0 are indexed the same way for e_a ⊗ g_k.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

from src.algebra.groebner import buchberger, normal_form
from src.algebra.polynomials import unit_vector, vector_degree
from src.algebra.syzygies import ideal_multiples, syzygy_basis
from src.errors import StructuralError
from src.modules.minimalize import minimalize, minimalize_tracking
from src.modules.presentation import ModulePresentation, as_ambient_module, free_module, zero_module
from src.modules.resolution import minimal_free_resolution


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Subquotient:
    """(span of generators + relations) / relations inside a free module, with a
    minimal presentation whose generators are `generators[kept[s]]`."""
    ring: object
    twists: tuple
    generators: tuple
    relations: tuple
    presentation: ModulePresentation
    kept: tuple

    @property
    def minimal_generators(self):
        return tuple(self.generators[s] for s in self.kept)

    @cached_property
    def span_basis(self):
        vectors = list(self.generators) + list(self.relations) + ideal_multiples(self.ring.ideal, len(self.twists))
        return buchberger(vectors, self.ring.poly_ring, len(self.twists), twists=self.twists)

    @cached_property
    def relation_basis(self):
        vectors = list(self.relations) + ideal_multiples(self.ring.ideal, len(self.twists))
        return buchberger(vectors, self.ring.poly_ring, len(self.twists), twists=self.twists)

    def contains(self, vector):
        return self.span_basis.contains(tuple(vector))

    def is_relation(self, vector):
        return self.relation_basis.contains(tuple(vector))


def _reduce_vector(vector, ideal):
    return tuple(normal_form(p, ideal) for p in vector)


def subquotient(ring, twists, generators, relations):
    """Presentation of the module generated by `generators` in F / <relations, I·F>.

    Parameters:

    ring (GradedRing): base ring R = S/I

    twists (list of int): degrees of the basis of F

    generators (list of tuple of PolyElement): homogeneous vectors of F

    relations (list of tuple of PolyElement): homogeneous vectors of F

    Returns:

    Subquotient: the generators, relations and a minimal presentation
    """
    twists = tuple(twists)
    rank = len(twists)
    gens = [v for v in (_reduce_vector(g, ring.ideal) for g in generators) if any(v)]
    rels = [tuple(v) for v in relations if any(v)]
    if not gens:
        return Subquotient(ring, twists, (), tuple(rels), zero_module(ring), ())
    gen_twists = tuple(vector_degree(g, twists) for g in gens)
    syzygies = syzygy_basis(gens + rels, ring.poly_ring, rank, modulo=ideal_multiples(ring.ideal, rank),
                            twists=twists)
    columns = []
    for u in syzygies:
        column = _reduce_vector(u[:len(gens)], ring.ideal)
        if any(column):
            columns.append(column)
    rel_twists = tuple(vector_degree(c, gen_twists) for c in columns)
    presentation = ModulePresentation(ring, gen_twists, rel_twists, tuple(columns))
    minimal, kept = minimalize_tracking(presentation)
    return Subquotient(ring, twists, tuple(gens), tuple(rels), minimal, kept)


def homology(ring, twists, outgoing, target_twists, target_modulo, incoming):
    """{x in F : outgoing(x) in <target_modulo, I·G>} / <incoming> for F free with `twists`.

    `outgoing` lists the images of the basis of F in the free module G with
    `target_twists`; None stands for the zero map.
    """
    rank = len(twists)
    poly_ring = ring.poly_ring
    if rank == 0:
        return subquotient(ring, twists, [], [])
    if outgoing is None or not target_twists:
        cycles = [unit_vector(poly_ring, rank, a) for a in range(rank)]
    else:
        modulo = list(target_modulo) + ideal_multiples(ring.ideal, len(target_twists))
        cycles = syzygy_basis(list(outgoing), poly_ring, len(target_twists), modulo=modulo,
                              twists=target_twists, source_twists=twists, reduce_by=ring.ideal)
    return subquotient(ring, twists, cycles, incoming)


def block_copies(columns, blocks, block_size, total_rank, zero):
    result = []
    for block in range(blocks):
        for column in columns:
            vector = [zero] * total_rank
            vector[block * block_size:(block + 1) * block_size] = column
            result.append(tuple(vector))
    return result


def hom_cohomology(F_twists, d_in, in_twists, d_out, out_twists, N):
    """Cohomology at Hom(F_i, N) of Hom(F_{i-1}, N) -> Hom(F_i, N) -> Hom(F_{i+1}, N).

    d_in (columns indexed by F_i, length rank F_{i-1}) and d_out (columns indexed
    by F_{i+1}, length rank F_i) are the differentials; d_in may be None.
    """
    ring = N.ring
    zero = ring.poly_ring.zero
    s0 = N.num_generators
    g = N.gen_twists
    r = len(F_twists)
    twists = tuple(g[k] - F_twists[a] for a in range(r) for k in range(s0))
    rank = r * s0

    outgoing = None
    target_twists = ()
    target_modulo = []
    if d_out:
        r_out = len(out_twists)
        target_twists = tuple(g[k] - out_twists[j] for j in range(r_out) for k in range(s0))
        outgoing = []
        for a in range(r):
            for k in range(s0):
                vector = [zero] * (r_out * s0)
                for j, column in enumerate(d_out):
                    vector[j * s0 + k] = column[a]
                outgoing.append(tuple(vector))
        target_modulo = block_copies(N.columns, r_out, s0, r_out * s0, zero)

    incoming = block_copies(N.columns, r, s0, rank, zero)
    if d_in:
        for l in range(len(in_twists)):
            for k in range(s0):
                vector = [zero] * rank
                for a, column in enumerate(d_in):
                    vector[a * s0 + k] = column[l]
                incoming.append(tuple(vector))
    return homology(ring, twists, outgoing, target_twists, target_modulo, incoming)


def hom_subquotient(M, N):
    """Hom(M, N) with explicit coordinates in Hom(F_0(M), G_0(N))."""
    if M.ring != N.ring:
        raise StructuralError('Hom between modules over different rings')
    return hom_cohomology(M.gen_twists, None, (), M.columns, M.rel_twists, N)


def hom_module(M, N):
    """Presentation of Hom_R(M, N), as the kernel of Hom(P_0, N) -> Hom(P_1, N)."""
    return hom_subquotient(minimalize(M), N).presentation


def dual(M):
    """M* = Hom_R(M, R)."""
    return hom_module(M, free_module(M.ring, [0]))


def ext(M, N, i):
    """Ext^i_R(M, N) from the minimal resolution of M to length i + 1.

    Parameters:

    M, N (ModulePresentation): modules over the same ring

    i (int): non-negative index

    Returns:

    ModulePresentation: minimal presentation of the cohomology
    """
    if M.ring != N.ring:
        raise StructuralError('Ext between modules over different rings')
    if i < 0:
        raise ValueError('Ext index must be non-negative')
    resolution = minimal_free_resolution(M, i + 1)
    return ext_from_resolution(resolution, N, i)


def ext_from_resolution(resolution, N, i):
    F_twists = resolution.twists_at(i)
    if not F_twists:
        return zero_module(N.ring)
    d_in = resolution.map_at(i) if i >= 1 else None
    return hom_cohomology(F_twists, d_in, resolution.twists_at(i - 1) if i >= 1 else (),
                          resolution.map_at(i + 1), resolution.twists_at(i + 1), N).presentation


def tensor_presentation(M, N):
    """coker[A ⊗ 1 | 1 ⊗ B] on F_0 ⊗ G_0, without minimalization."""
    if M.ring != N.ring:
        raise StructuralError('tensor product of modules over different rings')
    zero = M.poly_ring.zero
    r0, s0 = M.num_generators, N.num_generators
    twists = tuple(M.gen_twists[i] + N.gen_twists[k] for i in range(r0) for k in range(s0))
    columns, rel_twists = [], []
    for j, column in enumerate(M.columns):
        for k in range(s0):
            vector = [zero] * (r0 * s0)
            for i in range(r0):
                vector[i * s0 + k] = column[i]
            columns.append(tuple(vector))
            rel_twists.append(M.rel_twists[j] + N.gen_twists[k])
    for i in range(r0):
        for q, column in enumerate(N.columns):
            vector = [zero] * (r0 * s0)
            vector[i * s0:(i + 1) * s0] = column
            columns.append(tuple(vector))
            rel_twists.append(M.gen_twists[i] + N.rel_twists[q])
    return ModulePresentation(M.ring, twists, tuple(rel_twists), tuple(columns))


def tensor(M, N):
    return minimalize(tensor_presentation(minimalize(M), minimalize(N)))


def tor(M, N, i):
    """Tor_i^R(M, N) as the homology of F_• ⊗ N at spot i."""
    if M.ring != N.ring:
        raise StructuralError('Tor between modules over different rings')
    if i < 0:
        raise ValueError('Tor index must be non-negative')
    if i == 0:
        return tensor(M, N)
    N = minimalize(N)
    resolution = minimal_free_resolution(M, i + 1)
    ring = N.ring
    zero = ring.poly_ring.zero
    s0 = N.num_generators
    g = N.gen_twists
    F_twists = resolution.twists_at(i)
    if not F_twists or s0 == 0:
        return zero_module(ring)
    previous = resolution.twists_at(i - 1)
    r, r_prev = len(F_twists), len(previous)
    twists = tuple(F_twists[a] + g[k] for a in range(r) for k in range(s0))
    target_twists = tuple(previous[l] + g[k] for l in range(r_prev) for k in range(s0))
    d_i = resolution.map_at(i)
    outgoing = []
    for a in range(r):
        for k in range(s0):
            vector = [zero] * (r_prev * s0)
            for l in range(r_prev):
                vector[l * s0 + k] = d_i[a][l]
            outgoing.append(tuple(vector))
    target_modulo = block_copies(N.columns, r_prev, s0, r_prev * s0, zero)
    incoming = block_copies(N.columns, r, s0, r * s0, zero)
    for column in resolution.map_at(i + 1):
        for k in range(s0):
            vector = [zero] * (r * s0)
            for a in range(r):
                vector[a * s0 + k] = column[a]
            incoming.append(tuple(vector))
    return homology(ring, twists, outgoing, target_twists, target_modulo, incoming).presentation


@lru_cache(maxsize=512)
def ambient_ext_modules(M):
    """Ext^j_S(M, S) for j = 0..n, M viewed over the ambient polynomial ring S."""
    ambient_module = as_ambient_module(M)
    n = M.ring.num_variables
    S = ambient_module.ring
    resolution = minimal_free_resolution(ambient_module, n + 1)
    target = free_module(S, [0])
    logger.debug(f'Ambient resolution has Betti totals {resolution.betti().totals}')
    return tuple(ext_from_resolution(resolution, target, j) for j in range(n + 1))


def ext_to_ambient(M, i):
    """Ext^i_S(M, S) as a graded S-module; zero outside 0..n."""
    if i < 0 or i > M.ring.num_variables:
        return zero_module(M.ring.ambient)
    return ambient_ext_modules(M)[i]
