"""Three- and four-valued answers for claims that can only be checked up to a bound."""
from dataclasses import dataclass
from enum import Enum


class VerdictKind(Enum):
    TRUE = 'True'
    FALSE = 'False'
    TRUE_UP_TO_BOUND = 'TrueUpToBound'
    UNKNOWN = 'Unknown'


@dataclass(frozen=True)
class BoundedVerdict:
    """True, False(witness), TrueUpToBound(B) or Unknown.

    TrueUpToBound carries the bound B used, or the label of the probe-prime set
    when the claim was sampled at finitely many primes.
    """
    kind: VerdictKind
    witness: object = None
    bound: int = None
    probe_set: str = None
    note: str = None

    @classmethod
    def true(cls, note=None):
        return cls(VerdictKind.TRUE, note=note)

    @classmethod
    def false(cls, witness, note=None):
        return cls(VerdictKind.FALSE, witness=witness, note=note)

    @classmethod
    def up_to(cls, bound=None, probe_set=None, note=None):
        return cls(VerdictKind.TRUE_UP_TO_BOUND, bound=bound, probe_set=probe_set, note=note)

    @classmethod
    def unknown(cls, note=None):
        return cls(VerdictKind.UNKNOWN, note=note)

    @property
    def holds(self):
        return self.kind in (VerdictKind.TRUE, VerdictKind.TRUE_UP_TO_BOUND)

    @property
    def failed(self):
        return self.kind is VerdictKind.FALSE

    @property
    def exact(self):
        return self.kind in (VerdictKind.TRUE, VerdictKind.FALSE)

    def __str__(self):
        if self.kind is VerdictKind.FALSE:
            return f'False (witness: {self.witness})'
        if self.kind is VerdictKind.TRUE_UP_TO_BOUND:
            scope = f'probe set {self.probe_set}' if self.probe_set else f'bound {self.bound}'
            return f'TrueUpToBound ({scope})'
        if self.note:
            return f'{self.kind.value} ({self.note})'
        return self.kind.value


def combine(verdicts):
    """Conjunction: the first failure wins, then Unknown, then the weakest truth."""
    verdicts = list(verdicts)
    for verdict in verdicts:
        if verdict.failed:
            return verdict
    for verdict in verdicts:
        if verdict.kind is VerdictKind.UNKNOWN:
            return verdict
    bounded = [v for v in verdicts if v.kind is VerdictKind.TRUE_UP_TO_BOUND]
    if bounded:
        bounds = [v.bound for v in bounded if v.bound is not None]
        probe_sets = [v.probe_set for v in bounded if v.probe_set]
        return BoundedVerdict.up_to(min(bounds) if bounds else None, probe_sets[0] if probe_sets else None)
    return BoundedVerdict.true()


@dataclass(frozen=True)
class InfinityUpTo:
    """No witness found up to the bound: the quantity is +∞ as far as was checked."""
    bound: int

    def __str__(self):
        return f'InfinityUpTo({self.bound})'


def at_least(value, n):
    """value >= n, where value is an int (or math.inf) or InfinityUpTo(B)."""
    if isinstance(value, InfinityUpTo):
        if n <= value.bound:
            return BoundedVerdict.up_to(value.bound)
        return BoundedVerdict.unknown(f'{n} is beyond the bound {value.bound}')
    if value >= n:
        return BoundedVerdict.true()
    return BoundedVerdict.false(value)


class GcDimKind(Enum):
    ZERO = 'Zero'
    FINITE = 'Finite'
    INFINITE = 'Infinite'
    POSITIVE_UNKNOWN = 'PositiveUnknown'


@dataclass(frozen=True)
class GcDimVerdict:
    kind: GcDimKind
    value: int = None
    bound: int = None
    witness: object = None

    @property
    def is_finite(self):
        return self.kind in (GcDimKind.ZERO, GcDimKind.FINITE)

    @property
    def is_zero(self):
        return self.kind is GcDimKind.ZERO

    def __str__(self):
        if self.kind is GcDimKind.FINITE:
            return f'Finite({self.value}, up to {self.bound})'
        if self.kind is GcDimKind.ZERO:
            return f'Zero (up to {self.bound})'
        if self.kind is GcDimKind.INFINITE:
            return f'Infinite (witness: {self.witness})'
        return f'PositiveUnknown (bound {self.bound})'


@dataclass(frozen=True)
class SemidualizingCertificate:
    """R ≅ Hom(C, C) through the homothety, and Ext^i(C, C) = 0 up to the bound."""
    module: object
    homothety: object
    ext_vanishing: BoundedVerdict

    @property
    def valid(self):
        return self.homothety.is_isomorphic and not self.ext_vanishing.failed

    def __str__(self):
        return f'homothety {self.homothety}; Ext vanishing {self.ext_vanishing}'
