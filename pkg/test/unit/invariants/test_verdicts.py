import math

from src.invariants import verdicts
from src.invariants.verdicts import BoundedVerdict, VerdictKind


class TestBoundedVerdict:
    def test_properties(self):
        assert BoundedVerdict.true().holds and BoundedVerdict.true().exact
        assert BoundedVerdict.up_to(4).holds and not BoundedVerdict.up_to(4).exact
        assert BoundedVerdict.false(2).failed and BoundedVerdict.false(2).exact
        unknown = BoundedVerdict.unknown()
        assert not unknown.holds and not unknown.failed and not unknown.exact


    def test_str(self):
        assert str(BoundedVerdict.false(3)) == 'False (witness: 3)'
        assert str(BoundedVerdict.up_to(6)) == 'TrueUpToBound (bound 6)'
        assert str(BoundedVerdict.up_to(probe_set='4 variable-subset primes')) == \
            'TrueUpToBound (probe set 4 variable-subset primes)'
        assert str(BoundedVerdict.unknown('too deep')) == 'Unknown (too deep)'


class TestCombine:
    def test_first_failure_wins(self):
        result = verdicts.combine([BoundedVerdict.true(), BoundedVerdict.false('a'), BoundedVerdict.false('b')])

        assert result.witness == 'a'


    def test_unknown_beats_bounded_truth(self):
        result = verdicts.combine([BoundedVerdict.up_to(3), BoundedVerdict.unknown()])

        assert result.kind is VerdictKind.UNKNOWN


    def test_weakest_bound(self):
        result = verdicts.combine([BoundedVerdict.true(), BoundedVerdict.up_to(5), BoundedVerdict.up_to(3)])

        assert result == BoundedVerdict.up_to(3)


    def test_all_exact(self):
        assert verdicts.combine([BoundedVerdict.true(), BoundedVerdict.true()]).kind is VerdictKind.TRUE
        assert verdicts.combine([]).kind is VerdictKind.TRUE


class TestAtLeast:
    def test_integers(self):
        assert verdicts.at_least(3, 2).kind is VerdictKind.TRUE
        assert verdicts.at_least(1, 2) == BoundedVerdict.false(1)
        assert verdicts.at_least(math.inf, 10).kind is VerdictKind.TRUE


    def test_infinity_up_to_a_bound(self):
        assert verdicts.at_least(verdicts.InfinityUpTo(4), 3) == BoundedVerdict.up_to(4)
        assert verdicts.at_least(verdicts.InfinityUpTo(2), 3).kind is VerdictKind.UNKNOWN


class TestGcDimVerdict:
    def test_str_and_finiteness(self):
        finite = verdicts.GcDimVerdict(verdicts.GcDimKind.FINITE, 1, 6)
        infinite = verdicts.GcDimVerdict(verdicts.GcDimKind.INFINITE, witness='syzygy 1')

        assert finite.is_finite and not finite.is_zero
        assert str(finite) == 'Finite(1, up to 6)'
        assert not infinite.is_finite
        assert str(infinite) == 'Infinite (witness: syzygy 1)'
        assert str(verdicts.InfinityUpTo(5)) == 'InfinityUpTo(5)'
