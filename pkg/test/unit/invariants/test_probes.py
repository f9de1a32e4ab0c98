import math

from src.invariants import probes


class TestProbePrimes:
    def test_polynomial_ring_probes_every_variable_subset(self, plane):
        primes = probes.probe_primes(plane)

        assert [p.label for p in primes] == ['(0)', '(x)', '(y)', '(x, y)']


    def test_primes_must_contain_the_relations(self, node):
        primes = probes.probe_primes(node)

        assert [p.label for p in primes] == ['(x)', '(y)', '(x, y)']


    def test_user_primes(self, node):
        x, y = node.gens
        inside = probes.user_prime(node, [x], label='(x)*')
        outside = probes.user_prime(node, [x - y])

        primes = probes.probe_primes(node, [inside, outside])

        assert primes[-1] is inside
        assert outside not in primes
        assert inside.height(node) == 1
        assert probes.probe_set_label(primes) == '3 variable-subset primes + 1 user primes'


    def test_label_without_user_primes(self, node):
        assert probes.probe_set_label(probes.probe_primes(node)) == '3 variable-subset primes'


class TestLocalInvariants:
    def test_ring_localized_at_a_branch_is_a_field(self, node, node_modules):
        p = probes.variable_prime(node, (0,))

        assert probes.depth_at_prime(node_modules['R'], p) == 0
        assert probes.dim_at_prime(node_modules['R'], p) == 0


    def test_ring_at_the_maximal_ideal(self, node, node_modules):
        m = probes.variable_prime(node, (0, 1))

        assert probes.depth_at_prime(node_modules['R'], m) == 1
        assert probes.dim_at_prime(node_modules['R'], m) == 1


    def test_module_outside_its_support(self, node, node_modules):
        p = probes.variable_prime(node, (1,))
        M = node_modules['R/(x)']

        assert not probes.in_support(M, p)
        assert probes.depth_at_prime(M, p) == math.inf
        assert probes.dim_at_prime(M, p) == -1
