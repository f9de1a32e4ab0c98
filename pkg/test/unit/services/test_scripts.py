import json

import pytest
from src.config import RunConfig
from src.invariants.verdicts import InfinityUpTo, VerdictKind
from src.parsers.script_parser import FUNCTIONS
from src.services import scripts


NODE = '''
ring S = poly(QQ, x, y);
ring R = quotient(S, [x*y]);
module M = coker(R, twists=[0], matrix=[[x]]);
module Y = coker(R, twists=[0], matrix=[[y]]);
module K = coker(R, twists=[0], matrix=[[x, y]]);
let N = lambda(M);
'''

RESIDUE_OF_SPACE = '''
ring S = poly(QQ, x, y, z);
module K = coker(S, twists=[0], matrix=[[x, y, z]]);
print betti(K, 3);
'''


@pytest.fixture
def run():
    def execute(body, **options):
        return scripts.execute(NODE + body, RunConfig(bound=3, **options))
    return execute


class TestExecute:
    def test_passing_asserts(self, run):
        result = run('assert is_horizontally_linked(M);\nassert iso(N, Y);\nassert depth(K) == 0;\n')

        assert result.exit_code == scripts.EXIT_OK
        assert [r.value['passed'] for r in result.results] == [True, True, True]


    def test_failing_assert(self, run):
        result = run('assert depth(K) == 1;\n')

        assert result.exit_code == scripts.EXIT_FAILED
        assert result.results[0].name == 'depth(K) == 1'
        assert result.results[0].value == {'passed': False, 'detail': 'depth = 0'}


    def test_failing_predicate(self, run):
        result = run('assert is_horizontally_linked(K);\n')

        assert result.exit_code == scripts.EXIT_FAILED
        assert result.results[0].name == 'is_horizontally_linked(K)'


    def test_declarations(self, run):
        result = run('')

        assert [d['name'] for d in result.declarations] == ['S', 'R', 'M', 'Y', 'K', 'N']
        assert result.declarations[0] == {'kind': 'ring', 'name': 'S', 'value': {
            'ring': 'QQ[x, y]', 'dim': 2, 'depth': 2, 'cohen_macaulay': True, 'gorenstein': True}}
        assert result.declarations[1]['value']['gorenstein']
        assert result.declarations[5]['expr'] == 'lambda(M)'


    def test_prints(self, run):
        result = run('print R;\nprint depth(K);\nprint is_cm(M);\nprint M;\n')

        assert [r.kind for r in result.results] == ['ring', 'invariant', 'predicate', 'module']
        assert result.results[0].value == 'QQ[x, y]/(x*y)'
        assert result.results[1].value == 0
        assert result.results[2].value['holds']


    def test_parse_error(self):
        result = scripts.execute('ring S = poly(QQ, x, y)\nring R = quotient(S, [x*y]);')

        assert result.exit_code == scripts.EXIT_PARSE_ERROR
        assert 'Line 2' in result.parse_error
        assert result.results == []


    def test_check(self, run):
        result = run('check THM_MS(M = M);\n')

        assert result.exit_code == scripts.EXIT_OK
        assert result.results[0].kind == 'check'
        assert result.results[0].name == 'THM_MS(M = M)'
        assert result.results[0].report['verdict'] == 'Verified'


    def test_inapplicable_check(self, run):
        body = 'check PROP_P3(M = K);\n'

        assert run(body).exit_code == scripts.EXIT_OK
        assert run(body, strict=True).exit_code == scripts.EXIT_INAPPLICABLE


    def test_budget_exceeded(self):
        result = scripts.execute(RESIDUE_OF_SPACE, RunConfig(max_rank=1))

        assert result.exit_code == scripts.EXIT_BUDGET_EXCEEDED
        assert result.results[-1].kind == 'error'


    def test_runtime_error_is_recorded(self, run):
        result = run('print syzygy(K, -1);\nprint depth(K);\n')

        assert result.exit_code == scripts.EXIT_FAILED
        assert [r.kind for r in result.results] == ['error', 'invariant']


    def test_linkage_by_an_ideal(self, run):
        result = run('assert linked_by_ideal(S, [x], [y], [x*y]);\nassert linked_by_ideal(S, [x], [y], [x]);\n')

        assert result.results[0].value['passed']
        assert result.results[1].kind == 'error'
        assert result.exit_code == scripts.EXIT_FAILED


    def test_fail_fast(self, run):
        result = run('assert depth(K) == 1;\nprint depth(K);\n', fail_fast=True)

        assert len(result.results) == 1


    def test_field_override(self):
        result = scripts.execute('ring S = poly(QQ, x);\n', RunConfig(field='GF(7)'))

        assert result.declarations[0]['value']['ring'] == 'GF(7)[x]'


class TestCompare:
    def test_integers(self):
        assert scripts.compare(2, '>=', 1).kind is VerdictKind.TRUE
        assert scripts.compare(2, '<', 1).failed


    def test_infinity(self):
        assert scripts.compare(float('inf'), '>', 10).holds


    def test_beyond_the_bound(self):
        assert scripts.compare(InfinityUpTo(5), '>', 3).kind is VerdictKind.TRUE_UP_TO_BOUND
        assert scripts.compare(InfinityUpTo(5), '==', 3).failed
        assert scripts.compare(InfinityUpTo(5), '==', 7).kind is VerdictKind.UNKNOWN


    def test_non_numbers(self):
        from src.errors import StructuralError

        with pytest.raises(StructuralError):
            scripts.compare('x', '==', 1)


class TestFunctionTables:
    def test_every_function_is_implemented(self):
        implemented = {**scripts.CONSTRUCTORS, **scripts.PREDICATES, **scripts.NUMBERS, **scripts.VALUES}

        assert set(implemented) == set(FUNCTIONS)


class TestReports:
    def test_json_is_deterministic(self, run):
        body = 'assert depth(K) == 0;\nprint betti(M, 2);\n'

        first, second = scripts.report_json(run(body)), scripts.report_json(run(body))

        assert first == second
        assert list(json.loads(first)) == ['version', 'config', 'declarations', 'results']


    def test_json_config(self, run):
        data = json.loads(scripts.report_json(run('')))

        assert data['config']['bound'] == 3
        assert list(data['config']) == ['field', 'bound', 'probe_primes', 'max_degree', 'max_rank', 'seed',
                                        'strict', 'fail_fast']


    def test_json_parse_error(self):
        data = json.loads(scripts.report_json(scripts.execute('ring S = ;')))

        assert 'parse_error' in data


    def test_text(self, run):
        text = scripts.report_text(run('assert depth(K) == 1;\n'))

        assert 'ring S: QQ[x, y]' in text
        assert 'assert depth(K) == 1:' in text
        assert text.endswith('exit code 1\n')


    def test_text_parse_error(self):
        assert scripts.report_text(scripts.execute('ring S = ;')).startswith('Parse error: ')
