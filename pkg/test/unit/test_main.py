import json

import pytest
import main


NODE = '''
ring S = poly(QQ, x, y);
ring R = quotient(S, [x*y]);
module M = coker(R, twists=[0], matrix=[[x]]);
module K = coker(R, twists=[0], matrix=[[x, y]]);
'''


@pytest.fixture
def script(tmp_path):
    def write(body):
        path = tmp_path / 'script.lk'
        path.write_text(NODE + body, encoding='utf-8')
        return str(path)
    return write


class TestParseProbePrimes:
    def test_primes_and_generators(self):
        assert main.parse_probe_primes('x,y;x+y,z') == (('x', 'y'), ('x+y', 'z'))


    def test_empty(self):
        assert main.parse_probe_primes(None) == ()
        assert main.parse_probe_primes(' ; ') == ()


class TestCheckSource:
    def test_appends_one_check(self):
        script = main.check_source('THM_MS', NODE, ['M=M'])

        assert len(script.statements) == 5
        assert script.statements[-1].theorem == 'THM_MS'


    def test_malformed_binding(self):
        from src.errors import ScriptSyntaxError

        with pytest.raises(ScriptSyntaxError):
            main.check_source('THM_MS', NODE, ['M'])


class TestMain:
    def test_run(self, script, capsys):
        assert main.main(['run', script('assert depth(K) == 0;\n')]) == 0
        assert capsys.readouterr().out.endswith('exit code 0\n')


    def test_run_with_a_failing_assert(self, script):
        assert main.main(['run', script('assert depth(K) == 1;\n')]) == 1


    def test_json_output(self, script, capsys):
        main.main(['run', script('print depth(M);\n'), '--json', '--bound', '4'])

        data = json.loads(capsys.readouterr().out)
        assert data['config']['bound'] == 4
        assert data['results'] == [{'kind': 'invariant', 'name': 'depth(M)', 'value': 1}]


    def test_parse_error(self, script, capsys):
        assert main.main(['run', script('print depth(M)\n')]) == 2
        assert capsys.readouterr().out.startswith('Parse error: ')


    def test_missing_file(self, tmp_path, capsys):
        assert main.main(['run', str(tmp_path / 'missing.lk')]) == 1
        assert 'Error while reading' in capsys.readouterr().err


    def test_check_command(self, script, capsys):
        assert main.main(['check', 'THM_MS', script(''), '--bind', 'M=M', '--json']) == 0

        data = json.loads(capsys.readouterr().out)
        assert data['results'][0]['report']['verdict'] == 'Verified'


    def test_check_command_with_a_parse_error(self, script, capsys):
        assert main.main(['check', 'THM_MS', script(''), '--bind', 'M=nowhere']) == 2
        assert 'Parse error' in capsys.readouterr().err


    def test_strict_inapplicable(self, script):
        assert main.main(['check', 'PROP_P3', script(''), '--bind', 'M=K', '--strict']) == 4
