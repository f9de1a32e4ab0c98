import pytest
from src.config import RunConfig
from src.db.cache import resolution_cache
from src.homological import transpose
from src.modules.presentation import free_module
from src.services import suite
from src.services.corpus import CorpusEntry, generate_corpus
from src.services.reports import TheoremId
from src.utils.serialization import dumps, to_jsonable


@pytest.fixture
def builtin_corpus(plane, node, three_lines):
    """The small corpus over QQ[x, y], the node and the three coordinate lines."""
    return [entry for ring in (plane, node, three_lines) for entry in generate_corpus(ring, 'small')]


class TestRunSuite:
    def test_empty_corpus(self, config):
        result = suite.run_suite([], [TheoremId.THM_MS], config)

        assert result.reports == []
        assert result.summary.total == 0
        assert result.summary.passed


    def test_single_entry(self, node, config):
        entries = [CorpusEntry('R', free_module(node, [0]))]

        result = suite.run_suite(entries, [TheoremId.THM_MS], config)

        assert result.summary.total == 1
        assert result.summary.verified == 1
        assert result.summary.passed
        assert result.reports[0].instance == 'R over QQ[x, y]/(x*y)'


    def test_summary_keys(self, config):
        summary = suite.run_suite([], [TheoremId.THM_MS], config).summary

        assert list(summary.to_dict()) == ['total', 'verified', 'refuted', 'inapplicable', 'partially_verified',
                                           'counterexamples', 'passed']


    def test_progress_bar(self, mocker, node, config):
        spy = mocker.patch('src.services.suite.update_progress_bar')
        entries = [CorpusEntry('R', free_module(node, [0]))]

        suite.run_suite(entries, [TheoremId.THM_MS], config, show_progress=True)

        assert spy.call_count == 2
        spy.assert_called_with(1, 1, prefix=f'{"done":>22}')


class TestBuiltinCorpus:
    def test_corpus_size(self, builtin_corpus):
        assert len(builtin_corpus) >= 50


    def test_no_counterexamples(self, builtin_corpus):
        result = suite.run_suite(builtin_corpus, config=RunConfig(bound=3))

        assert result.summary.counterexamples == 0
        assert result.summary.passed
        assert {report.id for report in result.reports} == set(TheoremId)


    def test_linkage_criteria_agree(self, builtin_corpus, config):
        result = suite.run_suite(builtin_corpus, [TheoremId.THM_MS], config)

        assert result.summary.total == len(builtin_corpus)
        assert result.summary.refuted == 0


    def test_skipping_minimalization_is_detected(self, mocker, builtin_corpus, config):
        mocker.patch.dict(transpose.FAULTS, {'skip_minimalization': True})

        result = suite.run_suite(builtin_corpus, [TheoremId.THM_MS], config)

        assert result.summary.counterexamples >= 1
        assert not result.summary.passed


    def test_reruns_are_identical_and_hit_the_cache(self, node, config):
        entries = generate_corpus(node, 'small')
        ids = [TheoremId.THM_MS, TheoremId.G3_AB_FORMULA]

        first = suite.run_suite(entries, ids, config)
        misses = resolution_cache.misses
        second = suite.run_suite(entries, ids, config)

        first_json = dumps(to_jsonable([r.to_dict() for r in first.reports]))
        assert dumps(to_jsonable([r.to_dict() for r in second.reports])) == first_json
        assert resolution_cache.hits > 0
        assert resolution_cache.misses == misses
