import pytest
from src.errors import StructuralError
from src.modules.minimalize import minimalize
from src.services import corpus
from src.services.reports import TheoremId


class TestGenerateCorpus:
    def test_leading_entries(self, node):
        entries = corpus.generate_corpus(node, 'small')

        assert [e.tag for e in entries[:3]] == ['R', 'k', 'R^2/(e1) (redundant presentation)']


    def test_is_deterministic(self, node):
        first = [e.tag for e in corpus.generate_corpus(node, 'small')]

        assert [e.tag for e in corpus.generate_corpus(node, 'small')] == first


    def test_modules_are_distinct_apart_from_the_redundant_presentation(self, node):
        entries = [e for e in corpus.generate_corpus(node, 'small') if 'redundant' not in e.tag]
        keys = [minimalize(e.module).key() for e in entries]

        assert len(keys) == len(set(keys))


    def test_larger_sizes_grow(self, node):
        assert len(corpus.generate_corpus(node, 'medium')) >= len(corpus.generate_corpus(node, 'small'))


    def test_unknown_size(self, node):
        with pytest.raises(StructuralError):
            corpus.generate_corpus(node, 'huge')


class TestInstances:
    def test_one_instance_per_module(self, node):
        entries = corpus.generate_corpus(node, 'small')

        found = corpus.instances(TheoremId.THM_MS, entries)

        assert len(found) == len(entries)
        assert found[0].label == 'R over QQ[x, y]/(x*y)'
        assert set(found[0].bindings) == {'M'}


    def test_empty_corpus(self):
        assert corpus.instances(TheoremId.THM_MS, []) == []
