import os

from src.db import cache
from src.modules import resolution
from src.modules.minimalize import minimalize
from src.modules.presentation import residue_field


def _resolved(ring, length):
    M = minimalize(residue_field(ring))
    return M, resolution.minimal_free_resolution(M, length)


class TestContentKey:
    def test_depends_on_the_ring(self, plane, node):
        assert cache.content_key(residue_field(plane)) != cache.content_key(residue_field(node))


    def test_is_stable(self, node):
        assert cache.content_key(residue_field(node)) == cache.content_key(residue_field(node))


class TestResolutionCache:
    def test_cold_miss(self, node):
        store = cache.ResolutionCache()

        assert store.get(residue_field(node), 2) is None
        assert store.misses == 1


    def test_put_and_get(self, node):
        M, computed = _resolved(node, 3)
        store = cache.ResolutionCache()

        store.put(M, computed)

        assert store.get(M, 2) == computed.truncate(2)
        assert store.get(M, 4) is None
        assert (store.hits, store.misses) == (1, 1)


    def test_shorter_resolutions_do_not_replace_longer_ones(self, node):
        M, computed = _resolved(node, 3)
        store = cache.ResolutionCache()

        store.put(M, computed)
        store.put(M, computed.truncate(1))

        assert store.longest(M) == computed


    def test_resolver_reuses_the_shared_cache(self, node, fresh_resolution_cache):
        _resolved(node, 3)
        _resolved(node, 2)

        assert fresh_resolution_cache.hits >= 1


    def test_on_disk_round_trip(self, node, tmp_path):
        M, computed = _resolved(node, 3)
        writer = cache.ResolutionCache()
        writer.configure(str(tmp_path))
        writer.put(M, computed)

        reader = cache.ResolutionCache(str(tmp_path))

        loaded = reader.get(M, 3)
        assert loaded.betti() == computed.betti()
        assert loaded.length == computed.length
        assert os.listdir(tmp_path) == [f'{cache.content_key(M)}.json']


    def test_corrupt_file_is_ignored(self, node, tmp_path):
        M = minimalize(residue_field(node))
        (tmp_path / f'{cache.content_key(M)}.json').write_text('{not json', encoding='utf-8')

        assert cache.ResolutionCache(str(tmp_path)).get(M, 1) is None


    def test_failed_write_leaves_no_temporary_file(self, mocker, node, tmp_path):
        mocker.patch('src.db.cache.resolution_to_json', side_effect=TypeError('not serializable'))
        M, resolved = _resolved(node, 2)
        store = cache.ResolutionCache(str(tmp_path))

        store.put(M, resolved)

        assert os.listdir(tmp_path) == []
        assert store.get(M, 2) is not None
