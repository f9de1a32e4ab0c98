"""Content-addressed store of minimal free resolutions, in memory and optionally on disk."""
import hashlib
import json
import logging
import os
import tempfile

from src.utils.serialization import resolution_from_json, resolution_to_json


logger = logging.getLogger(__name__)


def content_key(M):
    """sha256 of the canonical content of a minimal presentation (ring relations included)."""
    return hashlib.sha256(repr(M.key()).encode('utf-8')).hexdigest()


class ResolutionCache:
    """Keeps, per module, the longest resolution computed so far.

    Entries only grow: a stored resolution is replaced by a longer or a complete one.
    """

    def __init__(self, directory=None):
        self.directory = directory
        self.entries = {}
        self.hits = 0
        self.misses = 0

    def configure(self, directory):
        self.directory = directory
        if directory:
            os.makedirs(directory, exist_ok=True)

    def clear(self):
        self.entries = {}
        self.hits = self.misses = 0

    def _path(self, key):
        return os.path.join(self.directory, f'{key}.json')

    def _load(self, M, key):
        if not self.directory:
            return None
        path = self._path(key)
        if not os.path.exists(path):
            return None
        try:
            with open(path, encoding='utf-8') as file:
                resolution = resolution_from_json(M.ring, json.load(file))
        except Exception as e:
            logger.warning(f'Ignoring corrupt cache entry {path}: {e}')
            return None
        self.entries[key] = resolution
        return resolution

    def longest(self, M):
        key = content_key(M)
        return self.entries.get(key) or self._load(M, key)

    def get(self, M, length):
        resolution = self.longest(M)
        if resolution is None or not resolution.covers(length):
            self.misses += 1
            return None
        self.hits += 1
        return resolution.truncate(length)

    def put(self, M, resolution):
        key = content_key(M)
        current = self.entries.get(key)
        if current is not None and (current.complete or current.length >= resolution.length):
            return
        self.entries[key] = resolution
        if self.directory:
            self._write(key, resolution)

    def _write(self, key, resolution):
        path = self._path(key)
        temporary = None
        try:
            descriptor, temporary = tempfile.mkstemp(dir=self.directory, suffix='.tmp')
            with os.fdopen(descriptor, 'w', encoding='utf-8') as file:
                json.dump(resolution_to_json(resolution), file, sort_keys=True)
            os.replace(temporary, path)
        except (OSError, TypeError, ValueError) as e:
            logger.warning(f'Error while saving resolution {key} on disk: {e}')
            if temporary is not None and os.path.exists(temporary):
                os.remove(temporary)


resolution_cache = ResolutionCache(os.getenv('LINKAGE_LAB_CACHE'))
