import os
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from src.errors import BudgetExceededError


DEFAULT_MAX_DEGREE = 24
DEFAULT_MAX_RANK = 512
DEFAULT_SEED = 0
DEFAULT_OUTPUT_FORMAT = 'text'
OUTPUT_FORMATS = ('text', 'json')


def default_bound(num_variables):
    """Default bound B for "for all i > 0" vanishing claims: 2(n + 1)."""
    env_bound = os.getenv('LINKAGE_LAB_BOUND')
    if env_bound:
        return int(env_bound)
    return 2 * (num_variables + 1)


@dataclass(frozen=True)
class Budget:
    max_degree: int = DEFAULT_MAX_DEGREE
    max_rank: int = DEFAULT_MAX_RANK
    time_limit: float = None
    started_at: float = field(default_factory=time.monotonic, compare=False)

    def check_degree(self, degree, what='computation'):
        if degree > self.max_degree:
            raise BudgetExceededError(f'{what} reached internal degree {degree} > {self.max_degree}')

    def check_rank(self, rank, what='computation'):
        if rank > self.max_rank:
            raise BudgetExceededError(f'{what} needs free rank {rank} > {self.max_rank}')

    def check_time(self, what='computation'):
        if self.time_limit is not None and time.monotonic() - self.started_at > self.time_limit:
            raise BudgetExceededError(f'{what} exceeded the time limit of {self.time_limit}s')


_active_budget = Budget()


def active_budget():
    return _active_budget


@contextmanager
def use_budget(budget):
    """Installs `budget` as the active budget for the duration of the block."""
    global _active_budget
    previous = _active_budget
    _active_budget = budget
    try:
        yield budget
    finally:
        _active_budget = previous


@dataclass(frozen=True)
class RunConfig:
    """Parameters of one CLI run.

    Parameters:

    field (str) - optional: coefficient field override for every declared ring ('QQ' or 'GF(p)')

    bound (int) - optional: Ext bound B; defaults to 2(n + 1) per ring

    probe_primes (tuple of tuple of str) - optional: extra probe primes, each given by generator strings

    cache_dir (str) - optional: directory of the content-addressed resolution cache
    """
    field: str = None
    bound: int = None
    probe_primes: tuple = ()
    max_degree: int = DEFAULT_MAX_DEGREE
    max_rank: int = DEFAULT_MAX_RANK
    time_limit: float = None
    output_format: str = DEFAULT_OUTPUT_FORMAT
    cache_dir: str = None
    seed: int = DEFAULT_SEED
    fail_fast: bool = False
    strict: bool = False
    show_progress: bool = False

    def budget(self):
        return Budget(max_degree=self.max_degree, max_rank=self.max_rank, time_limit=self.time_limit)

    def bound_for(self, ring):
        return self.bound if self.bound is not None else default_bound(ring.num_variables)

    def to_dict(self):
        return {
            'field': self.field,
            'bound': self.bound,
            'probe_primes': [list(p) for p in self.probe_primes],
            'max_degree': self.max_degree,
            'max_rank': self.max_rank,
            'seed': self.seed,
            'strict': self.strict,
            'fail_fast': self.fail_fast,
        }
