"""Runs theorem checks over a corpus and aggregates the reports."""
import logging
from dataclasses import dataclass, field

from src.config import RunConfig
from src.services.corpus import instances
from src.services.reports import TheoremId, TheoremVerdict
from src.services.theorems import check
from src.utils.progress_bar import update_progress_bar


logger = logging.getLogger(__name__)


@dataclass
class SuiteSummary:
    total: int = 0
    verified: int = 0
    refuted: int = 0
    inapplicable: int = 0
    partially_verified: int = 0
    counterexamples: int = 0
    budget_exceeded: int = 0

    @property
    def passed(self):
        """No report is Refuted on exact evidence."""
        return self.counterexamples == 0

    def add(self, report):
        self.total += 1
        if report.verdict is TheoremVerdict.VERIFIED:
            self.verified += 1
        elif report.verdict is TheoremVerdict.REFUTED:
            self.refuted += 1
            if report.counterexample:
                self.counterexamples += 1
        elif report.verdict is TheoremVerdict.INAPPLICABLE:
            self.inapplicable += 1
        else:
            self.partially_verified += 1
        if report.budget_exceeded:
            self.budget_exceeded += 1

    def to_dict(self):
        return {
            'total': self.total,
            'verified': self.verified,
            'refuted': self.refuted,
            'inapplicable': self.inapplicable,
            'partially_verified': self.partially_verified,
            'counterexamples': self.counterexamples,
            'passed': self.passed,
        }

    def __str__(self):
        return (f'{self.total} reports: {self.verified} verified, {self.partially_verified} partially verified, '
                f'{self.inapplicable} inapplicable, {self.refuted} refuted ({self.counterexamples} with exact evidence)')


@dataclass
class SuiteResult:
    reports: list = field(default_factory=list)
    summary: SuiteSummary = field(default_factory=SuiteSummary)


def _by_ring(corpus):
    """Corpus entries grouped by ring, in order of first appearance."""
    groups = {}
    for entry in corpus:
        groups.setdefault(entry.module.ring, []).append(entry)
    return list(groups.values())


def run_suite(corpus, ids=None, config=None, show_progress=False):
    """Checks every theorem on every instance the corpus provides for it.

    Parameters:

    corpus (list of CorpusEntry): modules, possibly over several rings

    ids (list of TheoremId) - optional: theorems to check; all of them by default

    config (RunConfig) - optional: bound, seed, budgets and fail-fast

    show_progress (bool) - optional: draw a progress bar on stderr

    Returns:

    SuiteResult: reports ordered by theorem, then by instance, and their summary
    """
    config = config or RunConfig()
    ids = list(ids) if ids is not None else list(TheoremId)
    groups = _by_ring(corpus)
    planned = [(theorem_id, instance) for theorem_id in ids for group in groups
               for instance in instances(theorem_id, group)]
    result = SuiteResult()
    total = len(planned)
    logger.info(f'Running {total} checks over {len(groups)} rings')
    for i, (theorem_id, instance) in enumerate(planned):
        if show_progress:
            update_progress_bar(i, total, prefix=f'{theorem_id.value:>22}')
        report = check(theorem_id, instance.bindings, config, instance=instance.label)
        result.reports.append(report)
        result.summary.add(report)
        if report.counterexample:
            logger.error(f'Counterexample reported by {theorem_id.value} on {instance.label}')
            if config.fail_fast:
                break
    if show_progress:
        update_progress_bar(total, total, prefix=f'{"done":>22}')
    logger.info(f'Suite finished: {result.summary}')
    return result
