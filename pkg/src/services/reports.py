"""Theorem reports: hypothesis statuses, claim outcomes and the verdict derived from them."""
from dataclasses import dataclass, field
from enum import Enum

from src.invariants.verdicts import BoundedVerdict, VerdictKind
from src.modules.isomorphism import IsoKind, IsoVerdict


class TheoremId(Enum):
    THM_MS = 'THM_MS'
    PROP_T1 = 'PROP_T1'
    PROP_P3 = 'PROP_P3'
    PROP_T13 = 'PROP_T13'
    COR_C2 = 'COR_C2'
    LEM_LEM2 = 'LEM_LEM2'
    THM_TH5 = 'THM_TH5'
    COR_COR7 = 'COR_COR7'
    THM_THEOREM1 = 'THM_THEOREM1'
    THM_THE1 = 'THM_THE1'
    COR_THEOREM3 = 'COR_THEOREM3'
    THM_PROP_EVEN = 'THM_PROP_EVEN'
    THM_TH1 = 'THM_TH1'
    COR_COR5 = 'COR_COR5'
    COR_COR6 = 'COR_COR6'
    THM_COR3 = 'THM_COR3'
    THM_TH2 = 'THM_TH2'
    COR_SELF = 'COR_SELF'
    THM_TH3 = 'THM_TH3'
    THM_TH6 = 'THM_TH6'
    PROP_XTM = 'PROP_XTM'
    THM_TH4 = 'THM_TH4'
    THM_TH7 = 'THM_TH7'
    COR_COR1 = 'COR_COR1'
    COR_COR4 = 'COR_COR4'
    REMARK3_I = 'REMARK3_I'
    G3_AB_FORMULA = 'G3_AB_FORMULA'
    REMARK_REM1 = 'REMARK_REM1'
    COR_FINITE_PD = 'COR_FINITE_PD'
    PROP_GORENSTEIN_LINK = 'PROP_GORENSTEIN_LINK'
    G2_DIMENSION_SHIFT = 'G2_DIMENSION_SHIFT'

    @classmethod
    def parse(cls, text):
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f'unknown theorem id {text!r}') from None


class HypothesisStatus(Enum):
    EXACT = 'Exact'
    BOUNDED_TRUE = 'BoundedTrue'
    PROBE_VERIFIED = 'ProbeVerified'
    FAILED = 'Failed'
    UNDECIDED = 'Undecided'


class TheoremVerdict(Enum):
    VERIFIED = 'Verified'
    REFUTED = 'Refuted'
    INAPPLICABLE = 'Inapplicable'
    PARTIALLY_VERIFIED = 'PartiallyVerified'


def as_verdict(value):
    """bool, IsoVerdict or BoundedVerdict as a BoundedVerdict."""
    if isinstance(value, BoundedVerdict):
        return value
    if isinstance(value, IsoVerdict):
        if value.kind is IsoKind.UNKNOWN:
            return BoundedVerdict.unknown(str(value))
        if value.is_isomorphic:
            return BoundedVerdict.true(note=str(value))
        return BoundedVerdict.false('not isomorphic', note=str(value))
    if isinstance(value, bool):
        return BoundedVerdict.true() if value else BoundedVerdict.false(False)
    raise TypeError(f'cannot read {value!r} as a verdict')


def status_of(verdict):
    if verdict.kind is VerdictKind.UNKNOWN:
        return HypothesisStatus.UNDECIDED
    if verdict.failed:
        return HypothesisStatus.FAILED
    if verdict.kind is VerdictKind.TRUE:
        return HypothesisStatus.EXACT
    if verdict.probe_set:
        return HypothesisStatus.PROBE_VERIFIED
    return HypothesisStatus.BOUNDED_TRUE


def _scope(verdict):
    return verdict.probe_set if verdict.probe_set else verdict.bound


@dataclass(frozen=True)
class HypothesisCheck:
    """One evaluated statement; `scope` is the bound B or the probe-set label."""
    name: str
    status: HypothesisStatus
    detail: str = None
    scope: object = None
    exact: bool = True

    @property
    def holds(self):
        return self.status not in (HypothesisStatus.FAILED, HypothesisStatus.UNDECIDED)

    def to_dict(self):
        data = {'name': self.name, 'status': self.status.value}
        if self.scope is not None:
            data['scope'] = self.scope
        if self.detail:
            data['detail'] = self.detail
        return data


@dataclass(frozen=True)
class TheoremReport:
    id: TheoremId
    instance: str
    hypotheses: tuple
    claims: tuple
    verdict: TheoremVerdict
    witness: object = None
    suspected_counterexample: bool = False
    values: tuple = ()
    notes: tuple = ()
    budget_exceeded: bool = False
    timings: dict = field(default_factory=dict, compare=False)

    @property
    def counterexample(self):
        """Refuted with every piece of evidence exact."""
        return self.verdict is TheoremVerdict.REFUTED and not self.suspected_counterexample

    def to_dict(self):
        from src.utils.serialization import to_jsonable

        data = {
            'id': self.id.value,
            'instance': self.instance,
            'verdict': self.verdict.value,
            'hypothesis_status': [h.to_dict() for h in self.hypotheses],
            'claims': [c.to_dict() for c in self.claims],
            'values': [[name, to_jsonable(value)] for name, value in self.values],
        }
        if self.verdict is TheoremVerdict.REFUTED:
            data['witness'] = to_jsonable(self.witness)
            data['suspected_counterexample'] = self.suspected_counterexample
        if self.notes:
            data['notes'] = list(self.notes)
        return data

    def __str__(self):
        lines = [f'{self.id.value} on {self.instance}: {self.verdict.value}'
                 + (' (suspected counterexample, escalate the bound)' if self.suspected_counterexample else '')]
        for h in self.hypotheses:
            lines.append(f'  hypothesis {h.name}: {h.status.value}' + (f' [{h.detail}]' if h.detail else ''))
        for c in self.claims:
            lines.append(f'  claim {c.name}: {c.status.value}' + (f' [{c.detail}]' if c.detail else ''))
        for name, value in self.values:
            lines.append(f'  {name} = {value}')
        for note in self.notes:
            lines.append(f'  note: {note}')
        if self.witness is not None:
            lines.append(f'  witness: {self.witness}')
        return '\n'.join(lines)


class HypothesisFailed(Exception):
    """Raised by ReportBuilder.require to stop a check before its conclusion."""


def _describe(verdict):
    return verdict.note if verdict.note and verdict.kind is not VerdictKind.FALSE else str(verdict)


class ReportBuilder:
    """Collects the evidence of one check and derives its verdict.

    Hypotheses are recorded first; a failed or undecided hypothesis makes the
    report Inapplicable. A failing claim makes it Refuted, flagged as suspected
    when some evidence behind it was bounded, sampled or undecided.
    """

    def __init__(self, theorem_id, instance):
        self.theorem_id = theorem_id
        self.instance = instance
        self.hypotheses = []
        self.claims = []
        self.values = []
        self.notes = []
        self.witness = None
        self.inapplicable_reason = None
        self.budget_exceeded = False

    def value(self, name, value):
        self.values.append((name, value))
        return value

    def note(self, text):
        if text not in self.notes:
            self.notes.append(text)

    def hypothesis(self, name, value):
        """Records a hypothesis and returns whether it holds."""
        verdict = as_verdict(value)
        check = HypothesisCheck(name, status_of(verdict), _describe(verdict), _scope(verdict), verdict.exact)
        self.hypotheses.append(check)
        return check.holds

    def require(self, name, value):
        if not self.hypothesis(name, value):
            raise HypothesisFailed(name)

    def inapplicable(self, reason):
        self.inapplicable_reason = reason
        raise HypothesisFailed(reason)

    def _record(self, name, holds, exact, scope, detail, witness=None, undecided=False):
        if undecided:
            status = HypothesisStatus.UNDECIDED
        elif not holds:
            status = HypothesisStatus.FAILED
            if self.witness is None:
                self.witness = {'claim': name, 'data': witness if witness is not None else detail}
        elif exact:
            status = HypothesisStatus.EXACT
        elif isinstance(scope, str):
            status = HypothesisStatus.PROBE_VERIFIED
        else:
            status = HypothesisStatus.BOUNDED_TRUE
        self.claims.append(HypothesisCheck(name, status, detail, scope, exact))
        return holds and not undecided

    def claim(self, name, value):
        """A statement the theorem asserts outright."""
        verdict = as_verdict(value)
        return self._record(name, verdict.holds, verdict.exact, _scope(verdict), _describe(verdict),
                            witness=verdict.witness, undecided=verdict.kind is VerdictKind.UNKNOWN)

    def equivalent(self, name, left, right):
        """left ⟺ right, each side a bool, IsoVerdict or BoundedVerdict."""
        left, right = as_verdict(left), as_verdict(right)
        detail = f'{_describe(left)} <=> {_describe(right)}'
        undecided = VerdictKind.UNKNOWN in (left.kind, right.kind)
        exact = left.exact and right.exact
        scope = _scope(left) if not left.exact else _scope(right)
        witness = {'left': left.holds, 'right': right.holds}
        return self._record(name, left.holds == right.holds, exact, scope, detail, witness, undecided)

    def implication(self, name, premise, conclusion):
        """premise ⟹ conclusion; vacuous when the premise fails."""
        premise, conclusion = as_verdict(premise), as_verdict(conclusion)
        detail = f'{_describe(premise)} => {_describe(conclusion)}'
        if premise.failed:
            return self._record(name, True, premise.exact, _scope(premise), detail)
        undecided = VerdictKind.UNKNOWN in (premise.kind, conclusion.kind)
        exact = premise.exact and conclusion.exact
        scope = _scope(premise) if not premise.exact else _scope(conclusion)
        return self._record(name, conclusion.holds, exact, scope, detail,
                            {'premise': True, 'conclusion': conclusion.witness}, undecided)

    def equal(self, name, left, right, exact=True):
        """Exact equality of two computed quantities."""
        return self._record(name, left == right, exact, None, f'{left} = {right}' if left == right else f'{left} != {right}',
                            {'left': left, 'right': right})

    def build(self, timings=None):
        hypotheses, claims = tuple(self.hypotheses), tuple(self.claims)
        suspected = False
        if self.inapplicable_reason or not all(h.holds for h in hypotheses):
            verdict = TheoremVerdict.INAPPLICABLE
            if self.inapplicable_reason:
                self.note(f'inapplicable: {self.inapplicable_reason}')
        elif any(c.status is HypothesisStatus.FAILED for c in claims):
            verdict = TheoremVerdict.REFUTED
            failed = [c for c in claims if c.status is HypothesisStatus.FAILED]
            suspected = (not all(h.exact for h in hypotheses) or not all(c.exact for c in failed))
        elif any(c.status in (HypothesisStatus.UNDECIDED, HypothesisStatus.PROBE_VERIFIED) for c in claims) \
                or any(h.status is HypothesisStatus.PROBE_VERIFIED for h in hypotheses):
            verdict = TheoremVerdict.PARTIALLY_VERIFIED
        else:
            verdict = TheoremVerdict.VERIFIED
        return TheoremReport(self.theorem_id, self.instance, hypotheses, claims, verdict,
                             self.witness if verdict is TheoremVerdict.REFUTED else None,
                             suspected, tuple(self.values), tuple(self.notes), self.budget_exceeded,
                             dict(timings or {}))
