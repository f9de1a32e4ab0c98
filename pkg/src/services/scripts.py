"""Evaluates parsed scripts: declarations in order, then asserts, prints, checks and suites."""
import logging
import math
from dataclasses import dataclass, field

from src import __version__
from src.algebra.field import parse_field
from src.algebra.groebner import ideal_basis
from src.algebra.hilbert import hilbert_series
from src.config import RunConfig, use_budget
from src.errors import BudgetExceededError, HomogeneityError, InapplicableError, ScriptSyntaxError, StructuralError
from src.homological.biduality import universal_pushforward
from src.homological.functors import dual, ext, hom_module, tensor, tor
from src.homological.transpose import lambda_, transpose, transpose_wrt
from src.invariants.gc_dimension import gc_dim
from src.invariants.grade import grade_module, projective_dimension, reduced_grade
from src.invariants.local_cohomology import (cc, depth, is_cohen_macaulay, is_maximal_cohen_macaulay, krull_dim,
                                             local_cohomology_degrees)
from src.invariants.probes import probe_primes, user_prime
from src.invariants.semidualizing import canonical_module, in_auslander_class, is_semidualizing
from src.invariants.serre import serre_tilde
from src.invariants.verdicts import BoundedVerdict, InfinityUpTo
from src.linkage.horizontal import is_horizontally_linked, is_self_linked, is_stable, link, stable_part
from src.linkage.ideal_linkage import IdealLinkPair, linked_ideals
from src.modules.isomorphism import is_isomorphic
from src.modules.presentation import (ModulePresentation, cyclic_module, direct_sum, free_module, ideal_module,
                                      presentation_from_rows, residue_field, twist)
from src.modules.resolution import betti, syzygy
from src.modules.rings import GradedRing, make_ring, quotient_ring
from src.parsers.polynomial_parser import parse_polynomial
from src.parsers.script_parser import (Assert, Check, Integer, IntegerList, LetBinding, ModuleDecl, PolynomialList,
                                       Print, Ref, RingDecl, Suite, format_expr, format_statement, parse)
from src.services.corpus import generate_corpus
from src.services.reports import TheoremId, TheoremVerdict, as_verdict
from src.services.suite import run_suite
from src.services.theorems import check
from src.utils.serialization import dumps, to_jsonable


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_BUDGET_EXCEEDED = 3
EXIT_INAPPLICABLE = 4


@dataclass
class StatementResult:
    kind: str
    name: str
    value: object = None
    report: object = None

    def to_dict(self):
        data = {'kind': self.kind, 'name': self.name}
        if self.report is not None:
            data['report'] = self.report
        else:
            data['value'] = to_jsonable(self.value)
        return data


@dataclass
class RunResult:
    """What a run produced, with the flags the exit code is derived from."""
    config: RunConfig
    declarations: list = field(default_factory=list)
    results: list = field(default_factory=list)
    parse_error: str = None
    failed: bool = False
    budget_exceeded: bool = False
    inapplicable: bool = False

    @property
    def exit_code(self):
        """2 parse error, then 1 refuted or failed, 3 budget exceeded, 4 inapplicable under --strict."""
        if self.parse_error is not None:
            return EXIT_PARSE_ERROR
        if self.failed:
            return EXIT_FAILED
        if self.budget_exceeded:
            return EXIT_BUDGET_EXCEEDED
        if self.inapplicable and self.config.strict:
            return EXIT_INAPPLICABLE
        return EXIT_OK


def _is_linked(M, session):
    report = is_horizontally_linked(M, seed=session.config.seed)
    return BoundedVerdict.true(note=str(report)) if report.verdict else BoundedVerdict.false('not linked', note=str(report))


def _stable(M, session):
    stable, free_rank = is_stable(M)
    return BoundedVerdict.true() if stable else BoundedVerdict.false(f'free summand of rank {free_rank}')


def _semidualizing(C, session):
    certificate = is_semidualizing(C, session.bound(C))
    if not certificate.valid:
        return BoundedVerdict.false(str(certificate))
    return as_verdict(certificate.ext_vanishing)


def _linked_by_ideals(ring, a, b, c, session):
    result = linked_ideals(IdealLinkPair(a, b, c, ring), seed=session.config.seed)
    if result.linked:
        return BoundedVerdict.true(note=str(result))
    if result.refuted:
        return BoundedVerdict.false('not linked', note=str(result))
    return BoundedVerdict.unknown(str(result))


CONSTRUCTORS = {
    'lambda': lambda s, M: lambda_(M),
    'transpose': lambda s, M: transpose(M),
    'transpose_wrt': lambda s, M, C: transpose_wrt(M, C),
    'syzygy': lambda s, M, i: syzygy(M, i),
    'ext': lambda s, M, N, i: ext(M, N, i),
    'tor': lambda s, M, N, i: tor(M, N, i),
    'tensor': lambda s, M, N: tensor(M, N),
    'hom': lambda s, M, N: hom_module(M, N),
    'canonical': lambda s, R: canonical_module(R),
    'dual': lambda s, M: dual(M),
    'pushforward': lambda s, M, C: universal_pushforward(M, C).cokernel,
    'free': lambda s, R, twists: free_module(R, twists),
    'cyclic': lambda s, R, polynomials: cyclic_module(R, polynomials),
    'ideal': lambda s, R, polynomials: ideal_module(R, polynomials),
    'residue': lambda s, R: residue_field(R),
    'direct_sum': lambda s, M, N: direct_sum(M, N),
    'twist': lambda s, M, a: twist(M, a),
    'stable_part': lambda s, M: stable_part(M),
    'link': lambda s, M: link(M),
}

PREDICATES = {
    'is_horizontally_linked': lambda s, M: _is_linked(M, s),
    'is_stable': lambda s, M: _stable(M, s),
    'is_self_linked': lambda s, M: is_self_linked(M, seed=s.config.seed),
    'serre_tilde': lambda s, M, n: serre_tilde(M, n, s.primes(M.ring)),
    'is_cm': lambda s, M: is_cohen_macaulay(M),
    'is_mcm': lambda s, M: is_maximal_cohen_macaulay(M),
    'in_auslander_class': lambda s, M, C: in_auslander_class(M, C, s.bound(M)),
    'is_semidualizing': lambda s, C: _semidualizing(C, s),
    'iso': lambda s, M, N: is_isomorphic(M, N, seed=s.config.seed),
    'linked_by_ideal': lambda s, R, a, b, c: _linked_by_ideals(R, a, b, c, s),
}

NUMBERS = {
    'depth': lambda s, M: depth(M),
    'dim': lambda s, M: krull_dim(M),
    'rgr': lambda s, M, C: reduced_grade(M, C, s.bound(M)),
    'grade': lambda s, M: grade_module(M),
    'pd': lambda s, M: projective_dimension(M, s.bound(M)),
    'cc': lambda s, M: cc(M),
}

VALUES = {
    'betti': lambda s, M, length: betti(M, length),
    'hilbert': lambda s, M: hilbert_series(M),
    'gc_dim': lambda s, M, C: gc_dim(M, C, s.bound(M)),
    'lc_degrees': lambda s, M: local_cohomology_degrees(M),
}


def compare(value, comparison, target):
    """`value comparison target` for an int, +∞ or InfinityUpTo(B), as a BoundedVerdict."""
    if isinstance(value, InfinityUpTo):
        if target > value.bound:
            return BoundedVerdict.unknown(f'{value} says nothing about {target}')
        holds = comparison in ('!=', '>', '>=')
        return BoundedVerdict.up_to(value.bound) if holds else BoundedVerdict.false(value)
    if not isinstance(value, (int, float)):
        raise StructuralError(f'{value} is not a number')
    holds = {
        '==': value == target,
        '!=': value != target,
        '<': value < target,
        '<=': value <= target,
        '>': value > target,
        '>=': value >= target,
    }[comparison]
    return BoundedVerdict.true() if holds else BoundedVerdict.false(value)


def _format_value(value):
    if value == math.inf:
        return 'inf'
    return str(value)


class _Session:
    """Names, results and exit flags of one run."""

    def __init__(self, config):
        self.config = config
        self.names = {}
        self.result = RunResult(config)
        self._primes = {}

    def bound(self, M):
        return self.config.bound_for(M.ring)

    def primes(self, ring):
        if ring not in self._primes:
            extra = [user_prime(ring, [parse_polynomial(g, ring.poly_ring) for g in generators])
                     for generators in self.config.probe_primes]
            self._primes[ring] = probe_primes(ring, extra)
        return self._primes[ring]

    def extra_primes(self, ring):
        return [p for p in self.primes(ring) if p.subset is None]

    def field_of(self, decl):
        return parse_field(self.config.field or decl.coefficients)

    def polynomials(self, texts, ring):
        return [parse_polynomial(text, ring.poly_ring) for text in texts]

    def argument(self, arg):
        if isinstance(arg, Ref):
            return self.names[arg.name]
        if isinstance(arg, Integer):
            return arg.value
        if isinstance(arg, IntegerList):
            return list(arg.values)
        if isinstance(arg, PolynomialList):
            return self.polynomials(arg.polynomials, self.ring_named(arg.ring))
        return self.evaluate(arg)

    def ring_named(self, name):
        value = self.names[name]
        return value if isinstance(value, GradedRing) else value.ring

    def evaluate(self, call):
        args = [self.argument(a) for a in call.args]
        for table in (CONSTRUCTORS, PREDICATES, NUMBERS, VALUES):
            if call.function in table:
                return table[call.function](self, *args)
        raise StructuralError(f'unknown function {call.function}')


def _declare_ring(session, decl):
    if decl.base is None:
        ring = make_ring(session.field_of(decl), decl.variables)
    else:
        base = session.names[decl.base]
        ring = quotient_ring(base, session.polynomials(decl.relations, base))
    session.names[decl.name] = ring
    logger.info(f'Declared ring {decl.name} = {ring}')
    return {'kind': 'ring', 'name': decl.name, 'value': {
        'ring': str(ring), 'dim': ring.dim, 'depth': ring.depth,
        'cohen_macaulay': ring.is_cm, 'gorenstein': ring.is_gorenstein,
    }}


def _declare_module(session, decl):
    ring = session.names[decl.ring]
    rows = [session.polynomials(row, ring) for row in decl.matrix]
    M = presentation_from_rows(ring, list(decl.twists), rows,
                               list(decl.rel_twists) if decl.rel_twists is not None else None)
    session.names[decl.name] = M
    return {'kind': 'module', 'name': decl.name, 'value': to_jsonable(M)}


def _let(session, statement):
    M = session.evaluate(statement.expr)
    session.names[statement.name] = M
    return {'kind': 'let', 'name': statement.name, 'expr': format_expr(statement.expr), 'value': to_jsonable(M)}


def _print(session, statement):
    name = format_expr(statement.target)
    if isinstance(statement.target, Ref):
        value = session.names[statement.target.name]
        kind = 'ring' if isinstance(value, GradedRing) else 'module'
        return StatementResult(kind, name, str(value) if kind == 'ring' else value)
    value = session.evaluate(statement.target)
    function = statement.target.function
    if function in CONSTRUCTORS:
        return StatementResult('module', name, value)
    if function in PREDICATES:
        verdict = as_verdict(value)
        return StatementResult('predicate', name, {'holds': verdict.holds, 'verdict': str(verdict)})
    return StatementResult('invariant', name, value)


def _assert(session, statement):
    name = format_statement(statement)[len('assert '):-1]
    value = session.evaluate(statement.predicate)
    if statement.comparison is None:
        verdict = as_verdict(value)
        detail = str(verdict)
    else:
        verdict = compare(value, statement.comparison, statement.value)
        detail = f'{statement.predicate.function} = {_format_value(value)}'
    passed = verdict.holds
    if not passed:
        session.result.failed = True
        logger.warning(f'Assertion failed: {name} ({detail})')
    return StatementResult('assert', name, {'passed': passed, 'detail': detail})


def _bindings(session, statement):
    bindings = {}
    for name, value in statement.bindings:
        if isinstance(value, PolynomialList):
            ring = session.ring_named(value.ring)
            bindings[name] = ideal_basis(session.polynomials(value.polynomials, ring), ring.poly_ring)
        else:
            bindings[name] = session.argument(value)
    return bindings


def _check(session, statement):
    theorem_id = TheoremId.parse(statement.theorem)
    bindings = _bindings(session, statement)
    name = format_statement(statement)[len('check '):-1]
    ring = next((v.ring for v in bindings.values() if isinstance(v, ModulePresentation)), None) or bindings.get('R')
    extra = session.extra_primes(ring) if ring is not None else ()
    report = check(theorem_id, bindings, session.config, extra_primes=extra, instance=name)
    if report.verdict is TheoremVerdict.REFUTED:
        session.result.failed = True
    if report.verdict is TheoremVerdict.INAPPLICABLE:
        session.result.inapplicable = True
    if report.budget_exceeded:
        session.result.budget_exceeded = True
    logger.info(f'{theorem_id.value}: {report.verdict.value}')
    return StatementResult('check', name, report=report.to_dict())


def _suite(session, statement):
    ring = session.names[statement.ring]
    ids = [TheoremId.parse(t) for t in statement.theorems] or list(TheoremId)
    corpus = generate_corpus(ring, statement.size)
    suite = run_suite(corpus, ids, session.config, show_progress=session.config.show_progress)
    if not suite.summary.passed:
        session.result.failed = True
    if suite.summary.budget_exceeded:
        session.result.budget_exceeded = True
    name = f'[{", ".join(t.value for t in ids)}] on corpus({statement.ring}, {statement.size})'
    return StatementResult('suite', name, report={
        'summary': suite.summary.to_dict(),
        'reports': [r.to_dict() for r in suite.reports],
    })


_HANDLERS = {
    Print: _print,
    Assert: _assert,
    Check: _check,
    Suite: _suite,
}


def _run_statement(session, statement):
    if isinstance(statement, RingDecl):
        session.result.declarations.append(_declare_ring(session, statement))
    elif isinstance(statement, ModuleDecl):
        session.result.declarations.append(_declare_module(session, statement))
    elif isinstance(statement, LetBinding):
        session.result.declarations.append(_let(session, statement))
    else:
        session.result.results.append(_HANDLERS[type(statement)](session, statement))


def _stops(session):
    return session.config.fail_fast and session.result.exit_code != EXIT_OK


def execute(script, config=None):
    """Runs a script.

    Parameters:

    script (Script or str): a parsed script, or source text to parse first

    config (RunConfig) - optional: field override, bound, probe primes, budgets, seed and flags

    Returns:

    RunResult: declarations and results in statement order; `exit_code` follows the
        contract 0 ok or partial, 1 refuted or failed assert, 2 parse error,
        3 budget exceeded, 4 inapplicable under --strict
    """
    config = config or RunConfig()
    if isinstance(script, str):
        try:
            script = parse(script)
        except (ScriptSyntaxError, HomogeneityError) as error:
            logger.error(f'Parse error: {error}')
            return RunResult(config, parse_error=str(error))
    session = _Session(config)
    for statement in script.statements:
        try:
            with use_budget(config.budget()):
                _run_statement(session, statement)
        except BudgetExceededError as error:
            logger.warning(f'Budget exceeded in "{format_statement(statement)}": {error}')
            session.result.budget_exceeded = True
            session.result.results.append(StatementResult('error', format_statement(statement), str(error)))
            if isinstance(statement, (RingDecl, ModuleDecl, LetBinding)):
                break
        except (StructuralError, InapplicableError, ValueError) as error:
            logger.error(f'"{format_statement(statement)}" failed: {error}')
            session.result.failed = True
            session.result.results.append(StatementResult('error', format_statement(statement), str(error)))
            if isinstance(statement, (RingDecl, ModuleDecl, LetBinding)):
                break
        if _stops(session):
            logger.info('Stopping at the first failure')
            break
    return session.result


def report_json(result):
    """Deterministic JSON bytes: version, config, declarations and results in statement order."""
    data = {
        'version': __version__,
        'config': result.config.to_dict(),
        'declarations': result.declarations,
        'results': [r.to_dict() for r in result.results],
    }
    if result.parse_error is not None:
        data['parse_error'] = result.parse_error
    return dumps(data).encode('utf-8')


def report_text(result):
    """Human-readable summary of a run, one block per result."""
    if result.parse_error is not None:
        return f'Parse error: {result.parse_error}\n'
    lines = []
    for declaration in result.declarations:
        value = declaration['value']
        shown = value['ring'] if declaration['kind'] == 'ring' else declaration.get('expr', 'coker')
        lines.append(f'{declaration["kind"]} {declaration["name"]}: {shown}')
    for r in result.results:
        if r.kind in ('check', 'suite'):
            lines.append(f'{r.kind} {r.name}:')
            lines.append(dumps(r.report))
        else:
            lines.append(f'{r.kind} {r.name}: {to_jsonable(r.value)}')
    lines.append(f'exit code {result.exit_code}')
    return '\n'.join(lines) + '\n'
