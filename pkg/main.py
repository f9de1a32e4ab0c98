from dotenv import load_dotenv
load_dotenv()

import argparse
import logging
import os
import sys
from src.config import DEFAULT_MAX_DEGREE, DEFAULT_MAX_RANK, DEFAULT_SEED, RunConfig
from src.db.cache import resolution_cache
from src.errors import HomogeneityError, LinkageLabError, ScriptSyntaxError
from src.parsers.script_parser import Script, parse
from src.services.scripts import EXIT_FAILED, EXIT_PARSE_ERROR, execute, report_json, report_text


LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def parse_probe_primes(text):
    """'x,y;x+y,z' -> (('x', 'y'), ('x+y', 'z')): primes separated by ';', generators by ','."""
    if not text:
        return ()
    return tuple(tuple(g.strip() for g in prime.split(',') if g.strip()) for prime in text.split(';') if prime.strip())


def check_source(theorem_id, source, bindings):
    """The declarations of `source` followed by one check statement built from --bind pairs."""
    declarations = parse(source).declarations()
    pairs = []
    for binding in bindings:
        name, separator, value = binding.partition('=')
        if not separator:
            raise ScriptSyntaxError(f'--bind expects name=value, got {binding!r}')
        pairs.append(f'{name.strip()} = {value.strip()}')
    statement = parse(source + f'\ncheck {theorem_id}({", ".join(pairs)});\n').statements[-1]
    return Script(declarations + (statement,))


def build_parser():
    parser = argparse.ArgumentParser(prog='linkage-lab', description='Check linkage-theory statements on graded modules.')
    subparsers = parser.add_subparsers(dest='command', required=True)

    run = subparsers.add_parser('run', help='run a script')
    run.add_argument('file', type=str, help='script to run')

    single = subparsers.add_parser('check', help='check one theorem on modules declared in a script')
    single.add_argument('theorem', type=str, help='theorem id, e.g. THM_MS')
    single.add_argument('file', type=str, help='script declaring the rings and modules')
    single.add_argument('--bind', action='append', default=[], help='binding name=value, e.g. M=N or n=2')

    for sub in (run, single):
        sub.add_argument('--json', action='store_true', help='print the JSON report instead of text')
        sub.add_argument('--bound', type=int, help='Ext/Tor bound B (default 2(n+1))', required=False, default=None)
        sub.add_argument('--probe-primes', type=str, help='extra probe primes, e.g. "x,y;x+y,z"', required=False, default=None)
        sub.add_argument('--cache-dir', type=str, help='resolution cache directory', required=False, default=None)
        sub.add_argument('--fail-fast', action='store_true', help='stop at the first failure')
        sub.add_argument('--strict', action='store_true', help='exit with 4 when a check is inapplicable')
        sub.add_argument('--seed', type=int, help='seed of the isomorphism search', required=False, default=DEFAULT_SEED)
        sub.add_argument('--field', type=str, help='coefficient field override: QQ or GF(p)', required=False, default=None)
        sub.add_argument('--max-degree', type=int, help='degree budget', required=False, default=DEFAULT_MAX_DEGREE)
        sub.add_argument('--max-rank', type=int, help='free rank budget', required=False, default=DEFAULT_MAX_RANK)
        sub.add_argument('--time-limit', type=float, help='wall-clock budget per statement, in seconds', required=False, default=None)
        sub.add_argument('--progress', action='store_true', help='show the suite progress bar on stderr')
    return parser


def main(argv=None):
    logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT,
                        level=os.getenv('LINKAGE_LAB_LOG_LEVEL', 'WARNING').upper())
    args = build_parser().parse_args(argv)
    params = {
        'command': args.command,
        'file': args.file,
        'theorem': getattr(args, 'theorem', None),
        'bindings': getattr(args, 'bind', []),
        'cacheDir': args.cache_dir or os.getenv('LINKAGE_LAB_CACHE'),
    }
    config = RunConfig(
        field=args.field,
        bound=args.bound,
        probe_primes=parse_probe_primes(args.probe_primes),
        max_degree=args.max_degree,
        max_rank=args.max_rank,
        time_limit=args.time_limit,
        output_format='json' if args.json else 'text',
        cache_dir=params['cacheDir'],
        seed=args.seed,
        fail_fast=args.fail_fast,
        strict=args.strict,
        show_progress=args.progress,
    )
    logging.getLogger(__name__).info(f'Running {args.command} with params {params}')
    if config.cache_dir:
        resolution_cache.configure(config.cache_dir)

    try:
        with open(args.file, encoding='utf-8') as file:
            source = file.read()
    except OSError as e:
        print(f'Error while reading {args.file}: {e}', file=sys.stderr)
        return EXIT_FAILED

    try:
        script = source if args.command == 'run' else check_source(args.theorem, source, args.bind)
    except (ScriptSyntaxError, HomogeneityError) as e:
        print(f'Parse error: {e}', file=sys.stderr)
        return EXIT_PARSE_ERROR

    try:
        result = execute(script, config)
    except LinkageLabError as e:
        print(f'Error: {e}', file=sys.stderr)
        return EXIT_FAILED

    if args.json:
        sys.stdout.write(report_json(result).decode('utf-8') + '\n')
    else:
        sys.stdout.write(report_text(result))
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())
