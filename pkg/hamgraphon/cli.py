"""The ``hamgraphon`` command.

Exit codes: 0 success, 1 usage, 2 unreadable graphon file, 3 a
precondition of the requested operation does not hold.
"""
import argparse
import itertools
import json
import logging
import sys
from hamgraphon import get_version
from hamgraphon.context_managers import override_settings
from hamgraphon.document import GraphonDocument, read_graphon
from hamgraphon.errors import (ConfigurationError, CycleCapExceeded,
                               InfeasibleError, NotInX0Error, OperationError,
                               ParseError, PreconditionError, PresetNotFound,
                               ValidationError)
from hamgraphon.graphon import (block_origin, loop_free_reduction, symmetrize,
                                to_rational)
from hamgraphon.hamiltonicity import (CYCLE, DECOMPOSITION,
                                      build_complete_partite,
                                      build_ham_cycle_ky,
                                      build_ham_decomposition_ky,
                                      verify_witness)
from hamgraphon.montecarlo import (MODES, PROCEDURES, EstimateConfig,
                                   estimate, write_csv)
from hamgraphon.presets import get_preset, preset_names
from hamgraphon.sampling import (RngSpec, degree_regularity_report,
                                 sample_undirected)
from hamgraphon.settings import configure, configure_from_env, get_setting
from hamgraphon.skeleton import check_conditions, skeleton_of

__all__ = ('EXIT_OK', 'EXIT_USAGE', 'EXIT_PARSE', 'EXIT_PRECONDITION',
           'build_parser', 'main')

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3

# distributions of y over the blocks of a loop-free reduction tried by
# ``construct`` before giving up
MAX_DISTRIBUTIONS = 10000


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '%s: error: %s\n' % (self.prog, message))


def _int_list(text):
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma separated integers, '
                                         'got %r' % text)


def _rational(text):
    try:
        return to_rational(text)
    except (ValidationError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError('expected a rational number, got %r'
                                         % text)


def _add_source(parser):
    parser.add_argument('graphon', nargs='?', help='graphon JSON file')
    parser.add_argument('--preset', help='use a built-in graphon instead of a '
                        'file (see the presets command)')


def build_parser():
    parser = _ArgumentParser(
        prog='hamgraphon',
        description='Hamiltonicity of random digraphs sampled from '
                    'step-graphons.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + get_version())
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (-vv for debugging output)')
    parser.add_argument('--cycle-cap', type=int,
                        help='largest number of skeleton cycles to enumerate')
    commands = parser.add_subparsers(dest='command', metavar='command',
                                     parser_class=_ArgumentParser)
    commands.required = True

    analyze = commands.add_parser('analyze', help='decide the skeleton '
                                  'conditions and predicted limits')
    _add_source(analyze)

    run = commands.add_parser('estimate', help='estimate p(n) by sampling')
    _add_source(run)
    run.add_argument('--n', type=_int_list, required=True, dest='n_values',
                     help='sizes, e.g. 10,50,100,500')
    run.add_argument('--trials', type=int, help='trials per size')
    run.add_argument('--seed', type=int, dest='master_seed',
                     help='master seed of the trial streams')
    run.add_argument('--workers', type=int, help='worker processes')
    run.add_argument('--mode', choices=MODES, default=DECOMPOSITION)
    run.add_argument('--procedure', choices=PROCEDURES, default=PROCEDURES[0])
    run.add_argument('--budget', type=int,
                     help='node expansions per Hamiltonian cycle search')
    run.add_argument('--allow-large', action='store_true',
                     help='allow cycle mode above the size limit')
    run.add_argument('--output', help='write the CSV here instead of stdout')

    construct = commands.add_parser('construct', help='build a Hamiltonian '
                                    'decomposition or cycle of the complete '
                                    'skeleton-partite graph')
    _add_source(construct)
    construct.add_argument('--y', type=_int_list, required=True,
                           help='nodes per block, e.g. 1,2,3,2')
    construct.add_argument('--target', choices=(DECOMPOSITION, CYCLE),
                           default=DECOMPOSITION)

    presets = commands.add_parser('presets', help='print the built-in graphons')
    presets.add_argument('--name', help='print only this preset')

    regularity = commands.add_parser('regularity', help='degree condition of '
                                     'a symmetrized sample')
    _add_source(regularity)
    regularity.add_argument('--n', type=int, required=True)
    regularity.add_argument('--seed', type=int, default=None)
    regularity.add_argument('--delta', type=_rational, default=None)
    return parser


def _load_graphon(args, parser):
    if (args.graphon is None) == (args.preset is None):
        parser.error('give either a graphon file or --preset')
    if args.preset is not None:
        return get_preset(args.preset)
    try:
        return read_graphon(args.graphon)
    except ValidationError as error:
        raise ParseError('%s: %s' % (args.graphon, error))


def _print_json(data, out):
    out.write(json.dumps(data, indent=2, sort_keys=False))
    out.write('\n')


def cmd_analyze(graphon, args, out):
    report = check_conditions(graphon, cap=args.cycle_cap)
    _print_json(report.to_json_dict(), out)


def cmd_estimate(graphon, args, out):
    config = EstimateConfig(graphon=graphon, n_values=args.n_values,
                            trials=args.trials, master_seed=args.master_seed,
                            workers=args.workers, mode=args.mode,
                            procedure=args.procedure, budget=args.budget,
                            allow_large=args.allow_large)
    rows = estimate(config)
    if args.output:
        with open(args.output, 'w') as fp:
            write_csv(rows, fp)
    else:
        write_csv(rows, out)


def _compositions(total, parts):
    """Ways to write ``total`` as ``parts`` nonnegative integers, most even
    first.
    """
    found = [c for c in itertools.product(range(total + 1), repeat=parts - 1)
             if sum(c) <= total]
    found = [c + (total - sum(c),) for c in found]
    return sorted(found, key=lambda c: (max(c) - min(c), c))


def _distributions(y, origin):
    """Node counts for the fine blocks, children of a coarse block sharing
    its count.
    """
    children = [[k for k, o in enumerate(origin) if o == block]
                for block in range(len(y))]
    options = [_compositions(amount, len(kids))
               for amount, kids in zip(y, children)]
    for choice in itertools.islice(itertools.product(*options),
                                   MAX_DISTRIBUTIONS):
        fine = [0] * len(origin)
        for kids, parts in zip(children, choice):
            for k, amount in zip(kids, parts):
                fine[k] = amount
        yield fine


def cmd_construct(graphon, args, out):
    skeleton = skeleton_of(graphon)
    y = args.y
    if len(y) != skeleton.node_count:
        raise ValidationError('--y has %d entries for %d blocks'
                              % (len(y), skeleton.node_count))
    reduced = loop_free_reduction(graphon)
    reduced_skeleton = skeleton_of(reduced)
    origin = block_origin(graphon.partition, reduced.partition)
    build = (build_ham_cycle_ky if args.target == CYCLE
             else build_ham_decomposition_ky)

    witness = failure = None
    for fine in _distributions(y, origin):
        try:
            witness = build(reduced_skeleton, fine)
            break
        except (InfeasibleError, NotInX0Error) as error:
            failure = error
    if witness is None:
        raise failure or InfeasibleError('no distribution of y over the '
                                         'reduced blocks works')

    graph = build_complete_partite(skeleton, y)
    if not verify_witness(graph, witness):
        raise OperationError('constructed witness failed verification')
    _print_json(witness.to_json_dict(), out)


def cmd_presets(args, out):
    names = [args.name] if args.name else preset_names()
    documents = [GraphonDocument.from_graphon(get_preset(name), name=name)
                 .to_json_dict() for name in names]
    _print_json(documents[0] if args.name else documents, out)


def cmd_regularity(graphon, args, out):
    symmetric = symmetrize(graphon)
    delta = args.delta
    if delta is None:
        positive = [v for row in symmetric.values for v in row if v]
        if not positive:
            raise ValidationError('the symmetrized graphon is zero')
        delta = min(positive) / 2
    seed = args.seed
    if seed is None:
        seed = get_setting('master_seed')
    graph = sample_undirected(symmetric, args.n, RngSpec(seed, 0))
    rows = degree_regularity_report(graph, delta,
                                    skeleton=skeleton_of(symmetric))
    _print_json([row.to_json_dict() for row in rows], out)


def _configure_logging(verbosity):
    if verbosity:
        logging.basicConfig(
            level=logging.DEBUG if verbosity > 1 else logging.INFO,
            format='%(asctime)s %(name)s %(levelname)s %(message)s')


def main(argv=None, out=None):
    """Run the command line and return the exit code."""
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    _configure_logging(args.verbose)

    try:
        with override_settings():
            configure_from_env()
            if args.cycle_cap is not None:
                configure(cycle_cap=args.cycle_cap)
            if args.command == 'presets':
                cmd_presets(args, out)
                return EXIT_OK
            graphon = _load_graphon(args, parser)
            handler = {
                'analyze': cmd_analyze,
                'estimate': cmd_estimate,
                'construct': cmd_construct,
                'regularity': cmd_regularity,
            }[args.command]
            handler(graphon, args, out)
    except SystemExit as exc:
        return exc.code
    except ParseError as error:
        sys.stderr.write('hamgraphon: cannot read graphon: %s\n' % error)
        return EXIT_PARSE
    except (PreconditionError, CycleCapExceeded) as error:
        sys.stderr.write('hamgraphon: %s\n' % error)
        return EXIT_PRECONDITION
    except (PresetNotFound, ValidationError, ConfigurationError) as error:
        sys.stderr.write('hamgraphon: %s\n' % error)
        return EXIT_USAGE
    return EXIT_OK
