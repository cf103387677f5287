#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

"""advice-lab command line.

::

    advice-lab gen FAMILY [key=value ...] [--out FILE]
    advice-lab advise --graph FILE [--algo A] [--oracle O] [--start N]
    advice-lab explore --graph FILE [--start N|all|cycle] [--advice FILE]
    advice-lab adversary witness|crossing|nonrep --m M --sequence P,P,...
    advice-lab collide [--bits K] SIZE [SIZE ...]
    advice-lab experiment FAMILY [key=value ...] [--out FILE]

Exit status is 0 on success, 2 for a configuration error and 3 when a
run misses its guarantee.
"""

import dataclasses
import sys

from oslo_config import cfg
from oslo_log import log as logging

from advice_lab.adversary import blocks
from advice_lab.adversary import crossing
from advice_lab.adversary import gadgets
from advice_lab.adversary import roles
from advice_lab.agent import simulator
from advice_lab import codecs
from advice_lab.codecs import bits as advice_bits
from advice_lab import conf as advice_conf
from advice_lab import exception
from advice_lab import explorers
from advice_lab.graph import graphio
from advice_lab import harness
from advice_lab.harness import collide
from advice_lab.harness import experiment
from advice_lab.harness import report
from advice_lab.i18n import _
from advice_lab import version

LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_FAILED = 3


def _explorer_options(parser, starts=True):
    parser.add_argument('--algo', default=explorers.TREE,
                        choices=explorers.ALGORITHMS)
    parser.add_argument('--oracle', default=explorers.INSTANCE,
                        choices=explorers.ORACLES)
    parser.add_argument('--c', type=int, default=0,
                        help='Constant c of the size advice.')
    parser.add_argument('--size-encoding', default=codecs.LOGLOG,
                        choices=codecs.SIZE_ENCODINGS)
    if starts:
        parser.add_argument('--start', default=harness.ALL_STARTS,
                            help='Start node, "all" or "cycle".')
        parser.add_argument('--budget', type=int)


def add_command_parsers(subparsers):
    parser = subparsers.add_parser('gen', help='Generate a graph.')
    parser.add_argument('family', choices=harness.FAMILIES)
    parser.add_argument('params', nargs='*', metavar='key=value')
    parser.add_argument('--seed', type=int)
    parser.add_argument('--out')
    parser.set_defaults(action=do_gen)

    parser = subparsers.add_parser('advise', help='Compute advice.')
    parser.add_argument('--graph', required=True)
    _explorer_options(parser, starts=False)
    parser.add_argument('--start', type=int, default=0)
    parser.add_argument('--out')
    parser.set_defaults(action=do_advise)

    parser = subparsers.add_parser('explore', help='Explore a graph file.')
    parser.add_argument('--graph', required=True)
    parser.add_argument('--advice', help='Advice file used for every start.')
    _explorer_options(parser)
    parser.add_argument('--out')
    parser.set_defaults(action=do_explore)

    parser = subparsers.add_parser('adversary',
                                   help='Run the lower bound adversary.')
    parser.add_argument('mode', choices=('witness', 'crossing', 'nonrep'))
    parser.add_argument('--m', type=int, required=True)
    parser.add_argument('--sequence', default='',
                        help='Comma separated ports.')
    parser.add_argument('--sequence-file')
    parser.add_argument('--target', type=int, default=0,
                        help='Node of H to hide (crossing).')
    parser.add_argument('--start', type=int, default=0,
                        help='Main cycle start (nonrep).')
    parser.set_defaults(action=do_adversary)

    parser = subparsers.add_parser('collide',
                                   help='Advice collision on oriented rings.')
    parser.add_argument('sizes', nargs='+', type=int)
    parser.add_argument('--bits', type=int, default=2)
    parser.set_defaults(action=do_collide)

    parser = subparsers.add_parser('experiment', help='Run an experiment.')
    parser.add_argument('family', choices=harness.FAMILIES)
    parser.add_argument('params', nargs='*', metavar='key=value')
    _explorer_options(parser)
    parser.add_argument('--seed', type=int)
    parser.add_argument('--out')
    parser.add_argument('--format', choices=(harness.CSV, harness.JSON))
    parser.set_defaults(action=do_experiment)


command_opt = cfg.SubCommandOpt('command',
                                title='Commands',
                                handler=add_command_parsers,
                                help='Available commands')


def _parse_params(args):
    params = {}
    for item in args.params:
        key, sep, value = item.partition('=')
        if not sep or not key:
            raise exception.ExperimentConfigError(
                reason=_('parameter %s is not key=value') % item)
        params[key] = value
    if args.seed is not None:
        params['seed'] = args.seed
    return params


def _parse_starts(text):
    if text in (harness.ALL_STARTS, harness.CYCLE_STARTS):
        return text
    try:
        return (int(text),)
    except ValueError:
        raise exception.ExperimentConfigError(
            reason=_('start must be a node, "all" or "cycle", not %s') %
            text)


def _explorer_kwargs(conf):
    return {'cap': conf.uxs.feasibility_cap,
            'cache_dir': conf.uxs.cache_dir,
            'lock_path': conf.uxs.lock_path,
            'node_limit': conf.uxs.search_node_limit}


def _spec(args, family, params):
    return experiment.ExperimentSpec(
        family=family, params=params, oracle=args.oracle,
        algorithm=args.algo, starts=_parse_starts(args.start),
        budget=getattr(args, 'budget', None), out=args.out, c=args.c,
        size_encoding=args.size_encoding)


def _status(rows):
    if all(row.completed and row.bound_checked for row in rows):
        return EXIT_OK
    return EXIT_FAILED


def do_gen(conf, args):
    spec = experiment.ExperimentSpec(args.family, _parse_params(args))
    instance = experiment.build_instance(spec)
    gadget_graph = instance.gadget_graph
    if args.out and gadget_graph and gadget_graph.graph == instance.graph:
        roles.write_gadget_graph(gadget_graph, args.out)
    elif args.out:
        graphio.save_graph(instance.graph, args.out)
    else:
        sys.stdout.write(graphio.serialize(instance.graph))
    return EXIT_OK


def _load_graph(path):
    try:
        return graphio.load_graph(path)
    except OSError as e:
        raise exception.ExperimentConfigError(
            reason=_('cannot read graph %(path)s: %(err)s') %
            {'path': path, 'err': e})


def do_advise(conf, args):
    graph = _load_graph(args.graph)
    spec = _spec(args, 'file', {})
    explorer = experiment.make_explorer(spec, **_explorer_kwargs(conf))
    start = None if args.oracle == explorers.MAP else args.start
    advice = explorer.advise(graph, start)
    if args.out:
        advice_bits.write_advice(advice, args.out)
    else:
        sys.stdout.write('%s\n' % advice)
    LOG.info('Advice has %d bits', len(advice))
    return EXIT_OK


def do_explore(conf, args):
    graph = _load_graph(args.graph)
    spec = _spec(args, 'file', {})
    explorer = experiment.make_explorer(spec, **_explorer_kwargs(conf))
    if spec.starts == harness.ALL_STARTS:
        starts = list(graph.nodes())
    elif spec.starts == harness.CYCLE_STARTS:
        try:
            starts = roles.read_gadget_roles(args.graph)['cycle']
        except OSError:
            raise exception.ExperimentConfigError(
                reason=_('%s has no role file') % args.graph)
    else:
        starts = list(spec.starts)
    fixed = advice_bits.read_advice(args.advice) if args.advice else None
    budget = args.budget
    if budget is None:
        budget = conf.harness.default_budget

    rows = []
    for start in starts:
        advice = fixed
        if advice is None:
            advice = explorer.advise(
                graph, None if args.oracle == explorers.MAP else start)
        outcome = simulator.run_strategy(graph, start, explorer, advice,
                                         budget=budget)
        bound = explorer.time_bound(graph.node_count, advice)
        rows.append(report.ReportRow(
            family='file', n=graph.node_count, start=start,
            advice_bits=len(advice), steps_used=outcome.steps_used,
            completed=outcome.completed,
            bound_checked=experiment.bound_holds(explorer, outcome, bound),
            bound_value=bound))
    report.emit_report(rows, args.out, conf.harness.report_format)
    return _status(rows)


def _read_sequence(args):
    text = args.sequence
    if args.sequence_file:
        with open(args.sequence_file, encoding='utf-8') as f:
            text = f.read()
    try:
        return simulator.as_port_sequence(
            int(p) for p in text.replace(',', ' ').split())
    except ValueError:
        raise exception.ExperimentConfigError(
            reason=_('sequence must list integer ports'))


def do_adversary(conf, args):
    sequence = _read_sequence(args)
    h = crossing.standard_h(args.m)
    if args.mode == 'crossing':
        hidden = crossing.solve_crossing_vector(sequence, args.target, h)
        if hidden is None:
            sys.stdout.write('no vector\n')
            return EXIT_FAILED
        hx = crossing.build_Hx(h, hidden.x)
        outcome = simulator.run_port_sequence(hx.graph, 0, sequence,
                                              keep_path=True)
        hidden_node = hx.copy_node(0, hidden.copy, args.target)
        sys.stdout.write('x=%s copy=%d node=%d\n' % (
            ''.join(str(b) for b in hidden.x.bits), hidden.copy,
            hidden_node))
        return EXIT_OK if hidden_node not in outcome.path else EXIT_FAILED

    if args.mode == 'nonrep':
        ghat = gadgets.build_Ghat(h)
        decomposition = blocks.decompose_blocks(sequence, args.m)
        located = blocks.locate_gadgets(ghat, args.start, decomposition)
        rewritten = blocks.make_non_repetitive(decomposition, located)
        sys.stdout.write('%s\n' % ','.join(
            str(p) for p in rewritten.reconcatenate()))
        return EXIT_OK

    try:
        witness = blocks.lower_bound_witness(sequence, args.m, h)
    except exception.LowerBoundViolated as e:
        LOG.error('%s', e.msg)
        return EXIT_FAILED
    if witness is None:
        sys.stdout.write('no witness\n')
    else:
        sys.stdout.write('start=%d node=%d gadget=%d copy=%d\n' % (
            witness.start, witness.node, witness.gadget, witness.copy))
    return EXIT_OK


def do_collide(conf, args):
    result = collide.pigeonhole_demo(args.bits, args.sizes)
    if result is None:
        sys.stdout.write('no collision\n')
        return EXIT_OK
    small, large = result.pair
    sys.stdout.write(
        'rings %d and %d share advice %s: %d/%d and %d/%d nodes visited\n' %
        (args.sizes[small], args.sizes[large], result.advice,
         result.smaller.visited_count, result.smaller.node_count,
         result.larger.visited_count, result.larger.node_count))
    return EXIT_OK


def do_experiment(conf, args):
    spec = _spec(args, args.family, _parse_params(args))
    if spec.budget is None and conf.harness.default_budget is not None:
        spec = dataclasses.replace(spec,
                                   budget=conf.harness.default_budget)
    rows = experiment.run_experiment(spec, **_explorer_kwargs(conf))
    report.emit_report(rows, args.out,
                       args.format or conf.harness.report_format)
    return _status(rows)


def main(argv=None):
    conf = cfg.ConfigOpts()
    advice_conf.register_opts(conf)
    logging.register_options(conf)
    conf.register_cli_opt(command_opt)
    conf(sys.argv[1:] if argv is None else argv, project='advice-lab',
         version=version.__version__)
    logging.setup(conf, 'advice-lab')

    args = conf.command
    try:
        return args.action(conf, args)
    except (exception.Invalid, exception.FeasibilityCapExceeded) as e:
        sys.stderr.write('%s\n' % e.msg)
        return EXIT_CONFIG
    except exception.AdviceLabException as e:
        sys.stderr.write('%s\n' % e.msg)
        return EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
