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

"""Run explorers over graph families and collect report rows."""

import dataclasses
from typing import Any, Callable, Dict, List, Mapping, Optional  # noqa
from typing import Sequence, Tuple, Union  # noqa: H301

from oslo_log import log as logging

from advice_lab.adversary import crossing
from advice_lab.adversary import gadgets
from advice_lab.adversary import pendant
from advice_lab.adversary import roles
from advice_lab.adversary import tripling
from advice_lab.agent import simulator
from advice_lab import codecs
from advice_lab.codecs import size as size_codec
from advice_lab import conf
from advice_lab import exception
from advice_lab import explorers
from advice_lab.graph import generators
from advice_lab.graph import portgraph
from advice_lab import harness
from advice_lab.harness import report
from advice_lab.i18n import _
from advice_lab import utils

LOG = logging.getLogger(__name__)


def _int_list(value) -> Tuple[int, ...]:
    if isinstance(value, str):
        return tuple(int(v) for v in value.split(',') if v.strip())
    return tuple(int(v) for v in value)


# Parameter name -> (converter, default); a default of None is required.
FAMILY_PARAMS: Dict[str, Dict[str, Tuple[Callable, Any]]] = {
    harness.RING: {'n': (int, None)},
    harness.BIPARTITE: {'k': (int, None)},
    harness.GHAT: {'m': (int, None)},
    harness.GHATZ: {'m': (int, None), 'p': (int, None), 'z': (_int_list, ())},
    harness.GX: {'n': (int, None), 'seed': (int, 0)},
    harness.GXPRIME: {'n': (int, None), 'seed': (int, 0)},
    harness.GTILDE: {'m': (int, None)},
    harness.RANDOM: {'n': (int, None), 'density': (float, None),
                     'seed': (int, 0)},
}


@dataclasses.dataclass(frozen=True)
class ExperimentSpec:
    family: str
    params: Mapping[str, Any] = dataclasses.field(default_factory=dict)
    oracle: str = explorers.INSTANCE
    algorithm: str = explorers.TREE
    starts: Union[str, Sequence[int]] = harness.ALL_STARTS
    budget: Optional[int] = None
    out: Optional[str] = None
    c: int = 0
    size_encoding: str = codecs.LOGLOG

    def resolved_params(self) -> Dict[str, Any]:
        """Family parameters converted to their types, defaults filled in.

        :raises ExperimentConfigError: for an unknown family, a missing
            or unknown parameter, or an unparsable value
        """
        if self.family not in FAMILY_PARAMS:
            raise exception.ExperimentConfigError(
                reason=_('unknown family %(family)s, expected one of '
                         '%(known)s') % {'family': self.family,
                                         'known': ', '.join(harness.FAMILIES)})
        schema = FAMILY_PARAMS[self.family]
        unknown = sorted(set(self.params) - set(schema))
        if unknown:
            raise exception.ExperimentConfigError(
                reason=_('%(family)s takes no parameter %(names)s') %
                {'family': self.family, 'names': ', '.join(unknown)})
        resolved = {}
        for name, (convert, default) in schema.items():
            if name not in self.params:
                if default is None:
                    raise exception.ExperimentConfigError(
                        reason=_('%(family)s needs parameter %(name)s') %
                        {'family': self.family, 'name': name})
                resolved[name] = default
                continue
            try:
                resolved[name] = convert(self.params[name])
            except (TypeError, ValueError):
                raise exception.ExperimentConfigError(
                    reason=_('bad value %(value)r for %(name)s') %
                    {'value': self.params[name], 'name': name})
        return resolved


@dataclasses.dataclass(frozen=True)
class Instance:
    graph: portgraph.PortGraph
    cycle: Optional[Tuple[int, ...]] = None
    cycle_starts: Optional[Tuple[int, ...]] = None
    gadget_graph: Optional[roles.GadgetGraph] = None


def build_instance(spec: ExperimentSpec) -> Instance:
    """Graph of spec's family with any cycle the construction provides."""
    params = spec.resolved_params()
    try:
        return _BUILDERS[spec.family](**params)
    except exception.ExperimentConfigError:
        raise
    except exception.Invalid as e:
        raise exception.ExperimentConfigError(reason=e.msg)


def _ring(n):
    return Instance(generators.gen_oriented_ring(n), tuple(range(n)))


def _bipartite(k):
    return Instance(generators.gen_complete_bipartite(k),
                    tuple(generators.bipartite_hamiltonian_order(k)))


def _ghat(m):
    ghat = gadgets.build_Ghat(crossing.standard_h(m))
    return Instance(ghat.graph, None, ghat.cycle_nodes, ghat)


def _ghatz(m, p, z):
    h = crossing.standard_h(m)
    z = z or tuple(range(p))
    if len(z) != p:
        raise exception.ExperimentConfigError(
            reason=_('z lists %(count)d nodes but p is %(p)d') %
            {'count': len(z), 'p': p})
    ghatz = gadgets.build_GhatZ(h, z, gadgets.default_xmap(h))
    return Instance(ghatz.graph, None, ghatz.cycle_nodes, ghatz)


def _regular_base(n):
    if n < 8 or n % 4:
        raise exception.ExperimentConfigError(
            reason=_('pendant families need n >= 8 divisible by 4 (received '
                     '%s)') % n)
    return generators.gen_complete_bipartite(n // 4)


def _gx(n, seed):
    base = _regular_base(n)
    x = pendant.random_pendant_ports(base, seed)
    return Instance(pendant.build_Gx(base, x))


def _gxprime(n, seed):
    base = _regular_base(n)
    x = pendant.random_pendant_ports(base, seed)
    return Instance(pendant.build_Gx_prime(base, x),
                    tuple(pendant.gx_prime_cycle(base.node_count)))


def _gtilde(m):
    ghat = gadgets.build_Ghat(crossing.standard_h(m))
    cycle = tripling.hamiltonian_cycle_from_tree(
        ghat, gadgets.gadget_spanning_tree(ghat))
    return Instance(tripling.build_Gtilde(ghat), tuple(cycle),
                    tuple(tripling.tripled_node(y, 0)
                          for y in ghat.cycle_nodes), ghat)


def _random(n, density, seed):
    return Instance(generators.gen_random_connected(n, density, seed))


_BUILDERS: Dict[str, Callable[..., Instance]] = {
    harness.RING: _ring,
    harness.BIPARTITE: _bipartite,
    harness.GHAT: _ghat,
    harness.GHATZ: _ghatz,
    harness.GX: _gx,
    harness.GXPRIME: _gxprime,
    harness.GTILDE: _gtilde,
    harness.RANDOM: _random,
}


def resolve_starts(spec: ExperimentSpec, instance: Instance) -> List[int]:
    if spec.starts == harness.ALL_STARTS:
        return list(instance.graph.nodes())
    if spec.starts == harness.CYCLE_STARTS:
        if instance.cycle_starts is None:
            raise exception.ExperimentConfigError(
                reason=_('family %s has no main cycle') % spec.family)
        return list(instance.cycle_starts)
    starts = [int(s) for s in spec.starts]
    bad = [s for s in starts if not 0 <= s < instance.graph.node_count]
    if bad:
        raise exception.ExperimentConfigError(
            reason=_('starts %(bad)s outside 0..%(last)d') %
            {'bad': bad, 'last': instance.graph.node_count - 1})
    return starts


def make_explorer(spec: ExperimentSpec,
                  instance: Optional[Instance] = None,
                  **kwargs) -> Any:
    if spec.algorithm == explorers.HAMILTONIAN and instance is not None:
        kwargs.setdefault('cycle', instance.cycle)
    if spec.algorithm == explorers.POLY:
        kwargs.setdefault('params', size_codec.SizeAdviceParams(spec.c))
        kwargs.setdefault('size_encoding', spec.size_encoding)
    return explorers.get_explorer(spec.algorithm, spec.oracle, **kwargs)


def bound_holds(explorer, outcome, bound) -> bool:
    if not outcome.completed or bound is None:
        return False
    if explorer.exact_time:
        return outcome.steps_used == bound
    return outcome.steps_used <= bound


@utils.trace
def run_experiment(spec: ExperimentSpec,
                   **explorer_kwargs) -> List[report.ReportRow]:
    """One report row per start, in start order.

    explorer_kwargs are handed to the explorer factory.

    Failures of single runs are logged and reported as rows that neither
    complete nor check their bound.
    """
    instance = build_instance(spec)
    graph = instance.graph
    starts = resolve_starts(spec, instance)
    explorer = make_explorer(spec, instance, **explorer_kwargs)
    budget = spec.budget
    if budget is None:
        budget = conf.CONF.harness.default_budget

    failures = exception.ExceptionChainer()
    shared_advice = None
    rows = []
    for start in starts:
        row = None
        advice = None
        with failures.context(True, 'Run of %s from start %s failed',
                              spec.family, start):
            if spec.oracle == explorers.MAP:
                if shared_advice is None:
                    shared_advice = explorer.advise(graph, None)
                advice = shared_advice
            else:
                advice = explorer.advise(graph, start)
            outcome = simulator.run_strategy(graph, start, explorer, advice,
                                             budget=budget)
            bound = explorer.time_bound(graph.node_count, advice)
            row = report.ReportRow(
                family=spec.family, n=graph.node_count, start=start,
                advice_bits=len(advice), steps_used=outcome.steps_used,
                completed=outcome.completed,
                bound_checked=bound_holds(explorer, outcome, bound),
                bound_value=bound)
        if row is None:
            row = report.ReportRow(
                family=spec.family, n=graph.node_count, start=start,
                advice_bits=len(advice) if advice is not None else 0,
                steps_used=0, completed=False, bound_checked=False,
                bound_value=None)
        rows.append(row)

    if failures:
        LOG.warning('%(failed)d of %(total)d runs failed',
                    {'failed': len(failures), 'total': len(starts)})
    LOG.info('Experiment on %(family)s finished: %(done)d of %(total)d '
             'runs completed',
             {'family': spec.family, 'total': len(rows),
              'done': sum(1 for r in rows if r.completed)})
    return rows
