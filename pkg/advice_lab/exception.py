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

"""Exceptions for the advice lab."""

import traceback
from typing import Iterable, List  # noqa: H301

from oslo_log import log as logging

from advice_lab.i18n import _


LOG = logging.getLogger(__name__)


class AdviceLabException(Exception):
    """Base advice lab exception

    To correctly use this class, inherit from it and define
    a 'message' property. That message will get printf'd
    with the keyword arguments provided to the constructor.
    """
    message = _("An unknown exception occurred.")
    code = 500

    def __init__(self, message=None, **kwargs):
        self.kwargs = kwargs

        if 'code' not in self.kwargs:
            try:
                self.kwargs['code'] = self.code
            except AttributeError:
                pass

        if not message:
            try:
                message = self.message % kwargs

            except Exception:
                # kwargs doesn't match a variable in the message
                # log the issue and the kwargs
                LOG.exception("Exception in string format operation. "
                              "msg='%s'", self.message)
                for name, value in kwargs.items():
                    LOG.error("%(name)s: %(value)s", {'name': name,
                                                      'value': value})

                # at least get the core message out if something happened
                message = self.message

        # Put the message in 'msg' so that we can access it.  If we have it in
        # message it will be overshadowed by the class' message attribute
        self.msg = message
        super(AdviceLabException, self).__init__(message)


class Invalid(AdviceLabException):
    message = _("Unacceptable parameters.")
    code = 400


# Cannot be templated as the error syntax varies.
# msg needs to be constructed when raised.
class InvalidParameterValue(Invalid):
    message = _("%(err)s")


class InvalidGraph(Invalid):
    message = _("Invalid port-numbered graph: %(reason)s")


class NodeOutOfRange(InvalidGraph):
    message = _("Node %(node)s is outside 0..%(node_count)s-1.")


class PortGap(InvalidGraph):
    message = _("Ports at node %(node)s are %(ports)s, expected 0..%(last)s.")


class PortDuplicate(InvalidGraph):
    message = _("Port %(port)s is used twice at node %(node)s.")


class AsymmetricEdge(InvalidGraph):
    message = _("Port %(port)s at node %(node)s leads to %(neighbor)s "
                "port %(reverse)s, which does not lead back.")


class SelfLoop(InvalidGraph):
    message = _("Self-loop at node %(node)s (port %(port)s).")


class ParallelEdge(InvalidGraph):
    message = _("Parallel edges between nodes %(u)s and %(v)s.")


class Disconnected(InvalidGraph):
    message = _("Graph is not connected: node %(node)s is unreachable "
                "from node 0.")


class PortOutOfRange(Invalid):
    message = _("Port %(port)s does not exist at node %(node)s "
                "of degree %(degree)s.")


class GraphParseError(Invalid):
    message = _("Line %(line)s: %(reason)s")


class InfeasibleDensity(Invalid):
    message = _("Edge density %(density)s gives %(edges)s edges for "
                "%(node_count)s nodes; need between %(low)s and %(high)s.")


class InvalidAdvice(Invalid):
    message = _("Malformed advice: %(reason)s")


class MalformedShape(InvalidAdvice):
    message = _("Tree shape is not a valid walk at bit %(position)s.")


class TruncatedPorts(InvalidAdvice):
    message = _("Advice ends after %(length)s bits, %(needed)s bits "
                "are required.")


class NotASpanningTree(Invalid):
    message = _("Edge set is not a spanning tree: %(reason)s")


class NotHamiltonianCycle(Invalid):
    message = _("Node sequence is not a hamiltonian cycle: %(reason)s")


class StrategyPortOutOfRange(AdviceLabException):
    message = _("Strategy chose port %(port)s at step %(step)s on a node "
                "of degree %(degree)s.")


class FeasibilityCapExceeded(AdviceLabException):
    message = _("Size bound %(bound)s exceeds the certification cap "
                "%(cap)s.")


class ZeroVector(Invalid):
    message = _("Crossing vector of length %(length)s must not be zero.")


class MalformedSequence(Invalid):
    message = _("Port sequence breaks the gadget block structure at "
                "position %(position)s: %(reason)s")


class InfeasibleWalk(Invalid):
    message = _("Port %(port)s at step %(step)s is not available "
                "(degree %(degree)s).")


class DegreeExceedsThree(Invalid):
    message = _("Node %(node)s has degree %(degree)s in the spanning tree.")


class LowerBoundViolated(AdviceLabException):
    message = _("Sequence of length %(length)s defeats no start although "
                "it is shorter than %(bound)s.")


class ExperimentConfigError(Invalid):
    message = _("Invalid experiment: %(reason)s")


class ExceptionChainer(AdviceLabException):
    """Failures collected over a series of runs.

    ``with chainer.context(True, msg, *args):`` stores any exception raised
    in the block, logs msg as a warning and lets the series go on.  With
    False the exception is stored and propagates.
    """
    def __init__(self, *args, **kwargs):
        self._exceptions: List[tuple] = []
        self._catch_exception = False
        self._exc_msg = ''
        self._exc_msg_args: list = []
        super(ExceptionChainer, self).__init__(*args, **kwargs)

    def __repr__(self):
        return '\n'.join(
            '\nChained Exception #%d\n\t%s' % (
                number,
                ''.join(traceback.format_exception(*e)).replace('\n', '\n\t'))
            for number, e in enumerate(self._exceptions, 1))

    __str__ = __repr__

    def __bool__(self) -> bool:
        return bool(self._exceptions)

    def __len__(self) -> int:
        return len(self._exceptions)

    @property
    def exceptions(self) -> List[BaseException]:
        return [exc_val for _t, exc_val, _tb in self._exceptions]

    def add_exception(self, exc_type, exc_val, exc_tb) -> None:
        self._exceptions.append((exc_type, exc_val, exc_tb))

    def context(self, catch_exception: bool, msg: str = '',
                *msg_args: Iterable) -> 'ExceptionChainer':
        self._catch_exception = catch_exception
        self._exc_msg = msg
        self._exc_msg_args = list(msg_args)
        return self

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if exc_type is None:
            return False
        self.add_exception(exc_type, exc_val, exc_tb)
        if self._exc_msg:
            LOG.warning(self._exc_msg, *self._exc_msg_args)
        return self._catch_exception
