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
#
"""Utilities and helper functions."""

import functools
import inspect
import logging as py_logging
from typing import Callable

from oslo_log import log as logging
from oslo_utils import timeutils

from advice_lab.i18n import _


def floor_log2(value: int) -> int:
    """Exact floor(log2(value)) for a positive integer."""
    if value < 1:
        raise ValueError(_('floor_log2 needs a positive integer '
                           '(received: %s)') % value)
    return value.bit_length() - 1


def ceil_log2(value: int) -> int:
    """Exact ceil(log2(value)) for a positive integer, 0 for 1."""
    if value < 1:
        raise ValueError(_('ceil_log2 needs a positive integer '
                           '(received: %s)') % value)
    return (value - 1).bit_length()


def port_width(node_count: int) -> int:
    """Bits per port field in advice for a graph with node_count nodes.

    Every port of a simple graph is smaller than the node count, so
    ceil(log2(n)) bits hold any of them.
    """
    return ceil_log2(max(node_count, 1))


def trace(f: Callable) -> Callable:
    """Log calls to f at DEBUG with arguments, result and elapsed time.

    Records go to the logger of the module defining f.  Apply it as the
    outermost decorator so the name logged is that of f.
    """
    logger = logging.getLogger(f.__module__)
    func_name = f.__qualname__

    @functools.wraps(f)
    def trace_logging_wrapper(*args, **kwargs):
        if not logger.isEnabledFor(py_logging.DEBUG):
            return f(*args, **kwargs)

        all_args = inspect.getcallargs(f, *args, **kwargs)
        logger.debug('==> %(func)s: call %(all_args).200r',
                     {'func': func_name, 'all_args': all_args})

        watch = timeutils.StopWatch()
        watch.start()
        try:
            result = f(*args, **kwargs)
        except Exception as exc:
            logger.debug('<== %(func)s: exception (%(time)dms) %(exc)r',
                         {'func': func_name,
                          'time': watch.elapsed() * 1000,
                          'exc': exc})
            raise

        logger.debug('<== %(func)s: return (%(time)dms) %(result).200r',
                     {'func': func_name,
                      'time': watch.elapsed() * 1000,
                      'result': result})
        return result
    return trace_logging_wrapper
