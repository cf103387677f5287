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

"""Experiment reports."""

import csv
import dataclasses
import io
import sys
from typing import Iterable, List, Optional  # noqa: H301

from oslo_log import log as logging
from oslo_serialization import jsonutils

from advice_lab import conf
from advice_lab import exception
from advice_lab import harness
from advice_lab.i18n import _

LOG = logging.getLogger(__name__)

FIELDS = ('family', 'n', 'start', 'advice_bits', 'steps_used', 'completed',
          'bound_checked', 'bound_value')


@dataclasses.dataclass(frozen=True)
class ReportRow:
    family: str
    n: int
    start: int
    advice_bits: int
    steps_used: int
    completed: bool
    bound_checked: bool
    bound_value: Optional[int]

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)

    def as_csv(self) -> dict:
        """Row for the CSV writer: flags as 1/0, a missing bound empty."""
        row = self.as_dict()
        row['completed'] = int(self.completed)
        row['bound_checked'] = int(self.bound_checked)
        if self.bound_value is None:
            row['bound_value'] = ''
        return row


def format_report(rows: Iterable[ReportRow],
                  fmt: Optional[str] = None) -> str:
    fmt = fmt or conf.CONF.harness.report_format
    rows = list(rows)
    if fmt == harness.CSV:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=FIELDS,
                                lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow(row.as_csv())
        return buffer.getvalue()
    if fmt == harness.JSON:
        return jsonutils.dumps([row.as_dict() for row in rows],
                               sort_keys=True, indent=2) + '\n'
    raise exception.ExperimentConfigError(
        reason=_('unknown report format %s') % fmt)


def emit_report(rows: List[ReportRow], path: Optional[str] = None,
                fmt: Optional[str] = None) -> None:
    """Write rows to path, or to stdout for None or ``-``.

    :raises ExperimentConfigError: when path cannot be written
    """
    text = format_report(rows, fmt)
    if path in (None, '-'):
        sys.stdout.write(text)
        return
    try:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    except OSError as e:
        raise exception.ExperimentConfigError(
            reason=_('cannot write report %(path)s: %(err)s') %
            {'path': path, 'err': e})
    LOG.info('Wrote %(count)d report rows to %(path)s',
             {'count': len(rows), 'path': path})
