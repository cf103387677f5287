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

import io
import os
from unittest import mock

from oslo_serialization import jsonutils

from advice_lab import exception
from advice_lab import harness
from advice_lab.harness import report
from advice_lab.tests import base

HEADER = ('family,n,start,advice_bits,steps_used,completed,bound_checked,'
          'bound_value\n')


def _rows():
    return [report.ReportRow('ring', 4, 0, 50, 6, True, True, 6),
            report.ReportRow('ring', 4, 1, 0, 0, False, False, None)]


class FormatReportTestCase(base.TestCase):

    def test_csv(self):
        self.assertEqual(HEADER + 'ring,4,0,50,6,1,1,6\n'
                         'ring,4,1,0,0,0,0,\n',
                         report.format_report(_rows(), harness.CSV))

    def test_empty_csv(self):
        self.assertEqual(HEADER, report.format_report([], harness.CSV))

    def test_json(self):
        text = report.format_report(_rows(), harness.JSON)
        loaded = jsonutils.loads(text)
        self.assertEqual(2, len(loaded))
        self.assertEqual(_rows()[0].as_dict(), loaded[0])
        self.assertIsNone(loaded[1]['bound_value'])

    def test_format_from_config(self):
        self.config.config(report_format='json', group='harness')
        self.assertTrue(report.format_report([]).startswith('['))

    def test_unknown_format(self):
        self.assertRaises(exception.ExperimentConfigError,
                          report.format_report, [], 'xml')


class EmitReportTestCase(base.TestCase):

    def test_file(self):
        path = os.path.join(self.cache_dir, 'report.csv')
        report.emit_report(_rows(), path, harness.CSV)
        with open(path) as f:
            lines = f.readlines()
        self.assertEqual(3, len(lines))
        self.assertEqual(HEADER, lines[0])

    def test_rerun_is_identical(self):
        first = os.path.join(self.cache_dir, 'first.csv')
        second = os.path.join(self.cache_dir, 'second.csv')
        report.emit_report(_rows(), first, harness.CSV)
        report.emit_report(_rows(), second, harness.CSV)
        with open(first, 'rb') as f1, open(second, 'rb') as f2:
            self.assertEqual(f1.read(), f2.read())

    @mock.patch('sys.stdout', new_callable=io.StringIO)
    def test_stdout(self, mock_stdout):
        report.emit_report([], '-', harness.CSV)
        self.assertEqual(HEADER, mock_stdout.getvalue())

    def test_unwritable_path(self):
        path = os.path.join(self.cache_dir, 'missing', 'report.csv')
        exc = self.assertRaises(exception.ExperimentConfigError,
                                report.emit_report, _rows(), path,
                                harness.CSV)
        self.assertIn(path, str(exc))
