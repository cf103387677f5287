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
"""Port-numbered anonymous graphs.

Nodes carry internal integer ids 0..n-1 used only to build, store and
check graphs.  Agents never see them: the simulator hands strategies
degrees and entry ports only.
"""

GRAPH_FORMAT_VERSION = 1

# Ports of the oriented ring.
CLOCKWISE = 0
COUNTER_CLOCKWISE = 1
