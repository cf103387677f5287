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

RING = 'ring'
BIPARTITE = 'bipartite'
GHAT = 'ghat'
GHATZ = 'ghatz'
GX = 'gx'
GXPRIME = 'gxprime'
GTILDE = 'gtilde'
RANDOM = 'random'

FAMILIES = (RING, BIPARTITE, GHAT, GHATZ, GX, GXPRIME, GTILDE, RANDOM)

ALL_STARTS = 'all'
CYCLE_STARTS = 'cycle'

CSV = 'csv'
JSON = 'json'
