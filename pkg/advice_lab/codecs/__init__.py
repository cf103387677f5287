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
"""Advice encodings.

All advice is a finite bit string.  Integer fields are written most
significant bit first.
"""

# Width of the node count header that opens tree and hamiltonian advice.
HEADER_BITS = 32

LOGLOG = 'loglog'
EXPLICIT = 'explicit'
SIZE_ENCODINGS = (LOGLOG, EXPLICIT)
