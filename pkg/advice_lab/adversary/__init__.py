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
"""Graph families on which short advice cannot buy fast exploration.

Every construction starts from H = K_{m/2,m/2}, whose node ids follow its
hamiltonian order, and the hamiltonian path T = v_1 ... v_m of H.
"""

# Port at a main cycle node leading to its gadget when the cycle has
# three or more nodes.
GATEWAY_PORT = 2

