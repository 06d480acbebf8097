// Copyright 2026 The prok Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROK_BUILTINS_HPP_
#define PROK_BUILTINS_HPP_

#include <string>
#include <vector>

#include "prok/excision.hpp"

namespace prok {

// The cuspidal curve mapping to its normalization: QQ[x,y]/(y^2 - x^3)
// into QQ[t] by x -> t^2, y -> t^3, with the ideal (x, y) and module
// generators {1, t}.
ExcisionSituation builtin_cusp();

// The nodal curve into its normalization: QQ[x,y]/(xy) into
// QQ[u,e]/(e^2 - e) by x -> u e, y -> u - u e, ideal (x, y), module
// generators {1, e}.
ExcisionSituation builtin_node();

// The order ZZ[p zeta_p] inside ZZ[zeta_p], presented on the variables
// u_i -> p z^i with the ideal (p, u_1, ..., u_{p-2}) and module
// generators {1, z, ..., z^{p-2}}.  Requires an odd prime.
ExcisionSituation builtin_swan(unsigned p);

// The numerical semigroup ring generated by t^n, ..., t^{2n-1} inside
// QQ[t]; its defining ideal is computed at construction.  The corner
// ring B/IB is QQ[t]/(t^n).
ExcisionSituation builtin_truncated(unsigned n);

// Lookup by name: "cusp", "node", "swan(p)", "truncated(n)".
ExcisionSituation builtin_situation(const std::string& name);

std::vector<std::string> builtin_names();

}  // namespace prok

#endif  // PROK_BUILTINS_HPP_
