/* Copyright 2026 The prok Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef PROK_RESOLUTION_HPP
#define PROK_RESOLUTION_HPP

#include "prok/fpmod.hpp"

namespace prok {

// The start of a free resolution ... -> R^ranks[1] -> R^ranks[0] -> M -> 0
// built by iterated syzygies. maps[l] holds the columns of the
// differential R^ranks[l+1] -> R^ranks[l], so maps[0] is the presentation
// matrix of M and exactness at every interior level holds by
// construction.
struct FreeResolution {
    FPRingPtr ring;
    std::vector<std::size_t> ranks;
    std::vector<std::vector<ModVec>> maps;
};

FreeResolution free_resolution(const FPModule& M, unsigned length);

FPModule tor(unsigned i, const FPModule& M, const FPModule& N);

// The map Tor_i(source of p, N) -> Tor_i(target of p, N) induced by a
// module map p, computed by lifting p to a chain map between the two
// resolutions.
ModuleMap tor_transition(unsigned i, const ModuleMap& p, const FPModule& N);

// The map Tor_i(M, source of q) -> Tor_i(M, target of q) induced in the
// second slot, resolving M once.
ModuleMap tor_second_transition(unsigned i, const FPModule& M,
                                const ModuleMap& q);

}  // namespace prok

#endif  // PROK_RESOLUTION_HPP
