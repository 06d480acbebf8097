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
// Executes a session script: declarations bind names, commands run
// computations and append to the report. Certification failures are
// recorded and execution continues; input errors stop the session.
#ifndef PROK_SESSION_HPP_
#define PROK_SESSION_HPP_

#include <cstdint>
#include <string>

namespace prok {

struct SessionOptions {
    bool json = false;
    bool timing = true;
    std::uint64_t groebner_budget = 0;  // 0 keeps the ambient default
    unsigned pro_levels = 3;            // default S for prozero
    unsigned pro_rmax = 12;             // default r_max for prozero
    std::string builtin;                // bind this builtin as situation E
};

// exit_code: 0 all commands certified, 2 some certification failed or a
// budget ran out, 3 the input was rejected.
struct SessionResult {
    std::string output;
    int exit_code = 0;
};

SessionResult run_session(const std::string& source,
                          const SessionOptions& opts = {});

}  // namespace prok

#endif  // PROK_SESSION_HPP_
