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
#ifndef PROK_ERRORS_HPP
#define PROK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prok {

// Base class for every error the library raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing elements of different rings, wrong variable counts, etc.
struct RingMismatchError : Error {
    explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

// A computation exceeded its configured budget. Budgets are hard errors,
// never silent truncation.
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// Invalid mathematical input (non-prime modulus, relation not mapping to
// zero under a claimed hom, ideal not contained where required, ...).
struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

// A requested certification failed with a structured witness; the message
// carries the witness description.
struct CertificationError : Error {
    explicit CertificationError(const std::string& msg) : Error(msg) {}
};

// Session text could not be parsed; carries line/column.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

}  // namespace prok

#endif  // PROK_ERRORS_HPP
