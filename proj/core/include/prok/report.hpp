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
// Human-readable renderers for computation results.  Each returns one or
// a few lines of plain text; the JSON forms live behind the session
// runner and share the same underlying data.
#ifndef PROK_REPORT_HPP_
#define PROK_REPORT_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "prok/excision.hpp"
#include "prok/prosys.hpp"

namespace prok {

std::string render_validation(const ValidationOutcome& v);
std::string render_gw(const GWModule& g);
std::string render_conductor(const ConductorResult& c);
std::string render_swan(const SwanSequence& s);
std::string render_mennicke(const MennickeMatrix& m);
std::string render_certificate(const ProZeroCertificate& c);
std::string render_pro_iso(const ProIsoCertificate& c);
std::string render_criteria(const CriteriaReport& r);
std::string render_artin_rees(const ArtinReesWitness& w);
std::string render_reduction(const ReductionIndex& r);
std::string render_snf(const std::vector<mpz_class>& diagonal);

}  // namespace prok

#endif  // PROK_REPORT_HPP_
