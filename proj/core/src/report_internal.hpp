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
// Internal JSON builders shared by the report renderers and the session
// runner.  Kept out of the installed headers so the vendored json library
// stays a private dependency.
#ifndef PROK_REPORT_INTERNAL_HPP_
#define PROK_REPORT_INTERNAL_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "prok/abgrp.hpp"
#include "prok/excision.hpp"
#include "prok/prosys.hpp"
#include "prok/realize.hpp"

namespace prok::detail {

using ordered_json = nlohmann::ordered_json;

// Integers render as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise, so replays stay byte-stable.
ordered_json json_int(const mpz_class& z);

ordered_json json_group(const GroupInvariants& g);
ordered_json json_realized(const RealizedModule& R);
ordered_json json_certificate(const ProZeroCertificate& c);
ordered_json json_pro_iso(const ProIsoCertificate& c);
ordered_json json_criteria(const CriteriaReport& r);
ordered_json json_snf(const std::vector<mpz_class>& diagonal);
ordered_json json_validation(const ValidationOutcome& v);
ordered_json json_conductor(const ConductorResult& c);
ordered_json json_gw(const GWModule& g);
ordered_json json_swan(const SwanSequence& s);
ordered_json json_mennicke(const MennickeMatrix& m);
ordered_json json_artin_rees(const ArtinReesWitness& w);
ordered_json json_reduction(const ReductionIndex& r);

std::string status_string(ProZeroCertificate::Status s);

}  // namespace prok::detail

#endif  // PROK_REPORT_INTERNAL_HPP_
