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
// Command line entry point: reads a session script from a file, --eval
// text, or stdin, runs it, and prints the report.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prok/session.hpp"

namespace {

bool parse_pro_budget(const std::string& text, unsigned& levels, unsigned& rmax) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    try {
        unsigned long s = std::stoul(text.substr(0, colon));
        unsigned long r = std::stoul(text.substr(colon + 1));
        if (s == 0 || r == 0 || s > 64 || r > 4096) return false;
        levels = static_cast<unsigned>(s);
        rmax = static_cast<unsigned>(r);
        return true;
    } catch (...) {
        return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prok: certified pro excision computations"};

    std::string file;
    std::vector<std::string> evals;
    std::string out_path;
    std::string pro_budget;
    std::string builtin;
    prok::SessionOptions opts;
    std::uint64_t groebner = 0;
    bool no_timing = false;

    app.add_option("file", file, "session script (omit to read stdin)");
    app.add_option("-e,--eval", evals, "statements to run, in order");
    app.add_flag("--json", opts.json, "emit the JSON report");
    app.add_option("--out", out_path, "write the report to a file");
    app.add_flag("--no-timing", no_timing, "omit timings from the report");
    app.add_option("--budget-groebner", groebner,
                   "pair reduction budget for Groebner runs");
    app.add_option("--budget-pro", pro_budget,
                   "default pro budget as S:R (levels:transition bound)");
    app.add_option("--builtin", builtin,
                   "bind this builtin situation as E before the script runs");

    CLI11_PARSE(app, argc, argv);

    opts.timing = !no_timing;
    opts.groebner_budget = groebner;
    opts.builtin = builtin;
    if (!pro_budget.empty() &&
        !parse_pro_budget(pro_budget, opts.pro_levels, opts.pro_rmax)) {
        std::cerr << "error: --budget-pro expects S:R with both positive\n";
        return 3;
    }

    std::string source;
    if (!evals.empty()) {
        for (const auto& e : evals) {
            source += e;
            source += '\n';
        }
        if (!file.empty()) {
            std::cerr << "error: give either a file or --eval, not both\n";
            return 3;
        }
    } else if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot open '" << file << "'\n";
            return 3;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        source = ss.str();
    } else {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        source = ss.str();
    }

    prok::SessionResult result;
    try {
        result = prok::run_session(source, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 3;
        }
        out << result.output;
    } else {
        std::cout << result.output;
    }
    return result.exit_code;
}
