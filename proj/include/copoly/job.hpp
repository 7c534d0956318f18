#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "copoly/cauchy.hpp"
#include "copoly/copolynomial.hpp"
#include "copoly/diff_operator.hpp"
#include "copoly/laplace.hpp"
#include "copoly/polynomial.hpp"

namespace copoly::job {

// Literal parsers shared by the CLI and the bindings. Each accepts the JSON
// forms documented in the README and throws ParseError on malformed input.
RingSpec parse_ring(const nlohmann::json& j, bool unsafe_rings = false);
Copolynomial parse_copolynomial(const nlohmann::json& j, const RingSpec& ring);
DiffOperator parse_operator(const nlohmann::json& j, const RingSpec& ring);
Polynomial parse_polynomial(const nlohmann::json& j, const RingSpec& ring);

// Canonical re-serialization of an object literal (values normalized, shapes
// validated); parsing the result yields an equivalent object.
nlohmann::json normalize_literal(const nlohmann::json& j, const RingSpec& ring);

struct MomentRow {
    MultiIndex alpha;
    std::optional<std::size_t> k;
    std::string value;
};

struct RunResult {
    int exit_code = 0;
    std::string output; // exact bytes written to stdout
};

struct JobOverrides {
    std::optional<unsigned> degree;
    std::optional<std::size_t> kmax;
    std::optional<std::string> output;
    bool unsafe_rings = false;
};

// Parses and executes one job document; never throws, errors become exit
// codes (1 parse, 2 divisibility, 3 hypothesis/invertibility/capability,
// 4 truncation) with a JSON error report as output. Output bytes are a
// deterministic function of the job document and overrides.
RunResult run_job(const nlohmann::json& job, const JobOverrides& overrides = {});
RunResult run_job_text(const std::string& text, const JobOverrides& overrides = {});
RunResult run_job_file(const std::string& path, const JobOverrides& overrides = {});

struct SuiteEntry {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::vector<SuiteEntry> entries;
    double seconds = 0.0;
    bool all_passed() const;
};

// Runs every "*.json" job under dir, comparing stdout bytes against the
// sibling "<name>.expected" file and the exit code against "<name>.exit"
// (default 0).
SuiteReport run_suite(const std::string& dir, const JobOverrides& overrides = {});

} // namespace copoly::job
