#include "copoly/job.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace copoly::job {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError("missing field '" + key + "'");
    return *it;
}

std::string require_string(const json& j, const std::string& key) {
    const json& v = require_field(j, key);
    if (!v.is_string()) throw ParseError("field '" + key + "' must be a string");
    return v.get<std::string>();
}

MultiIndex parse_alpha(const json& j) {
    if (!j.is_array()) throw ParseError("'alpha' must be an array of nonnegative integers");
    std::vector<unsigned> e;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0) {
            throw ParseError("'alpha' must be an array of nonnegative integers");
        }
        e.push_back(x.get<unsigned>());
    }
    if (e.empty()) throw ParseError("'alpha' must be nonempty");
    return MultiIndex(std::move(e));
}

json alpha_to_json(const MultiIndex& alpha) {
    json a = json::array();
    for (unsigned x : alpha.exponents()) a.push_back(x);
    return a;
}

} // namespace

RingSpec parse_ring(const json& j, bool unsafe_rings) {
    if (!j.is_object()) throw ParseError("'ring' must be an object");
    std::string kind = require_string(j, "ring");
    if (kind == "int") return RingSpec::integers();
    if (kind == "rat") return RingSpec::rationals();
    if (kind == "mod") {
        const json& m = require_field(j, "m");
        mpz_class modulus;
        if (m.is_number_integer() && m.get<long long>() > 0) {
            modulus = mpz_class(m.get<unsigned long>());
        } else if (m.is_string()) {
            if (modulus.set_str(m.get<std::string>(), 10) != 0) {
                throw ParseError("bad modulus literal");
            }
        } else {
            throw ParseError("'m' must be an unsigned integer or decimal string");
        }
        return RingSpec::mod(modulus, unsafe_rings);
    }
    throw ParseError("unknown ring kind '" + kind + "'");
}

Copolynomial parse_copolynomial(const json& j, const RingSpec& ring) {
    if (!j.is_object() || !j.contains("kind")) {
        throw ParseError("copolynomial literal must be an object with a 'kind'");
    }
    std::string kind = require_string(j, "kind");
    if (kind == "delta") {
        std::size_t n = j.value("n", 1u);
        if (n == 0) throw ParseError("delta needs n >= 1");
        return delta(n, ring);
    }
    if (kind == "delta_derivative") {
        MultiIndex alpha = parse_alpha(require_field(j, "alpha"));
        return derivative(delta(alpha.size(), ring), alpha);
    }
    if (kind == "exp_family") {
        return exp_family(RingElement::parse(ring, require_string(j, "a")));
    }
    if (kind == "moments") {
        const json& table = require_field(j, "table");
        if (!table.is_array() || table.empty()) {
            throw ParseError("'table' must be a nonempty array");
        }
        std::map<MultiIndex, RingElement> rows;
        std::size_t n = 0;
        for (const auto& row : table) {
            MultiIndex alpha = parse_alpha(require_field(row, "alpha"));
            if (n == 0) n = alpha.size();
            if (alpha.size() != n) throw ParseError("inconsistent 'alpha' dimensions in table");
            rows.insert_or_assign(alpha, RingElement::parse(ring, require_string(row, "value")));
        }
        return from_moments(n, ring, std::move(rows));
    }
    if (kind == "convolve" || kind == "tensor") {
        const json& args = require_field(j, "args");
        if (!args.is_array() || args.size() != 2) {
            throw ParseError("'" + kind + "' needs exactly two args");
        }
        Copolynomial a = parse_copolynomial(args[0], ring);
        Copolynomial b = parse_copolynomial(args[1], ring);
        return kind == "convolve" ? convolve(a, b) : tensor(a, b);
    }
    if (kind == "shift") {
        Copolynomial t = parse_copolynomial(require_field(j, "arg"), ring);
        const json& hj = require_field(j, "h");
        if (!hj.is_array() || hj.size() != t.vars()) {
            throw ParseError("'h' must list one element per variable");
        }
        std::vector<RingElement> h;
        for (const auto& x : hj) {
            if (!x.is_string()) throw ParseError("'h' entries must be value strings");
            h.push_back(RingElement::parse(ring, x.get<std::string>()));
        }
        return shift(t, h);
    }
    if (kind == "derivative") {
        Copolynomial t = parse_copolynomial(require_field(j, "arg"), ring);
        MultiIndex alpha = parse_alpha(require_field(j, "alpha"));
        if (alpha.size() != t.vars()) throw ParseError("'alpha' dimension mismatch");
        return derivative(t, alpha);
    }
    throw ParseError("unknown copolynomial kind '" + kind + "'");
}

DiffOperator parse_operator(const json& j, const RingSpec& ring) {
    if (!j.is_object()) throw ParseError("operator literal must be an object");
    if (j.contains("op")) {
        const json& terms = j.at("op");
        if (!terms.is_array() || terms.empty()) {
            throw ParseError("'op' must be a nonempty array of terms");
        }
        std::map<MultiIndex, RingElement> table;
        std::size_t n = 0;
        for (const auto& term : terms) {
            MultiIndex alpha = parse_alpha(require_field(term, "alpha"));
            if (n == 0) n = alpha.size();
            if (alpha.size() != n) throw ParseError("inconsistent 'alpha' dimensions in operator");
            table.insert_or_assign(alpha, RingElement::parse(ring, require_string(term, "a")));
        }
        return DiffOperator::from_terms(n, ring, std::move(table));
    }
    if (j.contains("op_family")) {
        std::string family = require_string(j, "op_family");
        json params = j.value("params", json::object());
        if (family == "helmholtz") {
            return helmholtz_operator(RingElement::parse(ring, require_string(params, "c")));
        }
        if (family == "heat") {
            return heat_operator(RingElement::parse(ring, require_string(params, "a")),
                                 RingElement::parse(ring, require_string(params, "c")));
        }
        if (family == "transport") {
            const json& sj = require_field(params, "s");
            if (!sj.is_array() || sj.empty()) throw ParseError("'s' must be a nonempty array");
            std::vector<RingElement> s;
            for (const auto& x : sj) {
                if (!x.is_string()) throw ParseError("'s' entries must be value strings");
                s.push_back(RingElement::parse(ring, x.get<std::string>()));
            }
            return transport_operator(s);
        }
        if (family == "mixed_xt") return mixed_xt_operator(ring);
        if (family == "neumann_sum") {
            std::size_t n = params.value("n", 1u);
            if (n == 0) throw ParseError("neumann_sum needs n >= 1");
            return neumann_sum_operator(n, ring);
        }
        throw ParseError("unknown operator family '" + family + "'");
    }
    throw ParseError("operator literal needs 'op' or 'op_family'");
}

Polynomial parse_polynomial(const json& j, const RingSpec& ring) {
    if (!j.is_object() || !j.contains("poly")) {
        throw ParseError("polynomial literal must be an object with 'poly'");
    }
    const json& terms = j.at("poly");
    if (!terms.is_array() || terms.empty()) {
        throw ParseError("'poly' must be a nonempty array of terms");
    }
    Polynomial::TermMap table;
    std::size_t n = 0;
    for (const auto& term : terms) {
        MultiIndex alpha = parse_alpha(require_field(term, "alpha"));
        if (n == 0) n = alpha.size();
        if (alpha.size() != n) throw ParseError("inconsistent 'alpha' dimensions in polynomial");
        table.insert_or_assign(alpha, RingElement::parse(ring, require_string(term, "c")));
    }
    return Polynomial(n, ring, std::move(table));
}

namespace {

json normalize_value_fields(const json& j, const RingSpec& ring, const char* key) {
    json out = json::array();
    for (const auto& row : j) {
        json r;
        r["alpha"] = alpha_to_json(parse_alpha(require_field(row, "alpha")));
        r[key] = RingElement::parse(ring, require_string(row, key)).to_string();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

json normalize_literal(const json& j, const RingSpec& ring) {
    if (!j.is_object()) throw ParseError("object literal must be a JSON object");
    json out;
    if (j.contains("kind")) {
        parse_copolynomial(j, ring); // validates
        std::string kind = j.at("kind").get<std::string>();
        out["kind"] = kind;
        if (kind == "delta") {
            out["n"] = j.value("n", 1u);
        } else if (kind == "delta_derivative") {
            out["alpha"] = alpha_to_json(parse_alpha(j.at("alpha")));
        } else if (kind == "exp_family") {
            out["a"] = RingElement::parse(ring, j.at("a").get<std::string>()).to_string();
        } else if (kind == "moments") {
            out["table"] = normalize_value_fields(j.at("table"), ring, "value");
        } else if (kind == "convolve" || kind == "tensor") {
            out["args"] = json::array(
                {normalize_literal(j.at("args")[0], ring), normalize_literal(j.at("args")[1], ring)});
        } else if (kind == "shift") {
            out["arg"] = normalize_literal(j.at("arg"), ring);
            json h = json::array();
            for (const auto& x : j.at("h")) {
                h.push_back(RingElement::parse(ring, x.get<std::string>()).to_string());
            }
            out["h"] = std::move(h);
        } else if (kind == "derivative") {
            out["arg"] = normalize_literal(j.at("arg"), ring);
            out["alpha"] = alpha_to_json(parse_alpha(j.at("alpha")));
        }
        return out;
    }
    if (j.contains("op")) {
        parse_operator(j, ring);
        out["op"] = normalize_value_fields(j.at("op"), ring, "a");
        return out;
    }
    if (j.contains("op_family")) {
        parse_operator(j, ring);
        out["op_family"] = j.at("op_family");
        if (j.contains("params")) {
            json params = j.at("params");
            for (auto& [key, value] : params.items()) {
                if (value.is_string()) {
                    value = RingElement::parse(ring, value.get<std::string>()).to_string();
                } else if (value.is_array()) {
                    for (auto& x : value) {
                        x = RingElement::parse(ring, x.get<std::string>()).to_string();
                    }
                }
            }
            out["params"] = std::move(params);
        }
        return out;
    }
    if (j.contains("poly")) {
        parse_polynomial(j, ring);
        out["poly"] = normalize_value_fields(j.at("poly"), ring, "c");
        return out;
    }
    throw ParseError("unrecognized object literal");
}

namespace {

struct JobContext {
    RingSpec ring = RingSpec::integers();
    json objects;
    unsigned degree = 4;
    std::size_t kmax = 3;
    std::string output = "json";
};

const json& resolve(const JobContext& ctx, const json& job, const std::string& role) {
    std::string name = require_string(job, role);
    auto it = ctx.objects.find(name);
    if (it == ctx.objects.end()) {
        throw ParseError("job references unknown object '" + name + "'");
    }
    return *it;
}

Copolynomial resolve_copoly(const JobContext& ctx, const json& job, const std::string& role) {
    return parse_copolynomial(resolve(ctx, job, role), ctx.ring);
}

DiffOperator resolve_operator(const JobContext& ctx, const json& job, const std::string& role) {
    return parse_operator(resolve(ctx, job, role), ctx.ring);
}

Polynomial resolve_polynomial(const JobContext& ctx, const json& job, const std::string& role) {
    return parse_polynomial(resolve(ctx, job, role), ctx.ring);
}

std::vector<MomentRow> moment_rows(const Copolynomial& t, unsigned degree) {
    std::vector<MomentRow> rows;
    for (const MultiIndex& alpha : enumerate_indices(t.vars(), degree)) {
        rows.push_back({alpha, std::nullopt, t.moment(alpha).to_string()});
    }
    return rows;
}

std::vector<MomentRow> series_rows(const CopolySeries& u, std::size_t kmax, unsigned degree) {
    std::vector<MomentRow> rows;
    for (std::size_t k = 0; k <= kmax; ++k) {
        const Copolynomial& uk = u.coefficient(k);
        for (const MultiIndex& alpha : enumerate_indices(u.vars(), degree)) {
            rows.push_back({alpha, k, uk.moment(alpha).to_string()});
        }
    }
    return rows;
}

std::string render_rows(const std::vector<MomentRow>& rows, const std::string& format) {
    if (format == "tsv") {
        std::ostringstream os;
        for (const MomentRow& row : rows) {
            const auto& e = row.alpha.exponents();
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (j) os << ' ';
                os << e[j];
            }
            os << '\t' << (row.k ? std::to_string(*row.k) : std::string("-")) << '\t' << row.value
               << '\n';
        }
        return os.str();
    }
    json out = json::array();
    for (const MomentRow& row : rows) {
        json r;
        r["alpha"] = alpha_to_json(row.alpha);
        if (row.k) r["k"] = *row.k;
        r["value"] = row.value;
        out.push_back(std::move(r));
    }
    return out.dump() + "\n";
}

std::string render_report(const json& report, const std::string& format) {
    if (format == "tsv") {
        std::ostringstream os;
        for (const auto& [key, value] : report.items()) {
            os << key << '\t' << (value.is_string() ? value.get<std::string>() : value.dump())
               << '\n';
        }
        return os.str();
    }
    return report.dump() + "\n";
}

std::string dispatch(const JobContext& ctx, const json& job, const std::string& command) {
    if (command == "moments") {
        return render_rows(moment_rows(resolve_copoly(ctx, job, "copoly"), ctx.degree),
                           ctx.output);
    }
    if (command == "convolve") {
        Copolynomial lhs = resolve_copoly(ctx, job, "lhs");
        Copolynomial rhs = resolve_copoly(ctx, job, "rhs");
        return render_rows(moment_rows(convolve(lhs, rhs), ctx.degree), ctx.output);
    }
    if (command == "apply_op") {
        DiffOperator op = resolve_operator(ctx, job, "operator");
        Copolynomial t = resolve_copoly(ctx, job, "copoly");
        return render_rows(moment_rows(apply(op, t), ctx.degree), ctx.output);
    }
    if (command == "fundamental") {
        DiffOperator op = resolve_operator(ctx, job, "operator");
        return render_rows(moment_rows(fundamental_solution(op), ctx.degree), ctx.output);
    }
    if (command == "solve") {
        DiffOperator op = resolve_operator(ctx, job, "operator");
        Copolynomial t = resolve_copoly(ctx, job, "rhs");
        return render_rows(moment_rows(solve(op, t), ctx.degree), ctx.output);
    }
    if (command == "laplace") {
        Copolynomial t = resolve_copoly(ctx, job, "copoly");
        TruncatedSeries s = laplace(t, ctx.degree);
        std::vector<MomentRow> rows;
        for (const MultiIndex& alpha : enumerate_indices(t.vars(), ctx.degree)) {
            rows.push_back({alpha, std::nullopt, s.coefficient(alpha).to_string()});
        }
        return render_rows(rows, ctx.output);
    }
    if (command == "parseval") {
        Copolynomial t = resolve_copoly(ctx, job, "copoly");
        Polynomial p = resolve_polynomial(ctx, job, "polynomial");
        long deg = std::max(p.degree(), 0L);
        RingElement via_residue =
            residue_pairing(laplace(t, static_cast<unsigned>(deg)), laplace_poly(p));
        RingElement direct = t.apply(p);
        json report;
        report["direct"] = direct.to_string();
        report["equal"] = via_residue == direct;
        report["residue"] = via_residue.to_string();
        return render_report(report, ctx.output);
    }
    if (command == "cauchy") {
        DiffOperator op = resolve_operator(ctx, job, "operator");
        Copolynomial q = resolve_copoly(ctx, job, "initial");
        return render_rows(series_rows(cauchy_solve(op, q, ctx.kmax), ctx.kmax, ctx.degree),
                           ctx.output);
    }
    if (command == "cauchy_fundamental") {
        DiffOperator op = resolve_operator(ctx, job, "operator");
        return render_rows(series_rows(cauchy_fundamental(op, ctx.kmax), ctx.kmax, ctx.degree),
                           ctx.output);
    }
    if (command == "inhomogeneous_heat") {
        RingElement a = RingElement::parse(ctx.ring, require_string(job, "a"));
        Copolynomial q = resolve_copoly(ctx, job, "initial");
        return render_rows(
            series_rows(solve_inhomogeneous_heat(a, q, ctx.kmax), ctx.kmax, ctx.degree),
            ctx.output);
    }
    if (command == "connections") {
        DiffOperator op = resolve_operator(ctx, job, "operator");
        ConnectionsReport r = cross_check_connections(op, ctx.kmax, ctx.degree);
        json report;
        report["cauchy_from_operator"] = r.cauchy_from_operator;
        report["operator_from_cauchy"] = r.operator_from_cauchy;
        report["space_time_factorization"] = r.space_time_factorization;
        return render_report(report, ctx.output);
    }
    throw ParseError("unknown command '" + command + "'");
}

json error_report(const std::string& kind, const std::string& message) {
    json r;
    r["error"] = kind;
    r["message"] = message;
    return r;
}

} // namespace

RunResult run_job(const json& job, const JobOverrides& overrides) {
    try {
        if (!job.is_object()) throw ParseError("job document must be a JSON object");
        JobContext ctx;
        ctx.ring = parse_ring(require_field(job, "ring"), overrides.unsafe_rings);
        ctx.objects = job.value("objects", json::object());
        ctx.degree = overrides.degree.value_or(job.value("degree", 4u));
        ctx.kmax = overrides.kmax.value_or(job.value("kmax", 3u));
        ctx.output = overrides.output.value_or(job.value("output", std::string("json")));
        if (ctx.output != "json" && ctx.output != "tsv") {
            throw ParseError("output must be 'json' or 'tsv'");
        }
        std::string command = require_string(job, "command");
        return {0, dispatch(ctx, job, command)};
    } catch (const DivisibilityFailure& e) {
        json r = error_report("DivisibilityFailure", e.what());
        r["k"] = e.k;
        r["alpha"] = e.alpha;
        return {2, r.dump() + "\n"};
    } catch (const NotDivisible& e) {
        return {2, error_report("NotDivisible", e.what()).dump() + "\n"};
    } catch (const HypothesisViolation& e) {
        return {3, error_report("HypothesisViolation", e.what()).dump() + "\n"};
    } catch (const NotInvertible& e) {
        return {3, error_report("NotInvertible", e.what()).dump() + "\n"};
    } catch (const RingCapability& e) {
        return {3, error_report("RingCapability", e.what()).dump() + "\n"};
    } catch (const TruncationTooLow& e) {
        return {4, error_report("TruncationTooLow", e.what()).dump() + "\n"};
    } catch (const std::exception& e) {
        return {1, error_report("ParseError", e.what()).dump() + "\n"};
    }
}

RunResult run_job_text(const std::string& text, const JobOverrides& overrides) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        return {1, error_report("ParseError", "invalid JSON").dump() + "\n"};
    }
    return run_job(doc, overrides);
}

RunResult run_job_file(const std::string& path, const JobOverrides& overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return {1, error_report("ParseError", "cannot open " + path).dump() + "\n"};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_job_text(buf.str(), overrides);
}

bool SuiteReport::all_passed() const {
    for (const SuiteEntry& e : entries) {
        if (!e.passed) return false;
    }
    return true;
}

SuiteReport run_suite(const std::string& dir, const JobOverrides& overrides) {
    namespace fs = std::filesystem;
    SuiteReport report;
    auto start = std::chrono::steady_clock::now();
    std::vector<fs::path> jobs;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") jobs.push_back(entry.path());
    }
    std::sort(jobs.begin(), jobs.end());
    for (const fs::path& path : jobs) {
        SuiteEntry entry;
        entry.name = path.stem().string();
        fs::path expected_path = path;
        expected_path.replace_extension(".expected");
        fs::path exit_path = path;
        exit_path.replace_extension(".exit");

        std::ifstream expected_in(expected_path, std::ios::binary);
        if (!expected_in) {
            entry.detail = "missing expected file";
            report.entries.push_back(std::move(entry));
            continue;
        }
        std::ostringstream expected_buf;
        expected_buf << expected_in.rdbuf();

        int expected_exit = 0;
        if (std::ifstream exit_in(exit_path); exit_in) exit_in >> expected_exit;

        RunResult result = run_job_file(path.string(), overrides);
        if (result.exit_code != expected_exit) {
            entry.detail = "exit code " + std::to_string(result.exit_code) + ", expected " +
                           std::to_string(expected_exit);
        } else if (result.output != expected_buf.str()) {
            entry.detail = "output mismatch";
        } else {
            entry.passed = true;
        }
        report.entries.push_back(std::move(entry));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace copoly::job
