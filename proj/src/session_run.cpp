#include <epsmult/session.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include <epsmult/errors.hpp>
#include <epsmult/invariants.hpp>

#include "session_interp.hpp"

namespace epsmult
{

using json = nlohmann::ordered_json;

DirectorySink::DirectorySink(std::filesystem::path dir) : m_dir(std::move(dir))
{
    std::filesystem::create_directories(m_dir);
}

void DirectorySink::emit(const std::string &name, const std::string &content)
{
    std::ofstream out(m_dir / name, std::ios::binary);
    out << content;
    if (!out) {
        throw std::runtime_error("cannot write report " + (m_dir / name).string());
    }
}

void StreamSink::emit(const std::string &, const std::string &content)
{
    m_out << content;
    m_out.flush();
}

namespace
{

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

class Csv
{
public:
    explicit Csv(std::initializer_list<std::string> header)
    {
        row(std::vector<std::string>(header));
    }
    void row(const std::vector<std::string> &fields)
    {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            m_text += (i ? "," : "") + csv_field(fields[i]);
        }
        m_text += "\n";
    }
    const std::string &text() const
    {
        return m_text;
    }

private:
    std::string m_text;
};

struct Report {
    std::string csv;
    json body;
    bool mismatch = false;
};

json estimate_json(const MultiplicityEstimate &est)
{
    json samples = json::array();
    for (const auto &s : est.samples) {
        json row = {{"index", s.index}};
        row["raw_length"] = s.raw_length ? json(*s.raw_length) : json(nullptr);
        row["normalized_value"] = to_string(s.value);
        samples.push_back(std::move(row));
    }
    return {{"d_used", est.d_used},
            {"samples", std::move(samples)},
            {"limit", to_string(est.limit)},
            {"model", to_string(est.model)},
            {"residual", to_string(est.residual)},
            {"residual_gate_passed", passes_residual_gate(est)}};
}

Report estimate_report(const MultiplicityEstimate &est, const Rational &threshold)
{
    Csv csv({"index", "raw_length", "normalized_value"});
    for (const auto &s : est.samples) {
        csv.row({std::to_string(s.index), s.raw_length ? std::to_string(*s.raw_length) : "", to_string(s.value)});
    }
    csv.row({"limit", "", to_string(est.limit)});
    json body = estimate_json(est);
    body["threshold"] = to_string(threshold);
    body["positive"] = positivity_report(est, threshold);
    return {csv.text(), std::move(body)};
}

std::string monomial_text(const RingPtr &ring, const ExponentVector &a)
{
    return monomial_to_string(*ring, a);
}

Report execute(const detail::ResolvedCommand &cmd, const RunOptions &opts)
{
    const int mmax = cmd.mmax.value_or(opts.default_mmax);
    const int nmax = cmd.nmax.value_or(opts.default_nmax);
    const Rational threshold = cmd.threshold.value_or(make_rational(1, 100));
    const auto &co = cmd.compute;

    switch (cmd.verb) {
        case Verb::Epsilon:
            return estimate_report(epsilon_sequence(*cmd.filts[0].filt, mmax, co), threshold);
        case Verb::EpsilonColon:
            return estimate_report(epsilon_colon_sequence(*cmd.filts[0].filt, *cmd.ideals[0].ideal, nmax, co),
                                   threshold);
        case Verb::Amao:
            return estimate_report(amao_pair_sequence(*cmd.ideals[0].ideal, *cmd.ideals[1].ideal, mmax, co),
                                   threshold);
        case Verb::VolumeTable: {
            const auto table = volume_formula_table(*cmd.ideals[0].ideal, *cmd.ideals[1].ideal, nmax, mmax, co);
            Csv csv({"n", "inner_estimate", "ratio"});
            json rows = json::array();
            for (const auto &row : table.rows) {
                csv.row({std::to_string(row.n), to_string(row.inner.limit), to_string(row.ratio)});
                json r = estimate_json(row.inner);
                r["n"] = row.n;
                r["ratio"] = to_string(row.ratio);
                rows.push_back(std::move(r));
            }
            csv.row({"outer", "", to_string(table.outer.limit)});
            return {csv.text(), {{"rows", std::move(rows)}, {"outer", estimate_json(table.outer)}}};
        }
        case Verb::Spread:
        case Verb::SpreadFamily: {
            const auto res = cmd.verb == Verb::Spread ? analytic_spread(*cmd.ideals[0].ideal)
                                                      : analytic_spread_family(*cmd.filts[0].filt, mmax);
            Csv csv({"value", "stabilized"});
            csv.row({std::to_string(res.value), res.stabilized ? "true" : "false"});
            return {csv.text(), {{"value", res.value}, {"stabilized", res.stabilized}}};
        }
        case Verb::CheckAr: {
            const auto &filt = *cmd.filts[0].filt;
            Csv csv({"r", "m_max", "holds", "m_fail", "witness"});
            json rows = json::array();
            const int lo = cmd.r ? *cmd.r : 1;
            const int hi = cmd.r ? *cmd.r : *cmd.rmax;
            std::optional<int> min_r;
            for (int r = lo; r <= hi; ++r) {
                const auto rep = check_ar(filt, r, mmax, co);
                std::string m_fail, witness;
                json row = {{"r", r}, {"m_max", mmax}, {"holds", rep.holds}};
                if (rep.first_failure) {
                    m_fail = std::to_string(rep.first_failure->m);
                    witness = monomial_text(filt.ring(), rep.first_failure->witness);
                    row["m_fail"] = rep.first_failure->m;
                    const auto &w = rep.first_failure->witness;
                    row["witness"] = std::vector<Exponent>(w.begin(), w.end());
                }
                csv.row({std::to_string(r), std::to_string(mmax), rep.holds ? "true" : "false", m_fail, witness});
                rows.push_back(std::move(row));
                if (rep.holds) {
                    min_r = r;
                    break;
                }
            }
            json body = {{"reports", std::move(rows)}};
            if (cmd.rmax) {
                body["min_r"] = min_r ? json(*min_r) : json(nullptr);
            }
            return {csv.text(), std::move(body)};
        }
        case Verb::CheckWg: {
            const auto &filt = *cmd.filts[0].filt;
            const auto rep = check_weakly_graded(filt, *cmd.c, {1, mmax});
            Csv csv({"holds", "m", "n", "g", "h"});
            json body = {{"holds", rep.holds}, {"range", {1, mmax}}};
            if (rep.first_violation) {
                const auto &v = *rep.first_violation;
                csv.row({"false", std::to_string(v.m), std::to_string(v.n), monomial_text(filt.ring(), v.g),
                         monomial_text(filt.ring(), v.h)});
                body["violation"] = {{"m", v.m},
                                     {"n", v.n},
                                     {"g", std::vector<Exponent>(v.g.begin(), v.g.end())},
                                     {"h", std::vector<Exponent>(v.h.begin(), v.h.end())}};
            } else {
                csv.row({"true", "", "", "", ""});
            }
            return {csv.text(), std::move(body)};
        }
        case Verb::ProbeNoetherian: {
            const auto &filt = *cmd.filts[0].filt;
            const auto rep = noetherian_probe(filt, mmax, co);
            Csv csv({"m", "weight", "generator"});
            json evidence = json::array();
            for (const auto &e : rep.evidence) {
                csv.row({std::to_string(e.m), std::to_string(e.weight), monomial_text(filt.ring(), e.generator)});
                evidence.push_back({{"m", e.m},
                                    {"weight", e.weight},
                                    {"generator", std::vector<Exponent>(e.generator.begin(), e.generator.end())}});
            }
            csv.row({"verdict", to_string(rep.verdict), ""});
            return {csv.text(), {{"evidence", std::move(evidence)}, {"verdict", to_string(rep.verdict)}}};
        }
        case Verb::ReproduceExample: {
            ExampleOptions eo;
            eo.mmax = cmd.mmax.value_or(std::max(opts.default_mmax, 6));
            eo.nmax = nmax;
            eo.compute = co;
            if (cmd.example_ideal) {
                eo.ideal = cmd.example_ideal->ideal;
            }
            const auto rep = reproduce_example(eo);
            Csv csv({"formula", "parameter", "expected", "computed", "status"});
            json checks = json::array();
            for (const auto &c : rep.checks) {
                csv.row({c.formula, c.parameter, c.expected, c.computed, c.pass ? "pass" : "fail"});
                checks.push_back({{"formula", c.formula},
                                  {"parameter", c.parameter},
                                  {"expected", c.expected},
                                  {"computed", c.computed},
                                  {"pass", c.pass}});
            }
            return {csv.text(), {{"checks", std::move(checks)}, {"all_pass", rep.all_pass()}}, !rep.all_pass()};
        }
    }
    throw std::logic_error("unhandled verb");
}

std::string report_name(int index, const std::string &stem, const std::string &ext)
{
    std::ostringstream name;
    name << std::setw(2) << std::setfill('0') << index << "-" << stem << "." << ext;
    return name.str();
}

json error_record(const std::exception &ex, const Statement &st)
{
    json err = {{"kind", "InternalError"}, {"message", ex.what()}};
    if (const auto *e = dynamic_cast<const Error *>(&ex)) {
        err["kind"] = e->kind();
    }
    if (const auto *e = dynamic_cast<const StabilityFailure *>(&ex)) {
        err["operation"] = e->operation();
        err["bound"] = e->bound();
        err["verified_at"] = e->verified_at();
    }
    err["line"] = st.pos.line;
    err["statement"] = to_string(st);
    return {{"schema", 1}, {"error", std::move(err)}};
}

} // namespace

int run(const Session &session, const RunOptions &opts, ReportSink &sink)
{
    ComputeOptions base;
    base.window_bound = opts.bound;
    base.threads = opts.threads;
    detail::Interpreter interp(true, base);
    int index = 0;
    bool mismatch = false;
    for (const auto &st : session.statements) {
        const bool is_command = st.kind == Statement::Kind::Command;
        if (is_command) {
            ++index;
        }
        try {
            if (!is_command) {
                interp.bind(st);
                continue;
            }
            const auto cmd = interp.command(st);
            Report report = execute(cmd, opts);
            mismatch = mismatch || report.mismatch;
            const std::string stem = to_string(st.verb);
            if (opts.format == ReportFormat::Csv) {
                sink.emit(report_name(index, stem, "csv"), report.csv);
            } else {
                json doc = {{"schema", 1}, {"command", stem}};
                doc["arguments"] = cmd.arg_text;
                for (auto &[key, value] : report.body.items()) {
                    doc[key] = value;
                }
                sink.emit(report_name(index, stem, "json"), doc.dump(2) + "\n");
            }
        } catch (const std::exception &ex) {
            const std::string stem = is_command ? to_string(st.verb) : "bind-" + st.name;
            sink.emit(report_name(index, stem, "error.json"), error_record(ex, st).dump(2) + "\n");
            return exit_code::computation_error;
        }
    }
    return mismatch ? exit_code::example_mismatch : exit_code::ok;
}

} // namespace epsmult
