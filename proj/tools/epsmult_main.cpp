#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <epsmult/random.hpp>
#include <epsmult/session.hpp>

namespace
{

int run_properties(int count, std::uint64_t seed, epsmult::ReportFormat format, epsmult::ReportSink &sink)
{
    const auto results = epsmult::run_identity_suite(count, seed);
    bool ok = true;
    std::string content;
    if (format == epsmult::ReportFormat::Csv) {
        content = "property,instances,failures\n";
        for (const auto &r : results) {
            content += "\"" + r.property + "\"," + std::to_string(r.instances) + "," + std::to_string(r.failures) + "\n";
        }
    } else {
        nlohmann::ordered_json doc = {{"schema", 1}, {"seed", seed}, {"properties", nlohmann::ordered_json::array()}};
        for (const auto &r : results) {
            doc["properties"].push_back({{"property", r.property}, {"instances", r.instances}, {"failures", r.failures}});
        }
        content = doc.dump(2) + "\n";
    }
    for (const auto &r : results) {
        ok = ok && r.failures == 0;
    }
    sink.emit(format == epsmult::ReportFormat::Csv ? "properties.csv" : "properties.json", content);
    return ok ? epsmult::exit_code::ok : epsmult::exit_code::computation_error;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Colon ideals, saturations and epsilon multiplicities of monomial ideals"};

    std::string session_file;
    std::string format = "csv";
    std::string out_dir;
    epsmult::RunOptions opts;
    std::optional<epsmult::Exponent> bound;
    std::uint64_t seed = 1;
    int properties = 0;

    app.add_option("--session", session_file, "Session file to run")->check(CLI::ExistingFile);
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_dir, "Directory for report files (default: standard output)");
    app.add_option("--mmax", opts.default_mmax, "Default m range for commands without mmax=")
        ->check(CLI::Range(1, 64));
    app.add_option("--nmax", opts.default_nmax, "Default n range for commands without nmax=")
        ->check(CLI::Range(1, 16));
    app.add_option("--bound", bound, "Window bound for semigroup-ring colon and intersection")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--threads", opts.threads, "Worker threads for sequence evaluation")->check(CLI::Range(1, 256));
    app.add_option("--seed", seed, "Seed for the randomized property suite");
    app.add_option("--properties", properties, "Run the randomized identity suite on this many instances")
        ->check(CLI::Range(1, 100000));

    CLI11_PARSE(app, argc, argv);
    opts.format = format == "json" ? epsmult::ReportFormat::Json : epsmult::ReportFormat::Csv;
    opts.bound = bound;

    std::unique_ptr<epsmult::ReportSink> sink;
    try {
        if (out_dir.empty()) {
            sink = std::make_unique<epsmult::StreamSink>(std::cout);
        } else {
            sink = std::make_unique<epsmult::DirectorySink>(out_dir);
        }
    } catch (const std::exception &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }

    if (properties > 0) {
        return run_properties(properties, seed, opts.format, *sink);
    }
    if (session_file.empty()) {
        std::cerr << "error: --session FILE or --properties N is required\n" << app.help();
        return 1;
    }

    std::ifstream in(session_file);
    std::stringstream text;
    text << in.rdbuf();
    epsmult::Session session;
    try {
        session = epsmult::parse_session(text.str());
    } catch (const epsmult::ParseError &ex) {
        std::cerr << session_file << ":" << ex.what() << "\n";
        return epsmult::exit_code::parse_error;
    }
    const int status = epsmult::run(session, opts, *sink);
    if (status == epsmult::exit_code::computation_error) {
        std::cerr << "error: a command failed; see the error record\n";
    }
    return status;
}
