#include <gtest/gtest.h>

#include <json.hpp>

#include <epsmult/session.hpp>

using namespace epsmult;

namespace
{

const char *const kExampleHead = "ring S = semigroup vars(x,y) gens((1,0),(0,2),(0,3))\n"
                                 "ideal I = (x^2, x*y^2)\n";

ParseErrorKind parse_kind(const std::string &text)
{
    try {
        parse_session(text);
    } catch (const ParseError &e) {
        return e.kind();
    }
    ADD_FAILURE() << "accepted: " << text;
    return ParseErrorKind::SyntaxError;
}

struct RunResult {
    int status = 0;
    MemorySink sink;
};

RunResult run_text(const std::string &text, ReportFormat format = ReportFormat::Csv)
{
    RunResult out;
    RunOptions opts;
    opts.format = format;
    out.status = run(parse_session(text), opts, out.sink);
    return out;
}

} // namespace

TEST(Parse, SpecExampleSession)
{
    const auto s = parse_session(std::string(kExampleHead) + "cmd epsilon powers(I) mmax=12");
    EXPECT_EQ(s.binding_count(), 2u);
    EXPECT_EQ(s.command_count(), 1u);
    const auto &cmd = s.statements.back();
    EXPECT_EQ(cmd.verb, Verb::Epsilon);
    ASSERT_EQ(cmd.options.size(), 1u);
    EXPECT_EQ(cmd.options[0].first, "mmax");
}

TEST(Parse, ColonBindingEvaluatesToOracleValue)
{
    const auto r = run_text("ring R = poly(x,y)\nideal I=(x^2,x*y)\n"
                            "ideal C=colon(power(I,4), power(maxideal, 2))\ncmd spread C");
    EXPECT_EQ(r.status, exit_code::ok);
    ASSERT_EQ(r.sink.reports.size(), 1u);
    // (I^4 : m^2) = x^4 m^2 : x^4 m^2 has the fiber cone of m.
    EXPECT_EQ(r.sink.reports[0].second, "value,stabilized\n2,true\n");
}

TEST(Parse, ErrorsCarryPosition)
{
    try {
        parse_session("ring R = poly(x,y)\nideal I = (x^2, z)\n");
        FAIL() << "accepted unknown variable";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.kind(), ParseErrorKind::UnknownName);
        EXPECT_EQ(e.pos().line, 2);
        EXPECT_EQ(e.token(), "z");
        EXPECT_NE(std::string(e.what()).find("2:"), std::string::npos);
    }
}

TEST(Parse, ErrorKinds)
{
    EXPECT_EQ(parse_kind("ideal I = (x^2)"), ParseErrorKind::UnknownName);
    EXPECT_EQ(parse_kind("ring R = poly(x,y)\nideal I = (x^2\n"), ParseErrorKind::SyntaxError);
    EXPECT_EQ(parse_kind("ring R = poly(x,y)\nideal I = (x)\nideal J = power(I)\n"), ParseErrorKind::ArityError);
    EXPECT_EQ(parse_kind("ring R = poly(x,y)\nideal I = ((1,2,3))\n"), ParseErrorKind::DimensionMismatch);
    EXPECT_EQ(parse_kind("ring R = poly(x,y)\nideal I = (x)\ncmd epsilon I\n"), ParseErrorKind::TypeMismatch);
    EXPECT_EQ(parse_kind("ring R = poly(x,y)\nideal I = (x)\nideal I = (y)\n"), ParseErrorKind::DuplicateName);
    EXPECT_EQ(parse_kind(std::string(kExampleHead) + "ideal Y = (y)\n"), ParseErrorKind::InvalidValue);
    EXPECT_EQ(parse_kind(std::string(kExampleHead) + "cmd epsilon powers(I) mmax=2\n"), ParseErrorKind::InvalidValue);
    EXPECT_EQ(parse_kind("cmd frobnicate\n"), ParseErrorKind::UnknownName);
}

// One accepted and one rejected line per production.
TEST(Parse, EveryProductionAcceptsAndRejects)
{
    const std::string ring = "ring R = poly(x,y)\nideal I = (x^2, x*y)\nfiltration P = powers(I)\n";
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"ring A = poly(a,b,c)", "ring A = poly()"},
        {"ring A = semigroup vars(a) gens((2),(3))", "ring A = semigroup vars(a) gens((2,1))"},
        {"ideal J = (x^2*y^3, y^4)", "ideal J = (x^^2)"},
        {"ideal J = ((2,1), (0,3))", "ideal J = ((2,1,0))"},
        {"ideal J = maxideal", "ideal maxideal = (x)"},
        {"ideal J = ideal(x, y^2)", "ideal J = ideal(x, 3)"},
        {"ideal J = power(I, 3)", "ideal J = power(I, x)"},
        {"ideal J = colon(I, maxideal)", "ideal J = colon(I)"},
        {"ideal J = saturate(I)", "ideal J = saturate()"},
        {"ideal J = saturate(I, (x))", "ideal J = saturate(I, P)"},
        {"ideal J = sum(I, (y^3))", "ideal J = sum(I, Q)"},
        {"ideal J = product(I, I)", "ideal J = product(I, 2)"},
        {"ideal J = intersect(I, (y))", "ideal J = intersect(I, (y), (x), (x))"},
        {"filtration G = powers(maxideal)", "filtration G = powers(P)"},
        {"filtration G = valfilt((1,1):3/2, (2,1):1)", "filtration G = valfilt((1,1))"},
        {"filtration G = valfilt((1,2):2)", "filtration G = valfilt((1,2):0)"},
        {"filtration G = colonfam(P, maxideal, n=2)", "filtration G = colonfam(P, maxideal)"},
        {"filtration G = sandwich(I, maxideal, rule=upper)", "filtration G = sandwich(I, maxideal, rule=sideways)"},
        {"cmd epsilon P mmax=6 threshold=1/50", "cmd epsilon P mmax=6 mmax=7"},
        {"cmd epsilon-colon P maxideal nmax=5", "cmd epsilon-colon P"},
        {"cmd amao (x) I mmax=5", "cmd amao (x)"},
        {"cmd volume-table I maxideal nmax=3 mmax=5", "cmd volume-table I maxideal nmax=2"},
        {"cmd spread I", "cmd spread P"},
        {"cmd spread-family P mmax=4", "cmd spread-family I"},
        {"cmd check-ar P r=2", "cmd check-ar P"},
        {"cmd check-ar P rmax=3 mmax=4", "cmd check-ar P r=1 rmax=3"},
        {"cmd check-wg P c=(1,0)", "cmd check-wg P"},
        {"cmd probe-noetherian P mmax=5", "cmd probe-noetherian P mmax=0"},
        {"cmd reproduce-example mmax=6", "cmd reproduce-example I"},
        {"cmd spread I bound=50  # trailing comment", "cmd spread I bound=-1"},
    };
    for (const auto &[good, bad] : cases) {
        EXPECT_NO_THROW(parse_session(ring + good + "\n")) << good;
        EXPECT_THROW(parse_session(ring + bad + "\n"), ParseError) << bad;
    }
}

TEST(Parse, RoundTrip)
{
    const std::string text = std::string(kExampleHead)
                             + "ideal K = maxideal\n"
                               "ideal C = colon(power(I, 4), power(K, 2))\n"
                               "filtration F = colonfam(powers(I), K, n=3)\n"
                               "filtration V = valfilt((1,1):3/2, (2,1):4/2)\n"
                               "filtration W = sandwich(I, K, rule=midpoint, extra=2)\n"
                               "cmd epsilon F mmax=8 threshold=1/100\n"
                               "cmd check-wg powers(I) c=(1,0)\n"
                               "cmd amao ((1,0)) I\n"
                               "cmd reproduce-example ideal=(x^2, x*y^3)\n";
    const auto s = parse_session(text);
    const auto printed = print_session(s);
    const auto again = parse_session(printed);
    EXPECT_EQ(s, again);
    EXPECT_EQ(printed, print_session(again));
}

TEST(Run, EmptySessionIsQuiet)
{
    const auto r = run_text("# nothing\n\nring R = poly(x)\n");
    EXPECT_EQ(r.status, exit_code::ok);
    EXPECT_TRUE(r.sink.reports.empty());
}

TEST(Run, EpsilonCsvIsExactAndDeterministic)
{
    const std::string text = std::string(kExampleHead) + "cmd epsilon powers(I) mmax=4\n";
    const auto a = run_text(text);
    const auto b = run_text(text);
    ASSERT_EQ(a.sink.reports.size(), 1u);
    EXPECT_EQ(a.sink.reports[0].first, "01-epsilon.csv");
    EXPECT_EQ(a.sink.reports, b.sink.reports);
    EXPECT_EQ(a.sink.reports[0].second, "index,raw_length,normalized_value\n"
                                        "1,2,4\n"
                                        "2,6,3\n"
                                        "3,12,8/3\n"
                                        "4,20,5/2\n"
                                        "limit,,2\n");
}

TEST(Run, JsonReportHasSchema)
{
    const auto r = run_text(std::string(kExampleHead) + "cmd spread I\n", ReportFormat::Json);
    ASSERT_EQ(r.sink.reports.size(), 1u);
    EXPECT_EQ(r.sink.reports[0].first, "01-spread.json");
    const auto doc = nlohmann::json::parse(r.sink.reports[0].second);
    EXPECT_EQ(doc["schema"], 1);
    EXPECT_EQ(doc["command"], "spread");
    EXPECT_EQ(doc["value"], 2);
}

TEST(Run, StabilityFailureWritesErrorRecord)
{
    const auto f = run_text(std::string(kExampleHead) + "cmd epsilon-colon powers(I) maxideal nmax=4 bound=1\n"
                                                        "cmd spread I\n");
    EXPECT_EQ(f.status, exit_code::computation_error);
    ASSERT_EQ(f.sink.reports.size(), 1u);
    EXPECT_EQ(f.sink.reports[0].first, "01-epsilon-colon.error.json");
    const auto doc = nlohmann::json::parse(f.sink.reports[0].second);
    EXPECT_EQ(doc["error"]["kind"], "StabilityFailure");
    EXPECT_EQ(doc["error"]["bound"], 1);
    EXPECT_GE(doc["error"]["verified_at"].get<int>(), 2);
    EXPECT_FALSE(doc["error"]["operation"].get<std::string>().empty());
}

TEST(Run, ComputationErrorKinds)
{
    const auto r = run_text(std::string(kExampleHead) + "cmd epsilon-colon powers(I) (x) nmax=4\n");
    EXPECT_EQ(r.status, exit_code::computation_error);
    const auto doc = nlohmann::json::parse(r.sink.reports.at(0).second);
    EXPECT_EQ(doc["error"]["kind"], "KNotPrimary");
    EXPECT_EQ(doc["error"]["line"], 3);
}

TEST(Run, ReproduceExamplePasses)
{
    const auto r = run_text("cmd reproduce-example mmax=6 nmax=4\n");
    EXPECT_EQ(r.status, exit_code::ok);
    ASSERT_EQ(r.sink.reports.size(), 1u);
    EXPECT_EQ(r.sink.reports[0].second.find(",fail\n"), std::string::npos);
}

TEST(Run, TamperedExampleMismatches)
{
    const auto r = run_text(std::string(kExampleHead) + "cmd reproduce-example ideal=(x^2, x*y^3)\n");
    EXPECT_EQ(r.status, exit_code::example_mismatch);
    EXPECT_NE(r.sink.reports.at(0).second.find(",fail\n"), std::string::npos);
}

TEST(Run, CheckArReportsMinimalR)
{
    const auto r = run_text(std::string(kExampleHead) + "cmd check-ar powers(I) rmax=4 mmax=5\n",
                            ReportFormat::Json);
    const auto doc = nlohmann::json::parse(r.sink.reports.at(0).second);
    EXPECT_EQ(doc["min_r"], 3);
    EXPECT_EQ(doc["reports"].size(), 3u);
}

TEST(Example, ApiRejectsSmallRanges)
{
    ExampleOptions opts;
    opts.mmax = 2;
    EXPECT_THROW(reproduce_example(opts), std::exception);
}
