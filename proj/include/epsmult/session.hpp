#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <epsmult/filtration.hpp>
#include <epsmult/ideal.hpp>
#include <epsmult/rational.hpp>
#include <epsmult/ring.hpp>

namespace epsmult
{

enum class ParseErrorKind { SyntaxError, UnknownName, ArityError, DimensionMismatch, TypeMismatch, InvalidValue,
                            DuplicateName };
std::string to_string(ParseErrorKind kind);

struct SourcePos {
    int line = 0;
    int col = 0;
};

class ParseError : public std::runtime_error
{
public:
    ParseError(ParseErrorKind kind, SourcePos pos, std::string token, const std::string &message);

    ParseErrorKind kind() const noexcept
    {
        return m_kind;
    }
    SourcePos pos() const noexcept
    {
        return m_pos;
    }
    const std::string &token() const noexcept
    {
        return m_token;
    }
    const std::string &message() const noexcept
    {
        return m_message;
    }

private:
    ParseErrorKind m_kind;
    SourcePos m_pos;
    std::string m_token;
    std::string m_message;
};

// Syntax tree of one expression. Positions are ignored by ==.
struct Expr {
    enum class Kind {
        Name,     // I, maxideal, midpoint
        Integer,  // 3
        Fraction, // 3/2
        Monomial, // x^2*y; no factors means the monomial 1
        Tuple,    // (a, b, ...)
        Call,     // f(a, b, k=v)
        Weighted, // (1,1):3/2 inside valfilt
    };

    Kind kind = Kind::Name;
    std::string name;
    Rational number;
    std::vector<std::pair<std::string, Exponent>> factors;
    std::vector<Expr> items;
    std::vector<std::pair<std::string, Expr>> options;
    SourcePos pos;

    friend bool operator==(const Expr &a, const Expr &b);
};

std::string to_string(const Expr &e);

enum class Verb { Epsilon, EpsilonColon, Amao, VolumeTable, Spread, SpreadFamily, CheckAr, CheckWg, ProbeNoetherian,
                  ReproduceExample };
std::string to_string(Verb verb);
std::optional<Verb> parse_verb(const std::string &text);

struct Statement {
    enum class Kind { Ring, Ideal, Filtration, Command };

    Kind kind = Kind::Ring;
    // Binding name; empty for commands.
    std::string name;
    // Ring definition (poly(...) or semigroup(vars(...), gens(...))) or the
    // bound expression.
    Expr value;
    Verb verb = Verb::Epsilon;
    std::vector<Expr> args;
    std::vector<std::pair<std::string, Expr>> options;
    SourcePos pos;

    friend bool operator==(const Statement &a, const Statement &b);
};

std::string to_string(const Statement &s);

// A parsed and statically checked session: every name resolves to an earlier
// binding of the right type and ring, arities and dimensions match.
struct Session {
    std::vector<Statement> statements;

    std::size_t binding_count() const;
    std::size_t command_count() const;

    friend bool operator==(const Session &a, const Session &b) = default;
};

Session parse_session(const std::string &text);
// Canonical text; parse_session(print_session(s)) == s.
std::string print_session(const Session &session);

enum class ReportFormat { Csv, Json };

struct RunOptions {
    ReportFormat format = ReportFormat::Csv;
    // Used when a command does not set mmax / nmax itself.
    int default_mmax = 8;
    int default_nmax = 4;
    // Window bound for commands that do not set bound=.
    std::optional<Exponent> bound;
    unsigned threads = 1;
};

// Receives one report per command, named like "01-epsilon.csv".
class ReportSink
{
public:
    virtual ~ReportSink() = default;
    virtual void emit(const std::string &name, const std::string &content) = 0;
};

class DirectorySink : public ReportSink
{
public:
    explicit DirectorySink(std::filesystem::path dir);
    void emit(const std::string &name, const std::string &content) override;

private:
    std::filesystem::path m_dir;
};

class StreamSink : public ReportSink
{
public:
    explicit StreamSink(std::ostream &out) : m_out(out) {}
    void emit(const std::string &name, const std::string &content) override;

private:
    std::ostream &m_out;
};

class MemorySink : public ReportSink
{
public:
    void emit(const std::string &name, const std::string &content) override
    {
        reports.emplace_back(name, content);
    }
    std::vector<std::pair<std::string, std::string>> reports;
};

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int parse_error = 2;
inline constexpr int computation_error = 3;
inline constexpr int example_mismatch = 4;
} // namespace exit_code

// Runs the commands in order. Stops at the first failing command, after
// emitting a JSON error record for it.
int run(const Session &session, const RunOptions &opts, ReportSink &sink);

// --- the worked example over k[x, y^2, y^3] ---------------------------------

struct ExampleOptions {
    int mmax = 6;
    int nmax = 4;
    // Replaces I = (x^2, x y^2); must live in the example ring.
    std::optional<MonomialIdeal> ideal;
    ComputeOptions compute;
};

struct ExampleCheck {
    std::string formula;
    std::string parameter;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct ExampleReport {
    std::vector<ExampleCheck> checks;
    bool all_pass() const;
};

RingPtr example_ring();
// (x^2, x y^2) in example_ring().
MonomialIdeal example_ideal();
ExampleReport reproduce_example(const ExampleOptions &opts);

} // namespace epsmult
