#include <epsmult/session.hpp>

#include <cctype>
#include <sstream>

#include "session_interp.hpp"

namespace epsmult
{

std::string to_string(ParseErrorKind kind)
{
    switch (kind) {
        case ParseErrorKind::SyntaxError:
            return "SyntaxError";
        case ParseErrorKind::UnknownName:
            return "UnknownName";
        case ParseErrorKind::ArityError:
            return "ArityError";
        case ParseErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ParseErrorKind::TypeMismatch:
            return "TypeMismatch";
        case ParseErrorKind::InvalidValue:
            return "InvalidValue";
        case ParseErrorKind::DuplicateName:
            return "DuplicateName";
    }
    return "SyntaxError";
}

ParseError::ParseError(ParseErrorKind kind, SourcePos pos, std::string token, const std::string &message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + to_string(kind) + ": "
                         + message + (token.empty() ? "" : " (at '" + token + "')")),
      m_kind(kind), m_pos(pos), m_token(std::move(token)), m_message(message)
{
}

bool operator==(const Expr &a, const Expr &b)
{
    return a.kind == b.kind && a.name == b.name && a.number == b.number && a.factors == b.factors
           && a.items == b.items && a.options == b.options;
}

bool operator==(const Statement &a, const Statement &b)
{
    return a.kind == b.kind && a.name == b.name && a.value == b.value && a.verb == b.verb && a.args == b.args
           && a.options == b.options;
}

namespace
{

const std::vector<std::pair<Verb, std::string>> &verb_names()
{
    static const std::vector<std::pair<Verb, std::string>> names = {
        {Verb::Epsilon, "epsilon"},
        {Verb::EpsilonColon, "epsilon-colon"},
        {Verb::Amao, "amao"},
        {Verb::VolumeTable, "volume-table"},
        {Verb::Spread, "spread"},
        {Verb::SpreadFamily, "spread-family"},
        {Verb::CheckAr, "check-ar"},
        {Verb::CheckWg, "check-wg"},
        {Verb::ProbeNoetherian, "probe-noetherian"},
        {Verb::ReproduceExample, "reproduce-example"},
    };
    return names;
}

// --- lexer ----------------------------------------------------------------

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    SourcePos pos;
};

std::vector<Token> tokenize_line(const std::string &line, int line_no)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char ch = line[i];
        const SourcePos pos{line_no, static_cast<int>(i) + 1};
        if (ch == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i + 1;
            while (j < line.size()) {
                const auto c = static_cast<unsigned char>(line[j]);
                if (std::isalnum(c) || c == '_') {
                    ++j;
                } else if (c == '-' && j + 1 < line.size() && std::isalpha(static_cast<unsigned char>(line[j + 1]))) {
                    ++j;
                } else {
                    break;
                }
            }
            out.push_back({Token::Kind::Ident, line.substr(i, j - i), pos});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) {
                ++j;
            }
            out.push_back({Token::Kind::Int, line.substr(i, j - i), pos});
            i = j;
            continue;
        }
        if (std::string_view("()=,^*:/").find(ch) != std::string_view::npos) {
            out.push_back({Token::Kind::Punct, std::string(1, ch), pos});
            ++i;
            continue;
        }
        throw ParseError(ParseErrorKind::SyntaxError, pos, std::string(1, ch), "unexpected character");
    }
    out.push_back({Token::Kind::End, "", {line_no, static_cast<int>(line.size()) + 1}});
    return out;
}

// --- parser ---------------------------------------------------------------

class LineParser
{
public:
    explicit LineParser(std::vector<Token> tokens) : m_tokens(std::move(tokens)) {}

    Statement statement()
    {
        Statement st;
        st.pos = peek().pos;
        const Token head = expect_ident("a statement keyword");
        if (head.text == "ring") {
            st.kind = Statement::Kind::Ring;
            st.name = expect_ident("a binding name").text;
            expect_punct('=');
            st.value = ring_definition();
        } else if (head.text == "ideal" || head.text == "filtration") {
            st.kind = head.text == "ideal" ? Statement::Kind::Ideal : Statement::Kind::Filtration;
            st.name = expect_ident("a binding name").text;
            expect_punct('=');
            st.value = expr();
        } else if (head.text == "cmd") {
            st.kind = Statement::Kind::Command;
            const Token verb = expect_ident("a command verb");
            const auto v = parse_verb(verb.text);
            if (!v) {
                throw ParseError(ParseErrorKind::UnknownName, verb.pos, verb.text, "unknown command verb");
            }
            st.verb = *v;
            while (peek().kind != Token::Kind::End) {
                if (peek().kind == Token::Kind::Ident && peek(1).text == "=") {
                    std::string key = next().text;
                    next();
                    st.options.emplace_back(std::move(key), expr());
                } else {
                    if (!st.options.empty()) {
                        throw ParseError(ParseErrorKind::SyntaxError, peek().pos, peek().text,
                                         "positional argument after an option");
                    }
                    st.args.push_back(expr());
                }
            }
        } else {
            throw ParseError(ParseErrorKind::SyntaxError, head.pos, head.text,
                             "expected 'ring', 'ideal', 'filtration' or 'cmd'");
        }
        expect_end();
        return st;
    }

private:
    const Token &peek(std::size_t ahead = 0) const
    {
        return m_tokens[std::min(m_at + ahead, m_tokens.size() - 1)];
    }
    Token next()
    {
        Token t = peek();
        if (m_at < m_tokens.size() - 1) {
            ++m_at;
        }
        return t;
    }
    bool accept(char p)
    {
        if (peek().kind == Token::Kind::Punct && peek().text[0] == p) {
            next();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string &what) const
    {
        const auto &t = peek();
        throw ParseError(ParseErrorKind::SyntaxError, t.pos, t.kind == Token::Kind::End ? "end of line" : t.text,
                         "expected " + what);
    }
    void expect_punct(char p)
    {
        if (!accept(p)) {
            fail(std::string("'") + p + "'");
        }
    }
    Token expect_ident(const std::string &what)
    {
        if (peek().kind != Token::Kind::Ident) {
            fail(what);
        }
        return next();
    }
    void expect_end()
    {
        if (peek().kind != Token::Kind::End) {
            fail("end of line");
        }
    }
    Exponent integer()
    {
        if (peek().kind != Token::Kind::Int) {
            fail("an integer");
        }
        const Token t = next();
        if (t.text.size() > 15) {
            throw ParseError(ParseErrorKind::InvalidValue, t.pos, t.text, "integer too large");
        }
        return std::stoll(t.text);
    }

    Expr ring_definition()
    {
        const SourcePos pos = peek().pos;
        const Token kind = expect_ident("'poly' or 'semigroup'");
        Expr e;
        e.kind = Expr::Kind::Call;
        e.pos = pos;
        if (kind.text == "poly") {
            e.name = "poly";
            e.items = name_list();
        } else if (kind.text == "semigroup") {
            e.name = "semigroup";
            for (const char *part : {"vars", "gens"}) {
                Expr sub;
                sub.kind = Expr::Kind::Call;
                sub.pos = peek().pos;
                const Token t = expect_ident(std::string("'") + part + "'");
                if (t.text != part) {
                    throw ParseError(ParseErrorKind::SyntaxError, t.pos, t.text, std::string("expected '") + part + "'");
                }
                sub.name = part;
                if (sub.name == "vars") {
                    sub.items = name_list();
                } else {
                    expect_punct('(');
                    do {
                        sub.items.push_back(primary());
                    } while (accept(','));
                    expect_punct(')');
                }
                e.items.push_back(std::move(sub));
            }
        } else {
            throw ParseError(ParseErrorKind::SyntaxError, kind.pos, kind.text, "expected 'poly' or 'semigroup'");
        }
        return e;
    }

    std::vector<Expr> name_list()
    {
        std::vector<Expr> names;
        expect_punct('(');
        do {
            Expr n;
            n.pos = peek().pos;
            n.kind = Expr::Kind::Name;
            n.name = expect_ident("a variable name").text;
            names.push_back(std::move(n));
        } while (accept(','));
        expect_punct(')');
        return names;
    }

    Expr expr()
    {
        Expr e = primary();
        if (peek().text == ":" && peek().kind == Token::Kind::Punct) {
            const SourcePos pos = next().pos;
            if (e.kind != Expr::Kind::Tuple) {
                throw ParseError(ParseErrorKind::SyntaxError, pos, ":", "only a weight tuple may carry ':'");
            }
            Expr w;
            w.kind = Expr::Kind::Weighted;
            w.pos = e.pos;
            w.items.push_back(std::move(e));
            w.items.push_back(number());
            return w;
        }
        return e;
    }

    Expr number()
    {
        Expr e;
        e.pos = peek().pos;
        const Exponent num = integer();
        e.kind = Expr::Kind::Integer;
        e.number = num;
        if (accept('/')) {
            const SourcePos dpos = peek().pos;
            const Exponent den = integer();
            if (den == 0) {
                throw ParseError(ParseErrorKind::InvalidValue, dpos, "0", "zero denominator");
            }
            e.number = make_rational(num, den);
            if (denominator(e.number) != 1) {
                e.kind = Expr::Kind::Fraction;
            }
        }
        return e;
    }

    Expr primary()
    {
        const Token &t = peek();
        if (t.kind == Token::Kind::Int) {
            return number();
        }
        if (accept('(')) {
            Expr e;
            e.kind = Expr::Kind::Tuple;
            e.pos = t.pos;
            if (!accept(')')) {
                do {
                    e.items.push_back(expr());
                } while (accept(','));
                expect_punct(')');
            }
            return e;
        }
        if (t.kind != Token::Kind::Ident) {
            fail("an expression");
        }
        const Token id = next();
        Expr e;
        e.pos = id.pos;
        if (accept('(')) {
            e.kind = Expr::Kind::Call;
            e.name = id.text;
            if (!accept(')')) {
                do {
                    if (peek().kind == Token::Kind::Ident && peek(1).text == "=") {
                        std::string key = next().text;
                        next();
                        e.options.emplace_back(std::move(key), expr());
                    } else {
                        if (!e.options.empty()) {
                            fail("an option (name=value) after options");
                        }
                        e.items.push_back(expr());
                    }
                } while (accept(','));
                expect_punct(')');
            }
            return e;
        }
        e.kind = Expr::Kind::Monomial;
        e.factors.emplace_back(id.text, 1);
        while (true) {
            if (accept('^')) {
                e.factors.back().second = integer();
            } else if (accept('*')) {
                e.factors.emplace_back(expect_ident("a variable").text, 1);
            } else {
                break;
            }
        }
        if (e.factors.size() == 1 && e.factors.front().second == 1) {
            e.kind = Expr::Kind::Name;
            e.name = id.text;
            e.factors.clear();
        }
        return e;
    }

    std::vector<Token> m_tokens;
    std::size_t m_at = 0;
};

std::string join(const std::vector<Expr> &items)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i ? ", " : "") + to_string(items[i]);
    }
    return out;
}

} // namespace

std::string to_string(Verb verb)
{
    for (const auto &[v, name] : verb_names()) {
        if (v == verb) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Verb> parse_verb(const std::string &text)
{
    for (const auto &[v, name] : verb_names()) {
        if (name == text) {
            return v;
        }
    }
    return std::nullopt;
}

std::string to_string(const Expr &e)
{
    switch (e.kind) {
        case Expr::Kind::Name:
            return e.name;
        case Expr::Kind::Integer:
        case Expr::Kind::Fraction:
            return to_string(e.number);
        case Expr::Kind::Monomial: {
            if (e.factors.empty()) {
                return "1";
            }
            std::string out;
            for (std::size_t i = 0; i < e.factors.size(); ++i) {
                out += (i ? "*" : "") + e.factors[i].first;
                if (e.factors[i].second != 1) {
                    out += "^" + std::to_string(e.factors[i].second);
                }
            }
            return out;
        }
        case Expr::Kind::Tuple:
            return "(" + join(e.items) + ")";
        case Expr::Kind::Call: {
            std::string out = e.name + "(" + join(e.items);
            for (std::size_t i = 0; i < e.options.size(); ++i) {
                out += (i || !e.items.empty() ? ", " : "") + e.options[i].first + "=" + to_string(e.options[i].second);
            }
            return out + ")";
        }
        case Expr::Kind::Weighted:
            return to_string(e.items[0]) + ":" + to_string(e.items[1]);
    }
    return "";
}

std::string to_string(const Statement &s)
{
    switch (s.kind) {
        case Statement::Kind::Ring:
            if (s.value.name == "poly") {
                return "ring " + s.name + " = poly(" + join(s.value.items) + ")";
            }
            return "ring " + s.name + " = semigroup vars(" + join(s.value.items[0].items) + ") gens("
                   + join(s.value.items[1].items) + ")";
        case Statement::Kind::Ideal:
            return "ideal " + s.name + " = " + to_string(s.value);
        case Statement::Kind::Filtration:
            return "filtration " + s.name + " = " + to_string(s.value);
        case Statement::Kind::Command: {
            std::string out = "cmd " + to_string(s.verb);
            for (const auto &a : s.args) {
                out += " " + to_string(a);
            }
            for (const auto &[k, v] : s.options) {
                out += " " + k + "=" + to_string(v);
            }
            return out;
        }
    }
    return "";
}

std::size_t Session::binding_count() const
{
    std::size_t n = 0;
    for (const auto &s : statements) {
        n += s.kind != Statement::Kind::Command;
    }
    return n;
}

std::size_t Session::command_count() const
{
    return statements.size() - binding_count();
}

Session parse_session(const std::string &text)
{
    Session session;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        auto tokens = tokenize_line(line, line_no);
        if (tokens.size() == 1) {
            continue;
        }
        session.statements.push_back(LineParser(std::move(tokens)).statement());
    }
    detail::check_session(session);
    return session;
}

std::string print_session(const Session &session)
{
    std::string out;
    for (const auto &s : session.statements) {
        out += to_string(s) + "\n";
    }
    return out;
}

} // namespace epsmult
