#include "session_interp.hpp"

#include <algorithm>
#include <set>

#include <epsmult/errors.hpp>

namespace epsmult::detail
{

namespace
{

[[noreturn]] void fail(ParseErrorKind kind, const Expr &at, const std::string &message)
{
    throw ParseError(kind, at.pos, to_string(at), message);
}

Exponent int_value(const Expr &e, Exponent lo, Exponent hi, const std::string &what)
{
    if (e.kind != Expr::Kind::Integer) {
        fail(ParseErrorKind::TypeMismatch, e, what + " must be an integer");
    }
    const auto v = static_cast<Exponent>(numerator(e.number));
    if (v < lo || v > hi) {
        fail(ParseErrorKind::InvalidValue, e, what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi)
                                                  + "]");
    }
    return v;
}

Rational rational_value(const Expr &e, const std::string &what)
{
    if (e.kind != Expr::Kind::Integer && e.kind != Expr::Kind::Fraction) {
        fail(ParseErrorKind::TypeMismatch, e, what + " must be a number");
    }
    return e.number;
}

std::vector<Exponent> int_tuple(const Expr &e, std::size_t dim, Exponent lo, const std::string &what)
{
    if (e.kind != Expr::Kind::Tuple) {
        fail(ParseErrorKind::TypeMismatch, e, what + " must be a tuple of integers");
    }
    if (e.items.size() != dim) {
        fail(ParseErrorKind::DimensionMismatch, e,
             what + " has " + std::to_string(e.items.size()) + " entries, expected " + std::to_string(dim));
    }
    std::vector<Exponent> out;
    for (const auto &item : e.items) {
        out.push_back(int_value(item, lo, 1'000'000, what + " entry"));
    }
    return out;
}

void expect_arity(const Expr &call, std::size_t lo, std::size_t hi)
{
    if (call.items.size() < lo || call.items.size() > hi) {
        const std::string expected = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
        fail(ParseErrorKind::ArityError, call,
             call.name + " takes " + expected + " arguments, got " + std::to_string(call.items.size()));
    }
}

void expect_options(const Expr &call, const std::set<std::string> &allowed)
{
    for (const auto &[key, value] : call.options) {
        if (!allowed.contains(key)) {
            fail(ParseErrorKind::InvalidValue, value, call.name + " has no option '" + key + "'");
        }
    }
}

const Expr *find_option(const std::vector<std::pair<std::string, Expr>> &options, const std::string &key)
{
    for (const auto &[k, v] : options) {
        if (k == key) {
            return &v;
        }
    }
    return nullptr;
}

struct VerbSpec {
    std::vector<Statement::Kind> args;
    std::set<std::string> options;
};

VerbSpec spec_for(Verb verb)
{
    using K = Statement::Kind;
    switch (verb) {
        case Verb::Epsilon:
            return {{K::Filtration}, {"mmax", "bound", "threshold"}};
        case Verb::EpsilonColon:
            return {{K::Filtration, K::Ideal}, {"nmax", "bound", "threshold"}};
        case Verb::Amao:
            return {{K::Ideal, K::Ideal}, {"mmax", "bound", "threshold"}};
        case Verb::VolumeTable:
            return {{K::Ideal, K::Ideal}, {"nmax", "mmax", "bound"}};
        case Verb::Spread:
            return {{K::Ideal}, {"bound"}};
        case Verb::SpreadFamily:
            return {{K::Filtration}, {"mmax", "bound"}};
        case Verb::CheckAr:
            return {{K::Filtration}, {"r", "rmax", "mmax", "bound"}};
        case Verb::CheckWg:
            return {{K::Filtration}, {"c", "mmax", "bound"}};
        case Verb::ProbeNoetherian:
            return {{K::Filtration}, {"mmax", "bound"}};
        case Verb::ReproduceExample:
            return {{}, {"mmax", "nmax", "ideal", "bound"}};
    }
    return {};
}

// Smallest accepted mmax / nmax per verb.
int min_mmax(Verb verb)
{
    switch (verb) {
        case Verb::ReproduceExample:
            return 6;
        case Verb::Epsilon:
        case Verb::Amao:
        case Verb::VolumeTable:
        case Verb::ProbeNoetherian:
            return 4;
        default:
            return 1;
    }
}

int min_nmax(Verb verb)
{
    return verb == Verb::VolumeTable ? 3 : 4;
}

} // namespace

RingPtr Interpreter::current_ring(const Expr &at) const
{
    if (!m_current) {
        fail(ParseErrorKind::UnknownName, at, "no ring has been defined yet");
    }
    return m_current;
}

RingPtr Interpreter::ring(const Expr &def) const
{
    auto names_of = [](const std::vector<Expr> &items) {
        std::vector<std::string> names;
        for (const auto &n : items) {
            names.push_back(n.name);
        }
        return names;
    };
    auto build = [&](auto &&make) -> RingPtr {
        try {
            return make();
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &ex) {
            fail(ParseErrorKind::InvalidValue, def, ex.what());
        }
    };
    if (def.name == "poly") {
        return build([&] { return AffineSemigroupRing::polynomial(names_of(def.items)); });
    }
    const auto names = names_of(def.items[0].items);
    std::vector<ExponentVector> gens;
    for (const auto &t : def.items[1].items) {
        gens.emplace_back(int_tuple(t, names.size(), 0, "semigroup generator"));
    }
    return build([&] { return AffineSemigroupRing::semigroup(names, gens); });
}

ExponentVector Interpreter::monomial(const RingPtr &ring, const Expr &e) const
{
    ExponentVector a(ring->ambient_dim());
    std::vector<std::pair<std::string, Exponent>> factors;
    if (e.kind == Expr::Kind::Name) {
        factors.emplace_back(e.name, 1);
    } else if (e.kind == Expr::Kind::Monomial) {
        factors = e.factors;
    } else if (e.kind == Expr::Kind::Integer && e.number == 1) {
        return a;
    } else if (e.kind == Expr::Kind::Tuple) {
        a = ExponentVector(int_tuple(e, ring->ambient_dim(), 0, "exponent"));
        if (!ring->contains(a)) {
            fail(ParseErrorKind::InvalidValue, e, "not a monomial of the current ring");
        }
        return a;
    } else {
        fail(ParseErrorKind::TypeMismatch, e, "expected a monomial");
    }
    std::vector<Exponent> coords(ring->ambient_dim(), 0);
    const auto &vars = ring->var_names();
    for (const auto &[var, exp] : factors) {
        const auto it = std::find(vars.begin(), vars.end(), var);
        if (it == vars.end()) {
            fail(ParseErrorKind::UnknownName, e, "'" + var + "' is not a variable of the current ring");
        }
        coords[static_cast<std::size_t>(it - vars.begin())] += exp;
    }
    a = ExponentVector(std::move(coords));
    if (!ring->contains(a)) {
        fail(ParseErrorKind::InvalidValue, e, "not a monomial of the current ring");
    }
    return a;
}

IdealValue Interpreter::literal(const std::vector<Expr> &items, const Expr &at)
{
    const auto r = current_ring(at);
    std::vector<ExponentVector> gens;
    for (const auto &item : items) {
        gens.push_back(monomial(r, item));
    }
    IdealValue v{r, std::nullopt};
    if (m_evaluate) {
        v.ideal = MonomialIdeal::from_generators(r, std::move(gens));
    }
    return v;
}

IdealValue Interpreter::ideal(const Expr &e, const ComputeOptions &opts)
{
    switch (e.kind) {
        case Expr::Kind::Name: {
            if (e.name == "maxideal") {
                const auto r = current_ring(e);
                return {r, m_evaluate ? std::optional(maximal_ideal(r)) : std::nullopt};
            }
            const auto it = m_env.find(e.name);
            if (it == m_env.end()) {
                fail(ParseErrorKind::UnknownName, e, "'" + e.name + "' is not bound");
            }
            if (it->second.kind != Statement::Kind::Ideal) {
                fail(ParseErrorKind::TypeMismatch, e, "'" + e.name + "' is not an ideal");
            }
            return {it->second.ring, it->second.ideal};
        }
        case Expr::Kind::Tuple:
            return literal(e.items, e);
        case Expr::Kind::Call:
            break;
        default:
            fail(ParseErrorKind::TypeMismatch, e, "expected an ideal (monomial lists are written in parentheses)");
    }

    static const std::set<std::string> binary = {"colon", "sum", "product", "intersect"};
    if (e.name == "ideal") {
        expect_options(e, {});
        return literal(e.items, e);
    }
    if (e.name == "power") {
        expect_arity(e, 2, 2);
        expect_options(e, {});
        auto base = ideal(e.items[0], opts);
        const int n = static_cast<int>(int_value(e.items[1], 0, 1000, "exponent"));
        if (m_evaluate) {
            base.ideal = power(*base.ideal, n);
        }
        return base;
    }
    if (e.name == "saturate") {
        expect_arity(e, 1, 2);
        expect_options(e, {});
        auto a = ideal(e.items[0], opts);
        std::optional<IdealValue> b;
        if (e.items.size() == 2) {
            b = ideal(e.items[1], opts);
            if (!b->ring->same_as(*a.ring)) {
                fail(ParseErrorKind::TypeMismatch, e, "operands live in different rings");
            }
        }
        if (m_evaluate) {
            a.ideal = b ? saturate(*a.ideal, *b->ideal, opts) : saturate(*a.ideal, opts);
        }
        return a;
    }
    if (binary.contains(e.name)) {
        expect_arity(e, 2, 2);
        expect_options(e, {});
        auto a = ideal(e.items[0], opts);
        const auto b = ideal(e.items[1], opts);
        if (!b.ring->same_as(*a.ring)) {
            fail(ParseErrorKind::TypeMismatch, e, "operands live in different rings");
        }
        if (m_evaluate) {
            if (e.name == "colon") {
                if (b.ideal->is_zero()) {
                    throw PreconditionError("colon by the zero ideal");
                }
                a.ideal = colon(*a.ideal, *b.ideal, opts);
            } else if (e.name == "sum") {
                a.ideal = sum(*a.ideal, *b.ideal);
            } else if (e.name == "product") {
                a.ideal = product(*a.ideal, *b.ideal);
            } else {
                a.ideal = intersect(*a.ideal, *b.ideal, opts);
            }
        }
        return a;
    }
    fail(ParseErrorKind::UnknownName, e, "unknown ideal constructor '" + e.name + "'");
}

FiltrationValue Interpreter::filtration(const Expr &e, const ComputeOptions &opts)
{
    if (e.kind == Expr::Kind::Name) {
        const auto it = m_env.find(e.name);
        if (it == m_env.end()) {
            fail(ParseErrorKind::UnknownName, e, "'" + e.name + "' is not bound");
        }
        if (it->second.kind != Statement::Kind::Filtration) {
            fail(ParseErrorKind::TypeMismatch, e, "'" + e.name + "' is not a filtration");
        }
        return {it->second.ring, it->second.filt};
    }
    if (e.kind != Expr::Kind::Call) {
        fail(ParseErrorKind::TypeMismatch, e, "expected a filtration");
    }
    if (e.name == "powers") {
        expect_arity(e, 1, 1);
        expect_options(e, {});
        const auto base = ideal(e.items[0], opts);
        FiltrationValue v{base.ring, std::nullopt};
        if (m_evaluate) {
            v.filt = power_filtration(*base.ideal);
        }
        return v;
    }
    if (e.name == "valfilt") {
        expect_arity(e, 1, 64);
        expect_options(e, {});
        const auto r = current_ring(e);
        std::vector<WeightValuation> vals;
        for (const auto &item : e.items) {
            if (item.kind != Expr::Kind::Weighted) {
                fail(ParseErrorKind::SyntaxError, item, "expected a weighted valuation like (1,1):3/2");
            }
            auto w = int_tuple(item.items[0], r->ambient_dim(), 1, "valuation weight");
            const auto a = rational_value(item.items[1], "valuation coefficient");
            if (a <= 0) {
                fail(ParseErrorKind::InvalidValue, item.items[1], "valuation coefficient must be positive");
            }
            vals.push_back({std::move(w), a});
        }
        FiltrationValue v{r, std::nullopt};
        if (m_evaluate) {
            v.filt = discrete_valued_filtration(r, std::move(vals), opts);
        }
        return v;
    }
    if (e.name == "colonfam") {
        expect_arity(e, 2, 2);
        expect_options(e, {"n"});
        const Expr *n_opt = find_option(e.options, "n");
        if (!n_opt) {
            fail(ParseErrorKind::ArityError, e, "colonfam needs the option n=");
        }
        const int n = static_cast<int>(int_value(*n_opt, 1, 64, "n"));
        const auto base = filtration(e.items[0], opts);
        const auto k = ideal(e.items[1], opts);
        if (!k.ring->same_as(*base.ring)) {
            fail(ParseErrorKind::TypeMismatch, e, "operands live in different rings");
        }
        FiltrationValue v{base.ring, std::nullopt};
        if (m_evaluate) {
            v.filt = colon_family(*base.filt, *k.ideal, n, opts);
        }
        return v;
    }
    if (e.name == "sandwich") {
        expect_arity(e, 2, 2);
        expect_options(e, {"rule", "extra"});
        SandwichRule rule = SandwichRule::Midpoint;
        if (const Expr *r = find_option(e.options, "rule")) {
            if (r->kind != Expr::Kind::Name) {
                fail(ParseErrorKind::TypeMismatch, *r, "rule must be lower, upper or midpoint");
            }
            if (r->name == "lower") {
                rule = SandwichRule::Lower;
            } else if (r->name == "upper") {
                rule = SandwichRule::Upper;
            } else if (r->name != "midpoint") {
                fail(ParseErrorKind::InvalidValue, *r, "rule must be lower, upper or midpoint");
            }
        }
        int extra = 1;
        if (const Expr *x = find_option(e.options, "extra")) {
            extra = static_cast<int>(int_value(*x, 0, 1000, "extra"));
        }
        const auto i = ideal(e.items[0], opts);
        const auto k = ideal(e.items[1], opts);
        if (!k.ring->same_as(*i.ring)) {
            fail(ParseErrorKind::TypeMismatch, e, "operands live in different rings");
        }
        FiltrationValue v{i.ring, std::nullopt};
        if (m_evaluate) {
            v.filt = sandwich_family(*i.ideal, *k.ideal, rule, extra, opts);
        }
        return v;
    }
    fail(ParseErrorKind::UnknownName, e, "unknown filtration constructor '" + e.name + "'");
}

void Interpreter::bind(const Statement &st)
{
    if (m_env.contains(st.name)) {
        throw ParseError(ParseErrorKind::DuplicateName, st.pos, st.name, "'" + st.name + "' is already bound");
    }
    if (st.name == "maxideal") {
        throw ParseError(ParseErrorKind::DuplicateName, st.pos, st.name, "'maxideal' is reserved");
    }
    Binding b{st.kind, nullptr, std::nullopt, std::nullopt};
    switch (st.kind) {
        case Statement::Kind::Ring:
            b.ring = ring(st.value);
            m_current = b.ring;
            break;
        case Statement::Kind::Ideal: {
            auto v = ideal(st.value, m_compute);
            b.ring = v.ring;
            b.ideal = std::move(v.ideal);
            break;
        }
        case Statement::Kind::Filtration: {
            auto v = filtration(st.value, m_compute);
            b.ring = v.ring;
            b.filt = std::move(v.filt);
            break;
        }
        case Statement::Kind::Command:
            return;
    }
    m_env.emplace(st.name, std::move(b));
}

ResolvedCommand Interpreter::command(const Statement &st)
{
    ResolvedCommand cmd;
    cmd.verb = st.verb;
    const auto spec = spec_for(st.verb);

    if (st.args.size() != spec.args.size()) {
        throw ParseError(ParseErrorKind::ArityError, st.pos, to_string(st.verb),
                         to_string(st.verb) + " takes " + std::to_string(spec.args.size()) + " arguments, got "
                             + std::to_string(st.args.size()));
    }
    std::set<std::string> seen;
    for (const auto &[key, value] : st.options) {
        if (!spec.options.contains(key)) {
            fail(ParseErrorKind::InvalidValue, value, to_string(st.verb) + " has no option '" + key + "'");
        }
        if (!seen.insert(key).second) {
            fail(ParseErrorKind::DuplicateName, value, "option '" + key + "' given twice");
        }
    }

    cmd.compute = m_compute;
    if (const Expr *b = find_option(st.options, "bound")) {
        cmd.compute.window_bound = int_value(*b, 0, 100'000, "bound");
    }
    if (const Expr *m = find_option(st.options, "mmax")) {
        cmd.mmax = static_cast<int>(int_value(*m, min_mmax(st.verb), 64, "mmax"));
    }
    if (const Expr *n = find_option(st.options, "nmax")) {
        cmd.nmax = static_cast<int>(int_value(*n, min_nmax(st.verb), 16, "nmax"));
    }
    if (const Expr *r = find_option(st.options, "r")) {
        cmd.r = static_cast<int>(int_value(*r, 1, 64, "r"));
    }
    if (const Expr *r = find_option(st.options, "rmax")) {
        cmd.rmax = static_cast<int>(int_value(*r, 1, 64, "rmax"));
    }
    if (const Expr *t = find_option(st.options, "threshold")) {
        cmd.threshold = rational_value(*t, "threshold");
        if (*cmd.threshold < 0) {
            fail(ParseErrorKind::InvalidValue, *t, "threshold must be nonnegative");
        }
    }
    if (st.verb == Verb::CheckAr && cmd.r.has_value() == cmd.rmax.has_value()) {
        throw ParseError(ParseErrorKind::ArityError, st.pos, "check-ar", "check-ar needs exactly one of r= or rmax=");
    }

    for (std::size_t i = 0; i < st.args.size(); ++i) {
        cmd.arg_text.push_back(to_string(st.args[i]));
        if (spec.args[i] == Statement::Kind::Ideal) {
            cmd.ideals.push_back(ideal(st.args[i], cmd.compute));
        } else {
            cmd.filts.push_back(filtration(st.args[i], cmd.compute));
        }
    }
    RingPtr ring;
    for (const auto &v : cmd.ideals) {
        ring = ring ? ring : v.ring;
        if (!v.ring->same_as(*ring)) {
            fail(ParseErrorKind::TypeMismatch, st.args.back(), "arguments live in different rings");
        }
    }
    for (const auto &v : cmd.filts) {
        ring = ring ? ring : v.ring;
        if (!v.ring->same_as(*ring)) {
            fail(ParseErrorKind::TypeMismatch, st.args.back(), "arguments live in different rings");
        }
    }

    if (const Expr *c = find_option(st.options, "c")) {
        cmd.c = ExponentVector(int_tuple(*c, ring->ambient_dim(), 0, "multiplier"));
        if (!ring->contains(*cmd.c)) {
            fail(ParseErrorKind::InvalidValue, *c, "the multiplier is not a monomial of the ring");
        }
    } else if (st.verb == Verb::CheckWg) {
        throw ParseError(ParseErrorKind::ArityError, st.pos, "check-wg", "check-wg needs the option c=");
    }
    if (const Expr *i = find_option(st.options, "ideal")) {
        cmd.example_ideal = ideal(*i, cmd.compute);
    }
    return cmd;
}

void check_session(const Session &session)
{
    Interpreter interp(false, {});
    for (const auto &st : session.statements) {
        if (st.kind == Statement::Kind::Command) {
            interp.command(st);
        } else {
            interp.bind(st);
        }
    }
}

} // namespace epsmult::detail
