#pragma once

// Name resolution and evaluation shared by the static checker and the runner.
// In checking mode nothing is computed: values carry only their ring.

#include <map>
#include <optional>
#include <string>

#include <epsmult/session.hpp>

namespace epsmult::detail
{

struct IdealValue {
    RingPtr ring;
    std::optional<MonomialIdeal> ideal;
};

struct FiltrationValue {
    RingPtr ring;
    std::optional<Filtration> filt;
};

// A command with its arguments resolved. Options absent from the statement
// are left unset and defaulted by the runner.
struct ResolvedCommand {
    Verb verb = Verb::Epsilon;
    std::vector<IdealValue> ideals;
    std::vector<FiltrationValue> filts;
    std::vector<std::string> arg_text;
    std::optional<int> mmax;
    std::optional<int> nmax;
    std::optional<int> r;
    std::optional<int> rmax;
    std::optional<Rational> threshold;
    std::optional<ExponentVector> c;
    std::optional<IdealValue> example_ideal;
    ComputeOptions compute;
};

class Interpreter
{
public:
    Interpreter(bool evaluate, ComputeOptions compute) : m_evaluate(evaluate), m_compute(compute) {}

    // Binds a ring, ideal or filtration statement.
    void bind(const Statement &st);
    ResolvedCommand command(const Statement &st);

private:
    struct Binding {
        Statement::Kind kind;
        RingPtr ring;
        std::optional<MonomialIdeal> ideal;
        std::optional<Filtration> filt;
    };

    RingPtr current_ring(const Expr &at) const;
    RingPtr ring(const Expr &def) const;
    IdealValue ideal(const Expr &e, const ComputeOptions &opts);
    FiltrationValue filtration(const Expr &e, const ComputeOptions &opts);
    IdealValue literal(const std::vector<Expr> &items, const Expr &at);
    ExponentVector monomial(const RingPtr &ring, const Expr &e) const;

    bool m_evaluate;
    ComputeOptions m_compute;
    std::map<std::string, Binding> m_env;
    RingPtr m_current;
};

void check_session(const Session &session);

} // namespace epsmult::detail
