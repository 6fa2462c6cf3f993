#include <epsmult/session.hpp>

#include <algorithm>

#include <epsmult/errors.hpp>
#include <epsmult/invariants.hpp>

namespace epsmult
{

bool ExampleReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const ExampleCheck &c) { return c.pass; });
}

RingPtr example_ring()
{
    static const RingPtr ring = AffineSemigroupRing::semigroup({"x", "y"}, {{1, 0}, {0, 2}, {0, 3}});
    return ring;
}

MonomialIdeal example_ideal()
{
    return MonomialIdeal::from_generators(example_ring(), {{2, 0}, {1, 2}});
}

namespace
{

std::string mn(int m, int n)
{
    return "n=" + std::to_string(n) + " m=" + std::to_string(m);
}

bool within(const Rational &value, const Rational &target, const Rational &rel)
{
    const Rational diff = value > target ? Rational(value - target) : Rational(target - value);
    return diff <= rel * target;
}

} // namespace

ExampleReport reproduce_example(const ExampleOptions &opts)
{
    if (opts.mmax < 6 || opts.nmax < 4) {
        throw PreconditionError("reproduce_example needs mmax >= 6 and nmax >= 4");
    }
    const auto ring = example_ring();
    const auto i = opts.ideal ? *opts.ideal : example_ideal();
    if (!i.ring()->same_as(*ring)) {
        throw RingMismatch("reproduce_example");
    }
    const auto &co = opts.compute;
    const auto max_ideal = maximal_ideal(ring);
    const auto j = MonomialIdeal::from_generators(ring, {{1, 0}, {0, 2}});
    auto x_power = [&](int k) { return principal(ring, ExponentVector{k, 0}); };
    const auto powers = power_filtration(i);

    ExampleReport report;
    auto add = [&](std::string formula, std::string parameter, std::string expected, std::string computed) {
        const bool pass = expected == computed;
        report.checks.push_back({std::move(formula), std::move(parameter), std::move(expected), std::move(computed),
                                 pass});
    };
    auto add_judged = [&](std::string formula, std::string parameter, std::string expected, std::string computed,
                          bool pass) {
        report.checks.push_back({std::move(formula), std::move(parameter), std::move(expected), std::move(computed),
                                 pass});
    };

    for (int m = 1; m <= opts.mmax; ++m) {
        const auto im = powers.ideal_at(m);
        add("(I^m)^sat = x^m", "m=" + std::to_string(m), to_string(x_power(m)), to_string(saturate(im, co)));
        add("h0(I^m) = m(m+1)", "m=" + std::to_string(m), std::to_string(m * (m + 1)),
            std::to_string(h0_length(im, co).count));
    }

    add("lambda(R/J) = 2", "", "2", std::to_string(colength(j, co).count));
    for (int p = 1; p <= opts.mmax; ++p) {
        const auto lo = colength(power(max_ideal, p), co).count;
        const auto hi = colength(power(max_ideal, p + 1), co).count;
        add("dim m^p/m^(p+1) = 2p+1", "p=" + std::to_string(p), std::to_string(2 * p + 1), std::to_string(hi - lo));
    }

    std::vector<Filtration> families;
    for (int n = 1; n <= opts.nmax; ++n) {
        families.push_back(colon_family(powers, max_ideal, n, co));
        for (int m = 1; m <= opts.mmax; ++m) {
            const auto f = families.back().ideal_at(m);
            const auto closed = product(x_power(n * m), product(power(j, n * m - m), max_ideal));
            add("(I^(nm):m^m) = x^(nm) J^(nm-m) m", mn(m, n), to_string(closed), to_string(f));
            const int side = n * m - m + 1;
            add("h0(F(n)_m) = (nm-m+1)^2", mn(m, n), std::to_string(side * side), std::to_string(h0_length(f, co).count));
        }
    }

    const auto eps = epsilon_sequence(powers, opts.mmax, co);
    add_judged("epsilon(I) = 2", "mmax=" + std::to_string(opts.mmax), "2", to_string(eps.limit),
               within(eps.limit, 2, make_rational(1, 100)) && positivity_report(eps));

    std::vector<Rational> ratios;
    for (int n = 1; n <= opts.nmax; ++n) {
        const auto est = epsilon_sequence(families[static_cast<std::size_t>(n - 1)], opts.mmax, co);
        const Rational expected = 2 * (n - 1) * (n - 1);
        if (n == 1) {
            add_judged("epsilon(F(n)) = 2(n-1)^2", "n=1", "0 (not positive)", to_string(est.limit),
                       !positivity_report(est));
        } else {
            add_judged("epsilon(F(n)) = 2(n-1)^2", "n=" + std::to_string(n), to_string(expected),
                       to_string(est.limit), within(est.limit, expected, make_rational(1, 20)));
        }
        ratios.push_back(est.limit / (n * n));
    }
    std::string ratio_text;
    bool monotone = true;
    for (std::size_t k = 0; k < ratios.size(); ++k) {
        ratio_text += (k ? " " : "") + to_string(ratios[k]);
        if (k > 0 && ratios[k] < ratios[k - 1]) {
            monotone = false;
        }
    }
    add_judged("epsilon(F(n))/n^2 increases toward 2", "nmax=" + std::to_string(opts.nmax), "nondecreasing, below 2",
               ratio_text, monotone && ratios.back() < 2);

    add("spread(I) = 2", "", "2", std::to_string(analytic_spread(i).value));
    add("powers(I) Noetherian", "mmax=" + std::to_string(opts.mmax),
        to_string(NoetherianVerdict::ConsistentWithNoetherian), to_string(noetherian_probe(powers, opts.mmax, co).verdict));
    for (int n = 2; n <= opts.nmax; ++n) {
        const auto &fam = families[static_cast<std::size_t>(n - 1)];
        const auto probe = noetherian_probe(fam, opts.mmax, co);
        std::string expected = to_string(NoetherianVerdict::NonNoetherianEvidence) + ":";
        std::string computed = to_string(probe.verdict) + ":";
        for (int m = 2; m <= opts.mmax; ++m) {
            expected += " " + std::to_string(2 * m * n - m + 1);
        }
        for (const auto &e : probe.evidence) {
            computed += " " + std::to_string(e.weight);
        }
        add("new generator x^(2mn-m+1) of F(n)_m", "n=" + std::to_string(n), expected, computed);
        const auto spread = analytic_spread_family(fam, opts.mmax);
        add("spread(F(n)) = 2", "n=" + std::to_string(n), "2 stabilized",
            std::to_string(spread.value) + (spread.stabilized ? " stabilized" : " unstabilized"));
    }
    return report;
}

} // namespace epsmult
