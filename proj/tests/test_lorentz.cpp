#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "flns/fft.hpp"
#include "flns/field.hpp"
#include "flns/grid.hpp"
#include "flns/lorentz_norms.hpp"
#include "flns/multipliers.hpp"
#include "flns/rearrange.hpp"
#include "flns/sampler.hpp"
#include "test_util.hpp"

using namespace flns;
using flns_test::oracle_distribution;
using flns_test::oracle_rearranged_value;
using flns_test::random_atoms;
using flns_test::random_field;

namespace {

// Numerical value of the defining integral (int_0^T (t^{1/q} f*(t))^r dt/t)^{1/r},
// computed piece by piece with composite Simpson in log coordinates.  Fully
// independent of the closed-form stepwise evaluation.
double integral_oracle(const RearrangementProfile& p, double q, double r) {
    long double total = 0.0L;
    for (std::size_t j = 0; j < p.steps(); ++j) {
        double v = p.values[j];
        double b = p.cum_measures[j];
        double xa = j == 0 ? std::log(b) - 50.0 * (q / r) : std::log(p.cum_measures[j - 1]);
        double xb = std::log(b);
        const int N = 2048; // even
        double h = (xb - xa) / N;
        long double acc = 0.0L;
        for (int i = 0; i <= N; ++i) {
            double x = xa + i * h;
            double w = (i == 0 || i == N) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            acc += static_cast<long double>(w * std::exp(x * r / q));
        }
        total += static_cast<long double>(std::pow(v, r)) * acc * static_cast<long double>(h / 3.0);
    }
    return std::pow(static_cast<double>(total), 1.0 / r);
}

SpectralField tg32() { return taylor_green(Grid(2, 32, kTwoPi)); }

} // namespace

TEST_CASE("atom sets reject bad inputs and drop weightless entries") {
    WeightedAtoms a;
    CHECK_THROWS_AS(a.add(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(a.add(std::nan(""), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(a.add(kInf, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(a.add(1.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(a.add(1.0, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(a.add(1.0, kInf), std::invalid_argument);
    CHECK(a.size() == 0);
    a.add(1.0, 0.0); // carries nothing
    CHECK(a.size() == 0);
    a.add(0.0, 1.0); // zero value is legal input (dropped later by rearrange)
    a.add(2.0, 0.5);
    CHECK(a.size() == 2);
}

TEST_CASE("hand-worked rearrangement with ties and zeros") {
    WeightedAtoms a;
    a.add(3.0, 0.5);
    a.add(1.0, 1.0);
    a.add(3.0, 0.25);
    a.add(2.0, 0.5);
    a.add(0.0, 7.0);
    RearrangementProfile p = rearrange(a);
    REQUIRE(p.steps() == 3);
    CHECK(p.values == std::vector<double>{3.0, 2.0, 1.0});
    CHECK(p.cum_measures == std::vector<double>{0.75, 1.25, 2.25});
    CHECK(p.total_measure() == 2.25);
    CHECK_FALSE(p.empty());

    CHECK(p.value_at(0.0) == 3.0);
    CHECK(p.value_at(0.74) == 3.0);
    CHECK(p.value_at(0.75) == 2.0); // right-continuous steps
    CHECK(p.value_at(1.25) == 1.0);
    CHECK(p.value_at(2.2) == 1.0);
    CHECK(p.value_at(2.25) == 0.0);
    CHECK(p.value_at(100.0) == 0.0);
    CHECK_THROWS_AS(p.value_at(-1e-9), std::invalid_argument);

    RearrangementProfile e = rearrange(WeightedAtoms{});
    CHECK(e.empty());
    CHECK(e.total_measure() == 0.0);
    CHECK(e.value_at(0.0) == 0.0);
}

TEST_CASE("rearrangement agrees with the level-set definition on random sets") {
    for (int trial = 0; trial < 200; ++trial) {
        WeightedAtoms a = random_atoms(9000 + static_cast<std::uint64_t>(trial), 64);
        RearrangementProfile p = rearrange(a);

        // values strictly decreasing and positive; measures strictly increasing
        for (std::size_t j = 0; j < p.steps(); ++j) {
            CHECK(p.values[j] > 0.0);
            if (j > 0) {
                CHECK(p.values[j] < p.values[j - 1]);
                CHECK(p.cum_measures[j] > p.cum_measures[j - 1]);
            }
        }

        // distribution function: measure above each step value equals the
        // previous cumulative boundary (exact: dyadic measures)
        CHECK(oracle_distribution(a, 0.0) == p.total_measure());
        for (std::size_t j = 0; j < p.steps(); ++j) {
            double want = j == 0 ? 0.0 : p.cum_measures[j - 1];
            CHECK(oracle_distribution(a, p.values[j]) == want);
        }

        // f*(t) from the inf-over-levels definition at interior points,
        // exactly at every boundary, and past the support
        std::vector<double> probes{0.0, p.total_measure() + 1.0};
        for (std::size_t j = 0; j < p.steps(); ++j) {
            probes.push_back(p.cum_measures[j]);
            double lo = j == 0 ? 0.0 : p.cum_measures[j - 1];
            probes.push_back(0.5 * (lo + p.cum_measures[j]));
        }
        for (double t : probes) CHECK(p.value_at(t) == oracle_rearranged_value(a, t));
    }
}

TEST_CASE("single-step profiles match the closed forms") {
    WeightedAtoms a;
    a.add(1.7, 0.64);
    RearrangementProfile p = rearrange(a);
    const double v = 1.7, m = 0.64;
    for (auto [q, r] : std::vector<std::pair<double, double>>{{2, 1}, {2, 2}, {3, 1.5}, {1, 1}, {1.25, 4}}) {
        double want = v * std::pow(q / r, 1.0 / r) * std::pow(m, 1.0 / q);
        CHECK(lorentz_norm(p, q, r) == doctest::Approx(want).epsilon(1e-15));
    }
    CHECK(lorentz_norm(p, 2.5, kInf) == doctest::Approx(v * std::pow(m, 1.0 / 2.5)).epsilon(1e-15));
    CHECK(lorentz_norm(p, kInf, kInf) == v);
}

TEST_CASE("weak norm takes the max over step corners") {
    WeightedAtoms a;
    a.add(4.0, 0.01);
    a.add(1.0, 10.0);
    RearrangementProfile p = rearrange(a);
    double want = std::max(4.0 * std::pow(0.01, 0.5), 1.0 * std::pow(10.01, 0.5));
    CHECK(lorentz_norm(p, 2.0, kInf) == doctest::Approx(want).epsilon(1e-15));
}

TEST_CASE("closed-form evaluation equals the defining integral") {
    std::vector<std::pair<double, double>> pairs{{2, 1}, {4, 1}, {4.0 / 3.0, 2}, {2, 3}, {3, 1.5}, {1, 1}};
    for (int trial = 0; trial < 10; ++trial) {
        WeightedAtoms a = random_atoms(500 + static_cast<std::uint64_t>(trial), 12, false);
        RearrangementProfile p = rearrange(a);
        if (p.empty()) continue;
        for (auto [q, r] : pairs) {
            double got = lorentz_norm(p, q, r);
            double want = integral_oracle(p, q, r);
            CHECK(got == doctest::Approx(want).epsilon(1e-7));
        }
    }
}

TEST_CASE("the infinite-q pair with finite r is flagged divergent") {
    WeightedAtoms a;
    a.add(2.0, 1.0);
    a.add(1.0, 1.0);
    RearrangementProfile p = rearrange(a);

    LorentzValue lit = lorentz_norm_ex(p, kInf, 2.0);
    CHECK(lit.divergent);
    CHECK(std::isinf(lit.value));

    LorentzValue sur = lorentz_norm_ex(p, kInf, 2.0, InfinityPolicy::sup_surrogate);
    CHECK_FALSE(sur.divergent);
    CHECK(sur.value == 2.0); // treated as the (inf, inf) sup

    // the empty profile has norm zero in every space, no divergence
    LorentzValue empty = lorentz_norm_ex(RearrangementProfile{}, kInf, 2.0);
    CHECK_FALSE(empty.divergent);
    CHECK(empty.value == 0.0);

    CHECK_THROWS_AS(lorentz_norm(p, 0.5, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(lorentz_norm(p, 2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(lorentz_norm(p, std::nan(""), 2.0), std::invalid_argument);
}

TEST_CASE("diagonal spaces coincide with the plain integral norm") {
    for (double pexp : {1.0, 1.5, 2.0, 3.0}) {
        for (int trial = 0; trial < 50; ++trial) {
            WeightedAtoms a = random_atoms(7000 + static_cast<std::uint64_t>(trial), 40);
            RearrangementProfile prof = rearrange(a);
            long double sum = 0.0L;
            for (const auto& [v, m] : a.items) sum += std::pow(static_cast<long double>(v), pexp) * m;
            double want = static_cast<double>(std::pow(sum, 1.0L / pexp));
            double got = lorentz_norm(prof, pexp, pexp);
            CHECK(flns_test::rel_err(got, want) < 1e-13);
        }
    }
}

TEST_CASE("fine-index comparisons hold with their sharp constants") {
    for (int trial = 0; trial < 50; ++trial) {
        WeightedAtoms a = random_atoms(1200 + static_cast<std::uint64_t>(trial), 32);
        RearrangementProfile p = rearrange(a);
        if (p.empty()) continue;
        const double slack = 1.0 + 1e-12;
        for (double q : {1.5, 2.0, 3.0}) {
            // sup bound: ||f||_{q,inf} <= (r/q)^{1/r} ||f||_{q,r}
            for (double r : {1.0, 2.0, 4.0}) {
                double sup = lorentz_norm(p, q, kInf);
                CHECK(sup <= slack * std::pow(r / q, 1.0 / r) * lorentz_norm(p, q, r));
            }
            // ||f||_{q,r2} <= (r1/q)^{1/r1 - 1/r2} ||f||_{q,r1} for r1 < r2
            for (auto [r1, r2] : std::vector<std::pair<double, double>>{{1, 2}, {2, 4}, {1.5, 3}}) {
                double c = std::pow(r1 / q, 1.0 / r1 - 1.0 / r2);
                CHECK(lorentz_norm(p, q, r2) <= slack * c * lorentz_norm(p, q, r1));
            }
        }
    }
}

TEST_CASE("norms are positively homogeneous in the values") {
    WeightedAtoms a = random_atoms(31, 20, true);
    WeightedAtoms b;
    for (const auto& [v, m] : a.items) b.add(3.0 * v, m);
    for (auto [q, r] : std::vector<std::pair<double, double>>{{2, 1}, {2, 2}, {3, kInf}})
        CHECK(lorentz_norm(rearrange(b), q, r) ==
              doctest::Approx(3.0 * lorentz_norm(rearrange(a), q, r)).epsilon(1e-14));
}

TEST_CASE("exponent specification: conjugates and validation") {
    CHECK(NormSpec{0, 1, 2}.conjugate() == kInf);
    CHECK(NormSpec{0, 2, 2}.conjugate() == 2.0);
    CHECK(NormSpec{0, 4, 2}.conjugate() == doctest::Approx(4.0 / 3.0).epsilon(1e-16));
    CHECK(NormSpec{0, 1.5, 2}.conjugate() == doctest::Approx(3.0).epsilon(1e-16));
    CHECK(NormSpec{0, kInf, 2}.conjugate() == 1.0);

    CHECK_NOTHROW((NormSpec{-1.0, 2, 2}).validate());
    CHECK_THROWS_AS((NormSpec{0, 0.5, 2}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((NormSpec{0, 2, 0.5}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((NormSpec{kInf, 2, 2}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((NormSpec{std::nan(""), 2, 2}).validate(), std::invalid_argument);
}

TEST_CASE("vortex array spectral norm has the pencil-and-paper value") {
    SpectralField u = tg32();
    double got = sfl_norm(u, NormSpec{0.0, 2.0, 2.0});
    double want = M_PI * std::sqrt(2.0);
    CHECK(flns_test::rel_err(got, want) < 1e-14);

    // band-limited data: the value does not move with the resolution
    SpectralField u48 = taylor_green(Grid(2, 48, kTwoPi));
    CHECK(flns_test::rel_err(sfl_norm(u48, NormSpec{0.0, 2.0, 2.0}), want) < 1e-14);

    // each component alone carries pi; they combine in l2
    double one = M_PI;
    SpectralField c0(u.grid, 1), c1(u.grid, 1);
    for (std::size_t m = 0; m < u.modes(); ++m) {
        c0.at(0, m) = u.at(0, m);
        c1.at(0, m) = u.at(1, m);
    }
    c0.refresh_mean_flag();
    c1.refresh_mean_flag();
    CHECK(flns_test::rel_err(sfl_norm(c0, NormSpec{0.0, 2.0, 2.0}), one) < 1e-14);
    CHECK(flns_test::rel_err(sfl_norm(c1, NormSpec{0.0, 2.0, 2.0}), one) < 1e-14);
    double combined = std::hypot(sfl_norm(c0, NormSpec{0.0, 2.0, 2.0}), sfl_norm(c1, NormSpec{0.0, 2.0, 2.0}));
    CHECK(flns_test::rel_err(sfl_norm(u, NormSpec{0.0, 2.0, 2.0}), combined) < 1e-14);
}

TEST_CASE("homogeneous norms demand mean-zero data") {
    Grid g(2, 16, kTwoPi);
    SpectralField f = random_field(g, 55, 1);
    f.at(0, 0) = Complex(0.3, 0.0);
    f.refresh_mean_flag();
    CHECK_THROWS_AS(sfl_norm(f, NormSpec{0.0, 2.0, 2.0}), std::domain_error);
    CHECK_THROWS_AS(fourier_lebesgue_norm(f, 0.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(classical_sobolev_norm(f, 0.0, 2.0), std::domain_error);
}

TEST_CASE("integrability one conjugates to the divergent pair") {
    SpectralField u = tg32();
    SflValue lit = sfl_norm_ex(u, NormSpec{0.0, 1.0, 2.0});
    CHECK(lit.divergent);
    CHECK(std::isinf(lit.value));

    SflValue sur = sfl_norm_ex(u, NormSpec{0.0, 1.0, 2.0, InfinityPolicy::sup_surrogate});
    CHECK_FALSE(sur.divergent);
    // sup of W |u^| per component is 2 pi / 4; two components in l2
    double want = std::hypot(M_PI / 2.0, M_PI / 2.0);
    CHECK(flns_test::rel_err(sur.value, want) < 1e-14);

    // r = infinity needs no surrogate at p = 1
    SflValue winf = sfl_norm_ex(u, NormSpec{0.0, 1.0, kInf});
    CHECK_FALSE(winf.divergent);
    CHECK(flns_test::rel_err(winf.value, want) < 1e-14);
}

TEST_CASE("direct integral route equals the rearranged route on the diagonal") {
    Grid g(2, 32, kTwoPi);
    for (int trial = 0; trial < 20; ++trial) {
        SpectralField f = random_field(g, 300 + static_cast<std::uint64_t>(trial), 2, 1.0);
        for (double pexp : {1.0, 1.5, 2.0, 3.0}) {
            double direct = fourier_lebesgue_norm(f, 0.5, pexp);
            NormSpec spec{0.5, pexp, 0.0};
            spec.r = spec.conjugate();
            spec.policy = InfinityPolicy::literal;
            double viarearr = sfl_norm(f, spec);
            CHECK(flns_test::rel_err(viarearr, direct) < 1e-13);
        }
    }
}

TEST_CASE("physical-side norm matches the spectral route at integrability two") {
    Grid g(2, 32, kTwoPi);
    for (int trial = 0; trial < 10; ++trial) {
        SpectralField f = random_field(g, 800 + static_cast<std::uint64_t>(trial), 2, 1.0);
        for (double s : {0.0, 1.0, 0.5}) {
            double classical = classical_sobolev_norm(f, s, 2.0);
            double spectral = sfl_norm(f, NormSpec{s, 2.0, 2.0});
            CHECK(flns_test::rel_err(classical, spectral) < 1e-12);
        }
    }
    SpectralField f = random_field(g, 99, 1);
    CHECK_THROWS_AS(classical_sobolev_norm(f, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(classical_sobolev_norm(f, 0.0, kInf), std::invalid_argument);
}

TEST_CASE("spectral norms scale linearly with the field") {
    Grid g(2, 16, kTwoPi);
    SpectralField f = random_field(g, 123, 2, 1.0);
    for (auto spec : {NormSpec{0.5, 2.0, 1.0}, NormSpec{-0.5, 2.0, kInf}, NormSpec{1.0, 4.0, 2.0}}) {
        double base = sfl_norm(f, spec);
        CHECK(flns_test::rel_err(sfl_norm(2.5 * f, spec), 2.5 * base) < 1e-13);
    }
}

TEST_CASE("heat flow never increases a spectral norm") {
    Grid g(2, 24, kTwoPi);
    std::vector<NormSpec> specs{{0.0, 2.0, 2.0}, {1.0, 2.0, 1.0}, {0.5, 4.0, kInf}, {-0.5, 3.0, 2.0}};
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> tdist(0.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        SpectralField f = random_field(g, 600 + static_cast<std::uint64_t>(trial), 2, 1.0);
        double t = tdist(rng);
        SpectralField e = heat_evolve(f, t);
        for (const auto& spec : specs) {
            double before = sfl_norm(f, spec);
            double after = sfl_norm(e, spec);
            CHECK(after <= before * (1.0 + 1e-12));
        }
    }
}
