#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slc/linalg.hpp"

using namespace slc;

namespace {

SymMatrixF float_matrix(std::initializer_list<std::initializer_list<double>> rows) {
    SymMatrixF m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

SymMatrixQ exact_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    SymMatrixQ m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

// R of the counterexample at (1,1,1): diagonal 3*9 = 27, off-diagonal 3 + 3 - 1 = 5.
SymMatrixQ r_at_ones() { return exact_matrix({{27, 5, 5}, {5, 27, 5}, {5, 5, 27}}); }

Rational random_entry(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-30, 30), den(1, 8);
    return Rational(num(rng), den(rng));
}

SymMatrixQ random_symmetric(std::mt19937_64& rng, std::size_t n) {
    SymMatrixQ m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m.set_sym(i, j, random_entry(rng));
    return m;
}

SymMatrixF to_float(const SymMatrixQ& m) {
    return m.map([](const Rational& r) { return r.to_double(); });
}

}  // namespace

TEST_CASE("eigen_sym on known spectra") {
    auto w = eigen_sym(float_matrix({{0, 0, 0}, {0, 1, 1}, {0, 1, 1}})).eigenvalues;
    CHECK(w[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(w[0]) < 1e-12);
    CHECK(std::abs(w[1]) < 1e-12);
    CHECK(std::abs(w[2] - 2.0) < 1e-12);

    auto id = eigen_sym(float_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).eigenvalues;
    for (double v : id) CHECK(v == 1.0);

    // d - o twice and d + 2o
    auto r = eigen_sym(to_float(r_at_ones())).eigenvalues;
    CHECK(std::abs(r[0] - 22.0) < 1e-10 * 37.0);
    CHECK(std::abs(r[1] - 22.0) < 1e-10 * 37.0);
    CHECK(std::abs(r[2] - 37.0) < 1e-10 * 37.0);

    CHECK_THROWS_AS(eigen_sym(float_matrix({{1, 2}, {3, 1}})), std::invalid_argument);
    auto empty = eigen_sym(SymMatrixF(0)).eigenvalues;
    CHECK(empty.empty());
}

TEST_CASE("is_pd_exact via leading minors") {
    const auto minors = leading_principal_minors(r_at_ones());
    REQUIRE(minors.size() == 3);
    CHECK(minors[0] == Rational(27));
    CHECK(minors[1] == Rational(704));
    CHECK(minors[2] == Rational(17908));
    CHECK(is_pd_exact(r_at_ones()));
    CHECK_FALSE(is_pd_exact(SymMatrixQ(3)));
    CHECK_FALSE(is_pd_exact(exact_matrix({{1, 2}, {2, 1}})));
    CHECK(leading_principal_minors(exact_matrix({{1, 2}, {2, 1}}))[1] == Rational(-3));
    // Zero leading pivot needs row exchange in the determinant.
    CHECK(leading_principal_minors(exact_matrix({{0, 1}, {1, 0}}))[1] == Rational(-1));
}

TEST_CASE("is_strictly_diag_dominant") {
    CHECK(is_strictly_diag_dominant(r_at_ones()));
    CHECK_FALSE(is_strictly_diag_dominant(exact_matrix({{1, 1}, {1, 1}})));
    CHECK(is_strictly_diag_dominant(exact_matrix({{2, 0, 0}, {0, 3, 0}, {0, 0, 1}})));
    CHECK_FALSE(is_strictly_diag_dominant(exact_matrix({{4, -3, 2}, {-3, 9, 1}, {2, 1, 5}})));
}

TEST_CASE("property: exact and float definiteness agree away from singularity") {
    std::mt19937_64 rng(101);
    int compared = 0, pd = 0;
    for (int k = 0; k < 500; ++k) {
        const SymMatrixQ m = random_symmetric(rng, 3);
        const auto ev = eigen_sym(to_float(m)).eigenvalues;
        double min_mag = INFINITY;
        for (double v : ev) min_mag = std::min(min_mag, std::abs(v));
        if (min_mag <= 1e-6) continue;
        const bool float_pd = ev.front() > 1e-9;
        REQUIRE(is_pd_exact(m) == float_pd);
        ++compared;
        pd += float_pd;
    }
    CHECK(compared > 450);
    CHECK(pd > 0);
}

TEST_CASE("property: strict dominance with positive diagonal implies PD") {
    std::mt19937_64 rng(202);
    for (int k = 0; k < 500; ++k) {
        const std::size_t n = 1 + rng() % 5;
        SymMatrixQ m = random_symmetric(rng, n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational off;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) off += m(i, j).abs();
            m(i, i) = off + Rational(1 + static_cast<long>(rng() % 5), 7);
        }
        REQUIRE(is_strictly_diag_dominant(m));
        REQUIRE(is_pd_exact(m));
    }
}

TEST_CASE("property: eigenvalue sum is the trace and product the determinant") {
    std::mt19937_64 rng(303);
    for (int k = 0; k < 500; ++k) {
        const std::size_t n = 1 + rng() % 6;
        const SymMatrixQ m = random_symmetric(rng, n);
        const SymMatrixF f = to_float(m);
        const auto ev = eigen_sym(f).eigenvalues;
        REQUIRE(ev.size() == n);
        REQUIRE(std::is_sorted(ev.begin(), ev.end()));
        double sum = 0, prod = 1, trace = 0, abs_sum = 0, abs_prod = 1;
        for (double v : ev) {
            sum += v;
            prod *= v;
            abs_sum += std::abs(v);
            abs_prod *= std::max(std::abs(v), 1e-300);
        }
        for (std::size_t i = 0; i < n; ++i) trace += f(i, i);
        const double det = leading_principal_minors(m).back().to_double();
        REQUIRE(std::abs(sum - trace) <= 1e-9 * std::max(abs_sum, 1.0));
        // Scale by the spectral product magnitudes: relative to the largest
        // eigenvalue power, the determinant is well conditioned.
        const double big = std::pow(std::max(ev.back(), -ev.front()), static_cast<double>(n));
        REQUIRE(std::abs(prod - det) <= 1e-8 * std::max(big, 1e-300));
    }
}

TEST_CASE("eigen_sym accuracy on larger matrices") {
    std::mt19937_64 rng(404);
    for (int k = 0; k < 20; ++k) {
        const SymMatrixF f = to_float(random_symmetric(rng, 16));
        const auto ev = eigen_sym(f).eigenvalues;
        double trace = 0, sum = 0;
        for (std::size_t i = 0; i < 16; ++i) trace += f(i, i);
        for (double v : ev) sum += v;
        CHECK(std::abs(trace - sum) <= 1e-10 * max_abs_entry(f) * 16);
    }
}
