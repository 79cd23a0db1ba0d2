#include "doctest.h"
#include "lart/supra.hpp"
#include "oracles.hpp"

using lart::Multiplex;

TEST_SUITE_BEGIN("supra");

TEST_CASE("single node, two empty layers, eps=1") {
    Multiplex m(1, 2);
    const auto sa = lart::build_supra(m, 1.0);
    CHECK(sa.regularized.coeff(0, 0) == 1.0);
    CHECK(sa.regularized.coeff(0, 1) == 1.0);
    CHECK(sa.regularized.coeff(1, 0) == 1.0);
    CHECK(sa.regularized.coeff(1, 1) == 1.0);
    CHECK(sa.degrees[0] == 2.0);
    CHECK(sa.degrees[1] == 2.0);
    CHECK(sa.raw.sum() == 0.0);
}

TEST_CASE("identically replicated node has degree (d+1)L") {
    // star center 0 with degree d, same in every layer
    const int d = 4, l = 3;
    Multiplex m(d + 1, l);
    for (int k = 0; k < l; ++k)
        for (int v = 1; v <= d; ++v) m.add_edge(k, 0, v);
    const auto sa = lart::build_supra(m, 1.0);
    for (int k = 0; k < l; ++k)
        CHECK(sa.degrees[sa.flat_index(0, k)] == static_cast<double>((d + 1) * l));
}

TEST_CASE("construction invariants on random input") {
    std::mt19937_64 rng(3);
    const auto m = oracle::random_multiplex(rng, 10, 3, 0.3);
    const auto sa = lart::build_supra(m, 0.5);

    const Eigen::MatrixXd raw(sa.raw);
    const Eigen::MatrixXd reg(sa.regularized);
    CHECK((raw - raw.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((reg - reg.transpose()).cwiseAbs().maxCoeff() == 0.0);

    // off-diagonal blocks couple corresponding nodes only
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            if (k == l) continue;
            for (int i = 0; i < 10; ++i)
                for (int j = 0; j < 10; ++j)
                    if (i != j) CHECK(raw(k * 10 + i, l * 10 + j) == 0.0);
        }

    // regularized diagonal of every block >= eps, kappa >= eps*L
    for (int x = 0; x < sa.size(); ++x) {
        CHECK(reg(x, x) >= 0.5);
        CHECK(sa.degrees[x] >= 0.5 * 3);
    }
}

TEST_CASE("matches independently built dense supra") {
    std::mt19937_64 rng(17);
    const auto m = oracle::random_multiplex(rng, 8, 3, 0.35);
    const auto sa = lart::build_supra(m, 1.0);
    const auto ref = oracle::dense_supra(m, 1.0);
    for (int x = 0; x < sa.size(); ++x) {
        CHECK(sa.degrees[x] == doctest::Approx(ref.kappa[x]).epsilon(1e-15));
        for (int y = 0; y < sa.size(); ++y)
            CHECK(sa.regularized.coeff(x, y) == doctest::Approx(ref.a[x][y]).epsilon(1e-15));
    }
}

TEST_CASE("degree identity kappa = deg + eps + sum(omega + eps)") {
    std::mt19937_64 rng(23);
    const auto m = oracle::random_multiplex(rng, 9, 4, 0.3);
    const double eps = 0.25;
    const auto sa = lart::build_supra(m, eps);
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 9; ++i) {
            double expected = m.degree(i, k) + eps;
            for (int l = 0; l < 4; ++l)
                if (l != k) expected += lart::interlayer_weight(m, i, k, l) + eps;
            CHECK(sa.degrees[sa.flat_index(i, k)] == doctest::Approx(expected).epsilon(1e-14));
        }
}

TEST_CASE("fixed-omega variant") {
    Multiplex m(1, 2);
    SUBCASE("omega=1 eps=1") {
        const auto sa = lart::build_supra_fixed(m, 1.0, 1.0);
        CHECK(sa.regularized.coeff(0, 0) == 1.0);
        CHECK(sa.regularized.coeff(0, 1) == 2.0);
        CHECK(sa.regularized.coeff(1, 0) == 2.0);
        CHECK(sa.regularized.coeff(1, 1) == 1.0);
    }
    SUBCASE("omega=0 reproduces eps-only coupling") {
        std::mt19937_64 rng(5);
        const auto mm = oracle::random_multiplex(rng, 6, 2, 0.4);
        const auto sa = lart::build_supra_fixed(mm, 0.0, 1.0);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                CHECK(sa.regularized.coeff(i, 6 + j) == (i == j ? 1.0 : 0.0));
    }
}

TEST_CASE("epsilon out of range rejected") {
    Multiplex m(2, 2);
    CHECK_THROWS_AS(lart::build_supra(m, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(lart::build_supra(m, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(lart::build_supra_fixed(m, -1.0, 1.0), std::invalid_argument);
}

TEST_SUITE_END();
