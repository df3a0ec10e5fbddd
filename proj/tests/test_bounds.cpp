#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qspread/bounds.hpp"
#include "qspread/catalog.hpp"
#include "qspread/combinatorics.hpp"
#include "qspread/spectrum.hpp"

using namespace qspread;

namespace {

Graph named(Family f, std::vector<int> params) { return generate_named(f, params); }

DegreeProfile profile(Family f, std::vector<int> params) { return degree_profile(named(f, params)); }

DegreeProfile synthetic(int n, int m, int max_degree, int min_degree) {
    DegreeProfile p;
    p.n = n;
    p.m = m;
    p.max_degree = max_degree;
    p.min_degree = min_degree;
    return p;
}

SymmetricMatrix mat2(double a, double b, double c) { return SymmetricMatrix((Eigen::MatrixXd(2, 2) << a, b, b, c).finished()); }

constexpr double kTol = 1e-9;

}  // namespace

TEST_CASE("generic matrix bounds") {
    // |W|_F^2 = 4 and tr W = 2 give sqrt(8 - 4) = 2, the spread itself
    CHECK(mirsky_upper(mat2(1, 1, 1)) == doctest::Approx(2.0));
    CHECK(std::abs(mirsky_upper(SymmetricMatrix::identity(5))) <= kTol);
    CHECK(mirsky_upper(signless_laplacian_matrix(named(Family::complete_bipartite, {2, 2}))) == doctest::Approx(4.0));

    CHECK(barnes_hoffman_lower(signless_laplacian_matrix(named(Family::complete, {2}))) == doctest::Approx(2.0));
    CHECK(barnes_hoffman_lower(mat2(5, 0, 2)) == doctest::Approx(3.0));
    CHECK(barnes_hoffman_lower(signless_laplacian_matrix(named(Family::star, {4}))) == doctest::Approx(std::sqrt(12.0)));

    CHECK(jiang_zhan_lower(signless_laplacian_matrix(named(Family::complete, {2}))) == doctest::Approx(2.0));
    const auto q13 = signless_laplacian_matrix(named(Family::star, {4}));
    CHECK(jiang_zhan_lower(q13) == doctest::Approx(4.0));
    CHECK(jiang_zhan_pair_squared(q13, 0, 1) == doctest::Approx(16.0));

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = generate_random_connected(10, 12 + static_cast<int>(seed), seed);
        for (const auto& w : {signless_laplacian_matrix(g), adjacency_matrix(g), laplacian_matrix(g)}) {
            const double spread = eigenvalues(w).spread();
            CHECK(jiang_zhan_lower(w) >= barnes_hoffman_lower(w) - kTol);
            CHECK(barnes_hoffman_lower(w) <= spread + 1e-6);
            CHECK(mirsky_upper(w) >= spread - 1e-6);
        }
    }
}

TEST_CASE("vertex bipartiteness bounds") {
    CHECK(lb_mu1_minus_vb(4.0, 0).value == doctest::Approx(4.0));
    CHECK(lb_mu1_minus_vb(2.0, 0).value == doctest::Approx(2.0));
    const double mu1_c5 = spread_report(named(Family::cycle, {5})).mu1;
    CHECK(lb_mu1_minus_vb(mu1_c5, vertex_bipartiteness(named(Family::cycle, {5}))).value == doctest::Approx(mu1_c5 - 1));

    CHECK(lb_4m_over_n_minus_vb(profile(Family::complete_bipartite, {2, 2}), 0).value == doctest::Approx(4.0));
    CHECK(lb_4m_over_n_minus_vb(profile(Family::complete, {2}), 0).value == doctest::Approx(2.0));
    CHECK(lb_4m_over_n_minus_vb(profile(Family::complete, {4}), vertex_bipartiteness(named(Family::complete, {4}))).value ==
          doctest::Approx(4.0));

    CHECK(lb_2lambda1_minus_vb(2.0, 0).value == doctest::Approx(4.0));
    CHECK(lb_2lambda1_minus_vb(1.0, 0).value == doctest::Approx(2.0));
    CHECK(lb_2lambda1_minus_vb(spread_report(named(Family::cycle, {5})).lambda1, 1).value == doctest::Approx(3.0));
}

TEST_CASE("degree bounds") {
    CHECK(lb_degree_two_case(profile(Family::complete, {2})).value == doctest::Approx(2.0));
    CHECK(lb_degree_two_case(synthetic(40, 322, 23, 9)).value == doctest::Approx(std::sqrt(260.0)));
    CHECK(lb_degree_two_case(profile(Family::path, {2})).value == doctest::Approx(2.0));

    CHECK(std::abs(lb_jz_degree_form(synthetic(40, 634, 36, 27)).value - 14.53) <= 0.01);
    CHECK(std::abs(lb_jz_degree_form(synthetic(40, 322, 23, 9)).value - 16.25) <= 0.01);
    CHECK(lb_jz_degree_form(profile(Family::star, {4})).value == doctest::Approx(4.0));

    CHECK(lb_regular_sqrt(profile(Family::complete, {4})).value == doctest::Approx(4.0));
    CHECK(lb_regular_sqrt(profile(Family::complete, {2})).value == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(lb_regular_sqrt(profile(Family::cycle, {4})).value == doctest::Approx(2.0 * std::sqrt(3.0)));
    CHECK_THROWS_AS(lb_regular_sqrt(profile(Family::star, {4})), BoundDomainError);

    CHECK(lb_zagreb(degree_profile(oracle::circulant_regular(9, 4))).value == doctest::Approx(4.0));
    CHECK(lb_zagreb(profile(Family::cycle, {7})).value == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(lb_zagreb(profile(Family::complete, {2})).value == doctest::Approx(2.0));
    CHECK(lb_zagreb(profile(Family::path, {3})).value == doctest::Approx((2.0 / 3.0) * std::sqrt(14.0)));

    CHECK(lb_liu_delta(profile(Family::complete, {2})).value == doctest::Approx(1.0));
    CHECK(lb_liu_delta(profile(Family::star, {4})).value == doctest::Approx(3.0));
    CHECK(lb_liu_delta(profile(Family::cycle, {8})).strict);

    CHECK(std::abs(lb_l2(synthetic(40, 634, 36, 27)).value - 28.68) <= 0.01);
    CHECK(std::abs(lb_l2(synthetic(40, 322, 23, 9)).value - 11.06) <= 0.01);
    for (int k = 2; k <= 6; ++k) {
        auto p = degree_profile(oracle::circulant_regular(12, k));
        CHECK(lb_l2(p).value == doctest::Approx(12.0 * k / 11.0));
        CHECK(lb_l1_formula(p).value == doctest::Approx(2.0 * std::sqrt(k + 1.0)));
    }
    CHECK(lb_l1_formula(profile(Family::star, {6})).value == doctest::Approx(std::sqrt(25.0 + 7.0)));
    CHECK(lb_l1_formula(profile(Family::path, {7})).value == doctest::Approx(std::sqrt(4.0 + 7.0)));
}

TEST_CASE("moment and regular bounds") {
    for (int k = 1; k <= 8; ++k) {
        Graph g = named(Family::complete, {k + 1});
        CHECK(lb_cubic_moment(g, degree_profile(g)).value == doctest::Approx(k + 1.0));
        Graph c = oracle::circulant_regular(2 * k + 2, k);
        CHECK(lb_cubic_moment(c, degree_profile(c)).value == doctest::Approx(k + 1.0));
    }
    Graph k2 = named(Family::complete, {2});
    CHECK(std::abs(cubic_moment_upsilon(k2, degree_profile(k2))) <= kTol);
    CHECK(lb_cubic_moment(k2, degree_profile(k2)).value == doctest::Approx(2.0));
    for (int k = 1; k <= 6; ++k) {
        Graph g = named(Family::complete_bipartite, {k, k});
        CHECK(lb_cubic_moment(g, degree_profile(g)).value == doctest::Approx((2.0 * k * k + 2.0 * k) / (2.0 * k)));
    }

    CHECK(lb_regular_kplus1(profile(Family::complete, {4})).value == doctest::Approx(4.0));
    CHECK(lb_regular_kplus1(profile(Family::cycle, {4})).value == doctest::Approx(3.0));
    CHECK(lb_regular_kplus1(profile(Family::complete, {2})).value == doctest::Approx(2.0));

    CHECK(lb_path_universal(2).value == doctest::Approx(2.0));
    CHECK(lb_path_universal(3).value == doctest::Approx(3.0));
    CHECK(lb_path_universal(2000).value == doctest::Approx(4.0).epsilon(1e-5));
}

TEST_CASE("upper bounds") {
    for (int k = 1; k <= 6; ++k) CHECK(ub_mirsky_q(profile(Family::complete_bipartite, {k, k})).value == doctest::Approx(2.0 * k));
    for (int k = 2; k <= 5; ++k) {
        auto p = degree_profile(oracle::circulant_regular(11 + (k % 2), k));
        CHECK(ub_mirsky_q(p).value == doctest::Approx(std::sqrt(2.0 * p.n * k)));
    }
    CHECK(ub_mirsky_q(profile(Family::complete, {2})).value == doctest::Approx(2.0));

    CHECK(ub_mirsky_q_degreeonly(profile(Family::complete_bipartite, {2, 2})).value == doctest::Approx(4.0));
    CHECK(ub_mirsky_q_degreeonly(profile(Family::star, {4})).value == doctest::Approx(std::sqrt(18.0)));
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto p = degree_profile(generate_random_connected(15, 20 + static_cast<int>(seed), seed));
        CHECK(ub_mirsky_q_degreeonly(p).value >= ub_mirsky_q(p).value - kTol);
    }

    CHECK(ub_global_2n4(5).value == doctest::Approx(6.0));
    CHECK(ub_global_2n4(5).value > spread_report(named(Family::cycle, {5})).signless_spread);
    CHECK(ub_global_2n4(5).value > spread_report(named(Family::path, {5})).signless_spread);
    CHECK_THROWS_AS(ub_global_2n4(4), BoundDomainError);

    CHECK(ub_liu_degree_avg(degree_profile(oracle::circulant_regular(10, 3))).value == doctest::Approx(6.0));
    CHECK(ub_liu_degree_avg(profile(Family::star, {4})).value == doctest::Approx(4.0));
    CHECK(ub_liu_degree_avg(profile(Family::path, {3})).value == doctest::Approx(3.0));

    // K_5: 2*80 + 40 - 8*100/4 = 0, and s_L(K_5) = 5 - 5 = 0
    auto das = ub_das_laplacian(profile(Family::complete, {5}));
    CHECK(std::abs(das.value) <= kTol);
    CHECK(std::abs(spread_report(named(Family::complete, {5})).laplacian_spread) <= 1e-9);
    CHECK(das.target == Target::laplacian);
    CHECK(ub_das_laplacian(profile(Family::path, {5})).value >= spread_report(named(Family::path, {5})).laplacian_spread);
}

TEST_CASE("L1 versus L2 regimes") {
    auto c5 = compare_l1_l2(degree_profile(oracle::circulant_regular(10, 5)), true);
    CHECK(c5.l2 == doctest::Approx(50.0 / 9.0));
    CHECK(c5.l1 == doctest::Approx(2.0 * std::sqrt(6.0)));
    CHECK(c5.l2_dominates);
    CHECK(c5.consistent);

    auto c4 = compare_l1_l2(degree_profile(oracle::circulant_regular(10, 4)), true);
    CHECK(c4.l2 == doctest::Approx(40.0 / 9.0));
    CHECK_FALSE(c4.l2_dominates);
    CHECK(c4.regime == L1L2Regime::regular);
    CHECK(c4.consistent);

    for (int n = 4; n <= 20; n += 2) {
        auto c3 = compare_l1_l2(degree_profile(oracle::circulant_regular(n, 3)), true);
        CHECK(c3.l1 == doctest::Approx(4.0));
        CHECK_FALSE(c3.l2_dominates);
    }
    auto pendant = compare_l1_l2(profile(Family::star, {4}), true);
    CHECK(pendant.regime == L1L2Regime::pendant);
    CHECK(pendant.consistent);
    CHECK_THROWS(compare_l1_l2(profile(Family::complete, {2}), true));
}

TEST_CASE("catalog") {
    const auto& catalog = bound_catalog();
    for (std::size_t i = 1; i < catalog.size(); ++i) CHECK(catalog[i - 1].name < catalog[i].name);
    for (const auto& name : table_bound_names()) CHECK(find_bound(name) != nullptr);
    CHECK(find_bound("nope") == nullptr);

    Graph k2 = named(Family::complete, {2});
    CatalogContext ctx = make_catalog_context(k2);
    for (const auto& e : evaluate_catalog(ctx)) {
        if (!e.result) continue;
        const auto check = check_sandwich(e, ctx);
        const bool excluded = e.name == "regular_sqrt" || e.name == "meg2" || e.name == "L1";
        if (excluded) {
            CHECK(check.status == SandwichStatus::logged);
        } else {
            CHECK_MESSAGE(check.status == SandwichStatus::ok, e.name);
        }
    }

    Graph split = build_graph(5, {{0, 1}, {2, 3}, {3, 4}});
    for (const auto& e : evaluate_catalog(split)) {
        const auto* entry = find_bound(e.name);
        if (entry->assumptions & kConnected) {
            CHECK_FALSE(e.result);
            CHECK(e.skipped == "requires a connected graph");
        }
    }

    for (const auto& e : evaluate_catalog(named(Family::path, {3}))) {
        if (e.name == "2n_minus_4") {
            CHECK_FALSE(e.result);
            CHECK(e.skipped == "requires n >= 5");
        }
    }

    CatalogOptions capped;
    capped.limits = OracleLimits::uniform(4);
    for (const auto& e : evaluate_catalog(named(Family::cycle, {7}), capped)) {
        if (e.name == "mu1_minus_vb") CHECK(e.skipped.rfind("oracle unavailable", 0) == 0);
    }
    CatalogOptions bad;
    bad.selection = {"not_a_bound"};
    CHECK_THROWS_AS(make_catalog_context(k2, bad), std::invalid_argument);
}
