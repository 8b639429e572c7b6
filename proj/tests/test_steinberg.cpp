#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "dfv/steinberg.hpp"

using namespace dfv;

namespace {

StackedPartialPermutation running_example() {
    return make_orbit(5, 3, {{2, 3}, {4, 1}, {5, 0}, {0, 2}});
}

}  // namespace

TEST_CASE("symmetrized map on the worked example") {
    auto [lam, mu] = phi_k(running_example());
    CHECK(lam == Partition{2, 1, 1, 1});
    CHECK(mu == Partition{2, 1});
}

TEST_CASE("word form of the symmetrized map agrees everywhere") {
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            for (int r = 1; r <= p + q; ++r)
                for (const auto& w : enumerate_orbits(p, q, r))
                    CHECK(phi_k(w) == phi_k_via_w(w));
    CHECK(phi_k(running_example()) == phi_k_via_w(running_example()));
}

TEST_CASE("quintuple of the worked example") {
    auto t = grs(running_example());
    CHECK(t.t1.rows == std::vector<std::vector<int>>{{1, 3}, {2}, {4}, {5}});
    CHECK(t.t2.rows == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK(t.lambda_prime == Partition{1, 1, 1});
    CHECK(t.mu_prime == Partition{2, 1});
    CHECK(t.nu == Partition{1, 1});
    CHECK(grs_valid(t, 5, 3, 4));
    CHECK(grs_inverse(t, 5, 3, 4) == running_example());
}

TEST_CASE("quintuple of the second worked example") {
    auto w = make_orbit(5, 4, {{1, 2}, {2, 4}, {5, 3}, {3, 0}});
    auto g = orbit_graph(w);
    CHECK(g.free_plus == std::vector<int>{4});
    CHECK(g.free_minus == std::vector<int>{1});
    auto t = grs(w);
    CHECK(t.t1.rows == std::vector<std::vector<int>>{{1, 2, 4}, {3, 5}});
    CHECK(t.t2.rows == std::vector<std::vector<int>>{{1, 3}, {2}, {4}});
    CHECK(t.lambda_prime == Partition{2, 2});
    CHECK(t.mu_prime == Partition{2, 1});
    CHECK(t.nu == Partition{2, 1});
    CHECK(grs_inverse(t, 5, 4, 4) == w);
}

TEST_CASE("permutation orbits reduce to classical robinson-schensted") {
    // omega = (sigma; identity) maps to (RS1, RS2; lam, lam; lam)
    int n = 3;
    std::vector<int> perm = {1, 2, 3};
    do {
        std::vector<OrbitColumn> cols;
        for (int j = 0; j < n; ++j) cols.push_back({perm[static_cast<size_t>(j)], j + 1});
        auto w = make_orbit(n, n, cols);
        PartialBijection s;
        for (int j = 1; j <= n; ++j) {
            s.domain.push_back(j);
            s.values.push_back(perm[static_cast<size_t>(j - 1)]);
        }
        auto [p1, p2] = rs(s);
        auto t = grs(w);
        CHECK(t.t1 == p1);
        CHECK(t.t2 == p2);
        Partition lam = shape(p1);
        CHECK(t.lambda_prime == lam);
        CHECK(t.mu_prime == lam);
        CHECK(t.nu == lam);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("grs is a bijection onto valid quintuples") {
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            for (int r = 1; r <= p + q; ++r) {
                auto orbits = enumerate_orbits(p, q, r);
                std::set<GrsQuintuple> images;
                for (const auto& w : orbits) {
                    auto t = grs(w);
                    CHECK(grs_valid(t, p, q, r));
                    CHECK(grs_inverse(t, p, q, r) == w);
                    CHECK(images.insert(t).second);
                }
                // fibers over (shape(t1), shape(t2)) partition the orbit set
                long long total = 0;
                std::map<std::pair<Partition, Partition>, long long> by_shape;
                for (const auto& t : images)
                    ++by_shape[{shape(t.t1), shape(t.t2)}];
                for (const auto& lam : partitions_of(p))
                    for (const auto& mu : partitions_of(q)) {
                        auto fib = fiber(lam, mu, r);
                        for (const auto& t : fib) CHECK(grs_valid(t, p, q, r));
                        total += static_cast<long long>(fib.size());
                        auto it = by_shape.find({lam, mu});
                        long long hit = it == by_shape.end() ? 0 : it->second;
                        CHECK(static_cast<long long>(fib.size()) == hit);
                    }
                CHECK(total == static_cast<long long>(orbits.size()));
            }
}

TEST_CASE("exotic map on the worked example") {
    auto w = running_example();
    auto [lp, mp] = phi_s_aux_shapes(w);
    CHECK(lp == Partition{3, 1, 1});
    CHECK(mp == Partition{1, 1, 1});
    auto d = phi_s(w);
    auto expect = make_signed_diagram(
        {{2, '-'}, {2, '-'}, {1, '+'}, {1, '+'}, {1, '+'}, {1, '-'}});
    CHECK(d == expect);
}

TEST_CASE("exotic map signatures are always (p, q)") {
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q)
            for (int r = 1; r <= p + q; ++r)
                for (const auto& w : enumerate_orbits(p, q, r)) {
                    auto sig = signed_signature(phi_s(w));
                    CHECK(sig.first == p);
                    CHECK(sig.second == q);
                }
}

TEST_CASE("exotic map on the one-line families with q = 1") {
    // p = r >= 2, q = 1; the four families of orbits with full rank
    for (int p = 2; p <= 4; ++p) {
        // family I_1: edge (1,1), other columns marked +
        std::vector<OrbitColumn> cols = {{1, 1}};
        for (int i = 2; i <= p; ++i) cols.push_back({i, 0});
        std::vector<SignedRow> rows = {{1, '-'}};
        for (int i = 0; i < p; ++i) rows.push_back({1, '+'});
        CHECK(phi_s(make_orbit(p, 1, cols)) == make_signed_diagram(rows));

        // family I_i (i > 1): edge (i,1), other columns marked +
        for (int e = 2; e <= p; ++e) {
            cols.clear();
            cols.push_back({e, 1});
            for (int i = 1; i <= p; ++i)
                if (i != e) cols.push_back({i, 0});
            rows.assign(p - 1, {1, '+'});
            rows.push_back({2, '+'});
            CHECK(phi_s(make_orbit(p, 1, cols)) == make_signed_diagram(rows));
        }

        // family II_i: marked - 1 and marked + on all plus points except i,
        // which is free
        for (int e = 1; e <= p; ++e) {
            cols.clear();
            cols.push_back({0, 1});
            for (int i = 1; i <= p; ++i)
                if (i != e) cols.push_back({i, 0});
            rows.assign(p - 1, {1, '+'});
            rows.push_back({2, '-'});
            CHECK(phi_s(make_orbit(p, 1, cols)) == make_signed_diagram(rows));
        }

        // family III: all plus points marked, minus point free
        cols.clear();
        for (int i = 1; i <= p; ++i) cols.push_back({i, 0});
        rows.assign(p - 1, {1, '+'});
        rows.push_back({2, '+'});
        CHECK(phi_s(make_orbit(p, 1, cols)) == make_signed_diagram(rows));
    }
}
