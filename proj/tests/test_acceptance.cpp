#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <set>
#include <vector>

#include "dfv/batch.hpp"
#include "dfv/ci.hpp"
#include "dfv/oracle.hpp"
#include "dfv/steinberg.hpp"
#include "dfv/tits.hpp"

using namespace dfv;

namespace {

void report(int criterion, const char* label, bool ok) {
    std::printf("criterion %2d [%s]: %s\n", criterion, label, ok ? "PASS" : "FAIL");
    CHECK(ok);
}

StackedPartialPermutation running_example() {
    return make_orbit(5, 3, {{2, 3}, {4, 1}, {5, 0}, {0, 2}});
}

}  // namespace

TEST_CASE("1: symmetrized map on the worked example") {
    auto [lam, mu] = phi_k(running_example());
    report(1, "phi_k example", lam == Partition{2, 1, 1, 1} && mu == Partition{2, 1});
}

TEST_CASE("2: exotic map on the worked example") {
    auto w = running_example();
    auto [lp, mp] = phi_s_aux_shapes(w);
    auto expect = make_signed_diagram(
        {{2, '-'}, {2, '-'}, {1, '+'}, {1, '+'}, {1, '+'}, {1, '-'}});
    report(2, "phi_s example",
           lp == Partition{3, 1, 1} && mp == Partition{1, 1, 1} && phi_s(w) == expect);
}

TEST_CASE("3: quintuple examples with round trips") {
    bool ok = true;
    {
        auto w = running_example();
        auto t = grs(w);
        ok = ok && t.t1.rows == std::vector<std::vector<int>>{{1, 3}, {2}, {4}, {5}};
        ok = ok && t.t2.rows == std::vector<std::vector<int>>{{1, 3}, {2}};
        ok = ok && t.lambda_prime == Partition{1, 1, 1} && t.mu_prime == Partition{2, 1};
        ok = ok && t.nu == Partition{1, 1};
        ok = ok && grs_inverse(t, 5, 3, 4) == w;
    }
    {
        auto w = make_orbit(5, 4, {{1, 2}, {2, 4}, {5, 3}, {3, 0}});
        auto t = grs(w);
        ok = ok && t.t1.rows == std::vector<std::vector<int>>{{1, 2, 4}, {3, 5}};
        ok = ok && t.t2.rows == std::vector<std::vector<int>>{{1, 3}, {2}, {4}};
        ok = ok && t.lambda_prime == Partition{2, 2} && t.mu_prime == Partition{2, 1};
        ok = ok && t.nu == Partition{2, 1};
        ok = ok && grs_inverse(t, 5, 4, 4) == w;
    }
    report(3, "grs examples", ok);
}

TEST_CASE("4: sampling oracle equivalence") {
    report(4, "oracle sweep p,q <= 3", oracle_mismatches(3, 3, 42, true) == 0);
}

TEST_CASE("5: dimension identity") {
    bool ok = true;
    for (int p = 1; p <= 3 && ok; ++p)
        for (int q = 1; q <= 3 && ok; ++q)
            for (int r = 1; r <= p + q && ok; ++r)
                for (const auto& w : enumerate_orbits(p, q, r))
                    if (dim_orbit(w) != p * p + q * q - hom_dim(w)) {
                        ok = false;
                        break;
                    }
    report(5, "dim = p^2 + q^2 - hom", ok);
}

TEST_CASE("6: bijectivity and fiber sums") {
    bool ok = true;
    for (int p = 1; p <= 3 && ok; ++p)
        for (int q = 1; q <= 3 && ok; ++q)
            for (int r = 1; r <= p + q && ok; ++r) {
                auto orbits = enumerate_orbits(p, q, r);
                std::set<GrsQuintuple> images;
                for (const auto& w : orbits) images.insert(grs(w));
                ok = ok && images.size() == orbits.size();
                long long total = 0;
                for (const auto& lam : partitions_of(p))
                    for (const auto& mu : partitions_of(q))
                        total += static_cast<long long>(fiber(lam, mu, r).size());
                ok = ok && total == static_cast<long long>(orbits.size());
            }
    report(6, "grs bijectivity", ok);
}

TEST_CASE("7: classifier agreement") {
    report(7, "deciders and table agree",
           classifier_disagreements(8, true) == 0 && table_disagreements(9, true) == 0);
}

TEST_CASE("8: multiple flag sanity") {
    bool ok = true;
    // all composition triples of n <= 6 whose length pattern is a simply
    // laced Dynkin star come out finite
    std::vector<std::vector<Composition>> comps(7);
    for (int n = 1; n <= 6; ++n) {
        auto rec = [&](auto&& self, int rest, Composition& cur) -> void {
            if (rest == 0) {
                comps[static_cast<size_t>(n)].push_back(cur);
                return;
            }
            for (int k = 1; k <= rest; ++k) {
                cur.push_back(k);
                self(self, rest - k, cur);
                cur.pop_back();
            }
        };
        Composition cur;
        rec(rec, n, cur);
    }
    auto dynkin = [](std::vector<int> lens) {
        std::sort(lens.begin(), lens.end());
        return lens[0] == 1 || (lens[0] == 2 && lens[1] == 2) ||
               (lens[0] == 2 && lens[1] == 3 && lens[2] <= 5);
    };
    for (int n = 2; n <= 6 && ok; ++n)
        for (const auto& a1 : comps[static_cast<size_t>(n)])
            for (const auto& a2 : comps[static_cast<size_t>(n)])
                for (const auto& a3 : comps[static_cast<size_t>(n)]) {
                    std::vector<int> lens = {static_cast<int>(a1.size()),
                                             static_cast<int>(a2.size()),
                                             static_cast<int>(a3.size())};
                    if (dynkin(lens) && !is_finite_triple_flag_A(a1, a2, a3)) ok = false;
                }
    // four full flags carry the imaginary summand (1,1)^4: infinite
    for (int n = 2; n <= 6 && ok; ++n) {
        Composition full(static_cast<size_t>(n), 1);
        if (is_finite_multi_flag_A({full, full, full, full})) ok = false;
    }
    report(8, "triple flag (FT) decider", ok);
}

TEST_CASE("9: nilpotency suite") {
    bool ok = true;
    for (NilCase c : {NilCase::A, NilCase::B, NilCase::C, NilCase::D, NilCase::E,
                      NilCase::F, NilCase::G, NilCase::Symplectic, NilCase::Orthogonal})
        for (uint64_t seed = 1; seed <= 200 && ok; ++seed) {
            auto inst = random_nil_instance(c, seed);
            if (!nilpotency_case_check(c, inst.y, inst.p, inst.q)) ok = false;
        }
    RationalMatrix y = counterexample_6x6();
    ok = ok && is_nilpotent(y) && is_nilpotent(theta_part(y, 3, 3)) &&
         !is_nilpotent(minus_theta_part(y, 3, 3));
    report(9, "nilpotency cases + counterexample", ok);
}

TEST_CASE("10: embedded variety") {
    bool ok = enumerate_ci_orbits(1).size() == 3;
    for (int n = 1; n <= 3 && ok; ++n)
        for (const auto& w : enumerate_orbits(n, n, n)) {
            if ((sigma(w) == w) != is_symplectic(w)) ok = false;
            if (!(sigma(sigma(w)) == w)) ok = false;
        }
    report(10, "ci embedding", ok);
}

TEST_CASE("11: counting bijection") {
    bool ok = true;
    for (int n = 1; n <= 5 && ok; ++n) {
        // independent count: decreasing subsequences (the empty one included)
        // summed over all permutations of 1..n
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
        long long total = 0;
        do {
            for (int mask = 0; mask < (1 << n); ++mask) {
                int prev = n + 1;
                bool dec = true;
                for (int i = 0; i < n; ++i)
                    if (mask & (1 << i)) {
                        if (perm[static_cast<size_t>(i)] >= prev) dec = false;
                        prev = perm[static_cast<size_t>(i)];
                    }
                if (dec) ++total;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        // the sum equals the number of n x n partial permutation matrices
        if (total != count_partial_permutations(n, n)) ok = false;
    }
    report(11, "counting identity", ok);
}
