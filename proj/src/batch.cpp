#include "dfv/batch.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dfv/oracle.hpp"
#include "dfv/tits.hpp"

namespace dfv {

int default_threads() {
    if (const char* env = std::getenv("DFV_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

OrbitRecord make_record(const StackedPartialPermutation& w) {
    return {w, dim_orbit(w), phi_k(w), phi_s(w), grs(w)};
}

}  // namespace

std::vector<OrbitRecord> evaluate_orbits(
    const std::vector<StackedPartialPermutation>& orbits, bool parallel) {
    std::vector<OrbitRecord> out(orbits.size());
    if (parallel) {
        int nt = default_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
        for (long long i = 0; i < static_cast<long long>(orbits.size()); ++i)
            out[static_cast<size_t>(i)] = make_record(orbits[static_cast<size_t>(i)]);
    } else {
        for (size_t i = 0; i < orbits.size(); ++i) out[i] = make_record(orbits[i]);
    }
    return out;
}

namespace {

template <class Pred>
long long count_lambda_j(int nmax, bool parallel, Pred disagree) {
    std::vector<JointTriple> all;
    for (int n = 1; n <= nmax; ++n)
        for (auto& t : enumerate_lambda_j(n)) all.push_back(std::move(t));
    long long bad = 0;
    if (parallel) {
        int nt = default_threads();
#pragma omp parallel for schedule(dynamic) reduction(+ : bad) num_threads(nt)
        for (long long i = 0; i < static_cast<long long>(all.size()); ++i)
            if (disagree(all[static_cast<size_t>(i)])) ++bad;
    } else {
        for (const auto& t : all)
            if (disagree(t)) ++bad;
    }
    return bad;
}

}  // namespace

long long classifier_disagreements(int nmax, bool parallel) {
    return count_lambda_j(nmax, parallel, [](const JointTriple& t) {
        return is_finite_fast(t) != is_finite_bruteforce(t);
    });
}

long long table_disagreements(int nmax, bool parallel) {
    return count_lambda_j(nmax, parallel, [](const JointTriple& t) {
        return classify_table(shape_of(t)) != is_finite_fast(t);
    });
}

long long oracle_mismatches(int pmax, int qmax, uint64_t seed, bool parallel) {
    std::vector<StackedPartialPermutation> all;
    for (int p = 1; p <= pmax; ++p)
        for (int q = 1; q <= qmax; ++q)
            for (int r = 1; r <= p + q; ++r)
                for (auto& w : enumerate_orbits(p, q, r)) all.push_back(std::move(w));
    long long bad = 0;
    if (parallel) {
        int nt = default_threads();
#pragma omp parallel for schedule(dynamic) reduction(+ : bad) num_threads(nt)
        for (long long i = 0; i < static_cast<long long>(all.size()); ++i) {
            const auto& w = all[static_cast<size_t>(i)];
            if (oracle_phi_k(w, seed) != phi_k(w) || !(oracle_phi_s(w, seed) == phi_s(w)))
                ++bad;
        }
    } else {
        for (const auto& w : all)
            if (oracle_phi_k(w, seed) != phi_k(w) || !(oracle_phi_s(w, seed) == phi_s(w)))
                ++bad;
    }
    return bad;
}

}  // namespace dfv
