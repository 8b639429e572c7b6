#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dfv/orbit.hpp"
#include "dfv/steinberg.hpp"
#include "dfv/young.hpp"

namespace dfv {

/**
 * Batch evaluation kernels.  Each kernel exists in a serial reference form
 * and an OpenMP-parallel form selected by the `parallel` flag; the two are
 * required to produce identical results (the benchmark and the test suite
 * compare them).  Output order is always the input/canonical order.
 */

struct OrbitRecord {
    StackedPartialPermutation omega;
    int dim = 0;
    std::pair<Partition, Partition> phik;
    SignedYoungDiagram phis;
    GrsQuintuple quintuple;

    bool operator==(const OrbitRecord&) const = default;
};

// worker count: DFV_THREADS when set, otherwise the OpenMP default
int default_threads();

std::vector<OrbitRecord> evaluate_orbits(
    const std::vector<StackedPartialPermutation>& orbits, bool parallel);

// number of Lambda^J triples with total <= nmax where the pattern decider
// and the summand decider disagree
long long classifier_disagreements(int nmax, bool parallel);
// number of Lambda^J triples with total <= nmax where the classification
// table disagrees with the pattern decider
long long table_disagreements(int nmax, bool parallel);

// number of orbits with p <= pmax, q <= qmax (all ranks) where the
// combinatorial maps disagree with the sampling oracle
long long oracle_mismatches(int pmax, int qmax, uint64_t seed, bool parallel);

}  // namespace dfv
