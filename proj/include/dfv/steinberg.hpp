#pragma once

#include <utility>
#include <vector>

#include "dfv/orbit.hpp"
#include "dfv/young.hpp"

namespace dfv {

/**
 * The symmetrized Steinberg map phi_k, the generalized Robinson-Schensted
 * bijection grs with its fibers, and the exotic Steinberg map phi_s, all
 * as pure combinatorial procedures on stacked partial permutations.
 */

struct GrsQuintuple {
    StandardTableau t1;  // entries 1..p
    StandardTableau t2;  // entries 1..q
    Partition lambda_prime, mu_prime, nu;

    bool operator==(const GrsQuintuple&) const = default;
    auto operator<=>(const GrsQuintuple&) const = default;
};

// chain conditions nu c. lambda' c. sh(t1), nu c. mu' c. sh(t2) (column
// strips) and |lambda'| + |mu'| = |nu| + r, with |sh(t1)| = p, |sh(t2)| = q
bool grs_valid(const GrsQuintuple& t, int p, int q, int r);

std::pair<Partition, Partition> phi_k(const StackedPartialPermutation& w);
std::pair<Partition, Partition> phi_k_via_w(const StackedPartialPermutation& w);

GrsQuintuple grs(const StackedPartialPermutation& w);
StackedPartialPermutation grs_inverse(const GrsQuintuple& t, int p, int q, int r);
std::vector<GrsQuintuple> fiber(const Partition& lambda, const Partition& mu, int r);

SignedYoungDiagram phi_s(const StackedPartialPermutation& w);
// the shapes (lambda', mu') of the two exotic insertion tableaux
std::pair<Partition, Partition> phi_s_aux_shapes(const StackedPartialPermutation& w);

}  // namespace dfv
