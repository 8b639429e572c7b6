#pragma once

#include <utility>
#include <vector>

#include "dfv/orbit.hpp"

namespace dfv {

/**
 * The type-CI double flag variety GL_n\B x Sp_2n/P_S realized inside the
 * type-AIII variety with p = q = r = n: the symmetric-matrix membership
 * criterion, the sigma-action via orthogonal completion, and enumeration
 * of the orbits meeting the embedded subvariety.
 */

struct CiOrbit {
    StackedPartialPermutation omega;  // p = q = r = n, tau1^T tau2 symmetric
    int ambient_dim = 0;              // orbit dimension in the ambient variety
};

// tau1^T tau2 symmetric; equivalently the orbit meets the embedded CI variety
bool is_symplectic(const StackedPartialPermutation& w);

// orthogonal completion (xi1; xi2): a full-rank stacked partial permutation
// with xi1^T tau1 - xi2^T tau2 = 0 and [[tau1, xi1], [tau2, -xi2]]
// invertible; all three properties are asserted after construction
std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> complete_xi(
    const StackedPartialPermutation& w);

// the induced involution: canonical representative of (xi2; xi1)
StackedPartialPermutation sigma(const StackedPartialPermutation& w);

std::vector<CiOrbit> enumerate_ci_orbits(int n);

}  // namespace dfv
