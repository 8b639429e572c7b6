#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dfv/batch.hpp"
#include "dfv/orbit.hpp"
#include "dfv/steinberg.hpp"
#include "dfv/tits.hpp"
#include "dfv/young.hpp"

namespace dfv {

/**
 * Stable text encodings: JSON records for orbits and their invariants,
 * TSV rows for tabular output, and DOT rendering of the closure poset.
 */

nlohmann::json partition_json(const Partition& p);
nlohmann::json tableau_json(const StandardTableau& t);
nlohmann::json signed_diagram_json(const SignedYoungDiagram& d);
nlohmann::json orbit_json(const StackedPartialPermutation& w);
nlohmann::json orbit_record_json(const OrbitRecord& rec);
nlohmann::json triple_json(const JointTriple& t);

std::string orbit_tsv_header();
std::string orbit_record_tsv(const OrbitRecord& rec);

// closure poset of the given orbits as a DOT digraph (Hasse covers only)
std::string poset_dot(const std::vector<StackedPartialPermutation>& orbits);

// compact one-line rendering "[(i,j)... | +m... | -m... | +f... | -f...]"
std::string orbit_to_string(const StackedPartialPermutation& w);

}  // namespace dfv
