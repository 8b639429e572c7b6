#include "dfv/json_io.hpp"

#include <sstream>

namespace dfv {

using nlohmann::json;

json partition_json(const Partition& p) { return json(p); }

json tableau_json(const StandardTableau& t) { return json(t.rows); }

json signed_diagram_json(const SignedYoungDiagram& d) {
    json rows = json::array();
    for (const auto& r : d.rows)
        rows.push_back({{"len", r.len}, {"sign", std::string(1, r.sign)}});
    return rows;
}

json orbit_json(const StackedPartialPermutation& w) {
    json cols = json::array();
    for (const auto& c : w.columns) {
        json col;
        col["plus"] = c.plus ? json(c.plus) : json(nullptr);
        col["minus"] = c.minus ? json(c.minus) : json(nullptr);
        cols.push_back(std::move(col));
    }
    OrbitGraph g = orbit_graph(w);
    json edges = json::array();
    for (auto [i, j] : g.edges) edges.push_back({i, j});
    json graph = {{"edges", edges},
                  {"marked_plus", g.marked_plus},
                  {"marked_minus", g.marked_minus},
                  {"free_plus", g.free_plus},
                  {"free_minus", g.free_minus}};
    return {{"p", w.p},       {"q", w.q},     {"r", w.r},
            {"columns", cols}, {"dim", dim_orbit(w)}, {"graph", graph}};
}

json orbit_record_json(const OrbitRecord& rec) {
    json j = orbit_json(rec.omega);
    j["phi_k"] = {partition_json(rec.phik.first), partition_json(rec.phik.second)};
    j["phi_s"] = signed_diagram_json(rec.phis);
    j["grs"] = {{"t1", tableau_json(rec.quintuple.t1)},
                {"t2", tableau_json(rec.quintuple.t2)},
                {"lambda_prime", partition_json(rec.quintuple.lambda_prime)},
                {"mu_prime", partition_json(rec.quintuple.mu_prime)},
                {"nu", partition_json(rec.quintuple.nu)}};
    return j;
}

json triple_json(const JointTriple& t) {
    return {{"a", t.a}, {"b", t.b}, {"c", t.c}};
}

std::string orbit_to_string(const StackedPartialPermutation& w) {
    OrbitGraph g = orbit_graph(w);
    std::ostringstream os;
    os << "[";
    bool first = true;
    auto sep = [&] {
        if (!first) os << " ";
        first = false;
    };
    for (auto [i, j] : g.edges) {
        sep();
        os << "(" << i << "," << j << ")";
    }
    for (int i : g.marked_plus) {
        sep();
        os << "+m" << i;
    }
    for (int j : g.marked_minus) {
        sep();
        os << "-m" << j;
    }
    for (int i : g.free_plus) {
        sep();
        os << "+f" << i;
    }
    for (int j : g.free_minus) {
        sep();
        os << "-f" << j;
    }
    os << "]";
    return os.str();
}

std::string orbit_tsv_header() {
    return "p\tq\tr\tomega\tdim\tlambda\tmu\tphi_s\tlambda_prime\tmu_prime\tnu";
}

std::string orbit_record_tsv(const OrbitRecord& rec) {
    std::ostringstream os;
    os << rec.omega.p << '\t' << rec.omega.q << '\t' << rec.omega.r << '\t'
       << orbit_to_string(rec.omega) << '\t' << rec.dim << '\t'
       << partition_to_string(rec.phik.first) << '\t'
       << partition_to_string(rec.phik.second) << '\t'
       << signed_diagram_to_string(rec.phis) << '\t'
       << partition_to_string(rec.quintuple.lambda_prime) << '\t'
       << partition_to_string(rec.quintuple.mu_prime) << '\t'
       << partition_to_string(rec.quintuple.nu);
    return os.str();
}

std::string poset_dot(const std::vector<StackedPartialPermutation>& orbits) {
    std::ostringstream os;
    os << "digraph closure {\n";
    for (size_t i = 0; i < orbits.size(); ++i)
        os << "  n" << i << " [label=\"" << orbit_to_string(orbits[i])
           << " / dim " << dim_orbit(orbits[i]) << "\"];\n";
    for (auto [lo, hi] : hasse_covers(orbits))
        os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace dfv
