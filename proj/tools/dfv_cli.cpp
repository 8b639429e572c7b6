#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dfv/batch.hpp"
#include "dfv/ci.hpp"
#include "dfv/json_io.hpp"
#include "dfv/oracle.hpp"
#include "dfv/orbit.hpp"
#include "dfv/steinberg.hpp"
#include "dfv/tits.hpp"

using nlohmann::json;

namespace {

dfv::Composition parse_composition(const std::string& s) {
    dfv::Composition out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size() || v < 0)
            throw std::invalid_argument("bad composition entry: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty composition");
    return out;
}

int run_orbits(int p, int q, int r, const std::string& format, std::ostream& os) {
    auto orbits = dfv::enumerate_orbits(p, q, r);
    if (format == "dot") {
        os << dfv::poset_dot(orbits);
        return 0;
    }
    auto records = dfv::evaluate_orbits(orbits, true);
    if (format == "tsv") {
        os << dfv::orbit_tsv_header() << "\n";
        for (const auto& rec : records) os << dfv::orbit_record_tsv(rec) << "\n";
    } else {
        for (const auto& rec : records) os << dfv::orbit_record_json(rec).dump() << "\n";
    }
    return 0;
}

int run_classify_aiii(const dfv::Composition& a, const dfv::Composition& b,
                      const dfv::Composition& c, std::ostream& os) {
    int p = dfv::composition_sum(a);
    int q = dfv::composition_sum(b);
    dfv::Composition af = a, bf = b;
    af.push_back(q);
    bf.push_back(p);
    dfv::JointTriple t{af, bf, c};
    if (!dfv::in_lambda_j(t))
        throw std::invalid_argument("flag data does not complete to a valid triple");
    auto witness = dfv::forbidden_witness(t);
    json out = {{"input", dfv::triple_json(t)},
                {"finite", !witness.has_value()},
                {"witness", witness ? dfv::triple_json(*witness) : json(nullptr)}};
    os << out.dump() << "\n";
    return 0;
}

int run_classify_triple_a(const dfv::Composition& a1, const dfv::Composition& a2,
                          const dfv::Composition& a3, std::ostream& os) {
    bool finite = dfv::is_finite_triple_flag_A(a1, a2, a3);
    json out = {{"input", {{"a1", a1}, {"a2", a2}, {"a3", a3}}},
                {"finite", finite},
                {"witness", nullptr}};
    os << out.dump() << "\n";
    return 0;
}

bool verify_oracle(int pmax, int qmax, uint64_t seed, std::ostream& os) {
    long long bad = dfv::oracle_mismatches(pmax, qmax, seed, true);
    os << "oracle mismatches (p<=" << pmax << ", q<=" << qmax << "): " << bad << "\n";
    return bad == 0;
}

bool verify_closure(int pmax, int qmax, std::ostream& os) {
    long long checked = 0;
    for (int p = 1; p <= pmax; ++p)
        for (int q = 1; q <= qmax; ++q)
            for (int r = 1; r <= p + q; ++r) {
                auto orbits = dfv::enumerate_orbits(p, q, r);
                for (size_t i = 0; i < orbits.size(); ++i) {
                    if (!dfv::closure_leq(orbits[i], orbits[i])) return false;
                    for (size_t j = 0; j < orbits.size(); ++j) {
                        bool le = dfv::closure_leq(orbits[i], orbits[j]);
                        bool ge = dfv::closure_leq(orbits[j], orbits[i]);
                        if (i != j && le && ge) return false;
                        if (le && dfv::dim_orbit(orbits[i]) > dfv::dim_orbit(orbits[j]))
                            return false;
                        ++checked;
                    }
                }
                for (auto [lo, hi] : dfv::hasse_covers(orbits))
                    if (!dfv::closure_leq(orbits[lo], orbits[hi])) return false;
            }
    os << "closure order checks: " << checked << " comparisons consistent\n";
    return true;
}

bool verify_grs(int pmax, int qmax, std::ostream& os) {
    for (int p = 1; p <= pmax; ++p)
        for (int q = 1; q <= qmax; ++q)
            for (int r = 1; r <= p + q; ++r) {
                auto orbits = dfv::enumerate_orbits(p, q, r);
                std::set<dfv::GrsQuintuple> images;
                long long fiber_total = 0;
                for (const auto& w : orbits) {
                    auto t = dfv::grs(w);
                    if (!dfv::grs_valid(t, p, q, r)) return false;
                    if (!(dfv::grs_inverse(t, p, q, r) == w)) return false;
                    images.insert(t);
                }
                if (images.size() != orbits.size()) return false;
                for (const auto& lam : dfv::partitions_of(p))
                    for (const auto& mu : dfv::partitions_of(q))
                        fiber_total += static_cast<long long>(dfv::fiber(lam, mu, r).size());
                if (fiber_total != static_cast<long long>(orbits.size())) return false;
            }
    os << "grs bijectivity and fiber sums verified for p<=" << pmax << ", q<=" << qmax
       << "\n";
    return true;
}

bool verify_nilpotency(uint64_t seed, std::ostream& os) {
    using dfv::NilCase;
    for (NilCase c : {NilCase::A, NilCase::B, NilCase::C, NilCase::D, NilCase::E,
                      NilCase::F, NilCase::G, NilCase::Symplectic, NilCase::Orthogonal})
        for (int i = 0; i < 50; ++i) {
            auto inst = dfv::random_nil_instance(c, seed + static_cast<uint64_t>(i));
            if (!dfv::nilpotency_case_check(c, inst.y, inst.p, inst.q)) return false;
        }
    dfv::RationalMatrix y = dfv::counterexample_6x6();
    if (!dfv::is_nilpotent(y)) return false;
    if (!dfv::is_nilpotent(dfv::theta_part(y, 3, 3))) return false;
    if (dfv::is_nilpotent(dfv::minus_theta_part(y, 3, 3))) return false;
    os << "nilpotency cases pass; the 6x6 element has a non-nilpotent "
          "anti-diagonal part as expected\n";
    return true;
}

bool verify_ci(int nmax, std::ostream& os) {
    for (int n = 1; n <= nmax; ++n) {
        auto orbits = dfv::enumerate_orbits(n, n, n);
        for (const auto& w : orbits) {
            bool fixed = dfv::sigma(w) == w;
            if (fixed != dfv::is_symplectic(w)) return false;
            if (!(dfv::sigma(dfv::sigma(w)) == w)) return false;
        }
    }
    if (dfv::enumerate_ci_orbits(1).size() != 3) return false;
    os << "ci embedding checks pass for n<=" << nmax << "\n";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"type-AIII double flag variety toolkit"};
    app.require_subcommand(1);

    int p = 1, q = 1, r = 1;
    std::string format = "json";
    std::string out_path;
    auto* orbits_cmd = app.add_subcommand("orbits", "enumerate orbits with invariants");
    orbits_cmd->add_option("--p", p, "dimension of V+")->required();
    orbits_cmd->add_option("--q", q, "dimension of V-")->required();
    orbits_cmd->add_option("--r", r, "rank of the middle subspace")->required();
    orbits_cmd->add_option("--format", format, "json | tsv | dot")
        ->check(CLI::IsMember({"json", "tsv", "dot"}));
    orbits_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* classify_cmd = app.add_subcommand("classify", "finite-type deciders");
    classify_cmd->require_subcommand(1);
    std::string sa, sb, sc, s1, s2, s3;
    auto* aiii = classify_cmd->add_subcommand("aiii", "double flag variety decider");
    aiii->add_option("--a", sa, "blocks of Q1 (composition of p)")->required();
    aiii->add_option("--b", sb, "blocks of Q2 (composition of q)")->required();
    aiii->add_option("--c", sc, "blocks of P (composition of p+q)")->required();
    aiii->add_option("--out", out_path, "output file (default stdout)");
    auto* ta = classify_cmd->add_subcommand("triple-a", "triple flag variety decider");
    ta->add_option("--a1", s1, "first flag composition")->required();
    ta->add_option("--a2", s2, "second flag composition")->required();
    ta->add_option("--a3", s3, "third flag composition")->required();
    ta->add_option("--out", out_path, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    std::string suite;
    uint64_t seed = 42;
    int pmax = 3, qmax = 3;
    verify_cmd->add_option("--suite", suite, "oracle | closure | grs | nilpotency | ci")
        ->required()
        ->check(CLI::IsMember({"oracle", "closure", "grs", "nilpotency", "ci"}));
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--pmax", pmax, "bound on p");
    verify_cmd->add_option("--qmax", qmax, "bound on q");
    verify_cmd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 2;
        }
    }
    std::ostream& os = out_path.empty() ? std::cout : file;

    try {
        if (orbits_cmd->parsed()) return run_orbits(p, q, r, format, os);
        if (aiii->parsed())
            return run_classify_aiii(parse_composition(sa), parse_composition(sb),
                                     parse_composition(sc), os);
        if (ta->parsed())
            return run_classify_triple_a(parse_composition(s1), parse_composition(s2),
                                         parse_composition(s3), os);
        if (verify_cmd->parsed()) {
            bool ok = false;
            if (suite == "oracle") ok = verify_oracle(pmax, qmax, seed, os);
            else if (suite == "closure") ok = verify_closure(pmax, qmax, os);
            else if (suite == "grs") ok = verify_grs(pmax, qmax, os);
            else if (suite == "nilpotency") ok = verify_nilpotency(seed, os);
            else if (suite == "ci") ok = verify_ci(std::min(pmax, 3), os);
            os << (ok ? "PASS" : "FAIL") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
