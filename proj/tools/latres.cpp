// Command-line front end: one subcommand per pipeline stage, JSON or text
// reports, DOT export, and exit codes 0 = ok / verdict delivered,
// 1 = mathematical check failed, 2 = input error, 3 = resource guard.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latres/bipartite.hpp"
#include "latres/io.hpp"
#include "latres/monomial.hpp"
#include "latres/rees.hpp"
#include "latres/resolution.hpp"
#include "latres/simplicial.hpp"

using namespace latres;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
    std::string input;
    std::string field = "rational";
    long long degree_bound = -1;
    std::uint64_t seed = 42;
    int trials = 100;
    int guard_ideals = 20;
    long long guard_basis = 1000000;
    bool as_json = false;
    std::string dot_path;
    std::string oracle_kind = "taylor";
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

FieldSpec parse_field(const std::string& s) {
    if (s == "rational") return FieldSpec::rationals();
    if (s.rfind("prime:", 0) == 0) {
        try {
            return FieldSpec::gf(std::stoull(s.substr(6)));
        } catch (const std::exception&) {
            throw input_error("bad prime in --field: " + s);
        }
    }
    throw input_error("--field must be 'rational' or 'prime:<p>'");
}

void write_dot(const Options& opt, const std::string& dot) {
    if (opt.dot_path.empty()) return;
    std::ofstream out(opt.dot_path);
    if (!out) throw input_error("cannot open DOT output file: " + opt.dot_path);
    out << dot;
}

void emit(const Options& opt, json report, const std::string& text) {
    if (opt.as_json) {
        // schema_version first for stable diffs.
        json ordered;
        ordered["schema_version"] = kSchemaVersion;
        for (auto& [k, v] : report.items()) ordered[k] = v;
        std::cout << ordered.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

Poset load_poset(const Options& opt) { return poset_from_json(slurp(opt.input)); }

int cmd_lattice(const Options& opt) {
    Poset p = load_poset(opt);
    DistributiveLattice lat = enumerate_ideals(p, opt.guard_ideals);
    write_dot(opt, lattice_dot(p, lat));
    json j;
    j["elements"] = p.labels;
    j["ideal_count"] = lat.size();
    j["ideals"] = json::array();
    for (Mask m : lat.ideals) j["ideals"].push_back(p.member_labels(m));
    std::ostringstream os;
    os << "|J(P)| = " << lat.size() << "\n";
    for (Mask m : lat.ideals) {
        os << "{";
        auto labels = p.member_labels(m);
        for (std::size_t i = 0; i < labels.size(); ++i)
            os << (i ? "," : "") << labels[i];
        os << "}\n";
    }
    emit(opt, j, os.str());
    return 0;
}

int cmd_ideal(const Options& opt) {
    Poset p = load_poset(opt);
    DistributiveLattice lat = enumerate_ideals(p, opt.guard_ideals);
    MonomialIdeal hp = build_hp(p, lat);
    write_dot(opt, hasse_dot(p));
    json j;
    j["variables"] = hp.variables;
    j["generators"] = json::array();
    for (Mask g : hp.generators) j["generators"].push_back(monomial_string(hp, g));
    std::ostringstream os;
    os << "H_P = (";
    for (std::size_t i = 0; i < hp.generators.size(); ++i)
        os << (i ? ", " : "") << monomial_string(hp, hp.generators[i]);
    os << ")\n";
    emit(opt, j, os.str());
    return 0;
}

int cmd_resolution(const Options& opt) {
    Poset p = load_poset(opt);
    DistributiveLattice lat = enumerate_ideals(p, opt.guard_ideals);
    FreeComplex f = build_resolution(p, lat, static_cast<std::size_t>(opt.guard_basis));
    ComplexReport complex_rep = verify_complex(p, lat, f);
    StrandReport strand_rep =
        strand_exactness(p, lat, f, opt.degree_bound, parse_field(opt.field));
    write_dot(opt, hasse_dot(p));
    json j;
    j["ranks"] = f.ranks();
    j["length"] = f.length();
    j["complex"] = {{"dd_zero", complex_rep.dd_zero},
                    {"augmentation_zero", complex_rep.augmentation_zero},
                    {"minimal", complex_rep.minimal},
                    {"taylor_syzygies", complex_rep.taylor_syzygies},
                    {"witness", complex_rep.witness}};
    j["strands"] = {{"exact", strand_rep.exact},
                    {"degree_bound", strand_rep.degree_bound},
                    {"fail_homological_degree", strand_rep.fail_homological_degree},
                    {"fail_degree", strand_rep.fail_degree}};
    bool ok = complex_rep.pass() && strand_rep.pass();
    std::ostringstream os;
    os << "ranks:";
    for (long long r : f.ranks()) os << " " << r;
    os << "\ncomplex checks: " << (complex_rep.pass() ? "pass" : "FAIL " + complex_rep.witness)
       << "\nstrand exactness through degree " << strand_rep.degree_bound << ": "
       << (strand_rep.pass() ? "pass" : "FAIL") << "\n";
    emit(opt, j, os.str());
    return ok ? 0 : 1;
}

int cmd_betti(const Options& opt) {
    Poset p = load_poset(opt);
    DistributiveLattice lat = enumerate_ideals(p, opt.guard_ideals);
    FreeComplex f = build_resolution(p, lat, static_cast<std::size_t>(opt.guard_basis));
    BettiReport rep = betti_table(p, lat, f);
    write_dot(opt, hasse_dot(p));
    json j;
    j["rows"] = json::array();
    for (const auto& row : rep.rows)
        j["rows"].push_back(
            {{"i", row.i}, {"internal_degree", row.internal_degree}, {"rank", row.rank}});
    j["projective_dimension"] = rep.projective_dimension;
    j["sperner"] = rep.sperner;
    j["euler"] = rep.euler;
    j["matches_interval_counts"] = rep.matches_interval_counts;
    j["pd_equals_sperner"] = rep.pd_equals_sperner;
    j["euler_is_one"] = rep.euler_is_one;
    std::ostringstream os;
    os << "i   degree  rank\n";
    for (const auto& row : rep.rows)
        os << row.i << "   " << row.internal_degree << "       " << row.rank << "\n";
    os << "pd=" << rep.projective_dimension << " sperner=" << rep.sperner
       << " euler=" << rep.euler << "\n"
       << (rep.pass() ? "all checks pass" : "CHECK FAILED") << "\n";
    emit(opt, j, os.str());
    return rep.pass() ? 0 : 1;
}

int cmd_multiplicity(const Options& opt) {
    Poset p = load_poset(opt);
    DistributiveLattice lat = enumerate_ideals(p, opt.guard_ideals);
    MultiplicityReport rep = multiplicity_checks(p, lat);
    write_dot(opt, hasse_dot(p));
    json j;
    j["pairs"] = rep.pair_count;
    j["formula"] = rep.formula_value;
    j["formula_matches"] = rep.formula_matches;
    j["height_two_checked"] = rep.height_two_checked;
    j["height_two"] = rep.height_two;
    std::ostringstream os;
    os << "pairs=" << rep.pair_count << " formula=" << rep.formula_value << "\n"
       << (rep.pass() ? "all checks pass" : "CHECK FAILED") << "\n";
    emit(opt, j, os.str());
    return rep.pass() ? 0 : 1;
}

int cmd_groebner(const Options& opt) {
    Poset p = load_poset(opt);
    DistributiveLattice lat = enumerate_ideals(p, opt.guard_ideals);
    GroebnerReport rep = verify_groebner(p, lat, opt.trials, opt.seed, opt.guard_ideals);
    write_dot(opt, hasse_dot(p));
    json j;
    j["hibi_count"] = rep.hibi_count;
    j["exchange_count"] = rep.exchange_count;
    j["spair_count"] = rep.spair_count;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["phi_membership"] = rep.phi_membership;
    j["spairs_reduce"] = rep.spairs_reduce;
    j["leads_quadratic_squarefree"] = rep.leads_quadratic_squarefree;
    j["reduced"] = rep.reduced;
    j["random_membership"] = rep.random_membership;
    j["witness"] = rep.witness;
    std::ostringstream os;
    os << "basis: " << rep.hibi_count << " Hibi + " << rep.exchange_count
       << " exchange relations, " << rep.spair_count << " S-pairs\n"
       << (rep.pass() ? "all five checks pass" : "CHECK FAILED: " + rep.witness) << "\n";
    emit(opt, j, os.str());
    return rep.pass() ? 0 : 1;
}

int cmd_dual(const Options& opt) {
    Poset p = load_poset(opt);
    DistributiveLattice lat = enumerate_ideals(p, opt.guard_ideals);
    MonomialIdeal hp = build_hp(p, lat);
    SimplicialComplex dual = alexander_dual(complex_from_ideal(hp));
    MonomialIdeal dual_sr = sr_ideal(dual);
    write_dot(opt, hasse_dot(p));
    json j;
    j["vertices"] = dual.vertices;
    j["facets"] = json::array();
    for (Mask f : dual.facets) {
        json face = json::array();
        for (std::size_t i = 0; i < dual.vertices.size(); ++i)
            if ((f >> i) & 1) face.push_back(dual.vertices[i]);
        j["facets"].push_back(face);
    }
    j["dual_ideal"] = json::array();
    for (Mask g : dual_sr.generators) j["dual_ideal"].push_back(monomial_string(dual_sr, g));
    std::ostringstream os;
    os << "dual ideal = (";
    for (std::size_t i = 0; i < dual_sr.generators.size(); ++i)
        os << (i ? ", " : "") << monomial_string(dual_sr, dual_sr.generators[i]);
    os << ")\nfacets: " << dual.facets.size() << "\n";
    emit(opt, j, os.str());
    return 0;
}

int cmd_cm(const Options& opt) {
    BipartiteGraph g = graph_from_json(slurp(opt.input));
    RecognitionResult res = recognize_cm(g);
    CoverReport covers = cover_analysis(g);
    write_dot(opt, bipartite_dot(g));
    json j;
    j["cm"] = res.cm;
    j["unmixed"] = covers.unmixed;
    j["matchings_tried"] = res.matchings_tried;
    j["first_matching_succeeded"] = res.first_matching_succeeded;
    std::ostringstream os;
    if (res.cm) {
        GorensteinReport gor = gorenstein_and_type(res);
        j["poset"] = json::parse(poset_to_json(res.poset));
        j["gorenstein"] = gor.gorenstein;
        j["cm_type"] = gor.cm_type;
        os << "verdict: Cohen-Macaulay\ncm type " << gor.cm_type
           << (gor.gorenstein ? " (Gorenstein)" : "") << "\n";
    } else {
        j["failure_witness"] = res.failure_witness;
        os << "verdict: not Cohen-Macaulay\n" << res.failure_witness << "\n";
    }
    emit(opt, j, os.str());
    return 0;
}

int cmd_oracle(const Options& opt) {
    json j;
    std::ostringstream os;
    if (opt.oracle_kind == "taylor") {
        Poset p = load_poset(opt);
        DistributiveLattice lat = enumerate_ideals(p, opt.guard_ideals);
        MonomialIdeal hp = build_hp(p, lat);
        auto beta =
            taylor_tor_oracle(hp, parse_field(opt.field), std::max(opt.guard_ideals, 14));
        j["kind"] = "taylor";
        j["betti"] = beta;
        os << "betti:";
        for (long long b : beta) os << " " << b;
        os << "\n";
    } else if (opt.oracle_kind == "reisner") {
        SimplicialComplex c = complex_from_json(slurp(opt.input));
        CMReport rep = reisner_cm_check(c, parse_field(opt.field));
        j["kind"] = "reisner";
        j["cm"] = rep.cm;
        j["witness"] = rep.witness;
        os << "verdict: " << (rep.cm ? "Cohen-Macaulay" : "not Cohen-Macaulay") << "\n";
        if (!rep.cm) os << rep.witness << "\n";
    } else {
        throw input_error("--kind must be 'taylor' or 'reisner'");
    }
    emit(opt, j, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"poset lattices, monomial ideal resolutions, and bipartite CM recognition"};
    app.require_subcommand(1);

    Options opt;
    int (*handler)(const Options&) = nullptr;

    auto add = [&](const char* name, const char* desc, int (*fn)(const Options&)) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("input", opt.input, "input JSON file")->required();
        sub->add_flag("--json", opt.as_json, "emit a JSON report");
        sub->add_option("--dot", opt.dot_path, "write a DOT rendering to this path");
        sub->add_option("--field", opt.field, "rational or prime:<p>");
        sub->add_option("--degree-bound", opt.degree_bound, "strand check bound");
        sub->add_option("--seed", opt.seed, "seed for randomized checks");
        sub->add_option("--trials", opt.trials, "randomized membership trials");
        sub->add_option("--guard-ideals", opt.guard_ideals, "max poset/lattice size");
        sub->add_option("--guard-basis", opt.guard_basis, "max resolution basis size");
        sub->callback([&handler, fn] { handler = fn; });
        return sub;
    };

    add("lattice", "enumerate J(P)", cmd_lattice);
    add("ideal", "generators of H_P", cmd_ideal);
    add("resolution", "build and verify the resolution", cmd_resolution);
    add("betti", "Betti table and consistency checks", cmd_betti);
    add("multiplicity", "pair count and multiplicity formula", cmd_multiplicity);
    add("groebner", "verify the quadratic binomial basis", cmd_groebner);
    add("dual", "Alexander dual complex and ideal", cmd_dual);
    add("cm", "recognize a Cohen-Macaulay bipartite graph", cmd_cm);
    add("oracle", "independent oracles", cmd_oracle)
        ->add_option("--kind", opt.oracle_kind, "taylor (poset input) or reisner (complex)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        return handler(opt);
    } catch (const resource_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
