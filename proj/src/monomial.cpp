#include "latres/monomial.hpp"

#include <algorithm>
#include <set>

namespace latres {

SquarefreeMonomial monomial_of_ideal(const Poset& p, Mask ideal) {
    if (!p.is_ideal(ideal))
        throw invalid_ideal_error("subset is not a poset ideal");
    Mask all = (p.size() == 64) ? ~Mask{0} : (Mask{1} << p.size()) - 1;
    return {ideal, all & ~ideal};
}

std::vector<std::string> hp_variable_names(const Poset& p) {
    const int n = p.size();
    static const char* kYLetters = "uvwx";
    bool letter_style = n == 4;
    std::set<std::string> taken;
    for (const auto& l : p.labels) {
        if (l.size() != 1 || !std::islower(static_cast<unsigned char>(l[0])))
            letter_style = false;
        taken.insert(l);
    }
    if (letter_style)
        for (int i = 0; i < n; ++i)
            if (taken.count(std::string(1, kYLetters[i]))) letter_style = false;

    std::vector<std::string> names(2 * n);
    for (int i = 0; i < n; ++i) {
        names[i] = letter_style ? p.labels[i] : "x_" + p.labels[i];
        names[n + i] = letter_style ? std::string(1, kYLetters[i]) : "y_" + p.labels[i];
    }
    return names;
}

MonomialIdeal build_hp(const Poset& p, const DistributiveLattice& lat) {
    const int n = p.size();
    MonomialIdeal ideal;
    ideal.variables = hp_variable_names(p);
    for (Mask m : lat.ideals) {
        SquarefreeMonomial u = monomial_of_ideal(p, m);
        ideal.generators.push_back(u.x_support | (u.y_support << n));
    }
    // All generators share degree n and are pairwise distinct, hence minimal.
    return ideal;
}

std::string monomial_string(const MonomialIdeal& ideal, Mask support) {
    bool concat = true;
    for (const auto& v : ideal.variables)
        if (v.size() != 1) concat = false;
    std::string out;
    for (int i = 0; i < ideal.num_variables(); ++i)
        if ((support >> i) & 1) {
            if (!out.empty() && !concat) out += "*";
            out += ideal.variables[i];
        }
    return out.empty() ? "1" : out;
}

void minimize_generators(MonomialIdeal& ideal) {
    std::vector<Mask> kept;
    for (Mask g : ideal.generators) {
        bool redundant = false;
        for (Mask h : ideal.generators)
            if (h != g && (h & ~g) == 0) {
                redundant = true;
                break;
            }
        if (!redundant && std::find(kept.begin(), kept.end(), g) == kept.end())
            kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end(), [](Mask a, Mask b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
    ideal.generators = kept;
}

LinearQuotientCertificate verify_linear_quotients(const MonomialIdeal& ideal,
                                                  const std::vector<int>& ordering) {
    LinearQuotientCertificate cert;
    const auto& gens = ideal.generators;
    if (ordering.size() != gens.size())
        throw input_error("ordering must be a permutation of the generator indices");
    cert.colon_variables.resize(gens.empty() ? 0 : 1); // step 0 has no colon
    for (std::size_t k = 1; k < ordering.size(); ++k) {
        Mask uk = gens[ordering[k]];
        // Minimal generators of (u_0,...,u_{k-1}) : u_k.
        std::vector<Mask> colon;
        for (std::size_t j = 0; j < k; ++j)
            colon.push_back(gens[ordering[j]] & ~uk); // lcm(u_j, u_k) / u_k
        std::vector<Mask> minimal;
        for (Mask c : colon) {
            bool redundant = false;
            for (Mask d : colon)
                if (d != c && (d & ~c) == 0) { redundant = true; break; }
            if (!redundant && std::find(minimal.begin(), minimal.end(), c) == minimal.end())
                minimal.push_back(c);
        }
        std::vector<std::string> vars;
        for (Mask c : minimal) {
            if (popcount(c) != 1) {
                cert.ok = false;
                cert.failed_step = static_cast<int>(k);
                cert.failure = "colon generator " + monomial_string(ideal, c) +
                               " at step " + std::to_string(k) + " is not a variable";
                return cert;
            }
            vars.push_back(monomial_string(ideal, c));
        }
        std::sort(vars.begin(), vars.end());
        cert.colon_variables.push_back(vars);
    }
    return cert;
}

} // namespace latres
