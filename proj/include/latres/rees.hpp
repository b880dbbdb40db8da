#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latres/poset.hpp"

namespace latres {

/// Monomial of K[x, y, z]: xy exponents (x_0..x_{n-1}, y_0..y_{n-1}) plus a
/// multiset of lattice indices for the z_I factors.
struct ReesMonomial {
    std::vector<int> xy;
    std::vector<int> zs; // ascending canonical lattice indices

    bool operator==(const ReesMonomial& o) const { return xy == o.xy && zs == o.zs; }
    int total_degree() const;
    bool squarefree() const;
};

enum class Cmp { less, equal, greater };

/// The order: lex on the xy part (x_0 > ... > x_{n-1} > y_0 > ... > y_{n-1}),
/// ties broken on the z part by z-degree then reverse lexicographic order,
/// where z-variables with larger canonical lattice index are larger (the
/// canonical order refines inclusion, so larger ideals get larger variables).
struct LexSharpOrder {
    int n = 0;       // |P|
    int z_vars = 0;  // |J(P)|

    Cmp compare(const ReesMonomial& a, const ReesMonomial& b) const;
    bool less(const ReesMonomial& a, const ReesMonomial& b) const {
        return compare(a, b) == Cmp::less;
    }
};

struct Binomial {
    enum class Kind { hibi, exchange };
    ReesMonomial lead;
    ReesMonomial trail;
    Kind kind = Kind::hibi;
};

bool divides(const ReesMonomial& d, const ReesMonomial& m);
ReesMonomial quotient(const ReesMonomial& m, const ReesMonomial& d);
ReesMonomial product(const ReesMonomial& a, const ReesMonomial& b);
ReesMonomial lcm(const ReesMonomial& a, const ReesMonomial& b);

/// Sorted-descending term list with integer coefficients.
struct ReesPoly {
    std::vector<std::pair<ReesMonomial, long long>> terms;
    bool zero() const { return terms.empty(); }
};

ReesPoly binomial_poly(const Binomial& b);
ReesPoly poly_sub(const ReesPoly& a, const ReesPoly& b, const LexSharpOrder& ord);
ReesPoly poly_scale(const ReesPoly& a, const ReesMonomial& mono, long long coeff,
                    const LexSharpOrder& ord);

/// Candidate reduced Groebner basis of W_P: Hibi relations z_I z_J -
/// z_{I^J} z_{IvJ} for incomparable pairs, plus exchange relations
/// x_p z_I - y_p z_{I+p}; leads oriented by the order.
std::vector<Binomial> expected_basis(const Poset& p, const DistributiveLattice& lat);

/// Division remainder: reducers tried in listed order, largest divisible
/// term first.
ReesPoly normal_form(const ReesPoly& f, const std::vector<Binomial>& basis,
                     const LexSharpOrder& ord);

struct GroebnerReport {
    int hibi_count = 0;
    int exchange_count = 0;
    long long spair_count = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    bool phi_membership = false;
    bool spairs_reduce = false;
    bool leads_quadratic_squarefree = false;
    bool reduced = false;
    bool random_membership = false;
    std::string witness;

    bool pass() const {
        return phi_membership && spairs_reduce && leads_quadratic_squarefree && reduced &&
               random_membership;
    }
};

inline constexpr int kMaxZVariables = 12;

GroebnerReport verify_groebner(const Poset& p, const DistributiveLattice& lat, int trials,
                               std::uint64_t seed, int max_z_vars = kMaxZVariables,
                               bool parallel = true);

/// Same checks against an arbitrary candidate basis (test hook for mutations).
GroebnerReport verify_groebner_basis(const Poset& p, const DistributiveLattice& lat,
                                     const std::vector<Binomial>& basis, int trials,
                                     std::uint64_t seed, bool parallel = true);

} // namespace latres
