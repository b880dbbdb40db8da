#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latres/errors.hpp"

namespace latres {

/// Subsets of a poset (or of a variable list) as bitmasks.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }

/// A finite poset: labeled elements, irredundant cover relations, and the
/// reflexive-transitive order derived from them.
class Poset {
public:
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers; // (lower, upper)
    std::vector<Mask> up;                    // up[i]   = { j : i <= j }
    std::vector<Mask> down;                  // down[i] = { j : j <= i }

    int size() const { return static_cast<int>(labels.size()); }

    bool leq(int a, int b) const { return (up[a] >> b) & 1; }

    int index_of(const std::string& label) const;

    bool is_ideal(Mask members) const;

    /// M(I): the maximal elements of the poset ideal I.
    Mask ideal_generators(Mask ideal) const;

    /// |{(p,q) : p <= q}|.
    long long relation_pair_count() const;

    /// Member labels of a subset, sorted lexicographically.
    std::vector<std::string> member_labels(Mask subset) const;
};

/// Validates labels and covers, rejects cycles, reduces the covers to an
/// irredundant set and computes the order relation.
Poset make_poset(const std::vector<std::string>& elements,
                 const std::vector<std::pair<std::string, std::string>>& covers);

/// J(P): all poset ideals in canonical order (cardinality, then
/// lexicographic on the sorted member label lists).
class DistributiveLattice {
public:
    std::vector<Mask> ideals;
    std::unordered_map<Mask, int> position;

    int size() const { return static_cast<int>(ideals.size()); }
    int index(Mask ideal) const {
        auto it = position.find(ideal);
        return it == position.end() ? -1 : it->second;
    }
    bool contains(Mask ideal) const { return position.count(ideal) != 0; }
};

inline constexpr int kMaxPosetSize = 20;

DistributiveLattice enumerate_ideals(const Poset& p, int max_elements = kMaxPosetSize);

struct AntichainStats {
    int sperner = 0;
    std::vector<Mask> maximal_antichains;
};

AntichainStats antichain_stats(const Poset& p);

/// b_i: number of intervals of J(P) isomorphic to Boolean lattices of rank i,
/// computed through the (I,S) bijection: b_i = sum_I C(|M(I)|, i).
std::vector<long long> boolean_interval_counts(const Poset& p, const DistributiveLattice& lat);

/// Deterministic topological order refining leq; ties broken by input order.
std::vector<int> linear_extension(const Poset& p);

/// Brute-force poset isomorphism (test-scale inputs).
bool poset_isomorphic(const Poset& a, const Poset& b);

} // namespace latres
