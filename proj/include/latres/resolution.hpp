#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latres/linalg.hpp"
#include "latres/monomial.hpp"
#include "latres/poset.hpp"

namespace latres {

/// Basis element e(I,T) stored as (I, S) with S = I n T <= M(I); the full
/// index set is T = (P \ I) u S, so I u T = P and |I| + |T| = n + i.
struct ResBasisElement {
    Mask ideal = 0;
    Mask smask = 0;

    int homological_degree() const { return popcount(smask); }
};

/// One signed-variable entry of a differential column.
struct DiffEntry {
    int row = 0;
    int sign = 1;
    int var = 0; // x_e is e, y_e is n + e
};

struct FreeComplex {
    int n = 0;
    std::vector<int> extension;     // linear extension used for the sign rule
    std::vector<int> extension_pos; // element -> position
    std::vector<std::vector<ResBasisElement>> basis; // degrees 0..s
    /// diff[i]: columns of d_i : F_i -> F_{i-1}, for i >= 1 (diff[0] empty).
    std::vector<std::vector<std::vector<DiffEntry>>> diff;

    int length() const { return static_cast<int>(basis.size()) - 1; }
    std::vector<long long> ranks() const;
    int basis_index(int degree, Mask ideal, Mask smask) const;
};

inline constexpr std::size_t kMaxResolutionBasis = 1'000'000;

FreeComplex build_resolution(const Poset& p, const DistributiveLattice& lat,
                             std::size_t max_basis = kMaxResolutionBasis);
FreeComplex build_resolution(const Poset& p, const DistributiveLattice& lat,
                             const std::vector<int>& extension,
                             std::size_t max_basis = kMaxResolutionBasis);

struct ComplexReport {
    bool dd_zero = false;        // d o d = 0 symbolically
    bool augmentation_zero = false; // eps o d_1 = 0
    bool minimal = false;        // every entry is a single signed variable
    bool taylor_syzygies = false; // Taylor relations lie in im d_1
    std::string witness;

    bool pass() const { return dd_zero && augmentation_zero && minimal && taylor_syzygies; }
};

ComplexReport verify_complex(const Poset& p, const DistributiveLattice& lat,
                             const FreeComplex& f);

struct BettiRow {
    int i = 0;
    long long internal_degree = 0;
    long long rank = 0;
};

struct BettiReport {
    std::vector<BettiRow> rows;
    std::vector<long long> interval_counts;
    bool matches_interval_counts = false;
    int projective_dimension = 0;
    int sperner = 0;
    bool pd_equals_sperner = false;
    long long euler = 0;
    bool euler_is_one = false;

    bool pass() const { return matches_interval_counts && pd_equals_sperner && euler_is_one; }
};

BettiReport betti_table(const Poset& p, const DistributiveLattice& lat, const FreeComplex& f);

inline constexpr int kMaxTaylorGenerators = 14;

/// Independent Betti-number oracle: homology of the Taylor complex of the
/// ideal tensored with the residue field, computed multidegree by
/// multidegree. Returns beta_0..beta_s of the ideal.
std::vector<long long> taylor_tor_oracle(const MonomialIdeal& ideal, const FieldSpec& field,
                                         int max_generators = kMaxTaylorGenerators,
                                         bool parallel = true);

/// Literal small-scale variant: materializes all 2^g subsets and takes ranks
/// of the full tensored differentials. Cross-check for the blocked version.
std::vector<long long> taylor_tor_oracle_direct(const MonomialIdeal& ideal,
                                                const FieldSpec& field, int max_generators = 12);

struct StrandReport {
    bool exact = false;
    long long degree_bound = 0;
    int fail_homological_degree = -1;
    long long fail_degree = -1;

    bool pass() const { return exact; }
};

/// Degree-by-degree exactness of the augmented complex through the bound
/// (default n + s + 2); ranks over the given field.
StrandReport strand_exactness(const Poset& p, const DistributiveLattice& lat,
                              const FreeComplex& f, long long degree_bound, const FieldSpec& field,
                              bool parallel = true);

struct MultiplicityReport {
    long long pair_count = 0;
    long long formula_value = 0; // (1/2) sum (-1)^{i+1} b_i (n+i)^2
    bool formula_matches = false;
    bool height_two_checked = false;
    bool height_two = false;

    bool pass() const { return formula_matches && (!height_two_checked || height_two); }
};

MultiplicityReport multiplicity_checks(const Poset& p, const DistributiveLattice& lat);

} // namespace latres
