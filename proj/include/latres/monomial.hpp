#pragma once

#include <string>
#include <vector>

#include "latres/poset.hpp"

namespace latres {

/// u_I-style monomial: x-variables over I, y-variables over P \ I.
struct SquarefreeMonomial {
    Mask x_support = 0;
    Mask y_support = 0;
};

/// Squarefree monomial ideal over a named variable list; generators are
/// support masks over `variables` and are kept minimal.
struct MonomialIdeal {
    std::vector<std::string> variables;
    std::vector<Mask> generators;

    int num_variables() const { return static_cast<int>(variables.size()); }
};

SquarefreeMonomial monomial_of_ideal(const Poset& p, Mask ideal);

/// Variable names for S = K[{x_p, y_p}]: index i is x_i, index n+i is y_i.
/// Follows the single-letter convention of small worked examples (element
/// labels for x's, u/v/w/x for y's) when it applies, else x_<label>/y_<label>.
std::vector<std::string> hp_variable_names(const Poset& p);

/// H_P: one generator u_I per poset ideal, in canonical lattice order.
MonomialIdeal build_hp(const Poset& p, const DistributiveLattice& lat);

/// Renders a support mask as a monomial string over the ideal's variables.
std::string monomial_string(const MonomialIdeal& ideal, Mask support);

/// Drops generators divisible by another one; canonical order on the rest.
void minimize_generators(MonomialIdeal& ideal);

struct LinearQuotientCertificate {
    bool ok = true;
    /// colon_variables[k]: the variables generating
    /// (u_{o(0)},...,u_{o(k-1)}) : u_{o(k)}, for k >= 1.
    std::vector<std::vector<std::string>> colon_variables;
    int failed_step = -1;
    std::string failure;
};

LinearQuotientCertificate verify_linear_quotients(const MonomialIdeal& ideal,
                                                  const std::vector<int>& ordering);

} // namespace latres
