#pragma once

#include <string>
#include <vector>

#include "latres/linalg.hpp"
#include "latres/monomial.hpp"
#include "latres/poset.hpp"

namespace latres {

/// Facets are stored as vertex masks; no facet contains another. Vertices
/// absent from every facet are allowed (they are nonfaces).
struct SimplicialComplex {
    std::vector<std::string> vertices;
    std::vector<Mask> facets;

    int dim() const;
    bool is_face(Mask f) const;
};

SimplicialComplex make_complex(std::vector<std::string> vertices, std::vector<Mask> facets);

inline constexpr int kMaxComplexVertices = 22;

/// Faces are the subsets supporting no generator of the squarefree ideal.
SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal);

std::vector<Mask> minimal_nonfaces(const SimplicialComplex& c);

/// Facets of the dual are the complements of the minimal nonfaces.
SimplicialComplex alexander_dual(const SimplicialComplex& c);

MonomialIdeal sr_ideal(const SimplicialComplex& c);

inline constexpr int kMaxReisnerVertices = 16;

struct CMReport {
    bool cm = false;
    std::string witness; // failing link and homological degree when not CM

    bool pass() const { return cm; }
};

/// Reisner criterion: reduced homology of every link (including the link of
/// the empty face) vanishes below its dimension.
CMReport reisner_cm_check(const SimplicialComplex& c, const FieldSpec& field,
                          int max_vertices = kMaxReisnerVertices, bool parallel = true);

struct PureStrongReport {
    bool pure = false;
    bool strongly_connected = false;
};

/// Purity and connectivity of the facet graph (facets adjacent when they
/// share a codimension-one face).
PureStrongReport pure_strong_check(const SimplicialComplex& c);

} // namespace latres
