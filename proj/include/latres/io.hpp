#pragma once

#include <string>

#include "latres/bipartite.hpp"
#include "latres/poset.hpp"
#include "latres/simplicial.hpp"

namespace latres {

/// {"elements":["a",...],"covers":[["a","c"],...]}
Poset poset_from_json(const std::string& text);
std::string poset_to_json(const Poset& p);

/// {"left":["x1",...],"right":["y1",...],"edges":[["x1","y2"],...]}
BipartiteGraph graph_from_json(const std::string& text);
std::string graph_to_json(const BipartiteGraph& g);

/// {"vertices":["v1",...],"facets":[["v1","v2"],...]}
SimplicialComplex complex_from_json(const std::string& text);
std::string complex_to_json(const SimplicialComplex& c);

std::string hasse_dot(const Poset& p);
std::string lattice_dot(const Poset& p, const DistributiveLattice& lat);
std::string bipartite_dot(const BipartiteGraph& g);

} // namespace latres
