#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latres/poset.hpp"
#include "latres/simplicial.hpp"

namespace latres {

/// Bipartite graph on parts W (left) and W' (right); edges are index pairs.
/// No isolated vertices.
struct BipartiteGraph {
    std::vector<std::string> left;
    std::vector<std::string> right;
    std::vector<std::pair<int, int>> edges;

    bool has_edge(int l, int r) const;
};

BipartiteGraph make_bipartite(std::vector<std::string> left, std::vector<std::string> right,
                              std::vector<std::pair<int, int>> edges);

/// G(P): edges {x_i, y_j} for p_i <= p_j.
BipartiteGraph graph_of_poset(const Poset& p);

inline constexpr int kMaxCoverVertices = 24;

/// Covers are masks over left bits 0..|W|-1 then right bits |W|..|W|+|W'|-1.
struct CoverReport {
    std::vector<Mask> minimal_covers;
    bool unmixed = false;
};

CoverReport cover_analysis(const BipartiteGraph& g, int max_vertices = kMaxCoverVertices);

inline constexpr long long kMaxMatchings = 100000;

struct RecognitionResult {
    bool cm = false;
    BipartiteGraph graph;
    Poset poset;              // recovered poset, valid when cm
    std::vector<int> matching; // matching[i]: right vertex paired with left i
    std::string failure_witness;
    bool first_matching_succeeded = false;
    long long matchings_tried = 0;
};

/// Tries every perfect matching; a matching certifies CM when the induced
/// index relation p_i <= p_j iff {x_i, y_j} in E is a partial order.
RecognitionResult recognize_cm(const BipartiteGraph& g, long long max_matchings = kMaxMatchings);

struct GorensteinReport {
    bool gorenstein = false;
    long long cm_type = 0; // number of maximal antichains of the recovered poset
};

GorensteinReport gorenstein_and_type(const RecognitionResult& result);

/// Faces are the independent vertex subsets.
SimplicialComplex independence_complex(const BipartiteGraph& g);

} // namespace latres
