#include "latres/bipartite.hpp"

#include <algorithm>
#include <set>

#include "latres/errors.hpp"

namespace latres {

bool BipartiteGraph::has_edge(int l, int r) const {
    return std::find(edges.begin(), edges.end(), std::pair(l, r)) != edges.end();
}

BipartiteGraph make_bipartite(std::vector<std::string> left, std::vector<std::string> right,
                              std::vector<std::pair<int, int>> edges) {
    std::set<std::string> seen(left.begin(), left.end());
    seen.insert(right.begin(), right.end());
    if (seen.size() != left.size() + right.size())
        throw input_error("duplicate vertex label in bipartite graph");
    if (left.empty() || right.empty())
        throw input_error("both parts of a bipartite graph must be nonempty");
    std::vector<char> lhit(left.size(), 0), rhit(right.size(), 0);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [l, r] : edges) {
        if (l < 0 || l >= static_cast<int>(left.size()) || r < 0 ||
            r >= static_cast<int>(right.size()))
            throw input_error("edge endpoint out of range");
        lhit[l] = rhit[r] = 1;
    }
    if (std::count(lhit.begin(), lhit.end(), 1) != static_cast<long long>(left.size()) ||
        std::count(rhit.begin(), rhit.end(), 1) != static_cast<long long>(right.size()))
        throw input_error("isolated vertex in bipartite graph");
    return {std::move(left), std::move(right), std::move(edges)};
}

BipartiteGraph graph_of_poset(const Poset& p) {
    const int n = p.size();
    std::vector<std::string> left, right;
    for (int i = 0; i < n; ++i) {
        left.push_back("x_" + p.labels[i]);
        right.push_back("y_" + p.labels[i]);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j)) edges.emplace_back(i, j);
    return make_bipartite(std::move(left), std::move(right), std::move(edges));
}

CoverReport cover_analysis(const BipartiteGraph& g, int max_vertices) {
    const int nl = static_cast<int>(g.left.size());
    const int v = nl + static_cast<int>(g.right.size());
    if (v > max_vertices)
        throw resource_error("cover enumeration limited to " + std::to_string(max_vertices) +
                             " vertices");
    auto covers_all = [&](Mask m) {
        for (const auto& [l, r] : g.edges)
            if (!((m >> l) & 1) && !((m >> (nl + r)) & 1)) return false;
        return true;
    };
    CoverReport rep;
    for (Mask m = 0; m < (Mask{1} << v); ++m) {
        if (!covers_all(m)) continue;
        bool minimal = true;
        for (int b = 0; b < v && minimal; ++b)
            if (((m >> b) & 1) && covers_all(m & ~bit(b))) minimal = false;
        if (minimal) rep.minimal_covers.push_back(m);
    }
    rep.unmixed = true;
    for (Mask m : rep.minimal_covers)
        if (popcount(m) != popcount(rep.minimal_covers.front())) rep.unmixed = false;
    return rep;
}

namespace {

// Partial-order check for the relation i <= j iff {x_i, y_{match[j]}} in E.
// Returns an empty string on success, else a named axiom violation.
std::string order_violation(const BipartiteGraph& g, const std::vector<char>& adj, int n,
                            const std::vector<int>& match) {
    auto rel = [&](int i, int j) { return adj[i * n + match[j]] != 0; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rel(i, j) && rel(j, i))
                return "antisymmetry fails: " + g.left[i] + " <= " + g.left[j] + " and " +
                       g.left[j] + " <= " + g.left[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !rel(i, j)) continue;
            for (int k = 0; k < n; ++k)
                if (j != k && i != k && rel(j, k) && !rel(i, k))
                    return "transitivity fails on (" + g.left[i] + ", " + g.left[j] + ", " +
                           g.left[k] + ")";
        }
    return "";
}

Poset poset_from_relation(const BipartiteGraph& g, const std::vector<char>& adj, int n,
                          const std::vector<int>& match) {
    auto rel = [&](int i, int j) { return adj[i * n + match[j]] != 0; };
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !rel(i, j)) continue;
            bool is_cover = true;
            for (int k = 0; k < n && is_cover; ++k)
                if (k != i && k != j && rel(i, k) && rel(k, j)) is_cover = false;
            if (is_cover) covers.emplace_back(g.left[i], g.left[j]);
        }
    return make_poset(g.left, covers);
}

} // namespace

RecognitionResult recognize_cm(const BipartiteGraph& g, long long max_matchings) {
    RecognitionResult res;
    res.graph = g;
    const int n = static_cast<int>(g.left.size());
    if (g.left.size() != g.right.size()) {
        res.failure_witness = "part sizes differ (" + std::to_string(g.left.size()) + " vs " +
                              std::to_string(g.right.size()) + "), so G is not unmixed";
        return res;
    }
    std::vector<char> adj(n * n, 0);
    for (const auto& [l, r] : g.edges) adj[l * n + r] = 1;

    // Lexicographic enumeration of perfect matchings by backtracking;
    // match[i] is the right vertex assigned to left vertex i.
    std::vector<int> match(n, -1);
    std::vector<char> used(n, 0);
    std::string last_violation;
    std::vector<int> last_matching;

    struct Frame {
        int i;
        int next;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0});
    while (!stack.empty()) {
        auto& [i, next] = stack.back();
        if (i == n) {
            ++res.matchings_tried;
            if (res.matchings_tried > max_matchings)
                throw resource_error("perfect matching enumeration guard exceeded");
            std::string viol = order_violation(g, adj, n, match);
            if (viol.empty()) {
                res.cm = true;
                res.matching = match;
                res.poset = poset_from_relation(g, adj, n, match);
                res.first_matching_succeeded = res.matchings_tried == 1;
                return res;
            }
            last_violation = viol;
            last_matching = match;
            stack.pop_back();
            if (!stack.empty()) {
                int j = stack.back().i;
                used[match[j]] = 0;
                match[j] = -1;
            }
            continue;
        }
        bool advanced = false;
        for (int r = next; r < n; ++r)
            if (!used[r] && adj[i * n + r]) {
                next = r + 1;
                match[i] = r;
                used[r] = 1;
                stack.push_back({i + 1, 0});
                advanced = true;
                break;
            }
        if (!advanced) {
            stack.pop_back();
            if (!stack.empty()) {
                int j = stack.back().i;
                used[match[j]] = 0;
                match[j] = -1;
            }
        }
    }

    if (res.matchings_tried == 0)
        res.failure_witness = "no perfect matching exists, so G is not unmixed";
    else {
        res.failure_witness = last_violation + " (all " + std::to_string(res.matchings_tried) +
                              " perfect matchings exhausted)";
        res.matching = last_matching;
    }
    return res;
}

GorensteinReport gorenstein_and_type(const RecognitionResult& result) {
    if (!result.cm) throw usage_error("gorenstein_and_type requires a CM verdict");
    GorensteinReport rep;
    rep.cm_type = static_cast<long long>(antichain_stats(result.poset).maximal_antichains.size());
    rep.gorenstein = rep.cm_type == 1;
    return rep;
}

SimplicialComplex independence_complex(const BipartiteGraph& g) {
    const int nl = static_cast<int>(g.left.size());
    const int v = nl + static_cast<int>(g.right.size());
    if (v > kMaxComplexVertices)
        throw resource_error("independence complex enumeration guard exceeded");
    std::vector<std::string> vertices = g.left;
    vertices.insert(vertices.end(), g.right.begin(), g.right.end());
    auto independent = [&](Mask m) {
        for (const auto& [l, r] : g.edges)
            if (((m >> l) & 1) && ((m >> (nl + r)) & 1)) return false;
        return true;
    };
    std::vector<Mask> facets;
    for (Mask m = 0; m < (Mask{1} << v); ++m) {
        if (!independent(m)) continue;
        bool maximal = true;
        for (int b = 0; b < v && maximal; ++b)
            if (!((m >> b) & 1) && independent(m | bit(b))) maximal = false;
        if (maximal) facets.push_back(m);
    }
    return make_complex(std::move(vertices), std::move(facets));
}

} // namespace latres
