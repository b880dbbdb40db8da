#include "latres/simplicial.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "latres/errors.hpp"

namespace latres {

int SimplicialComplex::dim() const {
    int d = -1;
    for (Mask f : facets) d = std::max(d, popcount(f) - 1);
    return d;
}

bool SimplicialComplex::is_face(Mask f) const {
    for (Mask g : facets)
        if ((f & ~g) == 0) return true;
    return false;
}

SimplicialComplex make_complex(std::vector<std::string> vertices, std::vector<Mask> facets) {
    if (static_cast<int>(vertices.size()) > kMaxComplexVertices)
        throw resource_error("complex limited to " + std::to_string(kMaxComplexVertices) +
                             " vertices");
    std::set<std::string> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size()) throw input_error("duplicate vertex label");
    // Drop non-maximal faces; the empty complex keeps the single facet {}.
    std::vector<Mask> maximal;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (Mask f : facets) {
        bool contained = false;
        for (Mask g : facets)
            if (g != f && (f & ~g) == 0) contained = true;
        if (!contained) maximal.push_back(f);
    }
    if (maximal.empty()) maximal.push_back(0);
    std::sort(maximal.begin(), maximal.end(),
              [](Mask a, Mask b) { return std::pair(popcount(a), a) < std::pair(popcount(b), b); });
    return {std::move(vertices), std::move(maximal)};
}

SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal) {
    const int v = ideal.num_variables();
    if (v > kMaxComplexVertices)
        throw resource_error("ideal has too many variables for face enumeration");
    for (Mask g : ideal.generators)
        if (g == 0) throw input_error("unit generator: no simplicial complex exists");
    auto is_face = [&](Mask m) {
        for (Mask g : ideal.generators)
            if ((g & ~m) == 0) return false;
        return true;
    };
    std::vector<Mask> facets;
    for (Mask m = 0; m < (Mask{1} << v); ++m) {
        if (!is_face(m)) continue;
        bool maximal = true;
        for (int b = 0; b < v && maximal; ++b)
            if (!((m >> b) & 1) && is_face(m | bit(b))) maximal = false;
        if (maximal) facets.push_back(m);
    }
    return make_complex(ideal.variables, std::move(facets));
}

std::vector<Mask> minimal_nonfaces(const SimplicialComplex& c) {
    const int v = static_cast<int>(c.vertices.size());
    if (v > kMaxComplexVertices) throw resource_error("nonface enumeration guard exceeded");
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask{1} << v); ++m) {
        if (c.is_face(m)) continue;
        bool minimal = true;
        for (int b = 0; b < v && minimal; ++b)
            if (((m >> b) & 1) && !c.is_face(m & ~bit(b))) minimal = false;
        if (minimal) out.push_back(m);
    }
    return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
    const int v = static_cast<int>(c.vertices.size());
    Mask all = (Mask{1} << v) - 1;
    std::vector<Mask> facets;
    for (Mask nf : minimal_nonfaces(c)) facets.push_back(all & ~nf);
    return make_complex(c.vertices, std::move(facets));
}

MonomialIdeal sr_ideal(const SimplicialComplex& c) {
    MonomialIdeal ideal;
    ideal.variables = c.vertices;
    ideal.generators = minimal_nonfaces(c);
    std::sort(ideal.generators.begin(), ideal.generators.end(),
              [](Mask a, Mask b) { return std::pair(popcount(a), a) < std::pair(popcount(b), b); });
    return ideal;
}

namespace {

// Reduced homology dimensions of a complex given by its faces, indexed by
// face cardinality (h[k] is homology in simplicial dimension k - 1).
std::vector<long long> face_homology(const std::vector<Mask>& faces, const FieldSpec& field) {
    int maxcard = 0;
    for (Mask f : faces) maxcard = std::max(maxcard, popcount(f));
    std::vector<std::vector<Mask>> by_card(maxcard + 1);
    std::vector<std::unordered_map<Mask, int>> index(maxcard + 1);
    for (Mask f : faces) {
        int k = popcount(f);
        index[k][f] = static_cast<int>(by_card[k].size());
        by_card[k].push_back(f);
    }
    std::vector<long long> rank(maxcard + 2, 0);
    for (int k = 1; k <= maxcard; ++k) {
        SparseIntMatrix m;
        m.rows = static_cast<long long>(by_card[k - 1].size());
        m.columns.resize(by_card[k].size());
        for (std::size_t c = 0; c < by_card[k].size(); ++c) {
            Mask f = by_card[k][c];
            int pos = 0;
            for (Mask rest = f; rest; rest &= rest - 1) {
                Mask b = rest & (~rest + 1);
                m.add_entry(static_cast<int>(c), index[k - 1].at(f & ~b),
                            pos % 2 == 0 ? 1 : -1);
                ++pos;
            }
        }
        rank[k] = sparse_rank(m, field);
    }
    std::vector<long long> h(maxcard + 1, 0);
    for (int k = 0; k <= maxcard; ++k)
        h[k] = static_cast<long long>(by_card[k].size()) - rank[k] - rank[k + 1];
    return h;
}

std::vector<Mask> all_faces(const std::vector<Mask>& facets) {
    std::unordered_set<Mask> seen;
    for (Mask f : facets)
        for (Mask s = f;; s = (s - 1) & f) {
            seen.insert(s);
            if (s == 0) break;
        }
    return {seen.begin(), seen.end()};
}

} // namespace

CMReport reisner_cm_check(const SimplicialComplex& c, const FieldSpec& field, int max_vertices,
                          bool parallel) {
    if (static_cast<int>(c.vertices.size()) > max_vertices)
        throw resource_error("Reisner check limited to " + std::to_string(max_vertices) +
                             " vertices");
    CMReport rep;
    std::vector<Mask> faces = all_faces(c.facets);
    std::sort(faces.begin(), faces.end());

    std::vector<std::string> bad(faces.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long fi = 0; fi < static_cast<long long>(faces.size()); ++fi) {
        Mask f = faces[fi];
        std::vector<Mask> link_facets;
        for (Mask g : c.facets)
            if ((f & ~g) == 0) link_facets.push_back(g & ~f);
        int maxcard = 0;
        for (Mask g : link_facets) maxcard = std::max(maxcard, popcount(g));
        auto h = face_homology(all_faces(link_facets), field);
        for (int k = 0; k < maxcard; ++k)
            if (h[k] != 0) {
                bad[fi] = "link of face mask " + std::to_string(f) +
                          " has nonzero reduced homology in dimension " + std::to_string(k - 1);
                break;
            }
    }
    rep.cm = true;
    for (const auto& w : bad)
        if (!w.empty()) {
            rep.cm = false;
            rep.witness = w;
            break;
        }
    return rep;
}

PureStrongReport pure_strong_check(const SimplicialComplex& c) {
    PureStrongReport rep;
    rep.pure = true;
    for (Mask f : c.facets)
        if (popcount(f) != popcount(c.facets.front())) rep.pure = false;

    const int m = static_cast<int>(c.facets.size());
    std::vector<int> comp(m);
    for (int i = 0; i < m; ++i) comp[i] = i;
    // Union by repeated sweeps; facet counts are tiny.
    for (bool merged = true; merged;) {
        merged = false;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                Mask a = c.facets[i], b = c.facets[j];
                int shared = popcount(a & b);
                bool adjacent =
                    shared == popcount(a) - 1 && shared == popcount(b) - 1;
                if (adjacent && comp[i] != comp[j]) {
                    int from = std::max(comp[i], comp[j]), to = std::min(comp[i], comp[j]);
                    for (int k = 0; k < m; ++k)
                        if (comp[k] == from) comp[k] = to;
                    merged = true;
                }
            }
    }
    rep.strongly_connected = true;
    for (int i = 0; i < m; ++i)
        if (comp[i] != 0) rep.strongly_connected = false;
    return rep;
}

} // namespace latres
