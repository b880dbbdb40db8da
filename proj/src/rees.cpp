#include "latres/rees.hpp"

#include <algorithm>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latres {

int ReesMonomial::total_degree() const {
    int d = static_cast<int>(zs.size());
    for (int e : xy) d += e;
    return d;
}

bool ReesMonomial::squarefree() const {
    for (int e : xy)
        if (e > 1) return false;
    for (std::size_t i = 1; i < zs.size(); ++i)
        if (zs[i] == zs[i - 1]) return false;
    return true;
}

Cmp LexSharpOrder::compare(const ReesMonomial& a, const ReesMonomial& b) const {
    if (a.xy.size() != b.xy.size())
        throw input_error("rees monomials over mismatched variable universes");
    for (std::size_t v = 0; v < a.xy.size(); ++v) {
        if (a.xy[v] != b.xy[v]) return a.xy[v] > b.xy[v] ? Cmp::greater : Cmp::less;
    }
    if (a.zs.size() != b.zs.size())
        return a.zs.size() < b.zs.size() ? Cmp::less : Cmp::greater;
    // Reverse lexicographic: scan from the smallest z-variable; more of it
    // means a smaller monomial.
    std::size_t ia = 0, ib = 0; // zs ascending
    while (ia < a.zs.size() && ib < b.zs.size()) {
        if (a.zs[ia] == b.zs[ib]) { ++ia; ++ib; continue; }
        return a.zs[ia] < b.zs[ib] ? Cmp::less : Cmp::greater;
    }
    return Cmp::equal;
}

bool divides(const ReesMonomial& d, const ReesMonomial& m) {
    for (std::size_t v = 0; v < d.xy.size(); ++v)
        if (d.xy[v] > m.xy[v]) return false;
    std::size_t i = 0;
    for (int z : d.zs) {
        while (i < m.zs.size() && m.zs[i] < z) ++i;
        if (i == m.zs.size() || m.zs[i] != z) return false;
        ++i;
    }
    return true;
}

ReesMonomial quotient(const ReesMonomial& m, const ReesMonomial& d) {
    ReesMonomial q = m;
    for (std::size_t v = 0; v < d.xy.size(); ++v) q.xy[v] -= d.xy[v];
    for (int z : d.zs) {
        auto it = std::find(q.zs.begin(), q.zs.end(), z);
        q.zs.erase(it);
    }
    return q;
}

ReesMonomial product(const ReesMonomial& a, const ReesMonomial& b) {
    ReesMonomial r = a;
    for (std::size_t v = 0; v < b.xy.size(); ++v) r.xy[v] += b.xy[v];
    r.zs.insert(r.zs.end(), b.zs.begin(), b.zs.end());
    std::sort(r.zs.begin(), r.zs.end());
    return r;
}

ReesMonomial lcm(const ReesMonomial& a, const ReesMonomial& b) {
    ReesMonomial r = a;
    for (std::size_t v = 0; v < b.xy.size(); ++v) r.xy[v] = std::max(r.xy[v], b.xy[v]);
    // Multiset max on z factors.
    std::vector<int> zs;
    std::size_t i = 0, j = 0;
    while (i < a.zs.size() || j < b.zs.size()) {
        if (j == b.zs.size() || (i < a.zs.size() && a.zs[i] < b.zs[j])) zs.push_back(a.zs[i++]);
        else if (i == a.zs.size() || b.zs[j] < a.zs[i]) zs.push_back(b.zs[j++]);
        else { zs.push_back(a.zs[i]); ++i; ++j; }
    }
    r.zs = zs;
    return r;
}

ReesPoly binomial_poly(const Binomial& b) {
    ReesPoly p;
    p.terms = {{b.lead, 1}, {b.trail, -1}};
    return p;
}

static void poly_normalize(ReesPoly& p, const LexSharpOrder& ord) {
    std::sort(p.terms.begin(), p.terms.end(),
              [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
    std::vector<std::pair<ReesMonomial, long long>> out;
    for (auto& t : p.terms) {
        if (!out.empty() && out.back().first == t.first) out.back().second += t.second;
        else out.push_back(t);
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    p.terms = out;
}

ReesPoly poly_sub(const ReesPoly& a, const ReesPoly& b, const LexSharpOrder& ord) {
    ReesPoly r = a;
    for (const auto& [m, c] : b.terms) r.terms.emplace_back(m, -c);
    poly_normalize(r, ord);
    return r;
}

ReesPoly poly_scale(const ReesPoly& a, const ReesMonomial& mono, long long coeff,
                    const LexSharpOrder& ord) {
    ReesPoly r;
    for (const auto& [m, c] : a.terms) r.terms.emplace_back(product(m, mono), c * coeff);
    poly_normalize(r, ord);
    return r;
}

static ReesMonomial make_monomial(int n, std::vector<int> zs) {
    ReesMonomial m;
    m.xy.assign(2 * n, 0);
    m.zs = std::move(zs);
    return m;
}

std::vector<Binomial> expected_basis(const Poset& p, const DistributiveLattice& lat) {
    const int n = p.size();
    LexSharpOrder ord{n, lat.size()};
    std::vector<Binomial> basis;
    // Hibi relations for incomparable lattice pairs.
    for (int i = 0; i < lat.size(); ++i)
        for (int j = i + 1; j < lat.size(); ++j) {
            Mask a = lat.ideals[i], b = lat.ideals[j];
            if ((a & ~b) == 0 || (b & ~a) == 0) continue;
            Binomial bin;
            bin.kind = Binomial::Kind::hibi;
            bin.lead = make_monomial(n, {i, j});
            std::sort(bin.lead.zs.begin(), bin.lead.zs.end());
            bin.trail = make_monomial(n, {lat.index(a & b), lat.index(a | b)});
            std::sort(bin.trail.zs.begin(), bin.trail.zs.end());
            if (ord.less(bin.lead, bin.trail)) std::swap(bin.lead, bin.trail);
            basis.push_back(bin);
        }
    // Exchange relations x_p z_I - y_p z_{I + p}.
    for (int i = 0; i < lat.size(); ++i) {
        Mask ideal = lat.ideals[i];
        for (int e = 0; e < n; ++e) {
            if ((ideal >> e) & 1) continue;
            Mask bigger = ideal | bit(e);
            int j = lat.index(bigger);
            if (j < 0) continue;
            Binomial bin;
            bin.kind = Binomial::Kind::exchange;
            bin.lead = make_monomial(n, {i});
            bin.lead.xy[e] = 1; // x_e
            bin.trail = make_monomial(n, {j});
            bin.trail.xy[n + e] = 1; // y_e
            if (ord.less(bin.lead, bin.trail)) std::swap(bin.lead, bin.trail);
            basis.push_back(bin);
        }
    }
    return basis;
}

ReesPoly normal_form(const ReesPoly& f, const std::vector<Binomial>& basis,
                     const LexSharpOrder& ord) {
    ReesPoly r = f;
    poly_normalize(r, ord);
    bool reduced_something = true;
    while (reduced_something) {
        reduced_something = false;
        for (std::size_t t = 0; t < r.terms.size() && !reduced_something; ++t) {
            for (const auto& g : basis) {
                if (!divides(g.lead, r.terms[t].first)) continue;
                ReesMonomial q = quotient(r.terms[t].first, g.lead);
                r = poly_sub(r, poly_scale(binomial_poly(g), q, r.terms[t].second, ord), ord);
                reduced_something = true;
                break;
            }
        }
    }
    return r;
}

namespace {

struct PhiImage {
    std::vector<int> xy;
    int t_degree = 0;
    bool operator==(const PhiImage& o) const { return xy == o.xy && t_degree == o.t_degree; }
};

PhiImage phi(const ReesMonomial& m, const Poset& p, const DistributiveLattice& lat) {
    const int n = p.size();
    PhiImage img;
    img.xy = m.xy;
    img.t_degree = static_cast<int>(m.zs.size());
    for (int zi : m.zs) {
        Mask ideal = lat.ideals[zi];
        for (int e = 0; e < n; ++e) {
            if ((ideal >> e) & 1) img.xy[e] += 1;
            else img.xy[n + e] += 1;
        }
    }
    return img;
}

// All monomials with the given phi-image: choose t_degree ideals (indices
// nondecreasing) whose u-supports fit under the xy exponents.
void factorizations(const Poset& p, const DistributiveLattice& lat, const PhiImage& target,
                    int from, std::vector<int>& zs, std::vector<int>& xy_left,
                    std::vector<ReesMonomial>& out, std::size_t cap) {
    if (out.size() >= cap) return;
    if (static_cast<int>(zs.size()) == target.t_degree) {
        ReesMonomial m;
        m.xy = xy_left;
        m.zs = zs;
        out.push_back(m);
        return;
    }
    const int n = p.size();
    for (int i = from; i < lat.size(); ++i) {
        Mask ideal = lat.ideals[i];
        bool fits = true;
        for (int e = 0; e < n && fits; ++e) {
            int v = ((ideal >> e) & 1) ? e : n + e;
            (void)v;
            if (((ideal >> e) & 1) && xy_left[e] < 1) fits = false;
            if (!((ideal >> e) & 1) && xy_left[n + e] < 1) fits = false;
        }
        if (!fits) continue;
        for (int e = 0; e < n; ++e) {
            if ((ideal >> e) & 1) xy_left[e] -= 1;
            else xy_left[n + e] -= 1;
        }
        zs.push_back(i);
        factorizations(p, lat, target, i, zs, xy_left, out, cap);
        zs.pop_back();
        for (int e = 0; e < n; ++e) {
            if ((ideal >> e) & 1) xy_left[e] += 1;
            else xy_left[n + e] += 1;
        }
    }
}

} // namespace

GroebnerReport verify_groebner_basis(const Poset& p, const DistributiveLattice& lat,
                                     const std::vector<Binomial>& basis, int trials,
                                     std::uint64_t seed, bool parallel) {
    const int n = p.size();
    LexSharpOrder ord{n, lat.size()};
    GroebnerReport rep;
    rep.trials = trials;
    rep.seed = seed;
    for (const auto& b : basis)
        (b.kind == Binomial::Kind::hibi ? rep.hibi_count : rep.exchange_count) += 1;

    // (1) phi-membership: both terms of each binomial have the same image.
    rep.phi_membership = true;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!(phi(basis[i].lead, p, lat) == phi(basis[i].trail, p, lat))) {
            rep.phi_membership = false;
            rep.witness = "phi image mismatch in basis element " + std::to_string(i);
            break;
        }

    // (3) leads quadratic and squarefree.
    rep.leads_quadratic_squarefree = true;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].lead.total_degree() != 2 || !basis[i].lead.squarefree() ||
            ord.less(basis[i].lead, basis[i].trail)) {
            rep.leads_quadratic_squarefree = false;
            if (rep.witness.empty())
                rep.witness = "lead of basis element " + std::to_string(i) +
                              " is not quadratic squarefree (or misoriented)";
            break;
        }

    // (4) reducedness: no lead divides any term of another element.
    rep.reduced = true;
    for (std::size_t i = 0; i < basis.size() && rep.reduced; ++i)
        for (std::size_t j = 0; j < basis.size() && rep.reduced; ++j) {
            if (i == j) continue;
            if (divides(basis[i].lead, basis[j].lead) || divides(basis[i].lead, basis[j].trail)) {
                rep.reduced = false;
                if (rep.witness.empty())
                    rep.witness = "lead " + std::to_string(i) + " divides a term of " +
                                  std::to_string(j);
            }
        }

    // (2) Buchberger: every S-pair reduces to 0. Pairs are enumerated in
    // lexicographic index order without a coprimality shortcut.
    const long long nb = static_cast<long long>(basis.size());
    rep.spair_count = nb * (nb - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(rep.spair_count);
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) pairs.emplace_back(i, j);
    std::vector<char> pair_ok(pairs.size(), 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
    for (long long k = 0; k < static_cast<long long>(pairs.size()); ++k) {
        const auto& [i, j] = pairs[k];
        ReesMonomial l = lcm(basis[i].lead, basis[j].lead);
        ReesPoly s = poly_sub(poly_scale(binomial_poly(basis[i]), quotient(l, basis[i].lead), 1, ord),
                              poly_scale(binomial_poly(basis[j]), quotient(l, basis[j].lead), 1, ord),
                              ord);
        if (!normal_form(s, basis, ord).zero()) pair_ok[k] = 0;
    }
    rep.spairs_reduce = true;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (!pair_ok[k]) {
            rep.spairs_reduce = false;
            rep.witness = "S-pair (" + std::to_string(pairs[k].first) + "," +
                          std::to_string(pairs[k].second) + ") does not reduce to 0";
            break;
        }

    // (5) randomized completeness: random W_P elements, built as differences
    // of two factorizations of the same phi-image, reduce to 0.
    std::mt19937_64 rng(seed);
    rep.random_membership = true;
    for (int t = 0; t < trials; ++t) {
        ReesMonomial m1;
        m1.xy.assign(2 * n, 0);
        for (int v = 0; v < 2 * n; ++v) m1.xy[v] = (rng() % 4 == 0) ? 1 : 0;
        int q = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < q; ++k) m1.zs.push_back(static_cast<int>(rng() % lat.size()));
        std::sort(m1.zs.begin(), m1.zs.end());

        PhiImage target = phi(m1, p, lat);
        std::vector<ReesMonomial> all;
        std::vector<int> zs;
        std::vector<int> xy_left = target.xy;
        factorizations(p, lat, target, 0, zs, xy_left, all, 5000);
        if (all.empty()) { // cannot happen: m1 itself factorizes
            rep.random_membership = false;
            rep.witness = "trial " + std::to_string(t) + ": no factorization found";
            break;
        }
        const ReesMonomial& m2 = all[rng() % all.size()];
        ReesPoly f;
        f.terms = {{m1, 1}, {m2, -1}};
        poly_normalize(f, ord);
        if (!normal_form(f, basis, ord).zero()) {
            rep.random_membership = false;
            rep.witness = "trial " + std::to_string(t) + ": W_P element does not reduce to 0";
            break;
        }
    }
    return rep;
}

GroebnerReport verify_groebner(const Poset& p, const DistributiveLattice& lat, int trials,
                               std::uint64_t seed, int max_z_vars, bool parallel) {
    if (lat.size() > max_z_vars)
        throw resource_error("lattice has " + std::to_string(lat.size()) +
                             " ideals; z-variable bound is " + std::to_string(max_z_vars));
    return verify_groebner_basis(p, lat, expected_basis(p, lat), trials, seed, parallel);
}

} // namespace latres
