#include "latres/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace latres {

int Poset::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels[i] == label) return i;
    throw input_error("unknown element label: " + label);
}

bool Poset::is_ideal(Mask members) const {
    for (int i = 0; i < size(); ++i)
        if ((members >> i) & 1)
            if ((down[i] & ~members) != 0) return false;
    return true;
}

Mask Poset::ideal_generators(Mask ideal) const {
    if (!is_ideal(ideal))
        throw invalid_ideal_error("subset is not down-closed");
    Mask gens = 0;
    for (int i = 0; i < size(); ++i)
        if ((ideal >> i) & 1)
            if ((up[i] & ideal) == bit(i)) gens |= bit(i);
    return gens;
}

long long Poset::relation_pair_count() const {
    long long c = 0;
    for (int i = 0; i < size(); ++i) c += popcount(up[i]);
    return c;
}

std::vector<std::string> Poset::member_labels(Mask subset) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
        if ((subset >> i) & 1) out.push_back(labels[i]);
    std::sort(out.begin(), out.end());
    return out;
}

Poset make_poset(const std::vector<std::string>& elements,
                 const std::vector<std::pair<std::string, std::string>>& covers) {
    Poset p;
    p.labels = elements;
    const int n = p.size();
    if (n > 63) throw resource_error("posets with more than 63 elements are unsupported");
    {
        std::set<std::string> seen;
        for (const auto& l : elements)
            if (!seen.insert(l).second)
                throw input_error("duplicate element label: " + l);
    }

    std::vector<Mask> succ(n, 0); // direct successors from the raw covers
    for (const auto& [a, b] : covers) {
        int ia = p.index_of(a), ib = p.index_of(b);
        if (ia == ib)
            throw invalid_poset_error("cycle: " + a + " covers itself");
        succ[ia] |= bit(ib);
    }

    // Reflexive-transitive closure; cycles show up as i < i.
    std::vector<Mask> strict = succ;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            Mask next = strict[i];
            for (int j = 0; j < n; ++j)
                if ((strict[i] >> j) & 1) next |= strict[j];
            if (next != strict[i]) { strict[i] = next; changed = true; }
        }
    }
    for (int i = 0; i < n; ++i)
        if ((strict[i] >> i) & 1) {
            // Name one cycle through i for the error message.
            std::string cyc = p.labels[i];
            int cur = i;
            do {
                for (int j = 0; j < n; ++j)
                    if (((succ[cur] >> j) & 1) && ((strict[j] >> i) & 1 || j == i)) {
                        cur = j;
                        break;
                    }
                cyc += " < " + p.labels[cur];
            } while (cur != i && cyc.size() < 256);
            throw invalid_poset_error("order relation has a cycle: " + cyc);
        }

    p.up.assign(n, 0);
    p.down.assign(n, 0);
    for (int i = 0; i < n; ++i) p.up[i] = strict[i] | bit(i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((p.up[j] >> i) & 1) p.down[i] |= bit(j);

    // Irredundant covers: a < b with nothing strictly in between.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !((strict[a] >> b) & 1)) continue;
            Mask between = strict[a] & p.down[b] & ~bit(a) & ~bit(b);
            if (between == 0) p.covers.emplace_back(a, b);
        }
    return p;
}

DistributiveLattice enumerate_ideals(const Poset& p, int max_elements) {
    const int n = p.size();
    if (n > max_elements)
        throw resource_error("poset too large for ideal enumeration: " + std::to_string(n) +
                             " elements (bound " + std::to_string(max_elements) + ")");
    DistributiveLattice lat;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
        if (p.is_ideal(m)) lat.ideals.push_back(m);

    std::stable_sort(lat.ideals.begin(), lat.ideals.end(), [&](Mask a, Mask b) {
        int ca = popcount(a), cb = popcount(b);
        if (ca != cb) return ca < cb;
        return p.member_labels(a) < p.member_labels(b);
    });
    for (int i = 0; i < lat.size(); ++i) lat.position[lat.ideals[i]] = i;
    return lat;
}

AntichainStats antichain_stats(const Poset& p) {
    const int n = p.size();
    std::vector<Mask> comp(n); // elements comparable to i, excluding i
    for (int i = 0; i < n; ++i) comp[i] = (p.up[i] | p.down[i]) & ~bit(i);

    AntichainStats st;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        bool anti = true;
        for (int i = 0; i < n && anti; ++i)
            if ((m >> i) & 1)
                if (comp[i] & m) anti = false;
        if (!anti) continue;
        st.sperner = std::max(st.sperner, popcount(m));
        bool maximal = true;
        for (int j = 0; j < n && maximal; ++j)
            if (!((m >> j) & 1))
                if ((comp[j] & m) == 0) maximal = false; // m + j still an antichain
        if (maximal && m != 0) st.maximal_antichains.push_back(m);
        if (maximal && m == 0 && n == 0) st.maximal_antichains.push_back(m);
    }
    return st;
}

static long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::vector<long long> boolean_interval_counts(const Poset& p, const DistributiveLattice& lat) {
    int s = antichain_stats(p).sperner;
    std::vector<long long> b(s + 1, 0);
    for (Mask ideal : lat.ideals) {
        int m = popcount(p.ideal_generators(ideal));
        for (int i = 0; i <= std::min(m, s); ++i) b[i] += binom(m, i);
    }
    return b;
}

std::vector<int> linear_extension(const Poset& p) {
    const int n = p.size();
    std::vector<int> order;
    Mask placed = 0;
    while (static_cast<int>(order.size()) < n) {
        for (int i = 0; i < n; ++i) {
            if ((placed >> i) & 1) continue;
            if ((p.down[i] & ~bit(i) & ~placed) == 0) {
                order.push_back(i);
                placed |= bit(i);
                break;
            }
        }
    }
    return order;
}

bool poset_isomorphic(const Poset& a, const Poset& b) {
    const int n = a.size();
    if (n != b.size()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (a.leq(i, j) != b.leq(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace latres
