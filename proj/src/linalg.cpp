#include "latres/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace latres {
namespace {

using Rational = boost::multiprecision::cpp_rational;

struct RationalField {
    using Elem = Rational;
    Elem from_int(long long v) const { return Elem(v); }
    bool is_zero(const Elem& e) const { return e == 0; }
    Elem neg_quot(const Elem& a, const Elem& b) const { return -a / b; }
    void addmul(Elem& dst, const Elem& c, const Elem& src) const { dst += c * src; }
    bool is_unit_entry(const Elem& e) const { return e == 1 || e == -1; }
};

struct PrimeField {
    using Elem = std::uint64_t;
    std::uint64_t p;
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }
    bool is_zero(Elem e) const { return e == 0; }
    Elem mul(Elem a, Elem b) const { return (__uint128_t(a) * b) % p; }
    Elem inv(Elem a) const {
        // p is prime; Fermat.
        Elem r = 1, base = a;
        std::uint64_t e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Elem neg_quot(Elem a, Elem b) const { return mul(p - a, inv(b)) % p; }
    void addmul(Elem& dst, Elem c, Elem src) const { dst = (dst + mul(c, src)) % p; }
    bool is_unit_entry(Elem e) const { return e == 1 || e == p - 1; }
};

// Row-based sparse elimination. Pivots prefer short rows and +-1 entries to
// limit fill and coefficient growth; rank does not depend on the choice.
template <class F>
long long eliminate(const SparseIntMatrix& m, const F& field) {
    using Elem = typename F::Elem;
    using Row = std::map<int, Elem>;
    std::vector<Row> rows(m.rows);
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.columns[c]) {
            Elem e = field.from_int(v);
            auto it = rows[r].find(c);
            if (it == rows[r].end()) {
                if (!field.is_zero(e)) rows[r][c] = e;
            } else {
                field.addmul(it->second, field.from_int(1), e);
                if (field.is_zero(it->second)) rows[r].erase(it);
            }
        }

    std::vector<char> active(m.rows, 1);
    long long rank = 0;
    for (;;) {
        // Pick the shortest active nonzero row; among its entries prefer a
        // unit in the least-populated column.
        int best_row = -1;
        std::size_t best_len = 0;
        for (int r = 0; r < m.rows; ++r)
            if (active[r] && !rows[r].empty())
                if (best_row < 0 || rows[r].size() < best_len) {
                    best_row = r;
                    best_len = rows[r].size();
                }
        if (best_row < 0) break;

        std::vector<int> col_count_cache;
        int pivot_col = -1;
        long long pivot_score = -1;
        for (const auto& [c, v] : rows[best_row]) {
            long long count = 0;
            for (int r = 0; r < m.rows; ++r)
                if (active[r] && r != best_row && rows[r].count(c)) ++count;
            long long score = count * 4 + (field.is_unit_entry(v) ? 0 : 2);
            if (pivot_col < 0 || score < pivot_score) {
                pivot_col = c;
                pivot_score = score;
            }
        }

        const Elem pivot_val = rows[best_row][pivot_col];
        for (int r = 0; r < m.rows; ++r) {
            if (!active[r] || r == best_row) continue;
            auto it = rows[r].find(pivot_col);
            if (it == rows[r].end()) continue;
            Elem factor = field.neg_quot(it->second, pivot_val);
            for (const auto& [c, v] : rows[best_row]) {
                auto jt = rows[r].find(c);
                if (jt == rows[r].end()) {
                    Elem nv = field.from_int(0);
                    field.addmul(nv, factor, v);
                    if (!field.is_zero(nv)) rows[r][c] = nv;
                } else {
                    field.addmul(jt->second, factor, v);
                    if (field.is_zero(jt->second)) rows[r].erase(jt);
                }
            }
        }
        active[best_row] = 0;
        ++rank;
    }
    return rank;
}

} // namespace

long long sparse_rank(const SparseIntMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols() == 0) return 0;
    if (field.rational) return eliminate(m, RationalField{});
    if (field.prime < 2) throw std::invalid_argument("prime field modulus must be >= 2");
    return eliminate(m, PrimeField{field.prime});
}

} // namespace latres
