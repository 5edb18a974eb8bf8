#ifndef COSALG_KFORM_HPP
#define COSALG_KFORM_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "cosalg/matrix.hpp"

namespace cosalg {

using IndexTuple = std::vector<int>;  // strictly increasing, 0-based

/// Monomial basis of the k-forms on an n-dimensional space: the sorted
/// k-subsets of {0..n-1} in lexicographic order.
class DegreeBasis {
public:
    DegreeBasis() = default;
    DegreeBasis(int n, int k) : n_(n), k_(k) {
        if (k < 0 || k > n) return;
        IndexTuple cur(k);
        build(cur, 0, 0);
    }

    int space_dim() const { return n_; }
    int degree() const { return k_; }
    std::size_t size() const { return monomials_.size(); }
    const IndexTuple& monomial(std::size_t i) const { return monomials_[i]; }
    const std::vector<IndexTuple>& monomials() const { return monomials_; }

    std::optional<std::size_t> index_of(const IndexTuple& t) const {
        auto it = rank_.find(t);
        if (it == rank_.end()) return std::nullopt;
        return it->second;
    }

private:
    void build(IndexTuple& cur, int pos, int start) {
        if (pos == k_) {
            rank_[cur] = monomials_.size();
            monomials_.push_back(cur);
            return;
        }
        for (int i = start; i <= n_ - (k_ - pos); ++i) {
            cur[pos] = i;
            build(cur, pos + 1, i + 1);
        }
    }

    int n_ = 0;
    int k_ = 0;
    std::vector<IndexTuple> monomials_;
    std::map<IndexTuple, std::size_t> rank_;
};

/// Sorts indices, returns the permutation sign, or nullopt when an index
/// repeats (the wedge vanishes).
inline std::optional<int> sort_indices(IndexTuple& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return std::nullopt;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

/// Exterior form of fixed degree with sparse exact coefficients, keyed by
/// strictly increasing index tuples. Absent key means zero.
template <typename T>
struct KForm {
    int degree = 0;
    std::map<IndexTuple, T> terms;

    KForm() = default;
    explicit KForm(int k) : degree(k) {}

    static KForm zero(int k) { return KForm(k); }

    bool is_zero() const {
        for (const auto& [idx, c] : terms)
            if (!value_is_zero(c)) return false;
        return true;
    }

    void prune() {
        for (auto it = terms.begin(); it != terms.end();) {
            if (value_is_zero(it->second))
                it = terms.erase(it);
            else
                ++it;
        }
    }

    /// Adds c * e^{idx} with unsorted indices, folding in the sort sign.
    void add_term(IndexTuple idx, const T& c) {
        if (static_cast<int>(idx.size()) != degree) throw std::invalid_argument("KForm term degree mismatch");
        auto sign = sort_indices(idx);
        if (!sign) return;
        T v = (*sign == 1) ? c : T(0) - c;
        auto [it, inserted] = terms.emplace(std::move(idx), v);
        if (!inserted) it->second += v;
        if (value_is_zero(it->second)) terms.erase(it);
    }

    T coeff(IndexTuple idx) const {
        auto sign = sort_indices(idx);
        if (!sign) return T(0);
        auto it = terms.find(idx);
        if (it == terms.end()) return T(0);
        return *sign == 1 ? it->second : T(0) - it->second;
    }

    KForm operator+(const KForm& o) const {
        if (degree != o.degree) throw std::invalid_argument("KForm degree mismatch");
        KForm r = *this;
        for (const auto& [idx, c] : o.terms) {
            auto [it, inserted] = r.terms.emplace(idx, c);
            if (!inserted) it->second += c;
        }
        r.prune();
        return r;
    }

    KForm operator-() const {
        KForm r = *this;
        for (auto& [idx, c] : r.terms) c = T(0) - c;
        return r;
    }

    KForm operator-(const KForm& o) const { return *this + (-o); }

    friend KForm operator*(const T& s, const KForm& f) {
        KForm r = f;
        for (auto& [idx, c] : r.terms) c = s * c;
        r.prune();
        return r;
    }

    friend bool operator==(const KForm& a, const KForm& b) {
        if (a.degree != b.degree) return false;
        KForm d = a - b;
        return d.terms.empty();
    }

    KForm wedge(const KForm& o) const {
        KForm r(degree + o.degree);
        for (const auto& [ia, ca] : terms)
            for (const auto& [ib, cb] : o.terms) {
                IndexTuple idx = ia;
                idx.insert(idx.end(), ib.begin(), ib.end());
                r.add_term(std::move(idx), ca * cb);
            }
        return r;
    }

    /// Exact evaluation on k coordinate vectors: sum over monomials of
    /// coeff * det(v_b[i_a]).
    T eval(const std::vector<Vec<T>>& vectors) const {
        if (static_cast<int>(vectors.size()) != degree) throw std::invalid_argument("KForm eval arity mismatch");
        T acc(0);
        for (const auto& [idx, c] : terms) {
            Matrix<T> m(degree, degree);
            for (int a = 0; a < degree; ++a)
                for (int b = 0; b < degree; ++b) m(a, b) = vectors[b][idx[a]];
            acc += c * determinant(m);
        }
        return acc;
    }

    /// Interior product with a coordinate vector.
    KForm contract(const Vec<T>& x) const {
        KForm r(degree - 1);
        if (degree == 0) throw std::invalid_argument("contracting a 0-form");
        for (const auto& [idx, c] : terms)
            for (int a = 0; a < degree; ++a) {
                if (value_is_zero(x[idx[a]])) continue;
                IndexTuple rest;
                for (int b = 0; b < degree; ++b)
                    if (b != a) rest.push_back(idx[b]);
                T v = x[idx[a]] * c;
                if (a % 2 == 1) v = T(0) - v;
                r.add_term(std::move(rest), v);
            }
        r.prune();
        return r;
    }

    Vec<T> to_vec(const DegreeBasis& basis) const {
        Vec<T> v(basis.size(), T(0));
        for (const auto& [idx, c] : terms) {
            auto pos = basis.index_of(idx);
            if (!pos) throw std::invalid_argument("KForm index outside basis range");
            v[*pos] = c;
        }
        return v;
    }

    static KForm from_vec(const DegreeBasis& basis, const Vec<T>& v) {
        KForm f(basis.degree());
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!value_is_zero(v[i])) f.terms[basis.monomial(i)] = v[i];
        return f;
    }
};

using RatKForm = KForm<Rat>;
using CKForm = KForm<CRat>;

inline CKForm complexify(const RatKForm& f) {
    CKForm r(f.degree);
    for (const auto& [idx, c] : f.terms) r.terms[idx] = CRat(c);
    return r;
}

inline CKForm conj(const CKForm& f) {
    CKForm r(f.degree);
    for (const auto& [idx, c] : f.terms) r.terms[idx] = c.conj();
    return r;
}

/// Real part check + extraction for complex forms in the real monomial basis.
inline std::optional<RatKForm> real_part_if_real(const CKForm& f) {
    RatKForm r(f.degree);
    for (const auto& [idx, c] : f.terms) {
        if (c.im != 0) return std::nullopt;
        if (c.re != 0) r.terms[idx] = c.re;
    }
    return r;
}

}  // namespace cosalg

#endif
