#ifndef COSALG_POLY_HPP
#define COSALG_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cosalg/linalg.hpp"

namespace cosalg {

/// Polynomial over Rat, coefficients in ascending degree order. The zero
/// polynomial is the empty vector.
using Poly = std::vector<Rat>;

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline bool poly_is_zero(const Poly& p) { return poly_trim(p).empty(); }

inline Rat poly_eval(const Poly& p, const Rat& x) {
    Rat r(0);
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

inline Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
    return poly_trim(d);
}

inline Poly poly_scale(const Rat& s, Poly p) {
    for (Rat& c : p) c *= s;
    return poly_trim(p);
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(r);
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(r);
}

/// Euclidean division: returns (quotient, remainder).
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    Poly bb = poly_trim(b);
    if (bb.empty()) throw std::invalid_argument("polynomial division by zero");
    a = poly_trim(a);
    Poly q(a.size() > bb.size() ? a.size() - bb.size() + 1 : 1, Rat(0));
    while (!a.empty() && a.size() >= bb.size()) {
        Rat f = a.back() / bb.back();
        std::size_t shift = a.size() - bb.size();
        q[shift] = f;
        for (std::size_t i = 0; i < bb.size(); ++i) a[shift + i] -= f * bb[i];
        a = poly_trim(a);
    }
    return {poly_trim(q), a};
}

inline Poly poly_monic(Poly p) {
    p = poly_trim(p);
    if (p.empty()) return p;
    Rat lead = p.back();
    for (Rat& c : p) c /= lead;
    return p;
}

inline Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(a);
    b = poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = poly_monic(std::move(r));
    }
    return poly_monic(a);
}

/// p / gcd(p, p'): same roots, all simple.
inline Poly squarefree_part(const Poly& p) {
    Poly pp = poly_trim(p);
    if (pp.empty()) throw std::invalid_argument("squarefree part of zero polynomial");
    if (pp.size() == 1) return {Rat(1)};
    Poly g = poly_gcd(pp, poly_derivative(pp));
    return poly_monic(poly_divmod(pp, g).first);
}

namespace detail {

inline int sign_at_plus_inf(const Poly& p) { return sgn(p.back()); }

inline int sign_at_minus_inf(const Poly& p) {
    int s = sgn(p.back());
    return (poly_degree(p) % 2 == 0) ? s : -s;
}

inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace detail

/// Number of distinct real roots, by a Sturm sequence on the square-free part.
inline int count_real_roots(const Poly& p) {
    Poly q = squarefree_part(p);
    if (poly_degree(q) <= 0) return 0;
    std::vector<Poly> chain{q, poly_derivative(q)};
    while (!poly_is_zero(chain.back())) {
        Poly r = poly_divmod(chain[chain.size() - 2], chain.back()).second;
        if (poly_is_zero(r)) break;
        for (Rat& c : r) c = -c;
        chain.push_back(poly_trim(r));
    }
    std::vector<int> at_minus, at_plus;
    for (const Poly& f : chain) {
        at_minus.push_back(detail::sign_at_minus_inf(f));
        at_plus.push_back(detail::sign_at_plus_inf(f));
    }
    return detail::sign_variations(at_minus) - detail::sign_variations(at_plus);
}

/// All roots real, counted with multiplicity: the square-free part must have
/// as many distinct real roots as its degree.
inline bool all_roots_real(const Poly& p) {
    Poly q = squarefree_part(p);
    if (poly_degree(q) <= 0) return true;
    return count_real_roots(q) == poly_degree(q);
}

/// Exact characteristic polynomial of a square rational matrix (monic, degree
/// n) by the Faddeev-LeVerrier recurrence.
inline Poly char_poly(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
    const std::size_t n = m.rows();
    Poly coeff(n + 1, Rat(0));
    coeff[n] = 1;
    RatMatrix mk = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Rat tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
        Rat ck = -tr / Rat(static_cast<long>(k));
        coeff[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return coeff;
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> divs;
    // Trial-division bound; callers treat an empty list as "search gave up".
    if (n == 0 || n > mpz_class("1000000000000")) return divs;
    for (mpz_class d(1); d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    return divs;
}

}  // namespace detail

/// Distinct rational roots, ascending. Uses the rational root bound on the
/// primitive integer form of p.
inline std::vector<Rat> rational_roots(const Poly& p) {
    Poly q = poly_trim(p);
    if (q.empty()) throw std::invalid_argument("rational roots of zero polynomial");
    std::vector<Rat> roots;
    // Strip powers of x.
    std::size_t low = 0;
    while (low < q.size() && q[low] == 0) ++low;
    if (low > 0) {
        roots.push_back(Rat(0));
        q.erase(q.begin(), q.begin() + static_cast<long>(low));
    }
    if (q.size() <= 1) return roots;
    mpz_class den(1);
    for (const Rat& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> zc;
    for (const Rat& c : q) zc.push_back(mpz_class(c * Rat(den)));
    mpz_class content(0);
    for (const mpz_class& z : zc) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    for (mpz_class& z : zc) z /= content;
    for (const mpz_class& a : detail::positive_divisors(zc.front()))
        for (const mpz_class& b : detail::positive_divisors(zc.back()))
            for (int s : {1, -1}) {
                Rat cand(s == 1 ? a : mpz_class(-a), b);
                cand.canonicalize();
                if (poly_eval(q, cand) == 0) {
                    bool seen = false;
                    for (const Rat& r : roots) seen = seen || r == cand;
                    if (!seen) roots.push_back(cand);
                }
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace cosalg

#endif
