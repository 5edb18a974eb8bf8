#ifndef COSALG_RATIONAL_HPP
#define COSALG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cosalg {

/// Exact rational scalar. Backed by GMP; always kept in lowest terms with a
/// positive denominator (GMP arithmetic preserves canonical form).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "p/q" or "-p/q" (base 10). Throws std::invalid_argument on
/// malformed input or zero denominator.
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    try {
        q = Rat(text, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline int sign_of(const Rat& q) { return sgn(q); }

/// Gaussian rational: a complex number with exact rational real and imaginary
/// parts. Closed under field operations; conjugation is an involution.
struct CRat {
    Rat re;
    Rat im;

    CRat() : re(0), im(0) {}
    CRat(const Rat& r) : re(r), im(0) {}  // NOLINT: implicit by design
    CRat(long r) : re(r), im(0) {}        // NOLINT
    CRat(const Rat& r, const Rat& i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    CRat conj() const { return CRat(re, -im); }

    /// |z|^2 as a nonnegative rational.
    Rat norm2() const { return re * re + im * im; }

    CRat operator-() const { return CRat(-re, -im); }

    CRat& operator+=(const CRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CRat& operator-=(const CRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    CRat& operator*=(const CRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = r;
        im = i;
        return *this;
    }
    CRat& operator/=(const CRat& o) {
        Rat n = o.norm2();
        if (n == 0) throw std::invalid_argument("division by zero Gaussian rational");
        Rat r = (re * o.re + im * o.im) / n;
        Rat i = (im * o.re - re * o.im) / n;
        re = r;
        im = i;
        return *this;
    }

    friend CRat operator+(CRat a, const CRat& b) { return a += b; }
    friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
    friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
    friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

inline CRat crat_i() { return CRat(Rat(0), Rat(1)); }

// Uniform hooks so matrix code can be generic over Rat and CRat.
inline Rat conj_value(const Rat& q) { return q; }
inline CRat conj_value(const CRat& z) { return z.conj(); }
inline bool value_is_zero(const Rat& q) { return q == 0; }
inline bool value_is_zero(const CRat& z) { return z.is_zero(); }

inline std::string crat_str(const CRat& z) {
    if (z.im == 0) return rat_str(z.re);
    return rat_str(z.re) + (sgn(z.im) < 0 ? "-" : "+") + rat_str(abs(z.im)) + "i";
}

}  // namespace cosalg

#endif
