#include "cosalg/lie_algebra.hpp"

#include <random>

#include "cosalg/poly.hpp"

namespace cosalg {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_names)
    : dim_(dim), names_(std::move(basis_names)), table_(dim * dim, RatVec(dim, Rat(0))) {
    if (dim == 0) throw std::invalid_argument("Lie algebra dimension must be positive");
    if (names_.empty()) {
        for (std::size_t i = 1; i <= dim; ++i) names_.push_back("e" + std::to_string(i));
    }
    if (names_.size() != dim) throw std::invalid_argument("basis name count does not match dimension");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const RatVec& v) {
    if (i >= dim_ || j >= dim_ || v.size() != dim_) throw std::invalid_argument("set_bracket: index out of range");
    if (i == j && !vec_is_zero(v)) throw std::invalid_argument("set_bracket: [x,x] must vanish");
    table_[i * dim_ + j] = v;
    RatVec neg(dim_);
    for (std::size_t k = 0; k < dim_; ++k) neg[k] = -v[k];
    table_[j * dim_ + i] = neg;
}

RatVec LieAlgebra::bracket(const RatVec& x, const RatVec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket: dimension mismatch");
    RatVec r(dim_, Rat(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            const Rat f = x[i] * y[j];
            const RatVec& bij = bracket_basis(i, j);
            for (std::size_t k = 0; k < dim_; ++k) r[k] += f * bij[k];
        }
    }
    return r;
}

RatMatrix LieAlgebra::ad(const RatVec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("ad: dimension mismatch");
    RatMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        RatVec col(dim_, Rat(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            const RatVec& bij = bracket_basis(i, j);
            for (std::size_t k = 0; k < dim_; ++k) col[k] += x[i] * bij[k];
        }
        m.set_col(j, col);
    }
    return m;
}

RatMatrix LieAlgebra::ad_basis(std::size_t i) const {
    RatVec x(dim_, Rat(0));
    x[i] = 1;
    return ad(x);
}

bool LieAlgebra::is_abelian() const {
    for (const auto& v : table_)
        if (!vec_is_zero(v)) return false;
    return true;
}

std::vector<RatVec> standard_basis_vectors(std::size_t dim) {
    std::vector<RatVec> b;
    for (std::size_t i = 0; i < dim; ++i) {
        RatVec v(dim, Rat(0));
        v[i] = 1;
        b.push_back(std::move(v));
    }
    return b;
}

Report validate(const LieAlgebra& L) {
    Report r;
    const std::size_t n = L.dim();
    bool antisym_ok = true;
    for (std::size_t i = 0; i < n && antisym_ok; ++i)
        for (std::size_t j = 0; j < n && antisym_ok; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (L.structure_constant(i, j, k) != -L.structure_constant(j, i, k)) {
                    r.add_fail("antisymmetry", json{{"triple", {i + 1, j + 1, k + 1}}});
                    antisym_ok = false;
                    break;
                }
    if (antisym_ok) r.add_pass("antisymmetry");

    bool jacobi_ok = true;
    for (std::size_t i = 0; i < n && jacobi_ok; ++i)
        for (std::size_t j = i + 1; j < n && jacobi_ok; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto ei = standard_basis_vectors(n);
                RatVec res = L.bracket(ei[i], L.bracket_basis(j, k));
                res = vec_add(res, L.bracket(ei[j], L.bracket_basis(k, i)));
                res = vec_add(res, L.bracket(ei[k], L.bracket_basis(i, j)));
                if (!vec_is_zero(res)) {
                    json wit;
                    wit["triple"] = {i + 1, j + 1, k + 1};
                    json residual = json::array();
                    for (const Rat& q : res) residual.push_back(rat_str(q));
                    wit["residual"] = residual;
                    r.add_fail("jacobi", wit);
                    jacobi_ok = false;
                    break;
                }
            }
    if (jacobi_ok) r.add_pass("jacobi");
    return r;
}

Report is_derivation(const LieAlgebra& L, const RatMatrix& D) {
    const std::size_t n = L.dim();
    if (D.rows() != n || D.cols() != n) throw std::invalid_argument("is_derivation: matrix dimension mismatch");
    Report r;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            RatVec lhs = D * L.bracket_basis(i, j);
            RatVec rhs = vec_add(L.bracket(D.col(i), standard_basis_vectors(n)[j]),
                                 L.bracket(standard_basis_vectors(n)[i], D.col(j)));
            if (lhs != rhs) {
                r.add_fail("derivation", json{{"pair", {i + 1, j + 1}}});
                return r;
            }
        }
    r.add_pass("derivation");
    return r;
}

LieAlgebra semidirect_extend(const LieAlgebra& L, const RatMatrix& D, const std::string& new_name) {
    if (!is_derivation(L, D).passed()) throw std::invalid_argument("semidirect_extend: D is not a derivation");
    const std::size_t n = L.dim();
    std::vector<std::string> names = L.basis_names();
    names.push_back(new_name);
    LieAlgebra ext(n + 1, names);
    auto lift = [n](const RatVec& v) {
        RatVec w(n + 1, Rat(0));
        for (std::size_t k = 0; k < n; ++k) w[k] = v[k];
        return w;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) ext.set_bracket(i, j, lift(L.bracket_basis(i, j)));
    for (std::size_t j = 0; j < n; ++j) ext.set_bracket(n, j, lift(D.col(j)));
    return ext;
}

LieAlgebra transform_basis(const LieAlgebra& L, const RatMatrix& P) {
    const std::size_t n = L.dim();
    auto pinv = inverse(P);
    if (!pinv) throw std::invalid_argument("transform_basis: singular matrix");
    LieAlgebra out(n, L.basis_names());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.set_bracket(i, j, (*pinv) * L.bracket(P.col(i), P.col(j)));
    return out;
}

std::vector<RatVec> bracket_span(const LieAlgebra& L, const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
    std::vector<RatVec> products;
    for (const auto& x : a)
        for (const auto& y : b) {
            RatVec v = L.bracket(x, y);
            if (!vec_is_zero(v)) products.push_back(std::move(v));
        }
    if (products.empty()) return {};
    return column_space_basis(columns_to_matrix(products, L.dim()));
}

namespace {

std::vector<RatVec> derived_step(const LieAlgebra& L, const std::vector<RatVec>& s) {
    return bracket_span(L, s, s);
}

bool series_reaches_zero(const LieAlgebra& L, bool lower_central) {
    std::vector<RatVec> current = standard_basis_vectors(L.dim());
    const std::vector<RatVec> whole = standard_basis_vectors(L.dim());
    for (std::size_t step = 0; step <= 2 * L.dim() + 1; ++step) {
        if (current.empty()) return true;
        std::vector<RatVec> next = lower_central ? bracket_span(L, whole, current) : derived_step(L, current);
        if (next.size() == current.size()) {
            // Stationary nonzero term.
            if (!next.empty()) return false;
            return true;
        }
        current = std::move(next);
    }
    return current.empty();
}

/// Deterministic panel of pseudorandom rational combinations with small
/// integer coordinates in [-9, 9].
std::vector<RatVec> random_panel(std::size_t dim, std::size_t count) {
    std::mt19937 rng(0xC05A16u + static_cast<unsigned>(dim));
    std::vector<RatVec> panel;
    for (std::size_t k = 0; k < count; ++k) {
        RatVec v(dim);
        bool nonzero = false;
        for (std::size_t i = 0; i < dim; ++i) {
            long c = static_cast<long>(rng() % 19) - 9;
            v[i] = Rat(c);
            nonzero = nonzero || c != 0;
        }
        if (!nonzero) v[0] = 1;
        panel.push_back(std::move(v));
    }
    return panel;
}

/// Restriction of the ad action to the quotient by span(ideal basis),
/// represented in a complement basis built from the remaining standard
/// coordinates. Returns the quotient bracket table.
struct QuotientAlgebra {
    LieAlgebra algebra;
    std::vector<RatVec> section;  // lifts of the quotient basis
};

std::optional<QuotientAlgebra> quotient_by_line(const LieAlgebra& L, const RatVec& v) {
    const std::size_t n = L.dim();
    // Basis: v plus the standard vectors at non-pivot coordinates.
    RatMatrix m(n, 1);
    m.set_col(0, v);
    auto ech = row_echelon(m.transpose());
    if (ech.rank != 1) return std::nullopt;
    // Pivot coordinate of v: first nonzero entry.
    std::size_t pivot = 0;
    while (pivot < n && v[pivot] == 0) ++pivot;
    std::vector<RatVec> section;
    RatMatrix basis(n, n);
    basis.set_col(0, v);
    std::size_t c = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == pivot) continue;
        RatVec e(n, Rat(0));
        e[i] = 1;
        basis.set_col(c++, e);
        section.push_back(e);
    }
    auto binv = inverse(basis);
    if (!binv) return std::nullopt;
    const std::size_t q = n - 1;
    LieAlgebra quo(q == 0 ? 1 : q);
    if (q == 0) return std::nullopt;  // callers handle dim-1 directly
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j) {
            RatVec w = (*binv) * L.bracket(section[i], section[j]);
            RatVec coords(q);
            for (std::size_t k = 0; k < q; ++k) coords[k] = w[k + 1];  // drop the v-component
            quo.set_bracket(i, j, coords);
        }
    return QuotientAlgebra{quo, section};
}

/// Looks for a full flag of ideals through rational common eigenvectors of
/// the adjoint operators; succeeds exactly on the split completely solvable
/// cases.
bool triangularizable_over_q(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    if (n == 1) return true;
    std::vector<RatMatrix> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad_basis(i));
    // Candidate rational eigenvalues per generator; prune by intersecting
    // eigenspaces one generator at a time.
    struct State {
        std::vector<RatVec> space;  // basis of current joint eigenspace
        std::size_t next = 0;
    };
    std::vector<State> stack{State{standard_basis_vectors(n), 0}};
    while (!stack.empty()) {
        State st = stack.back();
        stack.pop_back();
        if (st.next == n) {
            const RatVec& v = st.space.front();
            auto quo = quotient_by_line(L, v);
            if (!quo) continue;
            if (quo->algebra.dim() == 1 || triangularizable_over_q(quo->algebra)) return true;
            continue;
        }
        const RatMatrix& A = ads[st.next];
        for (const Rat& lam : rational_roots(char_poly(A))) {
            // Solve (A - lam) x = 0 inside span(st.space).
            RatMatrix b = columns_to_matrix(st.space, n);
            RatMatrix shifted = A * b;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < st.space.size(); ++j) shifted(i, j) -= lam * b(i, j);
            auto ker = kernel_basis(shifted);
            if (ker.empty()) continue;
            std::vector<RatVec> sub;
            for (const auto& coeffs : ker) sub.push_back(b * coeffs);
            stack.push_back(State{std::move(sub), st.next + 1});
        }
    }
    return false;
}

}  // namespace

ClassificationFlags classify(const LieAlgebra& L) {
    ClassificationFlags f;
    const std::size_t n = L.dim();
    f.abelian = L.is_abelian();
    f.nilpotent = series_reaches_zero(L, /*lower_central=*/true);
    f.solvable = series_reaches_zero(L, /*lower_central=*/false);

    f.unimodular = true;
    for (std::size_t i = 0; i < n; ++i) {
        Rat tr(0);
        RatMatrix a = L.ad_basis(i);
        for (std::size_t k = 0; k < n; ++k) tr += a(k, k);
        if (tr != 0) {
            f.unimodular = false;
            break;
        }
    }

    bool all_real = true;
    for (std::size_t i = 0; i < n && all_real; ++i) all_real = all_roots_real(char_poly(L.ad_basis(i)));
    for (const RatVec& x : random_panel(n, 2 * n)) {
        if (!all_real) break;
        all_real = all_roots_real(char_poly(L.ad(x)));
    }
    if (!all_real) {
        f.completely_solvable = CompletelySolvable::Fail;
    } else if (triangularizable_over_q(L)) {
        f.completely_solvable = CompletelySolvable::Proved;
    } else {
        f.completely_solvable = CompletelySolvable::HeuristicPass;
    }
    return f;
}

}  // namespace cosalg
