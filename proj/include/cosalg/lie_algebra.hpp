#ifndef COSALG_LIE_ALGEBRA_HPP
#define COSALG_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "cosalg/linalg.hpp"
#include "cosalg/report.hpp"

namespace cosalg {

/// Finite-dimensional real Lie algebra given by a structure-constant table:
/// [e_i, e_j] = sum_k c[i][j][k] e_k. The table is stored densely and kept
/// antisymmetric by construction; the Jacobi identity is a separate verdict
/// (see validate()).
class LieAlgebra {
public:
    explicit LieAlgebra(std::size_t dim, std::vector<std::string> basis_names = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const std::string& basis_name(std::size_t i) const { return names_[i]; }

    /// Sets [e_i, e_j] = v (and [e_j, e_i] = -v). Rejects i == j with v != 0.
    void set_bracket(std::size_t i, std::size_t j, const RatVec& v);

    const RatVec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    Rat structure_constant(std::size_t i, std::size_t j, std::size_t k) const { return table_[i * dim_ + j][k]; }

    /// Bilinear bracket of coordinate vectors.
    RatVec bracket(const RatVec& x, const RatVec& y) const;

    /// Matrix of y -> [x, y] (column j holds the coordinates of [x, e_j]).
    RatMatrix ad(const RatVec& x) const;
    RatMatrix ad_basis(std::size_t i) const;

    bool is_abelian() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    std::size_t dim_;
    std::vector<std::string> names_;
    std::vector<RatVec> table_;  // dim*dim entries, each a coordinate vector
};

/// Antisymmetry plus Jacobi. A failure names the violating triple (i, j, k in
/// 1-based labels) and the nonzero residual vector.
Report validate(const LieAlgebra& L);

/// Derivation property D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
Report is_derivation(const LieAlgebra& L, const RatMatrix& D);

/// Appends a new basis vector z acting by the derivation D: brackets inside L
/// are kept, [z, x] = D(x). The result satisfies Jacobi exactly because D is a
/// derivation; non-derivations are rejected.
LieAlgebra semidirect_extend(const LieAlgebra& L, const RatMatrix& D, const std::string& new_name = "xi");

/// Structure constants in the basis given by the columns of P (invertible):
/// [x, y]_new = P^{-1} [P x, P y].
LieAlgebra transform_basis(const LieAlgebra& L, const RatMatrix& P);

/// Span of pairwise brackets [span(A), span(B)], returned as a deterministic
/// basis (pivot columns of the stacked bracket matrix).
std::vector<RatVec> bracket_span(const LieAlgebra& L, const std::vector<RatVec>& a, const std::vector<RatVec>& b);

std::vector<RatVec> standard_basis_vectors(std::size_t dim);

// --- classification ---

enum class CompletelySolvable { Proved, HeuristicPass, Fail };

inline const char* completely_solvable_str(CompletelySolvable c) {
    switch (c) {
        case CompletelySolvable::Proved: return "proved";
        case CompletelySolvable::HeuristicPass: return "heuristic-pass";
        case CompletelySolvable::Fail: return "fail";
    }
    return "?";
}

struct ClassificationFlags {
    bool abelian = false;
    bool nilpotent = false;
    bool solvable = false;
    bool unimodular = false;
    CompletelySolvable completely_solvable = CompletelySolvable::Fail;

    json to_json() const {
        json j;
        j["abelian"] = abelian;
        j["nilpotent"] = nilpotent;
        j["solvable"] = solvable;
        j["unimodular"] = unimodular;
        j["completely_solvable"] = completely_solvable_str(completely_solvable);
        return j;
    }
};

/// Derived/lower-central series, trace test for unimodularity, and the
/// stratified completely-solvable detector: "proved" needs all-real spectra
/// on the basis plus a successful triangularization through rational common
/// eigenvectors; a sampled panel that stays all-real without triangularization
/// reports "heuristic-pass"; any tested element with a non-real eigenvalue
/// pair reports "fail".
ClassificationFlags classify(const LieAlgebra& L);

}  // namespace cosalg

#endif
