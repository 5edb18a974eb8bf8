#include <doctest.h>

#include <random>

#include "cosalg/lie_algebra.hpp"

using namespace cosalg;

namespace {

LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

LieAlgebra heisenberg3() {
    LieAlgebra h(3, {"X", "Y", "Z"});
    h.set_bracket(0, 1, RatVec{rat(0), rat(0), rat(1)});  // [X,Y] = Z
    return h;
}

// [X_i, Z] = lambda Y_i, [Y_i, Z] = -lambda X_i with Z last.
LieAlgebra marrero(std::size_t n, const Rat& lambda) {
    const std::size_t dim = 2 * n + 1;
    LieAlgebra L(dim);
    for (std::size_t i = 0; i < n; ++i) {
        RatVec vy(dim, Rat(0)), vx(dim, Rat(0));
        vy[2 * i + 1] = lambda;
        L.set_bracket(2 * i, dim - 1, vy);
        vx[2 * i] = -lambda;
        L.set_bracket(2 * i + 1, dim - 1, vx);
    }
    return L;
}

// [e2, e1] = e1.
LieAlgebra aff_r() {
    LieAlgebra L(2);
    L.set_bracket(1, 0, RatVec{rat(1), rat(0)});
    return L;
}

/// Brute-force Jacobi check, independent of LieAlgebra::bracket: expands
/// [e_i,[e_j,e_k]] + cyclic directly through the structure constants.
bool jacobi_brute_force(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    Rat acc(0);
                    for (std::size_t l = 0; l < n; ++l) {
                        acc += L.structure_constant(j, k, l) * L.structure_constant(i, l, m);
                        acc += L.structure_constant(k, i, l) * L.structure_constant(j, l, m);
                        acc += L.structure_constant(i, j, l) * L.structure_constant(k, l, m);
                    }
                    if (acc != 0) return false;
                }
    return true;
}

RatMatrix random_small_matrix(std::mt19937& rng, std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rat(static_cast<long>(rng() % 7) - 3);
    return m;
}

}  // namespace

TEST_CASE("validate: abelian and Heisenberg pass") {
    CHECK(validate(abelian(3)).passed());
    CHECK(validate(heisenberg3()).passed());
    CHECK(validate(marrero(1, rat(1))).passed());
    CHECK(validate(marrero(2, rat(3, 2))).passed());
}

TEST_CASE("validate: non-Jacobi table fails with the right witness") {
    // [e1,e2] = e1, [e2,e3] = e2, [e1,e3] = e3
    LieAlgebra L(3);
    L.set_bracket(0, 1, RatVec{rat(1), rat(0), rat(0)});
    L.set_bracket(1, 2, RatVec{rat(0), rat(1), rat(0)});
    L.set_bracket(0, 2, RatVec{rat(0), rat(0), rat(1)});
    Report r = validate(L);
    CHECK_FALSE(r.passed());
    const Stage* f = r.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->name == "jacobi");
    CHECK(f->witness["triple"] == json({1, 2, 3}));
    // Residual computed by hand: [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]]
    //  = [e1,e2] - [e2,e3] + [e3,e1] = e1 - e2 - e3.
    CHECK(f->witness["residual"] == json({"1", "-1", "-1"}));
}

TEST_CASE("validate agrees with a brute-force Jacobi evaluator on random tables") {
    std::mt19937 rng(31);
    int rejected = 0;
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t n = 2 + rng() % 3;
        LieAlgebra L(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                RatVec v(n);
                for (auto& q : v) q = rat(static_cast<long>(rng() % 5) - 2);
                L.set_bracket(i, j, v);
            }
        bool expected = jacobi_brute_force(L);
        CHECK(validate(L).passed() == expected);
        if (!expected) ++rejected;
    }
    CHECK(rejected > 0);  // the fuzz actually exercised failures
}

TEST_CASE("bracket: pinned values and antisymmetry") {
    LieAlgebra h = heisenberg3();
    RatVec X{rat(1), rat(0), rat(0)}, Y{rat(0), rat(1), rat(0)};
    CHECK(h.bracket(X, Y) == RatVec{rat(0), rat(0), rat(1)});
    CHECK(vec_is_zero(h.bracket(X, X)));
    CHECK(vec_is_zero(abelian(3).bracket(X, Y)));
    CHECK_THROWS(h.bracket(RatVec{rat(1)}, Y));

    std::mt19937 rng(37);
    for (int iter = 0; iter < 10; ++iter) {
        RatVec a(3), b(3);
        for (auto& q : a) q = rat(static_cast<long>(rng() % 9) - 4);
        for (auto& q : b) q = rat(static_cast<long>(rng() % 9) - 4);
        CHECK(h.bracket(a, b) == vec_scale(rat(-1), h.bracket(b, a)));
    }
}

TEST_CASE("ad: matrices match the bracket") {
    CHECK(abelian(4).ad(RatVec{rat(1), rat(2), rat(3), rat(4)}).is_zero());

    LieAlgebra h = heisenberg3();
    RatVec X{rat(1), rat(0), rat(0)}, Y{rat(0), rat(1), rat(0)};
    CHECK(h.ad(X) * Y == RatVec{rat(0), rat(0), rat(1)});

    // marrero(1,1): [X,Z] = Y and [Y,Z] = -X give ad_Z X = -Y, ad_Z Y = X.
    LieAlgebra m = marrero(1, rat(1));
    RatMatrix adz = m.ad(RatVec{rat(0), rat(0), rat(1)});
    CHECK(adz.col(0) == RatVec{rat(0), rat(-1), rat(0)});
    CHECK(adz.col(1) == RatVec{rat(1), rat(0), rat(0)});
    CHECK(vec_is_zero(adz.col(2)));
}

TEST_CASE("ad(x) is a derivation for every x (Jacobi restated)") {
    std::mt19937 rng(41);
    for (const LieAlgebra& L : {heisenberg3(), marrero(1, rat(1)), aff_r()}) {
        for (int iter = 0; iter < 8; ++iter) {
            RatVec x(L.dim());
            for (auto& q : x) q = rat(static_cast<long>(rng() % 7) - 3);
            CHECK(is_derivation(L, L.ad(x)).passed());
        }
    }
}

TEST_CASE("is_derivation: zero map, abelian, and the diag(1,0,0) failure") {
    LieAlgebra h = heisenberg3();
    CHECK(is_derivation(h, RatMatrix(3, 3)).passed());
    std::mt19937 rng(43);
    CHECK(is_derivation(abelian(3), random_small_matrix(rng, 3)).passed());

    RatMatrix d(3, 3);
    d(0, 0) = 1;
    Report r = is_derivation(h, d);
    CHECK_FALSE(r.passed());
    CHECK(r.first_failure()->witness["pair"] == json({1, 2}));
}

TEST_CASE("semidirect_extend: rotation derivation on abelian R^2 gives marrero(1,1) up to basis order") {
    RatMatrix rot{{rat(0), rat(1)}, {rat(-1), rat(0)}};  // D(X) = -Y, D(Y) = X
    LieAlgebra ext = semidirect_extend(abelian(2), rot, "Z");
    CHECK(validate(ext).passed());
    CHECK(ext == marrero(1, rat(1)));

    // The transposed rotation gives the same algebra after swapping X and Y.
    RatMatrix rot2{{rat(0), rat(-1)}, {rat(1), rat(0)}};
    LieAlgebra ext2 = semidirect_extend(abelian(2), rot2, "Z");
    CHECK(validate(ext2).passed());
    RatMatrix swap(3, 3);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    swap(2, 2) = 1;
    CHECK(transform_basis(ext2, swap) == marrero(1, rat(1)));
}

TEST_CASE("semidirect_extend: D = 0 is the direct sum") {
    LieAlgebra ext = semidirect_extend(heisenberg3(), RatMatrix(3, 3));
    CHECK(validate(ext).passed());
    for (std::size_t j = 0; j < 3; ++j) CHECK(vec_is_zero(ext.bracket_basis(3, j)));
}

TEST_CASE("semidirect_extend rejects non-derivations and validates on random derivations") {
    LieAlgebra h = heisenberg3();
    RatMatrix d(3, 3);
    d(0, 0) = 1;
    CHECK_THROWS(semidirect_extend(h, d));

    std::mt19937 rng(47);
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t n = 2 + rng() % 3;
        RatMatrix D = random_small_matrix(rng, n);  // on abelian, everything is a derivation
        LieAlgebra ext = semidirect_extend(abelian(n), D);
        CHECK(validate(ext).passed());
    }
}

TEST_CASE("classify: abelian R^5") {
    ClassificationFlags f = classify(abelian(5));
    CHECK(f.abelian);
    CHECK(f.nilpotent);
    CHECK(f.solvable);
    CHECK(f.unimodular);
    CHECK(f.completely_solvable == CompletelySolvable::Proved);
}

TEST_CASE("classify: marrero(1,1)") {
    ClassificationFlags f = classify(marrero(1, rat(1)));
    CHECK_FALSE(f.abelian);
    CHECK_FALSE(f.nilpotent);
    CHECK(f.solvable);
    CHECK(f.unimodular);
    CHECK(f.completely_solvable == CompletelySolvable::Fail);  // ad_Z has a lambda^2+1 factor
}

TEST_CASE("classify: heisenberg3 is nilpotent and split") {
    ClassificationFlags f = classify(heisenberg3());
    CHECK_FALSE(f.abelian);
    CHECK(f.nilpotent);
    CHECK(f.solvable);
    CHECK(f.unimodular);
    CHECK(f.completely_solvable == CompletelySolvable::Proved);
}

TEST_CASE("classify: aff(R) is solvable, not unimodular, split") {
    ClassificationFlags f = classify(aff_r());
    CHECK_FALSE(f.abelian);
    CHECK_FALSE(f.nilpotent);
    CHECK(f.solvable);
    CHECK_FALSE(f.unimodular);  // tr ad_{e2} = 1
    CHECK(f.completely_solvable == CompletelySolvable::Proved);
}

TEST_CASE("classify: abelian => nilpotent => solvable ordering holds on samples") {
    for (const LieAlgebra& L : {abelian(2), heisenberg3(), marrero(1, rat(1)), aff_r()}) {
        ClassificationFlags f = classify(L);
        if (f.abelian) CHECK(f.nilpotent);
        if (f.nilpotent) CHECK(f.solvable);
    }
}

TEST_CASE("unimodularity: trace of ad is linear, random elements stay traceless") {
    std::mt19937 rng(53);
    LieAlgebra m = marrero(2, rat(1));
    REQUIRE(classify(m).unimodular);
    for (int iter = 0; iter < 10; ++iter) {
        RatVec x(m.dim());
        for (auto& q : x) q = rat(static_cast<long>(rng() % 11) - 5);
        RatMatrix a = m.ad(x);
        Rat tr(0);
        for (std::size_t k = 0; k < m.dim(); ++k) tr += a(k, k);
        CHECK(tr == 0);
    }
}

TEST_CASE("transform_basis preserves validity and classification") {
    std::mt19937 rng(59);
    LieAlgebra m = marrero(1, rat(1));
    RatMatrix p(3, 3);
    do {
        p = random_small_matrix(rng, 3);
    } while (rank(p) != 3);
    LieAlgebra t = transform_basis(m, p);
    CHECK(validate(t).passed());
    ClassificationFlags f = classify(t);
    CHECK(f.solvable);
    CHECK(f.unimodular);
    CHECK_FALSE(f.nilpotent);
}
