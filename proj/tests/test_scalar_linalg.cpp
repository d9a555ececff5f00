#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "fss/solver.hpp"

#include <random>

using namespace fss;
using namespace fss::testing;

namespace {

GaussianRational randomScalar(std::mt19937& rng) {
    // entries in {0, +-1, +-i, +-1/2}
    switch (rng() % 7) {
        case 0: return gr(0);
        case 1: return gr(1);
        case 2: return gr(-1);
        case 3: return gi(1);
        case 4: return gi(-1);
        case 5: return gr(1, 2);
        default: return gr(-1, 2);
    }
}

Matrix randomMatrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = randomScalar(rng);
    return m;
}

} // namespace

TEST_CASE("gaussian rational field arithmetic") {
    GaussianRational a = gr(1, 2) + gi(1), b = gr(-2), c = gi(-3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * a.inverse() == gr(1));
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(gi(1) * gi(1) == gr(-1));
    CHECK_THROWS_AS(gr(0).inverse(), std::domain_error);

    // conjugation fixes the rational subfield
    CHECK(gr(7, 3).conj() == gr(7, 3));

    CHECK(GaussianRational::ratStr(mpq_class(4, 6)) == "2/3");
    CHECK(GaussianRational::parseRat("4/6") == mpq_class(2, 3));
    CHECK(GaussianRational::parseRat("-5") == mpq_class(-5));
    CHECK_THROWS_AS(GaussianRational::parseRat("1/0"), std::invalid_argument);
}

TEST_CASE("rref: identity, dependent rows, zero") {
    Matrix id = Matrix::identity(2);
    auto [r1, p1] = rref(id);
    CHECK(r1 == id);
    CHECK(p1 == std::vector<std::size_t>{0, 1});

    // [[1,i],[i,-1]]: second row = i * first row
    Matrix m(2, 2);
    m.at(0, 0) = gr(1);
    m.at(0, 1) = gi(1);
    m.at(1, 0) = gi(1);
    m.at(1, 1) = gr(-1);
    auto [r2, p2] = rref(m);
    CHECK(p2 == std::vector<std::size_t>{0});
    CHECK(r2.at(0, 0) == gr(1));
    CHECK(r2.at(0, 1) == gi(1));
    CHECK(r2.at(1, 0) == gr(0));
    CHECK(r2.at(1, 1) == gr(0));

    Matrix z(3, 4);
    auto [r3, p3] = rref(z);
    CHECK(r3.isZero());
    CHECK(p3.empty());
}

TEST_CASE("rref is idempotent and canonical on random matrices; rank-nullity") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        Matrix m = randomMatrix(rng, rows, cols);
        auto [r, piv] = rref(m);
        auto [rr, piv2] = rref(r);
        CHECK(rr == r);
        CHECK(piv == piv2);
        CHECK(kernel(m).dim() + image(m).dim() == cols);
        // canonical column space: equal column spaces give equal Subspace bases
        Matrix shuffled(rows, cols);
        for (std::size_t j = 0; j < cols; ++j) shuffled.setCol(j, m.colVec(cols - 1 - j));
        CHECK(image(m) == image(shuffled));
    }
}

TEST_CASE("kernel and image basics") {
    Matrix id = Matrix::identity(3);
    CHECK(kernel(id).dim() == 0);
    CHECK(image(id) == Subspace::full(3));

    Matrix z(3, 3);
    CHECK(kernel(z).dim() == 3);
    CHECK(image(z).dim() == 0);
}

TEST_CASE("subspace algebra") {
    // two complementary lines in dim 2
    Subspace l1 = Subspace::span(2, {Vec{gr(1), gr(0)}});
    Subspace l2 = Subspace::span(2, {Vec{gr(1), gr(1)}});
    CHECK(l1.sum(l2) == Subspace::full(2));
    CHECK(l1.intersect(l2).dim() == 0);
    CHECK(l1.intersect(l1) == l1);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t dim = 2 + rng() % 4;
        Subspace s = image(randomMatrix(rng, dim, 1 + rng() % 3));
        Subspace t = image(randomMatrix(rng, dim, 1 + rng() % 3));
        CHECK(s.sum(t).dim() + s.intersect(t).dim() == s.dim() + t.dim());
        CHECK(s.sum(t).containsSubspace(s));
        CHECK(s.containsSubspace(s.intersect(t)));
        CHECK(s.quotientDim(s.intersect(t)) == s.dim() - s.intersect(t).dim());
    }

    // preimage of {0} is the kernel
    Matrix m = randomMatrix(rng, 3, 4);
    CHECK(Subspace(3).preimage(m) == kernel(m));
    CHECK_THROWS_AS(l1.quotientDim(l2), std::invalid_argument);
}

TEST_CASE("min_norm_solve: identity, underdetermined, unsolvable") {
    Matrix id = Matrix::identity(3);
    MinNormSolver s1(id, id);
    Vec b{gr(1), gi(2), gr(-1, 2)};
    CHECK(*s1.solve(b) == b);

    // minimize |x|^2 subject to x1 + x2 = 2 -> (1,1)
    Matrix a(1, 2);
    a.at(0, 0) = gr(1);
    a.at(0, 1) = gr(1);
    MinNormSolver s2(a, Matrix::identity(2));
    Vec sol = *s2.solve(Vec{gr(2)});
    CHECK(sol == Vec{gr(1), gr(1)});

    Matrix z(2, 2);
    MinNormSolver s3(z, Matrix::identity(2));
    CHECK_FALSE(s3.solve(Vec{gr(1), gr(0)}).has_value());
    CHECK(s3.solve(Vec{gr(0), gr(0)}).has_value());
}

TEST_CASE("min_norm_solve: exactness, gram-orthogonality, minimality") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        Matrix a = randomMatrix(rng, rows, cols);
        // random Hermitian positive-definite gram: B^H B + I
        Matrix b = randomMatrix(rng, cols, cols);
        Matrix gram = b.hermitian() * b + Matrix::identity(cols);
        REQUIRE(gram.isPositiveDefinite());
        MinNormSolver solver(a, gram);
        Vec x0(cols);
        for (auto& v : x0) v = randomScalar(rng);
        Vec rhs = a.apply(x0); // guaranteed solvable
        Vec x = *solver.solve(rhs);
        CHECK(a.apply(x) == rhs);
        Subspace kerA = kernel(a);
        for (std::size_t j = 0; j < kerA.dim(); ++j) {
            Vec kvec = kerA.basisVec(j);
            CHECK(innerProduct(x, kvec, gram).isZero());
            // any competitor x + c k has norm >= |x|
            for (long c : {1L, -1L, 2L}) {
                Vec comp = addVec(x, scaleVec(gr(c), kvec));
                mpq_class nx = innerProduct(x, x, gram).re();
                mpq_class nc = innerProduct(comp, comp, gram).re();
                CHECK(nc >= nx);
            }
        }
    }
}

TEST_CASE("adjoint-style inner product identities") {
    std::mt19937 rng(7);
    Matrix gram = Matrix::identity(3);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = randomMatrix(rng, 3, 3);
        Matrix astar = a.hermitian();
        for (int t2 = 0; t2 < 5; ++t2) {
            Vec x(3), y(3);
            for (auto& v : x) v = randomScalar(rng);
            for (auto& v : y) v = randomScalar(rng);
            CHECK(innerProduct(a.apply(x), y, gram) == innerProduct(x, astar.apply(y), gram));
        }
        CHECK(astar.hermitian() == a);
    }
}
