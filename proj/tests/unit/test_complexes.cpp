#include "corpus.hpp"

#include <doctest.h>

using namespace homcyc;
using testing::mat;
using testing::vec;

namespace {

// circle as a simplicial chain complex: 3 vertices, 3 edges
ChainComplex circle() {
    Matrix d1 = mat({{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}});
    return ChainComplex(Grading::Homological, 0, {3, 3}, {d1}, true, true);
}

}  // namespace

TEST_CASE("homology of a triangulated circle") {
    auto h = homology(circle(), 0, 1, {true, true});
    CHECK(h[0].betti == 1);
    CHECK(h[1].betti == 1);
    REQUIRE(h[1].representatives.size() == 1);
    Vector z = h[1].representatives[0];
    CHECK(is_zero(circle().outgoing(1).apply(z)));
}

TEST_CASE("open ends refuse homology") {
    ChainComplex c(Grading::Homological, 0, {3, 3}, {mat({{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}})}, true, false);
    CHECK_FALSE(c.exact_at(1));
    CHECK_THROWS_AS(homology_at(c, 1), DegreeError);
    CHECK(homology_at(c, 0).betti == 1);
}

TEST_CASE("non-complex is caught") {
    Matrix d1 = mat({{1}});
    Matrix d2 = mat({{1}});
    ChainComplex c(Grading::Homological, 0, {1, 1, 1}, {d1, d2});
    CHECK_THROWS_AS(c.verify(), InvariantError);
}

TEST_CASE("cohomological grading") {
    // k --(1,1)--> k^2 --(1,-1)--> k
    ChainComplex c(Grading::Cohomological, 0, {1, 2, 1}, {mat({{1}, {1}}), mat({{1, -1}})}, true, true);
    c.verify();
    auto h = homology(c, 0, 2);
    CHECK(h[0].betti == 0);
    CHECK(h[1].betti == 0);
    CHECK(h[2].betti == 0);
}

TEST_CASE("homology coordinates and induced maps") {
    auto h = homology(circle(), 1, 1, {true, true});
    Vector z = h[0].representatives[0];
    Vector twice = z;
    for (auto& x : twice)
        x *= 2;
    CHECK(homology_coordinates(h[0], twice) == vec({2}));
    CHECK_THROWS_AS(homology_coordinates(h[0], vec({1, 0, 0})), PreconditionError);
    Matrix m = induced_on_homology(Matrix::identity(3) * Scalar(-1), h[0], h[0]);
    CHECK(m == mat({{-1}}));
}

TEST_CASE("sub and quotient complexes") {
    ChainComplex c = circle();
    std::vector<Subspace> subs = {Subspace::span({vec({1, 1, 1})}, 3), Subspace::zero(3)};
    CHECK_THROWS_AS(sub_complex(c, {Subspace::span({vec({1, 0, 0})}, 3), Subspace::full(3)}), NotASubspaceError);
    ChainComplex q = quotient_complex(c, subs);
    CHECK(q.dim(0) == 2);
    CHECK(homology_at(q, 0).betti == 0);
    CHECK(homology_at(q, 1).betti == 1);
}

TEST_CASE("total complex of a small bicomplex") {
    // two columns k --1--> k with zero vertical maps
    Bicomplex b(Grading::Homological);
    b.add_cell(0, 0, 1);
    b.add_cell(1, 0, 1);
    b.set_horizontal(1, 0, mat({{1}}));
    b.verify();
    ChainComplex t = total_complex(b, 0, 1, true, true);
    auto h = homology(t, 0, 1);
    CHECK(h[0].betti == 0);
    CHECK(h[1].betti == 0);
}

TEST_CASE("parallel_for propagates exceptions") {
    CHECK_THROWS_AS(parallel_for(8, [](std::size_t i) {
                        if (i == 5)
                            throw DegreeError("boom");
                    }),
                    DegreeError);
}
