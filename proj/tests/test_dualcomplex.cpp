#include <stdexcept>

#include "doctest.h"
#include "fano/dualcomplex.hpp"

using namespace fano;

namespace {

DualComplexDeclaration line_conic() {
    // two components meeting in two points
    DualComplexDeclaration d;
    d.vertices = {"vL", "vC"};
    d.cells.push_back({1, {"vL", "vC"}, 2});
    return d;
}

}  // namespace

TEST_CASE("the line-conic pair gives a circle") {
    DualComplex c = DualComplex::build(line_conic());
    CHECK(c.dimension() == 1);
    CHECK(c.is_circle());
}

TEST_CASE("dimension conventions") {
    DualComplex empty = DualComplex::build({});
    CHECK(empty.dimension() == -1);

    DualComplexDeclaration one;
    one.vertices = {"v"};
    CHECK(DualComplex::build(one).dimension() == 0);

    // three divisors meeting pairwise in one curve, plus a triple point
    DualComplexDeclaration tri;
    tri.vertices = {"a", "b", "c"};
    tri.cells.push_back({1, {"a", "b"}, 1});
    tri.cells.push_back({1, {"b", "c"}, 1});
    tri.cells.push_back({1, {"a", "c"}, 1});
    tri.cells.push_back({2, {"a", "b", "c"}, 1});
    DualComplex t = DualComplex::build(tri);
    CHECK(t.dimension() == 2);
    CHECK_FALSE(t.is_circle());
}

TEST_CASE("circle recognition rejects paths and disjoint unions") {
    DualComplexDeclaration path;
    path.vertices = {"a", "b", "c"};
    path.cells.push_back({1, {"a", "b"}, 1});
    path.cells.push_back({1, {"b", "c"}, 1});
    CHECK_FALSE(DualComplex::build(path).is_circle());

    DualComplexDeclaration two;
    two.vertices = {"a", "b", "c", "d"};
    two.cells.push_back({1, {"a", "b"}, 2});
    two.cells.push_back({1, {"c", "d"}, 2});
    CHECK_FALSE(DualComplex::build(two).is_circle());

    DualComplexDeclaration triangle;
    triangle.vertices = {"a", "b", "c"};
    triangle.cells.push_back({1, {"a", "b"}, 1});
    triangle.cells.push_back({1, {"b", "c"}, 1});
    triangle.cells.push_back({1, {"a", "c"}, 1});
    CHECK(DualComplex::build(triangle).is_circle());
}

TEST_CASE("declaration validation") {
    DualComplexDeclaration bad;
    bad.vertices = {"a", "b", "c"};
    bad.cells.push_back({2, {"a", "b", "c"}, 1});  // no edges underneath
    CHECK_THROWS_AS(DualComplex::build(bad), std::invalid_argument);

    DualComplexDeclaration dup;
    dup.vertices = {"a", "a"};
    CHECK_THROWS_AS(DualComplex::build(dup), std::invalid_argument);

    DualComplexDeclaration self_cell;
    self_cell.vertices = {"a", "b"};
    self_cell.cells.push_back({1, {"a", "a"}, 1});
    CHECK_THROWS_AS(DualComplex::build(self_cell), std::invalid_argument);

    DualComplexDeclaration wrong_arity;
    wrong_arity.vertices = {"a", "b"};
    wrong_arity.cells.push_back({1, {"a"}, 1});
    CHECK_THROWS_AS(DualComplex::build(wrong_arity), std::invalid_argument);
}

TEST_CASE("coregularity arithmetic") {
    DualComplex circle = DualComplex::build(line_conic());
    auto rec = coregularity(2, circle);
    CHECK(rec.reg == 1);
    CHECK(rec.coreg == 0);

    // two boundary points on a curve
    DualComplexDeclaration pts;
    pts.vertices = {"p", "q"};
    auto rec1 = coregularity(1, DualComplex::build(pts));
    CHECK(rec1.reg == 0);
    CHECK(rec1.coreg == 0);

    // empty complex: coreg = dim X
    auto rec_empty = coregularity(3, DualComplex::build({}));
    CHECK(rec_empty.reg == -1);
    CHECK(rec_empty.coreg == 3);

    CHECK_THROWS_AS(coregularity(1, circle), std::invalid_argument);

    for (int dimx = 1; dimx <= 4; dimx++)
        for (int d = -1; d < dimx; d++) {
            auto r = coregularity_of_dimension(dimx, d);
            CHECK(r.coreg + r.reg + 1 == r.dim_x);
        }
}

TEST_CASE("dimension is monotone under adding cells") {
    DualComplexDeclaration decl;
    decl.vertices = {"a", "b", "c"};
    decl.cells.push_back({1, {"a", "b"}, 1});
    int d1 = DualComplex::build(decl).dimension();
    decl.cells.push_back({1, {"b", "c"}, 1});
    decl.cells.push_back({1, {"a", "c"}, 1});
    int d2 = DualComplex::build(decl).dimension();
    CHECK(d2 >= d1);
    decl.cells.push_back({2, {"a", "b", "c"}, 1});
    int d3 = DualComplex::build(decl).dimension();
    CHECK(d3 == 2);
    CHECK(d3 > d2);
}

TEST_CASE("the nodal-pair rule") {
    NodalPairDeclaration decl;
    decl.components = {"D", "E"};
    decl.du_val = true;
    decl.nodal_genus_one_intersection = true;
    decl.smooth_locus = true;
    CHECK(lemma_dim2_rule(decl) == 2);

    decl.nodal_genus_one_intersection = false;
    CHECK_THROWS_AS(lemma_dim2_rule(decl), std::invalid_argument);
    decl.nodal_genus_one_intersection = true;
    decl.components = {"D"};
    CHECK_THROWS_AS(lemma_dim2_rule(decl), std::invalid_argument);
}

TEST_CASE("resolution graphs of the cusp table") {
    auto g444 = resolution_graph(4, 4, 4);
    CHECK(g444.weights == std::vector<int>{-3, -3, -3});
    CHECK_FALSE(g444.nodal);

    for (auto [p, q, r] : {std::tuple<int, int, int>{2, 3, 7}, {2, 4, 5}, {3, 3, 4}}) {
        auto g = resolution_graph(p, q, r);
        CHECK(g.nodal);
        CHECK(g.weights.size() == 1);
        CHECK(g.weights[0] <= -3);
    }

    CHECK(resolution_graph(2, 4, 6).weights == std::vector<int>{-4, -2});
    CHECK(resolution_graph(2, 3, 8).weights == std::vector<int>{-3, -2});
    CHECK(resolution_graph(3, 3, 5).weights == std::vector<int>{-5, -2});
    CHECK(resolution_graph(2, 5, 5).weights == std::vector<int>{-3, -3});
    CHECK(resolution_graph(2, 5, 7).weights == std::vector<int>{-3, -3, -2, -2});
    CHECK(resolution_graph(3, 4, 5).weights == std::vector<int>{-4, -3, -2});

    CHECK_THROWS_AS(resolution_graph(3, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(resolution_graph(2, 3, 6), std::invalid_argument);
    CHECK_THROWS_AS(resolution_graph(4, 3, 4), std::invalid_argument);
}

TEST_CASE("exactly three cusp triples resolve to a single nodal curve") {
    std::vector<std::tuple<int, int, int>> nodal;
    for (int p = 2; p <= 20; p++)
        for (int q = p; q <= 20; q++)
            for (int r = q; r <= 20; r++) {
                if (p + q + r > 20) continue;
                if (static_cast<long>(q) * r + static_cast<long>(p) * r +
                        static_cast<long>(p) * q >=
                    static_cast<long>(p) * q * r)
                    continue;
                auto g = resolution_graph(p, q, r);
                if (g.nodal) nodal.push_back({p, q, r});
                // structural invariants
                CHECK(g.weights.size() >= 1);
                bool has_le3 = false;
                for (int w : g.weights) {
                    CHECK(w <= -2);
                    if (w <= -3) has_le3 = true;
                }
                CHECK(has_le3);
            }
    CHECK(nodal == std::vector<std::tuple<int, int, int>>{{2, 3, 7}, {2, 4, 5}, {3, 3, 4}});
}

TEST_CASE("vertex count of the all-large case is p+q+r-9") {
    for (int p = 4; p <= 12; p++)
        for (int q = p; q <= 12; q++)
            for (int r = q; r <= 12; r++)
                CHECK(resolution_graph(p, q, r).weights.size() ==
                      static_cast<size_t>(p + q + r - 9));
}
