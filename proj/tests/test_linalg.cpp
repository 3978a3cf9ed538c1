#include <catch2/catch_amalgamated.hpp>

#include "leibniz/linalg.hpp"

using namespace leibniz;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("rref and rank") {
  const Matrix m = Matrix::from_rows(Q, 3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 1});
  CHECK(rank(m) == 2);
  CHECK(rank(Matrix::identity(Q, 4)) == 4);
  CHECK(rank(Matrix(Q, 3, 5)) == 0);

  const Rref r = rref(m);
  // pivot columns carry unit vectors
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t row = 0; row < r.mat.rows(); ++row)
      CHECK(r.mat.at(row, r.pivots[i]) == (row == i ? Q.one() : Q.zero()));
}

TEST_CASE("solve") {
  const Matrix m = Matrix::from_rows(Q, 2, 2, {1, 1, 1, -1});
  const auto sol = solve(m, Vec{Q.from_int(3), Q.from_int(1)});
  REQUIRE(sol);
  CHECK((*sol)[0] == Q.from_int(2));
  CHECK((*sol)[1] == Q.one());

  const Matrix sing = Matrix::from_rows(Q, 2, 2, {1, 1, 2, 2});
  CHECK_FALSE(solve(sing, Vec{Q.zero(), Q.one()}));
  CHECK(solve(sing, Vec{Q.one(), Q.from_int(2)}));
  CHECK_THROWS_AS(solve(sing, Vec{Q.one()}), UsageError);
}

TEST_CASE("kernel and image satisfy rank-nullity") {
  const Matrix m = Matrix::from_rows(Q, 3, 4, {1, 0, 2, 0, 0, 1, 3, 0, 1, 1, 5, 0});
  const auto [ker, img] = kernel_image(m);
  CHECK(ker.dim() + img.dim() == 4);
  for (const Vec& v : ker.basis()) CHECK(is_zero_vec(m.apply(v)));
  for (std::size_t c = 0; c < m.cols(); ++c) CHECK(img.contains(m.col(c)));
}

TEST_CASE("subspace operations") {
  const Vec e1 = unit_vec(Q, 3, 0), e2 = unit_vec(Q, 3, 1), e3 = unit_vec(Q, 3, 2);
  const Subspace a = Subspace::span(Q, 3, {e1, e2});
  const Subspace b = Subspace::span(Q, 3, {e2, e3});
  CHECK(a.dim() == 2);
  CHECK(a.contains(add(Q, e1, e2)));
  CHECK_FALSE(a.contains(e3));
  CHECK(a.intersect(b) == Subspace::span(Q, 3, {e2}));
  CHECK(a.sum(b) == Subspace::full(Q, 3));

  // canonical basis: span is independent of generator presentation
  const Subspace c = Subspace::span(Q, 3, {add(Q, e1, e2), sub(Q, e1, e2), e1});
  CHECK(c == a);

  const Vec v = add(Q, scale(Q, Q.from_int(4), e1), scale(Q, Q.from_int(-3), e2));
  const Vec coords = a.coordinates(v);
  CHECK(coords == Vec{Q.from_int(4), Q.from_int(-3)});
  CHECK_THROWS_AS(a.coordinates(e3), UsageError);
}

TEST_CASE("matrix inverse") {
  const Matrix m = Matrix::from_rows(Q, 2, 2, {2, 1, 1, 1});
  CHECK(is_bijective(m));
  CHECK(inverse(m).mul(m) == Matrix::identity(Q, 2));
  CHECK(m.mul(inverse(m)) == Matrix::identity(Q, 2));
  CHECK_FALSE(is_bijective(Matrix::from_rows(Q, 2, 2, {1, 2, 2, 4})));
  CHECK_THROWS_AS(inverse(Matrix::from_rows(Q, 2, 2, {1, 2, 2, 4})), UsageError);

  const FieldSpec g = FieldSpec::gf(5);
  const Matrix n = Matrix::from_rows(g, 2, 2, {2, 3, 1, 1});
  CHECK(inverse(n).mul(n) == Matrix::identity(g, 2));
}

TEST_CASE("pullback basis") {
  // {(u, v) in Q^2 x Q^2 : f(u) = g(v)} with f = [1 0], g = [0 1]
  const Matrix f = Matrix::from_rows(Q, 1, 2, {1, 0});
  const Matrix g = Matrix::from_rows(Q, 1, 2, {0, 1});
  const Subspace pb = pullback_basis(f, g);
  CHECK(pb.dim() == 3);
  for (const Vec& w : pb.basis()) {
    const Vec u(w.begin(), w.begin() + 2);
    const Vec v(w.begin() + 2, w.end());
    CHECK(f.apply(u) == g.apply(v));
  }
}

TEST_CASE("zero-dimensional edge cases") {
  const Matrix empty(Q, 0, 3);
  CHECK(rank(empty) == 0);
  const auto [ker, img] = kernel_image(empty);
  CHECK(ker.dim() == 3);
  CHECK(img.dim() == 0);
  CHECK(kernel_image(Matrix(Q, 3, 0)).first.dim() == 0);
}
