#ifndef LEIBNIZ_LINALG_HPP
#define LEIBNIZ_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

struct Rref {
  Matrix mat;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form by Gauss-Jordan elimination with exact
/// arithmetic. The result is the unique canonical representative of the
/// row space.
inline Rref rref(const Matrix& m) {
  Matrix a = m;
  const FieldSpec& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pr = lead;
    while (pr < a.rows() && a.at(pr, col).is_zero()) ++pr;
    if (pr == a.rows()) continue;
    if (pr != lead)
      for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a.at(pr, c), a.at(lead, c));
    const Scalar piv_inv = f.inv(a.at(lead, col));
    for (std::size_t c = 0; c < a.cols(); ++c)
      a.at(lead, c) = f.mul(piv_inv, a.at(lead, c));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, col).is_zero()) continue;
      const Scalar factor = a.at(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c)
        a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(lead, c)));
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

/// A linear subspace in canonical form: the basis rows are the nonzero
/// rows of a reduced row-echelon matrix, so equal subspaces compare
/// equal componentwise.
class Subspace {
 public:
  Subspace(FieldSpec f, std::size_t ambient_dim)
      : field_(f), ambient_(ambient_dim) {}

  /// Canonicalizes an arbitrary spanning set.
  static Subspace span(const FieldSpec& f, std::size_t ambient_dim,
                       const std::vector<Vec>& vectors) {
    Subspace s(f, ambient_dim);
    if (vectors.empty()) return s;
    const Rref r = rref(Matrix::of_rows(f, ambient_dim, vectors));
    for (std::size_t i = 0; i < r.rank(); ++i) s.basis_.push_back(r.mat.row(i));
    return s;
  }

  static Subspace full(const FieldSpec& f, std::size_t ambient_dim) {
    Subspace s(f, ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
      s.basis_.push_back(unit_vec(f, ambient_dim, i));
    return s;
  }

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_) throw UsageError("Subspace::contains: dimension");
    // reduce v against the echelon basis
    Vec w = v;
    for (const Vec& b : basis_) {
      std::size_t piv = 0;
      while (piv < ambient_ && b[piv].is_zero()) ++piv;
      if (piv == ambient_) continue;
      if (!w[piv].is_zero()) {
        const Scalar c = w[piv];
        for (std::size_t i = 0; i < ambient_; ++i)
          w[i] = field_.sub(w[i], field_.mul(c, b[i]));
      }
    }
    return is_zero_vec(w);
  }

  /// Coordinates of v in this basis; v must lie in the subspace.
  Vec coordinates(const Vec& v) const;

  Subspace intersect(const Subspace& o) const;

  Subspace sum(const Subspace& o) const {
    if (field_ != o.field_ || ambient_ != o.ambient_)
      throw UsageError("Subspace::sum: mismatch");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(field_, ambient_, all);
  }

  bool operator==(const Subspace& o) const {
    return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vec> basis_;
};

/// Kernel and image of a linear map, both in canonical form.
/// rank-nullity holds by construction: dim kernel + dim image = cols.
inline std::pair<Subspace, Subspace> kernel_image(const Matrix& m) {
  const FieldSpec& f = m.field();
  const Rref r = rref(m);
  // kernel: one generator per free column
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> kernel_gens;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(f, m.cols());
    v[c] = f.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = f.neg(r.mat.at(i, c));
    kernel_gens.push_back(std::move(v));
  }
  // image: column space, canonicalized as a row space of the transpose
  std::vector<Vec> image_gens;
  for (std::size_t c = 0; c < m.cols(); ++c) image_gens.push_back(m.col(c));
  return {Subspace::span(f, m.cols(), kernel_gens),
          Subspace::span(f, m.rows(), image_gens)};
}

/// One particular solution of m x = b, or nothing when b is outside the
/// image. A length mismatch is a usage error, not "no solution".
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw UsageError("solve: rhs length != rows");
  const FieldSpec& f = m.field();
  const Matrix aug = m.hstack(Matrix::of_cols(f, m.rows(), {b}));
  const Rref r = rref(aug);
  for (std::size_t p : r.pivots)
    if (p == m.cols()) return std::nullopt;  // pivot in the rhs column
  Vec x = zero_vec(f, m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    x[r.pivots[i]] = r.mat.at(i, m.cols());
  return x;
}

inline Vec Subspace::coordinates(const Vec& v) const {
  if (basis_.empty()) {
    if (!is_zero_vec(v)) throw UsageError("Subspace::coordinates: v not in subspace");
    return {};
  }
  const Matrix b = Matrix::of_cols(field_, ambient_, basis_);
  const auto x = solve(b, v);
  if (!x) throw UsageError("Subspace::coordinates: v not in subspace");
  return *x;
}

inline Subspace Subspace::intersect(const Subspace& o) const {
  if (field_ != o.field_ || ambient_ != o.ambient_)
    throw UsageError("Subspace::intersect: mismatch");
  if (basis_.empty() || o.basis_.empty()) return Subspace(field_, ambient_);
  // ker of (a, b) |-> A^T a - B^T b gives the coefficient pairs of
  // common vectors
  const Matrix a = Matrix::of_cols(field_, ambient_, basis_);
  const Matrix b = Matrix::of_cols(field_, ambient_, o.basis_);
  Matrix neg_b(field_, b.rows(), b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      neg_b.at(r, c) = field_.neg(b.at(r, c));
  const auto [ker, img] = kernel_image(a.hstack(neg_b));
  (void)img;
  std::vector<Vec> gens;
  for (const Vec& k : ker.basis()) {
    Vec coeff(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(basis_.size()));
    gens.push_back(a.apply(coeff));
  }
  return span(field_, ambient_, gens);
}

/// Canonical basis of the pullback {(u, v) : f(u) = g(v)} inside U + V,
/// realized as the kernel of (u, v) |-> f(u) - g(v).
inline Subspace pullback_basis(const Matrix& f, const Matrix& g) {
  if (f.field() != g.field()) throw UsageError("pullback_basis: field mismatch");
  if (f.rows() != g.rows()) throw UsageError("pullback_basis: target dimension mismatch");
  Matrix neg_g(g.field(), g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      neg_g.at(r, c) = g.field().neg(g.at(r, c));
  return kernel_image(f.hstack(neg_g)).first;
}

inline bool is_bijective(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.cols();
}

/// Inverse of a bijective matrix.
inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw UsageError("inverse: not square");
  const FieldSpec& f = m.field();
  const Rref r = rref(m.hstack(Matrix::identity(f, m.rows())));
  if (r.rank() != m.rows() || (!r.pivots.empty() && r.pivots.back() >= m.cols()))
    throw UsageError("inverse: matrix is singular");
  Matrix inv(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      inv.at(i, j) = r.mat.at(i, m.cols() + j);
  return inv;
}

}  // namespace leibniz

#endif
