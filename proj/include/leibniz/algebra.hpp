#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

struct AlgebraReport {
  bool leibniz_ok = false;
  bool abelian = false;
  bool lie = false;
};

/// A finite-dimensional algebra given by its structure constants:
/// c[i][j][k] is the coefficient of e_k in [e_i, e_j]. An instance starts
/// as an unverified candidate; validate() checks the Leibniz identity on
/// all basis triples (bilinearity extends it to the whole space) and
/// verified() reflects the outcome.
class LeibnizAlgebra {
 public:
  /// Candidate with all structure constants zero (abelian once verified).
  static LeibnizAlgebra candidate(FieldSpec f, std::size_t dim,
                                  std::vector<std::string> basis_names = {}) {
    return LeibnizAlgebra(f, dim,
                          std::vector<Scalar>(dim * dim * dim, f.zero()),
                          std::move(basis_names));
  }

  static LeibnizAlgebra candidate(FieldSpec f, std::size_t dim,
                                  std::vector<Scalar> tensor,
                                  std::vector<std::string> basis_names = {}) {
    if (tensor.size() != dim * dim * dim)
      throw UsageError("LeibnizAlgebra: tensor must have dim^3 entries");
    return LeibnizAlgebra(f, dim, std::move(tensor), std::move(basis_names));
  }

  /// Validates and throws when the Leibniz identity fails.
  static LeibnizAlgebra checked(FieldSpec f, std::size_t dim,
                                std::vector<Scalar> tensor,
                                std::vector<std::string> basis_names = {}) {
    LeibnizAlgebra a = candidate(f, dim, std::move(tensor), std::move(basis_names));
    if (!a.validate().leibniz_ok)
      throw UsageError("LeibnizAlgebra: Leibniz identity fails");
    return a;
  }

  static LeibnizAlgebra abelian(FieldSpec f, std::size_t dim) {
    LeibnizAlgebra a = candidate(f, dim);
    a.verified_ = true;
    return a;
  }

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  bool verified() const { return verified_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& tensor() const { return c_; }

  /// [e_i, e_j] as a coordinate vector.
  Vec basis_bracket(std::size_t i, std::size_t j) const {
    Vec v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
    return v;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
      throw UsageError("bracket: vector length != dim");
    Vec out = zero_vec(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        const Scalar xy = field_.mul(x[i], y[j]);
        for (std::size_t k = 0; k < dim_; ++k)
          out[k] = field_.add(out[k], field_.mul(xy, c(i, j, k)));
      }
    }
    return out;
  }

  /// Basis-level validation. The Lie flag uses the polarized form
  /// (c[i][i][.] = 0 and c[i][j][.] + c[j][i][.] = 0), which captures
  /// [x,x] = 0 in every characteristic including 2.
  AlgebraReport validate() const {
    AlgebraReport rep;
    rep.leibniz_ok = true;
    for (std::size_t i = 0; i < dim_ && rep.leibniz_ok; ++i)
      for (std::size_t j = 0; j < dim_ && rep.leibniz_ok; ++j)
        for (std::size_t l = 0; l < dim_ && rep.leibniz_ok; ++l) {
          const Vec lhs = bracket(unit_vec(field_, dim_, i), basis_bracket(j, l));
          const Vec rhs = sub(field_, bracket(basis_bracket(i, j), unit_vec(field_, dim_, l)),
                              bracket(basis_bracket(i, l), unit_vec(field_, dim_, j)));
          if (lhs != rhs) rep.leibniz_ok = false;
        }
    rep.abelian = true;
    for (const auto& x : c_)
      if (!x.is_zero()) rep.abelian = false;
    rep.lie = rep.leibniz_ok;
    for (std::size_t i = 0; i < dim_ && rep.lie; ++i)
      for (std::size_t j = i; j < dim_ && rep.lie; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          const Scalar s = (i == j) ? c(i, i, k)
                                    : field_.add(c(i, j, k), c(j, i, k));
          if (!s.is_zero()) {
            rep.lie = false;
            break;
          }
        }
    verified_ = rep.leibniz_ok;
    return rep;
  }

  bool operator==(const LeibnizAlgebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && c_ == o.c_;
  }

 private:
  LeibnizAlgebra(FieldSpec f, std::size_t dim, std::vector<Scalar> tensor,
                 std::vector<std::string> basis_names)
      : field_(f), dim_(dim), c_(std::move(tensor)),
        basis_names_(std::move(basis_names)) {
    if (basis_names_.empty())
      for (std::size_t i = 0; i < dim_; ++i)
        basis_names_.push_back("e" + std::to_string(i + 1));
    if (basis_names_.size() != dim_)
      throw UsageError("LeibnizAlgebra: wrong number of basis names");
  }

  FieldSpec field_;
  std::size_t dim_;
  std::vector<Scalar> c_;
  std::vector<std::string> basis_names_;
  mutable bool verified_ = false;
};

/// A linear map between the underlying spaces of two algebras, stored as
/// a (target dim) x (source dim) matrix acting on coordinates.
struct LinearMorphism {
  LeibnizAlgebra source;
  LeibnizAlgebra target;
  Matrix matrix;

  LinearMorphism(LeibnizAlgebra src, LeibnizAlgebra tgt, Matrix m)
      : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (source.field() != target.field())
      throw UsageError("LinearMorphism: field mismatch");
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
      throw UsageError("LinearMorphism: matrix shape mismatch");
  }

  static LinearMorphism identity(const LeibnizAlgebra& a) {
    return LinearMorphism(a, a, Matrix::identity(a.field(), a.dim()));
  }

  static LinearMorphism zero(const LeibnizAlgebra& src, const LeibnizAlgebra& tgt) {
    return LinearMorphism(src, tgt, Matrix(src.field(), tgt.dim(), src.dim()));
  }

  Vec apply(const Vec& x) const { return matrix.apply(x); }
};

/// f[x,y] = [f(x), f(y)] on all basis pairs.
inline bool check_morphism(const LinearMorphism& f) {
  const LeibnizAlgebra& a = f.source;
  const LeibnizAlgebra& b = f.target;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec lhs = f.apply(a.basis_bracket(i, j));
      const Vec rhs = b.bracket(f.apply(unit_vec(a.field(), a.dim(), i)),
                                f.apply(unit_vec(a.field(), a.dim(), j)));
      if (lhs != rhs) return false;
    }
  return true;
}

inline LinearMorphism compose(const LinearMorphism& g, const LinearMorphism& f) {
  if (!(f.target == g.source))
    throw UsageError("compose: target/source mismatch");
  return LinearMorphism(f.source, g.target, g.matrix.mul(f.matrix));
}

/// [a, s] and [s, a] both land in s, checked on basis pairs.
inline bool is_ideal(const LeibnizAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw UsageError("is_ideal: ambient mismatch");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vec e = unit_vec(a.field(), a.dim(), i);
    for (const Vec& v : s.basis()) {
      if (!s.contains(a.bracket(e, v))) return false;
      if (!s.contains(a.bracket(v, e))) return false;
    }
  }
  return true;
}

/// Componentwise bracket on the direct sum; basis order is a's basis
/// followed by b's.
inline LeibnizAlgebra direct_product(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  if (a.field() != b.field()) throw UsageError("direct_product: field mismatch");
  const FieldSpec& f = a.field();
  const std::size_t n = a.dim() + b.dim();
  std::vector<Scalar> c(n * n * n, f.zero());
  const auto idx = [n](std::size_t i, std::size_t j, std::size_t k) {
    return (i * n + j) * n + k;
  };
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        c[idx(i, j, k)] = a.c(i, j, k);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        c[idx(a.dim() + i, a.dim() + j, a.dim() + k)] = b.c(i, j, k);
  LeibnizAlgebra prod = LeibnizAlgebra::candidate(f, n, std::move(c));
  if (!prod.validate().leibniz_ok)
    throw InternalError("direct_product: result fails validation");
  return prod;
}

}  // namespace leibniz

#endif
