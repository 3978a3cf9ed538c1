#ifndef LEIBNIZ_ACTION_HPP
#define LEIBNIZ_ACTION_HPP

#include <array>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

struct ActionReport {
  std::array<bool, 6> axiom{};
  bool all() const {
    for (bool b : axiom)
      if (!b) return false;
    return true;
  }
};

/// A Leibniz action of one algebra on another, stored as a pair of
/// rank-3 tensors: lambda for (x, m) |-> x.m and rho for (m, x) |-> m.x,
/// with x in the actor and m in the actee.
class LeibnizAction {
 public:
  LeibnizAction(LeibnizAlgebra actor, LeibnizAlgebra actee,
                std::vector<Scalar> lambda, std::vector<Scalar> rho)
      : actor_(std::move(actor)), actee_(std::move(actee)),
        lambda_(std::move(lambda)), rho_(std::move(rho)) {
    if (actor_.field() != actee_.field())
      throw UsageError("LeibnizAction: field mismatch");
    const std::size_t nl = actor_.dim(), nm = actee_.dim();
    if (lambda_.size() != nl * nm * nm)
      throw UsageError("LeibnizAction: lambda tensor shape");
    if (rho_.size() != nm * nl * nm)
      throw UsageError("LeibnizAction: rho tensor shape");
  }

  /// Both tensors zero.
  static LeibnizAction trivial(const LeibnizAlgebra& actor,
                               const LeibnizAlgebra& actee) {
    const FieldSpec& f = actor.field();
    const std::size_t nl = actor.dim(), nm = actee.dim();
    return LeibnizAction(actor, actee, std::vector<Scalar>(nl * nm * nm, f.zero()),
                         std::vector<Scalar>(nm * nl * nm, f.zero()));
  }

  /// The self-action x.m = [x,m], m.x = [m,x] of an algebra on itself.
  static LeibnizAction by_bracket(const LeibnizAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<Scalar> lambda(n * n * n), rho(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          lambda[(i * n + j) * n + k] = a.c(i, j, k);
          rho[(i * n + j) * n + k] = a.c(i, j, k);
        }
    return LeibnizAction(a, a, std::move(lambda), std::move(rho));
  }

  const LeibnizAlgebra& actor() const { return actor_; }
  const LeibnizAlgebra& actee() const { return actee_; }
  const std::vector<Scalar>& lambda() const { return lambda_; }
  const std::vector<Scalar>& rho() const { return rho_; }

  const Scalar& lambda_c(std::size_t i, std::size_t j, std::size_t k) const {
    return lambda_[(i * actee_.dim() + j) * actee_.dim() + k];
  }
  const Scalar& rho_c(std::size_t i, std::size_t j, std::size_t k) const {
    return rho_[(i * actor_.dim() + j) * actee_.dim() + k];
  }

  /// x.m for x in the actor, m in the actee.
  Vec left(const Vec& x, const Vec& m) const {
    const FieldSpec& f = actor_.field();
    const std::size_t nl = actor_.dim(), nm = actee_.dim();
    if (x.size() != nl || m.size() != nm) throw UsageError("action: length mismatch");
    Vec out = zero_vec(f, nm);
    for (std::size_t i = 0; i < nl; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < nm; ++j) {
        if (m[j].is_zero()) continue;
        const Scalar xm = f.mul(x[i], m[j]);
        for (std::size_t k = 0; k < nm; ++k)
          out[k] = f.add(out[k], f.mul(xm, lambda_c(i, j, k)));
      }
    }
    return out;
  }

  /// m.x for m in the actee, x in the actor.
  Vec right(const Vec& m, const Vec& x) const {
    const FieldSpec& f = actor_.field();
    const std::size_t nl = actor_.dim(), nm = actee_.dim();
    if (x.size() != nl || m.size() != nm) throw UsageError("action: length mismatch");
    Vec out = zero_vec(f, nm);
    for (std::size_t i = 0; i < nm; ++i) {
      if (m[i].is_zero()) continue;
      for (std::size_t j = 0; j < nl; ++j) {
        if (x[j].is_zero()) continue;
        const Scalar mx = f.mul(m[i], x[j]);
        for (std::size_t k = 0; k < nm; ++k)
          out[k] = f.add(out[k], f.mul(mx, rho_c(i, j, k)));
      }
    }
    return out;
  }

  bool operator==(const LeibnizAction& o) const {
    return actor_ == o.actor_ && actee_ == o.actee_ && lambda_ == o.lambda_ &&
           rho_ == o.rho_;
  }

 private:
  LeibnizAlgebra actor_;
  LeibnizAlgebra actee_;
  std::vector<Scalar> lambda_;
  std::vector<Scalar> rho_;
};

/// The six action axioms, each evaluated on all basis triples.
inline ActionReport validate_action(const LeibnizAction& a) {
  const LeibnizAlgebra& l = a.actor();
  const LeibnizAlgebra& m = a.actee();
  const FieldSpec& f = l.field();
  ActionReport rep;
  rep.axiom.fill(true);
  const auto bl = [&](std::size_t i) { return unit_vec(f, l.dim(), i); };
  const auto bm = [&](std::size_t i) { return unit_vec(f, m.dim(), i); };
  for (std::size_t xi = 0; xi < l.dim(); ++xi) {
    const Vec x = bl(xi);
    for (std::size_t mi = 0; mi < m.dim(); ++mi) {
      const Vec mm = bm(mi);
      for (std::size_t ni = 0; ni < m.dim(); ++ni) {
        const Vec nn = bm(ni);
        // (i)   x.[m,n] = [x.m, n] - [x.n, m]
        if (a.left(x, m.bracket(mm, nn)) !=
            sub(f, m.bracket(a.left(x, mm), nn), m.bracket(a.left(x, nn), mm)))
          rep.axiom[0] = false;
        // (ii)  [m, x.n] = [m.x, n] - [m,n].x
        if (m.bracket(mm, a.left(x, nn)) !=
            sub(f, m.bracket(a.right(mm, x), nn), a.right(m.bracket(mm, nn), x)))
          rep.axiom[1] = false;
        // (iii) [m, n.x] = [m,n].x - [m.x, n]
        if (m.bracket(mm, a.right(nn, x)) !=
            sub(f, a.right(m.bracket(mm, nn), x), m.bracket(a.right(mm, x), nn)))
          rep.axiom[2] = false;
      }
      for (std::size_t yi = 0; yi < l.dim(); ++yi) {
        const Vec y = bl(yi);
        // (iv)  x.(y.m) = [x,y].m - (x.m).y
        if (a.left(x, a.left(y, mm)) !=
            sub(f, a.left(l.bracket(x, y), mm), a.right(a.left(x, mm), y)))
          rep.axiom[3] = false;
        // (v)   x.(m.y) = (x.m).y - [x,y].m
        if (a.left(x, a.right(mm, y)) !=
            sub(f, a.right(a.left(x, mm), y), a.left(l.bracket(x, y), mm)))
          rep.axiom[4] = false;
        // (vi)  m.[x,y] = (m.x).y - (m.y).x
        if (a.right(mm, l.bracket(x, y)) !=
            sub(f, a.right(a.right(mm, x), y), a.right(a.right(mm, y), x)))
          rep.axiom[5] = false;
      }
    }
  }
  return rep;
}

/// A short exact sequence 0 -> L' -> E -> L -> 0 with a section s of p.
struct SplitExtension {
  LeibnizAlgebra kernel_alg;  // L'
  LeibnizAlgebra middle_alg;  // E
  LeibnizAlgebra base_alg;    // L
  LinearMorphism i;           // L' -> E
  LinearMorphism p;           // E  -> L
  LinearMorphism s;           // L  -> E
};

inline bool validate_split_extension(const SplitExtension& e) {
  const std::size_t nm = e.kernel_alg.dim(), ne = e.middle_alg.dim(),
                    nl = e.base_alg.dim();
  if (e.i.matrix.rows() != ne || e.i.matrix.cols() != nm) return false;
  if (e.p.matrix.rows() != nl || e.p.matrix.cols() != ne) return false;
  if (e.s.matrix.rows() != ne || e.s.matrix.cols() != nl) return false;
  if (rank(e.i.matrix) != nm) return false;                 // i injective
  if (rank(e.p.matrix) != nl) return false;                 // p surjective
  if (!(e.p.matrix.mul(e.s.matrix) == Matrix::identity(e.p.matrix.field(), nl)))
    return false;                                           // ps = 1
  const auto [ker_p, img_p] = kernel_image(e.p.matrix);
  (void)img_p;
  const auto [ker_i, img_i] = kernel_image(e.i.matrix);
  (void)ker_i;
  if (!(ker_p == img_i)) return false;                      // exactness
  return check_morphism(e.i) && check_morphism(e.p) && check_morphism(e.s);
}

/// x.m = [s(x), m] and m.x = [m, s(x)], with values pulled back through
/// i onto ker p. A bracket value outside im i would contradict exactness
/// and is reported as an internal failure.
inline LeibnizAction derived_action(const SplitExtension& e) {
  if (!validate_split_extension(e))
    throw UsageError("derived_action: extension is not a valid split extension");
  const FieldSpec& f = e.middle_alg.field();
  const std::size_t nm = e.kernel_alg.dim(), nl = e.base_alg.dim();
  std::vector<Scalar> lambda(nl * nm * nm, f.zero());
  std::vector<Scalar> rho(nm * nl * nm, f.zero());
  const auto pull_back = [&](const Vec& v) {
    const auto u = solve(e.i.matrix, v);
    if (!u) throw InternalError("derived_action: bracket escapes im i");
    return *u;
  };
  for (std::size_t x = 0; x < nl; ++x) {
    const Vec sx = e.s.apply(unit_vec(f, nl, x));
    for (std::size_t m = 0; m < nm; ++m) {
      const Vec im = e.i.apply(unit_vec(f, nm, m));
      const Vec l = pull_back(e.middle_alg.bracket(sx, im));
      const Vec r = pull_back(e.middle_alg.bracket(im, sx));
      for (std::size_t k = 0; k < nm; ++k) {
        lambda[(x * nm + m) * nm + k] = l[k];
        rho[(m * nl + x) * nm + k] = r[k];
      }
    }
  }
  return LeibnizAction(e.base_alg, e.kernel_alg, std::move(lambda), std::move(rho));
}

/// The semidirect product L' x| L with bracket
/// [(m,x),(n,y)] = ([m,n] + m.y + x.n, [x,y]), together with its
/// canonical split extension i(m) = (m,0), p(m,x) = x, s(x) = (0,x).
/// Basis order: actee coordinates first, then actor coordinates.
inline std::pair<LeibnizAlgebra, SplitExtension> semidirect(const LeibnizAction& act) {
  if (!validate_action(act).all())
    throw UsageError("semidirect: action fails the Leibniz action axioms");
  const FieldSpec& f = act.actor().field();
  const std::size_t nm = act.actee().dim(), nl = act.actor().dim();
  const std::size_t n = nm + nl;
  std::vector<Scalar> c(n * n * n, f.zero());
  const auto idx = [n](std::size_t i, std::size_t j, std::size_t k) {
    return (i * n + j) * n + k;
  };
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < nm; ++j)
      for (std::size_t k = 0; k < nm; ++k)
        c[idx(i, j, k)] = act.actee().c(i, j, k);
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < nl; ++j)
      for (std::size_t k = 0; k < nm; ++k)
        c[idx(i, nm + j, k)] = act.rho_c(i, j, k);   // [(m,0),(0,y)] = (m.y, 0)
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nm; ++j)
      for (std::size_t k = 0; k < nm; ++k)
        c[idx(nm + i, j, k)] = act.lambda_c(i, j, k);  // [(0,x),(n,0)] = (x.n, 0)
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nl; ++j)
      for (std::size_t k = 0; k < nl; ++k)
        c[idx(nm + i, nm + j, nm + k)] = act.actor().c(i, j, k);
  LeibnizAlgebra alg = LeibnizAlgebra::candidate(f, n, std::move(c));
  if (!alg.validate().leibniz_ok)
    throw InternalError("semidirect: product fails the Leibniz identity");

  Matrix mi(f, n, nm), mp(f, nl, n), ms(f, n, nl);
  for (std::size_t k = 0; k < nm; ++k) mi.at(k, k) = f.one();
  for (std::size_t k = 0; k < nl; ++k) mp.at(k, nm + k) = f.one();
  for (std::size_t k = 0; k < nl; ++k) ms.at(nm + k, k) = f.one();
  SplitExtension ext{act.actee(), alg, act.actor(),
                     LinearMorphism(act.actee(), alg, std::move(mi)),
                     LinearMorphism(alg, act.actor(), std::move(mp)),
                     LinearMorphism(act.actor(), alg, std::move(ms))};
  if (!validate_split_extension(ext))
    throw InternalError("semidirect: canonical extension fails validation");
  return {std::move(alg), std::move(ext)};
}

struct ExtensionIso {
  LeibnizAlgebra semidirect_alg;  // L' x| L of the derived action
  LinearMorphism to_middle;       // theta : L' x| L -> E, (m,x) |-> i(m)+s(x)
  LinearMorphism from_middle;     // theta^{-1} : E -> L' x| L
};

/// The theta isomorphism between a valid split extension's middle
/// algebra and the semidirect product of its derived action.
inline ExtensionIso extension_iso(const SplitExtension& e) {
  const LeibnizAction da = derived_action(e);  // validates e
  auto [sd, canon] = semidirect(da);
  (void)canon;
  const FieldSpec& f = e.middle_alg.field();
  const std::size_t nm = e.kernel_alg.dim(), nl = e.base_alg.dim(),
                    ne = e.middle_alg.dim();
  const Matrix theta = e.i.matrix.hstack(e.s.matrix);
  Matrix theta_inv(f, nm + nl, ne);
  for (std::size_t col = 0; col < ne; ++col) {
    const Vec ec = unit_vec(f, ne, col);
    const Vec pe = e.p.apply(ec);
    const Vec v = sub(f, ec, e.s.apply(pe));
    const auto u = solve(e.i.matrix, v);
    if (!u) throw InternalError("extension_iso: e - sp(e) escapes im i");
    for (std::size_t r = 0; r < nm; ++r) theta_inv.at(r, col) = (*u)[r];
    for (std::size_t r = 0; r < nl; ++r) theta_inv.at(nm + r, col) = pe[r];
  }
  return ExtensionIso{sd, LinearMorphism(sd, e.middle_alg, theta),
                      LinearMorphism(e.middle_alg, sd, theta_inv)};
}

}  // namespace leibniz

#endif
