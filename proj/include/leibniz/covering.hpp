#ifndef LEIBNIZ_COVERING_HPP
#define LEIBNIZ_COVERING_HPP

#include <utility>
#include <vector>

#include "leibniz/groupoid.hpp"

namespace leibniz {

/// p is a covering iff the combined map g~ |-> (p(g~), d0(g~)) is a
/// bijection onto the pullback {(g, x~) : d0(g) = p0(x~)}. The image is
/// contained in the pullback whenever p commutes with d0, so the check
/// reduces to injectivity plus a dimension count.
inline bool check_covering(const GroupoidMorphism& p) {
  if (!validate_gpd_morphism(p)) return false;
  const Matrix stacked = p.on_arrows.vstack(p.source.d0);
  const Subspace pb = pullback_basis(p.target.d0, p.on_objects);
  return rank(stacked) == p.source.arrows.dim() &&
         pb.dim() == p.source.arrows.dim();
}

/// The lifting function S_p: the unique arrow g~ of the source with
/// p(g~) = g and d0(g~) = x~.
inline Vec lift(const GroupoidMorphism& p, const Vec& g, const Vec& x_tilde) {
  if (!check_covering(p)) throw UsageError("lift: p is not a covering morphism");
  if (!(p.target.d0.apply(g) == p.on_objects.apply(x_tilde)))
    throw UsageError("lift: base points do not match (d0(g) != p0(x~))");
  const auto sol = solve(p.on_arrows.vstack(p.source.d0), concat(g, x_tilde));
  if (!sol) throw InternalError("lift: no preimage despite covering check");
  return *sol;
}

struct GpdActionReport {
  bool a1 = false;          // omega(g.l) = d1(g)
  bool a2 = false;          // eps(omega(l)).l = l
  bool a3 = false;          // (h o g).l = h.(g.l)
  bool morphism_ok = false; // omega and the action map are Leibniz morphisms
  bool all() const { return a1 && a2 && a3 && morphism_ok; }
};

/// An action of an internal groupoid on a Leibniz algebra: a moment map
/// omega: L -> Ob(G) and a linear action map on the pullback
/// {(g, l) : d0(g) = omega(l)}, stored as a matrix over the canonical
/// pullback basis.
struct GroupoidAction {
  InternalGroupoid g;
  LeibnizAlgebra l;
  Matrix omega;       // L -> Ob(G)
  Subspace pullback;  // canonical basis of {(g,l) : d0 g = omega l} in G + L
  Matrix act;         // dim L x pullback.dim(), columns over the pullback basis

  GroupoidAction(InternalGroupoid gpd, LeibnizAlgebra alg, Matrix moment, Matrix action)
      : g(std::move(gpd)), l(std::move(alg)), omega(std::move(moment)),
        pullback(pullback_basis(g.d0, omega)), act(std::move(action)) {
    if (omega.rows() != g.objects.dim() || omega.cols() != l.dim())
      throw UsageError("GroupoidAction: omega shape mismatch");
    if (act.rows() != l.dim() || act.cols() != pullback.dim())
      throw UsageError("GroupoidAction: action matrix shape mismatch");
  }

  /// g . l for a pair in the pullback.
  Vec apply(const Vec& arrow, const Vec& elem) const {
    if (!(g.d0.apply(arrow) == omega.apply(elem)))
      throw UsageError("GroupoidAction::apply: (g, l) is not in the pullback");
    return act.apply(pullback.coordinates(concat(arrow, elem)));
  }

  /// The canonical action of G on its own objects: omega = id,
  /// g . x = d1(g).
  static GroupoidAction canonical(const InternalGroupoid& gpd) {
    const FieldSpec& f = gpd.arrows.field();
    const Matrix omega = Matrix::identity(f, gpd.objects.dim());
    const Subspace pb = pullback_basis(gpd.d0, omega);
    Matrix act(f, gpd.objects.dim(), pb.dim());
    const std::size_t n = gpd.arrows.dim();
    for (std::size_t c = 0; c < pb.dim(); ++c) {
      const Vec& w = pb.basis()[c];
      const Vec arrow(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
      const Vec v = gpd.d1.apply(arrow);
      for (std::size_t r = 0; r < v.size(); ++r) act.at(r, c) = v[r];
    }
    return GroupoidAction(gpd, gpd.objects, omega, std::move(act));
  }
};

inline GpdActionReport validate_gpd_action(const GroupoidAction& a) {
  GpdActionReport rep;
  const FieldSpec& f = a.g.arrows.field();
  const std::size_t n = a.g.arrows.dim();
  const auto split = [&](const Vec& w) {
    return std::pair<Vec, Vec>(
        Vec(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n)),
        Vec(w.begin() + static_cast<std::ptrdiff_t>(n), w.end()));
  };

  rep.morphism_ok =
      check_morphism(LinearMorphism(a.l, a.g.objects, a.omega));
  if (rep.morphism_ok) {
    // bracket compatibility of the action map on the pullback subalgebra
    const LeibnizAlgebra prod = direct_product(a.g.arrows, a.l);
    for (const Vec& w : a.pullback.basis()) {
      for (const Vec& w2 : a.pullback.basis()) {
        const Vec bw = prod.bracket(w, w2);
        if (!a.pullback.contains(bw)) {
          rep.morphism_ok = false;
          break;
        }
        const auto [g1, l1v] = split(w);
        const auto [g2, l2v] = split(w2);
        const auto [bg, blv] = split(bw);
        if (a.apply(bg, blv) != a.l.bracket(a.apply(g1, l1v), a.apply(g2, l2v))) {
          rep.morphism_ok = false;
          break;
        }
      }
      if (!rep.morphism_ok) break;
    }
  }

  // (A1) omega(g.l) = d1(g) on the pullback basis
  rep.a1 = true;
  for (const Vec& w : a.pullback.basis()) {
    const auto [arrow, elem] = split(w);
    if (a.omega.apply(a.apply(arrow, elem)) != a.g.d1.apply(arrow)) rep.a1 = false;
  }

  // (A2) eps(omega(l)) . l = l on a basis of L
  rep.a2 = true;
  for (std::size_t i = 0; i < a.l.dim(); ++i) {
    const Vec e = unit_vec(f, a.l.dim(), i);
    if (a.apply(a.g.eps.apply(a.omega.apply(e)), e) != e) rep.a2 = false;
  }

  // (A3) (h o g) . l = h . (g . l) on a basis of the double pullback
  // {(h, g, l) : d0 g = omega l, d0 h = d1 g}
  rep.a3 = rep.a1;  // h . (g . l) needs omega(g . l) = d1(g) to be defined
  if (rep.a3) {
    const std::size_t nl = a.l.dim();
    Matrix cond(f, 2 * a.g.objects.dim(), 2 * n + nl);
    for (std::size_t r = 0; r < a.g.objects.dim(); ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        cond.at(r, n + c) = a.g.d0.at(r, c);             // d0 g
        cond.at(a.g.objects.dim() + r, c) = a.g.d0.at(r, c);      // d0 h
        cond.at(a.g.objects.dim() + r, n + c) = f.neg(a.g.d1.at(r, c));  // -d1 g
      }
      for (std::size_t c = 0; c < nl; ++c)
        cond.at(r, 2 * n + c) = f.neg(a.omega.at(r, c)); // -omega l
    }
    const Subspace triples = kernel_image(cond).first;
    for (const Vec& t : triples.basis()) {
      const Vec h(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(n));
      const Vec arrow(t.begin() + static_cast<std::ptrdiff_t>(n),
                      t.begin() + static_cast<std::ptrdiff_t>(2 * n));
      const Vec elem(t.begin() + static_cast<std::ptrdiff_t>(2 * n), t.end());
      if (a.apply(compose(a.g, h, arrow), elem) !=
          a.apply(h, a.apply(arrow, elem))) {
        rep.a3 = false;
        break;
      }
    }
  }
  return rep;
}

/// The action groupoid G |x L on the pullback subalgebra, with
/// d0(g,l) = l, d1(g,l) = g.l, eps(l) = (eps_G(omega(l)), l), plus the
/// first-projection covering q onto G.
inline std::pair<InternalGroupoid, GroupoidMorphism>
action_groupoid(const GroupoidAction& a) {
  if (!validate_gpd_action(a).all())
    throw UsageError("action_groupoid: action fails validation");
  const FieldSpec& f = a.g.arrows.field();
  const std::size_t n = a.g.arrows.dim(), nl = a.l.dim();
  const std::size_t nb = a.pullback.dim();

  // structure constants of the pullback subalgebra in its canonical basis
  const LeibnizAlgebra prod = direct_product(a.g.arrows, a.l);
  std::vector<Scalar> c(nb * nb * nb, f.zero());
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const Vec v = a.pullback.coordinates(
          prod.bracket(a.pullback.basis()[i], a.pullback.basis()[j]));
      for (std::size_t k = 0; k < nb; ++k) c[(i * nb + j) * nb + k] = v[k];
    }
  LeibnizAlgebra arrows = LeibnizAlgebra::candidate(f, nb, std::move(c));
  if (!arrows.validate().leibniz_ok)
    throw InternalError("action_groupoid: pullback algebra fails validation");

  Matrix d0(f, nl, nb), d1(f, nl, nb), eps(f, nb, nl), q_arrows(f, n, nb);
  for (std::size_t col = 0; col < nb; ++col) {
    const Vec& w = a.pullback.basis()[col];
    for (std::size_t r = 0; r < n; ++r) q_arrows.at(r, col) = w[r];
    for (std::size_t r = 0; r < nl; ++r) d0.at(r, col) = w[n + r];
  }
  for (std::size_t col = 0; col < nb; ++col)
    for (std::size_t r = 0; r < nl; ++r) d1.at(r, col) = a.act.at(r, col);
  for (std::size_t col = 0; col < nl; ++col) {
    const Vec e = unit_vec(f, nl, col);
    const Vec coords = a.pullback.coordinates(
        concat(a.g.eps.apply(a.omega.apply(e)), e));
    for (std::size_t r = 0; r < nb; ++r) eps.at(r, col) = coords[r];
  }

  InternalGroupoid ag(arrows, a.l, std::move(d0), std::move(d1), std::move(eps));
  if (!validate_groupoid(ag).all())
    throw InternalError("action_groupoid: groupoid fails validation");
  GroupoidMorphism q(ag, a.g, std::move(q_arrows), a.omega);
  if (!check_covering(q))
    throw InternalError("action_groupoid: projection is not a covering");
  return {std::move(ag), std::move(q)};
}

/// The linear inverse of (p, d0): G~ -> G + Ob(G~), as a matrix on the
/// ambient product space; it agrees with the lifting function S_p on the
/// pullback subspace.
inline Matrix inverse_of_covering_map(const GroupoidMorphism& p) {
  const FieldSpec& f = p.source.arrows.field();
  const Matrix stacked = p.on_arrows.vstack(p.source.d0);
  const Subspace pb = pullback_basis(p.target.d0, p.on_objects);
  // (p, d0) written in pullback coordinates
  Matrix in_coords(f, pb.dim(), p.source.arrows.dim());
  for (std::size_t col = 0; col < p.source.arrows.dim(); ++col) {
    const Vec coords = pb.coordinates(stacked.col(col));
    for (std::size_t r = 0; r < coords.size(); ++r) in_coords.at(r, col) = coords[r];
  }
  const Matrix inv = inverse(in_coords);
  // For an echelon basis, the coordinates of a pullback vector are just
  // its pivot components.
  Matrix coord_map(f, pb.dim(), stacked.rows());
  for (std::size_t i = 0; i < pb.dim(); ++i) {
    std::size_t piv = 0;
    while (piv < stacked.rows() && pb.basis()[i][piv].is_zero()) ++piv;
    coord_map.at(i, piv) = f.one();
  }
  return inv.mul(coord_map);
}

/// The action of the target groupoid on the source objects induced by a
/// covering: g . x~ = d1(lift(g, x~)).
inline GroupoidAction covering_to_action(const GroupoidMorphism& p) {
  if (!check_covering(p))
    throw UsageError("covering_to_action: p is not a covering morphism");
  const FieldSpec& f = p.target.arrows.field();
  const std::size_t n = p.target.arrows.dim();
  const Matrix lifter = inverse_of_covering_map(p);
  const Subspace pb = pullback_basis(p.target.d0, p.on_objects);
  Matrix act(f, p.source.objects.dim(), pb.dim());
  for (std::size_t col = 0; col < pb.dim(); ++col) {
    const Vec& w = pb.basis()[col];
    const Vec lifted = lifter.apply(w);
    const Vec v = p.source.d1.apply(lifted);
    for (std::size_t r = 0; r < v.size(); ++r) act.at(r, col) = v[r];
  }
  return GroupoidAction(p.target, p.source.objects, p.on_objects, std::move(act));
}

/// The isomorphism G~ = G |x Ob(G~) over G: arrows map
/// g~ |-> (p(g~), d0(g~)) expressed in the action-groupoid basis,
/// identity on objects.
inline GroupoidMorphism roundtrip_cov_action(const GroupoidMorphism& p) {
  const GroupoidAction a = covering_to_action(p);  // validates p
  auto [ag, q] = action_groupoid(a);
  (void)q;
  const FieldSpec& f = p.source.arrows.field();
  const std::size_t n_src = p.source.arrows.dim();
  Matrix on_arrows(f, ag.arrows.dim(), n_src);
  for (std::size_t col = 0; col < n_src; ++col) {
    const Vec e = unit_vec(f, n_src, col);
    const Vec coords = a.pullback.coordinates(
        concat(p.on_arrows.apply(e), p.source.d0.apply(e)));
    for (std::size_t r = 0; r < coords.size(); ++r) on_arrows.at(r, col) = coords[r];
  }
  return GroupoidMorphism(p.source, ag, std::move(on_arrows),
                          Matrix::identity(f, p.source.objects.dim()));
}

/// A crossed module morphism whose top component is an isomorphism.
struct CoveringXModMorphism {
  XModMorphism morphism;
};

inline bool check_covering_xmod(const XModMorphism& m) {
  if (!validate_xmod_morphism(m))
    throw UsageError("check_covering_xmod: not a valid crossed module morphism");
  return is_bijective(m.f1.matrix);
}

/// Restriction of a groupoid covering to the kernel crossed modules:
/// (p restricted to ker d0~, p0) : eta(G~) -> eta(G).
inline CoveringXModMorphism gpd_cov_to_xmod_cov(const GroupoidMorphism& p) {
  if (!check_covering(p))
    throw UsageError("gpd_cov_to_xmod_cov: p is not a covering morphism");
  const CrossedModule src = eta(p.source);
  const CrossedModule tgt = eta(p.target);
  const Subspace ker_src = kernel_image(p.source.d0).first;
  const Subspace ker_tgt = kernel_image(p.target.d0).first;
  const FieldSpec& f = p.source.arrows.field();
  Matrix f1(f, ker_tgt.dim(), ker_src.dim());
  for (std::size_t col = 0; col < ker_src.dim(); ++col) {
    const Vec v = ker_tgt.coordinates(p.on_arrows.apply(ker_src.basis()[col]));
    for (std::size_t r = 0; r < v.size(); ++r) f1.at(r, col) = v[r];
  }
  XModMorphism m{src, tgt, LinearMorphism(src.l1, tgt.l1, std::move(f1)),
                 LinearMorphism(src.l0, tgt.l0, p.on_objects)};
  if (!validate_xmod_morphism(m) || !check_covering_xmod(m))
    throw InternalError("gpd_cov_to_xmod_cov: restriction is not a covering");
  return CoveringXModMorphism{std::move(m)};
}

/// The groupoid covering delta(source) -> delta(target) built as the
/// block product p1 x p0 on the semidirect coordinates.
inline GroupoidMorphism xmod_cov_to_gpd_cov(const CoveringXModMorphism& c) {
  const XModMorphism& m = c.morphism;
  if (!check_covering_xmod(m))
    throw UsageError("xmod_cov_to_gpd_cov: input is not a covering of crossed modules");
  const InternalGroupoid src = delta(m.source);
  const InternalGroupoid tgt = delta(m.target);
  const FieldSpec& f = m.source.l1.field();
  const std::size_t sn1 = m.source.l1.dim(), sn0 = m.source.l0.dim();
  const std::size_t tn1 = m.target.l1.dim(), tn0 = m.target.l0.dim();
  Matrix on_arrows(f, tn1 + tn0, sn1 + sn0);
  for (std::size_t r = 0; r < tn1; ++r)
    for (std::size_t col = 0; col < sn1; ++col)
      on_arrows.at(r, col) = m.f1.matrix.at(r, col);
  for (std::size_t r = 0; r < tn0; ++r)
    for (std::size_t col = 0; col < sn0; ++col)
      on_arrows.at(tn1 + r, sn1 + col) = m.f0.matrix.at(r, col);
  GroupoidMorphism p(src, tgt, std::move(on_arrows), m.f0.matrix);
  if (!check_covering(p))
    throw InternalError("xmod_cov_to_gpd_cov: product map is not a covering");
  return p;
}

struct CoveringClass {
  bool transitive = false;
  bool universal = false;
};

/// Transitive when both ends are transitive groupoids; universal when in
/// addition the source has at most one arrow between any two objects
/// (trivial ker d0 /\ ker d1).
inline CoveringClass covering_class(const GroupoidMorphism& p) {
  if (!check_covering(p))
    throw UsageError("covering_class: p is not a covering morphism");
  const auto transitive_kind = [](Transitivity t) {
    return t == Transitivity::transitive || t == Transitivity::one_transitive;
  };
  CoveringClass cls;
  cls.transitive =
      transitive_kind(is_transitive(p.source)) && transitive_kind(is_transitive(p.target));
  if (cls.transitive) {
    const Subspace k0 = kernel_image(p.source.d0).first;
    const Subspace k1 = kernel_image(p.source.d1).first;
    cls.universal = k0.intersect(k1).dim() == 0;
  }
  return cls;
}

}  // namespace leibniz

#endif
