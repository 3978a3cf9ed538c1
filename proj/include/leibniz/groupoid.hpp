#ifndef LEIBNIZ_GROUPOID_HPP
#define LEIBNIZ_GROUPOID_HPP

#include <utility>
#include <vector>

#include "leibniz/xmod.hpp"

namespace leibniz {

struct GroupoidReport {
  bool maps_ok = false;            // d0, d1, eps are Leibniz morphisms
  bool sections_ok = false;        // d0 eps = d1 eps = id
  bool kernel_bracket_ok = false;  // [ker d0, ker d1] = [ker d1, ker d0] = 0
  bool interchange_ok = false;     // derived composition is a morphism on the pullback
  bool all() const {
    return maps_ok && sections_ok && kernel_bracket_ok && interchange_ok;
  }
};

/// An internal groupoid in the category of Leibniz algebras, stored as
/// the bundle (G, Ob(G), d0, d1, eps). Composition and inverses are
/// never stored: they are forced by the structure
/// (h o g = h - eps d0(h) + g), so only the bundle is data.
struct InternalGroupoid {
  LeibnizAlgebra arrows;   // G
  LeibnizAlgebra objects;  // Ob(G)
  Matrix d0;               // G -> Ob
  Matrix d1;               // G -> Ob
  Matrix eps;              // Ob -> G

  InternalGroupoid(LeibnizAlgebra g, LeibnizAlgebra ob, Matrix source_map,
                   Matrix target_map, Matrix object_inclusion)
      : arrows(std::move(g)), objects(std::move(ob)), d0(std::move(source_map)),
        d1(std::move(target_map)), eps(std::move(object_inclusion)) {
    if (arrows.field() != objects.field())
      throw UsageError("InternalGroupoid: field mismatch");
    if (d0.rows() != objects.dim() || d0.cols() != arrows.dim() ||
        d1.rows() != objects.dim() || d1.cols() != arrows.dim() ||
        eps.rows() != arrows.dim() || eps.cols() != objects.dim())
      throw UsageError("InternalGroupoid: structural map shape mismatch");
  }

  /// An abelian algebra as a one-object groupoid: Ob trivial, all maps zero.
  static InternalGroupoid one_object(const LeibnizAlgebra& l) {
    const FieldSpec& f = l.field();
    LeibnizAlgebra ob = LeibnizAlgebra::abelian(f, 0);
    return InternalGroupoid(l, ob, Matrix(f, 0, l.dim()), Matrix(f, 0, l.dim()),
                            Matrix(f, l.dim(), 0));
  }

  /// The pair groupoid L x L over L: d0(l,l') = l, d1(l,l') = l',
  /// eps(l) = (l,l).
  static InternalGroupoid pair_groupoid(const LeibnizAlgebra& l) {
    const FieldSpec& f = l.field();
    const std::size_t n = l.dim();
    LeibnizAlgebra arrows = direct_product(l, l);
    Matrix d0(f, n, 2 * n), d1(f, n, 2 * n), eps(f, 2 * n, n);
    for (std::size_t i = 0; i < n; ++i) {
      d0.at(i, i) = f.one();
      d1.at(i, n + i) = f.one();
      eps.at(i, i) = f.one();
      eps.at(n + i, i) = f.one();
    }
    return InternalGroupoid(arrows, l, std::move(d0), std::move(d1), std::move(eps));
  }
};

/// The groupoid composition h o g = h - eps d0(h) + k for a composable
/// pair (d1(k) = d0(h)).
inline Vec compose(const InternalGroupoid& g, const Vec& h, const Vec& k) {
  if (!(g.d1.apply(k) == g.d0.apply(h)))
    throw UsageError("compose: pair is not composable (d1(k) != d0(h))");
  const FieldSpec& f = g.arrows.field();
  return add(f, sub(f, h, g.eps.apply(g.d0.apply(h))), k);
}

/// g^{-1} = eps d0(g) - g + eps d1(g).
inline Vec inverse(const InternalGroupoid& g, const Vec& h) {
  const FieldSpec& f = g.arrows.field();
  return add(f, sub(f, g.eps.apply(g.d0.apply(h)), h), g.eps.apply(g.d1.apply(h)));
}

inline GroupoidReport validate_groupoid(const InternalGroupoid& g) {
  GroupoidReport rep;
  const FieldSpec& f = g.arrows.field();
  rep.maps_ok =
      check_morphism(LinearMorphism(g.arrows, g.objects, g.d0)) &&
      check_morphism(LinearMorphism(g.arrows, g.objects, g.d1)) &&
      check_morphism(LinearMorphism(g.objects, g.arrows, g.eps));
  const Matrix id_ob = Matrix::identity(f, g.objects.dim());
  rep.sections_ok = g.d0.mul(g.eps) == id_ob && g.d1.mul(g.eps) == id_ob;

  const Subspace ker_d0 = kernel_image(g.d0).first;
  const Subspace ker_d1 = kernel_image(g.d1).first;
  rep.kernel_bracket_ok = true;
  for (const Vec& u : ker_d0.basis())
    for (const Vec& v : ker_d1.basis())
      if (!is_zero_vec(g.arrows.bracket(u, v)) ||
          !is_zero_vec(g.arrows.bracket(v, u)))
        rep.kernel_bracket_ok = false;

  // Composition as a linear map on the pullback {(h,k) : d0 h = d1 k};
  // the bracket of two pullback elements is taken componentwise.
  rep.interchange_ok = rep.maps_ok && rep.sections_ok;
  if (rep.interchange_ok) {
    const Subspace pb = pullback_basis(g.d0, g.d1);
    const std::size_t n = g.arrows.dim();
    const LeibnizAlgebra prod = direct_product(g.arrows, g.arrows);
    const auto comp_of = [&](const Vec& w) {
      const Vec h(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
      const Vec k(w.begin() + static_cast<std::ptrdiff_t>(n), w.end());
      return add(f, sub(f, h, g.eps.apply(g.d0.apply(h))), k);
    };
    for (const Vec& w : pb.basis()) {
      for (const Vec& w2 : pb.basis()) {
        const Vec bw = prod.bracket(w, w2);
        if (!pb.contains(bw)) {
          rep.interchange_ok = false;
          break;
        }
        if (comp_of(bw) != g.arrows.bracket(comp_of(w), comp_of(w2))) {
          rep.interchange_ok = false;
          break;
        }
      }
      if (!rep.interchange_ok) break;
    }
  }
  return rep;
}

/// St_G x = eps(x) + ker d0, an affine subset of the arrow algebra.
struct Star {
  Vec point;           // eps(x)
  Subspace directions; // ker d0
};

inline Star star(const InternalGroupoid& g, const Vec& x) {
  if (x.size() != g.objects.dim()) throw UsageError("star: object length mismatch");
  return Star{g.eps.apply(x), kernel_image(g.d0).first};
}

enum class Transitivity {
  one_transitive,
  transitive,
  totally_intransitive,
  simply_transitive,
  none_of_these,
};

inline const char* to_string(Transitivity t) {
  switch (t) {
    case Transitivity::one_transitive: return "one_transitive";
    case Transitivity::transitive: return "transitive";
    case Transitivity::totally_intransitive: return "totally_intransitive";
    case Transitivity::simply_transitive: return "simply_transitive";
    default: return "none_of_these";
  }
}

/// Classification through the joint endpoint map (d0, d1): surjectivity
/// gives transitivity, a trivial ker d0 /\ ker d1 bounds every G(x, y)
/// by one element, and image inside the diagonal (d0 = d1) means no
/// arrows between distinct objects.
inline Transitivity is_transitive(const InternalGroupoid& g) {
  const std::size_t n_ob = g.objects.dim();
  const bool surjective = rank(g.d0.vstack(g.d1)) == 2 * n_ob;
  const Subspace ker_d0 = kernel_image(g.d0).first;
  const Subspace ker_d1 = kernel_image(g.d1).first;
  const bool single_fibers = ker_d0.intersect(ker_d1).dim() == 0;
  const bool diagonal = g.d0 == g.d1;
  if (surjective && single_fibers) return Transitivity::one_transitive;
  if (surjective) return Transitivity::transitive;
  if (diagonal && n_ob > 0) return Transitivity::totally_intransitive;
  if (single_fibers) return Transitivity::simply_transitive;
  return Transitivity::none_of_these;
}

/// The crossed module (ker d0, Ob(G), d1 restricted) with Ob(G) acting
/// through eps: x.g = [eps(x), g], g.x = [g, eps(x)].
inline CrossedModule eta(const InternalGroupoid& g) {
  if (!validate_groupoid(g).all())
    throw UsageError("eta: groupoid fails validation");
  const FieldSpec& f = g.arrows.field();
  const Subspace ker = kernel_image(g.d0).first;
  const std::size_t r = ker.dim(), n0 = g.objects.dim();

  std::vector<Scalar> c(r * r * r, f.zero());
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const Vec v = ker.coordinates(g.arrows.bracket(ker.basis()[a], ker.basis()[b]));
      for (std::size_t k = 0; k < r; ++k) c[(a * r + b) * r + k] = v[k];
    }
  LeibnizAlgebra l1 = LeibnizAlgebra::candidate(f, r, std::move(c));
  if (!l1.validate().leibniz_ok)
    throw InternalError("eta: kernel subalgebra fails the Leibniz identity");

  Matrix boundary(f, n0, r);
  for (std::size_t a = 0; a < r; ++a) {
    const Vec v = g.d1.apply(ker.basis()[a]);
    for (std::size_t i = 0; i < n0; ++i) boundary.at(i, a) = v[i];
  }

  std::vector<Scalar> lambda(n0 * r * r, f.zero()), rho(r * n0 * r, f.zero());
  for (std::size_t x = 0; x < n0; ++x) {
    const Vec ex = g.eps.apply(unit_vec(f, n0, x));
    for (std::size_t a = 0; a < r; ++a) {
      const Vec lv = ker.coordinates(g.arrows.bracket(ex, ker.basis()[a]));
      const Vec rv = ker.coordinates(g.arrows.bracket(ker.basis()[a], ex));
      for (std::size_t k = 0; k < r; ++k) {
        lambda[(x * r + a) * r + k] = lv[k];
        rho[(a * n0 + x) * r + k] = rv[k];
      }
    }
  }
  return CrossedModule(l1, g.objects, LinearMorphism(l1, g.objects, boundary),
                       LeibnizAction(g.objects, l1, std::move(lambda), std::move(rho)));
}

/// The internal groupoid on L1 x| L0 with d0(l1,l0) = l0,
/// d1(l1,l0) = boundary(l1) + l0 and eps(l0) = (0,l0).
inline InternalGroupoid delta(const CrossedModule& x) {
  if (!validate_xmod(x).all())
    throw UsageError("delta: crossed module fails validation");
  const FieldSpec& f = x.l1.field();
  const std::size_t n1 = x.l1.dim(), n0 = x.l0.dim();
  auto [arrows, ext] = semidirect(x.action);
  (void)ext;
  Matrix d0(f, n0, n1 + n0), d1(f, n0, n1 + n0), eps(f, n1 + n0, n0);
  for (std::size_t i = 0; i < n0; ++i) {
    d0.at(i, n1 + i) = f.one();
    d1.at(i, n1 + i) = f.one();
    eps.at(n1 + i, i) = f.one();
  }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j) d1.at(i, j) = x.boundary.matrix.at(i, j);
  InternalGroupoid g(std::move(arrows), x.l0, std::move(d0), std::move(d1),
                     std::move(eps));
  if (!validate_groupoid(g).all())
    throw InternalError("delta: constructed groupoid fails validation");
  return g;
}

/// An internal functor between groupoids: linear on arrows and objects,
/// commuting with all three structural maps, bracket-compatible.
struct GroupoidMorphism {
  InternalGroupoid source;
  InternalGroupoid target;
  Matrix on_arrows;
  Matrix on_objects;

  GroupoidMorphism(InternalGroupoid src, InternalGroupoid tgt, Matrix arrows_map,
                   Matrix objects_map)
      : source(std::move(src)), target(std::move(tgt)),
        on_arrows(std::move(arrows_map)), on_objects(std::move(objects_map)) {
    if (on_arrows.rows() != target.arrows.dim() ||
        on_arrows.cols() != source.arrows.dim() ||
        on_objects.rows() != target.objects.dim() ||
        on_objects.cols() != source.objects.dim())
      throw UsageError("GroupoidMorphism: map shape mismatch");
  }

  static GroupoidMorphism identity(const InternalGroupoid& g) {
    const FieldSpec& f = g.arrows.field();
    return GroupoidMorphism(g, g, Matrix::identity(f, g.arrows.dim()),
                            Matrix::identity(f, g.objects.dim()));
  }
};

inline bool validate_gpd_morphism(const GroupoidMorphism& m) {
  if (!(m.on_objects.mul(m.source.d0) == m.target.d0.mul(m.on_arrows))) return false;
  if (!(m.on_objects.mul(m.source.d1) == m.target.d1.mul(m.on_arrows))) return false;
  if (!(m.on_arrows.mul(m.source.eps) == m.target.eps.mul(m.on_objects))) return false;
  return check_morphism(LinearMorphism(m.source.arrows, m.target.arrows, m.on_arrows)) &&
         check_morphism(LinearMorphism(m.source.objects, m.target.objects, m.on_objects));
}

inline GroupoidMorphism compose(const GroupoidMorphism& g, const GroupoidMorphism& f) {
  return GroupoidMorphism(f.source, g.target, g.on_arrows.mul(f.on_arrows),
                          g.on_objects.mul(f.on_objects));
}

/// The natural isomorphism component x -> eta(delta(x)): l1 |-> (l1, 0)
/// in kernel coordinates, identity on l0.
inline XModMorphism roundtrip_eta_delta(const CrossedModule& x) {
  const InternalGroupoid g = delta(x);
  const CrossedModule back = eta(g);
  const FieldSpec& f = x.l1.field();
  const std::size_t n1 = x.l1.dim(), n0 = x.l0.dim();
  const Subspace ker = kernel_image(g.d0).first;
  Matrix f1(f, back.l1.dim(), n1);
  for (std::size_t m = 0; m < n1; ++m) {
    Vec v = zero_vec(f, n1 + n0);
    v[m] = f.one();
    const Vec coords = ker.coordinates(v);
    for (std::size_t r = 0; r < coords.size(); ++r) f1.at(r, m) = coords[r];
  }
  return XModMorphism{x, back, LinearMorphism(x.l1, back.l1, std::move(f1)),
                      LinearMorphism(x.l0, back.l0, Matrix::identity(f, n0))};
}

/// The natural isomorphism component g -> delta(eta(g)):
/// arrows map g |-> (g - eps d0(g), d0(g)), identity on objects.
inline GroupoidMorphism roundtrip_delta_eta(const InternalGroupoid& g) {
  const CrossedModule x = eta(g);
  const InternalGroupoid back = delta(x);
  const FieldSpec& f = g.arrows.field();
  const std::size_t n = g.arrows.dim(), n0 = g.objects.dim();
  const Subspace ker = kernel_image(g.d0).first;
  const std::size_t r = ker.dim();
  Matrix on_arrows(f, r + n0, n);
  for (std::size_t col = 0; col < n; ++col) {
    const Vec e = unit_vec(f, n, col);
    const Vec d0e = g.d0.apply(e);
    const Vec coords = ker.coordinates(sub(f, e, g.eps.apply(d0e)));
    for (std::size_t i = 0; i < r; ++i) on_arrows.at(i, col) = coords[i];
    for (std::size_t i = 0; i < n0; ++i) on_arrows.at(r + i, col) = d0e[i];
  }
  return GroupoidMorphism(g, back, std::move(on_arrows), Matrix::identity(f, n0));
}

}  // namespace leibniz

#endif
