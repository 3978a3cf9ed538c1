#ifndef LEIBNIZ_XMOD_HPP
#define LEIBNIZ_XMOD_HPP

#include <utility>

#include "leibniz/action.hpp"

namespace leibniz {

struct XModReport {
  bool morphism_ok = false;  // boundary is a Leibniz morphism
  bool action_ok = false;    // all six action axioms
  bool lxm1 = false;
  bool lxm2 = false;
  bool all() const { return morphism_ok && action_ok && lxm1 && lxm2; }
};

/// A crossed module (L1, L0, boundary) in action form: a boundary
/// morphism L1 -> L0 plus an action of L0 on L1 subject to the
/// equivariance (LXM1) and Peiffer-type (LXM2) conditions.
struct CrossedModule {
  LeibnizAlgebra l1;
  LeibnizAlgebra l0;
  LinearMorphism boundary;  // L1 -> L0
  LeibnizAction action;     // L0 acting on L1

  CrossedModule(LeibnizAlgebra a1, LeibnizAlgebra a0, LinearMorphism d,
                LeibnizAction act)
      : l1(std::move(a1)), l0(std::move(a0)), boundary(std::move(d)),
        action(std::move(act)) {
    if (l1.field() != l0.field()) throw UsageError("CrossedModule: field mismatch");
    if (boundary.matrix.rows() != l0.dim() || boundary.matrix.cols() != l1.dim())
      throw UsageError("CrossedModule: boundary shape mismatch");
    if (!(action.actor() == l0) || !(action.actee() == l1))
      throw UsageError("CrossedModule: action must be of l0 on l1");
  }

  /// (L, L, id, bracket action) for a validated algebra L.
  static CrossedModule identity_xmod(const LeibnizAlgebra& l) {
    return CrossedModule(l, l, LinearMorphism::identity(l),
                         LeibnizAction::by_bracket(l));
  }
};

inline XModReport validate_xmod(const CrossedModule& x) {
  XModReport rep;
  rep.morphism_ok = check_morphism(x.boundary);
  rep.action_ok = validate_action(x.action).all();
  const FieldSpec& f = x.l1.field();
  const std::size_t n1 = x.l1.dim(), n0 = x.l0.dim();
  rep.lxm1 = true;
  for (std::size_t a = 0; a < n0 && rep.lxm1; ++a) {
    const Vec l0v = unit_vec(f, n0, a);
    for (std::size_t b = 0; b < n1; ++b) {
      const Vec l1v = unit_vec(f, n1, b);
      if (x.boundary.apply(x.action.left(l0v, l1v)) !=
              x.l0.bracket(l0v, x.boundary.apply(l1v)) ||
          x.boundary.apply(x.action.right(l1v, l0v)) !=
              x.l0.bracket(x.boundary.apply(l1v), l0v)) {
        rep.lxm1 = false;
        break;
      }
    }
  }
  rep.lxm2 = true;
  for (std::size_t a = 0; a < n1 && rep.lxm2; ++a) {
    const Vec u = unit_vec(f, n1, a);
    for (std::size_t b = 0; b < n1; ++b) {
      const Vec v = unit_vec(f, n1, b);
      if (x.action.right(u, x.boundary.apply(v)) != x.l1.bracket(u, v) ||
          x.action.left(x.boundary.apply(v), u) != x.l1.bracket(v, u)) {
        rep.lxm2 = false;
        break;
      }
    }
  }
  return rep;
}

/// A morphism of crossed modules: f1 on the top algebras, f0 on the
/// bases, commuting with the boundaries and equivariant for the actions.
struct XModMorphism {
  CrossedModule source;
  CrossedModule target;
  LinearMorphism f1;  // source.l1 -> target.l1
  LinearMorphism f0;  // source.l0 -> target.l0
};

inline bool validate_xmod_morphism(const XModMorphism& m) {
  if (!validate_xmod(m.source).all() || !validate_xmod(m.target).all())
    throw UsageError("validate_xmod_morphism: endpoints are not valid crossed modules");
  if (!check_morphism(m.f1) || !check_morphism(m.f0)) return false;
  // (i) f0 . boundary = boundary' . f1
  if (!(m.f0.matrix.mul(m.source.boundary.matrix) ==
        m.target.boundary.matrix.mul(m.f1.matrix)))
    return false;
  const FieldSpec& f = m.source.l1.field();
  const std::size_t n1 = m.source.l1.dim(), n0 = m.source.l0.dim();
  for (std::size_t a = 0; a < n0; ++a) {
    const Vec l0v = unit_vec(f, n0, a);
    for (std::size_t b = 0; b < n1; ++b) {
      const Vec l1v = unit_vec(f, n1, b);
      // (ii) f1(l0 . l1) = f0(l0) . f1(l1)
      if (m.f1.apply(m.source.action.left(l0v, l1v)) !=
          m.target.action.left(m.f0.apply(l0v), m.f1.apply(l1v)))
        return false;
      // (iii) f1(l1 . l0) = f1(l1) . f0(l0)
      if (m.f1.apply(m.source.action.right(l1v, l0v)) !=
          m.target.action.right(m.f1.apply(l1v), m.f0.apply(l0v)))
        return false;
    }
  }
  return true;
}

inline XModMorphism compose(const XModMorphism& g, const XModMorphism& f) {
  return XModMorphism{f.source, g.target, compose(g.f1, f.f1), compose(g.f0, f.f0)};
}

/// ker boundary, together with an explicit abelianness check on its
/// basis (guaranteed by LXM2 for valid crossed modules, but verified
/// rather than assumed).
inline std::pair<Subspace, bool> kernel_of_boundary(const CrossedModule& x) {
  const auto [ker, img] = kernel_image(x.boundary.matrix);
  (void)img;
  bool abelian = true;
  for (const Vec& u : ker.basis())
    for (const Vec& v : ker.basis())
      if (!is_zero_vec(x.l1.bracket(u, v))) abelian = false;
  return {ker, abelian};
}

}  // namespace leibniz

#endif
