#ifndef LEIBNIZ_FIXTURES_HPP
#define LEIBNIZ_FIXTURES_HPP

#include <string>
#include <vector>

#include "leibniz/json_io.hpp"

namespace leibniz {

/// Named, deterministic example structures over Q. Everything here is
/// re-validated on construction so a fixture can never silently drift
/// out of spec.
namespace fixtures {

inline LeibnizAlgebra ab(std::size_t n) {
  LeibnizAlgebra a = LeibnizAlgebra::abelian(FieldSpec::rationals(), n);
  if (!a.validate().leibniz_ok) throw InternalError("fixture Ab(n) failed validation");
  return a;
}

/// dim 2, [e1,e1] = e2: the smallest Leibniz algebra that is not Lie.
inline LeibnizAlgebra a2() {
  const FieldSpec f = FieldSpec::rationals();
  std::vector<Scalar> c(8, f.zero());
  c[(0 * 2 + 0) * 2 + 1] = f.one();
  LeibnizAlgebra a = LeibnizAlgebra::candidate(f, 2, std::move(c));
  const AlgebraReport rep = a.validate();
  if (!rep.leibniz_ok || rep.lie) throw InternalError("fixture A2 failed validation");
  return a;
}

/// The split extension of A2 by itself along the bracket action.
inline SplitExtension self_ext_a2() {
  auto [alg, ext] = semidirect(LeibnizAction::by_bracket(a2()));
  (void)alg;
  if (!validate_split_extension(ext))
    throw InternalError("fixture SelfExt(A2) failed validation");
  return ext;
}

inline CrossedModule idx_a2() {
  CrossedModule x = CrossedModule::identity_xmod(a2());
  if (!validate_xmod(x).all()) throw InternalError("fixture IdX(A2) failed validation");
  return x;
}

inline InternalGroupoid pair_gpd_a2() {
  InternalGroupoid g = InternalGroupoid::pair_groupoid(a2());
  if (!validate_groupoid(g).all())
    throw InternalError("fixture PairGpd(A2) failed validation");
  return g;
}

inline InternalGroupoid one_obj_ab2() {
  InternalGroupoid g = InternalGroupoid::one_object(ab(2));
  if (!validate_groupoid(g).all())
    throw InternalError("fixture OneObj(Ab(2)) failed validation");
  return g;
}

inline GroupoidMorphism id_cover_pair_gpd_a2() {
  GroupoidMorphism p = GroupoidMorphism::identity(pair_gpd_a2());
  if (!check_covering(p))
    throw InternalError("fixture IdCover(PairGpd(A2)) failed validation");
  return p;
}

}  // namespace fixtures

struct Fixture {
  std::string name;
  Document doc;
};

inline std::vector<Fixture> all_fixtures() {
  using namespace fixtures;
  std::vector<Fixture> out;
  out.push_back({"Ab(1)", Document{DocKind::algebra, kSchemaVersion, ab(1)}});
  out.push_back({"Ab(2)", Document{DocKind::algebra, kSchemaVersion, ab(2)}});
  out.push_back({"Ab(3)", Document{DocKind::algebra, kSchemaVersion, ab(3)}});
  out.push_back({"A2", Document{DocKind::algebra, kSchemaVersion, a2()}});
  out.push_back({"SelfExt(A2)", Document{DocKind::extension, kSchemaVersion, self_ext_a2()}});
  out.push_back({"IdX(A2)", Document{DocKind::xmod, kSchemaVersion, idx_a2()}});
  out.push_back({"PairGpd(A2)", Document{DocKind::groupoid, kSchemaVersion, pair_gpd_a2()}});
  out.push_back({"OneObj(Ab(2))", Document{DocKind::groupoid, kSchemaVersion, one_obj_ab2()}});
  out.push_back({"IdCover(PairGpd(A2))",
                 Document{DocKind::gpd_morphism, kSchemaVersion, id_cover_pair_gpd_a2()}});
  return out;
}

inline Document fixture(const std::string& name) {
  for (Fixture& f : all_fixtures())
    if (f.name == name) return std::move(f.doc);
  throw UsageError("unknown fixture '" + name + "'");
}

}  // namespace leibniz

#endif
