#ifndef LEIBNIZ_JSON_IO_HPP
#define LEIBNIZ_JSON_IO_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "leibniz/covering.hpp"
#include "leibniz/enumerate.hpp"

namespace leibniz {

using Json = nlohmann::ordered_json;

/// Schema violation in a document, with a field path in the message.
struct ParseError : UsageError {
  using UsageError::UsageError;
};

enum class DocKind {
  algebra,
  morphism,
  action,
  extension,
  xmod,
  groupoid,
  gpd_morphism,
  gpd_action,
};

inline const char* to_string(DocKind k) {
  switch (k) {
    case DocKind::algebra: return "algebra";
    case DocKind::morphism: return "morphism";
    case DocKind::action: return "action";
    case DocKind::extension: return "extension";
    case DocKind::xmod: return "xmod";
    case DocKind::groupoid: return "groupoid";
    case DocKind::gpd_morphism: return "gpd_morphism";
    default: return "gpd_action";
  }
}

constexpr int kSchemaVersion = 1;

struct Document {
  DocKind kind;
  int schema_version = kSchemaVersion;
  std::variant<LeibnizAlgebra, LinearMorphism, LeibnizAction, SplitExtension,
               CrossedModule, InternalGroupoid, GroupoidMorphism, GroupoidAction>
      body;
};

namespace jsondetail {

inline void expect_object(const Json& j, const std::string& where,
                          std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys)
      if (item.key() == k) known = true;
    if (!known) throw ParseError(where + ": unknown field '" + item.key() + "'");
  }
  for (const char* k : keys)
    if (!j.contains(k)) throw ParseError(where + ": missing field '" + std::string(k) + "'");
}

inline std::size_t expect_count(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

inline std::string expect_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

inline Json field_to_json(const FieldSpec& f) {
  Json j;
  if (f.is_rational()) {
    j["kind"] = "rational";
  } else {
    j["kind"] = "prime";
    j["p"] = f.p();
  }
  return j;
}

inline FieldSpec field_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError(where + ": expected a field object");
  const std::string kind = expect_string(j.at("kind"), where + ".kind");
  if (kind == "rational") {
    expect_object(j, where, {"kind"});
    return FieldSpec::rationals();
  }
  if (kind == "prime") {
    expect_object(j, where, {"kind", "p"});
    const auto p = static_cast<std::int64_t>(expect_count(j.at("p"), where + ".p"));
    return FieldSpec::gf(p);
  }
  throw ParseError(where + ".kind: must be 'rational' or 'prime'");
}

inline Json matrix_to_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

inline Matrix matrix_from_json(const Json& j, const FieldSpec& f,
                               const std::string& where) {
  expect_object(j, where, {"rows", "cols", "entries"});
  const std::size_t rows = expect_count(j.at("rows"), where + ".rows");
  const std::size_t cols = expect_count(j.at("cols"), where + ".cols");
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows)
    throw ParseError(where + ".entries: expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = entries[r];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(where + ".entries: row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) {
      try {
        m.at(r, c) = f.parse(expect_string(row[c], where + ".entries"));
      } catch (const UsageError& e) {
        throw ParseError(where + ".entries[" + std::to_string(r) + "][" +
                         std::to_string(c) + "]: " + e.what());
      }
    }
  }
  return m;
}

/// Sparse rank-3 tensor: [{"i": i, "j": j, "out": [{"k": k, "c": "..."}]}],
/// omitted (i, j) pairs are zero, serialization sorted by (i, j, k).
inline Json tensor_to_json(const std::vector<Scalar>& t, std::size_t ni,
                           std::size_t nj, std::size_t nk) {
  Json list = Json::array();
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < nj; ++j) {
      Json out = Json::array();
      for (std::size_t k = 0; k < nk; ++k) {
        const Scalar& c = t[(i * nj + j) * nk + k];
        if (c.is_zero()) continue;
        Json e;
        e["k"] = k;
        e["c"] = c.str();
        out.push_back(std::move(e));
      }
      if (out.empty()) continue;
      Json entry;
      entry["i"] = i;
      entry["j"] = j;
      entry["out"] = std::move(out);
      list.push_back(std::move(entry));
    }
  return list;
}

inline std::vector<Scalar> tensor_from_json(const Json& j, const FieldSpec& f,
                                            std::size_t ni, std::size_t nj,
                                            std::size_t nk, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of entries");
  std::vector<Scalar> t(ni * nj * nk, f.zero());
  std::vector<bool> seen(ni * nj, false);
  for (const Json& entry : j) {
    expect_object(entry, where, {"i", "j", "out"});
    const std::size_t i = expect_count(entry.at("i"), where + ".i");
    const std::size_t jj = expect_count(entry.at("j"), where + ".j");
    if (i >= ni || jj >= nj) throw ParseError(where + ": index out of range");
    if (seen[i * nj + jj]) throw ParseError(where + ": duplicate (i, j) entry");
    seen[i * nj + jj] = true;
    const Json& out = entry.at("out");
    if (!out.is_array() || out.empty())
      throw ParseError(where + ".out: expected a non-empty array");
    std::vector<bool> seen_k(nk, false);
    for (const Json& term : out) {
      expect_object(term, where + ".out", {"k", "c"});
      const std::size_t k = expect_count(term.at("k"), where + ".out.k");
      if (k >= nk) throw ParseError(where + ".out.k: index out of range");
      if (seen_k[k]) throw ParseError(where + ".out: duplicate k entry");
      seen_k[k] = true;
      Scalar c;
      try {
        c = f.parse(expect_string(term.at("c"), where + ".out.c"));
      } catch (const UsageError& e) {
        throw ParseError(where + ".out.c: " + std::string(e.what()));
      }
      if (c.is_zero()) throw ParseError(where + ".out.c: explicit zero coefficient");
      t[(i * nj + jj) * nk + k] = c;
    }
  }
  return t;
}

inline Json algebra_to_json(const LeibnizAlgebra& a) {
  Json j;
  j["field"] = field_to_json(a.field());
  j["dim"] = a.dim();
  j["basis"] = a.basis_names();
  j["brackets"] = tensor_to_json(a.tensor(), a.dim(), a.dim(), a.dim());
  return j;
}

inline LeibnizAlgebra algebra_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"field", "dim", "basis", "brackets"});
  const FieldSpec f = field_from_json(j.at("field"), where + ".field");
  const std::size_t n = expect_count(j.at("dim"), where + ".dim");
  const Json& basis = j.at("basis");
  if (!basis.is_array() || basis.size() != n)
    throw ParseError(where + ".basis: expected " + std::to_string(n) + " names");
  std::vector<std::string> names;
  for (const Json& b : basis) names.push_back(expect_string(b, where + ".basis"));
  std::vector<Scalar> t =
      tensor_from_json(j.at("brackets"), f, n, n, n, where + ".brackets");
  return LeibnizAlgebra::candidate(f, n, std::move(t), std::move(names));
}

inline void require_same_field(const FieldSpec& a, const FieldSpec& b,
                               const std::string& where) {
  if (!(a == b)) throw ParseError(where + ": embedded structures use different fields");
}

inline Json morphism_to_json(const LinearMorphism& m) {
  Json j;
  j["source"] = algebra_to_json(m.source);
  j["target"] = algebra_to_json(m.target);
  j["matrix"] = matrix_to_json(m.matrix);
  return j;
}

inline LinearMorphism morphism_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"source", "target", "matrix"});
  LeibnizAlgebra src = algebra_from_json(j.at("source"), where + ".source");
  LeibnizAlgebra tgt = algebra_from_json(j.at("target"), where + ".target");
  require_same_field(src.field(), tgt.field(), where);
  Matrix m = matrix_from_json(j.at("matrix"), src.field(), where + ".matrix");
  if (m.rows() != tgt.dim() || m.cols() != src.dim())
    throw ParseError(where + ".matrix: shape must be target dim x source dim");
  return LinearMorphism(std::move(src), std::move(tgt), std::move(m));
}

inline Json action_to_json(const LeibnizAction& a) {
  Json j;
  j["actor"] = algebra_to_json(a.actor());
  j["actee"] = algebra_to_json(a.actee());
  j["lambda"] = tensor_to_json(a.lambda(), a.actor().dim(), a.actee().dim(),
                               a.actee().dim());
  j["rho"] = tensor_to_json(a.rho(), a.actee().dim(), a.actor().dim(),
                            a.actee().dim());
  return j;
}

inline LeibnizAction action_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"actor", "actee", "lambda", "rho"});
  LeibnizAlgebra actor = algebra_from_json(j.at("actor"), where + ".actor");
  LeibnizAlgebra actee = algebra_from_json(j.at("actee"), where + ".actee");
  require_same_field(actor.field(), actee.field(), where);
  const std::size_t nl = actor.dim(), nm = actee.dim();
  std::vector<Scalar> lambda =
      tensor_from_json(j.at("lambda"), actor.field(), nl, nm, nm, where + ".lambda");
  std::vector<Scalar> rho =
      tensor_from_json(j.at("rho"), actor.field(), nm, nl, nm, where + ".rho");
  return LeibnizAction(std::move(actor), std::move(actee), std::move(lambda),
                       std::move(rho));
}

inline Json extension_to_json(const SplitExtension& e) {
  Json j;
  j["kernel"] = algebra_to_json(e.kernel_alg);
  j["middle"] = algebra_to_json(e.middle_alg);
  j["base"] = algebra_to_json(e.base_alg);
  j["i"] = matrix_to_json(e.i.matrix);
  j["p"] = matrix_to_json(e.p.matrix);
  j["s"] = matrix_to_json(e.s.matrix);
  return j;
}

inline SplitExtension extension_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"kernel", "middle", "base", "i", "p", "s"});
  LeibnizAlgebra ker = algebra_from_json(j.at("kernel"), where + ".kernel");
  LeibnizAlgebra mid = algebra_from_json(j.at("middle"), where + ".middle");
  LeibnizAlgebra base = algebra_from_json(j.at("base"), where + ".base");
  require_same_field(ker.field(), mid.field(), where);
  require_same_field(ker.field(), base.field(), where);
  Matrix mi = matrix_from_json(j.at("i"), ker.field(), where + ".i");
  Matrix mp = matrix_from_json(j.at("p"), ker.field(), where + ".p");
  Matrix ms = matrix_from_json(j.at("s"), ker.field(), where + ".s");
  return SplitExtension{ker, mid, base, LinearMorphism(ker, mid, std::move(mi)),
                        LinearMorphism(mid, base, std::move(mp)),
                        LinearMorphism(base, mid, std::move(ms))};
}

inline Json xmod_to_json(const CrossedModule& x) {
  Json j;
  j["l1"] = algebra_to_json(x.l1);
  j["l0"] = algebra_to_json(x.l0);
  j["boundary"] = matrix_to_json(x.boundary.matrix);
  j["action"] = action_to_json(x.action);
  return j;
}

inline CrossedModule xmod_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"l1", "l0", "boundary", "action"});
  LeibnizAlgebra l1 = algebra_from_json(j.at("l1"), where + ".l1");
  LeibnizAlgebra l0 = algebra_from_json(j.at("l0"), where + ".l0");
  require_same_field(l1.field(), l0.field(), where);
  Matrix b = matrix_from_json(j.at("boundary"), l1.field(), where + ".boundary");
  LeibnizAction act = action_from_json(j.at("action"), where + ".action");
  if (!(act.actor() == l0) || !(act.actee() == l1))
    throw ParseError(where + ".action: actor/actee must match l0/l1");
  return CrossedModule(l1, l0, LinearMorphism(l1, l0, std::move(b)), std::move(act));
}

inline Json groupoid_to_json(const InternalGroupoid& g) {
  Json j;
  j["arrows"] = algebra_to_json(g.arrows);
  j["objects"] = algebra_to_json(g.objects);
  j["d0"] = matrix_to_json(g.d0);
  j["d1"] = matrix_to_json(g.d1);
  j["eps"] = matrix_to_json(g.eps);
  return j;
}

inline InternalGroupoid groupoid_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"arrows", "objects", "d0", "d1", "eps"});
  LeibnizAlgebra arrows = algebra_from_json(j.at("arrows"), where + ".arrows");
  LeibnizAlgebra objects = algebra_from_json(j.at("objects"), where + ".objects");
  require_same_field(arrows.field(), objects.field(), where);
  Matrix d0 = matrix_from_json(j.at("d0"), arrows.field(), where + ".d0");
  Matrix d1 = matrix_from_json(j.at("d1"), arrows.field(), where + ".d1");
  Matrix eps = matrix_from_json(j.at("eps"), arrows.field(), where + ".eps");
  return InternalGroupoid(std::move(arrows), std::move(objects), std::move(d0),
                          std::move(d1), std::move(eps));
}

inline Json gpd_morphism_to_json(const GroupoidMorphism& m) {
  Json j;
  j["source"] = groupoid_to_json(m.source);
  j["target"] = groupoid_to_json(m.target);
  j["on_arrows"] = matrix_to_json(m.on_arrows);
  j["on_objects"] = matrix_to_json(m.on_objects);
  return j;
}

inline GroupoidMorphism gpd_morphism_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"source", "target", "on_arrows", "on_objects"});
  InternalGroupoid src = groupoid_from_json(j.at("source"), where + ".source");
  InternalGroupoid tgt = groupoid_from_json(j.at("target"), where + ".target");
  require_same_field(src.arrows.field(), tgt.arrows.field(), where);
  Matrix oa = matrix_from_json(j.at("on_arrows"), src.arrows.field(), where + ".on_arrows");
  Matrix oo = matrix_from_json(j.at("on_objects"), src.arrows.field(), where + ".on_objects");
  return GroupoidMorphism(std::move(src), std::move(tgt), std::move(oa), std::move(oo));
}

inline Json gpd_action_to_json(const GroupoidAction& a) {
  Json j;
  j["groupoid"] = groupoid_to_json(a.g);
  j["algebra"] = algebra_to_json(a.l);
  j["omega"] = matrix_to_json(a.omega);
  j["act"] = matrix_to_json(a.act);
  Json basis = Json::array();
  for (const Vec& v : a.pullback.basis()) {
    Json row = Json::array();
    for (const Scalar& s : v) row.push_back(s.str());
    basis.push_back(std::move(row));
  }
  j["pullback_basis"] = std::move(basis);
  return j;
}

inline GroupoidAction gpd_action_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"groupoid", "algebra", "omega", "act", "pullback_basis"});
  InternalGroupoid g = groupoid_from_json(j.at("groupoid"), where + ".groupoid");
  LeibnizAlgebra l = algebra_from_json(j.at("algebra"), where + ".algebra");
  require_same_field(g.arrows.field(), l.field(), where);
  Matrix omega = matrix_from_json(j.at("omega"), l.field(), where + ".omega");
  Matrix act = matrix_from_json(j.at("act"), l.field(), where + ".act");
  GroupoidAction action(std::move(g), std::move(l), std::move(omega), std::move(act));
  // the emitted basis is canonical; reject documents that disagree
  const Json& basis = j.at("pullback_basis");
  if (!basis.is_array() || basis.size() != action.pullback.dim())
    throw ParseError(where + ".pullback_basis: wrong number of vectors");
  for (std::size_t i = 0; i < action.pullback.dim(); ++i) {
    const Json& row = basis[i];
    const Vec& v = action.pullback.basis()[i];
    if (!row.is_array() || row.size() != v.size())
      throw ParseError(where + ".pullback_basis: wrong vector length");
    for (std::size_t c = 0; c < v.size(); ++c)
      if (expect_string(row[c], where + ".pullback_basis") != v[c].str())
        throw ParseError(where + ".pullback_basis: not the canonical pullback basis");
  }
  return action;
}

}  // namespace jsondetail

inline Json document_to_json(const Document& d) {
  using namespace jsondetail;
  Json j;
  j["kind"] = to_string(d.kind);
  j["schema_version"] = d.schema_version;
  switch (d.kind) {
    case DocKind::algebra:
      j["body"] = algebra_to_json(std::get<LeibnizAlgebra>(d.body));
      break;
    case DocKind::morphism:
      j["body"] = morphism_to_json(std::get<LinearMorphism>(d.body));
      break;
    case DocKind::action:
      j["body"] = action_to_json(std::get<LeibnizAction>(d.body));
      break;
    case DocKind::extension:
      j["body"] = extension_to_json(std::get<SplitExtension>(d.body));
      break;
    case DocKind::xmod:
      j["body"] = xmod_to_json(std::get<CrossedModule>(d.body));
      break;
    case DocKind::groupoid:
      j["body"] = groupoid_to_json(std::get<InternalGroupoid>(d.body));
      break;
    case DocKind::gpd_morphism:
      j["body"] = gpd_morphism_to_json(std::get<GroupoidMorphism>(d.body));
      break;
    case DocKind::gpd_action:
      j["body"] = gpd_action_to_json(std::get<GroupoidAction>(d.body));
      break;
  }
  return j;
}

inline std::string serialize(const Document& d) {
  return document_to_json(d).dump(2) + "\n";
}

inline Document parse_document(const std::string& text) {
  using namespace jsondetail;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("document: invalid JSON: ") + e.what());
  }
  expect_object(j, "document", {"kind", "schema_version", "body"});
  const int version = static_cast<int>(expect_count(j.at("schema_version"),
                                                    "document.schema_version"));
  if (version != kSchemaVersion)
    throw ParseError("document.schema_version: unsupported version");
  const std::string kind = expect_string(j.at("kind"), "document.kind");
  const Json& body = j.at("body");
  if (kind == "algebra")
    return Document{DocKind::algebra, version, algebra_from_json(body, "body")};
  if (kind == "morphism")
    return Document{DocKind::morphism, version, morphism_from_json(body, "body")};
  if (kind == "action")
    return Document{DocKind::action, version, action_from_json(body, "body")};
  if (kind == "extension")
    return Document{DocKind::extension, version, extension_from_json(body, "body")};
  if (kind == "xmod")
    return Document{DocKind::xmod, version, xmod_from_json(body, "body")};
  if (kind == "groupoid")
    return Document{DocKind::groupoid, version, groupoid_from_json(body, "body")};
  if (kind == "gpd_morphism")
    return Document{DocKind::gpd_morphism, version, gpd_morphism_from_json(body, "body")};
  if (kind == "gpd_action")
    return Document{DocKind::gpd_action, version, gpd_action_from_json(body, "body")};
  throw ParseError("document.kind: unknown kind '" + kind + "'");
}

}  // namespace leibniz

#endif
