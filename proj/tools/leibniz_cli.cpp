#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "leibniz/leibniz.hpp"

namespace {

using namespace leibniz;

using Entries = std::vector<std::pair<std::string, bool>>;

bool g_json = false;

void print_report(const std::string& what, const Entries& e, bool valid) {
  if (g_json) {
    Json j;
    j["kind"] = what;
    j["valid"] = valid;
    Json r;
    for (const auto& [k, v] : e) r[k] = v;
    j["report"] = std::move(r);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << what << " report\n";
    for (const auto& [k, v] : e)
      std::cout << "  " << k << ": " << (v ? "true" : "false") << "\n";
    std::cout << (valid ? "valid" : "invalid") << "\n";
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load(const std::string& path) { return parse_document(slurp(path)); }

Document load_as(const std::string& path, DocKind kind) {
  Document d = load(path);
  if (d.kind != kind)
    throw UsageError("'" + path + "': expected a " + std::string(to_string(kind)) +
                     " document, got " + to_string(d.kind));
  return d;
}

Vec parse_vec(const FieldSpec& f, const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(f.parse(item));
  if (out.empty()) throw UsageError("empty vector argument");
  return out;
}

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const Scalar& s : v) j.push_back(s.str());
  return j;
}

std::pair<Entries, bool> validation_report(const Document& d) {
  Entries e;
  bool valid = false;
  switch (d.kind) {
    case DocKind::algebra: {
      const auto& a = std::get<LeibnizAlgebra>(d.body);
      const AlgebraReport rep = a.validate();
      e = {{"leibniz_ok", rep.leibniz_ok}, {"abelian", rep.abelian}, {"lie", rep.lie}};
      valid = rep.leibniz_ok;
      break;
    }
    case DocKind::morphism: {
      const auto& m = std::get<LinearMorphism>(d.body);
      const bool src = m.source.validate().leibniz_ok;
      const bool tgt = m.target.validate().leibniz_ok;
      const bool mor = src && tgt && check_morphism(m);
      e = {{"source_ok", src}, {"target_ok", tgt}, {"morphism_ok", mor}};
      valid = src && tgt && mor;
      break;
    }
    case DocKind::action: {
      const auto& a = std::get<LeibnizAction>(d.body);
      const bool actor_ok = a.actor().validate().leibniz_ok;
      const bool actee_ok = a.actee().validate().leibniz_ok;
      const ActionReport rep = validate_action(a);
      e = {{"actor_ok", actor_ok}, {"actee_ok", actee_ok}};
      for (std::size_t i = 0; i < 6; ++i)
        e.emplace_back("axiom_" + std::to_string(i + 1), rep.axiom[i]);
      valid = actor_ok && actee_ok && rep.all();
      break;
    }
    case DocKind::extension: {
      const auto& x = std::get<SplitExtension>(d.body);
      const bool ker = x.kernel_alg.validate().leibniz_ok;
      const bool mid = x.middle_alg.validate().leibniz_ok;
      const bool base = x.base_alg.validate().leibniz_ok;
      const bool ext = ker && mid && base && validate_split_extension(x);
      e = {{"kernel_ok", ker}, {"middle_ok", mid}, {"base_ok", base},
           {"extension_ok", ext}};
      valid = ext;
      break;
    }
    case DocKind::xmod: {
      const auto& x = std::get<CrossedModule>(d.body);
      const bool l1 = x.l1.validate().leibniz_ok;
      const bool l0 = x.l0.validate().leibniz_ok;
      const XModReport rep = validate_xmod(x);
      e = {{"l1_ok", l1}, {"l0_ok", l0}, {"morphism_ok", rep.morphism_ok},
           {"action_ok", rep.action_ok}, {"lxm1", rep.lxm1}, {"lxm2", rep.lxm2}};
      valid = l1 && l0 && rep.all();
      break;
    }
    case DocKind::groupoid: {
      const auto& g = std::get<InternalGroupoid>(d.body);
      const bool arrows = g.arrows.validate().leibniz_ok;
      const bool objects = g.objects.validate().leibniz_ok;
      const GroupoidReport rep = validate_groupoid(g);
      e = {{"arrows_ok", arrows}, {"objects_ok", objects},
           {"maps_ok", rep.maps_ok}, {"sections_ok", rep.sections_ok},
           {"kernel_bracket_ok", rep.kernel_bracket_ok},
           {"interchange_ok", rep.interchange_ok}};
      valid = arrows && objects && rep.all();
      break;
    }
    case DocKind::gpd_morphism: {
      const auto& m = std::get<GroupoidMorphism>(d.body);
      const bool src = m.source.arrows.validate().leibniz_ok &&
                       m.source.objects.validate().leibniz_ok &&
                       validate_groupoid(m.source).all();
      const bool tgt = m.target.arrows.validate().leibniz_ok &&
                       m.target.objects.validate().leibniz_ok &&
                       validate_groupoid(m.target).all();
      const bool mor = validate_gpd_morphism(m);
      e = {{"source_ok", src}, {"target_ok", tgt}, {"morphism_ok", mor}};
      valid = src && tgt && mor;
      break;
    }
    case DocKind::gpd_action: {
      const auto& a = std::get<GroupoidAction>(d.body);
      const bool gpd = a.g.arrows.validate().leibniz_ok &&
                       a.g.objects.validate().leibniz_ok &&
                       validate_groupoid(a.g).all();
      const bool alg = a.l.validate().leibniz_ok;
      const GpdActionReport rep = validate_gpd_action(a);
      e = {{"groupoid_ok", gpd}, {"algebra_ok", alg},
           {"morphism_ok", rep.morphism_ok}, {"a1", rep.a1}, {"a2", rep.a2},
           {"a3", rep.a3}};
      valid = gpd && alg && rep.all();
      break;
    }
  }
  return {std::move(e), valid};
}

int cmd_validate(const std::string& path) {
  const Document d = load(path);
  const auto [entries, valid] = validation_report(d);
  print_report(to_string(d.kind), entries, valid);
  return valid ? 0 : 1;
}

int fail_unless_valid(const Document& d) {
  const auto [entries, valid] = validation_report(d);
  if (valid) return 0;
  print_report(to_string(d.kind), entries, valid);
  return 1;
}

int cmd_build_semidirect(const std::string& path) {
  const Document d = load_as(path, DocKind::action);
  if (int rc = fail_unless_valid(d)) return rc;
  auto [alg, ext] = semidirect(std::get<LeibnizAction>(d.body));
  (void)alg;
  std::cout << serialize(Document{DocKind::extension, kSchemaVersion, std::move(ext)});
  return 0;
}

int cmd_build_action_groupoid(const std::string& path) {
  const Document d = load_as(path, DocKind::gpd_action);
  if (int rc = fail_unless_valid(d)) return rc;
  auto [gpd, q] = action_groupoid(std::get<GroupoidAction>(d.body));
  (void)gpd;
  // q : G |x L -> G embeds the constructed groupoid as its source
  std::cout << serialize(Document{DocKind::gpd_morphism, kSchemaVersion, std::move(q)});
  return 0;
}

int cmd_convert_delta(const std::string& path) {
  const Document d = load_as(path, DocKind::xmod);
  if (int rc = fail_unless_valid(d)) return rc;
  InternalGroupoid g = delta(std::get<CrossedModule>(d.body));
  std::cout << serialize(Document{DocKind::groupoid, kSchemaVersion, std::move(g)});
  return 0;
}

int cmd_convert_eta(const std::string& path) {
  const Document d = load_as(path, DocKind::groupoid);
  if (int rc = fail_unless_valid(d)) return rc;
  CrossedModule x = eta(std::get<InternalGroupoid>(d.body));
  std::cout << serialize(Document{DocKind::xmod, kSchemaVersion, std::move(x)});
  return 0;
}

int cmd_check_covering(const std::string& path) {
  const Document d = load_as(path, DocKind::gpd_morphism);
  const auto& p = std::get<GroupoidMorphism>(d.body);
  const bool morphism_ok = validate_gpd_morphism(p);
  const bool covering = morphism_ok && check_covering(p);
  Entries e = {{"morphism_ok", morphism_ok}, {"covering", covering}};
  if (covering) {
    const CoveringClass cls = covering_class(p);
    e.emplace_back("transitive", cls.transitive);
    e.emplace_back("universal", cls.universal);
  }
  print_report("covering", e, covering);
  return covering ? 0 : 1;
}

int cmd_check_covering_xmod(const std::string& src_path, const std::string& tgt_path,
                            const std::string& f1_path, const std::string& f0_path) {
  const Document ds = load_as(src_path, DocKind::xmod);
  const Document dt = load_as(tgt_path, DocKind::xmod);
  if (int rc = fail_unless_valid(ds)) return rc;
  if (int rc = fail_unless_valid(dt)) return rc;
  const auto& src = std::get<CrossedModule>(ds.body);
  const auto& tgt = std::get<CrossedModule>(dt.body);
  const Document df1 = load_as(f1_path, DocKind::morphism);
  const Document df0 = load_as(f0_path, DocKind::morphism);
  const auto& f1 = std::get<LinearMorphism>(df1.body);
  const auto& f0 = std::get<LinearMorphism>(df0.body);
  if (!(f1.source == src.l1) || !(f1.target == tgt.l1))
    throw UsageError("f1 endpoints do not match the crossed modules' top algebras");
  if (!(f0.source == src.l0) || !(f0.target == tgt.l0))
    throw UsageError("f0 endpoints do not match the crossed modules' base algebras");
  const XModMorphism m{src, tgt, f1, f0};
  const bool morphism_ok = validate_xmod_morphism(m);
  const bool covering = morphism_ok && is_bijective(m.f1.matrix);
  print_report("covering_xmod",
               {{"morphism_ok", morphism_ok}, {"f1_bijective", covering}}, covering);
  return covering ? 0 : 1;
}

void print_matrix(const std::string& name, const Matrix& m) {
  if (g_json) return;  // handled by the caller in JSON mode
  std::cout << name << " (" << m.rows() << " x " << m.cols() << ")\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::cout << " ";
    for (std::size_t c = 0; c < m.cols(); ++c) std::cout << " " << m.at(r, c).str();
    std::cout << "\n";
  }
}

int emit_roundtrip(const std::string& what,
                   const std::vector<std::pair<std::string, Matrix>>& maps,
                   bool verified) {
  if (g_json) {
    Json j;
    j["kind"] = "roundtrip";
    j["structure"] = what;
    Json ms;
    for (const auto& [name, m] : maps) ms[name] = jsondetail::matrix_to_json(m);
    j["maps"] = std::move(ms);
    j["verified"] = verified;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "roundtrip (" << what << ")\n";
    for (const auto& [name, m] : maps) print_matrix(name, m);
    std::cout << (verified ? "verified isomorphism" : "NOT an isomorphism") << "\n";
  }
  return verified ? 0 : 1;
}

int cmd_roundtrip(const std::string& path) {
  const Document d = load(path);
  if (int rc = fail_unless_valid(d)) return rc;
  switch (d.kind) {
    case DocKind::xmod: {
      const XModMorphism m = roundtrip_eta_delta(std::get<CrossedModule>(d.body));
      const bool ok = validate_xmod_morphism(m) && is_bijective(m.f1.matrix) &&
                      is_bijective(m.f0.matrix);
      return emit_roundtrip("xmod", {{"f1", m.f1.matrix}, {"f0", m.f0.matrix}}, ok);
    }
    case DocKind::groupoid: {
      const GroupoidMorphism m =
          roundtrip_delta_eta(std::get<InternalGroupoid>(d.body));
      const bool ok = validate_gpd_morphism(m) && is_bijective(m.on_arrows) &&
                      is_bijective(m.on_objects);
      return emit_roundtrip(
          "groupoid", {{"on_arrows", m.on_arrows}, {"on_objects", m.on_objects}}, ok);
    }
    case DocKind::gpd_morphism: {
      const auto& p = std::get<GroupoidMorphism>(d.body);
      if (!check_covering(p)) {
        print_report("covering", {{"covering", false}}, false);
        return 1;
      }
      const GroupoidMorphism m = roundtrip_cov_action(p);
      const bool ok = validate_gpd_morphism(m) && is_bijective(m.on_arrows) &&
                      is_bijective(m.on_objects);
      return emit_roundtrip(
          "covering", {{"on_arrows", m.on_arrows}, {"on_objects", m.on_objects}}, ok);
    }
    default:
      throw UsageError("roundtrip expects an xmod, groupoid, or gpd_morphism document");
  }
}

int cmd_lift(const std::string& path, const std::string& arrow_text,
             const std::string& at_text) {
  const Document d = load_as(path, DocKind::gpd_morphism);
  const auto& p = std::get<GroupoidMorphism>(d.body);
  const FieldSpec& f = p.source.arrows.field();
  const Vec g = parse_vec(f, arrow_text);
  const Vec x = parse_vec(f, at_text);
  if (g.size() != p.target.arrows.dim())
    throw UsageError("--arrow: expected " + std::to_string(p.target.arrows.dim()) +
                     " coordinates");
  if (x.size() != p.source.objects.dim())
    throw UsageError("--at: expected " + std::to_string(p.source.objects.dim()) +
                     " coordinates");
  const Vec lifted = lift(p, g, x);
  if (g_json) {
    Json j;
    j["kind"] = "lift";
    j["arrow"] = vec_to_json(lifted);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "lift:";
    for (const Scalar& s : lifted) std::cout << " " << s.str();
    std::cout << "\n";
  }
  return 0;
}

int cmd_enumerate(const std::string& kind, std::size_t dim, std::int64_t p) {
  if (kind != "leibniz") throw UsageError("enumerate: only --kind leibniz is supported");
  const LeibnizEnumeration e = enumerate_leibniz(dim, p);
  for (const LeibnizAlgebra& a : e.algebras) {
    const Document d{DocKind::algebra, kSchemaVersion, a};
    std::cout << document_to_json(d).dump() << "\n";
  }
  return 0;
}

int cmd_fixtures(const std::string& name) {
  if (name.empty()) {
    for (const Fixture& f : all_fixtures()) std::cout << f.name << "\n";
    return 0;
  }
  std::cout << serialize(fixture(name));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for Leibniz algebras, crossed modules, "
               "internal groupoids, and coverings"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "structured JSON reports instead of tables");

  std::string file, file2, file3, file4, arrow, at, enum_kind = "leibniz", name;
  std::size_t dim = 0;
  std::int64_t p = 2;

  auto* validate = app.add_subcommand("validate", "validate any document");
  validate->add_option("file", file)->required();

  auto* build = app.add_subcommand("build", "construct derived structures");
  build->require_subcommand(1);
  auto* semidir = build->add_subcommand("semidirect", "semidirect product of an action");
  semidir->add_option("file", file)->required();
  auto* actgpd = build->add_subcommand("action-groupoid",
                                       "action groupoid of a groupoid action");
  actgpd->add_option("file", file)->required();

  auto* convert = app.add_subcommand("convert", "functors between xmods and groupoids");
  convert->require_subcommand(1);
  auto* cdelta = convert->add_subcommand("delta", "crossed module to internal groupoid");
  cdelta->add_option("file", file)->required();
  auto* ceta = convert->add_subcommand("eta", "internal groupoid to crossed module");
  ceta->add_option("file", file)->required();

  auto* check = app.add_subcommand("check", "covering checks");
  check->require_subcommand(1);
  auto* ccov = check->add_subcommand("covering", "is a groupoid morphism a covering");
  ccov->add_option("file", file)->required();
  auto* ccovx = check->add_subcommand(
      "covering-xmod", "is (f1, f0) a covering of crossed modules");
  ccovx->add_option("source", file)->required();
  ccovx->add_option("target", file2)->required();
  ccovx->add_option("f1", file3)->required();
  ccovx->add_option("f0", file4)->required();

  auto* roundtrip = app.add_subcommand(
      "roundtrip", "verify the equivalence isomorphisms on an instance");
  roundtrip->add_option("file", file)->required();

  auto* liftcmd = app.add_subcommand("lift", "lift an arrow through a covering");
  liftcmd->add_option("file", file)->required();
  liftcmd->add_option("--arrow", arrow, "target arrow, comma-separated coordinates")
      ->required();
  liftcmd->add_option("--at", at, "source object, comma-separated coordinates")
      ->required();

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive enumeration");
  enumerate->add_option("--kind", enum_kind, "structure kind (leibniz)");
  enumerate->add_option("--dim", dim, "dimension")->required();
  enumerate->add_option("--p", p, "field characteristic")->required();

  auto* fixtures = app.add_subcommand("fixtures", "emit a named fixture document");
  fixtures->add_option("--name", name, "fixture name (omit to list)");

  // let --json appear after the subcommand as well
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message / help
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*semidir) return cmd_build_semidirect(file);
    if (*actgpd) return cmd_build_action_groupoid(file);
    if (*cdelta) return cmd_convert_delta(file);
    if (*ceta) return cmd_convert_eta(file);
    if (*ccov) return cmd_check_covering(file);
    if (*ccovx) return cmd_check_covering_xmod(file, file2, file3, file4);
    if (*roundtrip) return cmd_roundtrip(file);
    if (*liftcmd) return cmd_lift(file, arrow, at);
    if (*enumerate) return cmd_enumerate(enum_kind, dim, p);
    if (*fixtures) return cmd_fixtures(name);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
