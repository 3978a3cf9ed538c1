// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Each criterion is self-contained and wall-clock limited as stated.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "leibniz/leibniz.hpp"

using namespace leibniz;
namespace fs = std::filesystem;

namespace {

struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why = msg;
    }
  }
};

// ---- shared instance suite ------------------------------------------------

// GF(p) algebra representatives of dimension <= 2: everything the
// exhaustive enumeration accepts.
std::vector<LeibnizAlgebra> small_algebras(std::int64_t p) {
  std::vector<LeibnizAlgebra> out;
  for (std::size_t dim : {std::size_t{1}, std::size_t{2}}) {
    for (LeibnizAlgebra& a : enumerate_leibniz(dim, p).algebras)
      out.push_back(std::move(a));
  }
  return out;
}

double action_space(const LeibnizAlgebra& actor, const LeibnizAlgebra& actee) {
  const std::size_t cells = actor.dim() * actee.dim() * actee.dim() +
                            actee.dim() * actor.dim() * actee.dim();
  double space = 1;
  for (std::size_t i = 0; i < cells; ++i) space *= static_cast<double>(actor.field().p());
  return space;
}

std::vector<LeibnizAction> suite_actions() {
  std::vector<LeibnizAction> out;
  // rational fixture actions
  out.push_back(LeibnizAction::by_bracket(fixtures::a2()));
  out.push_back(LeibnizAction::by_bracket(fixtures::ab(2)));
  out.push_back(LeibnizAction::trivial(fixtures::a2(), fixtures::ab(2)));
  out.push_back(LeibnizAction::trivial(fixtures::ab(2), fixtures::a2()));
  // every enumerated action between enumerated algebras of dim <= 2
  for (std::int64_t p : {std::int64_t{2}, std::int64_t{3}}) {
    const auto algebras = small_algebras(p);
    for (const LeibnizAlgebra& actor : algebras)
      for (const LeibnizAlgebra& actee : algebras) {
        if (action_space(actor, actee) > double(1 << 24)) continue;
        for (LeibnizAction& a : enumerate_actions(actor, actee))
          out.push_back(std::move(a));
      }
  }
  return out;
}

std::vector<CrossedModule> suite_xmods() {
  std::vector<CrossedModule> out;
  const auto algebras = small_algebras(2);
  for (const LeibnizAlgebra& l1 : algebras)
    for (const LeibnizAlgebra& l0 : algebras)
      for (CrossedModule& x : enumerate_xmods(l1, l0))
        out.push_back(std::move(x));
  return out;
}

// ---- criteria -------------------------------------------------------------

Check criterion1() {
  Check c;
  for (std::size_t dim : {std::size_t{1}, std::size_t{2}}) {
    const FieldSpec f = FieldSpec::gf(2);
    oracle::RawVec t(dim * dim * dim, 0);
    std::size_t total = 0, accepted = 0;
    bool more = true;
    while (more) {
      ++total;
      std::vector<Scalar> tensor(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) tensor[i] = f.from_int(t[i]);
      const bool validator =
          LeibnizAlgebra::candidate(f, dim, std::move(tensor)).validate().leibniz_ok;
      const bool oracle_says = oracle::leibniz_identity_holds(t, dim, 2);
      c.require(validator == oracle_says, "validator/oracle disagreement");
      if (validator) ++accepted;
      more = oracle::next_tuple(t, 2);
    }
    c.require(total == (dim == 1 ? 2 : 256), "tensor count");
    if (dim == 1) c.require(accepted == 1, "dim-1 passing count");
  }
  return c;
}

Check criterion2(const std::vector<LeibnizAction>& actions,
                 std::vector<SplitExtension>& extensions_out) {
  Check c;
  for (const LeibnizAction& a : actions) {
    auto [alg, ext] = semidirect(a);
    (void)alg;
    c.require(validate_split_extension(ext), "semidirect extension invalid");
    const LeibnizAction back = derived_action(ext);
    c.require(validate_action(back).all(), "derived action fails an axiom");
    c.require(back == a, "derived action does not round-trip the tensors");
    extensions_out.push_back(std::move(ext));
  }
  c.require(!extensions_out.empty(), "empty instance suite");
  return c;
}

Check criterion3(const std::vector<SplitExtension>& extensions) {
  Check c;
  for (const SplitExtension& e : extensions) {
    const ExtensionIso iso = extension_iso(e);
    c.require(check_morphism(iso.to_middle), "theta is not a morphism");
    c.require(check_morphism(iso.from_middle), "theta inverse is not a morphism");
    const FieldSpec& f = e.middle_alg.field();
    const std::size_t n = e.middle_alg.dim();
    c.require(iso.to_middle.matrix.mul(iso.from_middle.matrix) ==
                  Matrix::identity(f, n),
              "theta . theta^-1 != id");
    c.require(iso.from_middle.matrix.mul(iso.to_middle.matrix) ==
                  Matrix::identity(f, n),
              "theta^-1 . theta != id");
  }
  return c;
}

Check check_groupoid_laws(const InternalGroupoid& g, Check& c) {
  const FieldSpec& f = g.arrows.field();
  const GroupoidReport rep = validate_groupoid(g);
  c.require(rep.maps_ok, "d0/d1/eps not morphisms");
  c.require(rep.sections_ok, "d eps != id");
  c.require(rep.kernel_bracket_ok, "[ker d0, ker d1] != 0");
  c.require(rep.interchange_ok, "bracket interchange fails");

  // inverse is a linear morphism: eps d0 - id + eps d1
  const std::size_t n = g.arrows.dim();
  Matrix inv_map(f, n, n);
  const Matrix e0 = g.eps.mul(g.d0), e1 = g.eps.mul(g.d1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col)
      inv_map.at(r, col) = f.add(f.sub(e0.at(r, col), Matrix::identity(f, n).at(r, col)),
                                 e1.at(r, col));
  c.require(check_morphism(LinearMorphism(g.arrows, g.arrows, inv_map)),
            "inverse map is not a morphism");

  // both composition-by-addition forms, unit and inverse laws, additive
  // interchange, on a basis of the composable-pair space
  const Subspace pb = pullback_basis(g.d0, g.d1);
  const auto split = [n](const Vec& w) {
    return std::pair<Vec, Vec>(Vec(w.begin(), w.begin() + std::ptrdiff_t(n)),
                               Vec(w.begin() + std::ptrdiff_t(n), w.end()));
  };
  for (const Vec& w : pb.basis()) {
    const auto [h, k] = split(w);
    const Vec hk = compose(g, h, k);
    c.require(hk == add(f, sub(f, k, g.eps.apply(g.d1.apply(k))), h),
              "the two composition formulas disagree");
    c.require(g.d0.apply(hk) == g.d0.apply(k) && g.d1.apply(hk) == g.d1.apply(h),
              "composite endpoints wrong");
    const Vec hinv = inverse(g, h);
    c.require(compose(g, hinv, h) == g.eps.apply(g.d0.apply(h)),
              "g^-1 o g != identity arrow");
    c.require(compose(g, h, hinv) == g.eps.apply(g.d1.apply(h)),
              "g o g^-1 != identity arrow");
    c.require(compose(g, h, g.eps.apply(g.d0.apply(h))) == h, "right unit fails");
    c.require(compose(g, g.eps.apply(g.d1.apply(h)), h) == h, "left unit fails");
    for (const Vec& w2 : pb.basis()) {
      const auto [h2, k2] = split(w2);
      c.require(add(f, compose(g, h, k), compose(g, h2, k2)) ==
                    compose(g, add(f, h, h2), add(f, k, k2)),
                "additive interchange fails");
    }
  }

  // ker d0 is an ideal
  c.require(is_ideal(g.arrows, kernel_image(g.d0).first), "ker d0 is not an ideal");
  return c;
}

Check criterion4(const std::vector<CrossedModule>& xmods) {
  Check c;
  check_groupoid_laws(fixtures::pair_gpd_a2(), c);
  check_groupoid_laws(fixtures::one_obj_ab2(), c);
  for (const CrossedModule& x : xmods) check_groupoid_laws(delta(x), c);
  return c;
}

Check criterion5(const std::vector<CrossedModule>& xmods) {
  Check c;
  std::vector<CrossedModule> instances = xmods;
  instances.push_back(fixtures::idx_a2());
  for (const CrossedModule& x : instances) {
    const XModMorphism m = roundtrip_eta_delta(x);
    c.require(validate_xmod_morphism(m), "eta delta roundtrip not a morphism");
    c.require(is_bijective(m.f1.matrix) && is_bijective(m.f0.matrix),
              "eta delta roundtrip not an isomorphism");
  }
  for (const InternalGroupoid& g :
       {fixtures::pair_gpd_a2(), fixtures::one_obj_ab2()}) {
    const GroupoidMorphism m = roundtrip_delta_eta(g);
    c.require(validate_gpd_morphism(m), "delta eta roundtrip not a functor");
    c.require(is_bijective(m.on_arrows) && is_bijective(m.on_objects),
              "delta eta roundtrip not an isomorphism");
  }
  for (const CrossedModule& x : xmods) {
    const GroupoidMorphism m = roundtrip_delta_eta(delta(x));
    c.require(validate_gpd_morphism(m) && is_bijective(m.on_arrows) &&
                  is_bijective(m.on_objects),
              "delta eta roundtrip fails on a delta image");
  }
  return c;
}

std::vector<GroupoidMorphism> suite_coverings() {
  std::vector<GroupoidMorphism> out;
  out.push_back(GroupoidMorphism::identity(fixtures::pair_gpd_a2()));
  out.push_back(GroupoidMorphism::identity(fixtures::one_obj_ab2()));
  for (const InternalGroupoid& g :
       {fixtures::pair_gpd_a2(), fixtures::one_obj_ab2()}) {
    auto [ag, q] = action_groupoid(GroupoidAction::canonical(g));
    (void)ag;
    out.push_back(std::move(q));
  }
  return out;
}

Check criterion6(const std::vector<GroupoidMorphism>& coverings) {
  Check c;
  for (const GroupoidMorphism& p : coverings) {
    c.require(check_covering(p), "expected covering rejected");
    const GroupoidAction a = covering_to_action(p);
    c.require(validate_gpd_action(a).all(), "induced action fails A1-A3/interchange");
    const GroupoidMorphism iso = roundtrip_cov_action(p);
    c.require(validate_gpd_morphism(iso) && is_bijective(iso.on_arrows) &&
                  is_bijective(iso.on_objects),
              "source is not isomorphic to the action groupoid over the base");
  }
  // canonical action: G |x Ob(G) is isomorphic to G itself
  for (const InternalGroupoid& g :
       {fixtures::pair_gpd_a2(), fixtures::one_obj_ab2()}) {
    auto [ag, q] = action_groupoid(GroupoidAction::canonical(g));
    c.require(ag.arrows.dim() == g.arrows.dim() && is_bijective(q.on_arrows) &&
                  is_bijective(q.on_objects),
              "canonical action groupoid differs from G");
  }
  return c;
}

Check criterion7(const std::vector<GroupoidMorphism>& coverings) {
  Check c;
  for (const GroupoidMorphism& p : coverings) {
    const CoveringXModMorphism cx = gpd_cov_to_xmod_cov(p);
    c.require(check_covering_xmod(cx.morphism),
              "image of a covering rejected by check_covering_xmod");
    const GroupoidMorphism back = xmod_cov_to_gpd_cov(cx);
    c.require(check_covering(back), "reconstructed groupoid morphism not a covering");
    c.require(back.source.arrows.dim() == p.source.arrows.dim() &&
                  back.target.arrows.dim() == p.target.arrows.dim(),
              "roundtrip changed the isomorphism type");
  }
  // negative control: a non-bijective top component is rejected
  const LeibnizAlgebra ab2 = fixtures::ab(2);
  const CrossedModule trivial(ab2, ab2, LinearMorphism::zero(ab2, ab2),
                              LeibnizAction::trivial(ab2, ab2));
  const XModMorphism collapse{trivial, trivial, LinearMorphism::zero(ab2, ab2),
                              LinearMorphism::identity(ab2)};
  c.require(!check_covering_xmod(collapse), "non-covering accepted");
  return c;
}

Check criterion8(const std::vector<CrossedModule>& xmods) {
  Check c;
  std::vector<CrossedModule> instances = xmods;
  instances.push_back(fixtures::idx_a2());
  std::size_t abelian_count = 0;
  for (const CrossedModule& x : instances)
    if (kernel_of_boundary(x).second) ++abelian_count;
  c.require(abelian_count == instances.size(),
            "a validated crossed module has a non-abelian boundary kernel");
  return c;
}

Check criterion9() {
  Check c;
  const LeibnizEnumeration e = enumerate_leibniz(2, 2);
  c.require(e.total == 256, "did not cover all 256 tensors");
  c.require(e.count() == 13, "frozen regression count 13 not reproduced");
  return c;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(LEIBNIZ_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string cli_output(const std::string& args) {
  const std::string cmd = std::string(LEIBNIZ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

Check criterion10() {
  Check c;
  // shipped fixture documents are canonical on disk
  std::size_t shipped = 0;
  for (const auto& entry : fs::directory_iterator(LEIBNIZ_FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++shipped;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    c.require(serialize(parse_document(text)) == text,
              "shipped fixture is not byte-canonical: " + entry.path().string());
  }
  c.require(shipped == all_fixtures().size(), "fixture file count mismatch");

  // convert/build outputs re-validate with exit 0 through the real CLI
  const fs::path dir = fs::temp_directory_path() / "leibniz_acceptance";
  fs::create_directories(dir);
  const auto write = [&](const std::string& name, const std::string& text) {
    const fs::path p = dir / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  };
  const auto revalidates = [&](const std::string& build_args) {
    const std::string out = cli_output(build_args);
    if (out.empty()) return false;
    const std::string path = write("out.json", out);
    return run_cli("validate " + path) == 0;
  };
  const std::string idx = write("idx.json", serialize(fixture("IdX(A2)")));
  const std::string gpd = write("gpd.json", serialize(fixture("PairGpd(A2)")));
  const std::string act = write(
      "act.json", serialize(Document{DocKind::action, kSchemaVersion,
                                     LeibnizAction::by_bracket(fixtures::a2())}));
  const std::string gact = write(
      "gact.json",
      serialize(Document{DocKind::gpd_action, kSchemaVersion,
                         GroupoidAction::canonical(fixtures::pair_gpd_a2())}));
  c.require(revalidates("convert delta " + idx), "convert delta output");
  c.require(revalidates("convert eta " + gpd), "convert eta output");
  c.require(revalidates("build semidirect " + act), "build semidirect output");
  c.require(revalidates("build action-groupoid " + gact), "build action-groupoid output");
  return c;
}

}  // namespace

int main() {
  struct Item {
    int number;
    std::string name;
    double budget_s;
    std::function<Check()> run;
  };

  std::vector<LeibnizAction> actions;
  std::vector<SplitExtension> extensions;
  std::vector<CrossedModule> xmods;
  std::vector<GroupoidMorphism> coverings;

  const std::vector<Item> items = {
      {1, "oracle agreement", 1.0, [] { return criterion1(); }},
      {2, "derived-action soundness", 30.0,
       [&] {
         actions = suite_actions();
         return criterion2(actions, extensions);
       }},
      {3, "theta isomorphism", 30.0, [&] { return criterion3(extensions); }},
      {4, "groupoid laws", 30.0,
       [&] {
         xmods = suite_xmods();
         return criterion4(xmods);
       }},
      {5, "LX equivalence roundtrips", 60.0, [&] { return criterion5(xmods); }},
      {6, "covering/action equivalence", 30.0,
       [&] {
         coverings = suite_coverings();
         return criterion6(coverings);
       }},
      {7, "covering crossed modules", 30.0, [&] { return criterion7(coverings); }},
      {8, "ker boundary abelian", 30.0, [&] { return criterion8(xmods); }},
      {9, "regression count", 5.0, [] { return criterion9(); }},
      {10, "CLI determinism", 30.0, [] { return criterion10(); }},
  };

  bool all_ok = true;
  for (const Item& item : items) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = item.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > item.budget_s) {
      c.ok = false;
      c.why = "runtime budget exceeded";
    }
    std::printf("criterion %2d (%s): %s (%.2fs)%s%s\n", item.number,
                item.name.c_str(), c.ok ? "PASS" : "FAIL", elapsed,
                c.ok ? "" : " -- ", c.ok ? "" : c.why.c_str());
    all_ok = all_ok && c.ok;
  }
  return all_ok ? 0 : 1;
}
