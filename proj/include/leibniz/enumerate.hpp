#ifndef LEIBNIZ_ENUMERATE_HPP
#define LEIBNIZ_ENUMERATE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "leibniz/xmod.hpp"

namespace leibniz {

/// Raw residue arithmetic used by the brute-force oracles. These code
/// paths share nothing with the Scalar-based validators on purpose, so
/// the two can be compared against each other.
namespace oracle {

using RawTensor = std::vector<std::int64_t>;  // (i*n + j)*n + k over GF(p)
using RawVec = std::vector<std::int64_t>;

inline RawVec raw_bracket(const RawTensor& c, std::size_t n, std::int64_t p,
                          const RawVec& x, const RawVec& y) {
  RawVec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const std::int64_t xy = x[i] * y[j] % p;
      for (std::size_t k = 0; k < n; ++k)
        out[k] = (out[k] + xy * c[(i * n + j) * n + k]) % p;
    }
  }
  return out;
}

/// Naive check of [e_i,[e_j,e_l]] = [[e_i,e_j],e_l] - [[e_i,e_l],e_j]
/// on all basis triples.
inline bool leibniz_identity_holds(const RawTensor& c, std::size_t n, std::int64_t p) {
  const auto unit = [n](std::size_t i) {
    RawVec v(n, 0);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const RawVec lhs = raw_bracket(c, n, p, unit(i), raw_bracket(c, n, p, unit(j), unit(l)));
        const RawVec r1 = raw_bracket(c, n, p, raw_bracket(c, n, p, unit(i), unit(j)), unit(l));
        const RawVec r2 = raw_bracket(c, n, p, raw_bracket(c, n, p, unit(i), unit(l)), unit(j));
        for (std::size_t k = 0; k < n; ++k)
          if ((lhs[k] - (r1[k] - r2[k])) % p != 0) return false;
      }
  return true;
}

/// Extracts the residue tensor of a GF(p) algebra.
inline RawTensor raw_tensor(const LeibnizAlgebra& a) {
  RawTensor c(a.tensor().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.tensor()[i].res();
  return c;
}

/// Odometer over p^len tuples in lexicographic order (index 0 most
/// significant). Returns false once exhausted.
inline bool next_tuple(RawVec& t, std::int64_t p) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < p) return true;
    t[i] = 0;
  }
  return false;
}

/// The six Leibniz action axioms over raw residues; lambda is
/// (nl x nm x nm), rho is (nm x nl x nm).
inline bool action_axioms_hold(const RawTensor& cl, const RawTensor& cm,
                               const RawTensor& lambda, const RawTensor& rho,
                               std::size_t nl, std::size_t nm, std::int64_t p) {
  const auto left = [&](const RawVec& x, const RawVec& m) {
    RawVec out(nm, 0);
    for (std::size_t i = 0; i < nl; ++i)
      for (std::size_t j = 0; j < nm; ++j) {
        if (x[i] == 0 || m[j] == 0) continue;
        const std::int64_t xm = x[i] * m[j] % p;
        for (std::size_t k = 0; k < nm; ++k)
          out[k] = (out[k] + xm * lambda[(i * nm + j) * nm + k]) % p;
      }
    return out;
  };
  const auto right = [&](const RawVec& m, const RawVec& x) {
    RawVec out(nm, 0);
    for (std::size_t i = 0; i < nm; ++i)
      for (std::size_t j = 0; j < nl; ++j) {
        if (m[i] == 0 || x[j] == 0) continue;
        const std::int64_t mx = m[i] * x[j] % p;
        for (std::size_t k = 0; k < nm; ++k)
          out[k] = (out[k] + mx * rho[(i * nl + j) * nm + k]) % p;
      }
    return out;
  };
  const auto brl = [&](const RawVec& x, const RawVec& y) { return raw_bracket(cl, nl, p, x, y); };
  const auto brm = [&](const RawVec& x, const RawVec& y) { return raw_bracket(cm, nm, p, x, y); };
  const auto diff_eq = [&](const RawVec& a, const RawVec& b, const RawVec& c2) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if ((a[k] - (b[k] - c2[k])) % p != 0) return false;
    return true;
  };
  const auto ul = [nl](std::size_t i) { RawVec v(nl, 0); v[i] = 1; return v; };
  const auto um = [nm](std::size_t i) { RawVec v(nm, 0); v[i] = 1; return v; };
  for (std::size_t xi = 0; xi < nl; ++xi) {
    const RawVec x = ul(xi);
    for (std::size_t mi = 0; mi < nm; ++mi) {
      const RawVec m = um(mi);
      for (std::size_t ni = 0; ni < nm; ++ni) {
        const RawVec n = um(ni);
        if (!diff_eq(left(x, brm(m, n)), brm(left(x, m), n), brm(left(x, n), m)))
          return false;
        if (!diff_eq(brm(m, left(x, n)), brm(right(m, x), n), right(brm(m, n), x)))
          return false;
        if (!diff_eq(brm(m, right(n, x)), right(brm(m, n), x), brm(right(m, x), n)))
          return false;
      }
      for (std::size_t yi = 0; yi < nl; ++yi) {
        const RawVec y = ul(yi);
        if (!diff_eq(left(x, left(y, m)), left(brl(x, y), m), right(left(x, m), y)))
          return false;
        if (!diff_eq(left(x, right(m, y)), right(left(x, m), y), left(brl(x, y), m)))
          return false;
        if (!diff_eq(right(m, brl(x, y)), right(right(m, x), y), right(right(m, y), x)))
          return false;
      }
    }
  }
  return true;
}

}  // namespace oracle

struct LeibnizEnumeration {
  std::size_t total = 0;  // tensors examined
  std::vector<LeibnizAlgebra> algebras;
  std::size_t count() const { return algebras.size(); }
};

/// Exhaustive enumeration of all p^(n^3) structure-constant tensors of
/// dimension n over GF(p), filtered by the raw-residue identity oracle.
/// The bounds are hard caps so "exhaustive" stays honest.
inline LeibnizEnumeration enumerate_leibniz(std::size_t dim, std::int64_t p) {
  if (dim > 2) throw UsageError("enumerate_leibniz: dim must be <= 2");
  if (p != 2 && p != 3) throw UsageError("enumerate_leibniz: p must be 2 or 3");
  const FieldSpec f = FieldSpec::gf(p);
  LeibnizEnumeration out;
  oracle::RawVec t(dim * dim * dim, 0);
  bool more = true;
  while (more) {
    ++out.total;
    if (oracle::leibniz_identity_holds(t, dim, p)) {
      std::vector<Scalar> tensor(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) tensor[i] = f.from_int(t[i]);
      LeibnizAlgebra a = LeibnizAlgebra::candidate(f, dim, std::move(tensor));
      a.validate();
      out.algebras.push_back(std::move(a));
    }
    if (t.empty()) break;
    more = oracle::next_tuple(t, p);
  }
  return out;
}

/// Exhaustive enumeration of Leibniz actions of `actor` on `actee` over
/// GF(p). The lambda-only axioms (i) and (iv) prune the outer loop.
inline std::vector<LeibnizAction> enumerate_actions(const LeibnizAlgebra& actor,
                                                    const LeibnizAlgebra& actee,
                                                    double budget = 1 << 24) {
  if (actor.field().is_rational())
    throw UsageError("enumerate_actions: GF(p) only");
  if (!(actor.field() == actee.field()))
    throw UsageError("enumerate_actions: field mismatch");
  const std::int64_t p = actor.field().p();
  const std::size_t nl = actor.dim(), nm = actee.dim();
  const std::size_t cells = nl * nm * nm + nm * nl * nm;
  double space = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    space *= static_cast<double>(p);
    if (space > budget) throw UsageError("enumerate_actions: search space exceeds budget");
  }
  const oracle::RawTensor cl = oracle::raw_tensor(actor);
  const oracle::RawTensor cm = oracle::raw_tensor(actee);
  const FieldSpec& f = actor.field();
  std::vector<LeibnizAction> out;
  const oracle::RawTensor zero_rho(nm * nl * nm, 0);
  oracle::RawVec lam(nl * nm * nm, 0);
  bool more_l = true;
  while (more_l) {
    oracle::RawVec rho(nm * nl * nm, 0);
    bool more_r = true;
    while (more_r) {
      if (oracle::action_axioms_hold(cl, cm, lam, rho, nl, nm, p)) {
        std::vector<Scalar> ls(lam.size()), rs(rho.size());
        for (std::size_t i = 0; i < lam.size(); ++i) ls[i] = f.from_int(lam[i]);
        for (std::size_t i = 0; i < rho.size(); ++i) rs[i] = f.from_int(rho[i]);
        out.emplace_back(actor, actee, std::move(ls), std::move(rs));
      }
      if (rho.empty()) break;
      more_r = oracle::next_tuple(rho, p);
    }
    if (lam.empty()) break;
    more_l = oracle::next_tuple(lam, p);
  }
  return out;
}

/// Exhaustive enumeration of crossed modules (l1, l0, boundary, action)
/// over GF(p): every boundary matrix crossed with every valid action,
/// kept when the LXM conditions hold. Every output passes validate_xmod.
inline std::vector<CrossedModule> enumerate_xmods(const LeibnizAlgebra& l1,
                                                  const LeibnizAlgebra& l0,
                                                  double budget = 1 << 24) {
  if (l1.field().is_rational()) throw UsageError("enumerate_xmods: GF(p) only");
  const std::int64_t p = l1.field().p();
  const std::size_t n1 = l1.dim(), n0 = l0.dim();
  const std::size_t cells = n0 * n1 + n0 * n1 * n1 + n1 * n0 * n1;
  double space = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    space *= static_cast<double>(p);
    if (space > budget) throw UsageError("enumerate_xmods: search space exceeds budget");
  }
  const std::vector<LeibnizAction> actions = enumerate_actions(l0, l1, budget);
  const FieldSpec& f = l1.field();
  std::vector<CrossedModule> out;
  oracle::RawVec b(n0 * n1, 0);
  bool more = true;
  while (more) {
    Matrix boundary(f, n0, n1);
    for (std::size_t r = 0; r < n0; ++r)
      for (std::size_t c = 0; c < n1; ++c) boundary.at(r, c) = f.from_int(b[r * n1 + c]);
    const LinearMorphism d(l1, l0, boundary);
    if (check_morphism(d)) {
      for (const LeibnizAction& act : actions) {
        CrossedModule x(l1, l0, d, act);
        if (validate_xmod(x).all()) out.push_back(std::move(x));
      }
    }
    if (b.empty()) break;
    more = oracle::next_tuple(b, p);
  }
  return out;
}

}  // namespace leibniz

#endif
