#ifndef LEIBNIZ_FIELD_HPP
#define LEIBNIZ_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace leibniz {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Thrown on misuse of the library API (dimension mismatches, mixed
/// fields, malformed input). Distinct from "no solution" style results,
/// which are reported through return values.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal consistency guarantee is violated; indicates
/// a bug, not bad user input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// An exact field element: a reduced fraction over the rationals, or a
/// canonical residue in [0, p) over a prime field. Which mode applies is
/// determined by the FieldSpec of the containing object; Scalar itself
/// only remembers enough to compare and print.
class Scalar {
 public:
  Scalar() = default;

  static Scalar rational(BigRat v) {
    Scalar s;
    s.q_ = std::move(v);
    s.residue_mode_ = false;
    return s;
  }

  static Scalar residue(std::int64_t v) {
    Scalar s;
    s.r_ = v;
    s.residue_mode_ = true;
    return s;
  }

  bool is_residue() const { return residue_mode_; }

  const BigRat& rat() const {
    if (residue_mode_) throw InternalError("Scalar: rational access on residue");
    return q_;
  }

  std::int64_t res() const {
    if (!residue_mode_) throw InternalError("Scalar: residue access on rational");
    return r_;
  }

  bool is_zero() const { return residue_mode_ ? r_ == 0 : q_.is_zero(); }

  bool operator==(const Scalar& o) const {
    if (residue_mode_ != o.residue_mode_) return false;
    return residue_mode_ ? r_ == o.r_ : q_ == o.q_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical textual form: "n" or "n/d" with d > 1 for rationals,
  /// the decimal residue for prime fields.
  std::string str() const {
    if (residue_mode_) return std::to_string(r_);
    const BigInt num = boost::multiprecision::numerator(q_);
    const BigInt den = boost::multiprecision::denominator(q_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

 private:
  BigRat q_{};
  std::int64_t r_ = 0;
  bool residue_mode_ = false;
};

/// The ground field: the rationals or GF(p) for a prime p < 2^31.
/// All arithmetic on Scalars goes through here so the two modes cannot
/// be mixed silently.
class FieldSpec {
 public:
  enum class Kind { rational, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rational, 0); }

  static FieldSpec gf(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
      throw UsageError("FieldSpec: p must be a prime in [2, 2^31)");
    return FieldSpec(Kind::prime, p);
  }

  Kind kind() const { return kind_; }
  std::int64_t p() const { return p_; }
  bool is_rational() const { return kind_ == Kind::rational; }

  bool operator==(const FieldSpec& o) const = default;

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }

  Scalar from_int(std::int64_t n) const {
    if (kind_ == Kind::rational) return Scalar::rational(BigRat(n));
    std::int64_t r = n % p_;
    if (r < 0) r += p_;
    return Scalar::residue(r);
  }

  Scalar from_rat(const BigRat& q) const {
    if (kind_ == Kind::rational) return Scalar::rational(q);
    throw UsageError("FieldSpec: rational literal in a prime field");
  }

  Scalar add(const Scalar& a, const Scalar& b) const {
    check(a), check(b);
    if (kind_ == Kind::prime) return Scalar::residue((a.res() + b.res()) % p_);
    return Scalar::rational(a.rat() + b.rat());
  }

  Scalar sub(const Scalar& a, const Scalar& b) const {
    check(a), check(b);
    if (kind_ == Kind::prime) {
      std::int64_t r = (a.res() - b.res()) % p_;
      if (r < 0) r += p_;
      return Scalar::residue(r);
    }
    return Scalar::rational(a.rat() - b.rat());
  }

  Scalar neg(const Scalar& a) const { return sub(zero(), a); }

  Scalar mul(const Scalar& a, const Scalar& b) const {
    check(a), check(b);
    if (kind_ == Kind::prime) return Scalar::residue(a.res() * b.res() % p_);
    return Scalar::rational(a.rat() * b.rat());
  }

  Scalar inv(const Scalar& a) const {
    check(a);
    if (a.is_zero()) throw UsageError("FieldSpec: inverse of zero");
    if (kind_ == Kind::rational) return Scalar::rational(1 / a.rat());
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a.res();
    while (nr != 0) {
      const std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt, nt = tmp;
      tmp = r - q * nr;
      r = nr, nr = tmp;
    }
    if (t < 0) t += p_;
    return Scalar::residue(t);
  }

  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Strict parse of the canonical serialization. Rejects every
  /// non-canonical spelling ("2/4", "3/1", "-0", "+1", residues out of
  /// range or fractional).
  Scalar parse(const std::string& text) const {
    if (text.empty()) throw UsageError("scalar: empty string");
    std::size_t pos = 0;
    const bool negative = text[0] == '-';
    if (negative) pos = 1;
    const auto digits_ok = [&](std::size_t from, std::size_t to) {
      if (from >= to) return false;
      for (std::size_t i = from; i < to; ++i)
        if (text[i] < '0' || text[i] > '9') return false;
      // no leading zero unless the number is exactly "0"
      return !(to - from > 1 && text[from] == '0');
    };
    const std::size_t slash = text.find('/');
    if (kind_ == Kind::prime) {
      if (negative || slash != std::string::npos || !digits_ok(0, text.size()))
        throw UsageError("scalar: not a canonical residue: " + text);
      BigInt v(text);
      if (v >= p_) throw UsageError("scalar: residue out of range: " + text);
      return Scalar::residue(static_cast<std::int64_t>(v));
    }
    if (slash == std::string::npos) {
      if (!digits_ok(pos, text.size()))
        throw UsageError("scalar: not a canonical integer: " + text);
      BigInt n(text);
      if (negative && n == 0) throw UsageError("scalar: '-0' is not canonical");
      return Scalar::rational(BigRat(n));
    }
    if (!digits_ok(pos, slash) || !digits_ok(slash + 1, text.size()))
      throw UsageError("scalar: not a canonical fraction: " + text);
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den <= 1) throw UsageError("scalar: non-canonical denominator: " + text);
    if (boost::multiprecision::gcd(boost::multiprecision::abs(num), den) != 1)
      throw UsageError("scalar: fraction not reduced: " + text);
    return Scalar::rational(BigRat(num, den));
  }

 private:
  FieldSpec(Kind k, std::int64_t p) : kind_(k), p_(p) {}

  void check(const Scalar& s) const {
    if (s.is_residue() != (kind_ == Kind::prime))
      throw UsageError("Scalar does not belong to this field");
  }

  Kind kind_;
  std::int64_t p_;
};

}  // namespace leibniz

#endif
