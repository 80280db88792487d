#include "cayley/rings.hpp"

#include <cctype>
#include <utility>

namespace cayley {
namespace {

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  // Trial division; moduli here are desk scale.
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Returns g = gcd(a, n) and x with a*x = g (mod n).
Int egcd_mod(const Int& a, const Int& n, Int& x) {
  Int old_r = a, r = n, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = std::exchange(r, t);
    t = old_s - q * s;
    old_s = std::exchange(s, t);
  }
  x = old_s;
  return old_r;
}

Int parse_int(std::string_view text, const char* what) {
  size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size()) fail(Errc::parse_error, std::string(what) + ": empty integer");
  Int v = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      fail(Errc::parse_error,
           std::string(what) + ": bad character '" + text[i] + "' in \"" + std::string(text) + "\"");
    v = v * 10 + (text[i] - '0');
  }
  return neg ? Int(-v) : v;
}

}  // namespace

RingSpec RingSpec::mod_ring(const Int& n) {
  if (n < 2) fail(Errc::parse_error, "Z/n requires n >= 2, got n = " + n.str());
  return {RingKind::mod_ring, n};
}

RingSpec RingSpec::prime_field(const Int& p) {
  if (!is_probable_prime(p))
    fail(Errc::parse_error, "F" + p.str() + ": " + p.str() + " is not prime");
  return {RingKind::prime_field, p};
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "Z/")
    return mod_ring(parse_int(text.substr(2), "Z/<n>"));
  if (text.size() > 1 && text[0] == 'F')
    return prime_field(parse_int(text.substr(1), "F<p>"));
  fail(Errc::parse_error,
       "unrecognized ring spec \"" + std::string(text) + "\" (expected Z, Q, Z/<n>, F<p>)");
}

Int RingSpec::cardinality() const {
  if (!is_finite()) fail(Errc::infinite_ring, str() + " is infinite");
  return modulus_;
}

bool RingSpec::two_is_unit() const {
  switch (kind_) {
    case RingKind::integers: return false;
    case RingKind::rationals: return true;
    case RingKind::mod_ring:
    case RingKind::prime_field: return modulus_ % 2 != 0;
  }
  return false;
}

std::string RingSpec::str() const {
  switch (kind_) {
    case RingKind::integers: return "Z";
    case RingKind::rationals: return "Q";
    case RingKind::mod_ring: return "Z/" + modulus_.str();
    case RingKind::prime_field: return "F" + modulus_.str();
  }
  return "?";
}

RingElem::RingElem(RingSpec spec, Int value)
    : spec_(std::move(spec)), num_(std::move(value)), den_(1) {
  canonicalize();
}

RingElem RingElem::fraction(const RingSpec& spec, Int num, Int den) {
  if (den == 0) fail(Errc::parse_error, "zero denominator");
  if (spec.kind() == RingKind::rationals) {
    RingElem e(spec, std::move(num), std::move(den));
    e.canonicalize();
    return e;
  }
  // Over other rings a fraction is sugar for num * den^-1.
  return RingElem(spec, std::move(num)) * RingElem(spec, std::move(den)).inv();
}

void RingElem::canonicalize() {
  switch (spec_.kind()) {
    case RingKind::integers:
      den_ = 1;
      break;
    case RingKind::rationals: {
      if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
      }
      Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
      if (g > 1) {
        num_ /= g;
        den_ /= g;
      }
      if (num_ == 0) den_ = 1;
      break;
    }
    case RingKind::mod_ring:
    case RingKind::prime_field: {
      num_ %= spec_.modulus();
      if (num_ < 0) num_ += spec_.modulus();
      den_ = 1;
      break;
    }
  }
}

RingElem RingElem::parse(const RingSpec& spec, std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return RingElem(spec, parse_int(text, "element"));
  Int num = parse_int(text.substr(0, slash), "numerator");
  Int den = parse_int(text.substr(slash + 1), "denominator");
  if (den == 0) fail(Errc::parse_error, "zero denominator in \"" + std::string(text) + "\"");
  return fraction(spec, std::move(num), std::move(den));
}

bool RingElem::is_unit() const {
  switch (spec_.kind()) {
    case RingKind::integers: return num_ == 1 || num_ == -1;
    case RingKind::rationals: return num_ != 0;
    case RingKind::prime_field: return num_ != 0;
    case RingKind::mod_ring:
      return boost::multiprecision::gcd(num_, spec_.modulus()) == 1;
  }
  return false;
}

RingElem RingElem::inv() const {
  switch (spec_.kind()) {
    case RingKind::integers:
      if (num_ == 1 || num_ == -1) return *this;
      fail(Errc::not_a_unit, num_.str() + " is not a unit in Z");
    case RingKind::rationals: {
      if (num_ == 0) fail(Errc::not_a_unit, "0 is not a unit in Q");
      RingElem r(spec_, den_, num_);
      r.canonicalize();
      return r;
    }
    case RingKind::mod_ring:
    case RingKind::prime_field: {
      Int x;
      Int g = egcd_mod(num_, spec_.modulus(), x);
      if (g != 1)
        fail(Errc::not_a_unit, num_.str() + " is not a unit in " + spec_.str());
      return RingElem(spec_, std::move(x));
    }
  }
  fail(Errc::not_a_unit, "bad ring kind");
}

std::string RingElem::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  if (a.ring().kind() == RingKind::rationals)
    return RingElem::fraction(a.ring(), a.num() * b.den() + b.num() * a.den(),
                              a.den() * b.den());
  return RingElem(a.ring(), a.num() + b.num());
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  if (a.ring().kind() == RingKind::rationals)
    return RingElem::fraction(a.ring(), a.num() * b.den() - b.num() * a.den(),
                              a.den() * b.den());
  return RingElem(a.ring(), a.num() - b.num());
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  if (a.ring().kind() == RingKind::rationals)
    return RingElem::fraction(a.ring(), a.num() * b.num(), a.den() * b.den());
  return RingElem(a.ring(), a.num() * b.num());
}

RingElem operator-(const RingElem& a) {
  if (a.ring().kind() == RingKind::rationals)
    return RingElem::fraction(a.ring(), -a.num(), a.den());
  return RingElem(a.ring(), -a.num());
}

std::strong_ordering RingElem::operator<=>(const RingElem& b) const {
  require_same_ring(*this, b);
  // Canonical forms make cross-multiplication exact (den > 0, or den = 1).
  Int lhs = num_ * b.den_;
  Int rhs = b.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<RingElem> ring_enumerate(const RingSpec& spec) {
  Int n = spec.cardinality();
  std::vector<RingElem> out;
  out.reserve(static_cast<size_t>(n));
  for (Int v = 0; v < n; ++v) out.emplace_back(spec, v);
  return out;
}

std::vector<RingElem> ring_units(const RingSpec& spec) {
  std::vector<RingElem> out;
  for (auto& e : ring_enumerate(spec))
    if (e.is_unit()) out.push_back(e);
  return out;
}

}  // namespace cayley
