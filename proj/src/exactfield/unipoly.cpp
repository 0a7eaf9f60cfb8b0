#include "resweil/unipoly.hpp"

#include <sstream>

#include "resweil/error.hpp"

namespace resweil {

UniPoly::UniPoly(Field field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  normalize();
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Field& f, const FieldElement& c) { return UniPoly(f, {c}); }

UniPoly UniPoly::monomial(const Field& f, const FieldElement& c, std::size_t k) {
  std::vector<FieldElement> v(k + 1);
  v[k] = c;
  return UniPoly(f, std::move(v));
}

bool UniPoly::is_one() const { return coeffs_.size() == 1 && field_.is_one(coeffs_[0]); }

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scale(field_.inv(leading()));
}

UniPoly UniPoly::scale(const FieldElement& c) const {
  std::vector<FieldElement> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.mul(coeffs_[i], c);
  return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(field_);
  std::vector<FieldElement> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = field_.mul(coeffs_[i], field_.from_int(static_cast<std::int64_t>(i)));
  return UniPoly(field_, std::move(v));
}

FieldElement UniPoly::eval(const FieldElement& x) const {
  FieldElement acc = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  const Field& f = a.field();
  std::vector<FieldElement> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
  return UniPoly(f, std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  const Field& f = a.field();
  std::vector<FieldElement> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
  return UniPoly(f, std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return UniPoly(f);
  std::vector<FieldElement> v(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (f.is_zero(a.coeffs()[i])) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      v[i + j] = f.add(v[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return UniPoly(f, std::move(v));
}

int UniPoly::compare(const UniPoly& other) const {
  if (degree() != other.degree()) return degree() < other.degree() ? -1 : 1;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const int c = field_.compare(coeffs_[i], other.coeffs_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const FieldElement& c = coeffs_[k];
    if (field_.is_zero(c)) continue;
    std::string cs;
    bool negative = false;
    if (field_.is_prime_field()) {
      std::int64_t v = field_.signed_value(c);
      negative = v < 0;
      cs = std::to_string(negative ? -v : v);
    } else {
      cs = "(" + field_.to_string(c) + ")";
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = cs == "1";
    if (k == 0) {
      os << cs;
    } else {
      if (!unit) os << cs << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {UniPoly(f), a};
  std::vector<FieldElement> rem = a.coeffs();
  std::vector<FieldElement> quo(a.coeffs().size() - b.coeffs().size() + 1);
  const FieldElement lead_inv = f.inv(b.leading());
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (f.is_zero(rem[k])) continue;
    const FieldElement c = f.mul(rem[k], lead_inv);
    quo[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = f.sub(rem[k - db + i], f.mul(c, b.coeffs()[i]));
  }
  rem.resize(db);
  return {UniPoly(f, std::move(quo)), UniPoly(f, std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
  const Field& f = a.field();
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(f, f.one()), s1(f);
  UniPoly t0(f), t1 = UniPoly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElement c = f.inv(r0.leading());
  return {r0.scale(c), s0.scale(c), t0.scale(c)};
}

UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& mod) { return (a * b) % mod; }

UniPoly powmod(UniPoly a, BigInt e, const UniPoly& mod) {
  UniPoly r = UniPoly::constant(a.field(), a.field().one()) % mod;
  a = a % mod;
  while (e > 0) {
    if ((e & 1) != 0) r = mulmod(r, a, mod);
    e >>= 1;
    if (e > 0) a = mulmod(a, a, mod);
  }
  return r;
}

UniPoly powmod(const UniPoly& a, std::uint64_t e, const UniPoly& mod) { return powmod(a, BigInt(e), mod); }

UniPoly frobenius_powmod(UniPoly a, unsigned k, const UniPoly& mod) {
  const unsigned steps = k * a.field().degree();
  const std::uint64_t p = a.field().characteristic();
  a = a % mod;
  for (unsigned i = 0; i < steps; ++i) a = powmod(a, p, mod);
  return a;
}

BigInt field_order(const Field& f) {
  BigInt q = 1;
  for (unsigned i = 0; i < f.degree(); ++i) q *= f.characteristic();
  return q;
}

}  // namespace resweil
