#include "resweil/field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "resweil/error.hpp"
#include "resweil/factor.hpp"
#include "resweil/unipoly.hpp"

namespace resweil {

struct Field::Impl {
  std::uint32_t p = 0;
  unsigned m = 1;
  std::vector<std::uint32_t> modulus;
  // frob_cols[i] = (z^i)^p
  std::vector<FieldElement> frob_cols;
};

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_tuple(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_tuple(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void check_characteristic(std::uint64_t p) {
  if (p <= 2 || p >= kMaxCharacteristic || !is_prime(p)) {
    throw Error(ErrorKind::NonPrime,
                "characteristic " + std::to_string(p) + " is not an odd prime below 2^31");
  }
}

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

Field Field::prime(std::uint64_t p) {
  check_characteristic(p);
  static std::map<std::uint64_t, std::shared_ptr<const Impl>> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find(p);
  if (it != cache.end()) return Field(it->second);
  auto impl = std::make_shared<Impl>();
  impl->p = static_cast<std::uint32_t>(p);
  impl->m = 1;
  impl->modulus = {0, 1};
  FieldElement one;
  one[0] = 1;
  impl->frob_cols = {one};
  cache.emplace(p, impl);
  return Field(impl);
}

Field Field::extension(std::uint64_t p, unsigned m) {
  check_characteristic(p);
  if (m < 1 || m > kMaxExtensionDegree) {
    throw Error(ErrorKind::DegreeGuardExceeded,
                "extension degree " + std::to_string(m) + " outside [1, " +
                    std::to_string(kMaxExtensionDegree) + "]");
  }
  if (m == 1) return prime(p);

  static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const Impl>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find({p, m});
    if (it != cache.end()) return Field(it->second);
  }

  const Field fp = prime(p);
  std::vector<std::uint32_t> modulus;
  for (std::uint64_t index = 0;; ++index) {
    std::vector<FieldElement> coeffs(m + 1);
    std::uint64_t rest = index;
    for (unsigned i = 0; i < m; ++i) {
      coeffs[i][0] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (rest != 0) throw Error(ErrorKind::Internal, "modulus search overflow");
    if (coeffs[0][0] == 0) continue;
    coeffs[m] = fp.one();
    UniPoly candidate(fp, coeffs);
    if (is_irreducible(candidate)) {
      for (const auto& c : coeffs) modulus.push_back(c[0]);
      break;
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->p = static_cast<std::uint32_t>(p);
  impl->m = m;
  impl->modulus = modulus;
  const Field partial(impl);
  const FieldElement zp = partial.pow(partial.generator(), p);
  impl->frob_cols.resize(m);
  impl->frob_cols[0] = partial.one();
  for (unsigned i = 1; i < m; ++i) impl->frob_cols[i] = partial.mul(impl->frob_cols[i - 1], zp);

  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = cache.emplace(std::make_pair(p, m), impl);
  return Field(it->second);
}

Field make_ext_field(std::uint64_t p, unsigned m) { return Field::extension(p, m); }

std::uint32_t Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->m; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }

std::optional<std::uint64_t> Field::order() const {
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < impl_->m; ++i) {
    q *= impl_->p;
    if (q >> 62) return std::nullopt;
  }
  return static_cast<std::uint64_t>(q);
}

FieldElement Field::one() const {
  FieldElement r;
  r[0] = 1;
  return r;
}

FieldElement Field::from_int(std::int64_t v) const {
  const std::int64_t p = impl_->p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  FieldElement e;
  e[0] = static_cast<std::uint32_t>(r);
  return e;
}

FieldElement Field::generator() const {
  if (impl_->m == 1) return FieldElement{};
  FieldElement e;
  e[1] = 1;
  return e;
}

bool Field::is_prime_subfield_element(const FieldElement& a) const {
  for (unsigned i = 1; i < impl_->m; ++i)
    if (a[i] != 0) return false;
  return true;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r;
  const std::uint32_t p = impl_->p;
  for (unsigned i = 0; i < impl_->m; ++i) {
    std::uint32_t s = a[i] + b[i];
    r[i] = s >= p ? s - p : s;
  }
  return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r;
  const std::uint32_t p = impl_->p;
  for (unsigned i = 0; i < impl_->m; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
  return r;
}

FieldElement Field::neg(const FieldElement& a) const { return sub(FieldElement{}, a); }

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  const std::uint64_t p = impl_->p;
  const unsigned m = impl_->m;
  FieldElement r;
  if (m == 1) {
    r[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p);
    return r;
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
  for (unsigned i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
  }
  const auto& mod = impl_->modulus;
  for (unsigned k = 2 * m - 2; k >= m; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < m; ++i) {
      // subtract c * mod[i] at position k - m + i
      prod[k - m + i] = (prod[k - m + i] + (p - c) * mod[i]) % p;
    }
  }
  for (unsigned i = 0; i < m; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) throw Error(ErrorKind::ZeroPolynomial, "inverse of zero in " + name());
  const std::uint32_t p = impl_->p;
  const unsigned m = impl_->m;
  if (m == 1) {
    FieldElement r;
    r[0] = inv_mod(a[0], p);
    return r;
  }
  // Extended Euclid on F_p[z]: find s with s*a = 1 mod modulus.
  using Poly = std::vector<std::uint32_t>;
  auto trim = [](Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  };
  auto sub_scaled = [p](Poly& f, const Poly& g, std::uint32_t c, std::size_t shift) {
    if (f.size() < g.size() + shift) f.resize(g.size() + shift, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t t = static_cast<std::uint64_t>(c) * g[i] % p;
      f[i + shift] = static_cast<std::uint32_t>((f[i + shift] + p - t) % p);
    }
  };
  Poly r0(impl_->modulus.begin(), impl_->modulus.end());
  Poly r1(m);
  for (unsigned i = 0; i < m; ++i) r1[i] = a[i];
  trim(r1);
  Poly s0, s1{1};
  while (!r1.empty()) {
    // r0 = q*r1 + rem, s0 - q*s1
    Poly q;
    const std::uint32_t lead_inv = inv_mod(r1.back(), p);
    while (r0.size() >= r1.size() && !r0.empty()) {
      const std::size_t shift = r0.size() - r1.size();
      const std::uint32_t c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r0.back()) * lead_inv % p);
      if (q.size() < shift + 1) q.resize(shift + 1, 0);
      q[shift] = c;
      sub_scaled(r0, r1, c, shift);
      trim(r0);
    }
    // s_new = s0 - q*s1
    Poly prod(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(q[i]) * s1[j]) % p);
    Poly s_new = s0;
    if (s_new.size() < prod.size()) s_new.resize(prod.size(), 0);
    for (std::size_t i = 0; i < prod.size(); ++i) s_new[i] = (s_new[i] + p - prod[i]) % p;
    trim(s_new);
    std::swap(r0, r1);
    s0 = std::move(s1);
    s1 = std::move(s_new);
  }
  // r0 is a nonzero constant; s0 * a = r0.
  const std::uint32_t c = inv_mod(r0.at(0), p);
  FieldElement r;
  for (std::size_t i = 0; i < s0.size() && i < m; ++i)
    r[static_cast<unsigned>(i)] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(s0[i]) * c % p);
  return r;
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldElement Field::frobenius(const FieldElement& a) const {
  const unsigned m = impl_->m;
  if (m == 1) return a;
  const std::uint64_t p = impl_->p;
  std::array<std::uint64_t, kMaxExtensionDegree> acc{};
  for (unsigned i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    const FieldElement& col = impl_->frob_cols[i];
    for (unsigned j = 0; j < m; ++j) acc[j] = (acc[j] + static_cast<std::uint64_t>(a[i]) * col[j]) % p;
  }
  FieldElement r;
  for (unsigned j = 0; j < m; ++j) r[j] = static_cast<std::uint32_t>(acc[j]);
  return r;
}

FieldElement Field::frobenius(FieldElement a, unsigned k) const {
  k %= impl_->m;
  for (unsigned i = 0; i < k; ++i) a = frobenius(a);
  return a;
}

int Field::compare(const FieldElement& a, const FieldElement& b) const {
  for (unsigned i = impl_->m; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

FieldElement Field::element_at(std::uint64_t index) const {
  FieldElement r;
  for (unsigned i = 0; i < impl_->m; ++i) {
    r[i] = static_cast<std::uint32_t>(index % impl_->p);
    index /= impl_->p;
  }
  return r;
}

std::string Field::to_string(const FieldElement& a) const {
  if (impl_->m == 1) return std::to_string(a[0]);
  std::ostringstream os;
  bool first = true;
  for (unsigned k = impl_->m; k-- > 0;) {
    const std::uint32_t c = a[k];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'z';
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

std::int64_t Field::signed_value(const FieldElement& a) const {
  const std::int64_t v = a[0];
  const std::int64_t p = impl_->p;
  return v > p / 2 ? v - p : v;
}

std::string Field::name() const {
  std::string s = "F_" + std::to_string(impl_->p);
  if (impl_->m > 1) s += "^" + std::to_string(impl_->m);
  return s;
}

FieldElement embed(const Field& source, const FieldElement& x, const Field& target) {
  if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0) {
    throw Error(ErrorKind::IncompatibleDegrees,
                "cannot embed " + source.name() + " into " + target.name());
  }
  if (source.degree() == target.degree()) return x;
  if (source.degree() == 1) return target.from_int(x[0]);

  static std::map<std::tuple<std::uint32_t, unsigned, unsigned>, FieldElement> roots;
  const auto key = std::make_tuple(source.characteristic(), source.degree(), target.degree());
  FieldElement image;
  bool cached = false;
  {
    std::lock_guard lock(cache_mutex());
    auto it = roots.find(key);
    if (it != roots.end()) {
      image = it->second;
      cached = true;
    }
  }
  if (!cached) {
    const Field fp = Field::prime(source.characteristic());
    std::vector<FieldElement> coeffs;
    for (std::uint32_t c : source.modulus()) coeffs.push_back(fp.from_int(c));
    const auto rts = roots_in(UniPoly(fp, coeffs), target);
    if (rts.empty()) throw Error(ErrorKind::Internal, "modulus has no root in target field");
    image = rts.front();
    std::lock_guard lock(cache_mutex());
    roots.emplace(key, image);
  }
  FieldElement acc = target.zero();
  for (unsigned i = source.degree(); i-- > 0;) {
    acc = target.add(target.mul(acc, image), target.from_int(x[i]));
  }
  return acc;
}

}  // namespace resweil
