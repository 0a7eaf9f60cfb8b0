#include "resweil/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "resweil/error.hpp"

namespace resweil {

void Monomial::set(std::size_t i, unsigned exponent) {
  if (exponent > 0xFFFF) throw Error(ErrorKind::StepGuardExceeded, "exponent exceeds 65535");
  degree_ = degree_ - e_[i] + exponent;
  e_[i] = static_cast<std::uint16_t>(exponent);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial q(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) q.e_[i] = static_cast<std::uint16_t>(e_[i] - other.e_[i]);
  q.degree_ = degree_ - other.degree_;
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    const unsigned s = unsigned{a.e_[i]} + b.e_[i];
    if (s > 0xFFFF) throw Error(ErrorKind::StepGuardExceeded, "exponent exceeds 65535");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  r.degree_ = 0;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.degree_ += r.e_[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i] != 0 && b.e_[i] != 0) return false;
  return true;
}

int degrevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(const Field& field, std::vector<std::string> variables) {
  return std::make_shared<const PolyRing>(field, std::move(variables));
}

void require_same_ring(const PolyRing& a, const PolyRing& b, const char* where) {
  if (&a == &b || a == b) return;
  throw Error(ErrorKind::MixedContexts, std::string(where) + ": polynomials from different rings");
}

MPoly MPoly::constant(const RingPtr& ring, const FieldElement& c) {
  MPoly p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

MPoly MPoly::constant(const RingPtr& ring, std::int64_t c) { return constant(ring, ring->field().from_int(c)); }

MPoly MPoly::variable(const RingPtr& ring, std::size_t index) {
  Monomial m(ring->nvars());
  m.set(index, 1);
  return term(ring, m, ring->field().one());
}

MPoly MPoly::variable(const RingPtr& ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx) throw Error(ErrorKind::MissingAssignment, "unknown variable " + name);
  return variable(ring, *idx);
}

MPoly MPoly::term(const RingPtr& ring, const Monomial& m, const FieldElement& c) {
  MPoly p(ring);
  if (!ring->field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  const Field& f = ring->field();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return degrevlex_compare(a.mono, b.mono) > 0; });
  MPoly p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = f.add(p.terms_.back().coeff, t.coeff);
      if (f.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!f.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

FieldElement MPoly::constant_coeff() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return FieldElement{};
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool MPoly::uses_variable(std::size_t index) const {
  for (const auto& t : terms_)
    if (t.mono[index] != 0) return true;
  return false;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  return scale(field().inv(terms_.front().coeff));
}

MPoly MPoly::scale(const FieldElement& c) const {
  const Field& f = field();
  MPoly p(ring_);
  if (f.is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, f.mul(t.coeff, c)});
  return p;
}

MPoly MPoly::mul_term(const Monomial& m, const FieldElement& c) const {
  const Field& f = field();
  MPoly p(ring_);
  if (f.is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves degrevlex order.
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, f.mul(t.coeff, c)});
  return p;
}

MPoly MPoly::neg() const {
  MPoly p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, field().neg(t.coeff)});
  return p;
}

namespace {

MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
  require_same_ring(*a.ring(), *b.ring(), "add");
  const Field& f = a.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    int c;
    if (ia == a.terms().end()) c = -1;
    else if (ib == b.terms().end()) c = 1;
    else c = degrevlex_compare(ia->mono, ib->mono);
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back({ib->mono, subtract ? f.neg(ib->coeff) : ib->coeff});
      ++ib;
    } else {
      FieldElement s = subtract ? f.sub(ia->coeff, ib->coeff) : f.add(ia->coeff, ib->coeff);
      if (!f.is_zero(s)) out.push_back({ia->mono, s});
      ++ia;
      ++ib;
    }
  }
  // out is already sorted and collected.
  return MPoly::from_terms(a.ring(), std::move(out));
}

}  // namespace

MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_same_ring(*a.ring(), *b.ring(), "multiply");
  const Field& f = a.field();
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) out.push_back({x.mono * y.mono, f.mul(x.coeff, y.coeff)});
  return MPoly::from_terms(a.ring(), std::move(out));
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (!(*a.ring_ == *b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(ring_, field().one());
  MPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  const Field& f = field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = false;
    std::string cs;
    if (f.is_prime_field()) {
      const std::int64_t v = f.signed_value(t.coeff);
      negative = v < 0;
      cs = std::to_string(negative ? -v : v);
    } else {
      cs = "(" + f.to_string(t.coeff) + ")";
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string ms;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!ms.empty()) ms += '*';
      ms += ring_->variables()[i];
      if (t.mono[i] > 1) ms += "^" + std::to_string(t.mono[i]);
    }
    if (ms.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << ms;
    } else {
      os << cs << '*' << ms;
    }
  }
  return os.str();
}

MPoly substitute_expand(const MPoly& f, const std::vector<MPoly>& images) {
  if (images.size() != f.ring()->nvars()) {
    throw Error(ErrorKind::MissingAssignment, "substitution needs one image per variable");
  }
  if (images.empty()) {
    throw Error(ErrorKind::MissingAssignment, "substitution from a ring without variables needs a target ring");
  }
  const RingPtr& target = images.front().ring();
  for (const auto& img : images) require_same_ring(*img.ring(), *target, "substitute_expand");
  const Field& tf = target->field();

  // powers[i][k] = images[i]^k, built lazily
  std::vector<std::vector<MPoly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly::constant(target, tf.one()));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  MPoly result(target);
  for (const auto& t : f.terms()) {
    MPoly term = MPoly::constant(target, embed(f.field(), t.coeff, tf));
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] != 0) term = term * power(i, t.mono[i]);
    }
    result = result + term;
  }
  return result;
}

MPoly substitute_expand(const MPoly& f, const std::vector<MPoly>& images, const RingPtr& target) {
  if (images.empty() && f.ring()->nvars() == 0) {
    return MPoly::constant(target, embed(f.field(), f.constant_coeff(), target->field()));
  }
  for (const auto& img : images) require_same_ring(*img.ring(), *target, "substitute_expand");
  return substitute_expand(f, images);
}

MPoly substitute_expand(const MPoly& f, const std::map<std::string, MPoly>& assignment, const RingPtr& target) {
  std::vector<MPoly> images;
  images.reserve(f.ring()->nvars());
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
    const std::string& name = f.ring()->variables()[i];
    auto it = assignment.find(name);
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else if (!f.uses_variable(i)) {
      images.push_back(MPoly(target));
    } else {
      throw Error(ErrorKind::MissingAssignment, "no image for variable " + name);
    }
  }
  if (images.empty()) {
    return MPoly::constant(target, embed(f.field(), f.constant_coeff(), target->field()));
  }
  return substitute_expand(f, images);
}

MPoly partial_derivative(const MPoly& f, std::size_t index) {
  const Field& fld = f.field();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    const unsigned e = t.mono[index];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(index, e - 1);
    out.push_back({m, fld.mul(t.coeff, fld.from_int(e))});
  }
  return MPoly::from_terms(f.ring(), std::move(out));
}

FieldElement evaluate(const MPoly& f, std::span<const FieldElement> point, const Field& field) {
  if (point.size() != f.ring()->nvars()) throw Error(ErrorKind::MissingAssignment, "evaluation point has wrong arity");
  FieldElement acc = field.zero();
  for (const auto& t : f.terms()) {
    FieldElement v = embed(f.field(), t.coeff, field);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] != 0) v = field.mul(v, field.pow(point[i], t.mono[i]));
    }
    acc = field.add(acc, v);
  }
  return acc;
}

MPoly map_into(const MPoly& f, const RingPtr& target, const std::vector<std::size_t>& index_map) {
  const Field& tf = target->field();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] != 0) m.set(index_map.at(i), m[index_map.at(i)] + t.mono[i]);
    }
    out.push_back({m, embed(f.field(), t.coeff, tf)});
  }
  return MPoly::from_terms(target, std::move(out));
}

MPoly map_into(const MPoly& f, const RingPtr& target) {
  std::vector<std::size_t> index_map(f.ring()->nvars(), 0);
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
    const std::string& name = f.ring()->variables()[i];
    auto idx = target->index_of(name);
    if (idx) {
      index_map[i] = *idx;
    } else if (f.uses_variable(i)) {
      throw Error(ErrorKind::MissingAssignment, "target ring lacks variable " + name);
    }
  }
  return map_into(f, target, index_map);
}

}  // namespace resweil
