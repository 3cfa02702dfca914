#include "acalg/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace acalg {

namespace {

using Coords = std::vector<mpq_class>;

void require_field(Field f) {
  if (f == nullptr) throw std::logic_error("use of an unset field element");
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_rational(const mpq_class& q, std::uint64_t p) {
  mpz_class pz(std::to_string(p));
  mpz_class n = q.get_num() % pz;
  if (n < 0) n += pz;
  mpz_class d = q.get_den() % pz;
  if (d == 0) throw DivisionByZero();
  std::uint64_t nn = std::stoull(n.get_str());
  std::uint64_t dd = std::stoull(d.get_str());
  return mul_mod(nn, mod_inverse(dd, p), p);
}

void tower_mul(Field f, const mpq_class* a, const mpq_class* b, mpq_class* out) {
  if (f->depth() == 0) {
    *out = *a * *b;
    return;
  }
  const std::size_t h = f->coord_count() / 2;
  Field parent = f->parent();
  Coords t(h), u(h);
  tower_mul(parent, a + h, b + h, t.data());
  tower_mul(parent, f->radicand().coords().data(), t.data(), u.data());
  tower_mul(parent, a, b, out);
  for (std::size_t i = 0; i < h; ++i) out[i] += u[i];
  tower_mul(parent, a, b + h, t.data());
  tower_mul(parent, a + h, b, u.data());
  for (std::size_t i = 0; i < h; ++i) out[h + i] = t[i] + u[i];
}

Coords tower_inverse(Field f, const mpq_class* a) {
  if (f->depth() == 0) {
    if (*a == 0) throw DivisionByZero();
    return {1 / *a};
  }
  const std::size_t h = f->coord_count() / 2;
  Field parent = f->parent();
  Coords sq0(h), sq1(h), rs(h);
  tower_mul(parent, a, a, sq0.data());
  tower_mul(parent, a + h, a + h, sq1.data());
  tower_mul(parent, f->radicand().coords().data(), sq1.data(), rs.data());
  for (std::size_t i = 0; i < h; ++i) sq0[i] -= rs[i];
  Coords norm_inv = tower_inverse(parent, sq0.data());
  Coords out(2 * h);
  tower_mul(parent, a, norm_inv.data(), out.data());
  tower_mul(parent, a + h, norm_inv.data(), out.data() + h);
  for (std::size_t i = h; i < 2 * h; ++i) out[i] = -out[i];
  return out;
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty number");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digit = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] == '/' && !slash && digit) {
      slash = true;
      digit = false;
    } else if (std::isdigit(static_cast<unsigned char>(s[k]))) {
      digit = true;
    } else {
      throw ParseError("malformed rational '" + s + "'");
    }
  }
  if (!digit) throw ParseError("malformed rational '" + s + "'");
  std::string body = s[0] == '+' ? s.substr(1) : s;
  mpq_class q;
  if (q.set_str(body, 10) != 0) throw ParseError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// Split at top-level signs, keeping each sign with its term.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    bool sign_split = depth == 0 && (c == '+' || c == '-') && !cur.empty() &&
                      cur.back() != '*' && cur.back() != '/';
    if (sign_split) {
      terms.push_back(cur);
      cur.clear();
    }
    cur.push_back(c);
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + s + "'");
  if (!cur.empty()) terms.push_back(cur);
  return terms;
}

// n = m^2 * d with |d| free of small square factors; the cofactor left after
// trial division is checked for being a perfect square.
void square_split(const mpz_class& n, mpz_class& m, mpz_class& d) {
  mpz_class rest = abs(n);
  m = 1;
  d = 1;
  for (unsigned long f = 2; f < 100000; ++f) {
    mpz_class ff(f);
    if (ff * ff > rest) break;
    unsigned count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), f)) {
      rest /= ff;
      ++count;
    }
    for (unsigned k = 0; k + 1 < count; k += 2) m *= ff;
    if (count % 2 == 1) d *= ff;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      m *= r;
    } else {
      d *= rest;
    }
  }
  if (n < 0) d = -d;
}

std::optional<mpq_class> exact_rational_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(rn, rd);
}

FieldElement half_of(const FieldElement& x, bool high) {
  Field f = x.field();
  const std::size_t h = f->coord_count() / 2;
  auto begin = x.coords().begin() + (high ? h : 0);
  return FieldElement::from_coords(f->parent(), Coords(begin, begin + h));
}

FieldElement combine(Field f, const FieldElement& lo, const FieldElement& hi) {
  Coords c = lo.embed(f->parent()).coords();
  Coords hc = hi.embed(f->parent()).coords();
  c.insert(c.end(), hc.begin(), hc.end());
  return FieldElement::from_coords(f, std::move(c));
}

// Square root inside the given tower level, without adjoining anything.
std::optional<FieldElement> tower_sqrt(const FieldElement& x) {
  Field f = x.field();
  if (x.is_zero()) return x;
  if (f->depth() == 0) {
    auto r = exact_rational_sqrt(x.coords()[0]);
    if (!r) return std::nullopt;
    return FieldElement(f, *r);
  }
  Field parent = f->parent();
  const FieldElement& rho = f->radicand();
  FieldElement x0 = half_of(x, false);
  FieldElement x1 = half_of(x, true);
  FieldElement zero = FieldElement::zero(parent);
  if (x1.is_zero()) {
    if (auto s = tower_sqrt(x0)) return combine(f, *s, zero);
    if (auto s = tower_sqrt(x0 / rho)) return combine(f, zero, *s);
    return std::nullopt;
  }
  auto sn = tower_sqrt(x0 * x0 - rho * x1 * x1);
  if (!sn) return std::nullopt;
  const FieldElement two(parent, 2L);
  for (int sign : {1, -1}) {
    FieldElement u2 = sign > 0 ? (x0 + *sn) / two : (x0 - *sn) / two;
    auto u = tower_sqrt(u2);
    if (u && !u->is_zero()) return combine(f, *u, x1 / (two * *u));
  }
  return std::nullopt;
}

}  // namespace

class FieldRegistry {
 public:
  static FieldRegistry& instance() {
    static FieldRegistry registry;
    return registry;
  }

  Field rationals() { return rationals_.get(); }

  Field prime(std::uint64_t p) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = primes_[p];
    if (!slot) {
      slot.reset(new FieldDescriptor());
      slot->kind_ = FieldDescriptor::Kind::PrimeField;
      slot->p_ = p;
    }
    return slot.get();
  }

  Field tower(Field parent, const FieldElement& radicand) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(parent, radicand.to_string());
    auto& slot = towers_[key];
    if (!slot) {
      slot.reset(new FieldDescriptor());
      slot->kind_ = FieldDescriptor::Kind::Tower;
      slot->depth_ = parent->depth() + 1;
      slot->parent_ = parent;
      slot->radicand_ = radicand;
    }
    return slot.get();
  }

 private:
  FieldRegistry() {
    rationals_.reset(new FieldDescriptor());
    rationals_->kind_ = FieldDescriptor::Kind::Rationals;
  }

  std::mutex mutex_;
  std::unique_ptr<FieldDescriptor> rationals_;
  std::map<std::uint64_t, std::unique_ptr<FieldDescriptor>> primes_;
  std::map<std::pair<Field, std::string>, std::unique_ptr<FieldDescriptor>> towers_;
};

// ---------------------------------------------------------------------------
// FieldDescriptor

Field FieldDescriptor::rationals() { return FieldRegistry::instance().rationals(); }

Field FieldDescriptor::prime(std::uint64_t p) {
  if (p == 2) throw InputError("characteristic 2 is not supported");
  if (p < 3 || p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InputError("GF(p) needs an odd prime p below 2^31, got " + std::to_string(p));
  return FieldRegistry::instance().prime(p);
}

Field FieldDescriptor::adjoin(const FieldElement& radicand, int max_depth) const {
  if (kind_ == Kind::PrimeField) throw NoSquareRoot("prime fields are not extended");
  if (depth_ + 1 > max_depth) throw TowerDepthExceeded(max_depth);
  FieldElement r = radicand.embed(this);
  if (r.is_zero() || tower_sqrt(r)) throw std::logic_error("adjoining an existing square");
  Field base = kind_ == Kind::Rationals ? rationals() : this;
  return FieldRegistry::instance().tower(base, r);
}

Field FieldDescriptor::prefix(int depth) const {
  if (depth < 0 || depth > depth_) throw std::out_of_range("tower prefix depth");
  Field f = this;
  while (f->depth_ > depth) f = f->parent_;
  if (depth == 0) return rationals();
  return f;
}

bool FieldDescriptor::is_prefix_of(Field other) const {
  if (this == other) return true;
  if (kind_ == Kind::PrimeField || other->kind_ == Kind::PrimeField) return false;
  if (depth_ > other->depth_) return false;
  return other->prefix(depth_) == this;
}

std::vector<FieldElement> FieldDescriptor::radicands() const {
  std::vector<FieldElement> out;
  for (Field f = this; f != nullptr && f->depth_ > 0; f = f->parent_)
    out.push_back(f->radicand_);
  std::reverse(out.begin(), out.end());
  return out;
}

std::string FieldDescriptor::name() const {
  switch (kind_) {
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "GF(" + std::to_string(p_) + ")";
    case Kind::Tower: {
      std::string s = "Q";
      for (const auto& r : radicands()) s += "(sqrt(" + r.to_string() + "))";
      return s;
    }
  }
  return "?";
}

std::string FieldDescriptor::basis_label(std::size_t mask) const {
  auto rads = radicands();
  std::string inner;
  for (std::size_t j = 0; j < rads.size(); ++j) {
    if (!(mask & (std::size_t{1} << j))) continue;
    if (!inner.empty()) inner += "*";
    if (rads[j].is_rational())
      inner += rads[j].to_string();
    else
      inner += "[" + rads[j].to_string() + "]";
  }
  return "sqrt(" + inner + ")";
}

Field join(Field a, Field b) {
  if (a == b) return a;
  if (a->is_prefix_of(b)) return b;
  if (b->is_prefix_of(a)) return a;
  throw IncompatibleFields(a->name() + " and " + b->name());
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement() : field_(nullptr) {}

FieldElement::FieldElement(Field field, long value) : FieldElement(field, mpq_class(value)) {}

FieldElement::FieldElement(Field field, const mpq_class& value) : field_(field) {
  require_field(field);
  if (field->kind() == FieldDescriptor::Kind::PrimeField) {
    residue_ = reduce_rational(value, field->characteristic());
  } else {
    coords_.assign(field->coord_count(), mpq_class(0));
    coords_[0] = value;
    coords_[0].canonicalize();
  }
}

FieldElement FieldElement::from_coords(Field field, std::vector<mpq_class> coords) {
  require_field(field);
  if (field->kind() == FieldDescriptor::Kind::PrimeField || coords.size() != field->coord_count())
    throw std::invalid_argument("coordinate count does not match field");
  FieldElement e;
  e.field_ = field;
  e.coords_ = std::move(coords);
  return e;
}

FieldElement FieldElement::from_residue(Field field, std::uint64_t residue) {
  require_field(field);
  if (field->kind() != FieldDescriptor::Kind::PrimeField)
    throw std::invalid_argument("residue for a non-prime field");
  FieldElement e;
  e.field_ = field;
  e.residue_ = residue % field->characteristic();
  return e;
}

FieldElement FieldElement::generator(Field field) {
  if (field->depth() == 0) throw std::invalid_argument("field has no generator");
  Coords c(field->coord_count(), mpq_class(0));
  c[field->coord_count() / 2] = 1;
  return from_coords(field, std::move(c));
}

bool FieldElement::is_zero() const {
  require_field(field_);
  if (field_->kind() == FieldDescriptor::Kind::PrimeField) return residue_ == 0;
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  require_field(field_);
  if (field_->kind() == FieldDescriptor::Kind::PrimeField) return residue_ == 1;
  if (coords_[0] != 1) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  require_field(field_);
  if (field_->kind() == FieldDescriptor::Kind::PrimeField) return true;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

std::optional<mpq_class> FieldElement::as_rational() const {
  if (field_->kind() == FieldDescriptor::Kind::PrimeField || !is_rational()) return std::nullopt;
  return coords_[0];
}

FieldElement FieldElement::embed(Field target) const {
  require_field(field_);
  if (target == field_) return *this;
  if (!field_->is_prefix_of(target))
    throw IncompatibleFields(field_->name() + " into " + target->name());
  FieldElement e = *this;
  e.field_ = target;
  e.coords_.resize(target->coord_count(), mpq_class(0));
  return e;
}

FieldElement FieldElement::inverse() const {
  require_field(field_);
  if (field_->kind() == FieldDescriptor::Kind::PrimeField) {
    if (residue_ == 0) throw DivisionByZero();
    return from_residue(field_, mod_inverse(residue_, field_->characteristic()));
  }
  if (is_zero()) throw DivisionByZero();
  return from_coords(field_, tower_inverse(field_, coords_.data()));
}

FieldElement FieldElement::operator-() const {
  require_field(field_);
  FieldElement e = *this;
  if (field_->kind() == FieldDescriptor::Kind::PrimeField) {
    e.residue_ = residue_ == 0 ? 0 : field_->characteristic() - residue_;
  } else {
    for (auto& c : e.coords_) c = -c;
  }
  return e;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  require_field(field_);
  require_field(other.field_);
  if (field_ != other.field_) {
    Field f = join(field_, other.field_);
    *this = embed(f);
    if (other.field_ != f) return *this += other.embed(f);
  }
  if (field_->kind() == FieldDescriptor::Kind::PrimeField) {
    residue_ += other.residue_;
    if (residue_ >= field_->characteristic()) residue_ -= field_->characteristic();
  } else {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) { return *this += -other; }

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  require_field(field_);
  require_field(other.field_);
  if (field_ != other.field_) {
    Field f = join(field_, other.field_);
    *this = embed(f);
    if (other.field_ != f) return *this *= other.embed(f);
  }
  if (field_->kind() == FieldDescriptor::Kind::PrimeField) {
    residue_ = mul_mod(residue_, other.residue_, field_->characteristic());
  } else if (field_->depth() == 0) {
    coords_[0] *= other.coords_[0];
  } else {
    Coords out(coords_.size());
    tower_mul(field_, coords_.data(), other.coords_.data(), out.data());
    coords_ = std::move(out);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  return *this *= other.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_field(a.field_);
  require_field(b.field_);
  if (a.field_ != b.field_) {
    Field f = join(a.field_, b.field_);
    return a.embed(f) == b.embed(f);
  }
  if (a.field_->kind() == FieldDescriptor::Kind::PrimeField) return a.residue_ == b.residue_;
  return a.coords_ == b.coords_;
}

std::strong_ordering canonical_compare(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_) {
    Field f = join(a.field_, b.field_);
    return canonical_compare(a.embed(f), b.embed(f));
  }
  if (a.field_->kind() == FieldDescriptor::Kind::PrimeField) return a.residue_ <=> b.residue_;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    int c = cmp(a.coords_[i].get_num(), b.coords_[i].get_num());
    if (c == 0) c = cmp(a.coords_[i].get_den(), b.coords_[i].get_den());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string FieldElement::to_string() const {
  require_field(field_);
  if (field_->kind() == FieldDescriptor::Kind::PrimeField) return std::to_string(residue_);
  std::string out;
  for (std::size_t mask = 0; mask < coords_.size(); ++mask) {
    const mpq_class& c = coords_[mask];
    if (c == 0) continue;
    bool negative = c < 0;
    mpq_class mag = negative ? mpq_class(-c) : c;
    std::string term;
    if (mask == 0) {
      term = rational_text(mag);
    } else {
      term = mag == 1 ? field_->basis_label(mask)
                      : rational_text(mag) + "*" + field_->basis_label(mask);
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

FieldElement FieldElement::parse(std::string_view text, Field field) {
  require_field(field);
  std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty scalar");
  if (field->kind() != FieldDescriptor::Kind::Tower) {
    if (s.find("sqrt") != std::string::npos)
      throw FieldMismatch("radical '" + s + "' in " + field->name());
    return FieldElement(field, parse_rational(s));
  }
  std::map<std::string, std::size_t> labels;
  for (std::size_t mask = 1; mask < field->coord_count(); ++mask)
    labels[strip_spaces(field->basis_label(mask))] = mask;
  Coords coords(field->coord_count(), mpq_class(0));
  for (std::string term : split_terms(s)) {
    bool negative = false;
    if (term[0] == '+' || term[0] == '-') {
      negative = term[0] == '-';
      term = term.substr(1);
    }
    std::size_t pos = term.find("sqrt(");
    mpq_class coeff(1);
    std::size_t mask = 0;
    if (pos == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      std::string label = term.substr(pos);
      auto it = labels.find(label);
      if (it == labels.end())
        throw FieldMismatch("radical '" + label + "' is not a basis element of " + field->name());
      mask = it->second;
      if (pos > 0) {
        if (term[pos - 1] != '*') throw ParseError("malformed term '" + term + "'");
        coeff = parse_rational(term.substr(0, pos - 1));
      }
    }
    coords[mask] += negative ? mpq_class(-coeff) : coeff;
  }
  return from_coords(field, std::move(coords));
}

// ---------------------------------------------------------------------------
// Square roots and quadratics

std::optional<FieldElement> try_sqrt(const FieldElement& a) {
  Field f = a.field();
  require_field(f);
  if (f->kind() == FieldDescriptor::Kind::PrimeField) {
    auto r = mod_sqrt(a.residue(), f->characteristic());
    if (!r) return std::nullopt;
    return FieldElement::from_residue(f, *r);
  }
  return tower_sqrt(a);
}

FieldElement sqrt(const FieldElement& a, int max_depth) {
  if (auto r = try_sqrt(a)) return *r;
  Field f = a.field();
  if (f->kind() == FieldDescriptor::Kind::PrimeField)
    throw NoSquareRoot(a.to_string() + " is a non-residue mod " + std::to_string(f->characteristic()));
  if (auto q = a.as_rational()) {
    mpz_class m, d;
    square_split(q->get_num() * q->get_den(), m, d);
    Field g = f->adjoin(FieldElement(f, mpq_class(d)), max_depth);
    return FieldElement(g, mpq_class(m, q->get_den())) * FieldElement::generator(g);
  }
  Field g = f->adjoin(a, max_depth);
  return FieldElement::generator(g);
}

std::vector<FieldElement> solve_quadratic(const FieldElement& c, const FieldElement& a,
                                          int max_depth) {
  Field f = join(c.field(), a.field());
  const FieldElement two(f, 2L);
  FieldElement disc = c * c - FieldElement(f, 4L) * a;
  if (disc.is_zero()) return {c / two};
  FieldElement s = sqrt(disc, max_depth);
  std::vector<FieldElement> roots{(c + s) / two, (c - s) / two};
  std::sort(roots.begin(), roots.end(), canonical_less);
  return roots;
}

// ---------------------------------------------------------------------------
// Modular helpers

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw DivisionByZero();
  return pow_mod(a, p - 2, p);
}

std::optional<std::uint64_t> mod_sqrt(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = mul_mod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return std::min(r, p - r);
}

}  // namespace acalg
