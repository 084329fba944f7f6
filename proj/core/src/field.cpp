#include "arcchroma/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace arcchroma {
namespace {

constexpr std::uint32_t kOrderCap = 1u << 20;

int mod_inverse(int a, int p) {
  long long r = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

// Polynomials over GF(p) as little-endian digit vectors, used only while
// bootstrapping a field (irreducibility scans); element arithmetic proper
// works on packed encodings.
using Poly = std::vector<int>;

Poly poly_from_encoding(std::uint64_t v, int p) {
  Poly d;
  while (v) {
    d.push_back(static_cast<int>(v % p));
    v /= p;
  }
  return d;
}

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_rem(Poly a, const Poly& b, int p) {
  poly_trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = mod_inverse(b[db], p);
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int da = static_cast<int>(a.size()) - 1;
    const int c = static_cast<int>(static_cast<long long>(a[da]) * lead_inv % p);
    for (int j = 0; j <= db; ++j) {
      long long t = a[da - db + j] - static_cast<long long>(c) * b[j];
      a[da - db + j] = static_cast<int>(((t % p) + p) % p);
    }
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

bool poly_irreducible(const Poly& f, int p) {
  const int m = static_cast<int>(f.size()) - 1;
  if (m < 1) return false;
  std::uint64_t pd = p;
  for (int d = 1; 2 * d <= m; ++d, pd *= p) {
    for (std::uint64_t enc = pd; enc < 2 * pd; ++enc) {
      Poly g = poly_from_encoding(enc, p);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree m, as an encoding.
// For m = 1 this is the polynomial x itself.
std::uint32_t find_modulus(int p, int m) {
  if (m == 1) return static_cast<std::uint32_t>(p);
  std::uint64_t pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  for (std::uint64_t enc = pm; enc < 2 * pm; ++enc) {
    Poly f = poly_from_encoding(enc, p);
    if (poly_irreducible(f, p)) return static_cast<std::uint32_t>(enc);
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<int> distinct_prime_factors(std::uint32_t n) {
  std::vector<int> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power_decomposition(int q) {
  if (q < 2) return std::nullopt;
  for (int p = 2; p <= q; ++p) {
    if (q % p == 0) {
      int m = 0, t = q;
      while (t % p == 0) {
        t /= p;
        ++m;
      }
      if (t != 1) return std::nullopt;
      return std::make_pair(p, m);
    }
  }
  return std::nullopt;
}

const Field& Field::get(int p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1) throw std::invalid_argument("field extension degree must be at least 1");
  long long order = 1;
  for (int i = 0; i < m; ++i) {
    order *= p;
    if (order > kOrderCap) throw std::invalid_argument("field order exceeds the 2^20 cap");
  }

  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, m}];
  if (!slot) slot.reset(new Field(p, m));
  return *slot;
}

Field::Field(int p, int m) : p_(p), m_(m) {
  std::uint64_t order = 1;
  for (int i = 0; i < m; ++i) order *= p;
  order_ = static_cast<std::uint32_t>(order);
  modulus_ = find_modulus(p, m);
  modulus_digits_.assign(m + 1, 0);
  {
    std::uint32_t v = modulus_;
    for (int i = 0; i <= m; ++i) {
      modulus_digits_[i] = static_cast<int>(v % p);
      v /= p;
    }
  }
  primitive_ = find_primitive();
  if (order_ <= 256) {
    mul_table_.resize(static_cast<std::size_t>(order_) * order_);
    add_table_.resize(static_cast<std::size_t>(order_) * order_);
    for (std::uint32_t a = 0; a < order_; ++a)
      for (std::uint32_t b = 0; b < order_; ++b) {
        mul_table_[static_cast<std::size_t>(a) * order_ + b] = mul_general(a, b);
        std::uint32_t s;
        if (p_ == 2) {
          s = a ^ b;
        } else if (m_ == 1) {
          s = (a + b) % p_;
        } else {
          std::uint32_t out = 0, mult = 1, x = a, y = b;
          for (int i = 0; i < m_; ++i) {
            out += static_cast<std::uint32_t>((x % p_ + y % p_) % p_) * mult;
            mult *= p_;
            x /= p_;
            y /= p_;
          }
          s = out;
        }
        add_table_[static_cast<std::size_t>(a) * order_ + b] = s;
      }
  }
}

void Field::check_value(std::uint32_t v) const {
  if (v >= order_) throw std::invalid_argument("encoding out of range for this field");
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  check_value(a);
  check_value(b);
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
  if (p_ == 2) return a ^ b;
  if (m_ == 1) return (a + b) % p_;
  std::uint32_t out = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    out += static_cast<std::uint32_t>((a % p_ + b % p_) % p_) * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  check_value(a);
  if (p_ == 2) return a;
  if (m_ == 1) return (p_ - a) % p_;
  std::uint32_t out = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    out += static_cast<std::uint32_t>((p_ - a % p_) % p_) * mult;
    mult *= p_;
    a /= p_;
  }
  return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul_general(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  if (p_ == 2) {
    // carry-less multiply, then reduce by the modulus bits
    std::uint64_t acc = 0, x = a;
    for (std::uint32_t y = b; y; y >>= 1, x <<= 1)
      if (y & 1) acc ^= x;
    for (int bit = 2 * m_ - 2; bit >= m_; --bit)
      if ((acc >> bit) & 1) acc ^= static_cast<std::uint64_t>(modulus_) << (bit - m_);
    return static_cast<std::uint32_t>(acc);
  }
  int da[24], db[24], prod[48] = {0};
  {
    std::uint32_t x = a, y = b;
    for (int i = 0; i < m_; ++i) {
      da[i] = static_cast<int>(x % p_);
      db[i] = static_cast<int>(y % p_);
      x /= p_;
      y /= p_;
    }
  }
  for (int i = 0; i < m_; ++i)
    if (da[i])
      for (int j = 0; j < m_; ++j)
        prod[i + j] = static_cast<int>((prod[i + j] + static_cast<long long>(da[i]) * db[j]) % p_);
  for (int d = 2 * m_ - 2; d >= m_; --d) {
    const int c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (int j = 0; j < m_; ++j) {
      long long t = prod[d - m_ + j] - static_cast<long long>(c) * modulus_digits_[j];
      prod[d - m_ + j] = static_cast<int>(((t % p_) + p_) % p_);
    }
  }
  std::uint32_t out = 0;
  for (int i = m_ - 1; i >= 0; --i) out = out * p_ + prod[i];
  return out;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  check_value(a);
  check_value(b);
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * order_ + b];
  return mul_general(a, b);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  check_value(a);
  std::uint32_t result = 1, base = a;
  while (e) {
    if (e & 1) result = mul_general(result, base);
    base = mul_general(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  check_value(a);
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  return pow(a, order_ - 2);
}

std::uint32_t Field::find_primitive() const {
  const std::uint32_t group = order_ - 1;
  const std::vector<int> primes = distinct_prime_factors(group);
  for (std::uint32_t g = 1; g < order_; ++g) {
    bool ok = true;
    for (int r : primes) {
      if (pow(g, group / static_cast<std::uint32_t>(r)) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive element found");  // unreachable
}

FieldElement Field::element(std::uint32_t v) const {
  check_value(v);
  return FieldElement{v, this};
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field || !b.field) throw std::invalid_argument("field element without a field");
  if (a.field != b.field)
    throw std::invalid_argument("elements belong to different fields");
  return *a.field;
}
}  // namespace

FieldElement FieldElement::operator+(FieldElement rhs) const {
  const Field& f = common_field(*this, rhs);
  return FieldElement{f.add(value, rhs.value), &f};
}

FieldElement FieldElement::operator-(FieldElement rhs) const {
  const Field& f = common_field(*this, rhs);
  return FieldElement{f.sub(value, rhs.value), &f};
}

FieldElement FieldElement::operator*(FieldElement rhs) const {
  const Field& f = common_field(*this, rhs);
  return FieldElement{f.mul(value, rhs.value), &f};
}

FieldElement FieldElement::operator-() const {
  if (!field) throw std::invalid_argument("field element without a field");
  return FieldElement{field->neg(value), field};
}

FieldElement FieldElement::inverse() const {
  if (!field) throw std::invalid_argument("field element without a field");
  return FieldElement{field->inv(value), field};
}

std::uint32_t SubfieldEmbedding::to_subfield(std::uint32_t ambient_value) const {
  if (ambient_value >= from_ambient_.size() || from_ambient_[ambient_value] < 0)
    throw std::invalid_argument("value is not in the embedded subfield");
  return static_cast<std::uint32_t>(from_ambient_[ambient_value]);
}

bool SubfieldEmbedding::in_image(std::uint32_t ambient_value) const {
  return ambient_value < from_ambient_.size() && from_ambient_[ambient_value] >= 0;
}

const SubfieldEmbedding& subfield_embedding(const Field& ambient, const Field& sub) {
  if (ambient.characteristic() != sub.characteristic())
    throw std::invalid_argument("subfield embedding requires equal characteristic");
  if (ambient.degree() % sub.degree() != 0)
    throw std::invalid_argument("subfield degree must divide the ambient degree");

  static std::mutex mu;
  static std::map<std::pair<const Field*, const Field*>, std::unique_ptr<SubfieldEmbedding>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{&ambient, &sub}];
  if (slot) return *slot;

  auto emb = std::make_unique<SubfieldEmbedding>();
  emb->ambient = &ambient;
  emb->subfield = &sub;

  const int p = sub.characteristic();
  const int k = sub.degree();
  // digits of the subfield modulus, highest first, as ambient constants
  std::vector<std::uint32_t> mod_digits(k + 1);
  {
    std::uint32_t v = sub.modulus();
    for (int i = 0; i <= k; ++i) {
      mod_digits[i] = v % p;
      v /= p;
    }
  }
  std::uint32_t beta = 0;
  bool found = false;
  for (std::uint32_t c = 0; c < ambient.order(); ++c) {
    std::uint32_t acc = 0;
    for (int i = k; i >= 0; --i) acc = ambient.add(ambient.mul(acc, c), mod_digits[i]);
    if (acc == 0) {
      beta = c;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("subfield modulus has no root in the ambient field");

  emb->to_ambient.resize(sub.order());
  emb->from_ambient_.assign(ambient.order(), -1);
  for (std::uint32_t v = 0; v < sub.order(); ++v) {
    std::uint32_t digits[24];
    std::uint32_t x = v;
    for (int i = 0; i < k; ++i) {
      digits[i] = x % p;
      x /= p;
    }
    std::uint32_t acc = 0;
    for (int i = k - 1; i >= 0; --i) acc = ambient.add(ambient.mul(acc, beta), digits[i]);
    emb->to_ambient[v] = acc;
    if (emb->from_ambient_[acc] >= 0)
      throw std::logic_error("subfield embedding is not injective");
    emb->from_ambient_[acc] = v;
  }

  slot = std::move(emb);
  return *slot;
}

std::uint32_t trace_in_ambient(const Field& ambient, std::uint32_t a,
                               std::uint32_t subfield_order) {
  const std::uint64_t q = subfield_order;
  std::uint32_t t = ambient.add(a, ambient.pow(a, q));
  return ambient.add(t, ambient.pow(a, q * q));
}

FieldElement trace_to_subfield(FieldElement a, std::uint32_t subfield_order) {
  if (!a.field) throw std::invalid_argument("field element without a field");
  const Field& ambient = *a.field;
  const int p = ambient.characteristic();
  int k = 0;
  {
    std::uint64_t t = 1;
    while (t < subfield_order) {
      t *= p;
      ++k;
    }
    if (t != subfield_order || k == 0)
      throw std::invalid_argument("subfield order is not a power of the characteristic");
  }
  if (ambient.degree() != 3 * k)
    throw std::invalid_argument("trace needs ambient degree exactly 3x the subfield degree");

  const std::uint32_t t = trace_in_ambient(ambient, a.value, subfield_order);
  const Field& sub = Field::get(p, k);
  const SubfieldEmbedding& emb = subfield_embedding(ambient, sub);
  if (!emb.in_image(t)) throw std::logic_error("trace value escaped the subfield");
  return sub.element(emb.to_subfield(t));
}

}  // namespace arcchroma
