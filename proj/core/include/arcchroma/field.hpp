#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace arcchroma {

class Field;

// Value handle into one specific finite field.  Mixing elements of two
// different fields in one operation throws instead of silently coercing.
struct FieldElement {
  std::uint32_t value = 0;
  const Field* field = nullptr;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  FieldElement operator+(FieldElement rhs) const;
  FieldElement operator-(FieldElement rhs) const;
  FieldElement operator*(FieldElement rhs) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
};

// GF(p^m) with exact arithmetic.  An element is encoded as the integer whose
// base-p digits are the coefficients of its residue polynomial, digit i being
// the coefficient of x^i.  So in GF(4) = GF(2)[x]/(x^2+x+1) the encodings run
// 0, 1, x, x+1 -> 0, 1, 2, 3.
//
// The reducing polynomial is the lexicographically smallest monic irreducible
// of degree m (by encoded integer), which lands on x^2+x+1 for GF(4) and
// x^3+x+1 for GF(8).  Prime fields take the polynomial x and use plain
// modular integer arithmetic.
class Field {
 public:
  // Interned: repeated calls with the same (p, m) return the same object, so
  // identity comparison of `const Field*` is meaningful.  Throws on non-prime
  // p, m < 1, or p^m > 2^20.
  static const Field& get(int p, int m);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  std::uint32_t order() const { return order_; }
  std::uint32_t modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws on a == 0
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  // Smallest-encoded generator of the multiplicative group, certified by
  // checking g^((order-1)/r) != 1 for every prime r dividing order-1.
  std::uint32_t primitive_element() const { return primitive_; }

  FieldElement element(std::uint32_t v) const;  // bounds-checked

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(int p, int m);

  void check_value(std::uint32_t v) const;
  std::uint32_t mul_general(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t find_primitive() const;

  int p_ = 0;
  int m_ = 0;
  std::uint32_t order_ = 0;
  std::uint32_t modulus_ = 0;
  std::uint32_t primitive_ = 0;
  std::vector<int> modulus_digits_;
  // dense operation tables for small orders; empty when order > 256
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> add_table_;
};

// Canonical embedding of GF(p^k) into GF(p^(k*t)): the subfield generator is
// sent to the smallest-encoded root of its reducing polynomial inside the
// ambient field.  Tables are cached per field pair.
struct SubfieldEmbedding {
  const Field* ambient = nullptr;
  const Field* subfield = nullptr;
  std::vector<std::uint32_t> to_ambient;  // indexed by subfield encoding
  std::uint32_t to_subfield(std::uint32_t ambient_value) const;  // throws if not in image
  bool in_image(std::uint32_t ambient_value) const;

  std::vector<std::int64_t> from_ambient_;  // -1 when not in the image
};

const SubfieldEmbedding& subfield_embedding(const Field& ambient, const Field& subfield);

// Tr(a) = a + a^q + a^(q^2) for a in GF(q^3), returned as an element of GF(q)
// through the canonical embedding.  Requires the ambient degree to be exactly
// three times the subfield degree.
FieldElement trace_to_subfield(FieldElement a, std::uint32_t subfield_order);

// Same sum, left in the ambient encoding.  Enough when only comparison with
// zero matters.
std::uint32_t trace_in_ambient(const Field& ambient, std::uint32_t a,
                               std::uint32_t subfield_order);

bool is_prime(int n);

// q -> (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power_decomposition(int q);

}  // namespace arcchroma
