#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

class Field;

/// One element of a specific finite field, identified by its canonical
/// index: the little-endian base-p digit string of its coefficient vector
/// over the basis {1, x, ..., x^{r-1}}. Index 0 is the additive identity,
/// index 1 the multiplicative identity.
struct Fe {
    const Field* field = nullptr;
    uint32_t idx = 0;

    bool is_zero() const { return idx == 0; }
};

/// GF(p^r) with an explicit monic irreducible modulus and a primitive
/// element. Immutable after construction; all operations are pure, so
/// instances may be shared across threads freely.
class Field {
  public:
    /// Builds GF(p^r) with the lexicographically smallest monic irreducible
    /// modulus (coefficients compared from the constant term upward) and the
    /// smallest-index element of multiplicative order q-1 as primitive.
    static std::shared_ptr<const Field> make(uint32_t p, uint32_t r);

    /// Same, but with a caller-supplied modulus (r+1 coefficients, constant
    /// term first, leading coefficient 1) and optionally a primitive element
    /// given by index. Supplied values are validated.
    static std::shared_ptr<const Field> make(uint32_t p, uint32_t r,
                                             const std::vector<uint32_t>& modulus,
                                             std::optional<uint32_t> primitive = std::nullopt);

    uint32_t p() const { return p_; }
    uint32_t r() const { return r_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    uint32_t primitive_index() const { return primitive_; }

    Fe element(uint32_t idx) const;
    Fe zero() const { return {this, 0}; }
    Fe one() const { return {this, 1}; }
    Fe omega() const { return {this, primitive_}; }

    std::vector<uint32_t> coeffs(uint32_t idx) const;
    uint32_t index_of_coeffs(const std::vector<uint32_t>& c) const;

    // Index-level arithmetic. Hot paths (elimination, distance search) use
    // these directly instead of Fe.
    uint32_t add_idx(uint32_t a, uint32_t b) const;
    uint32_t sub_idx(uint32_t a, uint32_t b) const;
    uint32_t neg_idx(uint32_t a) const;
    uint32_t mul_idx(uint32_t a, uint32_t b) const;
    uint32_t inv_idx(uint32_t a) const;
    uint32_t pow_idx(uint32_t a, int64_t e) const;

    /// Exponent e of a = omega^e, for a != 0. dlog(1) = 0.
    uint32_t dlog_idx(uint32_t a) const;
    /// omega^e for any integer e (reduced mod q-1).
    uint32_t exp_idx(int64_t e) const;

    uint32_t element_order(uint32_t a) const;
    bool is_primitive(uint32_t a) const;

    /// The elements of GF(2^r) in coefficient-counting order over the basis
    /// {1, omega, ..., omega^{r-1}}: 0, 1, w, w+1, w^2, w^2+1, ...
    /// This coincides with ascending canonical-index order. p must be 2.
    std::vector<Fe> enum_binary_order() const;

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    std::string name() const;  // e.g. "GF(8)"

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field(uint32_t p, uint32_t r, std::vector<uint32_t> modulus, std::optional<uint32_t> primitive);

    uint32_t p_ = 0, r_ = 0, q_ = 0;
    std::vector<uint32_t> modulus_;
    uint32_t primitive_ = 0;
    std::vector<uint32_t> exp_;  // exp_[e] = index of omega^e, e in [0, q-1)
    std::vector<uint32_t> log_;  // log_[idx] = e; log_[0] unused
};

using FieldPtr = std::shared_ptr<const Field>;

inline void require_same_field(const Fe& a, const Fe& b) {
    if (a.field == b.field) return;
    if (a.field != nullptr && b.field != nullptr && *a.field == *b.field) return;
    throw std::invalid_argument("operands belong to different fields");
}

inline Fe operator+(Fe a, Fe b) {
    require_same_field(a, b);
    return {a.field, a.field->add_idx(a.idx, b.idx)};
}
inline Fe operator-(Fe a, Fe b) {
    require_same_field(a, b);
    return {a.field, a.field->sub_idx(a.idx, b.idx)};
}
inline Fe operator-(Fe a) { return {a.field, a.field->neg_idx(a.idx)}; }
inline Fe operator*(Fe a, Fe b) {
    require_same_field(a, b);
    return {a.field, a.field->mul_idx(a.idx, b.idx)};
}
inline Fe operator/(Fe a, Fe b) {
    require_same_field(a, b);
    return {a.field, a.field->mul_idx(a.idx, b.field->inv_idx(b.idx))};
}
inline bool operator==(Fe a, Fe b) {
    require_same_field(a, b);
    return a.idx == b.idx;
}
inline bool operator!=(Fe a, Fe b) { return !(a == b); }

inline Fe inv(Fe a) { return {a.field, a.field->inv_idx(a.idx)}; }
inline Fe pow(Fe a, int64_t e) { return {a.field, a.field->pow_idx(a.idx, e)}; }
inline uint32_t dlog(Fe a) { return a.field->dlog_idx(a.idx); }

bool is_prime(uint32_t n);
/// Decomposes q = p^r with p prime; returns false if q is not a prime power.
bool prime_power(uint32_t q, uint32_t& p, uint32_t& r);

}  // namespace lrc
