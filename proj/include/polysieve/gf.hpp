#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polysieve/rng.hpp"

namespace polysieve {

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldConfig;

/// An element of GF(2^b) in canonical polynomial-basis form: the b low bits
/// of `bits()` are the coefficients of 1, x, ..., x^(b-1).
///
/// A default-constructed element is the field-agnostic zero; it acts as the
/// additive identity of any field and compares equal to every typed zero.
class FieldElement {
public:
    constexpr FieldElement() = default;

    std::uint64_t bits() const { return bits_; }
    const FieldConfig* field() const { return field_; }
    bool is_zero() const { return bits_ == 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& c) {
        return a.bits_ == c.bits_ && (a.field_ == c.field_ || a.bits_ == 0);
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& c) { return !(a == c); }

    FieldElement& operator+=(const FieldElement& c);
    FieldElement& operator*=(const FieldElement& c);
    friend FieldElement operator+(FieldElement a, const FieldElement& c) { return a += c; }
    friend FieldElement operator*(FieldElement a, const FieldElement& c) { return a *= c; }

private:
    friend class FieldConfig;
    FieldElement(std::uint64_t bits, const FieldConfig* field) : bits_(bits), field_(field) {}

    std::uint64_t bits_ = 0;
    const FieldConfig* field_ = nullptr;
};

/// Immutable description of one GF(2^b): the extension degree, the reduction
/// modulus, a fixed generator of the multiplicative group, and (for b <= 16)
/// log/antilog tables. Obtain instances through make_field(); configs are
/// cached per degree, so pointer identity doubles as field identity.
class FieldConfig {
public:
    int degree() const { return degree_; }
    /// Reduction modulus with the leading x^b term stripped.
    std::uint64_t modulus_low_bits() const { return modulus_low_; }
    /// All-ones mask of width b.
    std::uint64_t element_mask() const { return mask_; }
    /// Order of the multiplicative group, 2^b - 1.
    std::uint64_t group_order() const { return card_minus_one_; }

    FieldElement zero() const { return FieldElement(0, this); }
    FieldElement one() const { return FieldElement(1, this); }
    FieldElement generator() const { return FieldElement(generator_, this); }

    /// Canonical element from raw bits; rejects non-reduced representations.
    FieldElement from_bits(std::uint64_t bits) const {
        if ((bits & ~mask_) != 0) throw FieldError("from_bits: value exceeds field degree");
        return FieldElement(bits, this);
    }

    /// The fixed enumeration 0, 1, g, g^2, ... used for evaluation points.
    FieldElement element_by_index(std::uint64_t index) const;

    /// Uniform over all 2^b elements; consumes exactly one Rng draw.
    FieldElement sample(Rng& rng) const { return FieldElement(rng.next() & mask_, this); }

    FieldElement pow(FieldElement a, std::uint64_t e) const;

    std::uint64_t add_raw(std::uint64_t a, std::uint64_t c) const { return a ^ c; }
    std::uint64_t mul_raw(std::uint64_t a, std::uint64_t c) const {
        if (!log_.empty()) {
            if (a == 0 || c == 0) return 0;
            std::uint64_t s = std::uint64_t{log_[a]} + log_[c];
            if (s >= card_minus_one_) s -= card_minus_one_;
            return exp_[s];
        }
        return mul_slow(a, c);
    }
    std::uint64_t inv_raw(std::uint64_t a) const;

private:
    friend const FieldConfig& make_field(int degree);
    FieldConfig(int degree, std::uint64_t modulus_low);
    FieldConfig(const FieldConfig&) = delete;
    FieldConfig& operator=(const FieldConfig&) = delete;

    std::uint64_t mul_slow(std::uint64_t a, std::uint64_t c) const;
    std::uint64_t pow_raw(std::uint64_t a, std::uint64_t e) const;
    void verify_irreducible_exhaustive() const;
    void build_tables();
    void find_generator();

    int degree_;
    std::uint64_t modulus_low_;
    std::uint64_t mask_;
    std::uint64_t top_bit_;
    std::uint64_t card_minus_one_;
    std::uint64_t generator_;
    std::vector<std::uint32_t> log_;  // only for degree <= 16
    std::vector<std::uint32_t> exp_;
};

/// Supported extension degrees. The moduli are fixed low-weight irreducible
/// trinomials/pentanomials so that independent implementations can agree on
/// every field element bit-for-bit.
inline constexpr int kSupportedDegrees[] = {1, 2, 3, 4, 8, 16, 24, 32, 48, 64};

/// Returns the cached config for a supported degree.
/// Throws FieldError("unsupported degree ...") otherwise.
const FieldConfig& make_field(int degree);

/// Smallest supported degree >= min_degree.
int smallest_supported_degree(int min_degree);

FieldElement add(const FieldElement& a, const FieldElement& c);
FieldElement mul(const FieldElement& a, const FieldElement& c);
FieldElement inv(const FieldElement& a);
inline FieldElement square(const FieldElement& a) { return mul(a, a); }

inline FieldElement sample_uniform(Rng& rng, const FieldConfig& config) { return config.sample(rng); }

/// Coefficients (ascending degree, length D+1) of the unique polynomial of
/// degree <= D through D+1 points with pairwise distinct abscissae.
std::vector<FieldElement> interpolate_univariate(
    const std::vector<std::pair<FieldElement, FieldElement>>& points);

/// Horner evaluation of an ascending coefficient list.
FieldElement evaluate_poly(const std::vector<FieldElement>& coeffs, const FieldElement& x);

inline FieldElement& FieldElement::operator+=(const FieldElement& c) {
    if (c.field_ == nullptr) return *this;  // adding the detached zero
    if (field_ == nullptr) { *this = c; return *this; }
    if (field_ != c.field_) throw FieldError("field config mismatch in add");
    bits_ ^= c.bits_;
    return *this;
}

inline FieldElement& FieldElement::operator*=(const FieldElement& c) {
    if (field_ == nullptr || c.field_ == nullptr) {
        // One operand is the detached zero; the product is zero.
        bits_ = 0;
        if (field_ == nullptr) field_ = c.field_;
        return *this;
    }
    if (field_ != c.field_) throw FieldError("field config mismatch in mul");
    bits_ = field_->mul_raw(bits_, c.bits_);
    return *this;
}

inline FieldElement add(const FieldElement& a, const FieldElement& c) { return a + c; }
inline FieldElement mul(const FieldElement& a, const FieldElement& c) { return a * c; }

}  // namespace polysieve
