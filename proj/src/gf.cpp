#include "polysieve/gf.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace polysieve {

namespace {

struct ModulusEntry {
    int degree;
    std::uint64_t low_bits;  // modulus with the leading x^b term stripped
};

// Low-weight irreducible polynomials over GF(2), one per supported degree.
// b=4 is x^4+x+1, b=8 is x^8+x^4+x^3+x+1, b=16 is x^16+x^5+x^3+x+1, etc.
constexpr ModulusEntry kModulusTable[] = {
    {1, 0x1},  {2, 0x3},  {3, 0x3},  {4, 0x3},  {8, 0x1B},
    {16, 0x2B}, {24, 0x1B}, {32, 0x8D}, {48, 0x2D}, {64, 0x1B},
};

// Prime factors of the group order 2^b - 1, used for the generator search.
const std::map<int, std::vector<std::uint64_t>>& group_order_factors() {
    static const std::map<int, std::vector<std::uint64_t>> factors = {
        {1, {}},
        {2, {3}},
        {3, {7}},
        {4, {3, 5}},
        {8, {3, 5, 17}},
        {16, {3, 5, 17, 257}},
        {24, {3, 5, 7, 13, 17, 241}},
        {32, {3, 5, 17, 257, 65537}},
        {48, {3, 5, 7, 13, 17, 97, 241, 257, 673}},
        {64, {3, 5, 17, 257, 641, 65537, 6700417}},
    };
    return factors;
}

// Remainder of f modulo g in GF(2)[x]; degrees must fit in the word.
std::uint64_t gf2_poly_mod(std::uint64_t f, std::uint64_t g, int fdeg, int gdeg) {
    for (int i = fdeg; i >= gdeg; --i) {
        if ((f >> i) & 1) f ^= g << (i - gdeg);
    }
    return f;
}

}  // namespace

FieldConfig::FieldConfig(int degree, std::uint64_t modulus_low)
    : degree_(degree),
      modulus_low_(modulus_low),
      mask_(degree == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree) - 1),
      top_bit_(std::uint64_t{1} << (degree - 1)),
      card_minus_one_(mask_),
      generator_(1) {
    if (degree_ <= 16) verify_irreducible_exhaustive();
    find_generator();
    if (degree_ <= 16) build_tables();
}

std::uint64_t FieldConfig::mul_slow(std::uint64_t a, std::uint64_t c) const {
    std::uint64_t r = 0;
    while (c) {
        if (c & 1) r ^= a;
        c >>= 1;
        std::uint64_t hi = a & top_bit_;
        a = (a << 1) & mask_;
        if (hi) a ^= modulus_low_;
    }
    return r;
}

std::uint64_t FieldConfig::pow_raw(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul_slow(r, a);
        a = mul_slow(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t FieldConfig::inv_raw(std::uint64_t a) const {
    if (a == 0) throw FieldError("inverse of zero");
    // a^(2^b - 2) by square-and-multiply.
    std::uint64_t result = 1;
    std::uint64_t e = card_minus_one_ - 1;
    while (e) {
        if (e & 1) result = mul_raw(result, a);
        a = mul_raw(a, a);
        e >>= 1;
    }
    return result;
}

void FieldConfig::verify_irreducible_exhaustive() const {
    // Trial division by every polynomial of degree 1..b/2 suffices.
    std::uint64_t full = modulus_low_ | (std::uint64_t{1} << degree_);
    for (int d = 1; 2 * d <= degree_; ++d) {
        for (std::uint64_t g = std::uint64_t{1} << d; g < (std::uint64_t{2} << d); ++g) {
            if (gf2_poly_mod(full, g, degree_, d) == 0)
                throw FieldError("modulus table entry is reducible");
        }
    }
}

void FieldConfig::find_generator() {
    if (card_minus_one_ == 1) {  // GF(2): the group is trivial
        generator_ = 1;
        return;
    }
    const auto& factors = group_order_factors().at(degree_);
    for (std::uint64_t g = 2;; ++g) {
        bool ok = true;
        for (std::uint64_t p : factors) {
            if (pow_raw(g, card_minus_one_ / p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            generator_ = g;
            return;
        }
    }
}

void FieldConfig::build_tables() {
    std::size_t card = std::size_t{1} << degree_;
    log_.assign(card, 0);
    exp_.assign(card - 1, 0);
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < card_minus_one_; ++i) {
        exp_[i] = static_cast<std::uint32_t>(v);
        log_[v] = static_cast<std::uint32_t>(i);
        v = mul_slow(v, generator_);
    }
    if (v != 1) throw FieldError("generator does not have full order");
}

FieldElement FieldConfig::element_by_index(std::uint64_t index) const {
    if (index == 0) return zero();
    if (index > card_minus_one_) throw FieldError("element index out of range");
    if (!exp_.empty()) return FieldElement(exp_[index - 1], this);
    return FieldElement(pow_raw(generator_, index - 1), this);
}

FieldElement FieldConfig::pow(FieldElement a, std::uint64_t e) const {
    if (a.field() != this) throw FieldError("field config mismatch in pow");
    std::uint64_t r = 1, base = a.bits();
    while (e) {
        if (e & 1) r = mul_raw(r, base);
        base = mul_raw(base, base);
        e >>= 1;
    }
    return FieldElement(r, this);
}

const FieldConfig& make_field(int degree) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<FieldConfig>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(degree);
    if (it != cache.end()) return *it->second;
    for (const auto& entry : kModulusTable) {
        if (entry.degree == degree) {
            auto config = std::unique_ptr<FieldConfig>(new FieldConfig(degree, entry.low_bits));
            return *cache.emplace(degree, std::move(config)).first->second;
        }
    }
    throw FieldError("unsupported degree " + std::to_string(degree) +
                     "; supported: 1,2,3,4,8,16,24,32,48,64");
}

int smallest_supported_degree(int min_degree) {
    for (int d : kSupportedDegrees) {
        if (d >= min_degree) return d;
    }
    throw FieldError("no supported degree >= " + std::to_string(min_degree));
}

FieldElement inv(const FieldElement& a) {
    if (a.field() == nullptr) throw FieldError("inverse of zero");
    return a.field()->from_bits(a.field()->inv_raw(a.bits()));
}

FieldElement evaluate_poly(const std::vector<FieldElement>& coeffs, const FieldElement& x) {
    FieldElement acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<FieldElement> interpolate_univariate(
    const std::vector<std::pair<FieldElement, FieldElement>>& points) {
    if (points.empty()) throw FieldError("interpolation needs at least one point");
    const FieldConfig* field = points.front().first.field();
    if (field == nullptr) field = points.front().second.field();
    for (const auto& [x, y] : points) {
        if ((x.field() && x.field() != field) || (y.field() && y.field() != field))
            throw FieldError("field config mismatch in interpolation");
        if (x.field()) field = x.field();
    }
    if (field == nullptr) throw FieldError("interpolation needs typed points");
    std::size_t count = points.size();
    if (count - 1 > field->group_order())  // need count distinct x values, so 2^b >= count
        throw FieldError("field too small for interpolation degree");
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (points[i].first == points[j].first)
                throw FieldError("duplicate evaluation point in interpolation");

    // Newton-style incremental build: poly interpolates the prefix, basis is
    // the monic product of (x - x_j) over the prefix. Subtraction is addition.
    std::vector<FieldElement> poly(count, field->zero());
    std::vector<FieldElement> basis(count + 1, field->zero());
    basis[0] = field->one();
    std::size_t basis_len = 1;
    for (std::size_t i = 0; i < count; ++i) {
        const FieldElement& xi = points[i].first;
        FieldElement numer = points[i].second + evaluate_poly(poly, xi);
        FieldElement denom;
        for (std::size_t j = basis_len; j-- > 0;) denom = denom * xi + basis[j];
        FieldElement scale = numer * inv(denom);
        for (std::size_t j = 0; j < basis_len; ++j) poly[j] += scale * basis[j];
        // basis *= (x + x_i)
        for (std::size_t j = basis_len; j-- > 0;) {
            basis[j + 1] += basis[j];
            basis[j] = basis[j] * xi;
        }
        ++basis_len;
    }
    return poly;
}

}  // namespace polysieve
