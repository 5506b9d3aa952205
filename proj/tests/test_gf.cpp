#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "polysieve/gf.hpp"
#include "polysieve/rng.hpp"

using namespace polysieve;

namespace {

// Independent slow multiplication: full carry-less product into 128 bits,
// then long division by the full modulus. Shares no code with the library
// path (which reduces on the fly or uses log tables).
std::uint64_t reference_mul(int b, std::uint64_t mod_low, std::uint64_t x, std::uint64_t y) {
    unsigned __int128 prod = 0;
    for (int i = 0; i < 64; ++i)
        if ((y >> i) & 1) prod ^= static_cast<unsigned __int128>(x) << i;
    unsigned __int128 full_mod =
        (static_cast<unsigned __int128>(1) << b) | static_cast<unsigned __int128>(mod_low);
    for (int i = 126; i >= b; --i)
        if ((prod >> i) & 1) prod ^= full_mod << (i - b);
    return static_cast<std::uint64_t>(prod);
}

// GF(2)[x] remainder with 128-bit operands.
unsigned __int128 poly_mod(unsigned __int128 a, unsigned __int128 m) {
    auto deg = [](unsigned __int128 v) {
        int d = -1;
        while (v) {
            ++d;
            v >>= 1;
        }
        return d;
    };
    int dm = deg(m);
    for (int i = deg(a); i >= dm; --i)
        if ((a >> i) & 1) a ^= m << (i - dm);
    return a;
}

unsigned __int128 poly_gcd(unsigned __int128 a, unsigned __int128 c) {
    while (c != 0) {
        unsigned __int128 r = poly_mod(a, c);
        a = c;
        c = r;
    }
    return a;
}

// Rabin irreducibility: f of degree b is irreducible over GF(2) iff
// x^(2^b) = x (mod f) and gcd(x^(2^(b/d)) - x, f) = 1 for every prime d | b.
bool rabin_irreducible(int b, std::uint64_t mod_low) {
    unsigned __int128 f =
        (static_cast<unsigned __int128>(1) << b) | static_cast<unsigned __int128>(mod_low);
    auto sqr_mod = [&](unsigned __int128 v) {
        unsigned __int128 sq = 0;
        for (int i = 0; i < 64; ++i)
            if ((v >> i) & 1) sq ^= static_cast<unsigned __int128>(1) << (2 * i);
        return poly_mod(sq, f);
    };
    auto frobenius_power = [&](int times) {
        unsigned __int128 v = 2;  // the polynomial x
        for (int i = 0; i < times; ++i) v = sqr_mod(v);
        return v;
    };
    unsigned __int128 x_reduced = poly_mod(2, f);
    if (frobenius_power(b) != x_reduced) return false;
    std::vector<int> primes;
    for (int d = 2, rest = b; d <= rest; ++d) {
        if (rest % d == 0) {
            primes.push_back(d);
            while (rest % d == 0) rest /= d;
        }
    }
    for (int d : primes) {
        unsigned __int128 g = frobenius_power(b / d) ^ x_reduced;
        if (poly_gcd(f, g) != 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("supported degrees and unsupported-degree errors") {
    for (int b : kSupportedDegrees) {
        const FieldConfig& field = make_field(b);
        CHECK(field.degree() == b);
    }
    CHECK_THROWS_AS(make_field(65), FieldError);
    CHECK_THROWS_AS(make_field(5), FieldError);
    CHECK_THROWS_AS(make_field(0), FieldError);
    CHECK_THROWS_AS(make_field(-3), FieldError);
}

TEST_CASE("every table modulus is irreducible (independent Rabin check)") {
    for (int b : kSupportedDegrees) {
        const FieldConfig& field = make_field(b);
        CHECK_MESSAGE(rabin_irreducible(b, field.modulus_low_bits()), "degree ", b);
    }
}

TEST_CASE("degree-4 modulus is x^4 + x + 1") {
    const FieldConfig& field = make_field(4);
    CHECK(field.modulus_low_bits() == 0x3);
    // Irreducibility by hand: no root in GF(2) and no quadratic factor.
    std::uint32_t f = 0b10011;
    CHECK((f & 1) == 1);                   // f(0) = 1
    CHECK(std::popcount(f) % 2 == 1);      // f(1) = 1
    std::uint32_t rem = f;                 // divide by x^2+x+1 = 0b111
    for (int i = 4; i >= 2; --i)
        if ((rem >> i) & 1) rem ^= 0b111u << (i - 2);
    CHECK(rem != 0);
}

TEST_CASE("addition is xor with identities") {
    const FieldConfig& field = make_field(4);
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        FieldElement a = field.sample(rng);
        CHECK((a + a).is_zero());
        CHECK(a + field.zero() == a);
    }
    CHECK(field.from_bits(0b0011) + field.from_bits(0b0101) == field.from_bits(0b0110));
    const FieldConfig& other = make_field(8);
    CHECK_THROWS_AS(field.one() + other.one(), FieldError);
}

TEST_CASE("multiplication identities and the x * x^3 example") {
    const FieldConfig& field = make_field(4);
    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        FieldElement a = field.sample(rng);
        CHECK(a * field.one() == a);
        CHECK((a * field.zero()).is_zero());
    }
    // In GF(2^4) with modulus x^4+x+1: x * x^3 = x^4 = x + 1.
    CHECK(field.from_bits(0b0010) * field.from_bits(0b1000) == field.from_bits(0b0011));
    const FieldConfig& other = make_field(8);
    CHECK_THROWS_AS(field.one() * other.one(), FieldError);
}

TEST_CASE("multiplication agrees with long-division reference") {
    for (int b : {1, 2, 3, 4, 8, 16, 24, 32, 48, 64}) {
        const FieldConfig& field = make_field(b);
        Rng rng(100 + b);
        for (int i = 0; i < 500; ++i) {
            FieldElement a = field.sample(rng), c = field.sample(rng);
            std::uint64_t expect = reference_mul(b, field.modulus_low_bits(), a.bits(), c.bits());
            CHECK((a * c).bits() == expect);
        }
    }
}

TEST_CASE("field axioms hold on random triples for every supported degree") {
    for (int b : kSupportedDegrees) {
        const FieldConfig& field = make_field(b);
        Rng rng(200 + b);
        for (int i = 0; i < 10000; ++i) {
            FieldElement a = field.sample(rng), c = field.sample(rng), d = field.sample(rng);
            REQUIRE((a + c) + c == a);  // addition is an involution
            REQUIRE(a * c == c * a);
            REQUIRE((a * c) * d == a * (c * d));
            REQUIRE(a * (c + d) == a * c + a * d);
        }
    }
}

TEST_CASE("inverses") {
    for (int b : {1, 4, 8, 24, 64}) {
        const FieldConfig& field = make_field(b);
        CHECK(inv(field.one()) == field.one());
        CHECK_THROWS_AS(inv(field.zero()), FieldError);
        Rng rng(300 + b);
        for (int i = 0; i < 200; ++i) {
            FieldElement a = field.sample(rng);
            if (a.is_zero()) continue;
            CHECK(mul(a, inv(a)) == field.one());
        }
    }
    CHECK_THROWS_AS(inv(FieldElement()), FieldError);
}

TEST_CASE("multiplicative group order, exhaustive for small degrees") {
    for (int b : {1, 2, 3, 4, 8}) {
        const FieldConfig& field = make_field(b);
        for (std::uint64_t bits = 1; bits <= field.group_order(); ++bits) {
            FieldElement a = field.from_bits(bits);
            CHECK(field.pow(a, field.group_order()) == field.one());
        }
    }
}

TEST_CASE("generator has full order") {
    for (int b : {4, 8, 16, 32, 64}) {
        const FieldConfig& field = make_field(b);
        FieldElement g = field.generator();
        CHECK(field.pow(g, field.group_order()) == field.one());
        // element_by_index enumerates 0 then distinct powers of g
        CHECK(field.element_by_index(0).is_zero());
        CHECK(field.element_by_index(1) == field.one());
        std::vector<std::uint64_t> seen;
        for (std::uint64_t i = 1; i <= std::min<std::uint64_t>(64, field.group_order()); ++i) {
            std::uint64_t bits = field.element_by_index(i).bits();
            for (std::uint64_t s : seen) CHECK(s != bits);
            seen.push_back(bits);
        }
    }
}

TEST_CASE("sampling is deterministic, in range, and uniform") {
    const FieldConfig& field = make_field(8);
    Rng a(12345), c(12345);
    for (int i = 0; i < 50; ++i) CHECK(field.sample(a) == field.sample(c));

    const FieldConfig& tiny = make_field(1);
    Rng rng(5);
    for (int i = 0; i < 100; ++i) CHECK(tiny.sample(rng).bits() <= 1);

    // Monte Carlo: frequency of zero at b=4 over 10^6 draws within 5 sigma.
    const FieldConfig& f4 = make_field(4);
    Rng mc(99);
    const int draws = 1000000;
    int zeros = 0;
    for (int i = 0; i < draws; ++i)
        if (f4.sample(mc).is_zero()) ++zeros;
    double p = 1.0 / 16.0;
    double sigma = std::sqrt(draws * p * (1 - p));
    CHECK(std::abs(zeros - draws * p) < 5 * sigma);
}

TEST_CASE("interpolation fixtures") {
    const FieldConfig& field = make_field(4);
    SUBCASE("constant polynomial") {
        FieldElement c = field.from_bits(0b1010);
        std::vector<std::pair<FieldElement, FieldElement>> pts;
        for (std::uint64_t i = 0; i < 4; ++i) pts.emplace_back(field.element_by_index(i), c);
        auto coeffs = interpolate_univariate(pts);
        CHECK(coeffs[0] == c);
        for (std::size_t i = 1; i < coeffs.size(); ++i) CHECK(coeffs[i].is_zero());
    }
    SUBCASE("identity line through (0,0), (1,1)") {
        std::vector<std::pair<FieldElement, FieldElement>> pts{
            {field.zero(), field.zero()}, {field.one(), field.one()}};
        auto coeffs = interpolate_univariate(pts);
        REQUIRE(coeffs.size() == 2);
        CHECK(coeffs[0].is_zero());
        CHECK(coeffs[1] == field.one());
    }
    SUBCASE("duplicate evaluation point") {
        std::vector<std::pair<FieldElement, FieldElement>> pts{
            {field.one(), field.zero()}, {field.one(), field.one()}};
        CHECK_THROWS_AS(interpolate_univariate(pts), FieldError);
    }
    SUBCASE("field too small") {
        const FieldConfig& f1 = make_field(1);
        std::vector<std::pair<FieldElement, FieldElement>> pts{
            {f1.zero(), f1.zero()}, {f1.one(), f1.one()}, {f1.zero(), f1.one()}};
        CHECK_THROWS_AS(interpolate_univariate(pts), FieldError);
    }
}

TEST_CASE("interpolate after evaluate is the identity") {
    for (int b : {4, 8, 16}) {
        const FieldConfig& field = make_field(b);
        Rng rng(400 + b);
        for (int t = 0; t < 100; ++t) {
            std::size_t degree = rng.uniform_below(b == 4 ? 8 : 12);
            std::vector<FieldElement> coeffs;
            for (std::size_t i = 0; i <= degree; ++i) coeffs.push_back(field.sample(rng));
            std::vector<std::pair<FieldElement, FieldElement>> pts;
            for (std::size_t i = 0; i <= degree; ++i) {
                FieldElement x = field.element_by_index(i);
                pts.emplace_back(x, evaluate_poly(coeffs, x));
            }
            REQUIRE(interpolate_univariate(pts) == coeffs);
        }
    }
}
