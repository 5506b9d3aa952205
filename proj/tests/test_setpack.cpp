#include <doctest.h>

#include <cmath>
#include <map>

#include "polysieve/oracle.hpp"
#include "polysieve/setpack.hpp"
#include "testutil.hpp"

using namespace polysieve;
using namespace polysieve::testutil;

namespace {

// Exhaustive partition oracle: classify a fixed packing's projection profile
// over every (n1, n-n1)-partition, by Gosper-style subset enumeration.
std::map<std::tuple<int, int, int>, Rational> profile_distribution_by_enumeration(
    const SetFamily& family, const std::vector<std::size_t>& packing, std::size_t n1) {
    std::size_t n = family.ground_size();
    std::map<std::tuple<int, int, int>, Rational> dist;
    BigInt total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != n1) continue;
        total += 1;
        int count[4] = {0, 0, 0, 0};
        bool admissible = true;
        for (std::size_t idx : packing) {
            int hits = 0;
            for (int u : family.member(idx))
                if ((mask >> u) & 1) ++hits;
            if (hits > 2) {
                admissible = false;
                break;
            }
            ++count[hits];
        }
        if (admissible) dist[{count[0], count[1], count[2]}] += 1;
    }
    for (auto& [profile, value] : dist) value /= Rational(total);
    return dist;
}

}  // namespace

TEST_CASE("projection probability fixtures") {
    CHECK(packing_admissible_probability(3, 0, 3, 1, 1, 0, 0) == 1);
    CHECK(packing_admissible_probability(3, 1, 3, 1, 0, 1, 0) == 1);
    CHECK(packing_admissible_probability(4, 1, 3, 1, 0, 1, 0) == Rational(3, 4));
    CHECK(packing_admissible_probability(5, 1, 3, 2, 2, 0, 0) == 0);  // pq > n
    CHECK(packing_admissible_probability(6, 1, 3, 2, 1, 0, 1) == 0);  // p1+2p2 > n1
}

TEST_CASE("projection probability matches exhaustive partition enumeration") {
    for (auto [n, members] : {
             std::pair<std::size_t, std::vector<std::vector<int>>>{6, {{0, 1, 2}, {3, 4, 5}}},
             {8, {{0, 2, 4}, {1, 5, 7}}},
             {9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}},
             {7, {{1, 3, 6}}},
         }) {
        SetFamily family(n, 3, members);
        std::vector<std::size_t> packing(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) packing[i] = i;
        int p = static_cast<int>(members.size());
        for (std::size_t n1 = 0; n1 <= n; ++n1) {
            auto dist = profile_distribution_by_enumeration(family, packing, n1);
            Rational sum = 0;
            for (int p2 = 0; p2 <= p; ++p2) {
                for (int p1 = 0; p1 + p2 <= p; ++p1) {
                    int p0 = p - p1 - p2;
                    Rational probability = packing_admissible_probability(
                        static_cast<long long>(n), static_cast<long long>(n1), 3, p, p0, p1, p2);
                    auto it = dist.find({p0, p1, p2});
                    Rational expect = it == dist.end() ? Rational(0) : it->second;
                    REQUIRE(probability == expect);
                    sum += probability;
                }
            }
            CHECK(sum <= 1);  // remainder is the non-admissible event
        }
    }
}

TEST_CASE("beta table and numeric search") {
    CHECK(packing_cost_base(3, 0.281509, 0.679622) == doctest::Approx(3.3432).epsilon(1e-3));
    BetaChoice q3 = packing_beta_search(3);
    CHECK(std::abs(q3.beta1 - 0.281509) < 0.002);
    CHECK(std::abs(q3.beta2 - 0.679622) < 0.002);
    CHECK(std::abs(q3.base - 3.3432) < 0.01);
}

TEST_CASE("parameter choice") {
    SUBCASE("q=3 small instance") {
        PackingParams params = choose_packing_parameters(9, 3, 1);
        CHECK(params.p0 + params.p1 + params.p2 == 1);
        CHECK(params.admissible_prob > 0);
        CHECK(params.repetitions == ceil_inverse(params.admissible_prob));
    }
    SUBCASE("infeasible when pq > n") {
        CHECK_THROWS_AS(choose_packing_parameters(5, 3, 2), FamilyError);
    }
    SUBCASE("window validity across a sweep") {
        for (std::size_t n = 6; n <= 40; n += 2) {
            for (int p = 1; 3 * static_cast<std::size_t>(p) <= n && p <= 5; ++p) {
                PackingParams params = choose_packing_parameters(n, 3, p);
                REQUIRE(params.admissible_prob > 0);
                REQUIRE(params.p1 + 2 * params.p2 <= params.n1);
            }
        }
    }
}

TEST_CASE("partition sampling is uniform over C(n, n1) choices") {
    const std::size_t n = 6, n1 = 2;
    std::map<std::vector<int>, int> counts;
    Rng rng(40);
    const int trials = 30000;
    for (int t = 0; t < trials; ++t)
        counts[GroundBipartition::sample(n, n1, rng).u1_elements]++;
    CHECK(counts.size() == 15);
    double expect = trials / 15.0;
    double sigma = std::sqrt(trials * (1.0 / 15) * (14.0 / 15));
    for (const auto& [subset, count] : counts) CHECK(std::abs(count - expect) < 5 * sigma);
}

TEST_CASE("S factor fixtures") {
    const FieldConfig& field = make_field(8);
    Rng rng(41);
    SUBCASE("no member avoids U1: empty product") {
        SetFamily family(4, 3, {{0, 1, 2}});
        GroundBipartition part = GroundBipartition::from_membership({1, 0, 0, 0});
        PackAssignment a = PackAssignment::sample(family, part, 3, field, rng);
        CHECK(s_factor_eval(family, part, 0, 3, a, field.sample(rng)) == field.one());
    }
    SUBCASE("avoiding all labels neutralizes every factor") {
        SetFamily family(4, 3, {{1, 2, 3}});
        GroundBipartition part = GroundBipartition::from_membership({1, 0, 0, 0});
        PackAssignment a = PackAssignment::sample(family, part, 3, field, rng);
        CHECK(s_factor_eval(family, part, 0b111, 3, a, field.sample(rng)) == field.one());
    }
    SUBCASE("one avoiding member: direct expansion of the single factor") {
        SetFamily family(4, 3, {{1, 2, 3}});
        GroundBipartition part = GroundBipartition::from_membership({1, 0, 0, 0});
        PackAssignment a = PackAssignment::sample(family, part, 3, field, rng);
        FieldElement w0 = field.sample(rng);
        FieldElement zsq = field.zero();
        for (int u2pos = 0; u2pos < 3; ++u2pos) {
            FieldElement zsum = field.zero();
            for (int l = 0; l < 3; ++l) zsum += a.z[u2pos * 3 + l] * a.z[u2pos * 3 + l];
            zsq = u2pos == 0 ? zsum : zsq * zsum;
        }
        FieldElement expect = field.one() + w0 * w0 * a.x[0] * a.x[0] * zsq;
        CHECK(s_factor_eval(family, part, 0, 3, a, w0) == expect);
    }
}

TEST_CASE("packing matrix fixtures") {
    const FieldConfig& field = make_field(8);
    Rng rng(42);
    SUBCASE("no member meets U1") {
        SetFamily family(5, 3, {{2, 3, 4}});
        GroundBipartition part = GroundBipartition::from_membership({1, 1, 0, 0, 0});
        PackAssignment a = PackAssignment::sample(family, part, 3, field, rng);
        FieldMatrix t =
            tutte_packing_matrix(family, part, 0, 3, a, field.sample(rng), field.sample(rng));
        CHECK(t.at(0, 0) == a.y_point[0] * a.y_point[0]);
        CHECK(t.at(1, 1) == a.y_point[1] * a.y_point[1]);
        CHECK(t.at(0, 1) == a.pair_var(0, 1));
        CHECK(t.at(0, 1) == t.at(1, 0));
    }
    SUBCASE("order-1 matrix determinant is the diagonal entry") {
        SetFamily family(4, 3, {{0, 1, 2}});
        GroundBipartition part = GroundBipartition::from_membership({1, 0, 0, 0});
        std::size_t labels = 2;
        PackAssignment a = PackAssignment::sample(family, part, labels, field, rng);
        FieldElement w1 = field.sample(rng), w2 = field.sample(rng);
        FieldMatrix t = tutte_packing_matrix(family, part, 0, labels, a, w1, w2);
        CHECK(determinant(t) == t.at(0, 0));
    }
    SUBCASE("pair member appears on the off-diagonal with first powers") {
        SetFamily family(4, 3, {{0, 1, 2}});
        GroundBipartition part = GroundBipartition::from_membership({1, 1, 0, 0});
        std::size_t labels = 1;
        PackAssignment a = PackAssignment::sample(family, part, labels, field, rng);
        FieldElement w1 = field.sample(rng), w2 = field.sample(rng);
        FieldMatrix t = tutte_packing_matrix(family, part, 0, labels, a, w1, w2);
        FieldElement zsum = a.z[0];  // single U2 point of the member, one label
        CHECK(t.at(0, 1) == a.pair_var(0, 1) * (field.one() + w2 * a.x[0] * zsum));
        // det of the 2x2: diagonal product plus off-diagonal square.
        FieldElement expect = t.at(0, 0) * t.at(1, 1) + t.at(0, 1) * t.at(0, 1);
        CHECK(determinant(t) == expect);
    }
}

TEST_CASE("sieve fixtures") {
    const FieldConfig& field = make_field(8);
    SUBCASE("two members sharing a U2 element never pack") {
        SetFamily family(5, 3, {{0, 1, 2}, {2, 3, 4}});
        for (int t = 0; t < 30; ++t) {
            Rng rng = substream(43, t);
            GroundBipartition part = GroundBipartition::sample(5, 1, rng);
            PackingParams params;
            params.p = 2;
            params.q = 3;
            // Profile matching the sampled partition, if one exists.
            for (int p2 = 0; p2 <= 2; ++p2)
                for (int p1 = 0; p1 + p2 <= 2; ++p1) {
                    params.p0 = 2 - p1 - p2;
                    params.p1 = p1;
                    params.p2 = p2;
                    params.n1 = 1;
                    PackAssignment a =
                        PackAssignment::sample(family, part, params.label_count(), field, rng);
                    REQUIRE(packing_sieve_eval(family, part, params, a, field).is_zero());
                }
        }
    }
    SUBCASE("single member disjoint from U1 at profile (1,0,0)") {
        SetFamily family(5, 3, {{1, 2, 3}});
        GroundBipartition part = GroundBipartition::from_membership({1, 0, 0, 0, 0});
        PackingParams params;
        params.p = 1;
        params.p0 = 1;
        params.p1 = 0;
        params.p2 = 0;
        params.n1 = 1;
        params.q = 3;
        Rng rng(44);
        std::size_t labels = params.label_count();
        PackAssignment a = PackAssignment::sample(family, part, labels, field, rng);
        // Expand by hand: y_{u1}^2 x_A^2 times the bijective z assignments.
        FieldElement z_part = field.zero();
        std::vector<int> perm{0, 1, 2};
        do {
            FieldElement term = field.one();
            for (int i = 0; i < 3; ++i) {
                FieldElement z = a.z[static_cast<std::size_t>(i) * labels + perm[i]];
                term *= z * z;
            }
            z_part += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        FieldElement expect = a.y_point[0] * a.y_point[0] * a.x[0] * a.x[0] * z_part;
        CHECK(packing_sieve_eval(family, part, params, a, field) == expect);
        CHECK(expect ==
              oracle::bijective_monomial_sum_bf(family, part, 1, 0, 0, a, field));
    }
}

TEST_CASE("sieve identity on random instances with loop counts") {
    const FieldConfig& field = make_field(8);
    for (int t = 0; t < 60; ++t) {
        Rng rng = substream(45, t);
        std::size_t n = 4 + rng.uniform_below(5);
        SetFamily family = random_family(n, 3, 1 + rng.uniform_below(5), rng);
        int p = 1 + static_cast<int>(rng.uniform_below(2));
        int p2 = static_cast<int>(rng.uniform_below(p + 1));
        int p1 = static_cast<int>(rng.uniform_below(p - p2 + 1));
        PackingParams params;
        params.p = p;
        params.p0 = p - p1 - p2;
        params.p1 = p1;
        params.p2 = p2;
        params.q = 3;
        std::size_t n1 = std::min<std::size_t>(n, p1 + 2 * p2 + rng.uniform_below(3));
        params.n1 = static_cast<int>(n1);
        GroundBipartition part = GroundBipartition::sample(n, n1, rng);
        PackAssignment a = PackAssignment::sample(family, part, params.label_count(), field, rng);
        SieveStats stats;
        FieldElement sieve = packing_sieve_eval(family, part, params, a, field, &stats);
        REQUIRE(sieve == oracle::bijective_monomial_sum_bf(family, part, params.p0, params.p1,
                                                           params.p2, a, field));
        REQUIRE(stats.label_subsets == (std::uint64_t{1} << params.label_count()));
    }
}

TEST_CASE("detection fixtures") {
    SUBCASE("disjoint pair is found") {
        SetFamily family(6, 3, {{0, 1, 2}, {3, 4, 5}});
        bool any = false;
        for (std::uint64_t seed = 0; seed < 8 && !any; ++seed)
            any = detect_set_packing(family, 2, seed).found;
        CHECK(any);
    }
    SUBCASE("pigeonhole: all 3-subsets of a 5-set") {
        SetFamily family(5, 3);
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                for (int c = b + 1; c < 5; ++c) family.add_member({a, b, c});
        for (std::uint64_t seed = 0; seed < 50; ++seed)
            REQUIRE_FALSE(detect_set_packing(family, 2, seed).found);
    }
    SUBCASE("agreement with the oracle on random instances") {
        int positives = 0, found = 0;
        for (int t = 0; t < 150; ++t) {
            Rng rng = substream(46, t);
            std::size_t n = 6 + rng.uniform_below(7);
            SetFamily family = random_family(n, 3, 1 + rng.uniform_below(8), rng);
            int p = 1 + static_cast<int>(rng.uniform_below(3));
            bool truth = oracle::has_p_packing_bf(family, p);
            bool got = detect_set_packing(family, p, 700 + t).found;
            if (got) REQUIRE(truth);  // one-sided
            positives += truth ? 1 : 0;
            found += (truth && got) ? 1 : 0;
        }
        CHECK(found >= positives * 3 / 10);
    }
}
