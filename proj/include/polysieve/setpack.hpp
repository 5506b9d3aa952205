#pragma once

#include <cstdint>
#include <vector>

#include "polysieve/detect.hpp"
#include "polysieve/families.hpp"
#include "polysieve/gf.hpp"
#include "polysieve/linalg.hpp"
#include "polysieve/rational.hpp"
#include "polysieve/rng.hpp"

namespace polysieve {

/// Ordered partition (U1, U2) of the ground set with |U1| = n1.
struct GroundBipartition {
    std::vector<std::uint8_t> membership;  // 1 if the element lies in U1
    std::vector<int> u1_elements;          // ascending
    std::vector<int> u2_elements;          // ascending
    std::vector<int> side_position;        // index of each element within its side list

    bool in_u1(int u) const { return membership[u] != 0; }
    std::size_t n1() const { return u1_elements.size(); }

    static GroundBipartition from_membership(std::vector<std::uint8_t> membership);

    /// Uniform over all C(n, n1) partitions: seeded Fisher-Yates shuffle of
    /// the ground set, first n1 elements become U1.
    static GroundBipartition sample(std::size_t n, std::size_t n1, Rng& rng);
};

/// Probability that a fixed p-packing projects to a (p0,p1,p2)-packing under
/// a uniform (n1, n-n1)-partition:
/// C(p,p1+p2) C(p1+p2,p2) q^p1 C(q,2)^p2 C(n-pq, n1-p1-2p2) / C(n,n1).
/// Returns 0 outside the feasible window. Exact.
Rational packing_admissible_probability(long long n, long long n1, long long q, long long p,
                                        long long p0, long long p1, long long p2);

/// Asymptotic per-p cost base of the sieve at split fractions (beta1, beta2):
/// label subsets divided by admissibility probability, in the exponential
/// scale. Minimized by packing_beta_search.
double packing_cost_base(long long q, double beta1, double beta2);

struct BetaChoice {
    double beta1 = 0;
    double beta2 = 0;
    double base = 0;  // minimized cost base
};

/// Grid search for the (beta1, beta2) minimizing packing_cost_base: step
/// 1e-3 over the feasible triangle, then local refinement.
BetaChoice packing_beta_search(long long q);

struct PackingParams {
    int p = 0;
    int p0 = 0;
    int p1 = 0;
    int p2 = 0;
    int n1 = 0;
    std::uint64_t repetitions = 1;
    Rational admissible_prob;
    std::size_t q = 0;

    std::size_t label_count() const {
        return q * static_cast<std::size_t>(p0) + (q - 1) * static_cast<std::size_t>(p1) +
               (q - 2) * static_cast<std::size_t>(p2);
    }
};

/// Splits p as p1 = floor(beta1 p), p2 = floor(beta2 p), p0 = rest, and sets
/// n1 = floor(n (p1+2p2) / (pq)); repetitions = ceil(1/probability). Beta
/// values come from a fixed table for q in {3,4,5} and from
/// packing_beta_search otherwise. Throws FamilyError when pq > n.
PackingParams choose_packing_parameters(std::size_t n, std::size_t q, int p);

/// Indeterminate values. Sampling order: x per member, then y singletons for
/// U1 elements ascending, then y pairs ordered by larger position j then
/// smaller position i, then z over (U2 element, label) ascending.
struct PackAssignment {
    const FieldConfig* field = nullptr;
    std::vector<FieldElement> x;        // per member
    std::vector<FieldElement> y_point;  // per U1 position
    std::vector<FieldElement> y_pair;   // triangular: pair (i < j) at j*(j-1)/2 + i
    std::vector<FieldElement> z;        // u2_position * labels + label

    const FieldElement& pair_var(std::size_t i, std::size_t j) const {
        return i < j ? y_pair[j * (j - 1) / 2 + i] : y_pair[i * (i - 1) / 2 + j];
    }

    static PackAssignment sample(const SetFamily& family, const GroundBipartition& partition,
                                 std::size_t label_count, const FieldConfig& field, Rng& rng);
};

/// Product over members disjoint from U1 of
/// (1 + w0^2 x_A^2 prod over the member's points of the allowed z^2 sums).
FieldElement s_factor_eval(const SetFamily& family, const GroundBipartition& partition,
                           std::uint64_t avoid_mask, std::size_t label_count,
                           const PackAssignment& assignment, const FieldElement& w0);

/// Symmetric n1 x n1 matrix: squared diagonal entries carrying w1^2 and the
/// members meeting U1 in one point, first-power off-diagonal entries
/// carrying w2 and the members meeting U1 in two points.
FieldMatrix tutte_packing_matrix(const SetFamily& family, const GroundBipartition& partition,
                                 std::uint64_t avoid_mask, std::size_t label_count,
                                 const PackAssignment& assignment, const FieldElement& w1,
                                 const FieldElement& w2);

/// For each label subset J, extracts the coefficient of
/// w0^(2p0) w1^(2p1) w2^(2p2) from S(J) * det T(J) with per-variable degree
/// bounds (2|F|, 2n1, n1), and sums over J. Equals the evaluation of the
/// generating polynomial of bijectively labeled (p0,p1,p2)-packings.
FieldElement packing_sieve_eval(const SetFamily& family, const GroundBipartition& partition,
                                const PackingParams& params, const PackAssignment& assignment,
                                const FieldConfig& field, SieveStats* stats = nullptr);

struct SetPackResult {
    bool found = false;
    int p0 = 0;
    int p1 = 0;
    int p2 = 0;
    int n1 = 0;
    int field_bits = 0;
    std::uint64_t repetitions_planned = 0;
    std::uint64_t repetitions_executed = 0;
    std::uint64_t label_subsets = 0;
};

/// Decides whether the family contains p pairwise disjoint members. YES is
/// certain; a fixed p-packing is witnessed with probability at least
/// (1 - 1/e)/2 over the planned repetitions.
SetPackResult detect_set_packing(const SetFamily& family, int p, std::uint64_t seed,
                                 const DetectOptions& options = {});

}  // namespace polysieve
