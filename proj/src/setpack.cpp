#include "polysieve/setpack.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace polysieve {

GroundBipartition GroundBipartition::from_membership(std::vector<std::uint8_t> membership) {
    GroundBipartition part;
    part.membership = std::move(membership);
    part.side_position.resize(part.membership.size());
    for (std::size_t u = 0; u < part.membership.size(); ++u) {
        if (part.membership[u]) {
            part.side_position[u] = static_cast<int>(part.u1_elements.size());
            part.u1_elements.push_back(static_cast<int>(u));
        } else {
            part.side_position[u] = static_cast<int>(part.u2_elements.size());
            part.u2_elements.push_back(static_cast<int>(u));
        }
    }
    return part;
}

GroundBipartition GroundBipartition::sample(std::size_t n, std::size_t n1, Rng& rng) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n; i > 1; --i)
        std::swap(order[i - 1], order[rng.uniform_below(i)]);
    std::vector<std::uint8_t> membership(n, 0);
    for (std::size_t i = 0; i < n1; ++i) membership[order[i]] = 1;
    return from_membership(std::move(membership));
}

Rational packing_admissible_probability(long long n, long long n1, long long q, long long p,
                                        long long p0, long long p1, long long p2) {
    if (p0 < 0 || p1 < 0 || p2 < 0 || p0 + p1 + p2 != p) return Rational(0);
    if (n1 < 0 || n1 > n || p * q > n) return Rational(0);
    if (p1 + 2 * p2 > n1 || n1 - p1 - 2 * p2 > n - p * q) return Rational(0);
    BigInt num = binomial(p, p1 + p2) * binomial(p1 + p2, p2);
    BigInt qc1 = q, qc2 = q * (q - 1) / 2;
    for (long long i = 0; i < p1; ++i) num *= qc1;
    for (long long i = 0; i < p2; ++i) num *= qc2;
    num *= binomial(n - p * q, n1 - p1 - 2 * p2);
    BigInt den = binomial(n, n1);
    if (num == 0 || den == 0) return Rational(0);
    return Rational(num, den);
}

namespace {

// (b/a)^-b (1-b/a)^-(a-b), the exponential-scale shape of C(a,b); the limits
// at b=0 and b=a are 1.
double entropy_shape(double a, double b) {
    if (b <= 0 || b >= a) return 1.0;
    double r = b / a;
    return std::exp(-(b * std::log(r) + (a - b) * std::log(1.0 - r)));
}

}  // namespace

double packing_cost_base(long long q, double beta1, double beta2) {
    if (beta1 < 0 || beta2 < 0 || beta1 + beta2 > 1 || beta1 + 2 * beta2 > static_cast<double>(q))
        return std::numeric_limits<double>::infinity();
    double qd = static_cast<double>(q);
    double labels = qd - beta1 - 2 * beta2;  // q p0 + (q-1) p1 + (q-2) p2 per p
    double num = std::pow(2.0, labels) * entropy_shape(qd, beta1 + 2 * beta2);
    double den = entropy_shape(1.0, beta1 + beta2) * entropy_shape(beta1 + beta2, beta2) *
                 std::pow(qd, beta1) * std::pow(qd * (qd - 1) / 2.0, beta2);
    return num / den;
}

BetaChoice packing_beta_search(long long q) {
    auto scan = [&](double lo1, double hi1, double lo2, double hi2, double step) {
        BetaChoice best{0, 0, std::numeric_limits<double>::infinity()};
        for (double b1 = std::max(0.0, lo1); b1 <= std::min(1.0, hi1) + step / 2; b1 += step) {
            for (double b2 = std::max(0.0, lo2); b2 <= std::min(1.0, hi2) + step / 2; b2 += step) {
                double v = packing_cost_base(q, b1, b2);
                if (v < best.base) best = {b1, b2, v};
            }
        }
        return best;
    };
    BetaChoice best = scan(0, 1, 0, 1, 1e-3);
    for (double step : {1e-4, 1e-5, 1e-6}) {
        best = scan(best.beta1 - 10 * step, best.beta1 + 10 * step, best.beta2 - 10 * step,
                    best.beta2 + 10 * step, step);
    }
    return best;
}

PackingParams choose_packing_parameters(std::size_t n, std::size_t q, int p) {
    if (q < 2) throw FamilyError("member size must be at least 2");
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (static_cast<std::size_t>(p) * q > n) throw FamilyError("infeasible parameters: pq > n");
    PackingParams params;
    params.p = p;
    params.q = q;

    // Split fractions: fixed table for q in {3,4,5}, numeric search otherwise.
    long long b1_micro, b2_micro;
    switch (q) {
        case 3: b1_micro = 281509; b2_micro = 679622; break;
        case 4: b1_micro = 323262; b2_micro = 612790; break;
        case 5: b1_micro = 338614; b2_micro = 582673; break;
        default: {
            BetaChoice found = packing_beta_search(static_cast<long long>(q));
            b1_micro = static_cast<long long>(found.beta1 * 1e6 + 0.5);
            b2_micro = static_cast<long long>(found.beta2 * 1e6 + 0.5);
            break;
        }
    }
    params.p1 = static_cast<int>((static_cast<long long>(p) * b1_micro) / 1000000);
    params.p2 = static_cast<int>((static_cast<long long>(p) * b2_micro) / 1000000);
    params.p0 = p - params.p1 - params.p2;
    // n1 = floor(n (p1 + 2 p2) / (p q)); lands inside the feasible window
    // whenever pq <= n.
    params.n1 = static_cast<int>((static_cast<long long>(n) * (params.p1 + 2LL * params.p2)) /
                                 (static_cast<long long>(p) * static_cast<long long>(q)));
    params.admissible_prob = packing_admissible_probability(
        static_cast<long long>(n), params.n1, static_cast<long long>(q), p, params.p0, params.p1,
        params.p2);
    if (params.admissible_prob == 0)
        throw std::logic_error("packing parameter choice fell outside the feasible window");
    params.repetitions = ceil_inverse(params.admissible_prob);
    return params;
}

PackAssignment PackAssignment::sample(const SetFamily& family, const GroundBipartition& partition,
                                      std::size_t label_count, const FieldConfig& field,
                                      Rng& rng) {
    PackAssignment a;
    a.field = &field;
    a.x.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) a.x.push_back(field.sample(rng));
    std::size_t n1 = partition.n1();
    a.y_point.reserve(n1);
    for (std::size_t i = 0; i < n1; ++i) a.y_point.push_back(field.sample(rng));
    a.y_pair.reserve(n1 * (n1 - 1) / 2);
    for (std::size_t j = 1; j < n1; ++j)
        for (std::size_t i = 0; i < j; ++i) a.y_pair.push_back(field.sample(rng));
    std::size_t n2 = partition.u2_elements.size();
    a.z.reserve(n2 * label_count);
    for (std::size_t i = 0; i < n2 * label_count; ++i) a.z.push_back(field.sample(rng));
    return a;
}

namespace {

// Per-label-subset base sums shared by S(J) and T(J): z label sums per U2
// element, then per-member products split by the member's U1 profile.
struct SubsetBases {
    std::vector<FieldElement> s_terms;             // w0^2 coefficients, members avoiding U1
    std::vector<FieldElement> diag;                // per U1 position, w1^2 sums
    std::vector<std::vector<FieldElement>> off;    // per U1 position pair, w2 sums
    bool profile_ok = true;                        // no member may meet U1 in 3+ points
};

SubsetBases subset_bases(const SetFamily& family, const GroundBipartition& partition,
                         std::uint64_t avoid_mask, std::size_t label_count,
                         const PackAssignment& assignment) {
    const FieldConfig& field = *assignment.field;
    std::size_t n1 = partition.n1();
    std::size_t n2 = partition.u2_elements.size();

    std::vector<FieldElement> z1(n2, field.zero());  // allowed z sums
    std::vector<FieldElement> z2(n2, field.zero());  // allowed z^2 sums
    for (std::size_t u = 0; u < n2; ++u) {
        for (std::size_t l = 0; l < label_count; ++l) {
            if ((avoid_mask >> l) & 1) continue;
            const FieldElement& zv = assignment.z[u * label_count + l];
            z1[u] += zv;
            z2[u] += zv * zv;
        }
    }

    SubsetBases bases;
    bases.diag.assign(n1, field.zero());
    bases.off.assign(n1, std::vector<FieldElement>(n1, field.zero()));
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::vector<int> hits;
        for (int u : family.member(i))
            if (partition.in_u1(u)) hits.push_back(partition.side_position[u]);
        if (hits.size() == 0) {
            FieldElement term = assignment.x[i] * assignment.x[i];
            for (int u : family.member(i)) term *= z2[partition.side_position[u]];
            bases.s_terms.push_back(term);
        } else if (hits.size() == 1) {
            FieldElement term = assignment.x[i] * assignment.x[i];
            for (int u : family.member(i))
                if (!partition.in_u1(u)) term *= z2[partition.side_position[u]];
            bases.diag[hits[0]] += term;
        } else if (hits.size() == 2) {
            FieldElement term = assignment.x[i];
            for (int u : family.member(i))
                if (!partition.in_u1(u)) term *= z1[partition.side_position[u]];
            bases.off[hits[0]][hits[1]] += term;
            bases.off[hits[1]][hits[0]] += term;
        }
        // Members meeting U1 in 3+ points cannot appear in any prepacking
        // and contribute nothing.
    }
    return bases;
}

}  // namespace

FieldElement s_factor_eval(const SetFamily& family, const GroundBipartition& partition,
                           std::uint64_t avoid_mask, std::size_t label_count,
                           const PackAssignment& assignment, const FieldElement& w0) {
    const FieldConfig& field = *assignment.field;
    SubsetBases bases = subset_bases(family, partition, avoid_mask, label_count, assignment);
    FieldElement product = field.one();
    FieldElement w0_sq = w0 * w0;
    for (const auto& term : bases.s_terms) product *= field.one() + w0_sq * term;
    return product;
}

FieldMatrix tutte_packing_matrix(const SetFamily& family, const GroundBipartition& partition,
                                 std::uint64_t avoid_mask, std::size_t label_count,
                                 const PackAssignment& assignment, const FieldElement& w1,
                                 const FieldElement& w2) {
    const FieldConfig& field = *assignment.field;
    SubsetBases bases = subset_bases(family, partition, avoid_mask, label_count, assignment);
    std::size_t n1 = partition.n1();
    FieldMatrix t(n1, field);
    FieldElement w1_sq = w1 * w1;
    for (std::size_t i = 0; i < n1; ++i) {
        FieldElement y = assignment.y_point[i];
        t.at(i, i) = y * y * (field.one() + w1_sq * bases.diag[i]);
        for (std::size_t j = i + 1; j < n1; ++j) {
            FieldElement entry =
                assignment.pair_var(i, j) * (field.one() + w2 * bases.off[i][j]);
            t.at(i, j) = entry;
            t.at(j, i) = entry;
        }
    }
    return t;
}

FieldElement packing_sieve_eval(const SetFamily& family, const GroundBipartition& partition,
                                const PackingParams& params, const PackAssignment& assignment,
                                const FieldConfig& field, SieveStats* stats) {
    std::size_t label_count = params.label_count();
    if (label_count > 62) throw std::invalid_argument("label budget too large");
    std::size_t n1 = partition.n1();

    TriDegree bounds{2 * family.size(), 2 * n1, n1};
    TriDegree target{2 * static_cast<std::size_t>(params.p0),
                     2 * static_cast<std::size_t>(params.p1),
                     2 * static_cast<std::size_t>(params.p2)};
    FieldElement total = field.zero();
    // With more sets demanded than available degrees the coefficient is
    // structurally zero; the subset loop still runs to keep its shape.
    bool feasible =
        target.d0 <= bounds.d0 && target.d1 <= bounds.d1 && target.d2 <= bounds.d2;

    const std::uint64_t subsets = std::uint64_t{1} << label_count;
    for (std::uint64_t j = 0; j < subsets; ++j) {
        if (stats) ++stats->label_subsets;
        if (!feasible) continue;
        SubsetBases bases = subset_bases(family, partition, j, label_count, assignment);
        auto evaluator = [&](FieldElement w0, FieldElement w1, FieldElement w2) {
            FieldElement s = field.one();
            FieldElement w0_sq = w0 * w0;
            for (const auto& term : bases.s_terms) s *= field.one() + w0_sq * term;
            FieldMatrix t(n1, field);
            FieldElement w1_sq = w1 * w1;
            for (std::size_t a = 0; a < n1; ++a) {
                FieldElement y = assignment.y_point[a];
                t.at(a, a) = y * y * (field.one() + w1_sq * bases.diag[a]);
                for (std::size_t b = a + 1; b < n1; ++b) {
                    FieldElement entry =
                        assignment.pair_var(a, b) * (field.one() + w2 * bases.off[a][b]);
                    t.at(a, b) = entry;
                    t.at(b, a) = entry;
                }
            }
            return s * determinant(t);
        };
        total += extract_tri_coefficient(evaluator, bounds, target, field);
    }
    return total;
}

SetPackResult detect_set_packing(const SetFamily& family, int p, std::uint64_t seed,
                                 const DetectOptions& options) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    SetPackResult result;
    std::size_t n = family.ground_size(), q = family.member_size();
    if (static_cast<std::size_t>(p) * q > n) return result;  // pigeonhole
    if (static_cast<std::size_t>(p) > family.size()) return result;

    PackingParams params = choose_packing_parameters(n, q, p);
    result.p0 = params.p0;
    result.p1 = params.p1;
    result.p2 = params.p2;
    result.n1 = params.n1;

    // Field-size floor from the error analysis (16n), raised when the
    // trivariate degree bounds need more evaluation points.
    int min_bits = std::bit_width(static_cast<unsigned long long>(16 * n - 1));
    int interp_bits = std::bit_width(static_cast<unsigned long long>(
        std::max<std::size_t>(2 * family.size(), 2 * static_cast<std::size_t>(params.n1)) + 1));
    min_bits = std::max(min_bits, interp_bits);
    result.field_bits = options.field_bits.value_or(smallest_supported_degree(min_bits));
    const FieldConfig& field = make_field(result.field_bits);
    result.repetitions_planned = options.repetitions.value_or(params.repetitions);

    std::size_t label_count = params.label_count();
    for (std::uint64_t rep = 0; rep < result.repetitions_planned; ++rep) {
        Rng rng = substream(seed, rep);
        GroundBipartition partition =
            GroundBipartition::sample(n, static_cast<std::size_t>(params.n1), rng);
        PackAssignment assignment =
            PackAssignment::sample(family, partition, label_count, field, rng);
        result.repetitions_executed = rep + 1;
        SieveStats stats;
        FieldElement value =
            packing_sieve_eval(family, partition, params, assignment, field, &stats);
        result.label_subsets = stats.label_subsets;
        if (!value.is_zero()) {
            result.found = true;
            return result;
        }
    }
    return result;
}

}  // namespace polysieve
