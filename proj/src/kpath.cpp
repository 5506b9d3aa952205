#include "polysieve/kpath.hpp"

#include <bit>
#include <stdexcept>

namespace polysieve {

bool is_v2ev1ev2_palindrome(const WalkWindow& window, const VertexBipartition& partition) {
    return window.v_first == window.v_last && window.e_first == window.e_second &&
           !partition.in_v1(window.v_first) && partition.in_v1(window.v_mid);
}

PathAssignment PathAssignment::sample(const Graph& g, const VertexBipartition& partition,
                                      const PathSieveParams& params, const FieldConfig& field,
                                      Rng& rng) {
    PathAssignment a;
    a.field = &field;
    a.x.reserve(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) a.x.push_back(field.sample(rng));
    a.y.assign(g.vertex_count() * static_cast<std::size_t>(params.k1), field.zero());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!partition.in_v1(static_cast<int>(v))) continue;
        for (int i = 0; i < params.k1; ++i) a.y[v * params.k1 + i] = field.sample(rng);
    }
    a.z.assign(g.edge_count() * static_cast<std::size_t>(params.l2), field.zero());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (!partition.edge_in_e2(g, static_cast<int>(e))) continue;
        for (int i = 0; i < params.l2; ++i) a.z[e * params.l2 + i] = field.sample(rng);
    }
    return a;
}

Rational admissible_probability(int k, int k1, int l2) {
    if (k < 1 || k1 < 0 || l2 < 0) return Rational(0);
    BigInt num = binomial(k1 + 1, k - k1 - l2) * binomial(k - k1 - 1, l2);
    BigInt den = BigInt(1) << k;
    return Rational(num, den);
}

PathParameterChoice choose_path_parameters(int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    PathParameterChoice choice;
    choice.k1 = k / 2;
    // floor(0.207107 k) in exact integer arithmetic
    choice.l2 = static_cast<int>((static_cast<long long>(k) * 207107) / 1000000);
    // Clamp into the window k1 + l2 <= k - 1 <= 2 k1 + l2 where the
    // admissibility probability is positive.
    if (choice.k1 < k && choice.l2 > k - 1 - choice.k1) choice.l2 = k - 1 - choice.k1;
    if (choice.l2 < 0) choice.l2 = 0;
    choice.admissible_prob = admissible_probability(k, choice.k1, choice.l2);
    if (choice.admissible_prob == 0)
        throw std::logic_error("path parameter choice fell outside the admissibility window");
    choice.repetitions = ceil_inverse(choice.admissible_prob);
    return choice;
}

FieldElement walk_sum_avoiding(const Graph& g, int s, const VertexBipartition& partition,
                               const PathSieveParams& params, std::uint64_t avoid_k1_mask,
                               std::uint64_t avoid_l2_mask, const PathAssignment& assignment) {
    const FieldConfig& field = *assignment.field;
    const int n = static_cast<int>(g.vertex_count());
    const int k = params.k, k1 = params.k1, l2 = params.l2;
    if (k < 1 || s < 0 || s >= n) return field.zero();

    // Per-occurrence label factors over the allowed labels.
    std::vector<FieldElement> y_sum(n, field.zero());
    for (int v = 0; v < n; ++v) {
        if (!partition.in_v1(v)) continue;
        for (int i = 0; i < k1; ++i)
            if (!((avoid_k1_mask >> i) & 1)) y_sum[v] += assignment.y[static_cast<std::size_t>(v) * k1 + i];
    }
    std::vector<FieldElement> z_sum(g.edge_count(), field.zero());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (!partition.edge_in_e2(g, static_cast<int>(e))) continue;
        for (int i = 0; i < l2; ++i)
            if (!((avoid_l2_mask >> i) & 1)) z_sum[e] += assignment.z[e * l2 + i];
    }

    // Forward DP over walk prefixes from s. State: (V1 occurrences so far,
    // E2 occurrences so far, previous vertex, current vertex); the window
    // exclusion needs only the last two vertices, because the edges of a
    // five-symbol window are determined by its vertices in a simple graph.
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    auto idx = [&](int a, int b, int u, int v) {
        return ((static_cast<std::size_t>(a) * (l2 + 1) + b) * n + u) * n + v;
    };
    std::vector<FieldElement> cur((k1 + 1) * (l2 + 1) * nn, field.zero());
    std::vector<FieldElement> next(cur.size(), field.zero());

    int a0 = partition.in_v1(s) ? 1 : 0;
    if (a0 > k1) return field.zero();
    FieldElement start = partition.in_v1(s) ? y_sum[s] : field.one();
    if (k == 1) return (a0 == k1 && l2 == 0) ? start : field.zero();

    // Length-2 prefixes; no window can exist yet.
    for (auto [w, e] : g.neighbors(s)) {
        int a = a0 + (partition.in_v1(w) ? 1 : 0);
        int b = partition.edge_in_e2(g, e) ? 1 : 0;
        if (a > k1 || b > l2) continue;
        FieldElement f = start * assignment.x[e];
        if (partition.in_v1(w)) f *= y_sum[w];
        if (partition.edge_in_e2(g, e)) f *= z_sum[e];
        cur[idx(a, b, s, w)] += f;
    }

    for (int len = 2; len < k; ++len) {
        for (auto& x : next) x = field.zero();
        for (int a = 0; a <= k1; ++a) {
            for (int b = 0; b <= l2; ++b) {
                for (int u = 0; u < n; ++u) {
                    for (int v = 0; v < n; ++v) {
                        const FieldElement& val = cur[idx(a, b, u, v)];
                        if (val.is_zero()) continue;
                        for (auto [w, e] : g.neighbors(v)) {
                            // V2 E V1 E V2 palindrome window (u, uv, v, vw, w)
                            if (w == u && partition.in_v1(v) && !partition.in_v1(w)) continue;
                            int a2 = a + (partition.in_v1(w) ? 1 : 0);
                            int b2 = b + (partition.edge_in_e2(g, e) ? 1 : 0);
                            if (a2 > k1 || b2 > l2) continue;
                            FieldElement f = val * assignment.x[e];
                            if (partition.in_v1(w)) f *= y_sum[w];
                            if (partition.edge_in_e2(g, e)) f *= z_sum[e];
                            next[idx(a2, b2, v, w)] += f;
                        }
                    }
                }
            }
        }
        cur.swap(next);
    }

    FieldElement total = field.zero();
    for (std::size_t i = 0; i < nn; ++i) total += cur[idx(k1, l2, 0, 0) + i];
    return total;
}

FieldElement path_sieve_eval(const Graph& g, int s, const VertexBipartition& partition,
                             const PathSieveParams& params, const PathAssignment& assignment,
                             SieveStats* stats) {
    const FieldConfig& field = *assignment.field;
    if (params.k1 + params.l2 > 62) throw std::invalid_argument("label budget too large");
    FieldElement total = field.zero();
    const std::uint64_t k1_subsets = std::uint64_t{1} << params.k1;
    const std::uint64_t l2_subsets = std::uint64_t{1} << params.l2;
    for (std::uint64_t i1 = 0; i1 < k1_subsets; ++i1) {
        for (std::uint64_t j2 = 0; j2 < l2_subsets; ++j2) {
            if (stats) ++stats->label_subsets;
            // (-1)^(|I1|+|J2|) = 1 in characteristic 2
            total += walk_sum_avoiding(g, s, partition, params, i1, j2, assignment);
        }
    }
    return total;
}

KPathResult detect_k_path(const Graph& g, int k, std::uint64_t seed,
                          const DetectOptions& options) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    KPathResult result;
    if (static_cast<std::size_t>(k) > g.vertex_count()) return result;

    PathParameterChoice choice = choose_path_parameters(k);
    result.k1 = choice.k1;
    result.l2 = choice.l2;
    int min_bits = std::bit_width(static_cast<unsigned long long>(6 * static_cast<long long>(k) - 1));
    result.field_bits = options.field_bits.value_or(smallest_supported_degree(min_bits));
    const FieldConfig& field = make_field(result.field_bits);
    result.repetitions_planned = options.repetitions.value_or(choice.repetitions);
    PathSieveParams params{k, choice.k1, choice.l2};

    for (std::uint64_t rep = 0; rep < result.repetitions_planned; ++rep) {
        Rng rng = substream(seed, rep);
        VertexBipartition partition = VertexBipartition::sample(g.vertex_count(), rng);
        PathAssignment assignment = PathAssignment::sample(g, partition, params, field, rng);
        result.repetitions_executed = rep + 1;
        for (std::size_t s = 0; s < g.vertex_count(); ++s) {
            SieveStats stats;
            FieldElement value =
                path_sieve_eval(g, static_cast<int>(s), partition, params, assignment, &stats);
            result.label_subsets = stats.label_subsets;
            if (!value.is_zero()) {
                // Nonzero evaluations are certificates: only labeled
                // admissible paths survive the sieve.
                result.found = true;
                return result;
            }
        }
    }
    return result;
}

}  // namespace polysieve
