#pragma once

#include <cstdint>
#include <vector>

#include "polysieve/detect.hpp"
#include "polysieve/gf.hpp"
#include "polysieve/graph.hpp"
#include "polysieve/rational.hpp"
#include "polysieve/rng.hpp"

namespace polysieve {

/// Ordered vertex bipartition (V1, V2). E1/E2 are the edges with both ends
/// in V1/V2 respectively.
struct VertexBipartition {
    std::vector<std::uint8_t> membership;  // 1 if the vertex lies in V1

    bool in_v1(int v) const { return membership[v] != 0; }

    bool edge_in_e2(const Graph& g, int e) const {
        auto [u, v] = g.edge(e);
        return !in_v1(u) && !in_v1(v);
    }

    /// Uniform over all 2^n ordered bipartitions.
    static VertexBipartition sample(std::size_t n, Rng& rng) {
        VertexBipartition part;
        part.membership.resize(n);
        for (std::size_t v = 0; v < n; ++v) part.membership[v] = rng.coin() ? 1 : 0;
        return part;
    }
};

/// Walk-sieve parameters: target walk length k (in vertices), the exact
/// number k1 of V1-vertex occurrences, and the exact number l2 of E2-edge
/// occurrences. Label sets are K1 = {0..k1-1} and L2 = {0..l2-1}.
struct PathSieveParams {
    int k = 0;
    int k1 = 0;
    int l2 = 0;
};

/// Five-symbol walk window (vertex, edge, vertex, edge, vertex); edges are
/// edge indices. This is the unit the palindrome exclusion inspects.
struct WalkWindow {
    int v_first;
    int e_first;
    int v_mid;
    int e_second;
    int v_last;
};

/// True iff the window is a V2 E V1 E V2 palindrome: equal V2 end vertices,
/// equal edges, and a V1 middle vertex.
bool is_v2ev1ev2_palindrome(const WalkWindow& window, const VertexBipartition& partition);

/// Values for the sieve indeterminates. Sampling order is fixed and
/// documented: x per edge in index order, then y for V1 vertices in
/// ascending (vertex, label) order, then z for E2 edges in ascending
/// (edge, label) order. Entries outside V1/E2 stay zero and are never read.
struct PathAssignment {
    const FieldConfig* field = nullptr;
    std::vector<FieldElement> x;  // edge vars, indexed by edge
    std::vector<FieldElement> y;  // vertex-label vars, v * k1 + i
    std::vector<FieldElement> z;  // edge-label vars, e * l2 + i

    static PathAssignment sample(const Graph& g, const VertexBipartition& partition,
                                 const PathSieveParams& params, const FieldConfig& field,
                                 Rng& rng);
};

/// Probability that a fixed k-path starting at s has exactly k1 vertex
/// occurrences in V1 and l2 edge occurrences inside V2, over a uniform
/// bipartition: 2^-k * C(k1+1, k-k1-l2) * C(k-k1-1, l2). Exact.
Rational admissible_probability(int k, int k1, int l2);

struct PathParameterChoice {
    int k1 = 0;
    int l2 = 0;
    std::uint64_t repetitions = 1;
    Rational admissible_prob;
};

/// k1 = floor(k/2), l2 = floor(0.207107 k) clamped into the window where the
/// admissibility probability is positive; repetitions = ceil(1/probability).
PathParameterChoice choose_path_parameters(int k);

/// Sum of walk monomials over all labeled admissible k-walks starting at s
/// whose labels avoid the masked labels, evaluated at the assignment.
/// Computed by a sliding-window dynamic program over walk extensions; each
/// edge occurrence contributes x_e, each V1-vertex occurrence the sum of its
/// allowed y labels, each E2-edge occurrence the sum of its allowed z labels.
FieldElement walk_sum_avoiding(const Graph& g, int s, const VertexBipartition& partition,
                               const PathSieveParams& params, std::uint64_t avoid_k1_mask,
                               std::uint64_t avoid_l2_mask, const PathAssignment& assignment);

/// Inclusion-exclusion over all label subsets; equals the evaluation of the
/// generating polynomial of bijectively labeled admissible k-paths from s.
FieldElement path_sieve_eval(const Graph& g, int s, const VertexBipartition& partition,
                             const PathSieveParams& params, const PathAssignment& assignment,
                             SieveStats* stats = nullptr);

struct KPathResult {
    bool found = false;
    int k1 = 0;
    int l2 = 0;
    int field_bits = 0;
    std::uint64_t repetitions_planned = 0;
    std::uint64_t repetitions_executed = 0;
    std::uint64_t label_subsets = 0;  // per full sieve evaluation
};

/// Decides whether g contains a simple path on k vertices. YES answers are
/// certificates; NO answers are wrong with probability at most about
/// e^-1 + 1/6 per the parameter choice. Deterministic given the seed.
KPathResult detect_k_path(const Graph& g, int k, std::uint64_t seed,
                          const DetectOptions& options = {});

}  // namespace polysieve
