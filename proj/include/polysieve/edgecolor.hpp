#pragma once

#include <cstdint>
#include <vector>

#include "polysieve/detect.hpp"
#include "polysieve/gf.hpp"
#include "polysieve/graph.hpp"
#include "polysieve/linalg.hpp"
#include "polysieve/rng.hpp"

namespace polysieve {

/// Matrix diagonal convention: zero diagonal generates perfect matchings
/// (regular case); unit diagonal generates all matchings (general case).
enum class DiagonalMode { perfect_matchings, matchings };

/// Indeterminate values. Sampling order: x over (edge, matching index)
/// row-major, then y over (edge, label) row-major.
struct ColorAssignment {
    const FieldConfig* field = nullptr;
    std::size_t p = 0;
    std::size_t labels = 0;
    std::vector<FieldElement> x;  // e * p + i
    std::vector<FieldElement> y;  // e * labels + l

    static ColorAssignment sample(const Graph& g, std::size_t p, std::size_t labels,
                                  const FieldConfig& field, Rng& rng);
};

/// Symmetric n x n matrix for matching index i: entry (u,v) is
/// x_{uv,i} * (sum of allowed y_{uv,l}) on edges, 0 elsewhere; the diagonal
/// is 0 or 1 depending on the mode.
FieldMatrix color_matrix(const Graph& g, std::size_t matching_index, std::uint64_t avoid_mask,
                         std::size_t label_count, const ColorAssignment& assignment,
                         DiagonalMode mode, const FieldConfig& field);

/// Sum over all label subsets J of the product over i of det T^(i)(J);
/// equals the evaluation of the generating polynomial of bijectively labeled
/// p-tuples of pairwise edge-disjoint (perfect) matchings.
FieldElement coloring_sieve_eval(const Graph& g, std::size_t p, std::size_t label_count,
                                 const ColorAssignment& assignment, const FieldConfig& field,
                                 DiagonalMode mode, SieveStats* stats = nullptr);

struct EdgeColorResult {
    bool found = false;
    std::size_t colors = 0;  // d in the regular case, max degree otherwise
    int field_bits = 0;
    std::uint64_t repetitions_planned = 0;
    std::uint64_t repetitions_executed = 0;
    std::uint64_t label_subsets = 0;
};

/// Decides whether a d-regular graph admits a proper d-edge-coloring, i.e.
/// d-1 pairwise edge-disjoint perfect matchings. Throws GraphError when the
/// input is not regular; odd vertex count is an immediate NO.
EdgeColorResult detect_edge_coloring(const Graph& g, std::uint64_t seed,
                                     const DetectOptions& options = {});

/// Decides whether an arbitrary simple graph can be properly edge-colored
/// with max-degree many colors (the only alternative being max degree + 1).
EdgeColorResult detect_edge_coloring_general(const Graph& g, std::uint64_t seed,
                                             const DetectOptions& options = {});

}  // namespace polysieve
