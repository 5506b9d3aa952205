#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polysieve/dimmatch.hpp"
#include "polysieve/edgecolor.hpp"
#include "polysieve/families.hpp"
#include "polysieve/gf.hpp"
#include "polysieve/graph.hpp"
#include "polysieve/kpath.hpp"
#include "polysieve/linalg.hpp"
#include "polysieve/setpack.hpp"

// Brute-force reference implementations for desk-scale instances. These are
// deliberately independent of the sieve code paths: they enumerate the
// defining objects (walks, packings, matching tuples, involutions,
// permutations) directly. Guards refuse instances that are too large instead
// of running unbounded searches.

namespace polysieve::oracle {

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive DFS over simple paths: does g contain a path on k vertices?
bool has_k_path_bf(const Graph& g, int k);

/// Branch-and-bound over disjoint subfamilies.
bool has_p_packing_bf(const SetFamily& family, int p);

/// Exhaustive disjoint-tuple search in a partite family.
bool has_qdim_packing_bf(const PartiteFamily& family, int p);

/// Chromatic index by backtracking; the result is max degree or max degree
/// plus one.
int edge_chromatic_bf(const Graph& g);

/// Direct summation over every admissible k-walk from s and every labeling
/// into the allowed labels, with no dynamic programming.
FieldElement labeled_walk_sum_bf(const Graph& g, int s, const VertexBipartition& partition,
                                 const PathSieveParams& params, std::uint64_t avoid_k1_mask,
                                 std::uint64_t avoid_l2_mask, const PathAssignment& assignment);

/// Value lists s_{K,k} defining a squared-entry symmetric matrix: diagonal
/// (i,i) = sum of s_{{i},k}^2, off-diagonal (i,j) = sum of s_{{i,j},k}.
struct TutteEntrySpec {
    // diagonal[i] holds the s_{{i},k} list; off[i][j-i-1] the s_{{i,j},k}
    // list for i < j.
    std::vector<std::vector<FieldElement>> diagonal;
    std::vector<std::vector<std::vector<FieldElement>>> off;

    std::size_t order() const { return diagonal.size(); }
};

/// Assembles the matrix described by the entry spec.
FieldMatrix assemble_tutte_matrix(const TutteEntrySpec& spec, const FieldConfig& field);

/// Sum over all involutions of {0..m-1} of the product over orbits {i,j}
/// (i <= j) of the squared s-value sums. The determinant-partition identity
/// states this equals det of the assembled matrix.
FieldElement involution_sum_bf(const TutteEntrySpec& spec, const FieldConfig& field);

/// Permutation-sum permanent; equals the determinant in characteristic 2.
FieldElement permanent_char2_bf(const FieldMatrix& m);

/// All perfect matchings of g, each as a sorted list of edge indices.
std::vector<std::vector<int>> perfect_matchings_bf(const Graph& g);

/// Sum over ordered p-tuples of perfect matchings (not necessarily
/// disjoint) and every labeling into the allowed labels of the tuple
/// monomial; the per-label-subset counterpart of the coloring sieve.
FieldElement matching_tuple_sum_bf(const Graph& g, std::size_t p, std::size_t label_count,
                                   std::uint64_t avoid_mask, const ColorAssignment& assignment,
                                   const FieldConfig& field);

/// Direct sums over bijectively labeled target structures, one overload per
/// problem. Each equals the corresponding sieve evaluation; that equality is
/// the module acceptance test.
FieldElement bijective_monomial_sum_bf(const Graph& g, int s, const VertexBipartition& partition,
                                       const PathSieveParams& params,
                                       const PathAssignment& assignment);
FieldElement bijective_monomial_sum_bf(const PartiteFamily& family, int p,
                                       const QdimAssignment& assignment, const FieldConfig& field);
FieldElement bijective_monomial_sum_bf(const SetFamily& family, const GroundBipartition& partition,
                                       int p0, int p1, int p2, const PackAssignment& assignment,
                                       const FieldConfig& field);
FieldElement bijective_monomial_sum_bf(const Graph& g, std::size_t p, std::size_t label_count,
                                       const ColorAssignment& assignment,
                                       const FieldConfig& field);

}  // namespace polysieve::oracle
