#pragma once

#include <cstdint>
#include <vector>

#include "polysieve/detect.hpp"
#include "polysieve/families.hpp"
#include "polysieve/gf.hpp"
#include "polysieve/linalg.hpp"
#include "polysieve/rng.hpp"

namespace polysieve {

/// Number of sieve labels for a q-dimensional p-packing: p(q-2).
inline std::size_t qdim_label_count(const PartiteFamily& family, int p) {
    return static_cast<std::size_t>(p) * (family.dimensions() - 2);
}

/// Indeterminate values for the determinant sieve. Sampling order: x per
/// member in index order, then y over (row, column) = U1 x U2 coordinates in
/// row-major order, then z over (point, label) for points of parts 3..q in
/// ascending order.
struct QdimAssignment {
    const FieldConfig* field = nullptr;
    std::vector<FieldElement> x;  // per member
    std::vector<FieldElement> y;  // u1 * r + u2 (part-local coordinates)
    std::vector<FieldElement> z;  // point_index * labels + label, points of parts 3..q

    static QdimAssignment sample(const PartiteFamily& family, std::size_t label_count,
                                 const FieldConfig& field, Rng& rng);
};

/// The r x r symbolic-determinant matrix with rows U1 and columns U2:
/// entry(u1,u2) = y_{u1,u2} * (1 + w * sum over members A containing both of
/// x_A * prod over the remaining coordinates of the allowed-label z sums).
FieldMatrix build_edmonds_matrix(const PartiteFamily& family, std::uint64_t avoid_mask,
                                 std::size_t label_count, const QdimAssignment& assignment,
                                 const FieldElement& w);

/// Sums the coefficient of w^p in det E(J) over all 2^(p(q-2)) label subsets
/// J; equals the evaluation of the generating polynomial of bijectively
/// labeled p-packings (with the weight variable divided out).
FieldElement qdim_sieve_eval(const PartiteFamily& family, int p, const QdimAssignment& assignment,
                             const FieldConfig& field, SieveStats* stats = nullptr);

struct QdimResult {
    bool found = false;
    int field_bits = 0;
    std::uint64_t repetitions_planned = 0;
    std::uint64_t repetitions_executed = 0;
    std::uint64_t label_subsets = 0;
};

/// Decides whether the q-partite family contains p pairwise disjoint
/// members. YES is certain; NO errs with probability <= 2^-repetitions.
QdimResult detect_qdim_packing(const PartiteFamily& family, int p, std::uint64_t seed,
                               const DetectOptions& options = {});

}  // namespace polysieve
