#include "polysieve/dimmatch.hpp"

#include <bit>
#include <stdexcept>

namespace polysieve {

QdimAssignment QdimAssignment::sample(const PartiteFamily& family, std::size_t label_count,
                                      const FieldConfig& field, Rng& rng) {
    std::size_t q = family.dimensions(), r = family.part_size();
    QdimAssignment a;
    a.field = &field;
    a.x.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) a.x.push_back(field.sample(rng));
    a.y.reserve(r * r);
    for (std::size_t i = 0; i < r * r; ++i) a.y.push_back(field.sample(rng));
    std::size_t tail_points = (q - 2) * r;
    a.z.reserve(tail_points * label_count);
    for (std::size_t i = 0; i < tail_points * label_count; ++i) a.z.push_back(field.sample(rng));
    return a;
}

FieldMatrix build_edmonds_matrix(const PartiteFamily& family, std::uint64_t avoid_mask,
                                 std::size_t label_count, const QdimAssignment& assignment,
                                 const FieldElement& w) {
    const FieldConfig& field = *assignment.field;
    std::size_t q = family.dimensions(), r = family.part_size();

    std::vector<FieldElement> z_sum((q - 2) * r, field.zero());
    for (std::size_t u = 0; u < z_sum.size(); ++u)
        for (std::size_t l = 0; l < label_count; ++l)
            if (!((avoid_mask >> l) & 1)) z_sum[u] += assignment.z[u * label_count + l];

    // inner[u1][u2] = sum over members through (u1, u2) of x_A times the
    // allowed-label z sums of the remaining q-2 coordinates
    std::vector<FieldElement> inner(r * r, field.zero());
    for (std::size_t i = 0; i < family.size(); ++i) {
        FieldElement term = assignment.x[i];
        for (std::size_t j = 2; j < q; ++j)
            term *= z_sum[family.member(i)[j] - static_cast<int>(2 * r)];
        inner[static_cast<std::size_t>(family.coordinate(i, 0)) * r + family.coordinate(i, 1)] +=
            term;
    }

    FieldMatrix e(r, field);
    for (std::size_t u1 = 0; u1 < r; ++u1)
        for (std::size_t u2 = 0; u2 < r; ++u2)
            e.at(u1, u2) = assignment.y[u1 * r + u2] * (field.one() + w * inner[u1 * r + u2]);
    return e;
}

FieldElement qdim_sieve_eval(const PartiteFamily& family, int p, const QdimAssignment& assignment,
                             const FieldConfig& field, SieveStats* stats) {
    if (family.dimensions() < 2) throw std::invalid_argument("family needs at least 2 parts");
    std::size_t r = family.part_size();
    std::size_t label_count = qdim_label_count(family, p);
    if (label_count > 62) throw std::invalid_argument("label budget too large");
    if (p < 0 || static_cast<std::size_t>(p) > r) return field.zero();

    FieldElement total = field.zero();
    const std::uint64_t subsets = std::uint64_t{1} << label_count;
    for (std::uint64_t j = 0; j < subsets; ++j) {
        if (stats) ++stats->label_subsets;
        auto evaluator = [&](FieldElement w) {
            return determinant(build_edmonds_matrix(family, j, label_count, assignment, w));
        };
        // det E(J) has degree <= r in the weight variable.
        auto coeffs = extract_uni_coefficients(evaluator, r, field);
        total += coeffs[static_cast<std::size_t>(p)];
    }
    return total;
}

QdimResult detect_qdim_packing(const PartiteFamily& family, int p, std::uint64_t seed,
                               const DetectOptions& options) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (family.dimensions() < 2) throw std::invalid_argument("family needs at least 2 parts");
    QdimResult result;
    std::size_t q = family.dimensions(), r = family.part_size();
    if (static_cast<std::size_t>(p) > r) return result;  // pigeonhole on the first part

    long long pq_r = static_cast<long long>(p) * static_cast<long long>(q) +
                     static_cast<long long>(r);
    int min_bits = std::bit_width(static_cast<unsigned long long>(2 * pq_r - 1));
    result.field_bits = options.field_bits.value_or(smallest_supported_degree(min_bits));
    const FieldConfig& field = make_field(result.field_bits);
    result.repetitions_planned = options.repetitions.value_or(2);

    std::size_t label_count = qdim_label_count(family, p);
    for (std::uint64_t rep = 0; rep < result.repetitions_planned; ++rep) {
        Rng rng = substream(seed, rep);
        QdimAssignment assignment = QdimAssignment::sample(family, label_count, field, rng);
        result.repetitions_executed = rep + 1;
        SieveStats stats;
        FieldElement value = qdim_sieve_eval(family, p, assignment, field, &stats);
        result.label_subsets = stats.label_subsets;
        if (!value.is_zero()) {
            result.found = true;
            return result;
        }
    }
    return result;
}

}  // namespace polysieve
