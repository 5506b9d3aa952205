#include "polysieve/edgecolor.hpp"

#include <bit>
#include <stdexcept>

namespace polysieve {

ColorAssignment ColorAssignment::sample(const Graph& g, std::size_t p, std::size_t labels,
                                        const FieldConfig& field, Rng& rng) {
    ColorAssignment a;
    a.field = &field;
    a.p = p;
    a.labels = labels;
    a.x.reserve(g.edge_count() * p);
    for (std::size_t i = 0; i < g.edge_count() * p; ++i) a.x.push_back(field.sample(rng));
    a.y.reserve(g.edge_count() * labels);
    for (std::size_t i = 0; i < g.edge_count() * labels; ++i) a.y.push_back(field.sample(rng));
    return a;
}

FieldMatrix color_matrix(const Graph& g, std::size_t matching_index, std::uint64_t avoid_mask,
                         std::size_t label_count, const ColorAssignment& assignment,
                         DiagonalMode mode, const FieldConfig& field) {
    std::size_t n = g.vertex_count();
    FieldMatrix t(n, field);
    if (mode == DiagonalMode::matchings)
        for (std::size_t v = 0; v < n; ++v) t.at(v, v) = field.one();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        FieldElement y_sum = field.zero();
        for (std::size_t l = 0; l < label_count; ++l)
            if (!((avoid_mask >> l) & 1)) y_sum += assignment.y[e * label_count + l];
        FieldElement entry = assignment.x[e * assignment.p + matching_index] * y_sum;
        auto [u, v] = g.edge(e);
        t.at(u, v) = entry;
        t.at(v, u) = entry;
    }
    return t;
}

FieldElement coloring_sieve_eval(const Graph& g, std::size_t p, std::size_t label_count,
                                 const ColorAssignment& assignment, const FieldConfig& field,
                                 DiagonalMode mode, SieveStats* stats) {
    if (label_count > 62) throw std::invalid_argument("label budget too large");
    FieldElement total = field.zero();
    const std::uint64_t subsets = std::uint64_t{1} << label_count;
    for (std::uint64_t j = 0; j < subsets; ++j) {
        if (stats) ++stats->label_subsets;
        FieldElement product = field.one();
        for (std::size_t i = 0; i < p && !product.is_zero(); ++i)
            product *= determinant(color_matrix(g, i, j, label_count, assignment, mode, field));
        total += product;
    }
    return total;
}

namespace {

EdgeColorResult run_coloring(const Graph& g, std::size_t p, std::size_t label_count,
                             std::uint64_t seed, const DetectOptions& options,
                             DiagonalMode mode) {
    EdgeColorResult result;
    unsigned long long degree_hint = 4ULL * p * g.vertex_count();
    int min_bits = std::bit_width(degree_hint > 1 ? degree_hint - 1 : 1ULL);
    result.field_bits = options.field_bits.value_or(smallest_supported_degree(min_bits));
    const FieldConfig& field = make_field(result.field_bits);
    result.repetitions_planned = options.repetitions.value_or(2);

    for (std::uint64_t rep = 0; rep < result.repetitions_planned; ++rep) {
        Rng rng = substream(seed, rep);
        ColorAssignment assignment = ColorAssignment::sample(g, p, label_count, field, rng);
        result.repetitions_executed = rep + 1;
        SieveStats stats;
        FieldElement value = coloring_sieve_eval(g, p, label_count, assignment, field, mode, &stats);
        result.label_subsets = stats.label_subsets;
        if (!value.is_zero()) {
            result.found = true;
            return result;
        }
    }
    return result;
}

}  // namespace

EdgeColorResult detect_edge_coloring(const Graph& g, std::uint64_t seed,
                                     const DetectOptions& options) {
    if (!g.is_regular()) throw GraphError("graph is not regular");
    std::size_t d = g.vertex_count() == 0 ? 0 : g.degree(0);
    EdgeColorResult result;
    result.colors = d;
    if (g.vertex_count() % 2 != 0) return result;  // no perfect matching
    if (d == 0) {
        result.found = true;  // nothing to color
        return result;
    }
    // d colors exist iff there are d-1 pairwise edge-disjoint perfect
    // matchings (the remaining edges then form the last class).
    std::size_t p = d - 1;
    std::size_t label_count = p * g.vertex_count() / 2;
    EdgeColorResult run =
        run_coloring(g, p, label_count, seed, options, DiagonalMode::perfect_matchings);
    run.colors = d;
    return run;
}

EdgeColorResult detect_edge_coloring_general(const Graph& g, std::uint64_t seed,
                                             const DetectOptions& options) {
    std::size_t delta = g.max_degree();
    EdgeColorResult result;
    result.colors = delta;
    if (g.edge_count() == 0) {
        result.found = true;
        return result;
    }
    // Delta matchings must cover all m edges, so the label budget is m.
    EdgeColorResult run = run_coloring(g, delta, g.edge_count(), seed, options,
                                       DiagonalMode::matchings);
    run.colors = delta;
    return run;
}

}  // namespace polysieve
