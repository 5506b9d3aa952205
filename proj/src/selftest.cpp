#include "polysieve/selftest.hpp"

#include <string>

#include "polysieve/dimmatch.hpp"
#include "polysieve/edgecolor.hpp"
#include "polysieve/gf.hpp"
#include "polysieve/kpath.hpp"
#include "polysieve/linalg.hpp"
#include "polysieve/oracle.hpp"
#include "polysieve/setpack.hpp"

namespace polysieve {

namespace {

Graph random_graph(std::size_t n, Rng& rng, std::uint64_t edge_percent = 50) {
    Graph g(n);
    for (int u = 0; u < static_cast<int>(n); ++u)
        for (int v = u + 1; v < static_cast<int>(n); ++v)
            if (rng.uniform_below(100) < edge_percent) g.add_edge(u, v);
    return g;
}

SetFamily random_family(std::size_t n, std::size_t q, std::size_t count, Rng& rng) {
    SetFamily family(n, q);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<int> member;
        while (member.size() < q) {
            int u = static_cast<int>(rng.uniform_below(n));
            bool seen = false;
            for (int x : member) seen |= (x == u);
            if (!seen) member.push_back(u);
        }
        family.add_member(std::move(member));
    }
    return family;
}

PartiteFamily random_partite(std::size_t q, std::size_t r, std::size_t count, Rng& rng) {
    PartiteFamily family(q, r);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<int> member;
        for (std::size_t j = 0; j < q; ++j)
            member.push_back(static_cast<int>(j * r + rng.uniform_below(r)));
        family.add_member(std::move(member));
    }
    return family;
}

}  // namespace

SelfTestReport run_selftest(std::uint64_t seed) {
    SelfTestReport report;
    auto check = [&](bool ok, const std::string& name) {
        if (ok) {
            ++report.passed;
        } else {
            ++report.failed;
            report.failures.push_back(name);
        }
    };

    // Field algebra on every supported degree.
    for (int b : kSupportedDegrees) {
        const FieldConfig& field = make_field(b);
        Rng rng = substream(seed, 1, static_cast<std::uint64_t>(b));
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            FieldElement a = field.sample(rng), c = field.sample(rng), d = field.sample(rng);
            ok &= (a + c) + d == a + (c + d);
            ok &= a * (c + d) == a * c + a * d;
            ok &= a * c == c * a;
            if (!a.is_zero()) ok &= mul(a, inv(a)) == field.one();
        }
        check(ok, "gf algebra b=" + std::to_string(b));
    }

    // Interpolation round-trip.
    {
        const FieldConfig& field = make_field(16);
        Rng rng = substream(seed, 2);
        bool ok = true;
        for (int t = 0; t < 20; ++t) {
            std::size_t degree = rng.uniform_below(6);
            std::vector<FieldElement> coeffs;
            for (std::size_t i = 0; i <= degree; ++i) coeffs.push_back(field.sample(rng));
            std::vector<std::pair<FieldElement, FieldElement>> pts;
            for (std::size_t i = 0; i <= degree; ++i) {
                FieldElement x = field.element_by_index(i);
                pts.emplace_back(x, evaluate_poly(coeffs, x));
            }
            ok &= interpolate_univariate(pts) == coeffs;
        }
        check(ok, "interpolation round-trip");
    }

    // Determinant equals the permutation-sum permanent.
    {
        const FieldConfig& field = make_field(8);
        Rng rng = substream(seed, 3);
        bool ok = true;
        for (int t = 0; t < 40; ++t) {
            std::size_t order = 1 + rng.uniform_below(5);
            FieldMatrix m(order, field);
            for (std::size_t i = 0; i < order; ++i)
                for (std::size_t j = 0; j < order; ++j) m.at(i, j) = field.sample(rng);
            ok &= determinant(m) == oracle::permanent_char2_bf(m);
        }
        check(ok, "determinant = char-2 permanent");
    }

    // Determinant-partition identity on squared-entry symmetric matrices.
    {
        const FieldConfig& field = make_field(8);
        Rng rng = substream(seed, 4);
        bool ok = true;
        for (int t = 0; t < 40; ++t) {
            std::size_t order = 1 + rng.uniform_below(5);
            oracle::TutteEntrySpec spec;
            spec.diagonal.resize(order);
            spec.off.resize(order);
            for (std::size_t i = 0; i < order; ++i) {
                for (std::size_t k = 0; k < 1 + rng.uniform_below(3); ++k)
                    spec.diagonal[i].push_back(field.sample(rng));
                spec.off[i].resize(order - i - 1);
                for (std::size_t j = i + 1; j < order; ++j)
                    for (std::size_t k = 0; k < 1 + rng.uniform_below(3); ++k)
                        spec.off[i][j - i - 1].push_back(field.sample(rng));
            }
            ok &= determinant(oracle::assemble_tutte_matrix(spec, field)) ==
                  oracle::involution_sum_bf(spec, field);
        }
        check(ok, "determinant-partition identity");
    }

    // Path sieve vs direct bijective enumeration.
    {
        const FieldConfig& field = make_field(8);
        bool ok = true;
        for (int t = 0; t < 25; ++t) {
            Rng rng = substream(seed, 5, static_cast<std::uint64_t>(t));
            Graph g = random_graph(2 + rng.uniform_below(5), rng);
            int k = 1 + static_cast<int>(rng.uniform_below(4));
            VertexBipartition part = VertexBipartition::sample(g.vertex_count(), rng);
            int k1 = static_cast<int>(rng.uniform_below(k + 1));
            int l2 = static_cast<int>(rng.uniform_below(k));
            PathSieveParams params{k, k1, l2};
            PathAssignment a = PathAssignment::sample(g, part, params, field, rng);
            int s = static_cast<int>(rng.uniform_below(g.vertex_count()));
            ok &= path_sieve_eval(g, s, part, params, a) ==
                  oracle::bijective_monomial_sum_bf(g, s, part, params, a);
        }
        check(ok, "path sieve = bijective path sum");
    }

    // Determinant sieve for partite packings vs direct enumeration.
    {
        const FieldConfig& field = make_field(8);
        bool ok = true;
        for (int t = 0; t < 25; ++t) {
            Rng rng = substream(seed, 6, static_cast<std::uint64_t>(t));
            std::size_t q = 2 + rng.uniform_below(3);
            std::size_t r = 1 + rng.uniform_below(3);
            int p = 1 + static_cast<int>(rng.uniform_below(r));
            PartiteFamily family = random_partite(q, r, 1 + rng.uniform_below(5), rng);
            QdimAssignment a =
                QdimAssignment::sample(family, qdim_label_count(family, p), field, rng);
            ok &= qdim_sieve_eval(family, p, a, field) ==
                  oracle::bijective_monomial_sum_bf(family, p, a, field);
        }
        check(ok, "partite determinant sieve = bijective packing sum");
    }

    // Projection-determinant sieve for set packing vs direct enumeration.
    {
        const FieldConfig& field = make_field(8);
        bool ok = true;
        for (int t = 0; t < 20; ++t) {
            Rng rng = substream(seed, 7, static_cast<std::uint64_t>(t));
            std::size_t n = 4 + rng.uniform_below(4);
            SetFamily family = random_family(n, 3, 1 + rng.uniform_below(5), rng);
            int p = 1 + static_cast<int>(rng.uniform_below(2));
            int p2 = static_cast<int>(rng.uniform_below(p + 1));
            int p1 = static_cast<int>(rng.uniform_below(p - p2 + 1));
            int p0 = p - p1 - p2;
            std::size_t n1 = std::min<std::size_t>(n, p1 + 2 * p2 + rng.uniform_below(2));
            PackingParams params;
            params.p = p;
            params.p0 = p0;
            params.p1 = p1;
            params.p2 = p2;
            params.n1 = static_cast<int>(n1);
            params.q = 3;
            GroundBipartition part = GroundBipartition::sample(n, n1, rng);
            PackAssignment a =
                PackAssignment::sample(family, part, params.label_count(), field, rng);
            ok &= packing_sieve_eval(family, part, params, a, field) ==
                  oracle::bijective_monomial_sum_bf(family, part, p0, p1, p2, a, field);
        }
        check(ok, "packing sieve = bijective packing sum");
    }

    // Matching-tuple determinant sieve vs direct enumeration.
    {
        const FieldConfig& field = make_field(8);
        bool ok = true;
        for (int t = 0; t < 15; ++t) {
            Rng rng = substream(seed, 8, static_cast<std::uint64_t>(t));
            std::size_t n = 2 + 2 * rng.uniform_below(3);
            Graph g = random_graph(n, rng, 60);
            std::size_t p = 1 + rng.uniform_below(2);
            std::size_t labels = p * n / 2;
            if (labels > 8) continue;
            ColorAssignment a = ColorAssignment::sample(g, p, labels, field, rng);
            ok &= coloring_sieve_eval(g, p, labels, a, field,
                                      DiagonalMode::perfect_matchings) ==
                  oracle::bijective_monomial_sum_bf(g, p, labels, a, field);
        }
        check(ok, "coloring sieve = bijective matching-tuple sum");
    }

    // Decision cross-checks against the brute-force deciders.
    {
        bool ok = true;
        for (int t = 0; t < 10; ++t) {
            Rng rng = substream(seed, 9, static_cast<std::uint64_t>(t));
            Graph g = random_graph(5 + rng.uniform_below(3), rng);
            int k = 2 + static_cast<int>(rng.uniform_below(4));
            bool truth = oracle::has_k_path_bf(g, k);
            bool any_yes = false;
            for (int attempt = 0; attempt < 12; ++attempt) {
                bool found = detect_k_path(g, k, seed + 1000 * attempt + t).found;
                any_yes |= found;
                // One-sided error: a YES must be backed by the oracle.
                if (found && !truth) ok = false;
            }
            if (truth && !any_yes) ok = false;
        }
        check(ok, "k-path decisions vs oracle");
    }

    return report;
}

}  // namespace polysieve
