#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "polysieve/oracle.hpp"
#include "polysieve/rng.hpp"
#include "testutil.hpp"

using namespace polysieve;
using namespace polysieve::testutil;

namespace {

// Second, independent k-path oracle: scan vertex permutations for a
// consecutive-adjacency prefix of length k.
bool permutation_path_search(const Graph& g, int k) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i + 1 < k && ok; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Second, independent packing oracle: enumerate all p-combinations.
bool naive_packing_search(const SetFamily& family, int p) {
    std::vector<std::size_t> idx(family.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<bool> pick(family.size(), false);
    std::fill(pick.end() - std::min<std::size_t>(p, pick.size()), pick.end(), true);
    if (static_cast<std::size_t>(p) > family.size()) return p <= 0;
    do {
        std::vector<bool> used(family.ground_size(), false);
        bool ok = true;
        for (std::size_t i = 0; i < family.size() && ok; ++i) {
            if (!pick[i]) continue;
            for (int u : family.member(i)) {
                if (used[u]) {
                    ok = false;
                    break;
                }
                used[u] = true;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
}

// Augmenting-path bipartite matcher for q = 2 partite families.
int bipartite_matching_size(const PartiteFamily& family) {
    std::size_t r = family.part_size();
    std::vector<std::vector<int>> adj(r);
    for (std::size_t i = 0; i < family.size(); ++i)
        adj[family.coordinate(i, 0)].push_back(family.coordinate(i, 1));
    std::vector<int> match(r, -1);
    std::vector<bool> seen;
    std::function<bool(int)> augment = [&](int u) {
        for (int v : adj[u]) {
            if (seen[v]) continue;
            seen[v] = true;
            if (match[v] < 0 || augment(match[v])) {
                match[v] = u;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (std::size_t u = 0; u < r; ++u) {
        seen.assign(r, false);
        if (augment(static_cast<int>(u))) ++size;
    }
    return size;
}

}  // namespace

TEST_CASE("k-path oracle fixtures") {
    CHECK(oracle::has_k_path_bf(path_graph(5), 5));
    CHECK_FALSE(oracle::has_k_path_bf(star_graph(3), 4));
    CHECK(oracle::has_k_path_bf(star_graph(3), 3));
    CHECK(oracle::has_k_path_bf(petersen_graph(), 10));
    CHECK_FALSE(oracle::has_k_path_bf(path_graph(4), 5));
}

TEST_CASE("k-path oracle agrees with permutation search") {
    // Includes the Petersen traceability cross-check.
    CHECK(permutation_path_search(petersen_graph(), 10));
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(2 + rng.uniform_below(5), rng);
        for (int k = 1; k <= static_cast<int>(g.vertex_count()); ++k)
            CHECK(oracle::has_k_path_bf(g, k) == permutation_path_search(g, k));
    }
}

TEST_CASE("packing oracle fixtures and cross-check") {
    SetFamily disjoint(6, 3, {{0, 1, 2}, {3, 4, 5}});
    CHECK(oracle::has_p_packing_bf(disjoint, 2));

    SetFamily all_triples(5, 3);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) all_triples.add_member({a, b, c});
    CHECK_FALSE(oracle::has_p_packing_bf(all_triples, 2));

    Rng rng(12);
    for (int t = 0; t < 40; ++t) {
        SetFamily family = random_family(10, 3, 1 + rng.uniform_below(7), rng);
        for (int p = 1; p <= 3; ++p)
            CHECK(oracle::has_p_packing_bf(family, p) == naive_packing_search(family, p));
    }
}

TEST_CASE("partite packing oracle fixtures and bipartite cross-check") {
    PartiteFamily single(3, 1, {{0, 1, 2}});
    CHECK(oracle::has_qdim_packing_bf(single, 1));

    PartiteFamily shared(3, 2, {{0, 2, 4}, {1, 3, 4}});
    CHECK_FALSE(oracle::has_qdim_packing_bf(shared, 2));
    CHECK(oracle::has_qdim_packing_bf(shared, 1));

    Rng rng(13);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + rng.uniform_below(4);
        PartiteFamily family = random_partite(2, r, rng.uniform_below(2 * r + 1), rng);
        int max_p = bipartite_matching_size(family);
        for (int p = 1; p <= static_cast<int>(r); ++p)
            CHECK(oracle::has_qdim_packing_bf(family, p) == (p <= max_p));
    }
}

TEST_CASE("chromatic index oracle") {
    CHECK(oracle::edge_chromatic_bf(complete_graph(4)) == 3);
    CHECK(oracle::edge_chromatic_bf(petersen_graph()) == 4);
    CHECK(oracle::edge_chromatic_bf(complete_bipartite_graph(3, 3)) == 3);
    CHECK(oracle::edge_chromatic_bf(complete_graph(3)) == 3);
    CHECK(oracle::edge_chromatic_bf(cycle_graph(4)) == 2);
    CHECK(oracle::edge_chromatic_bf(Graph(3)) == 0);
    // Paths are class 1.
    for (std::size_t n : {2, 3, 5, 8}) {
        Graph p = path_graph(n);
        CHECK(oracle::edge_chromatic_bf(p) == static_cast<int>(p.max_degree()));
    }
}

TEST_CASE("permanent fixtures") {
    const FieldConfig& field = make_field(8);
    CHECK(oracle::permanent_char2_bf(FieldMatrix::identity(4, field)) == field.one());
    Rng rng(14);
    FieldMatrix m(2, field);
    FieldElement a = field.sample(rng), b = field.sample(rng);
    FieldElement c = field.sample(rng), d = field.sample(rng);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    CHECK(oracle::permanent_char2_bf(m) == a * d + b * c);
}

TEST_CASE("involution sum fixtures") {
    const FieldConfig& field = make_field(8);
    Rng rng(15);
    SUBCASE("order 1: squared diagonal values") {
        oracle::TutteEntrySpec spec;
        spec.diagonal.resize(1);
        spec.off.resize(1);
        FieldElement expect = field.zero();
        for (int k = 0; k < 3; ++k) {
            FieldElement s = field.sample(rng);
            spec.diagonal[0].push_back(s);
            expect += s * s;
        }
        CHECK(oracle::involution_sum_bf(spec, field) == expect);
    }
    SUBCASE("order 2: identity plus transposition") {
        oracle::TutteEntrySpec spec;
        spec.diagonal.resize(2);
        spec.off.resize(2);
        spec.off[0].resize(1);
        FieldElement d0 = field.sample(rng), d1 = field.sample(rng);
        spec.diagonal[0].push_back(d0);
        spec.diagonal[1].push_back(d1);
        FieldElement s01a = field.sample(rng), s01b = field.sample(rng);
        spec.off[0][0] = {s01a, s01b};
        FieldElement expect = (d0 * d0) * (d1 * d1) + (s01a * s01a + s01b * s01b);
        CHECK(oracle::involution_sum_bf(spec, field) == expect);
    }
    SUBCASE("order 4: matches the determinant") {
        for (int t = 0; t < 20; ++t) {
            oracle::TutteEntrySpec spec;
            spec.diagonal.resize(4);
            spec.off.resize(4);
            for (std::size_t i = 0; i < 4; ++i) {
                for (std::size_t k = 0; k < 1 + rng.uniform_below(3); ++k)
                    spec.diagonal[i].push_back(field.sample(rng));
                spec.off[i].resize(4 - i - 1);
                for (std::size_t j = i + 1; j < 4; ++j)
                    for (std::size_t k = 0; k < 1 + rng.uniform_below(3); ++k)
                        spec.off[i][j - i - 1].push_back(field.sample(rng));
            }
            CHECK(oracle::involution_sum_bf(spec, field) ==
                  determinant(oracle::assemble_tutte_matrix(spec, field)));
        }
    }
}

TEST_CASE("labeled walk sum fixtures") {
    const FieldConfig& field = make_field(8);
    SUBCASE("single edge, k=2, two labeled occurrences, all-ones values") {
        Graph g(2);
        g.add_edge(0, 1);
        VertexBipartition part{{1, 1}};
        PathSieveParams params{2, 2, 0};
        PathAssignment a;
        a.field = &field;
        a.x.assign(1, field.one());
        a.y.assign(2 * 2, field.one());
        // Four labelings of two occurrences collapse to 4 = 0 in char 2.
        CHECK(oracle::labeled_walk_sum_bf(g, 0, part, params, 0, 0, a).is_zero());
    }
    SUBCASE("no admissible walks") {
        Graph g(3);
        g.add_edge(0, 1);
        VertexBipartition part{{1, 1, 1}};
        PathSieveParams params{3, 3, 0};
        PathAssignment a;
        a.field = &field;
        a.x.assign(1, field.one());
        a.y.assign(3 * 3, field.one());
        // Walks from vertex 2 do not exist (it is isolated).
        CHECK(oracle::labeled_walk_sum_bf(g, 2, part, params, 0, 0, a).is_zero());
    }
    SUBCASE("triangle, k=3: manual expansion") {
        Graph g = complete_graph(3);
        // V1 = {0}; E2 = {{1,2}}; the admissible 3-walks from 0 with one V1
        // occurrence and one E2 occurrence are 0-1-2 and 0-2-1.
        VertexBipartition part{{1, 0, 0}};
        PathSieveParams params{3, 1, 1};
        Rng rng(16);
        PathAssignment a = PathAssignment::sample(g, part, params, field, rng);
        int e01 = g.edge_index(0, 1), e02 = g.edge_index(0, 2), e12 = g.edge_index(1, 2);
        FieldElement expect =
            a.x[e01] * a.x[e12] * a.y[0 * 1 + 0] * a.z[static_cast<std::size_t>(e12) * 1 + 0] +
            a.x[e02] * a.x[e12] * a.y[0 * 1 + 0] * a.z[static_cast<std::size_t>(e12) * 1 + 0];
        CHECK(oracle::labeled_walk_sum_bf(g, 0, part, params, 0, 0, a) == expect);
    }
}

TEST_CASE("size guards raise explicit errors") {
    CHECK_THROWS_AS(oracle::has_k_path_bf(Graph(25), 3), oracle::OracleError);
    CHECK_THROWS_AS(oracle::edge_chromatic_bf(complete_graph(8)), oracle::OracleError);
    const FieldConfig& field = make_field(8);
    CHECK_THROWS_AS(oracle::permanent_char2_bf(FieldMatrix::identity(9, field)),
                    oracle::OracleError);
}
