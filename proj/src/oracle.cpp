#include "polysieve/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace polysieve::oracle {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw OracleError(std::string("instance too large for oracle: ") + what);
}

// Calls fn for every involution of {0..m-1}, presented as the partner array
// iota with iota[i] == i on fixed points.
void for_each_involution(int m, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> iota(m, -1);
    std::function<void(int)> rec = [&](int i) {
        while (i < m && iota[i] >= 0) ++i;
        if (i == m) {
            fn(iota);
            return;
        }
        iota[i] = i;
        rec(i + 1);
        iota[i] = -1;
        for (int j = i + 1; j < m; ++j) {
            if (iota[j] >= 0) continue;
            iota[i] = j;
            iota[j] = i;
            rec(i + 1);
            iota[i] = -1;
            iota[j] = -1;
        }
    };
    rec(0);
}

std::vector<int> allowed_labels(std::size_t count, std::uint64_t avoid_mask) {
    std::vector<int> out;
    for (std::size_t l = 0; l < count; ++l)
        if (!((avoid_mask >> l) & 1)) out.push_back(static_cast<int>(l));
    return out;
}

}  // namespace

bool has_k_path_bf(const Graph& g, int k) {
    require(g.vertex_count() <= 20, "has_k_path_bf");
    if (k < 1) return false;
    std::size_t n = g.vertex_count();
    if (static_cast<std::size_t>(k) > n) return false;
    std::function<bool(int, int, std::uint32_t)> dfs = [&](int v, int remaining,
                                                           std::uint32_t visited) {
        if (remaining == 1) return true;
        for (auto [w, e] : g.neighbors(v)) {
            if ((visited >> w) & 1) continue;
            if (dfs(w, remaining - 1, visited | (std::uint32_t{1} << w))) return true;
        }
        return false;
    };
    for (std::size_t s = 0; s < n; ++s)
        if (dfs(static_cast<int>(s), k, std::uint32_t{1} << s)) return true;
    return false;
}

bool has_p_packing_bf(const SetFamily& family, int p) {
    require(family.ground_size() <= 64 && family.size() <= 64, "has_p_packing_bf");
    if (p <= 0) return true;
    std::vector<std::uint64_t> masks;
    for (const auto& member : family.members()) {
        std::uint64_t m = 0;
        for (int u : member) m |= std::uint64_t{1} << u;
        masks.push_back(m);
    }
    std::function<bool(std::size_t, int, std::uint64_t)> rec = [&](std::size_t i, int remaining,
                                                                   std::uint64_t used) {
        if (remaining == 0) return true;
        if (masks.size() - i < static_cast<std::size_t>(remaining)) return false;
        if ((masks[i] & used) == 0 && rec(i + 1, remaining - 1, used | masks[i])) return true;
        return rec(i + 1, remaining, used);
    };
    return rec(0, p, 0);
}

bool has_qdim_packing_bf(const PartiteFamily& family, int p) {
    require(family.ground_size() <= 64 && family.size() <= 64, "has_qdim_packing_bf");
    if (p <= 0) return true;
    std::vector<std::uint64_t> masks;
    for (const auto& member : family.members()) {
        std::uint64_t m = 0;
        for (int u : member) m |= std::uint64_t{1} << u;
        masks.push_back(m);
    }
    std::function<bool(std::size_t, int, std::uint64_t)> rec = [&](std::size_t i, int remaining,
                                                                   std::uint64_t used) {
        if (remaining == 0) return true;
        if (masks.size() - i < static_cast<std::size_t>(remaining)) return false;
        if ((masks[i] & used) == 0 && rec(i + 1, remaining - 1, used | masks[i])) return true;
        return rec(i + 1, remaining, used);
    };
    return rec(0, p, 0);
}

int edge_chromatic_bf(const Graph& g) {
    require(g.edge_count() <= 24, "edge_chromatic_bf");
    if (g.edge_count() == 0) return 0;
    int max_deg = static_cast<int>(g.max_degree());
    std::vector<std::uint32_t> used(g.vertex_count(), 0);
    std::function<bool(std::size_t, int)> rec = [&](std::size_t e, int colors) {
        if (e == g.edge_count()) return true;
        auto [u, v] = g.edge(e);
        std::uint32_t free = ~(used[u] | used[v]) & ((std::uint32_t{1} << colors) - 1);
        while (free) {
            std::uint32_t bit = free & (~free + 1);
            used[u] |= bit;
            used[v] |= bit;
            if (rec(e + 1, colors)) return true;
            used[u] &= ~bit;
            used[v] &= ~bit;
            free &= ~bit;
        }
        return false;
    };
    // Vizing: the chromatic index is max degree or max degree + 1.
    return rec(0, max_deg) ? max_deg : max_deg + 1;
}

FieldElement labeled_walk_sum_bf(const Graph& g, int s, const VertexBipartition& partition,
                                 const PathSieveParams& params, std::uint64_t avoid_k1_mask,
                                 std::uint64_t avoid_l2_mask, const PathAssignment& assignment) {
    require(params.k <= 6 && g.vertex_count() <= 8, "labeled_walk_sum_bf");
    const FieldConfig& field = *assignment.field;
    FieldElement total = field.zero();

    std::vector<int> verts{s};
    std::vector<int> edges;
    auto k1_allowed = allowed_labels(params.k1, avoid_k1_mask);
    auto l2_allowed = allowed_labels(params.l2, avoid_l2_mask);

    auto process_walk = [&]() {
        // Literal admissibility: exact V1/E2 occurrence counts and no
        // V2 E V1 E V2 palindrome among the five-symbol windows.
        std::vector<int> v1_positions, e2_positions;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (partition.in_v1(verts[i])) v1_positions.push_back(static_cast<int>(i));
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (partition.edge_in_e2(g, edges[i])) e2_positions.push_back(static_cast<int>(i));
        if (v1_positions.size() != static_cast<std::size_t>(params.k1)) return;
        if (e2_positions.size() != static_cast<std::size_t>(params.l2)) return;
        for (std::size_t i = 0; i + 2 < verts.size(); ++i) {
            WalkWindow w{verts[i], edges[i], verts[i + 1], edges[i + 1], verts[i + 2]};
            if (is_v2ev1ev2_palindrome(w, partition)) return;
        }
        FieldElement base = field.one();
        for (int e : edges) base *= assignment.x[e];

        // Odometer over all labelings of the V1 and E2 occurrences.
        std::size_t v_occ = v1_positions.size(), e_occ = e2_positions.size();
        if ((v_occ > 0 && k1_allowed.empty()) || (e_occ > 0 && l2_allowed.empty())) return;
        std::vector<std::size_t> vl(v_occ, 0), el(e_occ, 0);
        while (true) {
            FieldElement term = base;
            for (std::size_t i = 0; i < v_occ; ++i)
                term *= assignment.y[static_cast<std::size_t>(verts[v1_positions[i]]) * params.k1 +
                                     k1_allowed[vl[i]]];
            for (std::size_t i = 0; i < e_occ; ++i)
                term *= assignment.z[static_cast<std::size_t>(edges[e2_positions[i]]) * params.l2 +
                                     l2_allowed[el[i]]];
            total += term;
            std::size_t pos = 0;
            while (pos < v_occ && ++vl[pos] == k1_allowed.size()) vl[pos++] = 0;
            if (pos < v_occ) continue;
            pos = 0;
            while (pos < e_occ && ++el[pos] == l2_allowed.size()) el[pos++] = 0;
            if (pos == e_occ) break;
        }
    };

    std::function<void()> extend = [&]() {
        if (verts.size() == static_cast<std::size_t>(params.k)) {
            process_walk();
            return;
        }
        for (auto [w, e] : g.neighbors(verts.back())) {
            verts.push_back(w);
            edges.push_back(e);
            extend();
            verts.pop_back();
            edges.pop_back();
        }
    };
    if (params.k >= 1) extend();
    return total;
}

FieldMatrix assemble_tutte_matrix(const TutteEntrySpec& spec, const FieldConfig& field) {
    std::size_t m = spec.order();
    FieldMatrix t(m, field);
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto& s : spec.diagonal[i]) t.at(i, i) += s * s;
        for (std::size_t j = i + 1; j < m; ++j) {
            FieldElement sum = field.zero();
            for (const auto& s : spec.off[i][j - i - 1]) sum += s;
            t.at(i, j) = sum;
            t.at(j, i) = sum;
        }
    }
    return t;
}

FieldElement involution_sum_bf(const TutteEntrySpec& spec, const FieldConfig& field) {
    require(spec.order() <= 6, "involution_sum_bf");
    int m = static_cast<int>(spec.order());
    FieldElement total = field.zero();
    for_each_involution(m, [&](const std::vector<int>& iota) {
        FieldElement term = field.one();
        for (int i = 0; i < m; ++i) {
            if (iota[i] < i) continue;
            FieldElement sq_sum = field.zero();
            const auto& values = (iota[i] == i) ? spec.diagonal[i] : spec.off[i][iota[i] - i - 1];
            for (const auto& s : values) sq_sum += s * s;
            term *= sq_sum;
        }
        total += term;
    });
    return total;
}

FieldElement permanent_char2_bf(const FieldMatrix& m) {
    require(m.order() <= 8, "permanent_char2_bf");
    std::size_t n = m.order();
    FieldElement total = m.field().zero();
    std::vector<int> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    // Sum over all permutations; signs are all +1 in characteristic 2.
    do {
        FieldElement term = m.field().one();
        for (std::size_t i = 0; i < n; ++i) term *= m.at(i, cols[i]);
        total += term;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return total;
}

std::vector<std::vector<int>> perfect_matchings_bf(const Graph& g) {
    require(g.vertex_count() <= 12, "perfect_matchings_bf");
    std::vector<std::vector<int>> result;
    std::vector<int> chosen;
    std::vector<bool> matched(g.vertex_count(), false);
    std::function<void()> rec = [&]() {
        int u = -1;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (!matched[v]) {
                u = static_cast<int>(v);
                break;
            }
        }
        if (u < 0) {
            result.push_back(chosen);
            std::sort(result.back().begin(), result.back().end());
            return;
        }
        for (auto [w, e] : g.neighbors(u)) {
            if (matched[w]) continue;
            matched[u] = matched[w] = true;
            chosen.push_back(e);
            rec();
            chosen.pop_back();
            matched[u] = matched[w] = false;
        }
    };
    if (g.vertex_count() % 2 == 0) rec();
    return result;
}

FieldElement matching_tuple_sum_bf(const Graph& g, std::size_t p, std::size_t label_count,
                                   std::uint64_t avoid_mask, const ColorAssignment& assignment,
                                   const FieldConfig& field) {
    require(p * g.vertex_count() / 2 <= 8 && label_count <= 8, "matching_tuple_sum_bf");
    auto matchings = perfect_matchings_bf(g);
    auto labels = allowed_labels(label_count, avoid_mask);
    FieldElement total = field.zero();
    if (matchings.empty() && p > 0) return total;

    std::vector<std::size_t> pick(p, 0);
    while (true) {
        // Domain of the tuple: (edge, matching index) occurrences.
        std::vector<std::pair<int, std::size_t>> domain;
        for (std::size_t i = 0; i < p; ++i)
            for (int e : matchings[pick[i]]) domain.emplace_back(e, i);
        if (domain.empty() || !labels.empty()) {
            std::vector<std::size_t> lab(domain.size(), 0);
            while (true) {
                FieldElement term = field.one();
                for (std::size_t d = 0; d < domain.size(); ++d) {
                    auto [e, i] = domain[d];
                    FieldElement xv = assignment.x[e * assignment.p + i];
                    FieldElement yv = assignment.y[e * assignment.labels + labels[lab[d]]];
                    term *= xv * xv * yv * yv;
                }
                total += term;
                std::size_t pos = 0;
                while (pos < domain.size() && ++lab[pos] == labels.size()) lab[pos++] = 0;
                if (pos == domain.size()) break;
            }
        }
        if (p == 0) break;
        std::size_t pos = 0;
        while (pos < p && ++pick[pos] == matchings.size()) pick[pos++] = 0;
        if (pos == p) break;
    }
    return total;
}

FieldElement bijective_monomial_sum_bf(const Graph& g, int s, const VertexBipartition& partition,
                                       const PathSieveParams& params,
                                       const PathAssignment& assignment) {
    require(params.k <= 6 && g.vertex_count() <= 8 && params.k1 <= 5 && params.l2 <= 5,
            "bijective path sum");
    const FieldConfig& field = *assignment.field;
    FieldElement total = field.zero();
    std::vector<int> verts{s};
    std::vector<int> edges;
    std::vector<bool> visited(g.vertex_count(), false);
    visited[s] = true;

    auto process_path = [&]() {
        std::vector<int> v1_positions, e2_positions;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (partition.in_v1(verts[i])) v1_positions.push_back(static_cast<int>(i));
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (partition.edge_in_e2(g, edges[i])) e2_positions.push_back(static_cast<int>(i));
        if (v1_positions.size() != static_cast<std::size_t>(params.k1)) return;
        if (e2_positions.size() != static_cast<std::size_t>(params.l2)) return;
        for (std::size_t i = 0; i + 2 < verts.size(); ++i) {
            WalkWindow w{verts[i], edges[i], verts[i + 1], edges[i + 1], verts[i + 2]};
            if (is_v2ev1ev2_palindrome(w, partition)) return;
        }
        FieldElement base = field.one();
        for (int e : edges) base *= assignment.x[e];
        // Sum over bijective labelings: permutations of K1 and of L2.
        std::vector<int> kperm(params.k1);
        std::iota(kperm.begin(), kperm.end(), 0);
        do {
            FieldElement with_y = base;
            for (std::size_t i = 0; i < v1_positions.size(); ++i)
                with_y *= assignment.y[static_cast<std::size_t>(verts[v1_positions[i]]) * params.k1 +
                                       kperm[i]];
            std::vector<int> lperm(params.l2);
            std::iota(lperm.begin(), lperm.end(), 0);
            do {
                FieldElement term = with_y;
                for (std::size_t i = 0; i < e2_positions.size(); ++i)
                    term *= assignment.z[static_cast<std::size_t>(edges[e2_positions[i]]) *
                                             params.l2 +
                                         lperm[i]];
                total += term;
            } while (std::next_permutation(lperm.begin(), lperm.end()));
        } while (std::next_permutation(kperm.begin(), kperm.end()));
    };

    std::function<void()> extend = [&]() {
        if (verts.size() == static_cast<std::size_t>(params.k)) {
            process_path();
            return;
        }
        for (auto [w, e] : g.neighbors(verts.back())) {
            if (visited[w]) continue;
            visited[w] = true;
            verts.push_back(w);
            edges.push_back(e);
            extend();
            verts.pop_back();
            edges.pop_back();
            visited[w] = false;
        }
    };
    if (params.k >= 1 && static_cast<std::size_t>(params.k) <= g.vertex_count()) extend();
    return total;
}

FieldElement bijective_monomial_sum_bf(const PartiteFamily& family, int p,
                                       const QdimAssignment& assignment,
                                       const FieldConfig& field) {
    std::size_t q = family.dimensions(), r = family.part_size();
    std::size_t label_count = qdim_label_count(family, p);
    require(r <= 5 && label_count <= 8 && family.size() <= 20, "bijective qdim sum");
    FieldElement total = field.zero();
    if (p < 0 || static_cast<std::size_t>(p) > r) return total;

    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t next) {
        if (chosen.size() == static_cast<std::size_t>(p)) {
            // Full pairwise disjointness (a packing, not just a prepacking).
            std::vector<bool> used(family.ground_size(), false);
            for (std::size_t idx : chosen)
                for (int u : family.member(idx)) {
                    if (used[u]) return;
                    used[u] = true;
                }
            // sigma must map each member's U1 coordinate to its U2
            // coordinate; enumerate all bijections and filter.
            std::vector<std::pair<int, int>> forced;  // (u1 coord, u2 coord)
            for (std::size_t idx : chosen)
                forced.emplace_back(family.coordinate(idx, 0), family.coordinate(idx, 1));
            std::vector<std::pair<int, std::size_t>> domain;  // (point, member)
            for (std::size_t idx : chosen)
                for (std::size_t j = 2; j < q; ++j)
                    domain.emplace_back(family.member(idx)[j] - static_cast<int>(2 * r), idx);

            std::vector<int> sigma(r);
            std::iota(sigma.begin(), sigma.end(), 0);
            do {
                bool compatible = true;
                for (auto [c1, c2] : forced)
                    if (sigma[c1] != c2) {
                        compatible = false;
                        break;
                    }
                if (!compatible) continue;
                FieldElement base = field.one();
                for (std::size_t idx : chosen) base *= assignment.x[idx];
                for (std::size_t u1 = 0; u1 < r; ++u1) base *= assignment.y[u1 * r + sigma[u1]];

                std::vector<int> lperm(label_count);
                std::iota(lperm.begin(), lperm.end(), 0);
                do {
                    FieldElement term = base;
                    for (std::size_t d = 0; d < domain.size(); ++d)
                        term *= assignment.z[static_cast<std::size_t>(domain[d].first) *
                                                 label_count +
                                             lperm[d]];
                    total += term;
                } while (std::next_permutation(lperm.begin(), lperm.end()));
            } while (std::next_permutation(sigma.begin(), sigma.end()));
            return;
        }
        for (std::size_t i = next; i < family.size(); ++i) {
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return total;
}

FieldElement bijective_monomial_sum_bf(const SetFamily& family, const GroundBipartition& partition,
                                       int p0, int p1, int p2, const PackAssignment& assignment,
                                       const FieldConfig& field) {
    int p = p0 + p1 + p2;
    std::size_t q = family.member_size();
    std::size_t n1 = partition.n1();
    std::size_t label_count = static_cast<std::size_t>(p0) * q +
                              static_cast<std::size_t>(p1) * (q - 1) +
                              static_cast<std::size_t>(p2) * (q - 2);
    require(n1 <= 8 && label_count <= 8 && family.size() <= 20, "bijective packing sum");
    FieldElement total = field.zero();

    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t next) {
        if (chosen.size() == static_cast<std::size_t>(p)) {
            std::vector<bool> used(family.ground_size(), false);
            for (std::size_t idx : chosen)
                for (int u : family.member(idx)) {
                    if (used[u]) return;
                    used[u] = true;
                }
            // Intersection profile with U1 must match (p0, p1, p2) exactly.
            int count[3] = {0, 0, 0};
            std::vector<std::vector<int>> u1_hits(chosen.size());
            for (std::size_t c = 0; c < chosen.size(); ++c) {
                for (int u : family.member(chosen[c]))
                    if (partition.in_u1(u)) u1_hits[c].push_back(partition.side_position[u]);
                if (u1_hits[c].size() > 2) return;
                ++count[u1_hits[c].size()];
            }
            if (count[0] != p0 || count[1] != p1 || count[2] != p2) return;

            std::vector<std::pair<int, std::size_t>> domain;  // (U2 position, member)
            for (std::size_t c = 0; c < chosen.size(); ++c)
                for (int u : family.member(chosen[c]))
                    if (!partition.in_u1(u))
                        domain.emplace_back(partition.side_position[u], chosen[c]);

            for_each_involution(static_cast<int>(n1), [&](const std::vector<int>& iota) {
                for (std::size_t c = 0; c < chosen.size(); ++c) {
                    if (u1_hits[c].size() == 1 && iota[u1_hits[c][0]] != u1_hits[c][0]) return;
                    if (u1_hits[c].size() == 2 && iota[u1_hits[c][0]] != u1_hits[c][1]) return;
                }
                FieldElement base = field.one();
                for (std::size_t idx : chosen) {
                    base *= assignment.x[idx];
                    base *= assignment.x[idx];
                }
                for (std::size_t i = 0; i < n1; ++i) {
                    if (iota[i] < static_cast<int>(i)) continue;
                    FieldElement yv = (iota[i] == static_cast<int>(i))
                                          ? assignment.y_point[i]
                                          : assignment.pair_var(i, iota[i]);
                    base *= yv * yv;
                }
                std::vector<int> lperm(label_count);
                std::iota(lperm.begin(), lperm.end(), 0);
                do {
                    FieldElement term = base;
                    for (std::size_t d = 0; d < domain.size(); ++d) {
                        FieldElement zv = assignment.z[static_cast<std::size_t>(domain[d].first) *
                                                           label_count +
                                                       lperm[d]];
                        term *= zv * zv;
                    }
                    total += term;
                } while (std::next_permutation(lperm.begin(), lperm.end()));
            });
            return;
        }
        for (std::size_t i = next; i < family.size(); ++i) {
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return total;
}

FieldElement bijective_monomial_sum_bf(const Graph& g, std::size_t p, std::size_t label_count,
                                       const ColorAssignment& assignment,
                                       const FieldConfig& field) {
    require(label_count <= 8, "bijective coloring sum");
    auto matchings = perfect_matchings_bf(g);
    FieldElement total = field.zero();
    if (p == 0) return field.one();
    if (matchings.empty()) return total;

    std::vector<std::size_t> pick(p, 0);
    while (true) {
        std::vector<std::pair<int, std::size_t>> domain;
        std::vector<bool> edge_used(g.edge_count(), false);
        bool disjoint = true;
        for (std::size_t i = 0; i < p && disjoint; ++i) {
            for (int e : matchings[pick[i]]) {
                if (edge_used[e]) {
                    disjoint = false;
                    break;
                }
                edge_used[e] = true;
                domain.emplace_back(e, i);
            }
        }
        if (disjoint && domain.size() == label_count) {
            std::vector<int> lperm(label_count);
            std::iota(lperm.begin(), lperm.end(), 0);
            do {
                FieldElement term = field.one();
                for (std::size_t d = 0; d < domain.size(); ++d) {
                    auto [e, i] = domain[d];
                    FieldElement xv = assignment.x[e * assignment.p + i];
                    FieldElement yv = assignment.y[e * assignment.labels + lperm[d]];
                    term *= xv * xv * yv * yv;
                }
                total += term;
            } while (std::next_permutation(lperm.begin(), lperm.end()));
        }
        std::size_t pos = 0;
        while (pos < p && ++pick[pos] == matchings.size()) pick[pos++] = 0;
        if (pos == p) break;
    }
    return total;
}

}  // namespace polysieve::oracle
