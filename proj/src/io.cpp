#include "polysieve/io.hpp"

#include <sstream>
#include <vector>

namespace polysieve {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + tok +
                         "'");
    }
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_graph(const std::string& text) {
    auto lines = split_lines(text);
    std::size_t line_no = 0;
    std::size_t next = 0;
    auto next_tokens = [&]() -> std::vector<std::string> {
        while (next < lines.size()) {
            ++line_no;
            auto toks = tokens(lines[next++]);
            if (!toks.empty()) return toks;
        }
        ++line_no;
        return {};
    };

    auto header = next_tokens();
    if (header.size() != 2) fail(line_no, "expected header 'n m'");
    long long n = parse_int(header[0], line_no);
    long long m = parse_int(header[1], line_no);
    if (n < 0 || m < 0) fail(line_no, "negative header values");
    Graph g(static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i) {
        auto toks = next_tokens();
        if (toks.size() != 2) fail(line_no, "expected edge 'u v'");
        long long u = parse_int(toks[0], line_no);
        long long v = parse_int(toks[1], line_no);
        if (u < 0 || v < 0 || u >= n || v >= n) fail(line_no, "vertex out of range");
        if (u == v) fail(line_no, "loop edge");
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const GraphError& e) {
            fail(line_no, e.what());
        }
    }
    auto extra = next_tokens();
    if (!extra.empty()) fail(line_no, "trailing content after " + std::to_string(m) + " edges");
    return g;
}

std::variant<SetFamily, PartiteFamily> parse_family(const std::string& text) {
    auto lines = split_lines(text);
    std::size_t line_no = 0;
    std::size_t next = 0;
    auto next_tokens = [&]() -> std::vector<std::string> {
        while (next < lines.size()) {
            ++line_no;
            auto toks = tokens(lines[next++]);
            if (!toks.empty()) return toks;
        }
        ++line_no;
        return {};
    };

    auto header = next_tokens();
    bool partite = header.size() == 3 && header[2] == "partite";
    if (!partite && header.size() != 2)
        fail(line_no, "expected header 'n q' or 'q r partite'");

    auto read_member = [&](std::size_t q, auto&& add) {
        while (true) {
            auto toks = next_tokens();
            if (toks.empty()) break;
            if (toks.size() != q)
                fail(line_no, "member has wrong arity: expected " + std::to_string(q) +
                                  " indices, got " + std::to_string(toks.size()));
            std::vector<int> member;
            for (const auto& tok : toks) member.push_back(static_cast<int>(parse_int(tok, line_no)));
            try {
                add(std::move(member));
            } catch (const FamilyError& e) {
                fail(line_no, e.what());
            }
        }
    };

    if (partite) {
        long long q = parse_int(header[0], line_no);
        long long r = parse_int(header[1], line_no);
        if (q < 2 || r < 1) fail(line_no, "partite header needs q >= 2 and r >= 1");
        PartiteFamily family(static_cast<std::size_t>(q), static_cast<std::size_t>(r));
        read_member(static_cast<std::size_t>(q),
                    [&](std::vector<int> member) { family.add_member(std::move(member)); });
        return family;
    }
    long long n = parse_int(header[0], line_no);
    long long q = parse_int(header[1], line_no);
    if (n < 0 || q < 1) fail(line_no, "header needs n >= 0 and q >= 1");
    SetFamily family(static_cast<std::size_t>(n), static_cast<std::size_t>(q));
    read_member(static_cast<std::size_t>(q),
                [&](std::vector<int> member) { family.add_member(std::move(member)); });
    return family;
}

std::string format_family(const SetFamily& family) {
    std::ostringstream out;
    out << family.ground_size() << ' ' << family.member_size() << '\n';
    for (const auto& member : family.members()) {
        for (std::size_t i = 0; i < member.size(); ++i)
            out << member[i] << (i + 1 == member.size() ? '\n' : ' ');
    }
    return out.str();
}

SetFamily encode_graph_packing(const Graph& g, PackingEncoding mode) {
    std::size_t n = g.vertex_count();
    SetFamily out(mode == PackingEncoding::edge_triangle ? g.edge_count() : n, 3);
    for (int u = 0; u < static_cast<int>(n); ++u) {
        for (int v = u + 1; v < static_cast<int>(n); ++v) {
            for (int w = v + 1; w < static_cast<int>(n); ++w) {
                int adj = (g.adjacent(u, v) ? 1 : 0) + (g.adjacent(u, w) ? 1 : 0) +
                          (g.adjacent(v, w) ? 1 : 0);
                switch (mode) {
                    case PackingEncoding::vertex_triangle:
                        if (adj == 3) out.add_member({u, v, w});
                        break;
                    case PackingEncoding::edge_triangle:
                        if (adj == 3)
                            out.add_member({g.edge_index(u, v), g.edge_index(u, w),
                                            g.edge_index(v, w)});
                        break;
                    case PackingEncoding::vertex_p3:
                        // {u,v,w} carries a 3-vertex path iff at least two of
                        // the three pairs are edges.
                        if (adj >= 2) out.add_member({u, v, w});
                        break;
                }
            }
        }
    }
    return out;
}

}  // namespace polysieve
