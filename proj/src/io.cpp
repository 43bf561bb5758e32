#include "dpg/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace dpg {

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

int g6_char(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw GraphError("graph6: truncated input");
    unsigned char c = s[pos++];
    if (c < kG6Lo || c > kG6Hi)
        throw GraphError("graph6: character out of range at position " +
                         std::to_string(pos - 1));
    return c - kG6Lo;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw GraphError("graph6: empty input");

    size_t pos = 0;
    long long n;
    int c0 = g6_char(s, pos);
    if (c0 < 63) {
        n = c0;
    } else {
        // long form: '~' then 3 sextets (or '~~' then 6, not needed here)
        int c1 = g6_char(s, pos);
        if (c1 == 63) throw GraphError("graph6: 36-bit order form unsupported");
        int c2 = g6_char(s, pos);
        int c3 = g6_char(s, pos);
        n = ((long long)c1 << 12) | (c2 << 6) | c3;
        if (n < 63) throw GraphError("graph6: malformed header (non-canonical long form)");
    }
    if (n > 100000) throw GraphError("graph6: order too large");

    long long nbits = n * (n - 1) / 2;
    long long nchars = (nbits + 5) / 6;
    if ((long long)(s.size() - pos) != nchars)
        throw GraphError("graph6: body length mismatch (expected " +
                         std::to_string(nchars) + " data characters)");

    std::vector<Bitset> adj(size_t(n), Bitset{int(n)});
    int buf = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                buf = g6_char(s, pos);
                bits = 6;
            }
            if (buf & (1 << (bits - 1))) {
                adj[size_t(i)].set(j);
                adj[size_t(j)].set(i);
            }
            --bits;
        }
    if (bits > 0 && (buf & ((1 << bits) - 1)) != 0)
        throw GraphError("graph6: nonzero padding bits");
    return from_adjacency(int(n), std::move(adj));
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + kG6Lo));
        out.push_back(char(((n >> 6) & 63) + kG6Lo));
        out.push_back(char((n & 63) + kG6Lo));
    } else {
        throw GraphError("graph6: order exceeds supported long form");
    }
    int buf = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            buf = (buf << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(char(buf + kG6Lo));
                buf = bits = 0;
            }
        }
    if (bits > 0) out.push_back(char((buf << (6 - bits)) + kG6Lo));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            long long hn, hm;
            if (ls >> hn >> hm) {
                if (hn < 0 || hm < 0) throw GraphError("edge list: bad header");
                n = hn;
                m = hm;
            } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
                throw GraphError("edge list: bad header line");
            }
            continue;
        }
        long long u, v;
        if (ls >> u >> v) edges.emplace_back(int(u), int(v));
    }
    if (n < 0) throw GraphError("edge list: missing header");
    if ((long long)edges.size() != m)
        throw GraphError("edge list: expected " + std::to_string(m) +
                         " edges, got " + std::to_string(edges.size()));
    return from_edge_list(int(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph load_graph(const std::string& input) {
    std::string content = input;
    if (std::filesystem::exists(input)) {
        std::ifstream f(input);
        std::stringstream ss;
        ss << f.rdbuf();
        content = ss.str();
    }
    // Edge-list files start with a decimal header; graph6 never starts
    // with a digit-space-digit line.
    std::istringstream probe(content);
    long long a, b;
    if (probe >> a >> b) return parse_edge_list(content);
    return parse_graph6(content);
}

std::string to_dot(const Graph& g, const VertexSet* highlight) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (highlight && highlight->test(v))
            out << " [style=filled, fillcolor=lightblue]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace dpg
