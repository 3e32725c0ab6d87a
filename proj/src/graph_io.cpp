#include "stc/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "stc/errors.hpp"

namespace stc {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

std::int64_t to_int(const std::string& s, int line, const char* what) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + s + "'");
    return v;
}

bool is_comment(const std::vector<std::string>& t) { return !t.empty() && t[0] == "c"; }

} // namespace

GrFile parse_gr(std::istream& in) {
    GrFile out;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    std::int64_t n = 0, m = 0, seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto t = tokens(line);
        if (t.empty() || is_comment(t)) continue;
        if (t[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            if (t.size() != 4 || (t[1] != "stc" && t[1] != "stcw"))
                throw ParseError(line_no, "header must be 'p stc <n> <m>' or 'p stcw <n> <m>'");
            out.weighted = t[1] == "stcw";
            n = to_int(t[2], line_no, "vertex count");
            m = to_int(t[3], line_no, "edge count");
            if (n < 0 || m < 0) throw ParseError(line_no, "negative count");
            out.graph = DoubleWeightedGraph(Graph(static_cast<int>(n)));
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, "edge line before header");
        std::size_t want = out.weighted ? 4 : 2;
        if (t.size() != want)
            throw ParseError(line_no, "expected " + std::to_string(want) + " fields, got " + std::to_string(t.size()));
        if (seen == m) throw ParseError(line_no, "more than " + std::to_string(m) + " edge lines");
        auto u = to_int(t[0], line_no, "endpoint"), v = to_int(t[1], line_no, "endpoint");
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(n));
        if (u == v) throw ParseError(line_no, "self-loop");
        if (out.graph.graph.has_edge(static_cast<int>(u - 1), static_cast<int>(v - 1)))
            throw ParseError(line_no, "duplicate edge " + t[0] + " " + t[1]);
        std::int64_t w1 = 1, w2 = 1;
        if (out.weighted) {
            w1 = to_int(t[2], line_no, "weight");
            w2 = to_int(t[3], line_no, "weight");
            if (w1 < 1 || w2 < 1) throw ParseError(line_no, "weights must be positive");
        }
        out.graph.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1), w1, w2);
        ++seen;
    }
    if (!have_header) throw ParseError(line_no, "missing header");
    if (seen != m)
        throw ParseError(line_no, "expected " + std::to_string(m) + " edge lines, got " + std::to_string(seen));
    return out;
}

GrFile parse_gr_string(const std::string& text) {
    std::istringstream in(text);
    return parse_gr(in);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
}

GrFile read_gr_file(const std::string& path) { return parse_gr_string(read_text_file(path)); }

std::string write_gr(const Graph& g) {
    std::ostringstream out;
    out << "p stc " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string write_gr(const DoubleWeightedGraph& g) {
    std::ostringstream out;
    out << "p stcw " << g.graph.n() << ' ' << g.graph.m() << '\n';
    for (int e = 0; e < g.graph.m(); ++e) {
        auto [u, v] = g.graph.edge(e);
        out << u + 1 << ' ' << v + 1 << ' ' << g.wt1[e] << ' ' << g.wt2[e] << '\n';
    }
    return out.str();
}

std::vector<int> parse_vertex_list(std::istream& in, int n) {
    std::vector<int> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto t = tokens(line);
        if (t.empty() || t[0] == "c" || t[0][0] == '#') continue;
        for (auto& s : t) {
            auto v = to_int(s, line_no, "vertex id");
            if (v < 1 || v > n) throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
            out.push_back(static_cast<int>(v - 1));
        }
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw ParseError(line_no, "repeated vertex in list");
    return out;
}

std::vector<int> read_vertex_list_file(const std::string& path, int n) {
    std::istringstream in(read_text_file(path));
    return parse_vertex_list(in, n);
}

} // namespace stc
