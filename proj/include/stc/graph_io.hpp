#pragma once

#include <istream>
#include <string>
#include <vector>

#include "stc/graph.hpp"

namespace stc {

struct GrFile {
    DoubleWeightedGraph graph;  // unit weights when !weighted
    bool weighted = false;
};

// Strict reader for "p stc n m" / "p stcw n m" files, 1-indexed; throws ParseError with line numbers.
GrFile parse_gr(std::istream& in);
GrFile parse_gr_string(const std::string& text);
GrFile read_gr_file(const std::string& path);

std::string write_gr(const Graph& g);
std::string write_gr(const DoubleWeightedGraph& g);

// Whitespace-separated 1-indexed vertex ids; lines starting with 'c' or '#' are comments.
std::vector<int> parse_vertex_list(std::istream& in, int n);
std::vector<int> read_vertex_list_file(const std::string& path, int n);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace stc
