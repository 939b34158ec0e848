#ifndef K7LAB_GRAPH6_HPP
#define K7LAB_GRAPH6_HPP

// graph6 encoding for n <= 31: one size byte (63+n) followed by the
// upper-triangle adjacency bits in column order, packed 6 per byte
// (MSB first), each byte offset by 63.  sparse6 is deliberately not
// supported; every corpus here is dense and tiny.

#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "k7lab/graph.hpp"

namespace k7lab {

enum class Graph6Error {
    bad_size_byte,
    truncated,
    trailing_garbage,
    bad_body_byte,
    nonzero_padding,
};

class graph6_error : public std::runtime_error {
  public:
    graph6_error(Graph6Error kind, const std::string& what)
        : std::runtime_error("graph6: " + what), kind_(kind) {}
    Graph6Error kind() const { return kind_; }

  private:
    Graph6Error kind_;
};

inline std::string serialize_graph6(const SmallGraph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline SmallGraph parse_graph6(std::string_view text) {
    if (text.empty())
        throw graph6_error(Graph6Error::truncated, "empty input");
    int n = static_cast<unsigned char>(text[0]) - 63;
    if (n < 0 || n > kMaxVertices)
        throw graph6_error(Graph6Error::bad_size_byte,
                           "size byte out of supported range (n <= 31)");
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(text.size()) < 1 + nbytes)
        throw graph6_error(Graph6Error::truncated, "bit stream too short");
    if (static_cast<int>(text.size()) > 1 + nbytes)
        throw graph6_error(Graph6Error::trailing_garbage,
                           "bytes after encoded graph");
    SmallGraph g(n);
    int bitpos = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bitpos) {
            int c = static_cast<unsigned char>(text[1 + bitpos / 6]) - 63;
            if (c < 0 || c > 63)
                throw graph6_error(Graph6Error::bad_body_byte,
                                   "body byte outside [63,126]");
            if ((c >> (5 - bitpos % 6)) & 1) g = g.with_edge(i, j);
        }
    }
    if (nbits % 6 != 0) {
        int c = static_cast<unsigned char>(text[1 + nbytes - 1]) - 63;
        if (c & ((1 << (6 - nbits % 6)) - 1))
            throw graph6_error(Graph6Error::nonzero_padding,
                               "padding bits not zero");
    }
    return g;
}

/// Parse a newline-delimited graph6 stream.  An optional ">>graph6<<" header
/// is tolerated (never written); blank lines are skipped.
inline std::vector<SmallGraph> read_graph6_lines(std::istream& in) {
    std::vector<SmallGraph> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first && line.rfind(">>graph6<<", 0) == 0)
            line = line.substr(10);
        first = false;
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

inline std::vector<SmallGraph> read_graph6_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph6_lines(in);
}

inline void write_graph6_file(const std::string& path,
                              const std::vector<SmallGraph>& graphs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (const auto& g : graphs) out << serialize_graph6(g) << '\n';
}

}  // namespace k7lab

#endif  // K7LAB_GRAPH6_HPP
