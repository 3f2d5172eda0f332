#pragma once

#include "gspec/errors.hpp"
#include "gspec/graph.hpp"

#include <cstddef>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

namespace gspec {

inline std::string to_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw CapacityError("graph6 encoding supports at most 258047 vertices");
    }
    int acc = 0;
    int bits = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

// Decodes one graph6 line; an optional ">>graph6<<" prefix and trailing whitespace are accepted.
inline Graph from_graph6(const std::string& line)
{
    std::size_t pos = 0;
    const std::string header = ">>graph6<<";
    if (line.compare(0, header.size(), header) == 0) pos = header.size();
    std::size_t end = line.size();
    while (end > pos && (line[end - 1] == '\n' || line[end - 1] == '\r' || line[end - 1] == ' ')) --end;

    auto byte = [&](std::size_t i) -> int {
        if (i >= end) throw ParseError("graph6 line truncated", i);
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", i);
        return c - 63;
    };

    if (pos >= end) throw ParseError("empty graph6 line", pos);
    std::size_t n = 0;
    if (line[pos] == '~') {
        if (pos + 1 < end && line[pos + 1] == '~') throw ParseError("graph6 orders above 258047 unsupported", pos);
        for (int k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(byte(pos + k));
        pos += 4;
    } else {
        n = static_cast<std::size_t>(byte(pos));
        pos += 1;
    }

    const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (end - pos != nbytes)
        throw ParseError("graph6 body has " + std::to_string(end - pos) + " bytes, expected " + std::to_string(nbytes),
                         end - pos < nbytes ? end : pos + nbytes);

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            int b = byte(pos + k / 6);
            if ((b >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    return Graph(n, edges);
}

// One graph per nonempty line. Parse errors report offsets relative to the whole stream.
inline std::vector<Graph> read_graph6_stream(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        std::size_t len = line.size() + 1;
        if (!line.empty() && line != "\r") {
            try {
                out.push_back(from_graph6(line));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(out.size() + 1) + ": malformed graph6",
                                 offset + e.byte_offset);
            }
        }
        offset += len;
    }
    return out;
}

inline std::vector<Graph> read_graph6_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open graph6 file '" + path + "'");
    return read_graph6_stream(in);
}

} // namespace gspec
