#include "powfactor/graph_io.hpp"

#include <charconv>
#include <cstdint>

#include "powfactor/error.hpp"

namespace powfactor {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

long long to_int(const Token& t, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError("expected an integer, got '" + std::string(t.text) + "'", line, t.column);
    return value;
}

constexpr long long kMaxVertices = 258047;

}  // namespace

SimpleGraph parse_edge_list(std::string_view text) {
    SimpleGraph g;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (!have_header) {
            if (tokens.size() != 1) throw ParseError("header must hold exactly the vertex count", line_no, 1);
            long long n = to_int(tokens[0], line_no);
            if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range", line_no, tokens[0].column);
            g = SimpleGraph(static_cast<int>(n));
            have_header = true;
        } else {
            if (tokens.size() != 2) throw ParseError("edge line must hold two vertex indices", line_no, tokens[0].column);
            long long u = to_int(tokens[0], line_no);
            long long v = to_int(tokens[1], line_no);
            if (u < 0 || u >= g.order())
                throw ParseError("vertex index " + std::to_string(u) + " out of range", line_no, tokens[0].column);
            if (v < 0 || v >= g.order())
                throw ParseError("vertex index " + std::to_string(v) + " out of range", line_no, tokens[1].column);
            if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no, tokens[0].column);
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        if (end == text.size()) break;
    }
    if (!have_header) throw ParseError("missing header line with vertex count", line_no == 0 ? 1 : line_no, 1);
    return g;
}

std::string emit_edge_list(const SimpleGraph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

SimpleGraph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.substr(0, 10) == ">>graph6<<") line.remove_prefix(10);
    for (std::size_t i = 0; i < line.size(); ++i) {
        auto c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw ParseError("byte " + std::to_string(c) + " is not valid graph6", 1, i + 1);
    }
    if (line.empty()) throw ParseError("empty graph6 record", 1, 1);
    std::size_t pos = 0;
    long long n = 0;
    if (line[0] != 126) {
        n = line[0] - 63;
        pos = 1;
    } else {
        if (line.size() < 4 || line[1] == 126) throw ParseError("unsupported graph6 size header", 1, 1);
        n = (static_cast<long long>(line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63);
        pos = 4;
    }
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() - pos != bytes)
        throw ParseError("graph6 body holds " + std::to_string(line.size() - pos) + " bytes, expected " +
                             std::to_string(bytes),
                         1, pos + 1);
    SimpleGraph g(static_cast<int>(n));
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            int chunk = line[pos + k / 6] - 63;
            if (chunk >> (5 - k % 6) & 1) g.add_edge(i, j);
        }
    for (; k < bytes * 6; ++k) {
        int chunk = line[pos + k / 6] - 63;
        if (chunk >> (5 - k % 6) & 1) throw ParseError("nonzero graph6 padding bit", 1, pos + k / 6 + 1);
    }
    return g;
}

std::string emit_graph6(const SimpleGraph& g) {
    const long long n = g.order();
    if (n > kMaxVertices) throw PreconditionError("graph too large for graph6 emitter");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

std::vector<SimpleGraph> parse_graph6_stream(std::string_view text) {
    std::vector<SimpleGraph> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        while (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no, e.column());
        }
    }
    return out;
}

SimpleGraph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::EdgeList) return parse_edge_list(text);
    auto graphs = parse_graph6_stream(text);
    if (graphs.size() != 1)
        throw ParseError("expected exactly one graph6 record, found " + std::to_string(graphs.size()), 1, 1);
    return std::move(graphs.front());
}

std::string emit_graph(const SimpleGraph& g, GraphFormat format) {
    return format == GraphFormat::EdgeList ? emit_edge_list(g) : emit_graph6(g) + "\n";
}

GraphFormat sniff_format(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (line.substr(0, 10) == ">>graph6<<") return GraphFormat::Graph6;
        // A bare integer header means edge list; anything else is treated as graph6.
        for (char c : tokens[0].text)
            if (c < '0' || c > '9') return GraphFormat::Graph6;
        return GraphFormat::EdgeList;
    }
    return GraphFormat::EdgeList;
}

}  // namespace powfactor
