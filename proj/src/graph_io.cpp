#include "subthresh/graph_io.hpp"

#include "subthresh/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace subthresh {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool is_graph6_line(std::string_view line) {
    if (line.empty()) return false;
    for (const char c : line) {
        if (c < 63 || c > 126) return false;
    }
    return true;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
    throw_input("line " + std::to_string(line) + ": " + what);
}

bool parse_int(std::string_view token, long long& out) {
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

// "# order N" directive inside a comment; returns -1 when absent.
long long order_directive(std::string_view comment) {
    const auto words = split_ws(trim(comment));
    long long value = -1;
    if (words.size() == 2 && words[0] == "order" && parse_int(words[1], value)) return value;
    return -1;
}

Graph parse_edge_list(std::string_view text) {
    struct Pending {
        long long u, v;
        std::size_t line;
    };
    std::vector<Pending> edges;
    long long order = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            const long long directive = order_directive(line.substr(hash + 1));
            if (directive > kMaxVertices) fail_at(line_no, "order exceeds the 64-vertex capacity");
            if (directive >= 0) order = std::max(order, directive);
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto tokens = split_ws(line);
        long long u = 0;
        long long v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
            fail_at(line_no, "expected two vertex indices, got '" + std::string(line) + "'");
        }
        if (u < 0 || v < 0) fail_at(line_no, "negative vertex index");
        if (u >= kMaxVertices || v >= kMaxVertices) {
            fail_at(line_no, "vertex index " + std::to_string(std::max(u, v)) + " >= 64");
        }
        if (u == v) fail_at(line_no, "self-loop at vertex " + std::to_string(u));
        edges.push_back({u, v, line_no});
        order = std::max(order, std::max(u, v) + 1);
    }
    if (order == 0) throw_input("graph text contains no edges");
    Graph g(static_cast<int>(order));
    for (const Pending& e : edges) {
        if (g.has_edge(static_cast<int>(e.u), static_cast<int>(e.v))) {
            fail_at(e.line, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        }
        g.add_edge(static_cast<int>(e.u), static_cast<int>(e.v));
    }
    return g;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (const auto nl = text.find('\n'); nl != std::string_view::npos) text = trim(text.substr(0, nl));
    if (!is_graph6_line(text)) throw_input("line 1: not a graph6 string");
    std::size_t at = 0;
    long long n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        at = 1;
    } else {
        if (text.size() < 4 || text[1] == 126) throw_input("line 1: graph6 order exceeds the 64-vertex capacity");
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
        at = 4;
    }
    if (n > kMaxVertices) throw_input("line 1: graph6 order " + std::to_string(n) + " exceeds 64");
    const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
    const std::size_t need = (pairs + 5) / 6;
    if (text.size() - at != need) throw_input("line 1: graph6 body has wrong length");
    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[at + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_graph(std::string_view text) {
    const std::string_view body = trim(text);
    if (body.starts_with(">>graph6<<")) return parse_graph6(body);
    // first line that is neither blank nor a comment decides the format
    std::size_t pos = 0;
    while (pos < body.size()) {
        const std::size_t nl = body.find('\n', pos);
        const std::string_view line =
            trim(body.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
        if (!line.empty() && line.front() != '#') {
            if (is_graph6_line(line)) return parse_graph6(line);
            break;
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return parse_edge_list(text);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edges();
    int max_index = 0;
    for (const Edge& e : edges) max_index = std::max(max_index, e.v);
    if (edges.empty() || max_index + 1 != g.order()) out << "# order " << g.order() << '\n';
    for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_input("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

} // namespace subthresh
