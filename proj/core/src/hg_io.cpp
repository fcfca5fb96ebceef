#include "klab/hg_io.hpp"

#include <charconv>
#include <sstream>
#include <unordered_set>

namespace klab {
namespace {

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view tok, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, std::string("malformed ") + what + " '" + std::string(tok) + "'");
    return value;
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text, std::vector<ParseWarning>* warnings) {
    std::vector<std::pair<int, std::string_view>> lines; // (line number, content)
    {
        int no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t nl = text.find('\n', pos);
            std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
            ++no;
            if (!is_blank(line) && !line.starts_with('#')) lines.emplace_back(no, line);
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
    }

    if (lines.empty()) throw ParseError(1, "malformed header: empty input");

    auto [header_no, header] = lines[0];
    auto header_toks = tokenize(header);
    if (header_toks.size() != 2)
        throw ParseError(header_no, "malformed header: expected 'n m'");
    int n = parse_int(header_toks[0], header_no, "vertex count");
    int m = parse_int(header_toks[1], header_no, "edge count");
    if (n < 0 || m < 0) throw ParseError(header_no, "malformed header: counts must be nonnegative");

    if (static_cast<int>(lines.size()) - 1 < m) {
        int last = lines.back().first;
        throw ParseError(last, "expected " + std::to_string(m) + " edge lines, found " +
                                   std::to_string(lines.size() - 1));
    }
    if (static_cast<int>(lines.size()) - 1 > m) {
        throw ParseError(lines[static_cast<std::size_t>(m) + 1].first,
                         "unexpected content after " + std::to_string(m) + " edge lines");
    }

    std::vector<VertexSet> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<VertexSet, VertexSet::Hash> seen;
    for (int i = 1; i <= m; ++i) {
        auto [line_no, line] = lines[static_cast<std::size_t>(i)];
        auto toks = tokenize(line);
        if (toks.empty()) throw ParseError(line_no, "empty edge line");
        VertexSet e(n);
        for (auto tok : toks) {
            int v = parse_int(tok, line_no, "vertex id");
            if (v < 1 || v > n)
                throw ParseError(line_no, "vertex id " + std::to_string(v) + " out of range 1.." +
                                              std::to_string(n));
            if (e.contains(v))
                throw ParseError(line_no, "duplicate vertex id " + std::to_string(v) + " in edge");
            e.add(v);
        }
        if (!seen.insert(e).second) {
            if (warnings)
                warnings->push_back({line_no, "duplicate edge ignored"});
            continue;
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) {
        bool first = true;
        for (int v : e.elements()) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace klab
