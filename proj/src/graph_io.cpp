#include "molex/graph_io.hpp"

#include "molex/error.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>

namespace molex {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void encode_size(std::string& out, std::uint64_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

[[noreturn]] void parse_fail(const std::string& what, int line = 0)
{
    if (line > 0)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
    throw Error(ErrorCode::ParseError, what);
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

// Splits on whitespace; false unless every token is an integer.
bool parse_ints(std::string_view s, std::vector<long long>& out)
{
    out.clear();
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        if (i == s.size())
            break;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, value);
        if (ec != std::errc() || ptr != s.data() + j)
            return false;
        out.push_back(value);
        i = j;
    }
    return true;
}

}  // namespace

std::string to_graph6(const MolecularGraph& g)
{
    const int n = g.order();
    std::string out;
    encode_size(out, n);
    int acc = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

MolecularGraph from_graph6(std::string_view text)
{
    text = trim(text);
    if (text.starts_with(kHeader))
        text.remove_prefix(kHeader.size());
    if (text.empty())
        parse_fail("empty graph6 string");
    for (char ch : text)
        if (ch < 63 || ch > 126)
            parse_fail("invalid graph6 character");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto take = [&](int count) {
        std::uint64_t v = 0;
        for (int k = 0; k < count; ++k) {
            if (pos >= text.size())
                parse_fail("truncated graph6 size field");
            v = (v << 6) | static_cast<std::uint64_t>(text[pos++] - 63);
        }
        return v;
    };
    if (text[0] != 126) {
        n = take(1);
    } else if (text.size() > 1 && text[1] != 126) {
        ++pos;
        n = take(3);
    } else {
        pos += 2;
        n = take(6);
    }
    if (n == 0)
        parse_fail("graph6 graph with no vertices");
    if (n > 1'000'000)
        parse_fail("graph6 graph too large");

    const std::uint64_t pairs = n * (n - 1) / 2;
    const std::uint64_t body = (pairs + 5) / 6;
    if (text.size() - pos != body)
        parse_fail("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                   std::to_string(body));

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    }
    // Padding bits must be zero in canonical graph6.
    if (pairs % 6 != 0) {
        const int last = text.back() - 63;
        if (last & ((1 << (6 - pairs % 6)) - 1))
            parse_fail("graph6 padding bits are not zero");
    }
    return build(static_cast<int>(n), edges);
}

void write_adjacency_list(std::ostream& out, const MolecularGraph& g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

GraphFormat detect_format(std::string_view first_line)
{
    std::vector<long long> ints;
    if (parse_ints(trim(first_line), ints) && ints.size() == 2)
        return GraphFormat::AdjacencyList;
    return GraphFormat::Graph6;
}

std::vector<ParsedGraph> read_graphs(std::istream& in)
{
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);

    std::vector<ParsedGraph> out;
    std::size_t i = 0;
    auto skip_blank = [&] {
        while (i < lines.size() && trim(lines[i]).empty())
            ++i;
    };
    skip_blank();
    if (i == lines.size())
        return out;

    auto rethrow_with_line = [](const Error& e, int line) -> Error {
        return Error(e.code(), "line " + std::to_string(line) + ": " + e.detail());
    };

    if (detect_format(lines[i]) == GraphFormat::Graph6) {
        for (; i < lines.size(); ++i) {
            auto text = trim(lines[i]);
            if (text.empty())
                continue;
            const int line = static_cast<int>(i) + 1;
            try {
                out.push_back({from_graph6(text), line});
            } catch (const Error& e) {
                throw rethrow_with_line(e, line);
            }
        }
        return out;
    }

    std::vector<long long> ints;
    while (i < lines.size()) {
        const int header_line = static_cast<int>(i) + 1;
        if (!parse_ints(trim(lines[i]), ints) || ints.size() != 2)
            parse_fail("expected 'n m' header", header_line);
        const long long n = ints[0];
        const long long m = ints[1];
        if (n < 1 || n > 1'000'000)
            parse_fail("vertex count out of range", header_line);
        if (m < 0 || m > 2 * n)
            parse_fail("edge count out of range for a molecular graph", header_line);
        ++i;
        std::vector<Edge> edges;
        for (long long k = 0; k < m; ++k, ++i) {
            if (i >= lines.size())
                parse_fail("expected " + std::to_string(m) + " edge lines", static_cast<int>(i) + 1);
            if (!parse_ints(trim(lines[i]), ints) || ints.size() != 2)
                parse_fail("expected 'u v' edge line", static_cast<int>(i) + 1);
            if (ints[0] >= n || ints[1] >= n)
                parse_fail("vertex id out of range", static_cast<int>(i) + 1);
            edges.emplace_back(static_cast<int>(ints[0]), static_cast<int>(ints[1]));
        }
        try {
            out.push_back({build(static_cast<int>(n), edges), header_line});
        } catch (const Error& e) {
            throw rethrow_with_line(e, header_line);
        }
        skip_blank();
    }
    return out;
}

}  // namespace molex
