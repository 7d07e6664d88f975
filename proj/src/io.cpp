#include "jigsaw/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace jigsaw {

namespace {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

struct Line {
    std::string_view text;
    int number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
    if (text.empty()) throw ParseError(1, 1, "empty input");
    if (text.back() != '\n') {
        int line = 1;
        for (char ch : text) line += ch == '\n';
        throw ParseError(line, 1, "missing trailing newline");
    }
    std::vector<Line> lines;
    std::size_t start = 0;
    int number = 1;
    while (start < text.size()) {
        const std::size_t end = text.find('\n', start);
        lines.push_back({text.substr(start, end - start), number++});
        start = end + 1;
    }
    return lines;
}

std::vector<Token> split_tokens(const Line& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.text.size()) {
        if (line.text[i] == ' ') {
            ++i;
            continue;
        }
        const std::size_t j = std::min(line.text.find(' ', i), line.text.size());
        tokens.push_back({line.text.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return tokens;
}

std::uint64_t parse_uint(const Token& tok, int line) {
    std::uint64_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line, tok.column, "expected a non-negative integer, got '" + std::string(tok.text) + "'");
    return value;
}

std::vector<Token> expect_tokens(const Line& line, std::size_t count) {
    auto tokens = split_tokens(line);
    if (tokens.size() != count)
        throw ParseError(line.number, 1,
                         "expected " + std::to_string(count) + " tokens, found " + std::to_string(tokens.size()));
    return tokens;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::string write_puzzle(const GridColoring& gc) {
    std::ostringstream out;
    const int n = gc.n();
    out << n << ' ' << gc.q() << '\n';
    for (int r = 0; r <= n; ++r) {
        for (int c = 0; c < n; ++c) out << (c ? " " : "") << gc.horizontal(r, c);
        out << '\n';
    }
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c <= n; ++c) out << (c ? " " : "") << gc.vertical(r, c);
        out << '\n';
    }
    return out.str();
}

GridColoring read_puzzle(std::string_view text) {
    const auto lines = split_lines(text);
    const auto header = expect_tokens(lines.front(), 2);
    const std::uint64_t n64 = parse_uint(header[0], 1);
    const std::uint64_t q64 = parse_uint(header[1], 1);
    if (n64 < 1 || n64 > 100000) throw ParseError(1, header[0].column, "grid side must be in [1, 100000]");
    if (q64 < 1 || q64 > 0xffffffffULL) throw ParseError(1, header[1].column, "colour count must be in [1, 2^32)");
    const int n = static_cast<int>(n64);
    const auto expected_lines = static_cast<std::size_t>(2 * n + 2);
    if (lines.size() < expected_lines)
        throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                         "unexpected end of input: expected " + std::to_string(expected_lines) + " lines");
    if (lines.size() > expected_lines)
        throw ParseError(static_cast<int>(expected_lines) + 1, 1, "unexpected extra line");

    const auto read_color = [&](const Token& tok, int line) {
        const std::uint64_t c = parse_uint(tok, line);
        if (c >= q64)
            throw ParseError(line, tok.column, "colour " + std::to_string(c) + " is not below q=" + std::to_string(q64));
        return static_cast<Color>(c);
    };

    std::vector<Color> horizontal;
    std::vector<Color> vertical;
    horizontal.reserve(static_cast<std::size_t>((n + 1) * n));
    vertical.reserve(static_cast<std::size_t>(n * (n + 1)));
    for (int r = 0; r <= n; ++r) {
        const Line& line = lines[static_cast<std::size_t>(1 + r)];
        for (const Token& tok : expect_tokens(line, static_cast<std::size_t>(n)))
            horizontal.push_back(read_color(tok, line.number));
    }
    for (int r = 0; r < n; ++r) {
        const Line& line = lines[static_cast<std::size_t>(n + 2 + r)];
        for (const Token& tok : expect_tokens(line, static_cast<std::size_t>(n + 1)))
            vertical.push_back(read_color(tok, line.number));
    }
    return GridColoring(n, static_cast<int>(q64), std::move(horizontal), std::move(vertical));
}

std::string write_witness(const Assembly& a) {
    std::ostringstream out;
    for (int r = 0; r < a.n(); ++r) {
        for (int c = 0; c < a.n(); ++c) {
            const Placement& p = a.at(r, c);
            out << (c ? " " : "") << p.label.row << ',' << p.label.col << ':' << p.rotation;
        }
        out << '\n';
    }
    return out.str();
}

Assembly read_witness(std::string_view text) {
    const auto lines = split_lines(text);
    const int n = static_cast<int>(lines.size());
    std::vector<Placement> cells;
    cells.reserve(static_cast<std::size_t>(n * n));
    for (const Line& line : lines) {
        for (const Token& tok : expect_tokens(line, static_cast<std::size_t>(n))) {
            const std::size_t comma = tok.text.find(',');
            const std::size_t colon = tok.text.find(':');
            if (comma == std::string_view::npos || colon == std::string_view::npos || colon < comma)
                throw ParseError(line.number, tok.column, "expected 'i,j:r', got '" + std::string(tok.text) + "'");
            const Token i{tok.text.substr(0, comma), tok.column};
            const Token j{tok.text.substr(comma + 1, colon - comma - 1), tok.column + static_cast<int>(comma) + 1};
            const Token r{tok.text.substr(colon + 1), tok.column + static_cast<int>(colon) + 1};
            const std::uint64_t iv = parse_uint(i, line.number);
            const std::uint64_t jv = parse_uint(j, line.number);
            const std::uint64_t rv = parse_uint(r, line.number);
            if (iv >= static_cast<std::uint64_t>(n) || jv >= static_cast<std::uint64_t>(n))
                throw ParseError(line.number, tok.column, "label outside the grid");
            if (rv > 3) throw ParseError(line.number, r.column, "rotation must be in 0..3");
            cells.push_back({{static_cast<int>(iv), static_cast<int>(jv)}, static_cast<int>(rv)});
        }
    }
    Assembly a(n, std::move(cells));
    a.validate();
    return a;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace jigsaw
