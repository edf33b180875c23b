#include "arg/formats.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace arg {

namespace {

std::vector<std::vector<int>> transpose(int rows, int cols,
                                        const std::vector<std::vector<int>>& row_cols) {
    std::vector<std::vector<int>> col_rows(cols);
    for (int r = 0; r < rows; ++r) {
        for (int c : row_cols[r]) col_rows[c].push_back(r);
    }
    return col_rows;
}

void append_padded(std::string& out, const std::vector<int>& entries, int width) {
    for (int k = 0; k < width; ++k) {
        if (k > 0) out += ' ';
        out += std::to_string(k < static_cast<int>(entries.size()) ? entries[k] + 1 : 0);
    }
    out += '\n';
}

}  // namespace

std::string write_alist(const SparseMatrixGF2& h) {
    h.validate();
    const auto col_rows = transpose(h.rows, h.cols, h.row_cols);
    int max_col = 0, max_row = 0;
    for (const auto& c : col_rows) max_col = std::max(max_col, static_cast<int>(c.size()));
    for (const auto& r : h.row_cols) max_row = std::max(max_row, static_cast<int>(r.size()));

    std::string out = std::to_string(h.cols) + " " + std::to_string(h.rows) + "\n" +
                      std::to_string(max_col) + " " + std::to_string(max_row) + "\n";
    for (int c = 0; c < h.cols; ++c) {
        out += std::to_string(col_rows[c].size());
        out += c + 1 < h.cols ? ' ' : '\n';
    }
    for (int r = 0; r < h.rows; ++r) {
        out += std::to_string(h.row_cols[r].size());
        out += r + 1 < h.rows ? ' ' : '\n';
    }
    for (int c = 0; c < h.cols; ++c) append_padded(out, col_rows[c], max_col);
    for (int r = 0; r < h.rows; ++r) append_padded(out, h.row_cols[r], max_row);
    return out;
}

namespace {

// Empty lines are kept: a degree-0 list is legitimately empty. Trailing
// blank lines are trimmed afterwards.
std::vector<std::vector<long>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<long>> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        std::istringstream ls(line);
        std::vector<long> tokens;
        long value;
        while (ls >> value) tokens.push_back(value);
        std::string rest;
        if (ls.clear(), ls >> rest) throw AlistError("alist: non-numeric token '" + rest + "'");
        lines.push_back(std::move(tokens));
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

// One neighbor list: exactly `degree` entries (unpadded) or `max` entries
// with zeros after the first `degree` (padded). Entries are 1-based.
std::vector<int> parse_list(const std::vector<long>& tokens, long degree, long max, long limit,
                            const std::string& what) {
    if (static_cast<long>(tokens.size()) != degree &&
        static_cast<long>(tokens.size()) != max) {
        throw AlistError("alist: " + what + " has " + std::to_string(tokens.size()) +
                         " entries, expected " + std::to_string(degree) + " (or " +
                         std::to_string(max) + " padded)");
    }
    std::vector<int> list;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        const long v = tokens[k];
        if (static_cast<long>(k) < degree) {
            if (v < 1 || v > limit) {
                throw AlistError("alist: " + what + " index " + std::to_string(v) +
                                 " out of range [1," + std::to_string(limit) + "]");
            }
            list.push_back(static_cast<int>(v - 1));
        } else if (v != 0) {
            throw AlistError("alist: " + what + " padding must be zero");
        }
    }
    std::sort(list.begin(), list.end());
    for (std::size_t k = 1; k < list.size(); ++k) {
        if (list[k] == list[k - 1]) throw AlistError("alist: duplicate index in " + what);
    }
    return list;
}

}  // namespace

SparseMatrixGF2 read_alist(const std::string& text) {
    auto lines = tokenize_lines(text);
    if (lines.size() < 4) throw AlistError("alist: fewer than four header lines");
    if (lines[0].size() != 2) throw AlistError("alist: first line must be 'n m'");
    const long n = lines[0][0], m = lines[0][1];
    if (n < 1 || m < 1) throw AlistError("alist: dimensions must be positive");
    if (lines[1].size() != 2) throw AlistError("alist: second line must hold the two max degrees");
    const long max_col = lines[1][0], max_row = lines[1][1];
    if (static_cast<long>(lines.size()) > 4 + n + m) {
        throw AlistError("alist: expected " + std::to_string(4 + n + m) + " lines, found " +
                         std::to_string(lines.size()));
    }
    // Trailing degree-0 lists may have been trimmed away as blank lines.
    lines.resize(4 + n + m);
    if (static_cast<long>(lines[2].size()) != n) {
        throw AlistError("alist: column degree list length mismatch");
    }
    if (static_cast<long>(lines[3].size()) != m) {
        throw AlistError("alist: row degree list length mismatch");
    }
    for (long d : lines[2]) {
        if (d < 0 || d > max_col) throw AlistError("alist: column degree out of range");
    }
    for (long d : lines[3]) {
        if (d < 0 || d > max_row) throw AlistError("alist: row degree out of range");
    }

    std::vector<std::vector<int>> col_rows(n);
    for (long c = 0; c < n; ++c) {
        col_rows[c] = parse_list(lines[4 + c], lines[2][c], max_col, m,
                                 "column " + std::to_string(c + 1) + " list");
    }
    SparseMatrixGF2 h{static_cast<int>(m), static_cast<int>(n), {}};
    h.row_cols.resize(m);
    for (long r = 0; r < m; ++r) {
        h.row_cols[r] = parse_list(lines[4 + n + r], lines[3][r], max_row, n,
                                   "row " + std::to_string(r + 1) + " list");
    }

    // The two blocks must describe the same matrix.
    const auto from_rows = transpose(h.rows, h.cols, h.row_cols);
    for (long c = 0; c < n; ++c) {
        if (from_rows[c] != col_rows[c]) {
            throw AlistError("alist: row lists contradict column lists at column " +
                             std::to_string(c + 1));
        }
    }
    return h;
}

std::string write_dot(const BipartiteGraph& g) {
    std::string out = "graph tanner {\n";
    for (int l = 1; l <= g.n_left(); ++l) out += "  v" + std::to_string(l) + ";\n";
    for (int r = 1; r <= g.n_right(); ++r) out += "  c" + std::to_string(r) + ";\n";
    for (const auto& [l, r] : g.edges()) {
        out += "  v" + std::to_string(l) + " -- c" + std::to_string(r) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace arg
