#include "arg/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace arg {

bool BitVector::is_zero() const {
    for (std::uint64_t w : words_) {
        if (w != 0) return false;
    }
    return true;
}

int BitVector::popcount() const {
    int count = 0;
    for (std::uint64_t w : words_) count += std::popcount(w);
    return count;
}

void BitVector::xor_with(const BitVector& other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("BitVector: xor length mismatch");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

long SparseMatrixGF2::nonzeros() const {
    long total = 0;
    for (const auto& row : row_cols) total += static_cast<long>(row.size());
    return total;
}

void SparseMatrixGF2::validate() const {
    if (static_cast<int>(row_cols.size()) != rows) {
        throw std::invalid_argument("SparseMatrixGF2: row count mismatch");
    }
    for (const auto& row : row_cols) {
        int prev = -1;
        for (int c : row) {
            if (c < 0 || c >= cols) throw std::invalid_argument("SparseMatrixGF2: column out of range");
            if (c <= prev) throw std::invalid_argument("SparseMatrixGF2: columns not strictly increasing");
            prev = c;
        }
    }
}

SparseMatrixGF2 parity_matrix(const BipartiteGraph& g) {
    SparseMatrixGF2 h{g.n_right(), g.n_left(), {}};
    h.row_cols.resize(h.rows);
    for (int r = 1; r <= g.n_right(); ++r) {
        auto& row = h.row_cols[r - 1];
        for (int l : g.neighbors({Side::Right, r})) row.push_back(l - 1);
        std::sort(row.begin(), row.end());
    }
    return h;
}

namespace {

// Dense packed copy with full reduced row echelon form. pivot_cols[s] is the
// pivot column of row s after elimination.
struct Rref {
    std::vector<BitVector> rows;
    std::vector<int> pivot_cols;
};

Rref reduce(const SparseMatrixGF2& h) {
    Rref out;
    out.rows.reserve(h.rows);
    for (const auto& cols : h.row_cols) {
        BitVector row(h.cols);
        for (int c : cols) row.set(c, true);
        out.rows.push_back(std::move(row));
    }
    int next_row = 0;
    for (int col = 0; col < h.cols && next_row < h.rows; ++col) {
        int pivot = -1;
        for (int r = next_row; r < h.rows; ++r) {
            if (out.rows[r].get(col)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(out.rows[next_row], out.rows[pivot]);
        for (int r = 0; r < h.rows; ++r) {
            if (r != next_row && out.rows[r].get(col)) out.rows[r].xor_with(out.rows[next_row]);
        }
        out.pivot_cols.push_back(col);
        ++next_row;
    }
    return out;
}

}  // namespace

int rank_gf2(const SparseMatrixGF2& h) {
    return static_cast<int>(reduce(h).pivot_cols.size());
}

GeneratorMatrix systematic_generator(const SparseMatrixGF2& h) {
    const Rref rref = reduce(h);
    const int rank = static_cast<int>(rref.pivot_cols.size());
    GeneratorMatrix gen;
    gen.n = h.cols;
    gen.k = h.cols - rank;

    std::vector<bool> is_pivot(h.cols, false);
    for (int c : rref.pivot_cols) is_pivot[c] = true;
    for (int c = 0; c < h.cols; ++c) {
        if (!is_pivot[c]) gen.message_positions.push_back(c);
    }

    // Row t: free column f_t carries the message bit; each pivot column p_s
    // takes the RREF entry R[s][f_t] so that every H row checks to zero.
    gen.rows.reserve(gen.k);
    for (int f : gen.message_positions) {
        BitVector row(h.cols);
        row.set(f, true);
        for (int s = 0; s < rank; ++s) {
            if (rref.rows[s].get(f)) row.set(rref.pivot_cols[s], true);
        }
        gen.rows.push_back(std::move(row));
    }
    return gen;
}

BitVector encode(const GeneratorMatrix& gen, const BitVector& message) {
    if (message.size() != gen.k) {
        throw std::invalid_argument("encode: message length must equal k");
    }
    BitVector word(gen.n);
    for (int t = 0; t < gen.k; ++t) {
        if (message.get(t)) word.xor_with(gen.rows[t]);
    }
    return word;
}

BitVector syndrome(const SparseMatrixGF2& h, const BitVector& word) {
    if (word.size() != h.cols) {
        throw std::invalid_argument("syndrome: word length must equal matrix width");
    }
    BitVector s(h.rows);
    for (int r = 0; r < h.rows; ++r) {
        bool parity = false;
        for (int c : h.row_cols[r]) parity ^= word.get(c);
        s.set(r, parity);
    }
    return s;
}

}  // namespace arg
