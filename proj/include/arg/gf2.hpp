// Parity-check extraction, packed-bit GF(2) elimination, systematic
// generator derivation, encoding and syndromes.
#pragma once

#include <cstdint>
#include <vector>

#include "arg/graph.hpp"

namespace arg {

class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(int n) : size_(n), words_((n + 63) / 64, 0) {}

    int size() const { return size_; }
    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool is_zero() const;
    int popcount() const;
    void xor_with(const BitVector& other);

    friend bool operator==(const BitVector&, const BitVector&) = default;

  private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-sparse binary matrix; column indices 0-based, strictly increasing.
struct SparseMatrixGF2 {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> row_cols;

    long nonzeros() const;
    // Throws when an index list is out of range, unsorted or duplicated.
    void validate() const;
};

// H(g): row i has a 1 in column j exactly when left vertex j+1 is adjacent
// to right vertex i+1.
SparseMatrixGF2 parity_matrix(const BipartiteGraph& g);

int rank_gf2(const SparseMatrixGF2& h);

// k codeword-basis rows in original column order; message_positions lists the
// k columns that carry the message bits verbatim (the recorded permutation).
struct GeneratorMatrix {
    int k = 0;
    int n = 0;
    std::vector<int> message_positions;
    std::vector<BitVector> rows;
};

GeneratorMatrix systematic_generator(const SparseMatrixGF2& h);

BitVector encode(const GeneratorMatrix& gen, const BitVector& message);

BitVector syndrome(const SparseMatrixGF2& h, const BitVector& word);

}  // namespace arg
