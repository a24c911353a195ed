#pragma once

// Bit-packed linear algebra over GF(2).
//
// Vectors and matrix rows store coordinate j at bit (j % 64) of word (j / 64).
// Elimination is word-parallel XOR over whole rows.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toribord {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class GF2Vec {
public:
    GF2Vec() = default;
    explicit GF2Vec(std::size_t n) : n_(n), words_(words_for(n), 0) {}

    /// Builds a vector from 0/1 coordinates.
    static GF2Vec from_bits(std::initializer_list<int> bits);
    static GF2Vec from_bits(const std::vector<int>& bits);
    /// The j-th standard basis vector of length n.
    static GF2Vec unit(std::size_t n, std::size_t j);
    /// Coordinates taken from the low n bits of `mask` (bit j = coordinate j).
    static GF2Vec from_mask(std::size_t n, Word mask);

    std::size_t size() const noexcept { return n_; }
    bool get(std::size_t j) const { return (words_[j / kWordBits] >> (j % kWordBits)) & 1u; }
    void set(std::size_t j, bool value);
    void flip(std::size_t j) { words_[j / kWordBits] ^= Word{1} << (j % kWordBits); }

    bool is_zero() const noexcept;
    std::size_t popcount() const noexcept;

    GF2Vec& operator^=(const GF2Vec& other);
    friend GF2Vec operator^(GF2Vec a, const GF2Vec& b) { return a ^= b; }

    /// Inner product <a, b> over GF(2).
    friend bool dot(const GF2Vec& a, const GF2Vec& b);

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }
    /// Low word; the whole vector when n <= 64.
    Word mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

    friend bool operator==(const GF2Vec&, const GF2Vec&) = default;
    /// Lexicographic order on (c_1, ..., c_n) with 0 < 1; vectors of different
    /// length order by length first.
    friend bool operator<(const GF2Vec& a, const GF2Vec& b);

private:
    std::size_t n_ = 0;
    std::vector<Word> words_;
};

class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

    static GF2Matrix identity(std::size_t n);
    /// Matrix whose j-th column is `columns[j]`; all columns must have length `rows`.
    static GF2Matrix from_columns(std::size_t rows, const std::vector<GF2Vec>& columns);
    static GF2Matrix from_rows(const std::vector<GF2Vec>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t i, std::size_t j) const { return (row(i)[j / kWordBits] >> (j % kWordBits)) & 1u; }
    void set(std::size_t i, std::size_t j, bool value);
    void flip(std::size_t i, std::size_t j) { row(i)[j / kWordBits] ^= Word{1} << (j % kWordBits); }

    std::span<Word> row(std::size_t i) { return {data_.data() + i * stride_, stride_}; }
    std::span<const Word> row(std::size_t i) const { return {data_.data() + i * stride_, stride_}; }
    GF2Vec row_vec(std::size_t i) const;
    GF2Vec col_vec(std::size_t j) const;

    GF2Matrix transpose() const;
    GF2Vec operator*(const GF2Vec& x) const;
    GF2Matrix operator*(const GF2Matrix& other) const;

    friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

/// Called with (pivots found so far, upper bound on pivots) during long eliminations.
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

std::size_t gf2_rank(GF2Matrix m, const ProgressFn& progress = {});

/// Basis of {x : M x = 0}; one vector per free column of the reduced echelon form.
std::vector<GF2Vec> gf2_kernel_basis(const GF2Matrix& m);

/// Some x with M x = b, or nullopt when the system is inconsistent.
/// Throws DimensionMismatch when b.size() != M.rows().
std::optional<GF2Vec> gf2_solve(const GF2Matrix& m, const GF2Vec& b);

/// Inverse over GF(2); throws SingularMatrix.
GF2Matrix gf2_inverse(const GF2Matrix& m);

/// Columns s_j of the result satisfy <s_j, b_k> = delta_jk for the columns b_k
/// of `basis`, i.e. the result is the inverse-transpose. Throws SingularMatrix.
GF2Matrix gf2_dual_basis(const GF2Matrix& basis);

/// True iff the vectors are linearly independent (the empty set is).
bool is_independent_gf2(std::span<const GF2Vec> vectors);

/// Comma separated coordinates, e.g. "1,0,1".
std::string to_string(const GF2Vec& v);

} // namespace toribord
