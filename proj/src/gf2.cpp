#include "toribord/gf2.hpp"

#include <algorithm>
#include <bit>

#include "toribord/errors.hpp"

namespace toribord {

namespace {

inline void xor_into(std::span<Word> dst, std::span<const Word> src, std::size_t from_word)
{
    for (std::size_t w = from_word; w < dst.size(); ++w)
        dst[w] ^= src[w];
}

inline void swap_rows(GF2Matrix& m, std::size_t a, std::size_t b)
{
    if (a == b) return;
    auto ra = m.row(a);
    auto rb = m.row(b);
    std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

// Reduced row echelon form in place; returns the pivot column of each pivot row.
// With `full` false only entries below the pivots are cleared.
std::vector<std::size_t> echelonize(GF2Matrix& m, bool full, const ProgressFn& progress = {})
{
    std::vector<std::size_t> pivots;
    const std::size_t bound = std::min(m.rows(), m.cols());
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const std::size_t w = c / kWordBits;
        const Word bit = Word{1} << (c % kWordBits);
        std::size_t p = r;
        while (p < m.rows() && !(m.row(p)[w] & bit)) ++p;
        if (p == m.rows()) continue;
        swap_rows(m, r, p);
        auto prow = m.row(r);
        for (std::size_t i = full ? 0 : r + 1; i < m.rows(); ++i) {
            if (i == r) continue;
            auto ri = m.row(i);
            if (ri[w] & bit) xor_into(ri, prow, w);
        }
        pivots.push_back(c);
        ++r;
        if (progress && (r % 1024 == 0)) progress(r, bound);
    }
    if (progress) progress(r, bound);
    return pivots;
}

} // namespace

// ---------------------------------------------------------------- GF2Vec

GF2Vec GF2Vec::from_bits(std::initializer_list<int> bits)
{
    return from_bits(std::vector<int>(bits));
}

GF2Vec GF2Vec::from_bits(const std::vector<int>& bits)
{
    GF2Vec v(bits.size());
    for (std::size_t j = 0; j < bits.size(); ++j)
        if (bits[j] & 1) v.set(j, true);
    return v;
}

GF2Vec GF2Vec::unit(std::size_t n, std::size_t j)
{
    GF2Vec v(n);
    v.set(j, true);
    return v;
}

GF2Vec GF2Vec::from_mask(std::size_t n, Word mask)
{
    GF2Vec v(n);
    if (n == 0) return v;
    if (n < kWordBits) mask &= (Word{1} << n) - 1;
    v.words_[0] = mask;
    return v;
}

void GF2Vec::set(std::size_t j, bool value)
{
    const Word bit = Word{1} << (j % kWordBits);
    if (value)
        words_[j / kWordBits] |= bit;
    else
        words_[j / kWordBits] &= ~bit;
}

bool GF2Vec::is_zero() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t GF2Vec::popcount() const noexcept
{
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

GF2Vec& GF2Vec::operator^=(const GF2Vec& other)
{
    if (other.n_ != n_) throw DimensionMismatch("GF2Vec xor of lengths " + std::to_string(n_) + " and " + std::to_string(other.n_));
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

bool dot(const GF2Vec& a, const GF2Vec& b)
{
    if (a.n_ != b.n_) throw DimensionMismatch("GF2Vec dot of lengths " + std::to_string(a.n_) + " and " + std::to_string(b.n_));
    Word acc = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w) acc ^= a.words_[w] & b.words_[w];
    return std::popcount(acc) & 1;
}

bool operator<(const GF2Vec& a, const GF2Vec& b)
{
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        const Word diff = a.words_[w] ^ b.words_[w];
        if (diff) {
            const Word lowest = diff & (~diff + 1);
            return (b.words_[w] & lowest) != 0;
        }
    }
    return false;
}

std::string to_string(const GF2Vec& v)
{
    std::string out;
    out.reserve(2 * v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) out += ',';
        out += v.get(j) ? '1' : '0';
    }
    return out;
}

// ------------------------------------------------------------- GF2Matrix

GF2Matrix GF2Matrix::identity(std::size_t n)
{
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

GF2Matrix GF2Matrix::from_columns(std::size_t rows, const std::vector<GF2Vec>& columns)
{
    GF2Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw DimensionMismatch("column " + std::to_string(j) + " has length " + std::to_string(columns[j].size()));
        for (std::size_t i = 0; i < rows; ++i)
            if (columns[j].get(i)) m.set(i, j, true);
    }
    return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<GF2Vec>& rows, std::size_t cols)
{
    GF2Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DimensionMismatch("row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()));
        std::copy(rows[i].words().begin(), rows[i].words().end(), m.row(i).begin());
    }
    return m;
}

void GF2Matrix::set(std::size_t i, std::size_t j, bool value)
{
    const Word bit = Word{1} << (j % kWordBits);
    if (value)
        row(i)[j / kWordBits] |= bit;
    else
        row(i)[j / kWordBits] &= ~bit;
}

GF2Vec GF2Matrix::row_vec(std::size_t i) const
{
    GF2Vec v(cols_);
    std::copy(row(i).begin(), row(i).end(), v.words().begin());
    return v;
}

GF2Vec GF2Matrix::col_vec(std::size_t j) const
{
    GF2Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (get(i, j)) v.set(i, true);
    return v;
}

GF2Matrix GF2Matrix::transpose() const
{
    GF2Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        auto r = row(i);
        for (std::size_t w = 0; w < stride_; ++w) {
            Word bits = r[w];
            while (bits) {
                const auto b = static_cast<std::size_t>(std::countr_zero(bits));
                t.set(w * kWordBits + b, i, true);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

GF2Vec GF2Matrix::operator*(const GF2Vec& x) const
{
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector product with " + std::to_string(cols_) + " columns and vector of length " + std::to_string(x.size()));
    GF2Vec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Word acc = 0;
        auto r = row(i);
        for (std::size_t w = 0; w < stride_; ++w) acc ^= r[w] & x.words()[w];
        if (std::popcount(acc) & 1) y.set(i, true);
    }
    return y;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& other) const
{
    if (other.rows_ != cols_) throw DimensionMismatch("matrix product inner dimensions differ");
    GF2Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        auto dst = out.row(i);
        for (std::size_t k = 0; k < cols_; ++k)
            if (get(i, k)) xor_into(dst, other.row(k), 0);
    }
    return out;
}

// ------------------------------------------------------------ operations

std::size_t gf2_rank(GF2Matrix m, const ProgressFn& progress)
{
    return echelonize(m, false, progress).size();
}

std::vector<GF2Vec> gf2_kernel_basis(const GF2Matrix& m)
{
    GF2Matrix r = m;
    const auto pivots = echelonize(r, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<GF2Vec> basis;
    basis.reserve(m.cols() - pivots.size());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        GF2Vec x(m.cols());
        x.set(f, true);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (r.get(k, f)) x.set(pivots[k], true);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<GF2Vec> gf2_solve(const GF2Matrix& m, const GF2Vec& b)
{
    if (b.size() != m.rows())
        throw DimensionMismatch("right-hand side has length " + std::to_string(b.size()) + ", matrix has " + std::to_string(m.rows()) + " rows");
    // Augment with b as an extra column.
    GF2Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto src = m.row(i);
        std::copy(src.begin(), src.end(), aug.row(i).begin());
        if (b.get(i)) aug.set(i, m.cols(), true);
    }
    const auto pivots = echelonize(aug, true);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    GF2Vec x(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        if (aug.get(k, m.cols())) x.set(pivots[k], true);
    return x;
}

GF2Matrix gf2_inverse(const GF2Matrix& m)
{
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    GF2Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (m.get(i, j)) aug.set(i, j, true);
        aug.set(i, n + i, true);
    }
    const auto pivots = echelonize(aug, true);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n))
        throw SingularMatrix("matrix of size " + std::to_string(n) + " has rank < " + std::to_string(n));
    GF2Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (aug.get(i, n + j)) inv.set(i, j, true);
    return inv;
}

GF2Matrix gf2_dual_basis(const GF2Matrix& basis)
{
    return gf2_inverse(basis).transpose();
}

bool is_independent_gf2(std::span<const GF2Vec> vectors)
{
    if (vectors.empty()) return true;
    const std::size_t n = vectors.front().size();
    if (vectors.size() > n) return false;
    return gf2_rank(GF2Matrix::from_rows({vectors.begin(), vectors.end()}, n)) == vectors.size();
}

} // namespace toribord
