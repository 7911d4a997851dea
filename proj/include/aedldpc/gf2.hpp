#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "aedldpc/permutation.hpp"

namespace aedldpc {

using BitVector = std::vector<std::uint8_t>;

/// Sparse binary matrix over GF(2), stored as per-row sorted column-index
/// lists. Canonical form (sorted, duplicate-free rows) makes operator==
/// structural equality. Immutable after construction; all mutating
/// operations return new values.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), support_(rows) {}

    /// Takes ownership of row lists; sorts them and rejects out-of-range or
    /// duplicate column indices.
    static BinaryMatrix from_rows(std::size_t cols,
                                  std::vector<std::vector<std::uint32_t>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<std::uint32_t>& row(std::size_t r) const { return support_[r]; }
    const std::vector<std::vector<std::uint32_t>>& row_support() const { return support_; }
    std::size_t num_entries() const;
    bool get(std::size_t r, std::size_t c) const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<std::uint32_t>> support_;
};

/// GF(2) row rank, computed by Gaussian elimination on a bit-packed copy.
std::size_t rank(const BinaryMatrix& m);

/// Returns a copy with row dst := dst XOR src. Row space is unchanged.
BinaryMatrix row_add(const BinaryMatrix& m, std::size_t src, std::size_t dst);

BinaryMatrix append_row(const BinaryMatrix& m, const BitVector& row);
BinaryMatrix remove_row(const BinaryMatrix& m, std::size_t idx);

/// Vertical concatenation [a; b]; column counts must match.
BinaryMatrix vstack(const BinaryMatrix& a, const BinaryMatrix& b);

/// Component j = XOR of v over row j's support. All-zero iff v satisfies
/// every check.
BitVector syndrome(const BinaryMatrix& m, const BitVector& v);
bool syndrome_is_zero(const BinaryMatrix& m, const BitVector& v);

/// Column i of the result is column p(i) of the input. With the apply()
/// convention this is the matrix H' such that decoding y on H' is the same
/// as decoding apply(p, y) on H.
BinaryMatrix permute_columns(const BinaryMatrix& m, const Permutation& p);

/// True iff the row space of permute_columns(H, p) equals the row space of
/// H, tested as rank(H) == rank([H; permute_columns(H, p)]).
bool is_automorphism(const BinaryMatrix& h, const Permutation& p);

/// Thrown by from_alist; the message names the offending 1-based line.
class AlistParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads the alist interchange format: "N M", max column/row degrees,
/// N column degrees, M row degrees, N column neighbor lines, M row neighbor
/// lines. Indices are 1-based; zeros in neighbor lines are padding and are
/// ignored. Column and row lists must describe the same matrix.
BinaryMatrix from_alist(std::istream& in);
BinaryMatrix from_alist(const std::string& text);

/// Canonical alist text (no padding, sorted indices, trailing newline).
std::string to_alist(const BinaryMatrix& m);

namespace detail {

/// Dense bit-packed view used for elimination-based algorithms (64 columns
/// per word).
struct PackedMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;

    explicit PackedMatrix(const BinaryMatrix& m);
    PackedMatrix(std::size_t r, std::size_t c);

    std::uint64_t* row_ptr(std::size_t r) { return bits.data() + r * words; }
    const std::uint64_t* row_ptr(std::size_t r) const { return bits.data() + r * words; }
    bool get(std::size_t r, std::size_t c) const {
        return (row_ptr(r)[c >> 6] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c) { row_ptr(r)[c >> 6] |= std::uint64_t{1} << (c & 63); }
    void xor_rows(std::size_t src, std::size_t dst);
    std::size_t eliminate();  ///< in-place row reduction; returns rank
};

}  // namespace detail

}  // namespace aedldpc
