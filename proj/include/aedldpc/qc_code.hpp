#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aedldpc/gf2.hpp"

namespace aedldpc {

/// Exponent (base) matrix of a quasi-cyclic code. Each cell holds the shift
/// offsets of the circulants summed in that Z x Z block; an empty cell is an
/// all-zero block.
struct BaseMatrix {
    std::size_t block_rows = 0;
    std::size_t block_cols = 0;
    std::size_t lift_factor = 0;  ///< Z declared in the data file
    std::vector<std::vector<std::vector<std::uint32_t>>> cells;

    const std::vector<std::uint32_t>& cell(std::size_t r, std::size_t c) const {
        return cells[r][c];
    }
};

/// Text format: first line "m n Z", then m lines of n cells, where a cell is
/// "-" (all-zero block) or comma-separated shift offsets. '#' starts a
/// comment line.
BaseMatrix parse_base_matrix(std::istream& in);
BaseMatrix parse_base_matrix(const std::string& text);
BaseMatrix load_base_matrix(const std::filesystem::path& file);

/// Expands the base matrix by Z. Circulant orientation is fixed as right
/// shift: offset s contributes entry (r, (r + s) mod Z) of its block for
/// every r in [0, Z).
BinaryMatrix lift(const BaseMatrix& base, std::size_t z);

/// Extracts the offset lists back out of a lifted matrix (test/debug aid).
/// Throws if the matrix is not block-circulant with the given Z.
BaseMatrix extract_base(const BinaryMatrix& h, std::size_t z);

/// Systematic encoding data derived from H by Gaussian elimination.
/// info_cols lists the codeword positions that carry information bits
/// (the recorded systematic-position mapping); pivot_cols the positions
/// computed as parity.
struct SystematicEncoder {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t r = 0;      ///< rank of H
    std::size_t words = 0;  ///< packed words per parity row
    std::vector<std::uint32_t> pivot_cols;
    std::vector<std::uint32_t> info_cols;
    std::vector<std::uint64_t> parity;  ///< r rows of k bits, packed

    BitVector encode(const BitVector& info) const;
};

SystematicEncoder build_encoder(const BinaryMatrix& h);

struct QcCode {
    std::string name;
    BaseMatrix base;
    std::size_t z = 0;
    BinaryMatrix h;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;  ///< N - rank(H)
    SystematicEncoder encoder;

    double rate() const { return static_cast<double>(k) / static_cast<double>(n); }
};

QcCode make_qc_code(std::string name, const BaseMatrix& base, std::size_t z);

BitVector encode(const QcCode& code, const BitVector& info);

enum class StandardCode {
    ccsds_128_64,
    ccsds_256_128,
    nr5g_132_66,
    nr5g_264_132,
    wifi_648_540,
};

const char* to_string(StandardCode code);
std::optional<StandardCode> standard_code_from_string(std::string_view name);
std::vector<StandardCode> all_standard_codes();

/// Directory holding the base-matrix data files. The AEDLDPC_DATA_DIR
/// environment variable overrides the compiled-in default.
std::filesystem::path default_data_dir();

/// Loads a standard code and verifies (N, K, Z) against the expected
/// parameters; throws on mismatch (guards against a wrong data file).
QcCode load_standard_code(StandardCode code);
QcCode load_standard_code(StandardCode code, const std::filesystem::path& data_dir);

}  // namespace aedldpc
