#include "aedldpc/qc_code.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace aedldpc {

namespace {

[[noreturn]] void base_fail(std::size_t line, const std::string& what) {
    throw std::runtime_error("base matrix parse error at line " + std::to_string(line) +
                             ": " + what);
}

}  // namespace

BaseMatrix parse_base_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_content_line = [&]() -> std::optional<std::string> {
        while (std::getline(in, line)) {
            ++line_no;
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            return line;
        }
        return std::nullopt;
    };

    auto header = next_content_line();
    if (!header) base_fail(1, "empty input");
    std::istringstream hs(*header);
    long long m = 0, n = 0, z = 0;
    if (!(hs >> m >> n >> z) || m <= 0 || n <= 0 || z <= 0)
        base_fail(line_no, "expected header \"m n Z\"");

    BaseMatrix base;
    base.block_rows = static_cast<std::size_t>(m);
    base.block_cols = static_cast<std::size_t>(n);
    base.lift_factor = static_cast<std::size_t>(z);
    base.cells.assign(base.block_rows, {});

    for (std::size_t r = 0; r < base.block_rows; ++r) {
        auto row_line = next_content_line();
        if (!row_line) base_fail(line_no + 1, "missing matrix row");
        std::istringstream rs(*row_line);
        std::string cell;
        auto& row = base.cells[r];
        while (rs >> cell) {
            if (cell == "-") {
                row.emplace_back();
                continue;
            }
            std::vector<std::uint32_t> offsets;
            std::istringstream cs(cell);
            std::string tok;
            while (std::getline(cs, tok, ',')) {
                if (tok.empty()) base_fail(line_no, "malformed cell \"" + cell + "\"");
                std::size_t used = 0;
                long long v = 0;
                try {
                    v = std::stoll(tok, &used);
                } catch (const std::exception&) {
                    base_fail(line_no, "malformed cell \"" + cell + "\"");
                }
                if (used != tok.size() || v < 0) base_fail(line_no, "malformed cell \"" + cell + "\"");
                if (v >= z) base_fail(line_no, "offset " + tok + " not below Z");
                offsets.push_back(static_cast<std::uint32_t>(v));
            }
            std::sort(offsets.begin(), offsets.end());
            if (std::adjacent_find(offsets.begin(), offsets.end()) != offsets.end())
                base_fail(line_no, "duplicate offset in cell \"" + cell + "\"");
            row.push_back(std::move(offsets));
        }
        if (row.size() != base.block_cols)
            base_fail(line_no, "expected " + std::to_string(base.block_cols) + " cells, found " +
                                   std::to_string(row.size()));
    }
    return base;
}

BaseMatrix parse_base_matrix(const std::string& text) {
    std::istringstream ss(text);
    return parse_base_matrix(ss);
}

BaseMatrix load_base_matrix(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open base matrix file " + file.string());
    return parse_base_matrix(in);
}

BinaryMatrix lift(const BaseMatrix& base, std::size_t z) {
    if (z == 0) throw std::invalid_argument("lift: Z must be positive");
    std::vector<std::vector<std::uint32_t>> rows(base.block_rows * z);
    for (std::size_t br = 0; br < base.block_rows; ++br) {
        for (std::size_t bc = 0; bc < base.block_cols; ++bc) {
            for (auto offset : base.cell(br, bc)) {
                if (offset >= z) throw std::invalid_argument("lift: offset not below Z");
                for (std::size_t r = 0; r < z; ++r) {
                    const std::size_t col = bc * z + (r + offset) % z;
                    rows[br * z + r].push_back(static_cast<std::uint32_t>(col));
                }
            }
        }
    }
    return BinaryMatrix::from_rows(base.block_cols * z, std::move(rows));
}

BaseMatrix extract_base(const BinaryMatrix& h, std::size_t z) {
    if (z == 0 || h.rows() % z != 0 || h.cols() % z != 0)
        throw std::invalid_argument("extract_base: dimensions not divisible by Z");
    BaseMatrix base;
    base.block_rows = h.rows() / z;
    base.block_cols = h.cols() / z;
    base.lift_factor = z;
    base.cells.assign(base.block_rows,
                      std::vector<std::vector<std::uint32_t>>(base.block_cols));
    for (std::size_t br = 0; br < base.block_rows; ++br) {
        // offsets read off the first row of each block
        for (auto c : h.row(br * z))
            base.cells[br][c / z].push_back(static_cast<std::uint32_t>(c % z));
        for (auto& cell : base.cells[br]) std::sort(cell.begin(), cell.end());
    }
    if (lift(base, z) != h)
        throw std::invalid_argument("extract_base: matrix is not block-circulant for this Z");
    return base;
}

BitVector SystematicEncoder::encode(const BitVector& info) const {
    if (info.size() != k)
        throw std::invalid_argument("encode: info length must equal K");
    std::vector<std::uint64_t> packed(words, 0);
    for (std::size_t i = 0; i < k; ++i)
        if (info[i]) packed[i >> 6] |= std::uint64_t{1} << (i & 63);

    BitVector cw(n, 0);
    for (std::size_t i = 0; i < k; ++i) cw[info_cols[i]] = info[i];
    for (std::size_t row = 0; row < r; ++row) {
        const std::uint64_t* p = parity.data() + row * words;
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words; ++w) acc ^= p[w] & packed[w];
        cw[pivot_cols[row]] = static_cast<std::uint8_t>(std::popcount(acc) & 1);
    }
    return cw;
}

SystematicEncoder build_encoder(const BinaryMatrix& h) {
    detail::PackedMatrix p(h);
    // Row-reduce with pivot columns chosen left to right; non-pivot columns
    // become the systematic positions.
    std::size_t r = 0;
    std::vector<std::uint32_t> pivot_cols;
    std::vector<bool> is_pivot(h.cols(), false);
    for (std::size_t c = 0; c < h.cols() && r < p.rows; ++c) {
        std::size_t pivot = r;
        while (pivot < p.rows && !p.get(pivot, c)) ++pivot;
        if (pivot == p.rows) continue;
        if (pivot != r)
            std::swap_ranges(p.row_ptr(pivot), p.row_ptr(pivot) + p.words, p.row_ptr(r));
        for (std::size_t j = 0; j < p.rows; ++j)
            if (j != r && p.get(j, c)) p.xor_rows(r, j);
        pivot_cols.push_back(static_cast<std::uint32_t>(c));
        is_pivot[c] = true;
        ++r;
    }

    SystematicEncoder enc;
    enc.n = h.cols();
    enc.r = r;
    enc.k = h.cols() - r;
    enc.words = (enc.k + 63) / 64;
    enc.pivot_cols = std::move(pivot_cols);
    for (std::size_t c = 0; c < h.cols(); ++c)
        if (!is_pivot[c]) enc.info_cols.push_back(static_cast<std::uint32_t>(c));

    // Parity row i restricted to the systematic columns: with the reduced
    // form, c[pivot_cols[i]] = sum over info columns j in row i of c[j].
    enc.parity.assign(enc.r * enc.words, 0);
    for (std::size_t row = 0; row < enc.r; ++row) {
        std::uint64_t* dst = enc.parity.data() + row * enc.words;
        for (std::size_t j = 0; j < enc.k; ++j)
            if (p.get(row, enc.info_cols[j])) dst[j >> 6] |= std::uint64_t{1} << (j & 63);
    }
    return enc;
}

QcCode make_qc_code(std::string name, const BaseMatrix& base, std::size_t z) {
    QcCode code;
    code.name = std::move(name);
    code.base = base;
    code.z = z;
    code.h = lift(base, z);
    code.n = code.h.cols();
    code.m = code.h.rows();
    code.encoder = build_encoder(code.h);
    code.k = code.encoder.k;  // K = N - rank(H)
    return code;
}

BitVector encode(const QcCode& code, const BitVector& info) {
    return code.encoder.encode(info);
}

namespace {

struct StandardCodeInfo {
    StandardCode code;
    const char* name;
    const char* file;
    std::size_t n, k, z;
};

constexpr StandardCodeInfo kStandardCodes[] = {
    {StandardCode::ccsds_128_64, "ccsds_128_64", "ccsds_128_64.txt", 128, 64, 16},
    {StandardCode::ccsds_256_128, "ccsds_256_128", "ccsds_256_128.txt", 256, 128, 32},
    {StandardCode::nr5g_132_66, "nr5g_132_66", "nr5g_132_66.txt", 132, 66, 11},
    {StandardCode::nr5g_264_132, "nr5g_264_132", "nr5g_264_132.txt", 264, 132, 22},
    {StandardCode::wifi_648_540, "wifi_648_540", "wifi_648_540.txt", 648, 540, 27},
};

const StandardCodeInfo& info_for(StandardCode code) {
    for (const auto& info : kStandardCodes)
        if (info.code == code) return info;
    throw std::logic_error("unknown standard code");
}

}  // namespace

const char* to_string(StandardCode code) { return info_for(code).name; }

std::optional<StandardCode> standard_code_from_string(std::string_view name) {
    for (const auto& info : kStandardCodes)
        if (name == info.name) return info.code;
    return std::nullopt;
}

std::vector<StandardCode> all_standard_codes() {
    std::vector<StandardCode> out;
    for (const auto& info : kStandardCodes) out.push_back(info.code);
    return out;
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("AEDLDPC_DATA_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path(AEDLDPC_DATA_DIR);
}

QcCode load_standard_code(StandardCode code) {
    return load_standard_code(code, default_data_dir());
}

QcCode load_standard_code(StandardCode code, const std::filesystem::path& data_dir) {
    const auto& info = info_for(code);
    BaseMatrix base = load_base_matrix(data_dir / info.file);
    if (base.lift_factor != info.z)
        throw std::runtime_error(std::string("standard code ") + info.name +
                                 ": data file declares Z=" + std::to_string(base.lift_factor) +
                                 ", expected " + std::to_string(info.z));
    QcCode qc = make_qc_code(info.name, base, base.lift_factor);
    if (qc.n != info.n || qc.k != info.k)
        throw std::runtime_error(std::string("standard code ") + info.name + ": lifted to (N=" +
                                 std::to_string(qc.n) + ", K=" + std::to_string(qc.k) +
                                 "), expected (N=" + std::to_string(info.n) +
                                 ", K=" + std::to_string(info.k) + ")");
    return qc;
}

}  // namespace aedldpc
