#include "aedldpc/gf2.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace aedldpc {

BinaryMatrix BinaryMatrix::from_rows(std::size_t cols,
                                     std::vector<std::vector<std::uint32_t>> rows) {
    BinaryMatrix m;
    m.rows_ = rows.size();
    m.cols_ = cols;
    for (auto& r : rows) {
        std::sort(r.begin(), r.end());
        if (!r.empty() && r.back() >= cols)
            throw std::invalid_argument("BinaryMatrix: column index out of range");
        if (std::adjacent_find(r.begin(), r.end()) != r.end())
            throw std::invalid_argument("BinaryMatrix: duplicate column index in row");
    }
    m.support_ = std::move(rows);
    return m;
}

std::size_t BinaryMatrix::num_entries() const {
    std::size_t n = 0;
    for (const auto& r : support_) n += r.size();
    return n;
}

bool BinaryMatrix::get(std::size_t r, std::size_t c) const {
    const auto& row = support_[r];
    return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(c));
}

namespace detail {

PackedMatrix::PackedMatrix(std::size_t r, std::size_t c)
    : rows(r), cols(c), words((c + 63) / 64), bits(r * words, 0) {}

PackedMatrix::PackedMatrix(const BinaryMatrix& m) : PackedMatrix(m.rows(), m.cols()) {
    for (std::size_t r = 0; r < rows; ++r)
        for (auto c : m.row(r)) set(r, c);
}

void PackedMatrix::xor_rows(std::size_t src, std::size_t dst) {
    auto* s = row_ptr(src);
    auto* d = row_ptr(dst);
    for (std::size_t w = 0; w < words; ++w) d[w] ^= s[w];
}

std::size_t PackedMatrix::eliminate() {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && !get(pivot, c)) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            std::swap_ranges(row_ptr(pivot), row_ptr(pivot) + words, row_ptr(r));
        for (std::size_t j = 0; j < rows; ++j)
            if (j != r && get(j, c)) xor_rows(r, j);
        ++r;
    }
    return r;
}

}  // namespace detail

std::size_t rank(const BinaryMatrix& m) {
    detail::PackedMatrix p(m);
    return p.eliminate();
}

BinaryMatrix row_add(const BinaryMatrix& m, std::size_t src, std::size_t dst) {
    if (src >= m.rows() || dst >= m.rows())
        throw std::out_of_range("row_add: row index out of range");
    if (src == dst) throw std::invalid_argument("row_add: src and dst must differ");
    auto rows = m.row_support();
    // symmetric difference = GF(2) sum of the two sparse rows
    std::vector<std::uint32_t> out;
    std::set_symmetric_difference(rows[dst].begin(), rows[dst].end(),
                                  rows[src].begin(), rows[src].end(),
                                  std::back_inserter(out));
    rows[dst] = std::move(out);
    return BinaryMatrix::from_rows(m.cols(), std::move(rows));
}

BinaryMatrix append_row(const BinaryMatrix& m, const BitVector& row) {
    if (row.size() != m.cols())
        throw std::invalid_argument("append_row: row length must equal column count");
    auto rows = m.row_support();
    std::vector<std::uint32_t> support;
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c]) support.push_back(static_cast<std::uint32_t>(c));
    rows.push_back(std::move(support));
    return BinaryMatrix::from_rows(m.cols(), std::move(rows));
}

BinaryMatrix remove_row(const BinaryMatrix& m, std::size_t idx) {
    if (idx >= m.rows()) throw std::out_of_range("remove_row: row index out of range");
    auto rows = m.row_support();
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(idx));
    return BinaryMatrix::from_rows(m.cols(), std::move(rows));
}

BinaryMatrix vstack(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
    auto rows = a.row_support();
    rows.insert(rows.end(), b.row_support().begin(), b.row_support().end());
    return BinaryMatrix::from_rows(a.cols(), std::move(rows));
}

BitVector syndrome(const BinaryMatrix& m, const BitVector& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("syndrome: vector length must equal column count");
    BitVector s(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint8_t acc = 0;
        for (auto c : m.row(r)) acc ^= v[c];
        s[r] = acc;
    }
    return s;
}

bool syndrome_is_zero(const BinaryMatrix& m, const BitVector& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("syndrome: vector length must equal column count");
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint8_t acc = 0;
        for (auto c : m.row(r)) acc ^= v[c];
        if (acc) return false;
    }
    return true;
}

BinaryMatrix permute_columns(const BinaryMatrix& m, const Permutation& p) {
    if (p.size() != m.cols())
        throw std::invalid_argument("permute_columns: permutation size mismatch");
    // result[:, i] = input[:, p(i)], so an entry in column c lands in
    // column p^-1(c).
    std::vector<std::uint32_t> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p(i)] = static_cast<std::uint32_t>(i);
    std::vector<std::vector<std::uint32_t>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows[r].reserve(m.row(r).size());
        for (auto c : m.row(r)) rows[r].push_back(inv[c]);
    }
    return BinaryMatrix::from_rows(m.cols(), std::move(rows));
}

bool is_automorphism(const BinaryMatrix& h, const Permutation& p) {
    if (p.size() != h.cols())
        throw std::invalid_argument("is_automorphism: permutation size mismatch");
    return rank(h) == rank(vstack(h, permute_columns(h, p)));
}

namespace {

[[noreturn]] void alist_fail(std::size_t line, const std::string& what) {
    throw AlistParseError("alist parse error at line " + std::to_string(line) + ": " + what);
}

std::vector<long long> parse_int_line(const std::string& text, std::size_t line_no) {
    std::istringstream ss(text);
    std::vector<long long> out;
    long long v;
    while (ss >> v) out.push_back(v);
    if (!ss.eof()) alist_fail(line_no, "non-integer token");
    return out;
}

}  // namespace

BinaryMatrix from_alist(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);

    std::size_t next = 0;
    auto need_line = [&](const char* what) -> std::vector<long long> {
        if (next >= lines.size())
            alist_fail(lines.size() + 1, std::string("unexpected end of input, expected ") + what);
        auto vals = parse_int_line(lines[next], next + 1);
        ++next;
        return vals;
    };

    auto header = need_line("\"N M\"");
    if (header.size() != 2 || header[0] <= 0 || header[1] <= 0)
        alist_fail(1, "expected \"N M\" with positive dimensions");
    const auto n = static_cast<std::size_t>(header[0]);
    const auto m = static_cast<std::size_t>(header[1]);

    auto maxdeg = need_line("max degrees");
    if (maxdeg.size() != 2 || maxdeg[0] < 0 || maxdeg[1] < 0)
        alist_fail(2, "expected max column and row degree");

    auto col_deg = need_line("column degrees");
    if (col_deg.size() != n) alist_fail(3, "expected one degree per column");
    auto row_deg = need_line("row degrees");
    if (row_deg.size() != m) alist_fail(4, "expected one degree per row");

    auto read_lists = [&](std::size_t count, const std::vector<long long>& degrees,
                          std::size_t index_bound, const char* what) {
        std::vector<std::vector<std::uint32_t>> lists(count);
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t line_no = next + 1;
            auto vals = need_line(what);
            auto& lst = lists[i];
            for (auto v : vals) {
                if (v == 0) continue;  // zero entries are padding
                if (v < 0 || static_cast<std::size_t>(v) > index_bound)
                    alist_fail(line_no, "index out of range");
                lst.push_back(static_cast<std::uint32_t>(v - 1));
            }
            if (degrees[i] < 0 || lst.size() != static_cast<std::size_t>(degrees[i]))
                alist_fail(line_no, "entry count does not match declared degree");
            std::sort(lst.begin(), lst.end());
            if (std::adjacent_find(lst.begin(), lst.end()) != lst.end())
                alist_fail(line_no, "duplicate index");
        }
        return lists;
    };

    const std::size_t col_lines_start = next;
    auto col_lists = read_lists(n, col_deg, m, "column neighbor list");
    auto row_lists = read_lists(m, row_deg, n, "row neighbor list");

    // Cross-check: the row lists must describe the same set of entries as
    // the column lists.
    std::vector<std::vector<std::uint32_t>> derived_cols(n);
    for (std::size_t r = 0; r < m; ++r)
        for (auto c : row_lists[r]) derived_cols[c].push_back(static_cast<std::uint32_t>(r));
    for (std::size_t c = 0; c < n; ++c) {
        if (derived_cols[c] != col_lists[c])
            alist_fail(col_lines_start + 1 + c, "column list inconsistent with row lists");
    }

    return BinaryMatrix::from_rows(
        n, std::vector<std::vector<std::uint32_t>>(row_lists.begin(), row_lists.end()));
}

BinaryMatrix from_alist(const std::string& text) {
    std::istringstream ss(text);
    return from_alist(ss);
}

std::string to_alist(const BinaryMatrix& m) {
    const std::size_t n = m.cols();
    std::vector<std::vector<std::uint32_t>> cols(n);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (auto c : m.row(r)) cols[c].push_back(static_cast<std::uint32_t>(r));

    std::size_t max_col = 0, max_row = 0;
    for (const auto& c : cols) max_col = std::max(max_col, c.size());
    for (const auto& r : m.row_support()) max_row = std::max(max_row, r.size());

    std::ostringstream out;
    out << n << ' ' << m.rows() << '\n';
    out << max_col << ' ' << max_row << '\n';
    for (std::size_t c = 0; c < n; ++c) out << cols[c].size() << (c + 1 < n ? ' ' : '\n');
    if (n == 0) out << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r)
        out << m.row(r).size() << (r + 1 < m.rows() ? ' ' : '\n');
    if (m.rows() == 0) out << '\n';
    auto write_list = [&out](const std::vector<std::uint32_t>& lst) {
        for (std::size_t i = 0; i < lst.size(); ++i) {
            if (i) out << ' ';
            out << lst[i] + 1;
        }
        out << '\n';
    };
    for (const auto& c : cols) write_list(c);
    for (const auto& r : m.row_support()) write_list(r);
    return out.str();
}

}  // namespace aedldpc
