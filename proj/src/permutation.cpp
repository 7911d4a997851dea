#include "aedldpc/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace aedldpc {

Permutation::Permutation(std::vector<std::uint32_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (auto v : map_) {
        if (v >= map_.size() || seen[v])
            throw std::invalid_argument("Permutation: map is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> m(n);
    std::iota(m.begin(), m.end(), 0u);
    return Permutation(std::move(m));
}

Permutation qc_perm(std::size_t d, std::size_t z, std::size_t blocks) {
    if (z == 0) throw std::invalid_argument("qc_perm: Z must be positive");
    if (d >= z) throw std::invalid_argument("qc_perm: shift d out of range [0, Z)");
    std::vector<std::uint32_t> m(blocks * z);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i % z + d >= z)
            m[i] = static_cast<std::uint32_t>(i + d - z);
        else
            m[i] = static_cast<std::uint32_t>(i + d);
    }
    return Permutation(std::move(m));
}

Permutation inverse(const Permutation& p) {
    std::vector<std::uint32_t> m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m[p(i)] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(m));
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<std::uint32_t> m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m[i] = p(q(i));
    return Permutation(std::move(m));
}

}  // namespace aedldpc
