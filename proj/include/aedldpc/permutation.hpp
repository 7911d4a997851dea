#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace aedldpc {

/// Bijection on {0, ..., N-1}. Application convention, fixed project-wide:
/// apply(p, v)[p(i)] = v[i], i.e. the value at position i moves to position
/// p(i). inverse() and compose() are consistent with this convention, so
/// apply(inverse(p), apply(p, v)) == v and
/// apply(compose(p, q), v) == apply(p, apply(q, v)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> map);
    static Permutation identity(std::size_t n);

    std::size_t size() const { return map_.size(); }
    std::uint32_t operator()(std::size_t i) const { return map_[i]; }
    const std::vector<std::uint32_t>& map() const { return map_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::uint32_t> map_;
};

/// Block-wise cyclic shift by d on n blocks of size Z (length N = n*Z):
/// p(i) = i + d - Z if (i mod Z) + d >= Z, else i + d.
Permutation qc_perm(std::size_t d, std::size_t z, std::size_t blocks);

Permutation inverse(const Permutation& p);

/// compose(p, q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

template <typename T>
std::vector<T> apply(const Permutation& p, const std::vector<T>& v) {
    if (p.size() != v.size())
        throw std::invalid_argument("apply: permutation/vector size mismatch");
    std::vector<T> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[p(i)] = v[i];
    return out;
}

/// apply(inverse(p), v) without materializing the inverse: out[i] = v[p(i)].
template <typename T>
std::vector<T> apply_inverse(const Permutation& p, const std::vector<T>& v) {
    if (p.size() != v.size())
        throw std::invalid_argument("apply_inverse: permutation/vector size mismatch");
    std::vector<T> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[p(i)];
    return out;
}

}  // namespace aedldpc
