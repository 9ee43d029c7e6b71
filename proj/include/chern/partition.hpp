#ifndef CHERN_PARTITION_HPP
#define CHERN_PARTITION_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace chern {

/// Weakly decreasing sequence of positive integers, stored without trailing
/// zeros. The empty partition is the weight-0 unit.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "2,1"; an empty string is the empty partition.
    static Partition from_string(std::string_view csv);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 0-based; 0 beyond the length (the padded-with-zeros view).
    int part_or_zero(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    /// Transpose of the Young diagram; an involution.
    Partition conjugate() const;

    /// Comma-separated parts, e.g. "2,1"; empty partition prints as "".
    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Γ(k,r): all partitions of weight k with largest part <= r, enumerated in
/// descending lexicographic order (the canonical order for reports).
std::vector<Partition> enumerate_gamma(int k, int r);

/// Dominance partial order on partitions of equal weight: every prefix sum of
/// `a` is <= the corresponding prefix sum of `b`. Throws on weight mismatch.
bool dominance_leq(const Partition& a, const Partition& b);

}  // namespace chern

#endif
