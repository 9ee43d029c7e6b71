#include "chern/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chern {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_string(std::string_view csv) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string_view tok = csv.substr(pos, comma == std::string_view::npos ? csv.size() - pos
                                                                               : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty component in partition string");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("partition parts must be decimal integers");
            value = value * 10 + (c - '0');
            if (value > 1'000'000) throw std::invalid_argument("partition part out of range");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == csv.size()) throw std::invalid_argument("trailing comma in partition string");
    }
    return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void gamma_rec(int remaining, int max_part, std::vector<int>& cur,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gamma_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_gamma(int k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("enumerate_gamma requires k >= 1, r >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    gamma_rec(k, r, cur, out);
    return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("dominance order compares partitions of equal weight");
    int sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        sa += a.part_or_zero(i);
        sb += b.part_or_zero(i);
        if (sa > sb) return false;
    }
    return true;
}

}  // namespace chern
