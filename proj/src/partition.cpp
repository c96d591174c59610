#include "stanley/partition.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace stanley {

Partition Partition::from_canonical(std::vector<int> parts)
{
    assert(std::is_sorted(parts.begin(), parts.end(), std::greater<int>()));
    assert(parts.empty() || parts.back() >= 1);
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

long long Partition::weight() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition make_partition(std::vector<int> raw)
{
    for (int v : raw) {
        if (v < 0)
            throw std::invalid_argument("partition entries must be nonnegative, got "
                                        + std::to_string(v));
    }
    std::sort(raw.begin(), raw.end(), std::greater<int>());
    while (!raw.empty() && raw.back() == 0)
        raw.pop_back();
    return Partition::from_canonical(std::move(raw));
}

Partition partition_from_multiplicities(const std::vector<std::pair<int, int>>& vm)
{
    std::vector<int> parts;
    for (const auto& [value, mult] : vm) {
        if (value < 1)
            throw std::invalid_argument("part values must be positive");
        if (mult < 0)
            throw std::invalid_argument("multiplicities must be nonnegative");
        parts.insert(parts.end(), static_cast<std::size_t>(mult), value);
    }
    return make_partition(std::move(parts));
}

std::vector<std::pair<int, int>> multiplicity_view(const Partition& p)
{
    std::vector<std::pair<int, int>> view;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        view.emplace_back(parts[i], static_cast<int>(j - i));
        i = j;
    }
    return view;
}

Partition conjugate(const Partition& p)
{
    if (p.empty())
        return {};
    // Column counts of the Ferrers diagram: q_i = #{k : p_k >= i}.
    std::vector<int> cols(static_cast<std::size_t>(p.parts().front()), 0);
    for (int part : p.parts())
        for (int i = 0; i < part; ++i)
            ++cols[static_cast<std::size_t>(i)];
    return Partition::from_canonical(std::move(cols));
}

Partition multiset_union(const Partition& a, const Partition& b)
{
    std::vector<int> merged;
    merged.reserve(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(merged), std::greater<int>());
    return Partition::from_canonical(std::move(merged));
}

Partition termwise_sum(const Partition& a, const Partition& b)
{
    const std::size_t len = std::max(a.length(), b.length());
    std::vector<int> sums;
    sums.reserve(len);
    for (std::size_t i = 1; i <= len; ++i)
        sums.push_back(a.part(i) + b.part(i));
    return Partition::from_canonical(std::move(sums));
}

long long odd_part_count(const Partition& p)
{
    return std::count_if(p.parts().begin(), p.parts().end(),
                         [](int v) { return v % 2 != 0; });
}

long long multiplicity(const Partition& p, int value)
{
    if (value < 1)
        throw std::invalid_argument("multiplicity is defined for positive values only");
    const auto [lo, hi] = std::equal_range(p.parts().begin(), p.parts().end(), value,
                                           std::greater<int>());
    return hi - lo;
}

std::string to_string(const Partition& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    out += ']';
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << to_string(p);
}

} // namespace stanley
