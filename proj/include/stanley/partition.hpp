#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace stanley {

// A partition in canonical form: nonincreasing positive parts with no
// stored zeros.  Indexed access is 1-based and total, so reading past the
// last stored part yields 0 and trailing zeros never matter.
class Partition {
public:
    Partition() = default;

    // parts must already be nonincreasing and strictly positive.
    static Partition from_canonical(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    long long weight() const noexcept;

    // 1-based part access; 0 for any index past the last part.
    int part(std::size_t i) const noexcept
    {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Canonicalizes arbitrary nonnegative input: zeros dropped, the rest sorted
// nonincreasing.  Negative entries raise std::invalid_argument.
Partition make_partition(std::vector<int> raw);

// Expands (value, multiplicity) pairs, e.g. {{3,2},{1,4}} -> (3,3,1,1,1,1).
Partition partition_from_multiplicities(const std::vector<std::pair<int, int>>& vm);

// Run-length view: (value, multiplicity) pairs with values strictly
// decreasing.  Values not listed have multiplicity 0.
std::vector<std::pair<int, int>> multiplicity_view(const Partition& p);

// Conjugate q with q_i = #{k : p_k >= i}.  An involution.
Partition conjugate(const Partition& p);

// Multiset merge of the parts of a and b, sorted nonincreasing.
Partition multiset_union(const Partition& a, const Partition& b);

// Termwise a_i + b_i with zero padding beyond either length.  Conjugation
// exchanges this with multiset_union.
Partition termwise_sum(const Partition& a, const Partition& b);

// Number of odd parts.
long long odd_part_count(const Partition& p);

// 1 if i is odd, 0 if even.
inline int parity(long long i) noexcept { return static_cast<int>(i & 1LL); }

// Number of parts equal to value; value >= 1 required, otherwise
// std::invalid_argument.
long long multiplicity(const Partition& p, int value);

std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

} // namespace stanley
