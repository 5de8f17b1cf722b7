#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace linespec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An integer partition in canonical form: parts weakly decreasing, no
/// trailing zeros. Any multiset of non-negative integers may be passed to
/// the constructor; it is sorted and zeros are dropped.
class Partition {
public:
    using part_type = std::int64_t;

    Partition() = default;
    Partition(std::initializer_list<part_type> parts);
    explicit Partition(std::vector<part_type> parts);

    std::span<const part_type> parts() const { return parts_; }

    /// Part i (0-based); rows beyond the length read as 0.
    part_type operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    bool empty() const { return parts_.empty(); }

    /// Parts padded with zeros to exactly n entries. Throws if n < length().
    std::vector<part_type> padded(std::size_t n) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<part_type> parts_;
};

std::int64_t size(const Partition& p);
std::size_t length(const Partition& p);
std::size_t distinct_parts(const Partition& p);

/// inner_i <= outer_i for every row.
bool contains(const Partition& outer, const Partition& inner);

/// "4,1,1"; the empty partition prints as "-".
std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Inverse of to_string. Throws std::invalid_argument on malformed text or
/// non-positive parts.
Partition parse_partition(std::string_view text);

/// Streams the partitions of `total` into exactly `exact_length` positive
/// parts with first part at most `max_first_part`, in descending
/// lexicographic order.
class PartitionRange {
public:
    PartitionRange(std::int64_t total, std::int64_t exact_length, std::int64_t max_first_part);

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;

        Partition operator*() const { return Partition(parts_); }
        const std::vector<Partition::part_type>& raw() const { return parts_; }

        iterator& operator++();
        iterator operator++(int)
        {
            iterator old = *this;
            ++*this;
            return old;
        }

        friend bool operator==(const iterator& a, const iterator& b)
        {
            if (a.done_ || b.done_)
                return a.done_ == b.done_;
            return a.parts_ == b.parts_;
        }

    private:
        friend class PartitionRange;
        std::vector<Partition::part_type> parts_;
        bool done_ = true;
    };

    iterator begin() const;
    iterator end() const { return {}; }

private:
    std::int64_t total_;
    std::int64_t length_;
    std::int64_t max_first_;
};

std::vector<Partition> enumerate_partitions(std::int64_t total, std::int64_t exact_length,
                                            std::int64_t max_first_part);

} // namespace linespec
