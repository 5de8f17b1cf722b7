#include "linespec/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace linespec {

namespace {

void canonicalize(std::vector<Partition::part_type>& parts)
{
    for (auto p : parts)
        if (p < 0)
            throw std::invalid_argument("partition parts must be non-negative");
    std::ranges::sort(parts, std::greater<>());
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
}

// Writes the lexicographically largest sequence of `count` parts in
// [1, cap] summing to `remaining` into out[from, from + count).
void fill_greedy(std::vector<Partition::part_type>& out, std::size_t from, std::int64_t count,
                 std::int64_t remaining, std::int64_t cap)
{
    for (std::int64_t i = 0; i < count; ++i) {
        std::int64_t left_after = count - i - 1;
        std::int64_t v = std::min(cap, remaining - left_after);
        out[from + i] = v;
        remaining -= v;
        cap = v;
    }
}

} // namespace

Partition::Partition(std::initializer_list<part_type> parts)
    : parts_(parts)
{
    canonicalize(parts_);
}

Partition::Partition(std::vector<part_type> parts)
    : parts_(std::move(parts))
{
    canonicalize(parts_);
}

std::vector<Partition::part_type> Partition::padded(std::size_t n) const
{
    if (n < parts_.size())
        throw std::invalid_argument("cannot pad partition " + to_string(*this) + " to length "
                                    + std::to_string(n));
    std::vector<part_type> out(parts_);
    out.resize(n, 0);
    return out;
}

std::int64_t size(const Partition& p)
{
    auto parts = p.parts();
    return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
}

std::size_t length(const Partition& p) { return p.parts().size(); }

std::size_t distinct_parts(const Partition& p)
{
    auto parts = p.parts();
    if (parts.empty())
        return 0;
    std::size_t k = 1;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] != parts[i - 1])
            ++k;
    return k;
}

bool contains(const Partition& outer, const Partition& inner)
{
    if (length(inner) > length(outer))
        return false;
    for (std::size_t i = 0; i < length(inner); ++i)
        if (inner[i] > outer[i])
            return false;
    return true;
}

std::string to_string(const Partition& p)
{
    if (p.empty())
        return "-";
    std::ostringstream os;
    bool first = true;
    for (auto part : p.parts()) {
        if (!first)
            os << ',';
        os << part;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

Partition parse_partition(std::string_view text)
{
    if (text == "-")
        return {};
    if (text.empty())
        throw std::invalid_argument("empty partition text (use '-' for the empty partition)");
    std::vector<Partition::part_type> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        Partition::part_type v = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || end != token.data() + token.size() || token.empty())
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        if (v <= 0)
            throw std::invalid_argument("partition parts must be positive in '" + std::string(text) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

PartitionRange::PartitionRange(std::int64_t total, std::int64_t exact_length, std::int64_t max_first_part)
    : total_(total)
    , length_(exact_length)
    , max_first_(max_first_part)
{
    if (total < 0 || exact_length < 0 || max_first_part < 0)
        throw std::invalid_argument("partition range parameters must be non-negative");
}

PartitionRange::iterator PartitionRange::begin() const
{
    iterator it;
    if (length_ == 0) {
        // only the empty partition, and only for total 0
        it.done_ = total_ != 0;
        return it;
    }
    std::int64_t first = std::min(max_first_, total_ - (length_ - 1));
    // smallest admissible first part is ceil(total / length)
    if (first < 1 || first * length_ < total_)
        return it;
    it.parts_.assign(static_cast<std::size_t>(length_), 0);
    fill_greedy(it.parts_, 0, length_, total_, first);
    it.done_ = false;
    return it;
}

PartitionRange::iterator& PartitionRange::iterator::operator++()
{
    auto k = static_cast<std::int64_t>(parts_.size());
    if (done_ || k <= 1) {
        done_ = true;
        parts_.clear();
        return *this;
    }
    std::int64_t suffix = parts_[k - 1];
    for (std::int64_t i = k - 2; i >= 0; --i) {
        suffix += parts_[i];
        std::int64_t v = parts_[i] - 1;
        std::int64_t rest = suffix - v;
        std::int64_t count = k - 1 - i;
        if (v >= 1 && rest >= count && rest <= count * v) {
            parts_[i] = v;
            fill_greedy(parts_, static_cast<std::size_t>(i + 1), count, rest, v);
            return *this;
        }
    }
    done_ = true;
    parts_.clear();
    return *this;
}

std::vector<Partition> enumerate_partitions(std::int64_t total, std::int64_t exact_length,
                                            std::int64_t max_first_part)
{
    std::vector<Partition> out;
    for (auto p : PartitionRange(total, exact_length, max_first_part))
        out.push_back(std::move(p));
    return out;
}

} // namespace linespec
