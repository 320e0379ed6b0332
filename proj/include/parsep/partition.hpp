#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace parsep {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The weight is cached at construction. The empty partition is the unique
/// partition of 0. Values are immutable once built.
class Partition {
public:
    Partition() = default;

    /// Takes parts that are already weakly decreasing and positive.
    /// Throws DomainError otherwise.
    explicit Partition(std::vector<int> parts);

    /// Sorts into weakly decreasing order first. Throws DomainError on a part < 1.
    static Partition from_unsorted(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }
    std::int64_t weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based access, matching the usual lambda_i notation.
    int at1(std::size_t i) const { return parts_.at(i - 1); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    std::int64_t weight_ = 0;
};

/// Even and odd parts of a partition, each in their original order.
struct ParityView {
    Partition evens;
    Partition odds;
    std::size_t s = 0;  // number of even parts
    std::size_t t = 0;  // number of odd parts
};

/// Accepts "9,7,5,2^4" style text: comma separated parts, each optionally
/// raised to a repetition count. Whitespace around tokens is ignored.
/// Throws ParseError on malformed tokens and DomainError on parts < 1.
Partition parse_partition(std::string_view text);

/// Canonical text form: plain comma-separated parts, "" for the empty partition.
std::string to_string(const Partition& p);

/// Frequency form, e.g. "9,7,5,2^4". Output only.
std::string to_frequency_string(const Partition& p);

ParityView parity_split(const Partition& p);

/// Merges two partitions by value (multiset union). Inverse of parity_split.
Partition merge(const Partition& a, const Partition& b);

/// Number of occurrences of the part j.
std::size_t frequency(const Partition& p, int j);

/// a followed by b; requires a's last part >= b's first part.
Partition concat(const Partition& a, const Partition& b);

/// Left-justified Ferrers diagram, one row per part, rows joined by '\n'.
std::string render_ferrers(const Partition& p, char glyph = '#');

}  // namespace parsep
