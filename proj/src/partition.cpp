#include "parsep/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "parsep/error.hpp"

namespace parsep {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

long parse_integer(std::string_view token, std::string_view whole) {
    long value = 0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError("malformed token '" + std::string(token) + "' in partition '" +
                         std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw DomainError("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    const std::string_view body = trim(text);
    if (body.empty()) return {};

    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto comma = body.find(',', pos);
        if (comma == std::string_view::npos) comma = body.size();
        const std::string_view token = trim(body.substr(pos, comma - pos));

        long part = 0;
        long repeat = 1;
        if (const auto caret = token.find('^'); caret != std::string_view::npos) {
            part = parse_integer(trim(token.substr(0, caret)), text);
            repeat = parse_integer(trim(token.substr(caret + 1)), text);
            if (repeat < 0) throw ParseError("negative repetition count in '" + std::string(text) + "'");
        } else {
            part = parse_integer(token, text);
        }
        if (part < 1) {
            throw DomainError("part " + std::to_string(part) + " is not positive in '" +
                              std::string(text) + "'");
        }
        parts.insert(parts.end(), static_cast<std::size_t>(repeat), static_cast<int>(part));
        pos = comma + 1;
    }
    return Partition::from_unsorted(std::move(parts));
}

std::string to_string(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

std::string to_frequency_string(const Partition& p) {
    std::string out;
    const auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(parts[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

ParityView parity_split(const Partition& p) {
    std::vector<int> evens;
    std::vector<int> odds;
    for (int part : p.parts()) (part % 2 == 0 ? evens : odds).push_back(part);
    ParityView view;
    view.s = evens.size();
    view.t = odds.size();
    view.evens = Partition(std::move(evens));
    view.odds = Partition(std::move(odds));
    return view;
}

Partition merge(const Partition& a, const Partition& b) {
    std::vector<int> out;
    out.reserve(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(out), std::greater<>());
    return Partition(std::move(out));
}

std::size_t frequency(const Partition& p, int j) {
    const auto parts = p.parts();
    // Parts are sorted descending, so the run of j is contiguous.
    auto range = std::equal_range(parts.begin(), parts.end(), j, std::greater<>());
    return static_cast<std::size_t>(range.second - range.first);
}

Partition concat(const Partition& a, const Partition& b) {
    if (!a.empty() && !b.empty() && a.smallest() < b.largest()) {
        throw DomainError("cannot concatenate (" + to_string(a) + ") and (" + to_string(b) +
                          "): result would not be weakly decreasing");
    }
    std::vector<int> out(a.vec());
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(out));
}

std::string render_ferrers(const Partition& p, char glyph) {
    std::string out;
    out.reserve(static_cast<std::size_t>(p.weight()) + p.length());
    for (int part : p.parts()) {
        out.append(static_cast<std::size_t>(part), glyph);
        out += '\n';
    }
    return out;
}

}  // namespace parsep
