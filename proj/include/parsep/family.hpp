#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "parsep/partition.hpp"

namespace parsep {

enum class Parity : std::uint8_t { even, odd };
enum class Mode : std::uint8_t { unrestricted, distinct };

constexpr Parity parity_of(int part) noexcept { return part % 2 == 0 ? Parity::even : Parity::odd; }

/// One of the eight parity-separated families p_{yz}^{wx}: the upper block
/// (parity w, mode x) lies strictly above the lower block (parity y, mode z).
struct FamilyId {
    Parity upper_parity;
    Mode upper_mode;
    Parity lower_parity;
    Mode lower_mode;

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Name in "<lower>_<upper>" form, e.g. "od_eu" for p_{od}^{eu}.
std::string family_name(FamilyId f);

/// Inverse of family_name. Throws ParseError for anything else.
FamilyId parse_family(std::string_view name);

/// The eight families in the order of the asymptotic chain
/// ed_od, od_ed, od_eu, eu_od, ed_ou, eu_ou, ou_ed, ou_eu.
const std::array<FamilyId, 8>& all_families();

namespace families {
inline constexpr FamilyId ed_od{Parity::odd, Mode::distinct, Parity::even, Mode::distinct};
inline constexpr FamilyId od_ed{Parity::even, Mode::distinct, Parity::odd, Mode::distinct};
inline constexpr FamilyId od_eu{Parity::even, Mode::unrestricted, Parity::odd, Mode::distinct};
inline constexpr FamilyId eu_od{Parity::odd, Mode::distinct, Parity::even, Mode::unrestricted};
inline constexpr FamilyId ed_ou{Parity::odd, Mode::unrestricted, Parity::even, Mode::distinct};
inline constexpr FamilyId eu_ou{Parity::odd, Mode::unrestricted, Parity::even, Mode::unrestricted};
inline constexpr FamilyId ou_ed{Parity::even, Mode::distinct, Parity::odd, Mode::unrestricted};
inline constexpr FamilyId ou_eu{Parity::even, Mode::unrestricted, Parity::odd, Mode::unrestricted};
}  // namespace families

bool in_family(const Partition& p, FamilyId f);

/// Largest n accepted by the enumeration routines unless overridden.
inline constexpr int kDefaultEnumerationCutoff = 70;

/// Visits every member of the family at weight n exactly once, in
/// lexicographically decreasing order of part sequences. Throws
/// ResourceError when n exceeds `cutoff`.
void for_each_in_family(FamilyId f, int n, const std::function<void(const Partition&)>& visit,
                        int cutoff = kDefaultEnumerationCutoff);

std::vector<Partition> enumerate_family(FamilyId f, int n, int cutoff = kDefaultEnumerationCutoff);

/// Exact counts p_f(0..max_n) for one family.
struct CountTable {
    FamilyId family;
    int max_n = 0;
    std::vector<mpz_class> counts;
};

CountTable count_table(FamilyId f, int max_n);

mpz_class count_family(FamilyId f, int n);

/// CSV with header "n,p_ed_od,...,p_ou_eu" and one row per n in [from, to].
/// Columns follow the order of `fams`; all eight by default.
void write_count_csv(std::ostream& out, int from, int to, std::span<const FamilyId> fams = all_families());

/// Uniform sampler over one family at a fixed weight. Construction builds the
/// conditional count tables once; each draw maps a uniform integer in
/// [0, count) to a partition by descending those tables.
class FamilySampler {
public:
    /// Throws DomainError if the family is empty at n or n < 0.
    FamilySampler(FamilyId f, int n);
    ~FamilySampler();
    FamilySampler(FamilySampler&&) noexcept;
    FamilySampler& operator=(FamilySampler&&) noexcept;

    const mpz_class& count() const;

    /// The member of rank r (0 <= r < count()) in lexicographically
    /// decreasing order, i.e. the r-th element of enumerate_family.
    Partition unrank(const mpz_class& r) const;

    /// Deterministic in `seed`; independent draws use different seeds.
    Partition sample(std::uint64_t seed) const;

    /// Draws `k` partitions from a single generator stream seeded with `seed`.
    std::vector<Partition> sample_many(std::size_t k, std::uint64_t seed) const;

private:
    struct Tables;
    std::unique_ptr<Tables> tables_;
};

Partition sample_family(FamilyId f, int n, std::uint64_t seed);

}  // namespace parsep
