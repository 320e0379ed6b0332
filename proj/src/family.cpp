#include "parsep/family.hpp"

#include <algorithm>

#include "parsep/error.hpp"

namespace parsep {

namespace {

char parity_letter(Parity p) { return p == Parity::even ? 'e' : 'o'; }
char mode_letter(Mode m) { return m == Mode::distinct ? 'd' : 'u'; }

// Multiplicity bound for a part of value j under a mode, given m cells left.
int max_copies(Mode mode, int j, int m) { return mode == Mode::distinct ? std::min(1, m / j) : m / j; }

// Rolling step of the count recurrence for one part value j.
//
// upper[m] counts fillings of weight m from values <= j while still allowed to
// place upper-block parts; lower[m] counts fillings using only lower-block
// parts. Entering the lower block at value j is the "largest lower part is
// exactly j" branch, so the boundary is never double counted.
template <class Vec>
void step(FamilyId f, int j, Vec& upper, Vec& lower) {
    const int max_n = static_cast<int>(upper.size()) - 1;
    auto apply_mode = [&](Vec& v, Mode mode) {
        if (mode == Mode::distinct) {
            for (int m = max_n; m >= j; --m) v[m] += v[m - j];
        } else {
            for (int m = j; m <= max_n; ++m) v[m] += v[m - j];
        }
    };
    if (parity_of(j) == f.upper_parity) {
        apply_mode(upper, f.upper_mode);
    } else {
        Vec before = lower;
        apply_mode(lower, f.lower_mode);
        for (int m = j; m <= max_n; ++m) upper[m] += lower[m] - before[m];
    }
}

}  // namespace

std::string family_name(FamilyId f) {
    return {parity_letter(f.lower_parity), mode_letter(f.lower_mode), '_', parity_letter(f.upper_parity),
            mode_letter(f.upper_mode)};
}

FamilyId parse_family(std::string_view name) {
    std::string_view key = name;
    if (key.starts_with("p_")) key.remove_prefix(2);
    for (const FamilyId& f : all_families()) {
        if (family_name(f) == key) return f;
    }
    throw ParseError("unknown family '" + std::string(name) +
                     "' (expected one of ed_od, od_ed, od_eu, eu_od, ed_ou, eu_ou, ou_ed, ou_eu)");
}

const std::array<FamilyId, 8>& all_families() {
    static const std::array<FamilyId, 8> kAll{families::ed_od, families::od_ed, families::od_eu,
                                              families::eu_od, families::ed_ou, families::eu_ou,
                                              families::ou_ed, families::ou_eu};
    return kAll;
}

bool in_family(const Partition& p, FamilyId f) {
    int min_upper = 0;  // 0 = no upper part seen
    int max_lower = 0;
    int previous = 0;
    for (int part : p.parts()) {
        const bool upper = parity_of(part) == f.upper_parity;
        const Mode mode = upper ? f.upper_mode : f.lower_mode;
        if (mode == Mode::distinct && part == previous) return false;
        if (upper) {
            min_upper = part;
        } else if (max_lower == 0) {
            max_lower = part;
        }
        previous = part;
    }
    return min_upper == 0 || max_lower == 0 || max_lower < min_upper;
}

// ---------------------------------------------------------------------------
// Enumeration

void for_each_in_family(FamilyId f, int n, const std::function<void(const Partition&)>& visit, int cutoff) {
    if (n < 0) return;
    if (n > cutoff) {
        throw ResourceError("enumeration of " + family_name(f) + " at n=" + std::to_string(n) +
                            " exceeds the cutoff " + std::to_string(cutoff));
    }
    // feasible_upper[j][m] / feasible_lower[j][m]: some filling of m exists
    // from values <= j in the respective state.
    std::vector<std::vector<char>> feasible_upper(n + 1), feasible_lower(n + 1);
    std::vector<char> upper(n + 1, 0), lower(n + 1, 0);
    upper[0] = lower[0] = 1;
    feasible_upper[0] = upper;
    feasible_lower[0] = lower;
    for (int j = 1; j <= n; ++j) {
        if (parity_of(j) == f.upper_parity) {
            if (f.upper_mode == Mode::distinct) {
                for (int m = n; m >= j; --m) upper[m] = upper[m] || upper[m - j];
            } else {
                for (int m = j; m <= n; ++m) upper[m] = upper[m] || upper[m - j];
            }
        } else {
            if (f.lower_mode == Mode::distinct) {
                for (int m = n; m >= j; --m) lower[m] = lower[m] || lower[m - j];
            } else {
                for (int m = j; m <= n; ++m) lower[m] = lower[m] || lower[m - j];
            }
            // Fillings that only use lower parts are valid in either state.
            for (int m = j; m <= n; ++m) upper[m] = upper[m] || lower[m];
        }
        feasible_upper[j] = upper;
        feasible_lower[j] = lower;
    }

    std::vector<int> parts;
    // Values are visited top-down with larger multiplicities first, which is
    // lexicographically decreasing order on the resulting part sequences.
    std::function<void(int, int, bool)> descend = [&](int j, int m, bool in_lower) {
        if (m == 0) {
            visit(Partition(parts));
            return;
        }
        if (j == 0) return;
        const bool is_upper = parity_of(j) == f.upper_parity;
        if (in_lower && is_upper) {
            if (feasible_lower[j - 1][m]) descend(j - 1, m, true);
            return;
        }
        const Mode mode = is_upper ? f.upper_mode : f.lower_mode;
        for (int c = max_copies(mode, j, m); c >= 0; --c) {
            const int rest = m - c * j;
            const bool next_lower = in_lower || (!is_upper && c > 0);
            const auto& table = next_lower ? feasible_lower : feasible_upper;
            if (!table[j - 1][rest]) continue;
            parts.insert(parts.end(), c, j);
            descend(j - 1, rest, next_lower);
            parts.resize(parts.size() - c);
        }
    };
    if (feasible_upper[n][n]) descend(n, n, false);
}

std::vector<Partition> enumerate_family(FamilyId f, int n, int cutoff) {
    std::vector<Partition> out;
    for_each_in_family(f, n, [&](const Partition& p) { out.push_back(p); }, cutoff);
    return out;
}

// ---------------------------------------------------------------------------
// Counting

CountTable count_table(FamilyId f, int max_n) {
    if (max_n < 0) throw DomainError("count table order must be nonnegative");
    std::vector<mpz_class> upper(max_n + 1, 0), lower(max_n + 1, 0);
    upper[0] = lower[0] = 1;
    for (int j = 1; j <= max_n; ++j) step(f, j, upper, lower);
    return CountTable{f, max_n, std::move(upper)};
}

mpz_class count_family(FamilyId f, int n) {
    if (n < 0) return 0;
    return count_table(f, n).counts[n];
}

void write_count_csv(std::ostream& out, int from, int to, std::span<const FamilyId> fams) {
    if (from < 0 || from > to) throw DomainError("table range must satisfy 0 <= from <= to");
    std::vector<CountTable> tables;
    for (const FamilyId& f : fams) tables.push_back(count_table(f, to));
    out << "n";
    for (const FamilyId& f : fams) out << ",p_" << family_name(f);
    out << '\n';
    for (int n = from; n <= to; ++n) {
        out << n;
        for (const auto& t : tables) out << ',' << t.counts[n].get_str();
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// Sampling

struct FamilySampler::Tables {
    FamilyId family;
    int n = 0;
    // upper[j][m], lower[j][m] after processing values 1..j.
    std::vector<std::vector<mpz_class>> upper, lower;
};

FamilySampler::FamilySampler(FamilyId f, int n) : tables_(std::make_unique<Tables>()) {
    if (n < 0) throw DomainError("weight must be nonnegative");
    tables_->family = f;
    tables_->n = n;
    std::vector<mpz_class> upper(n + 1, 0), lower(n + 1, 0);
    upper[0] = lower[0] = 1;
    tables_->upper.reserve(n + 1);
    tables_->lower.reserve(n + 1);
    tables_->upper.push_back(upper);
    tables_->lower.push_back(lower);
    for (int j = 1; j <= n; ++j) {
        step(f, j, upper, lower);
        tables_->upper.push_back(upper);
        tables_->lower.push_back(lower);
    }
    if (tables_->upper[n][n] == 0) {
        throw DomainError("family " + family_name(f) + " has no members of weight " + std::to_string(n));
    }
}

FamilySampler::~FamilySampler() = default;
FamilySampler::FamilySampler(FamilySampler&&) noexcept = default;
FamilySampler& FamilySampler::operator=(FamilySampler&&) noexcept = default;

const mpz_class& FamilySampler::count() const { return tables_->upper[tables_->n][tables_->n]; }

Partition FamilySampler::unrank(const mpz_class& rank) const {
    if (rank < 0 || rank >= count()) throw DomainError("rank out of range");
    const FamilyId f = tables_->family;
    mpz_class r = rank;
    std::vector<int> parts;
    int m = tables_->n;
    bool in_lower = false;
    for (int j = tables_->n; j >= 1 && m > 0; --j) {
        const bool is_upper = parity_of(j) == f.upper_parity;
        if (in_lower && is_upper) continue;
        const Mode mode = is_upper ? f.upper_mode : f.lower_mode;
        bool chosen = false;
        for (int c = max_copies(mode, j, m); c >= 0; --c) {
            const int rest = m - c * j;
            const bool next_lower = in_lower || (!is_upper && c > 0);
            const mpz_class& ways = (next_lower ? tables_->lower : tables_->upper)[j - 1][rest];
            if (r < ways) {
                parts.insert(parts.end(), c, j);
                m = rest;
                in_lower = next_lower;
                chosen = true;
                break;
            }
            r -= ways;
        }
        if (!chosen) throw InvariantViolation("sampler tables inconsistent");
    }
    if (m != 0) throw InvariantViolation("sampler descent did not exhaust the weight");
    return Partition(std::move(parts));
}

Partition FamilySampler::sample(std::uint64_t seed) const { return sample_many(1, seed).front(); }

std::vector<Partition> FamilySampler::sample_many(std::size_t k, std::uint64_t seed) const {
    gmp_randclass rng(gmp_randinit_mt);
    mpz_class seed_z;
    mpz_import(seed_z.get_mpz_t(), 1, 1, sizeof(seed), 0, 0, &seed);
    rng.seed(seed_z);
    std::vector<Partition> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const mpz_class r = rng.get_z_range(count());
        out.push_back(unrank(r));
    }
    return out;
}

Partition sample_family(FamilyId f, int n, std::uint64_t seed) { return FamilySampler(f, n).sample(seed); }

}  // namespace parsep
