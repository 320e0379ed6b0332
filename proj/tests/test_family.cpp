#include <doctest.h>

#include <map>
#include <sstream>

#include "oracles.hpp"
#include "parsep/error.hpp"
#include "parsep/family.hpp"

using namespace parsep;

namespace {

std::vector<oracle::Parts> as_parts(const std::vector<Partition>& ps) {
    std::vector<oracle::Parts> out;
    for (const auto& p : ps) out.push_back(p.vec());
    return out;
}

}  // namespace

TEST_CASE("family names round trip") {
    for (const FamilyId& f : all_families()) {
        CHECK(parse_family(family_name(f)) == f);
        CHECK(parse_family("p_" + family_name(f)) == f);
    }
    CHECK(family_name(families::od_eu) == "od_eu");
    CHECK_THROWS_AS(parse_family("xx_yy"), ParseError);
}

TEST_CASE("in_family examples") {
    CHECK(in_family(Partition({2, 2, 1}), families::od_eu));
    for (const FamilyId& f : all_families()) CHECK(in_family(Partition{}, f));
    CHECK_FALSE(in_family(Partition({3, 1, 1}), families::eu_od));
    CHECK_FALSE(in_family(Partition({3, 2}), families::od_eu));
}

TEST_CASE("enumeration examples") {
    CHECK(as_parts(enumerate_family(families::od_eu, 5)) ==
          std::vector<oracle::Parts>{{5}, {4, 1}, {2, 2, 1}});
    CHECK(as_parts(enumerate_family(families::eu_od, 5)) == std::vector<oracle::Parts>{{5}, {3, 2}});
    for (const FamilyId& f : all_families()) {
        const auto zero = enumerate_family(f, 0);
        REQUIRE(zero.size() == 1);
        CHECK(zero.front().empty());
    }
    CHECK_THROWS_AS(enumerate_family(families::od_eu, 71), ResourceError);
    CHECK_NOTHROW(enumerate_family(families::od_eu, 71, 80));
}

TEST_CASE("count examples") {
    CHECK(count_family(families::od_eu, 5) == 3);
    CHECK(count_family(families::eu_od, 5) == 2);
    for (const FamilyId& f : all_families()) CHECK(count_family(f, 0) == 1);
}

TEST_CASE("enumeration and DP agree with the brute-force oracle for n <= 40") {
    for (const FamilyId& f : all_families()) {
        const CountTable table = count_table(f, 40);
        for (int n = 0; n <= 40; ++n) {
            const auto expected = oracle::family_members(f, n);
            const auto got = as_parts(enumerate_family(f, n));
            INFO(family_name(f), " n=", n);
            CHECK(got == expected);
            CHECK(table.counts[n] == static_cast<unsigned long>(expected.size()));
            if (n <= 24) {
                for (const auto& parts : oracle::all_partitions(n)) {
                    CHECK(in_family(Partition(parts), f) == oracle::member(parts, f));
                }
            }
        }
    }
}

TEST_CASE("sampler membership, weight and unrank bijection") {
    for (const FamilyId& f : all_families()) {
        const FamilySampler s(f, 23);
        const auto members = enumerate_family(f, 23);
        REQUIRE(s.count() == static_cast<unsigned long>(members.size()));
        for (std::size_t r = 0; r < members.size(); ++r) CHECK(s.unrank(r) == members[r]);
        for (const auto& p : s.sample_many(50, 7)) {
            CHECK(p.weight() == 23);
            CHECK(in_family(p, f));
        }
    }
    CHECK(in_family(sample_family(families::eu_od, 23, 99), families::eu_od));
    CHECK(sample_family(families::od_eu, 0, 5).empty());
    CHECK_THROWS_AS(FamilySampler(families::ed_od, -1), DomainError);
}

TEST_CASE("sampler is deterministic per seed") {
    const FamilySampler s(families::od_eu, 200);
    CHECK(s.sample_many(20, 42) == s.sample_many(20, 42));
    CHECK(s.sample_many(20, 42) != s.sample_many(20, 43));
    for (const auto& p : s.sample_many(20, 1)) CHECK(in_family(p, families::od_eu));
}

TEST_CASE("sampler is uniform on (od_eu, 5)") {
    const FamilySampler s(families::od_eu, 5);
    std::map<oracle::Parts, int> hist;
    const int draws = 100000;
    for (const auto& p : s.sample_many(draws, 12345)) ++hist[p.vec()];
    REQUIRE(hist.size() == 3);
    double chi2 = 0.0;
    const double expected = draws / 3.0;
    for (const auto& [parts, c] : hist) chi2 += (c - expected) * (c - expected) / expected;
    // 2 degrees of freedom; 13.82 is the 0.999 quantile.
    CHECK(chi2 < 13.82);
}

TEST_CASE("the eight families form a strict chain on 50..400") {
    std::vector<CountTable> tables;
    for (const FamilyId& f : all_families()) tables.push_back(count_table(f, 400));
    for (int n = 50; n <= 400; ++n) {
        for (std::size_t i = 0; i + 1 < tables.size(); ++i) {
            INFO("n=", n, " ", family_name(tables[i].family), " < ", family_name(tables[i + 1].family));
            CHECK(tables[i].counts[n] < tables[i + 1].counts[n]);
        }
    }
}

TEST_CASE("count CSV") {
    std::ostringstream out;
    const std::array<FamilyId, 2> fams{families::od_eu, families::eu_od};
    write_count_csv(out, 4, 5, fams);
    CHECK(out.str() == "n,p_od_eu,p_eu_od\n4,3,3\n5,3,2\n");

    std::ostringstream all;
    write_count_csv(all, 0, 0);
    CHECK(all.str() == "n,p_ed_od,p_od_ed,p_od_eu,p_eu_od,p_ed_ou,p_eu_ou,p_ou_ed,p_ou_eu\n0,1,1,1,1,1,1,1,1\n");
    CHECK_THROWS_AS(write_count_csv(all, 3, 2), DomainError);
}
