#include "parsep/injection.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "parsep/error.hpp"
#include "parsep/family.hpp"

namespace parsep {

namespace {

// lambda in A_od^eu written as (e_1..e_s, o_1..o_t). Accessors are 1-based.
struct ABlocks {
    std::vector<int> e, o;
    int s = 0, t = 0;

    explicit ABlocks(const Partition& p) {
        for (int part : p.parts()) (part % 2 == 0 ? e : o).push_back(part);
        s = static_cast<int>(e.size());
        t = static_cast<int>(o.size());
    }
    int E(int i) const { return e.at(i - 1); }
    int O(int i) const { return o.at(i - 1); }
};

// mu in B_eu^od written as (o_1..o_v, e_1..e_u). Accessors are 1-based.
struct BBlocks {
    std::vector<int> o, e;
    int v = 0, u = 0, f2 = 0;

    explicit BBlocks(const Partition& p) {
        for (int part : p.parts()) (part % 2 == 0 ? e : o).push_back(part);
        v = static_cast<int>(o.size());
        u = static_cast<int>(e.size());
        f2 = static_cast<int>(std::count(e.begin(), e.end(), 2));
    }
    int O(int i) const { return o.at(i - 1); }
    int E(int i) const { return e.at(i - 1); }
};

constexpr std::array<CaseRule, CaseId::kCount> kRules{{
    {1, 1, "s = 0 or t = 0", "u = 0 or v = 0"},
    {2, 12, "s = t >= 2", "u = v >= 2, mu_v^o - mu_1^e >= 2v - 3"},
    {3, 16, "s > t >= 2", "u > v >= 2, mu_1^o - mu_2^o >= 2(u - v + 1), mu_{u-v}^e - mu_{u-v+1}^e >= 2v - 4"},
    {4, 21, "t > s >= 2", "v > u >= 2, mu_1^o - mu_2^o >= 2(v - u + 1), mu_v^o - mu_1^e >= 2u - 3"},
    {5, 5, "s = 1, t >= 1, lambda_1^e - lambda_1^o >= 3", "u = 1, v >= 1"},
    {6, 35, "s = 1, t >= 5, lambda_1^e - lambda_1^o = 1",
     "v >= 3, 2u - 3 = mu_1^o, u - v >= 3, mu_1^e - mu_2^e >= 2, mu_3^e = 2"},
    {7, 54, "s = 1, t in {3, 4}, lambda_1^e - lambda_1^o = 1",
     "v in {3, 4}, mu_v^o = 3, mu_1^e = 2, u + 2v + 1 >= mu_1^o >= 2v + 1, u >= 6, u even"},
    {8, 20, "s = 1, t = 2, lambda_1^e - lambda_1^o = 1",
     "v = 2, u >= 4, mu_1^o - mu_2^o = 2, mu_1^e = 2, mu_2^o - 2u + 11 > 0, mu_1^o >= 5"},
    {9, 23, "s = t = 1, lambda_1^e - lambda_1^o = 1", "mu = (4k - 15, 5, 3, 2, 2, 2), k >= 6"},
    {10, 83, "s = 2, t = 1", "v = 3, u >= 5, mu_3^o = 5, mu_1^e = 2, 2u + 25 >= mu_1^o"},
    {11, 7, "s >= 3, t = 1, lambda_1^o = 1", "u >= 2, v = 1"},
    {12, 95, "s = 3, t = 1, lambda_1^o >= 3", "v = 3, mu_3^o >= 7, u >= 4, mu_1^e = 2, 2u + 23 >= mu_1^o"},
    {13, 159, "s = 4, t = 1, lambda_1^o >= 3", "u >= 6, v = 5, mu_5^o = 3, mu_1^e = 2, 2u + 27 >= mu_1^o"},
    {14, 227, "s = 5, t = 1, lambda_1^o >= 3", "u >= 6, v = 5, mu_5^o >= 5, mu_1^e = 2, 2u + 35 >= mu_1^o"},
    {15, 373, "6 <= s <= 10, t = 1, lambda_1^o >= 3",
     "f_2 > 12, v = 3, mu_{u-f_2}^e >= 4, 3 <= u - f_2 <= 7, 2f_2 + 15 >= mu_1^o"},
    {16, 47, "s >= 11, t = 1, lambda_1^o >= 3, lambda_1^e - lambda_2^e <= 10",
     "u >= 9, v = 3, f_2 <= 5, mu_1^o - mu_2^o <= 12, mu_{u-5}^e - mu_{u-4}^e >= 2"},
    {17, 59, "s >= 11, t = 1, lambda_1^o >= 3, lambda_1^e - lambda_2^e >= 12",
     "u >= 15, v = 3, 6 <= f_2 <= 11, mu_{u-11}^e - mu_{u-10}^e >= 2"},
}};

void require_in_A(const Partition& p) {
    if (!in_family(p, families::od_eu))
        throw DomainError("(" + to_string(p) + ") is not in A_od^eu");
}

void require_in_B(const Partition& p) {
    if (!in_family(p, families::eu_od))
        throw DomainError("(" + to_string(p) + ") is not in B_eu^od");
}

void append(std::vector<int>& v, int value, int copies = 1) {
    if (copies < 0) throw InvariantViolation("negative number of copies of " + std::to_string(value));
    v.insert(v.end(), static_cast<std::size_t>(copies), value);
}

// Builds a partition from a formula written in block order. Every part of
// `first` must have parity `first_parity` and every part of `second` the
// opposite one; the result is sorted and must land in `target` with the
// given weight.
Partition assemble(const std::vector<int>& first, const std::vector<int>& second, Parity first_parity,
                   FamilyId target, std::int64_t weight, CaseId c, const Partition& source,
                   std::string_view direction) {
    auto fail = [&](const std::string& what) {
        throw InvariantViolation(std::string(direction) + " case " + std::to_string(c.index()) + " on (" +
                                 to_string(source) + "): " + what);
    };
    std::vector<int> parts;
    parts.reserve(first.size() + second.size());
    for (int x : first) {
        if (x < 1) fail("non-positive part " + std::to_string(x));
        if (parity_of(x) != first_parity) fail("part " + std::to_string(x) + " has the wrong parity");
        parts.push_back(x);
    }
    for (int x : second) {
        if (x < 1) fail("non-positive part " + std::to_string(x));
        if (parity_of(x) == first_parity) fail("part " + std::to_string(x) + " has the wrong parity");
        parts.push_back(x);
    }
    Partition out = Partition::from_unsorted(std::move(parts));
    if (out.weight() != weight) {
        fail("weight " + std::to_string(out.weight()) + " != " + std::to_string(weight) + " for (" + to_string(out) +
             ")");
    }
    if (!in_family(out, target)) fail("(" + to_string(out) + ") is outside " + family_name(target));
    return out;
}

bool is_case9_image(const Partition& mu) {
    static const std::vector<int> kTail{5, 3, 2, 2, 2};
    const auto parts = mu.parts();
    if (parts.size() != 6 || !std::equal(kTail.begin(), kTail.end(), parts.begin() + 1)) return false;
    const int head = parts[0];
    return (head + 15) % 4 == 0 && (head + 15) / 4 >= 6;
}

}  // namespace

CaseId::CaseId(int index) : index_(index) {
    if (index < 1 || index > kCount) throw DomainError("case index " + std::to_string(index) + " is not in 1..17");
}

const std::array<CaseRule, CaseId::kCount>& case_rules() { return kRules; }

int case_min_n(CaseId c) { return kRules[c.index() - 1].min_n; }

// ---------------------------------------------------------------------------
// A side

bool a_predicate(CaseId c, const Partition& lambda) {
    const ABlocks a(lambda);
    const int s = a.s, t = a.t;
    const int gap = (s >= 1 && t >= 1) ? a.E(1) - a.O(1) : 0;
    const bool single_odd_above_1 = t == 1 && a.O(1) >= 3;
    switch (c.index()) {
        case 1: return s == 0 || t == 0;
        case 2: return s == t && t >= 2;
        case 3: return s > t && t >= 2;
        case 4: return t > s && s >= 2;
        case 5: return s == 1 && t >= 1 && gap >= 3;
        case 6: return s == 1 && t >= 5 && gap == 1;
        case 7: return s == 1 && (t == 3 || t == 4) && gap == 1;
        case 8: return s == 1 && t == 2 && gap == 1;
        case 9: return s == 1 && t == 1 && gap == 1;
        case 10: return s == 2 && t == 1;
        case 11: return s >= 3 && t == 1 && a.O(1) == 1;
        case 12: return s == 3 && single_odd_above_1;
        case 13: return s == 4 && single_odd_above_1;
        case 14: return s == 5 && single_odd_above_1;
        case 15: return s >= 6 && s <= 10 && single_odd_above_1;
        case 16: return s >= 11 && single_odd_above_1 && a.E(1) - a.E(2) <= 10;
        case 17: return s >= 11 && single_odd_above_1 && a.E(1) - a.E(2) >= 12;
    }
    return false;
}

std::vector<CaseId> matching_a_cases(const Partition& lambda) {
    std::vector<CaseId> out;
    for (int j = 1; j <= CaseId::kCount; ++j)
        if (a_predicate(CaseId(j), lambda)) out.emplace_back(j);
    return out;
}

CaseId classify_A(const Partition& lambda) {
    require_in_A(lambda);
    const ABlocks a(lambda);
    const int s = a.s, t = a.t;
    if (s == 0 || t == 0) return CaseId(1);
    if (s >= 2 && t >= 2) return CaseId(s == t ? 2 : s > t ? 3 : 4);
    if (s == 1) {
        // lambda_1^e - lambda_1^o is odd, so it is either 1 or at least 3.
        if (a.E(1) - a.O(1) >= 3) return CaseId(5);
        if (t >= 5) return CaseId(6);
        if (t >= 3) return CaseId(7);
        return CaseId(t == 2 ? 8 : 9);
    }
    // t == 1, s >= 2
    if (s == 2) return CaseId(10);
    if (a.O(1) == 1) return CaseId(11);
    if (s <= 5) return CaseId(s + 9);  // 12, 13, 14
    if (s <= 10) return CaseId(15);
    // lambda_1^e - lambda_2^e is even, so 11 cannot occur.
    return CaseId(a.E(1) - a.E(2) <= 10 ? 16 : 17);
}

// ---------------------------------------------------------------------------
// B side

bool b_predicate(CaseId c, const Partition& mu) {
    const BBlocks b(mu);
    const int u = b.u, v = b.v, f2 = b.f2;
    switch (c.index()) {
        case 1: return u == 0 || v == 0;
        case 2: return u == v && v >= 2 && b.O(v) - b.E(1) >= 2 * v - 3;
        case 3:
            return u > v && v >= 2 && b.O(1) - b.O(2) >= 2 * (u - v + 1) &&
                   b.E(u - v) - b.E(u - v + 1) >= 2 * v - 4;
        case 4:
            return v > u && u >= 2 && b.O(1) - b.O(2) >= 2 * (v - u + 1) && b.O(v) - b.E(1) >= 2 * u - 3;
        case 5: return u == 1 && v >= 1;
        case 6:
            return v >= 3 && u - v >= 3 && 2 * u - 3 == b.O(1) && b.E(1) - b.E(2) >= 2 && b.E(3) == 2;
        case 7:
            return (v == 3 || v == 4) && u >= 6 && u % 2 == 0 && b.O(v) == 3 && b.E(1) == 2 &&
                   u + 2 * v + 1 >= b.O(1) && b.O(1) >= 2 * v + 1;
        case 8:
            return v == 2 && u >= 4 && b.O(1) - b.O(2) == 2 && b.E(1) == 2 && b.O(2) - 2 * u + 11 > 0 &&
                   b.O(1) >= 5;
        case 9: return is_case9_image(mu);
        case 10: return v == 3 && u >= 5 && b.O(3) == 5 && b.E(1) == 2 && 2 * u + 25 >= b.O(1);
        case 11: return u >= 2 && v == 1;
        case 12: return v == 3 && u >= 4 && b.O(3) >= 7 && b.E(1) == 2 && 2 * u + 23 >= b.O(1);
        case 13: return v == 5 && u >= 6 && b.O(5) == 3 && b.E(1) == 2 && 2 * u + 27 >= b.O(1);
        case 14: return v == 5 && u >= 6 && b.O(5) >= 5 && b.E(1) == 2 && 2 * u + 35 >= b.O(1);
        case 15:
            return f2 > 12 && v == 3 && u - f2 >= 3 && u - f2 <= 7 && b.E(u - f2) >= 4 && 2 * f2 + 15 >= b.O(1);
        case 16:
            return u >= 9 && v == 3 && f2 <= 5 && b.O(1) - b.O(2) <= 12 && b.E(u - 5) - b.E(u - 4) >= 2;
        case 17: return u >= 15 && v == 3 && f2 >= 6 && f2 <= 11 && b.E(u - 11) - b.E(u - 10) >= 2;
    }
    return false;
}

std::vector<CaseId> matching_b_cases(const Partition& mu) {
    std::vector<CaseId> out;
    for (int j = 1; j <= CaseId::kCount; ++j)
        if (b_predicate(CaseId(j), mu)) out.emplace_back(j);
    return out;
}

std::optional<CaseId> classify_B(const Partition& mu) {
    require_in_B(mu);
    const auto matches = matching_b_cases(mu);
    if (matches.empty()) return std::nullopt;
    if (matches.size() > 1) {
        std::string ids;
        for (CaseId c : matches) ids += (ids.empty() ? "" : ",") + std::to_string(c.index());
        throw InvariantViolation("(" + to_string(mu) + ") matches several B predicates: " + ids);
    }
    return matches.front();
}

// ---------------------------------------------------------------------------
// psi

Partition apply_psi(const Partition& lambda) { return apply_psi(classify_A(lambda), lambda); }

Partition apply_psi(CaseId c, const Partition& lambda) {
    require_in_A(lambda);
    if (!a_predicate(c, lambda))
        throw DomainError("(" + to_string(lambda) + ") is not in A_" + std::to_string(c.index()));
    const std::int64_t n = lambda.weight();
    if (n < case_min_n(c)) {
        throw DomainError("psi is not defined on case " + std::to_string(c.index()) + " at n=" + std::to_string(n) +
                          " (requires n >= " + std::to_string(case_min_n(c)) + ")");
    }
    if (c.index() == 1) return lambda;

    const ABlocks a(lambda);
    const int s = a.s, t = a.t;
    std::vector<int> odd, even;  // image blocks: distinct odd parts on top, even parts below
    switch (c.index()) {
        case 2:
            for (int i = 1; i <= s; ++i) {
                odd.push_back(a.E(i) + (2 * s - 2 * i - 1));
                even.push_back(a.O(i) - (2 * s - 2 * i - 1));
            }
            break;
        case 3:
            odd.push_back(a.E(1) + 2 * (s - t) + (2 * t - 3));
            for (int i = 2; i <= t; ++i) odd.push_back(a.E(i) + (2 * t - 2 * i - 1));
            for (int i = t + 1; i <= s; ++i) even.push_back(a.E(i) - 2);
            for (int i = 1; i <= t; ++i) even.push_back(a.O(i) - (2 * t - 2 * i - 1));
            break;
        case 4:
            odd.push_back(a.E(1) + 2 * (t - s) + (2 * s - 3));
            for (int i = 2; i <= s; ++i) odd.push_back(a.E(i) + (2 * s - 2 * i - 1));
            for (int i = 1; i <= t - s; ++i) odd.push_back(a.O(i) - 2);
            for (int i = 1; i <= s; ++i) even.push_back(a.O(t - s + i) - (2 * s - 2 * i - 1));
            break;
        case 5:
            odd.push_back(a.E(1) - 1);
            for (int i = 1; i < t; ++i) odd.push_back(a.O(i));
            even.push_back(a.O(t) + 1);
            break;
        case 6:
            for (int i = 1; i <= t - 2; ++i) odd.push_back(a.O(i));
            even.push_back(a.O(t - 1) + 1);
            even.push_back(a.O(t) + 1);
            append(even, 2, (a.E(1) - 2) / 2);
            break;
        case 7:
            for (int i = 2; i <= t; ++i) odd.push_back(a.O(i) + 4);
            odd.push_back(3);
            append(even, 2, a.E(1) - 2 * t);
            break;
        case 8:
            odd.push_back(a.E(1) - 3);
            odd.push_back(a.O(1) - 4);
            append(even, 2, (a.O(2) + 7) / 2);
            break;
        case 9: {
            const int k = a.E(1) / 2;
            odd = {4 * k - 15, 5, 3};
            even = {2, 2, 2};
            break;
        }
        case 10:
            odd = {a.E(2) + 7, a.O(1) + 6, 5};
            append(even, 2, (a.E(1) - 18) / 2);
            break;
        case 11:
            odd.push_back(a.E(1) + 1);
            for (int i = 2; i <= s; ++i) even.push_back(a.E(i));
            break;
        case 12:
            odd = {a.E(2) + 7, a.E(3) + 5, a.O(1) + 4};
            append(even, 2, (a.E(1) - 16) / 2);
            break;
        case 13:
            odd = {a.E(2) + 7, a.E(3) + 5, a.E(4) + 3, a.O(1) + 2, 3};
            append(even, 2, (a.E(1) - 20) / 2);
            break;
        case 14:
            // Fourth entry uses lambda_5^e; the weight balance (9+7+5+3+2 = 26)
            // and the inverse mu_4^o - 3 both require it.
            odd = {a.E(2) + 9, a.E(3) + 7, a.E(4) + 5, a.E(5) + 3, a.O(1) + 2};
            append(even, 2, (a.E(1) - 26) / 2);
            break;
        case 15:
            odd = {a.E(2) + 5, a.E(3) + 3, a.E(4) + 1};
            for (int i = 5; i <= s; ++i) even.push_back(a.E(i));
            even.push_back(a.O(1) + 1);
            append(even, 2, (a.E(1) - 10) / 2);
            break;
        case 16:
        case 17:
            if (c.index() == 16) {
                odd = {a.E(1) + 5, a.E(2) + 3, a.E(3) + 1};
            } else {
                odd = {a.E(1) - 7, a.E(2) + 3, a.E(3) + 1};
            }
            for (int i = 4; i <= s - 4; ++i) even.push_back(a.E(i));
            for (int i = s - 3; i <= s; ++i) even.push_back(a.E(i) - 2);
            even.push_back(a.O(1) - 1);
            if (c.index() == 17) append(even, 2, 6);
            break;
    }
    return assemble(odd, even, Parity::odd, families::eu_od, n, c, lambda, "psi");
}

Partition apply_psi_inverse(const Partition& mu) {
    const auto c = classify_B(mu);
    if (!c) throw DomainError("(" + to_string(mu) + ") matches no B_j predicate");
    return apply_psi_inverse(*c, mu);
}

Partition apply_psi_inverse(CaseId c, const Partition& mu) {
    require_in_B(mu);
    if (!b_predicate(c, mu))
        throw DomainError("(" + to_string(mu) + ") is not in B_" + std::to_string(c.index()));
    const std::int64_t n = mu.weight();
    if (n < case_min_n(c)) {
        throw DomainError("psi^-1 is not defined on case " + std::to_string(c.index()) +
                          " at n=" + std::to_string(n) + " (requires n >= " + std::to_string(case_min_n(c)) + ")");
    }
    if (c.index() == 1) return mu;

    const BBlocks b(mu);
    const int u = b.u, v = b.v, f2 = b.f2;
    std::vector<int> even, odd;  // preimage blocks: even parts on top, distinct odd parts below
    switch (c.index()) {
        case 2:
            for (int i = 1; i <= u; ++i) {
                even.push_back(b.O(i) - (2 * u - 2 * i - 1));
                odd.push_back(b.E(i) + (2 * u - 2 * i - 1));
            }
            break;
        case 3:
            even.push_back(b.O(1) - (2 * (u - v) + 2 * v - 3));
            for (int i = 2; i <= v; ++i) even.push_back(b.O(i) - (2 * v - 2 * i - 1));
            for (int i = 1; i <= u - v; ++i) even.push_back(b.E(i) + 2);
            for (int i = 1; i <= v; ++i) odd.push_back(b.E(u - v + i) + (2 * v - 2 * i - 1));
            break;
        case 4:
            even.push_back(b.O(1) - (2 * (v - u) + 2 * u - 3));
            for (int i = 2; i <= u; ++i) even.push_back(b.O(i) - (2 * u - 2 * i - 1));
            for (int i = u + 1; i <= v; ++i) odd.push_back(b.O(i) + 2);
            for (int i = 1; i <= u; ++i) odd.push_back(b.E(i) + (2 * u - 2 * i - 1));
            break;
        case 5:
            even.push_back(b.O(1) + 1);
            for (int i = 2; i <= v; ++i) odd.push_back(b.O(i));
            odd.push_back(b.E(1) - 1);
            break;
        case 6:
            even.push_back(2 * u - 2);
            for (int i = 1; i <= v; ++i) odd.push_back(b.O(i));
            odd.push_back(b.E(1) - 1);
            odd.push_back(b.E(2) - 1);
            break;
        case 7:
            even.push_back(u + 2 * v);
            odd.push_back(u + 2 * v - 1);
            for (int i = 1; i <= v - 1; ++i) odd.push_back(b.O(i) - 4);
            break;
        case 8:
            even.push_back(b.O(1) + 3);
            odd = {b.O(2) + 4, 2 * f2 - 7};
            break;
        case 9: {
            const int k = (b.O(1) + 15) / 4;
            even.push_back(2 * k);
            odd.push_back(2 * k - 1);
            break;
        }
        case 10:
            even = {2 * u + 18, b.O(1) - 7};
            odd.push_back(b.O(2) - 6);
            break;
        case 11:
            even.push_back(b.O(1) - 1);
            for (int i = 1; i <= u; ++i) even.push_back(b.E(i));
            odd.push_back(1);
            break;
        case 12:
            even = {2 * u + 16, b.O(1) - 7, b.O(2) - 5};
            odd.push_back(b.O(3) - 4);
            break;
        case 13:
            even = {2 * u + 20, b.O(1) - 7, b.O(2) - 5, b.O(3) - 3};
            odd.push_back(b.O(4) - 2);
            break;
        case 14:
            even = {2 * u + 26, b.O(1) - 9, b.O(2) - 7, b.O(3) - 5, b.O(4) - 3};
            odd.push_back(b.O(5) - 2);
            break;
        case 15: {
            const int k = u - f2;
            even = {2 * f2 + 10, b.O(1) - 5, b.O(2) - 3, b.O(3) - 1};
            for (int i = 1; i <= k - 1; ++i) even.push_back(b.E(i));
            odd.push_back(b.E(k) - 1);
            break;
        }
        case 16:
            even = {b.O(1) - 5, b.O(2) - 3, b.O(3) - 1};
            for (int i = 1; i <= u - 5; ++i) even.push_back(b.E(i));
            for (int i = u - 4; i <= u - 1; ++i) even.push_back(b.E(i) + 2);
            odd.push_back(b.E(u) + 1);
            break;
        case 17:
            even = {b.O(1) + 7, b.O(2) - 3, b.O(3) - 1};
            for (int i = 1; i <= u - 11; ++i) even.push_back(b.E(i));
            for (int i = u - 10; i <= u - 7; ++i) even.push_back(b.E(i) + 2);
            odd.push_back(b.E(u - 6) + 1);
            break;
    }
    return assemble(even, odd, Parity::even, families::od_eu, n, c, mu, "psi^-1");
}

// ---------------------------------------------------------------------------
// Strictness witnesses

Partition witness(int n) {
    if (n < kWitnessMinN) {
        throw DomainError("witness(n) requires n >= " + std::to_string(kWitnessMinN) + ", got " + std::to_string(n));
    }
    const int k = n / 6;
    const int j = n % 6;
    if (j % 2 == 1) return Partition({2 * k + 3, 2 * k + 1, 2 * k + j - 8, 2, 2});
    return Partition({2 * k + 1, 2 * k - 1, 2 * k + j - 7, 3, 2, 2});
}

}  // namespace parsep
