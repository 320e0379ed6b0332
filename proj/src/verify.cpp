#include "parsep/verify.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "parsep/error.hpp"
#include "parsep/series.hpp"

namespace parsep {

namespace {

std::string case_list(const std::vector<CaseId>& cases) {
    std::string out = "{";
    for (std::size_t i = 0; i < cases.size(); ++i) out += (i ? "," : "") + std::to_string(cases[i].index());
    return out + "}";
}

void add_failure(VerificationReport& r, std::int64_t n, const Partition& input, int case_id, std::string check,
                 std::string detail) {
    r.failures.push_back(Failure{n, to_string(input), case_id, std::move(check), std::move(detail)});
}

void finish(VerificationReport& r) { std::sort(r.failures.begin(), r.failures.end()); }

// Forward checks on one member of A_od^eu(n). `images` maps every image seen
// so far at this weight to its source, for the injectivity check.
void check_member(const Partition& lambda, VerificationReport& r, std::map<Partition, Partition>& images) {
    const std::int64_t n = lambda.weight();
    const CaseId c = classify_A(lambda);
    CaseTally& tally = r.per_case[c.index() - 1];

    const auto rows = matching_a_cases(lambda);
    if (rows.size() != 1 || rows.front() != c) {
        ++tally.tested;
        add_failure(r, n, lambda, c.index(), "classification",
                    "table rows " + case_list(rows) + ", decision tree " + std::to_string(c.index()));
        return;
    }
    if (n < case_min_n(c)) {
        ++tally.skipped;
        return;
    }
    ++tally.tested;

    Partition mu;
    try {
        mu = apply_psi(c, lambda);
    } catch (const std::exception& e) {
        add_failure(r, n, lambda, c.index(), "image", e.what());
        return;
    }
    const std::string image = "image=" + to_string(mu);
    if (mu.weight() != n) {
        add_failure(r, n, lambda, c.index(), "weight", image);
        return;
    }
    if (!in_family(mu, families::eu_od)) {
        add_failure(r, n, lambda, c.index(), "membership", image);
        return;
    }
    if (const auto b_rows = matching_b_cases(mu); b_rows.size() != 1 || b_rows.front() != c) {
        add_failure(r, n, lambda, c.index(), "b_predicate", image + " matches " + case_list(b_rows));
        return;
    }
    try {
        if (const Partition back = apply_psi_inverse(c, mu); back != lambda) {
            add_failure(r, n, lambda, c.index(), "roundtrip", image + " inverse=" + to_string(back));
            return;
        }
    } catch (const std::exception& e) {
        add_failure(r, n, lambda, c.index(), "roundtrip", image + " " + e.what());
        return;
    }
    if (auto [it, inserted] = images.emplace(mu, lambda); !inserted && it->second != lambda) {
        add_failure(r, n, lambda, c.index(), "injectivity", image + " also the image of " + to_string(it->second));
        return;
    }
    ++tally.passed;
}

// Backward checks on one member of B_eu^od(n); returns the matched rows.
std::vector<CaseId> check_b_member(const Partition& mu, VerificationReport& r) {
    const std::int64_t n = mu.weight();
    auto rows = matching_b_cases(mu);
    if (rows.empty()) {
        ++r.b_unmatched;
        return rows;
    }
    if (rows.size() > 1) {
        add_failure(r, n, mu, rows.front().index(), "b_disjointness", "matches " + case_list(rows));
        return rows;
    }
    const CaseId c = rows.front();
    CaseTally& tally = r.inverse_case[c.index() - 1];
    if (n < case_min_n(c)) {
        ++tally.skipped;
        return rows;
    }
    ++tally.tested;
    try {
        const Partition lambda = apply_psi_inverse(c, mu);
        if (classify_A(lambda) != c) {
            add_failure(r, n, mu, c.index(), "inverse_class",
                        "preimage=" + to_string(lambda) + " classified " + std::to_string(classify_A(lambda).index()));
            return rows;
        }
        if (const Partition again = apply_psi(c, lambda); again != mu) {
            add_failure(r, n, mu, c.index(), "inverse_roundtrip",
                        "preimage=" + to_string(lambda) + " image=" + to_string(again));
            return rows;
        }
    } catch (const std::exception& e) {
        add_failure(r, n, mu, c.index(), "inverse_roundtrip", e.what());
        return rows;
    }
    ++tally.passed;
    return rows;
}

void check_witness(int n, VerificationReport& r) {
    ++r.witnesses_checked;
    const Partition w = witness(n);
    if (w.weight() != n) {
        add_failure(r, n, w, 0, "witness_weight", "weight=" + std::to_string(w.weight()));
    } else if (!in_family(w, families::eu_od)) {
        add_failure(r, n, w, 0, "witness_membership", "not in B_eu^od");
    } else if (const auto rows = matching_b_cases(w); !rows.empty()) {
        add_failure(r, n, w, rows.front().index(), "witness_unmatched", "matches " + case_list(rows));
    }
}

}  // namespace

std::string to_string(VerifyMode m) {
    switch (m) {
        case VerifyMode::exhaustive: return "exhaustive";
        case VerifyMode::sampled: return "sampled";
        case VerifyMode::inequality: return "inequality";
        case VerifyMode::witnesses: return "witnesses";
    }
    return "?";
}

std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::series: return "series";
        case CountMethod::dp: return "dp";
        case CountMethod::both: return "both";
    }
    return "?";
}

void VerificationReport::merge(const VerificationReport& other) {
    n_lo = std::min(n_lo, other.n_lo);
    n_hi = std::max(n_hi, other.n_hi);
    for (std::size_t i = 0; i < per_case.size(); ++i) {
        for (auto [mine, theirs] : {std::pair{&per_case[i], &other.per_case[i]},
                                    std::pair{&inverse_case[i], &other.inverse_case[i]}}) {
            mine->tested += theirs->tested;
            mine->passed += theirs->passed;
            mine->skipped += theirs->skipped;
        }
    }
    a_members += other.a_members;
    b_members += other.b_members;
    b_unmatched += other.b_unmatched;
    witnesses_checked += other.witnesses_checked;
    counts.insert(counts.end(), other.counts.begin(), other.counts.end());
    inequality.insert(inequality.end(), other.inequality.begin(), other.inequality.end());
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    finish(*this);
}

VerificationReport verify_exhaustive(int n, int cutoff) {
    if (n < 0) throw DomainError("weight must be nonnegative");
    VerificationReport r;
    r.mode = VerifyMode::exhaustive;
    r.n_lo = r.n_hi = n;

    std::array<std::size_t, CaseId::kCount> a_count{}, b_count{};
    std::map<Partition, Partition> images;
    for_each_in_family(
        families::od_eu, n,
        [&](const Partition& lambda) {
            ++r.a_members;
            ++a_count[classify_A(lambda).index() - 1];
            check_member(lambda, r, images);
        },
        cutoff);
    for_each_in_family(
        families::eu_od, n,
        [&](const Partition& mu) {
            ++r.b_members;
            for (CaseId c : check_b_member(mu, r)) ++b_count[c.index() - 1];
        },
        cutoff);

    for (int j = 1; j <= CaseId::kCount; ++j) {
        CaseCount cc{n, j, a_count[j - 1], b_count[j - 1], n >= case_min_n(CaseId(j))};
        r.counts.push_back(cc);
        if (cc.compared && cc.a_count != cc.b_count) {
            r.failures.push_back(Failure{n, "", j, "cardinality",
                                         "|A_j|=" + std::to_string(cc.a_count) + " |B_j|=" + std::to_string(cc.b_count)});
        }
    }
    finish(r);
    return r;
}

VerificationReport verify_exhaustive_range(int lo, int hi, int cutoff) {
    if (lo > hi) throw DomainError("empty weight range");
    VerificationReport r = verify_exhaustive(lo, cutoff);
    for (int n = lo + 1; n <= hi; ++n) r.merge(verify_exhaustive(n, cutoff));
    return r;
}

VerificationReport verify_sampled(int n, std::size_t samples, std::uint64_t seed) {
    if (samples < 1) throw DomainError("samples must be at least 1");
    VerificationReport r;
    r.mode = VerifyMode::sampled;
    r.n_lo = r.n_hi = n;
    r.samples = samples;
    r.seed = seed;

    const FamilySampler sampler(families::od_eu, n);
    std::map<Partition, Partition> images;
    for (const Partition& lambda : sampler.sample_many(samples, seed)) {
        ++r.a_members;
        check_member(lambda, r, images);
    }
    if (n >= kWitnessMinN) check_witness(n, r);
    finish(r);
    return r;
}

VerificationReport verify_inequality(int lo, int hi, CountMethod method) {
    if (lo < 0 || lo > hi) throw DomainError("inequality range must satisfy 0 <= lo <= hi");
    VerificationReport r;
    r.mode = VerifyMode::inequality;
    r.n_lo = lo;
    r.n_hi = hi;

    std::optional<Series> s_eu_od, s_od_eu;
    std::optional<CountTable> t_eu_od, t_od_eu;
    if (method != CountMethod::dp) {
        s_eu_od = series_p_eu_od(hi);
        s_od_eu = series_p_od_eu(hi);
    }
    if (method != CountMethod::series) {
        t_eu_od = count_table(families::eu_od, hi);
        t_od_eu = count_table(families::od_eu, hi);
    }
    for (int n = lo; n <= hi; ++n) {
        InequalityRow row;
        row.n = n;
        if (t_eu_od) {
            row.p_eu_od = t_eu_od->counts[n];
            row.p_od_eu = t_od_eu->counts[n];
        } else {
            row.p_eu_od = (*s_eu_od)[n];
            row.p_od_eu = (*s_od_eu)[n];
        }
        if (s_eu_od && t_eu_od) {
            if ((*s_eu_od)[n] != t_eu_od->counts[n]) {
                r.failures.push_back(Failure{n, "", 0, "count_mismatch",
                                             "eu_od series=" + (*s_eu_od)[n].get_str() +
                                                 " dp=" + t_eu_od->counts[n].get_str()});
            }
            if ((*s_od_eu)[n] != t_od_eu->counts[n]) {
                r.failures.push_back(Failure{n, "", 0, "count_mismatch",
                                             "od_eu series=" + (*s_od_eu)[n].get_str() +
                                                 " dp=" + t_od_eu->counts[n].get_str()});
            }
        }
        row.holds = row.p_eu_od > row.p_od_eu;
        if (!row.holds) {
            r.failures.push_back(Failure{n, "", 0, "inequality",
                                         "p_eu_od=" + row.p_eu_od.get_str() + " p_od_eu=" + row.p_od_eu.get_str()});
        }
        r.inequality.push_back(std::move(row));
    }
    finish(r);
    return r;
}

VerificationReport verify_witnesses(int lo, int hi) {
    if (lo < kWitnessMinN || lo > hi) {
        throw DomainError("witness range must satisfy " + std::to_string(kWitnessMinN) + " <= lo <= hi");
    }
    VerificationReport r;
    r.mode = VerifyMode::witnesses;
    r.n_lo = lo;
    r.n_hi = hi;
    for (int n = lo; n <= hi; ++n) check_witness(n, r);
    finish(r);
    return r;
}

// ---------------------------------------------------------------------------
// Serialization

void write_report_text(std::ostream& out, const VerificationReport& r) {
    out << "report mode=" << to_string(r.mode) << " n=" << r.n_lo << ".." << r.n_hi;
    if (r.mode == VerifyMode::sampled) out << " samples=" << r.samples << " seed=" << r.seed;
    out << " status=" << (r.ok() ? "PASS" : "FAIL") << " failures=" << r.failures.size() << '\n';
    if (r.mode == VerifyMode::exhaustive || r.mode == VerifyMode::sampled) {
        out << "members a=" << r.a_members << " b=" << r.b_members << " b_unmatched=" << r.b_unmatched << '\n';
        for (int j = 1; j <= CaseId::kCount; ++j) {
            const CaseTally& f = r.per_case[j - 1];
            const CaseTally& b = r.inverse_case[j - 1];
            if (f.tested + f.skipped + b.tested + b.skipped == 0) continue;
            out << "case " << j << " tested=" << f.tested << " passed=" << f.passed << " skipped=" << f.skipped
                << " inverse_tested=" << b.tested << " inverse_passed=" << b.passed << " inverse_skipped=" << b.skipped
                << '\n';
        }
        for (const CaseCount& c : r.counts) {
            if (c.a_count == 0 && c.b_count == 0) continue;
            out << "count n=" << c.n << " case=" << c.case_id << " a=" << c.a_count << " b=" << c.b_count
                << " compared=" << (c.compared ? "yes" : "no") << '\n';
        }
    }
    if (r.witnesses_checked) out << "witnesses checked=" << r.witnesses_checked << '\n';
    for (const InequalityRow& row : r.inequality) {
        out << "inequality n=" << row.n << " p_eu_od=" << row.p_eu_od.get_str() << " p_od_eu=" << row.p_od_eu.get_str()
            << " holds=" << (row.holds ? "true" : "false") << '\n';
    }
    for (const Failure& f : r.failures) {
        out << "failure n=" << f.n << " case=" << f.case_id << " check=" << f.check << " input=" << f.input
            << " detail=" << f.detail << '\n';
    }
}

void write_report_json(std::ostream& out, const VerificationReport& r) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["mode"] = to_string(r.mode);
    doc["n_range"] = {r.n_lo, r.n_hi};
    if (r.mode == VerifyMode::sampled) {
        doc["samples"] = r.samples;
        doc["seed"] = r.seed;
    }
    doc["ok"] = r.ok();
    doc["a_members"] = r.a_members;
    doc["b_members"] = r.b_members;
    doc["b_unmatched"] = r.b_unmatched;
    doc["witnesses_checked"] = r.witnesses_checked;
    ordered_json cases = ordered_json::array();
    for (int j = 1; j <= CaseId::kCount; ++j) {
        const CaseTally& f = r.per_case[j - 1];
        const CaseTally& b = r.inverse_case[j - 1];
        cases.push_back({{"case", j},
                         {"tested", f.tested},
                         {"passed", f.passed},
                         {"skipped", f.skipped},
                         {"inverse_tested", b.tested},
                         {"inverse_passed", b.passed},
                         {"inverse_skipped", b.skipped}});
    }
    doc["per_case"] = std::move(cases);
    ordered_json counts = ordered_json::array();
    for (const CaseCount& c : r.counts) {
        counts.push_back({{"n", c.n}, {"case", c.case_id}, {"a", c.a_count}, {"b", c.b_count}, {"compared", c.compared}});
    }
    doc["counts"] = std::move(counts);
    ordered_json ineq = ordered_json::array();
    for (const InequalityRow& row : r.inequality) {
        // Counts exceed 64 bits for large n, so they are emitted as decimal strings.
        ineq.push_back({{"n", row.n},
                        {"p_eu_od", row.p_eu_od.get_str()},
                        {"p_od_eu", row.p_od_eu.get_str()},
                        {"holds", row.holds}});
    }
    doc["inequality"] = std::move(ineq);
    ordered_json failures = ordered_json::array();
    for (const Failure& f : r.failures) {
        failures.push_back(
            {{"n", f.n}, {"case", f.case_id}, {"check", f.check}, {"input", f.input}, {"detail", f.detail}});
    }
    doc["failures"] = std::move(failures);
    out << doc.dump(2) << '\n';
}

}  // namespace parsep
