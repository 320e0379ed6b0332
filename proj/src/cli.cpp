#include "parsep/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>

#include "parsep/error.hpp"
#include "parsep/family.hpp"
#include "parsep/injection.hpp"
#include "parsep/partition.hpp"
#include "parsep/series.hpp"
#include "parsep/verify.hpp"

namespace parsep::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "auto";
    std::string family;
    int n = 0;
    int from = 0;
    int to = 0;
    std::string families = "all";
    int cutoff = kDefaultEnumerationCutoff;
    std::string input;
    bool inverse = false;
    bool ferrers = false;
    std::string side = "A";
    std::string target;
    int order = 1000;
    std::string mode;
    std::string method = "both";
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
};

std::string resolve_format(const Options& o, std::string_view fallback, std::initializer_list<std::string_view> allowed) {
    const std::string f = o.format == "auto" ? std::string(fallback) : o.format;
    for (auto a : allowed)
        if (a == f) return f;
    throw UsageError("format '" + f + "' is not supported by this subcommand");
}

ordered_json parts_json(const Partition& p) { return ordered_json(p.vec()); }

int cmd_count(const Options& o, std::ostream& out) {
    const FamilyId f = parse_family(o.family);
    if (o.n < 0) throw DomainError("--n must be nonnegative, got " + std::to_string(o.n));
    const mpz_class c = count_family(f, o.n);
    const auto fmt = resolve_format(o, "text", {"text", "csv", "json"});
    if (fmt == "json") {
        out << ordered_json{{"family", family_name(f)}, {"n", o.n}, {"count", c.get_str()}}.dump() << '\n';
    } else if (fmt == "csv") {
        out << "family,n,count\n" << family_name(f) << ',' << o.n << ',' << c.get_str() << '\n';
    } else {
        out << c.get_str() << '\n';
    }
    return kExitOk;
}

std::vector<FamilyId> parse_family_list(const std::string& text) {
    if (text == "all") return {all_families().begin(), all_families().end()};
    std::vector<FamilyId> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_family(item));
    if (out.empty()) throw ParseError("empty family list");
    return out;
}

int cmd_table(const Options& o, std::ostream& out) {
    const auto fams = parse_family_list(o.families);
    const auto fmt = resolve_format(o, "csv", {"csv", "json"});
    if (fmt == "csv") {
        write_count_csv(out, o.from, o.to, fams);
        return kExitOk;
    }
    if (o.from < 0 || o.from > o.to) throw DomainError("table range must satisfy 0 <= from <= to");
    std::vector<CountTable> tables;
    for (FamilyId f : fams) tables.push_back(count_table(f, o.to));
    ordered_json rows = ordered_json::array();
    for (int n = o.from; n <= o.to; ++n) {
        ordered_json row{{"n", n}};
        for (const auto& t : tables) row["p_" + family_name(t.family)] = t.counts[n].get_str();
        rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const FamilyId f = parse_family(o.family);
    const auto fmt = resolve_format(o, "text", {"text", "json"});
    if (fmt == "json") {
        ordered_json arr = ordered_json::array();
        for_each_in_family(f, o.n, [&](const Partition& p) { arr.push_back(parts_json(p)); }, o.cutoff);
        out << arr.dump() << '\n';
    } else {
        for_each_in_family(f, o.n, [&](const Partition& p) { out << '(' << to_string(p) << ")\n"; }, o.cutoff);
    }
    return kExitOk;
}

int cmd_map(const Options& o, std::ostream& out) {
    const Partition in = parse_partition(o.input);
    const auto fmt = resolve_format(o, "text", {"text", "json"});
    CaseId c(1);
    Partition result;
    if (o.inverse) {
        const auto matched = classify_B(in);
        if (!matched) throw DomainError("(" + to_string(in) + ") matches no B_j predicate");
        c = *matched;
        result = apply_psi_inverse(c, in);
    } else {
        c = classify_A(in);
        result = apply_psi(c, in);
    }
    const char* key = o.inverse ? "preimage" : "image";
    if (fmt == "json") {
        ordered_json doc{{"case", c.index()}, {"input", parts_json(in)}, {key, parts_json(result)}};
        if (o.ferrers) {
            doc["ferrers_input"] = render_ferrers(in);
            doc[std::string("ferrers_") + key] = render_ferrers(result);
        }
        out << doc.dump() << '\n';
    } else {
        out << "case=" << c.index() << ' ' << key << '=' << to_string(result) << '\n';
        if (o.ferrers) out << '\n' << render_ferrers(in) << '\n' << render_ferrers(result);
    }
    return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const Partition in = parse_partition(o.input);
    const auto fmt = resolve_format(o, "text", {"text", "json"});
    std::optional<CaseId> c;
    if (o.side == "A") {
        c = classify_A(in);
    } else if (o.side == "B") {
        c = classify_B(in);
    } else {
        throw UsageError("--side must be A or B");
    }
    const bool defined = c && in.weight() >= case_min_n(*c);
    if (fmt == "json") {
        ordered_json doc{{"side", o.side}, {"input", parts_json(in)}, {"n", in.weight()}};
        doc["case"] = c ? ordered_json(c->index()) : ordered_json(nullptr);
        if (c) doc["min_n"] = case_min_n(*c);
        doc["defined"] = defined;
        out << doc.dump() << '\n';
    } else if (c) {
        out << "side=" << o.side << " case=" << c->index() << " n=" << in.weight() << " min_n=" << case_min_n(*c)
            << " defined=" << (defined ? "yes" : "no") << '\n';
    } else {
        out << "side=" << o.side << " case=none n=" << in.weight() << '\n';
    }
    return kExitOk;
}

int cmd_series(const Options& o, std::ostream& out) {
    if (o.order < 0) throw DomainError("--order must be nonnegative, got " + std::to_string(o.order));
    Series s(0);
    if (o.target == "eu_od") {
        s = series_p_eu_od(o.order);
    } else if (o.target == "od_eu") {
        s = series_p_od_eu(o.order);
    } else if (o.target == "diff") {
        s = diff_series(o.order);
    } else {
        throw UsageError("--target must be eu_od, od_eu or diff");
    }
    const auto fmt = resolve_format(o, "csv", {"csv", "json"});
    if (fmt == "json") {
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
        out << ordered_json{{"target", o.target}, {"order", o.order}, {"coefficients", coeffs}}.dump() << '\n';
    } else {
        write_series_csv(out, s);
    }
    return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
    const Partition w = witness(o.n);
    const auto fmt = resolve_format(o, "text", {"text", "json"});
    if (fmt == "json") {
        out << ordered_json{{"n", o.n}, {"witness", parts_json(w)}}.dump() << '\n';
    } else {
        out << to_string(w) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    VerificationReport r;
    if (o.mode == "exhaustive") {
        r = verify_exhaustive_range(o.from, o.to, o.cutoff);
    } else if (o.mode == "sampled") {
        if (o.from > o.to) throw DomainError("empty weight range");
        r = verify_sampled(o.from, o.samples, o.seed);
        for (int n = o.from + 1; n <= o.to; ++n) r.merge(verify_sampled(n, o.samples, o.seed));
    } else if (o.mode == "inequality") {
        CountMethod m = CountMethod::both;
        if (o.method == "series") {
            m = CountMethod::series;
        } else if (o.method == "dp") {
            m = CountMethod::dp;
        } else if (o.method != "both") {
            throw UsageError("--method must be series, dp or both");
        }
        r = verify_inequality(o.from, o.to, m);
    } else if (o.mode == "witnesses") {
        r = verify_witnesses(o.from, o.to);
    } else {
        throw UsageError("--mode must be exhaustive, sampled, inequality or witnesses");
    }
    const auto fmt = resolve_format(o, "text", {"text", "json"});
    if (fmt == "json") {
        write_report_json(out, r);
    } else {
        write_report_text(out, r);
    }
    return r.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Parity-separated partitions: counts, series, the injection psi and its verification", "parsep"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"auto", "text", "csv", "json"}));

    auto* count = app.add_subcommand("count", "Exact count of one family at weight n");
    count->add_option("--family", o.family, "Family name, e.g. od_eu")->required();
    count->add_option("--n", o.n, "Weight")->required();

    auto* table = app.add_subcommand("table", "CSV table of family counts");
    table->add_option("--from", o.from, "First weight")->required();
    table->add_option("--to", o.to, "Last weight")->required();
    table->add_option("--families", o.families, "all, or a comma separated list");

    auto* enumerate = app.add_subcommand("enumerate", "List the members of a family at weight n");
    enumerate->add_option("--family", o.family, "Family name")->required();
    enumerate->add_option("--n", o.n, "Weight")->required();
    enumerate->add_option("--cutoff", o.cutoff, "Largest weight accepted");

    auto* map = app.add_subcommand("map", "Apply psi, or its inverse, to a partition");
    map->add_option("--input", o.input, "Partition, e.g. \"8,8,8,7,5,3\" or \"9,7,5,2^4\"")->required();
    map->add_flag("--inverse", o.inverse, "Apply psi^-1 to a member of B_eu^od");
    map->add_flag("--ferrers", o.ferrers, "Also print Ferrers diagrams");

    auto* classify = app.add_subcommand("classify", "Case of a partition on the A or B side");
    classify->add_option("--input", o.input, "Partition")->required();
    classify->add_option("--side", o.side, "A or B");

    auto* series = app.add_subcommand("series", "Generating-function coefficients as k,coefficient rows");
    series->add_option("--target", o.target, "eu_od, od_eu or diff")->required();
    series->add_option("--order", o.order, "Truncation order");

    auto* wit = app.add_subcommand("witness", "Strictness witness in B_eu^od(n) outside every B_j");
    wit->add_option("--n", o.n, "Weight, at least 373")->required();

    auto* verify = app.add_subcommand("verify", "Run a verification workflow");
    verify->add_option("--mode", o.mode, "exhaustive, sampled, inequality or witnesses")->required();
    verify->add_option("--from", o.from, "First weight")->required();
    verify->add_option("--to", o.to, "Last weight")->required();
    verify->add_option("--samples", o.samples, "Draws per weight (sampled mode)");
    verify->add_option("--seed", o.seed, "Random seed (sampled mode)");
    verify->add_option("--method", o.method, "series, dp or both (inequality mode)");
    verify->add_option("--cutoff", o.cutoff, "Enumeration cutoff (exhaustive mode)");

    std::vector<const char*> argv{"parsep"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*count) return cmd_count(o, out);
        if (*table) return cmd_table(o, out);
        if (*enumerate) return cmd_enumerate(o, out);
        if (*map) return cmd_map(o, out);
        if (*classify) return cmd_classify(o, out);
        if (*series) return cmd_series(o, out);
        if (*wit) return cmd_witness(o, out);
        if (*verify) return cmd_verify(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const InvariantViolation& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace parsep::cli
