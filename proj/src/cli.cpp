#include "degseq/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "degseq/bounds.hpp"
#include "degseq/graphicality.hpp"
#include "degseq/search.hpp"
#include "degseq/sequence.hpp"
#include "degseq/table_data.hpp"

namespace degseq::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

std::string status_word(CertStatus status) {
    switch (status) {
        case CertStatus::CertifiedGraphic: return "certified graphic";
        case CertStatus::Inconclusive: return "inconclusive";
        case CertStatus::NotApplicable: return "not applicable";
    }
    return "unknown";
}

std::string status_key(CertStatus status) {
    switch (status) {
        case CertStatus::CertifiedGraphic: return "certified_graphic";
        case CertStatus::Inconclusive: return "inconclusive";
        case CertStatus::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

std::string reason_key(VerdictReason reason) {
    switch (reason) {
        case VerdictReason::ErdosGallaiPass: return "erdos_gallai_pass";
        case VerdictReason::ErdosGallaiFail: return "erdos_gallai_fail";
        case VerdictReason::OddSum: return "odd_sum";
        case VerdictReason::ValueOutOfRange: return "value_out_of_range";
    }
    return "unknown";
}

json verdict_json(const Verdict& v) {
    json j;
    j["graphic"] = v.graphic;
    j["reason"] = reason_key(v.reason);
    if (v.reason == VerdictReason::ErdosGallaiFail) {
        j["fail_k"] = v.fail_k;
        j["lhs"] = v.lhs;
        j["rhs"] = v.rhs;
    }
    if (v.reason == VerdictReason::ValueOutOfRange) j["offending_value"] = v.offending_value;
    return j;
}

json stats_json(const SequenceStats& st) {
    json j;
    j["n"] = st.n;
    j["sum"] = st.sum;
    j["mean"] = st.mean.str();
    j["max_degree"] = st.max_degree;
    j["min_degree"] = st.min_degree;
    j["spread"] = st.spread;
    j["rg"] = st.rg.str();
    return j;
}

json d_bound_json(const Certificate& cert) {
    json j;
    j["status"] = status_key(cert.status);
    if (!cert.note.empty()) j["note"] = cert.note;
    if (cert.d_value) j["d_value"] = cert.d_value->str();
    return j;
}

json regularity_json(const Certificate& cert) {
    json j;
    j["status"] = status_key(cert.status);
    if (!cert.note.empty()) j["note"] = cert.note;
    if (cert.case_index != 0) j["thm2_case"] = cert.case_index;
    if (cert.mean) j["mean"] = cert.mean->str();
    if (cert.rg) j["rg"] = cert.rg->str();
    if (cert.bound) j["bound"] = cert.bound->str();
    return j;
}

std::string d_bound_text(const Certificate& cert) {
    std::string out = status_word(cert.status);
    if (cert.status == CertStatus::NotApplicable) return out + " (" + cert.note + ")";
    if (!cert.note.empty()) return out + " (" + cert.note + ")";
    return out + " (D = " + cert.d_value->str() + ")";
}

std::string regularity_text(const Certificate& cert) {
    if (cert.status == CertStatus::NotApplicable) return "not applicable (" + cert.note + ")";
    std::string rel = cert.status == CertStatus::CertifiedGraphic ? " <= " : " > ";
    return status_word(cert.status) + " (case " + std::to_string(cert.case_index) +
           ": rg = " + cert.rg->str() + rel + "bound " + cert.bound->str() + ")";
}

enum class Format { Text, Json, Csv, Md };

// RFC-4180 style: quote a field when it contains commas or quotes.
std::string csv_field(const std::string& value) {
    if (value.find(',') == std::string::npos && value.find('"') == std::string::npos)
        return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted.push_back('"');
        quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
}

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "md") return Format::Md;
    throw CLI::ValidationError("--format", "unknown format '" + name + "'");
}

void require_text_or_json(Format f, const std::string& subcommand) {
    if (f != Format::Text && f != Format::Json)
        throw CLI::ValidationError(subcommand, "only text and json formats are supported here");
}

void print_rows(std::ostream& out, const std::vector<SearchRow>& rows, Format format) {
    switch (format) {
        case Format::Text: {
            out << "n     m     witness\n";
            for (const auto& r : rows) {
                std::ostringstream line;
                line << std::left << std::setw(6) << r.n << std::setw(6) << r.m
                     << format_sequence(r.witness);
                out << line.str() << "\n";
            }
            break;
        }
        case Format::Csv:
            out << "n,m,witness\n";
            for (const auto& r : rows)
                out << r.n << "," << r.m << "," << csv_field(format_sequence(r.witness)) << "\n";
            break;
        case Format::Json: {
            json arr = json::array();
            for (const auto& r : rows) {
                json j;
                j["n"] = r.n;
                j["m"] = r.m;
                j["witness"] = format_sequence(r.witness);
                arr.push_back(std::move(j));
            }
            out << arr.dump(2) << "\n";
            break;
        }
        case Format::Md:
            out << "| n | m | witness |\n|---|---|---|\n";
            for (const auto& r : rows)
                out << "| " << r.n << " | " << r.m << " | " << format_sequence(r.witness)
                    << " |\n";
            break;
    }
}

void print_report(std::ostream& out, const VerificationReport& report, Format format) {
    switch (format) {
        case Format::Text: {
            out << "n     m     computed  status\n";
            for (const auto& r : report.rows) {
                std::ostringstream line;
                line << std::left << std::setw(6) << r.n << std::setw(6) << r.expected_m
                     << std::setw(10) << r.computed_m << r.status();
                out << line.str() << "\n";
            }
            size_t ok = static_cast<size_t>(
                std::count_if(report.rows.begin(), report.rows.end(),
                              [](const VerificationRow& r) { return r.ok(); }));
            out << ok << "/" << report.rows.size() << " rows verified\n";
            break;
        }
        case Format::Csv:
            out << "n,m,witness,status\n";
            for (const auto& r : report.rows)
                out << r.n << "," << r.expected_m << "," << csv_field(r.witness) << ","
                    << csv_field(r.status()) << "\n";
            break;
        case Format::Json: {
            json arr = json::array();
            for (const auto& r : report.rows) {
                json j;
                j["n"] = r.n;
                j["expected_m"] = r.expected_m;
                j["computed_m"] = r.computed_m;
                j["witness"] = r.witness;
                j["witness_ok"] = r.witness_check.ok();
                j["ok"] = r.ok();
                j["status"] = r.status();
                arr.push_back(std::move(j));
            }
            out << arr.dump(2) << "\n";
            break;
        }
        case Format::Md:
            out << "| n | m | witness | status |\n|---|---|---|---|\n";
            for (const auto& r : report.rows)
                out << "| " << r.n << " | " << r.expected_m << " | " << r.witness << " | "
                    << r.status() << " |\n";
            break;
    }
}

struct Options {
    std::string sequence_text;
    std::string format = "text";
    int family_n = 0;
    int family_mean = 0;
    int family_c = 0;
    int from = 4;
    int to = 10;
    std::string mode = "fast";
    int jobs = 0;
};

SearchMode parse_mode(const std::string& mode) {
    if (mode == "fast") return SearchMode::Fast;
    if (mode == "exhaustive") return SearchMode::Exhaustive;
    throw CLI::ValidationError("--mode", "unknown mode '" + mode + "'");
}

int run_check(const Options& opt, std::ostream& out) {
    Format format = parse_format(opt.format);
    require_text_or_json(format, "check");
    DegreeSequence seq = parse_sequence(opt.sequence_text);
    SequenceStats st = stats(seq);
    Verdict verdict = erdos_gallai_check(seq);
    Certificate d_cert = d_bound_certify(seq);
    Certificate r_cert = regularity_certify(seq);

    if (format == Format::Json) {
        json j;
        j["sequence"] = format_sequence(seq);
        j["stats"] = stats_json(st);
        j["erdos_gallai"] = verdict_json(verdict);
        j["d_bound"] = d_bound_json(d_cert);
        j["regularity"] = regularity_json(r_cert);
        out << j.dump(2) << "\n";
    } else {
        out << "sequence: " << format_sequence(seq) << "\n";
        out << "n: " << st.n << "  sum: " << st.sum << "  mean: " << st.mean.str()
            << "  max: " << st.max_degree << "  min: " << st.min_degree
            << "  spread: " << st.spread << "  rg: " << st.rg.str() << "\n";
        out << "erdos-gallai: " << verdict.describe() << "\n";
        out << "d-bound: " << d_bound_text(d_cert) << "\n";
        out << "regularity: " << regularity_text(r_cert) << "\n";
    }
    return kExitOk;
}

int run_stats(const Options& opt, std::ostream& out) {
    Format format = parse_format(opt.format);
    require_text_or_json(format, "stats");
    DegreeSequence seq = parse_sequence(opt.sequence_text);
    SequenceStats st = stats(seq);
    if (format == Format::Json) {
        json j;
        j["sequence"] = format_sequence(seq);
        j["stats"] = stats_json(st);
        out << j.dump(2) << "\n";
    } else {
        out << "sequence: " << format_sequence(seq) << "\n";
        out << "n: " << st.n << "\nsum: " << st.sum << "\nmean: " << st.mean.str()
            << "\nmax: " << st.max_degree << "\nmin: " << st.min_degree
            << "\nspread: " << st.spread << "\nrg: " << st.rg.str() << "\n";
    }
    return kExitOk;
}

int run_complement(const Options& opt, std::ostream& out) {
    Format format = parse_format(opt.format);
    require_text_or_json(format, "complement");
    DegreeSequence seq = parse_sequence(opt.sequence_text);
    DegreeSequence comp = complement(seq);
    if (format == Format::Json) {
        json j;
        j["sequence"] = format_sequence(seq);
        j["complement"] = format_sequence(comp);
        out << j.dump(2) << "\n";
    } else {
        out << format_sequence(comp) << "\n";
    }
    return kExitOk;
}

int run_realize(const Options& opt, std::ostream& out) {
    Format format = parse_format(opt.format);
    require_text_or_json(format, "realize");
    DegreeSequence seq = parse_sequence(opt.sequence_text);
    std::optional<Realization> real = havel_hakimi_realize(seq);
    if (format == Format::Json) {
        json j;
        j["sequence"] = format_sequence(seq);
        j["graphic"] = real.has_value();
        if (real) {
            json edges = json::array();
            for (const auto& [u, v] : real->edges) edges.push_back(json::array({u, v}));
            j["edges"] = std::move(edges);
        } else {
            j["verdict"] = erdos_gallai_check(seq).describe();
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    if (!real) {
        out << "not graphic: " << erdos_gallai_check(seq).describe() << "\n";
        return kExitOk;
    }
    for (const auto& [u, v] : real->edges) out << u << " " << v << "\n";
    return kExitOk;
}

int run_family(const Options& opt, std::ostream& out) {
    Format format = parse_format(opt.format);
    require_text_or_json(format, "family");
    DegreeSequence seq = family_sequence(opt.family_n, opt.family_mean, opt.family_c);
    Verdict verdict = erdos_gallai_check(seq);
    if (format == Format::Json) {
        json j;
        j["n"] = opt.family_n;
        j["mean"] = opt.family_mean;
        j["c"] = opt.family_c;
        j["sequence"] = format_sequence(seq);
        j["graphic"] = verdict.graphic;
        j["verdict"] = verdict.describe();
        out << j.dump(2) << "\n";
    } else {
        out << "sequence: " << format_sequence(seq) << "\n";
        out << "verdict: " << verdict.describe() << "\n";
    }
    return kExitOk;
}

int run_mn(const Options& opt, std::ostream& out) {
    Format format = parse_format(opt.format);
    SearchConfig config{parse_mode(opt.mode), opt.from, opt.to, opt.jobs};
    std::vector<SearchRow> rows = compute_mn_range(config);
    print_rows(out, rows, format);
    return kExitOk;
}

int run_verify_table(const Options& opt, std::ostream& out) {
    Format format = parse_format(opt.format);
    SearchConfig config{parse_mode(opt.mode), opt.from, opt.to, opt.jobs};
    VerificationReport report = verify_table(config);
    print_report(out, report, format);
    return report.all_ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"degree sequence graphicality toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&opt](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format: text, json, csv, md")
            ->default_val("text");
    };

    CLI::App* check = app.add_subcommand(
        "check", "sequence statistics, exact verdict, and both certificates");
    check->add_option("sequence", opt.sequence_text, "degree sequence, e.g. 4^3,2^2")->required();
    add_format(check);

    CLI::App* stats_cmd = app.add_subcommand("stats", "sequence statistics");
    stats_cmd->add_option("sequence", opt.sequence_text)->required();
    add_format(stats_cmd);

    CLI::App* comp = app.add_subcommand("complement", "complement sequence (d -> n-1-d)");
    comp->add_option("sequence", opt.sequence_text)->required();
    add_format(comp);

    CLI::App* realize = app.add_subcommand(
        "realize", "construct a realizing graph (one 'u v' edge per line) or report non-graphic");
    realize->add_option("sequence", opt.sequence_text)->required();
    add_format(realize);

    CLI::App* family = app.add_subcommand(
        "family", "two-valued sequence ((mean+c)^(n/2),(mean-c)^(n/2)) and its verdict");
    family->add_option("--n", opt.family_n, "sequence length (even)")->required();
    family->add_option("--mean", opt.family_mean, "mean degree")->required();
    family->add_option("--c", opt.family_c, "deviation from the mean")->required();
    add_format(family);

    CLI::App* mn = app.add_subcommand("mn", "compute maximum graphic differences m(n)");
    mn->add_option("--from", opt.from, "first n")->default_val(4);
    mn->add_option("--to", opt.to, "last n")->default_val(10);
    mn->add_option("--mode", opt.mode, "fast or exhaustive (n <= 14)")->default_val("fast");
    mn->add_option("--jobs", opt.jobs, "worker threads (0 = auto)")->default_val(0);
    add_format(mn);

    CLI::App* verify = app.add_subcommand(
        "verify-table", "recompute m(n) and validate the shipped reference table");
    verify->add_option("--from", opt.from, "first n (>= 4)")->default_val(4);
    verify->add_option("--to", opt.to, "last n (<= 100)")->default_val(100);
    verify->add_option("--mode", opt.mode, "fast or exhaustive (n <= 14)")->default_val("fast");
    verify->add_option("--jobs", opt.jobs, "worker threads (0 = auto)")->default_val(0);
    add_format(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << app.help();
        return kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(opt, out);
        if (stats_cmd->parsed()) return run_stats(opt, out);
        if (comp->parsed()) return run_complement(opt, out);
        if (realize->parsed()) return run_realize(opt, out);
        if (family->parsed()) return run_family(opt, out);
        if (mn->parsed()) return run_mn(opt, out);
        if (verify->parsed()) return run_verify_table(opt, out);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "no subcommand given\n" << app.help();
    return kExitUsage;
}

}  // namespace degseq::cli
