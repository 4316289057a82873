// Command-line front end.  Every run is reproducible from its argument
// vector; certificates and reports are emitted as canonical JSON.
//
// Exit codes: 0 affirmative / verified, 1 definite negative, 2
// inconclusive (budget exhausted), 64 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitterlab/splitterlab.hpp"

namespace {

using namespace splitterlab;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

u64 default_budget() {
    if (const char* env = std::getenv("SPLITTER_LAB_BUDGET")) {
        char* end = nullptr;
        u64 v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultNodeBudget;
}

std::pair<u64, u64> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("range", "expected the form a..b");
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
}

std::vector<u64> parse_u64_list(const std::string& text) {
    std::vector<u64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoull(item));
    return out;
}

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("file", "cannot open " + path);
    ordered_json j;
    in >> j;
    return j;
}

void emit(const ordered_json& j, bool json_mode, const std::string& plain) {
    if (json_mode)
        std::cout << j.dump() << "\n";
    else
        std::cout << plain << "\n";
}

struct Options {
    bool json = false;
    unsigned jobs = 1;
    u64 budget = default_budget();
};

int run_verify(const std::string& mult, u64 modulus, const std::string& splitters,
               const Options& opt) {
    MultiplierSet m = parse_multipliers(mult);
    auto s = parse_u64_list(splitters);
    bool ok = verify_splitting(m, s, modulus);
    auto cert = make_certificate(m, s, modulus);
    emit(certificate_to_json(cert, ok), opt.json,
         ok ? "verified: M splits Z_" + std::to_string(modulus)
            : "not a splitting of Z_" + std::to_string(modulus));
    return ok ? kExitOk : kExitNegative;
}

int run_search(const std::string& mult, std::optional<u64> modulus,
               std::optional<std::string> prime_range, const Options& opt) {
    MultiplierSet m = parse_multipliers(mult);
    std::vector<u64> moduli;
    if (modulus) {
        moduli.push_back(*modulus);
    } else if (prime_range) {
        auto [lo, hi] = parse_range(*prime_range);
        for (u64 p = lo; p <= hi; ++p)
            if (is_prime(p)) moduli.push_back(p);
    } else {
        throw CLI::RequiredError("--modulus or --prime-range");
    }

    bool guard = nonexistence_guard(m);
    ordered_json out = ordered_json::array();
    bool any_found = false, any_inconclusive = false;
    for (u64 n : moduli) {
        auto r = find_splitter(m, n, opt.budget);
        if (r.found()) {
            any_found = true;
            out.push_back(certificate_to_json(r.value));
        } else if (r.inconclusive()) {
            any_inconclusive = true;
        }
    }
    std::string summary = any_found
                              ? std::to_string(out.size()) + " splitting(s) found"
                              : (guard ? "none (parity guard + exhaustion)" : "none found");
    emit(out, opt.json, summary);
    if (any_found) return kExitOk;
    return any_inconclusive ? kExitInconclusive : kExitNegative;
}

int run_scan_spec(const std::string& spec_path, const std::string& range, u64 limit,
                  const Options& opt) {
    auto spec = character_spec_from_json(load_json(spec_path));
    auto [lo, hi] = parse_range(range);
    auto primes = scan_primes_for_spec(spec, lo, hi, limit, opt.jobs);
    ordered_json j = primes;
    std::string plain;
    for (u64 p : primes) plain += std::to_string(p) + " ";
    emit(j, opt.json, primes.empty() ? "no matching primes" : plain);
    return primes.empty() ? kExitNegative : kExitOk;
}

int run_scan_table(const std::string& table_path, u64 bound, u64 limit, const Options& opt) {
    auto table = log_table_from_json(load_json(table_path));
    auto certs = find_split_primes(table, bound, limit, opt.jobs, opt.budget);
    ordered_json j = ordered_json::array();
    std::string plain;
    for (const auto& c : certs) {
        j.push_back(certificate_to_json(c));
        plain += "p=" + std::to_string(c.modulus) + " |S|=" + std::to_string(c.splitters.size()) + "  ";
    }
    emit(j, opt.json, certs.empty() ? "no split primes within bound" : plain);
    return certs.empty() ? kExitNegative : kExitOk;
}

int run_scan_bootstrap(const std::string& mult, u64 from_prime, u64 bound, u64 limit,
                       const Options& opt) {
    MultiplierSet m = parse_multipliers(mult);
    auto certs = bootstrap_from_prime(m, from_prime, bound, limit, opt.jobs, opt.budget);
    ordered_json j = ordered_json::array();
    std::string plain;
    for (const auto& c : certs) {
        j.push_back(certificate_to_json(c));
        plain += "p=" + std::to_string(c.modulus) + " |S|=" + std::to_string(c.splitters.size()) + "  ";
    }
    emit(j, opt.json, certs.empty() ? "no split primes within bound" : plain);
    return certs.empty() ? kExitNegative : kExitOk;
}

int run_logarithm_table(const std::string& table_path, const Options& opt) {
    auto t = log_table_from_json(load_json(table_path));
    bool law = is_logarithm(t);
    bool inj = is_injective(t);
    bool bij = is_bijective(t);
    auto comp = law && inj ? direct_logarithm_complement(t, opt.budget)
                           : SearchResult<std::vector<u64>>::make_none(0);
    ordered_json j;
    j["logarithm"] = law;
    j["injective"] = inj;
    j["bijective"] = bij;
    j["direct"] = comp.found();
    j["complement"] = comp.found() ? ordered_json(comp.value) : ordered_json::array();
    std::string plain = std::string("logarithm=") + (law ? "yes" : "no") +
                        " injective=" + (inj ? "yes" : "no") +
                        " bijective=" + (bij ? "yes" : "no") +
                        " direct=" + (comp.found() ? "yes" : "no");
    emit(j, opt.json, plain);
    return law ? kExitOk : kExitNegative;
}

int run_logarithm_enumerate(const std::string& triple, const Options& opt) {
    auto parts = parse_u64_list(triple);
    if (parts.size() != 3)
        throw CLI::ValidationError("--enumerate", "expected k1,k2,k");
    auto tables = enumerate_logarithms(i64(parts[0]), i64(parts[1]), parts[2]);
    ordered_json j = ordered_json::array();
    for (const auto& t : tables) j.push_back(log_table_to_json(t));
    emit(j, opt.json, std::to_string(tables.size()) + " bijective logarithm(s)");
    return tables.empty() ? kExitNegative : kExitOk;
}

int run_km_check(const std::string& table_path, const std::string& mode_name, const Options& opt) {
    auto t = log_table_from_json(load_json(table_path));
    KMMode mode = mode_name == "as-stated" ? KMMode::as_stated : KMMode::strict;
    auto v = km_check(t, mode);
    static const char* case_names[] = {"k odd",        "k=2m (m odd)", "k=4m",
                                       "-1, k=2m odd", "-1, k=4m odd", "-1, k=8m",
                                       "no clause"};
    ordered_json j;
    j["admissible"] = v.admissible;
    j["case"] = case_names[int(v.clause)];
    j["mode"] = mode_name;
    emit(j, opt.json,
         std::string(v.admissible ? "admissible" : "inadmissible") + " (" +
             case_names[int(v.clause)] + ", " + mode_name + ")");
    return v.admissible ? kExitOk : kExitNegative;
}

int run_lift(const std::string& table_path, const std::string& out_path, const Options& opt) {
    auto t = log_table_from_json(load_json(table_path));
    auto lifted = lift_8k(t, opt.budget);
    auto j = log_table_to_json(lifted);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << j.dump() << "\n";
        emit(j, opt.json, "lifted table written to " + out_path);
    } else {
        std::cout << j.dump() << "\n";
    }
    return kExitOk;
}

int run_radius(u64 k, const std::string& range, const Options& opt) {
    auto [lo, hi] = parse_range(range);
    ordered_json j = ordered_json::array();
    std::string plain;
    for (u64 p = lo; p <= hi; ++p) {
        if (!is_prime(p)) continue;
        auto rep = is_k_radius_prime(p, k);
        if (rep.is_radius()) {
            ordered_json item;
            item["p"] = p;
            item["k"] = k;
            item["powers"] = rep.powers;
            j.push_back(item);
            plain += std::to_string(p) + " ";
        }
    }
    emit(j, opt.json, j.empty() ? "no k-radius primes in range" : plain);
    return j.empty() ? kExitNegative : kExitOk;
}

int run_build_b1(u64 p, const std::string& variant, const std::string& signs_text,
                 const Options& opt) {
    B1Config cfg;
    cfg.variant = variant == "B" ? B1Config::Variant::B : B1Config::Variant::A;
    for (char c : signs_text) {
        if (c == '+') cfg.signs.push_back(1);
        else if (c == '-') cfg.signs.push_back(-1);
        else throw CLI::ValidationError("--signs", "expected a string of + and -");
    }
    auto r = build_B1(p, cfg);
    if (r.sign_conflict) {
        emit(ordered_json{{"p", p}, {"variant", variant}, {"sign_conflict", true}}, opt.json,
             "sign conflict: chosen signs collide");
        return kExitNegative;
    }
    ordered_json j;
    j["p"] = p;
    j["variant"] = variant;
    j["signs"] = cfg.signs;
    j["elements"] = r.elements;
    std::string plain = std::to_string(r.elements.size()) + " elements";
    emit(j, opt.json, plain);
    return kExitOk;
}

int run_structure_report(u64 p, const Options& opt) {
    auto r = verify_structure_theorem(p, opt.budget);
    if (r.inconclusive()) {
        emit(ordered_json{{"p", p}, {"inconclusive", true}}, opt.json,
             "inconclusive: enumeration budget exhausted");
        return kExitInconclusive;
    }
    const auto& rep = r.value;
    emit(structure_report_to_json(rep), opt.json,
         "p=" + std::to_string(rep.p) + " splitters=" + std::to_string(rep.splitters_found) +
             " family=" + rep.family);
    bool ok = rep.splitters_found == 0 ||
              (rep.all_in_family && rep.forced_ratio_ok && rep.forced_eight_ok);
    return ok ? kExitOk : kExitNegative;
}

int run_codec(const std::string& cert_path, std::optional<std::string> encode_arg,
              std::optional<std::string> decode_arg, const Options& opt) {
    auto cert = certificate_from_json(load_json(cert_path));
    auto spec = CodeSpec::from_certificate(cert);
    if (encode_arg) {
        auto message = encode_arg->empty() ? std::vector<u64>{} : parse_u64_list(*encode_arg);
        auto word = spec.encode(message);
        ordered_json j;
        j["word"] = word;
        std::string plain;
        for (u64 x : word) plain += std::to_string(x) + " ";
        emit(j, opt.json, plain);
        return kExitOk;
    }
    if (decode_arg) {
        auto received = parse_u64_list(*decode_arg);
        auto res = spec.decode(received);
        ordered_json j;
        j["status"] = res.status == CodeSpec::DecodeStatus::clean ? "clean"
                      : res.status == CodeSpec::DecodeStatus::corrected ? "corrected"
                                                                        : "uncorrectable";
        j["word"] = res.word;
        if (res.correction) {
            j["position"] = res.correction->position;
            j["magnitude"] = res.correction->magnitude;
        }
        std::string plain = j["status"].get<std::string>();
        if (res.correction)
            plain += " at position " + std::to_string(res.correction->position) +
                     ", magnitude " + std::to_string(res.correction->magnitude);
        emit(j, opt.json, plain);
        return res.status == CodeSpec::DecodeStatus::uncorrectable ? kExitNegative : kExitOk;
    }
    throw CLI::RequiredError("--encode or --decode");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"splitter-lab: splittings of cyclic groups, Kummer-Mills logarithm scans, "
                 "and limited-magnitude error codes"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    app.add_flag("--json", opt.json, "emit canonical JSON on stdout");
    app.add_option("--jobs", opt.jobs, "worker threads for range scans")->default_val(1);
    app.add_option("--budget", opt.budget, "search node budget")->default_val(default_budget());

    std::string mult, splitters, range, spec_path, table_path, out_path, variant = "A",
                signs_text, mode_name = "strict", enumerate_triple, cert_path;
    std::optional<u64> modulus_opt;
    std::optional<std::string> prime_range_opt, encode_arg, decode_arg;
    u64 modulus = 0, bound = 1000000, limit = 0, k = 2, from_prime = 0, p_arg = 7;

    auto* verify = app.add_subcommand("verify", "verify a claimed splitting");
    verify->add_option("--modulus", modulus)->required();
    verify->add_option("--multipliers", mult, "a..b or comma list")->required();
    verify->add_option("--splitters", splitters, "comma list")->required();

    auto* search = app.add_subcommand("search", "exhaustive splitter search");
    search->add_option("--multipliers", mult)->required();
    auto* search_mod = search->add_option("--modulus", modulus_opt);
    search->add_option("--prime-range", prime_range_opt, "a..b")->excludes(search_mod);

    auto* scan = app.add_subcommand("scan", "prime scans: character specs, split primes, bootstrap");
    auto* scan_spec = scan->add_option("--spec", spec_path, "character spec JSON file");
    auto* scan_table = scan->add_option("--table", table_path, "logarithm table JSON file");
    auto* scan_mult = scan->add_option("--multipliers", mult, "bootstrap multiplier set");
    scan->add_option("--range", range, "a..b for character scans");
    scan->add_option("--bound", bound, "prime bound for table/bootstrap scans");
    scan->add_option("--limit", limit, "stop after this many results (0 = all)");
    scan->add_option("--from-prime", from_prime, "base prime q for bootstrap");
    scan_spec->excludes(scan_table)->excludes(scan_mult);
    scan_table->excludes(scan_mult);

    auto* logarithm = app.add_subcommand("logarithm", "inspect or enumerate logarithm tables");
    logarithm->add_option("--table", table_path);
    logarithm->add_option("--enumerate", enumerate_triple, "k1,k2,k");

    auto* kmchk = app.add_subcommand("km-check", "Kummer-Mills admissibility of a table");
    kmchk->add_option("--table", table_path)->required();
    kmchk->add_option("--mode", mode_name)->check(CLI::IsMember({"strict", "as-stated"}));

    auto* lift = app.add_subcommand("lift", "8k lift of a direct logarithm");
    lift->add_option("--table", table_path)->required();
    lift->add_option("--out", out_path);

    auto* radius = app.add_subcommand("radius", "scan for k-radius primes");
    radius->add_option("--k", k)->required();
    radius->add_option("--range", range, "a..b")->required();

    auto* buildb1 = app.add_subcommand("build-b1", "coset-family splitter candidate for [-1,5]*");
    buildb1->add_option("--p", p_arg)->required();
    buildb1->add_option("--variant", variant)->check(CLI::IsMember({"A", "B"}));
    buildb1->add_option("--signs", signs_text)->required();

    auto* structure = app.add_subcommand("structure-report", "splitter structure report for [-1,5]*");
    structure->add_option("--p", p_arg)->required();

    auto* codec = app.add_subcommand("codec", "encode/decode with a certificate-backed code");
    codec->add_option("--cert", cert_path)->required();
    codec->add_option("--encode", encode_arg, "message symbols, comma list");
    codec->add_option("--decode", decode_arg, "received symbols, comma list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*verify) return run_verify(mult, modulus, splitters, opt);
        if (*search) return run_search(mult, modulus_opt, prime_range_opt, opt);
        if (*scan) {
            if (!spec_path.empty()) return run_scan_spec(spec_path, range, limit, opt);
            if (!table_path.empty()) return run_scan_table(table_path, bound, limit, opt);
            if (!mult.empty()) return run_scan_bootstrap(mult, from_prime, bound, limit, opt);
            std::cerr << "scan: one of --spec, --table, --multipliers is required\n";
            return kExitUsage;
        }
        if (*logarithm) {
            if (!enumerate_triple.empty()) return run_logarithm_enumerate(enumerate_triple, opt);
            if (!table_path.empty()) return run_logarithm_table(table_path, opt);
            std::cerr << "logarithm: one of --table, --enumerate is required\n";
            return kExitUsage;
        }
        if (*kmchk) return run_km_check(table_path, mode_name, opt);
        if (*lift) return run_lift(table_path, out_path, opt);
        if (*radius) return run_radius(k, range, opt);
        if (*buildb1) return run_build_b1(p_arg, variant, signs_text, opt);
        if (*structure) return run_structure_report(p_arg, opt);
        if (*codec) return run_codec(cert_path, encode_arg, decode_arg, opt);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    }
    return kExitUsage;
}
