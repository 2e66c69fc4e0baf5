// Command-line front end: verify predictions over parameter grids and
// inspect individual modules.

#include <subrao/harness.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <regex>

namespace {

using namespace subrao;
using harness::UsageError;

std::size_t parse_number(const std::string& s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not a number: " + s);
    return v;
}

// "3,5,7", "2..6" or a mix such as "2..4,8".
std::vector<std::size_t> parse_list(const std::string& text) {
    static const std::regex range(R"((\d+)\.\.(\d+))");
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        std::smatch m;
        if (std::regex_match(item, m, range)) {
            const std::size_t lo = parse_number(m[1]), hi = parse_number(m[2]);
            if (lo > hi) throw UsageError("empty range: " + item);
            for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(parse_number(item));
        }
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

std::vector<harness::Check> parse_checks(const std::string& text) {
    if (text == "all") return harness::all_checks();
    std::vector<harness::Check> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(harness::parse_check(item));
    return out;
}

std::uint32_t checked_prime(std::size_t p) {
    if (p == 2 || !subrao::detail::is_odd_prime(p) || p >= 65536)
        throw UsageError("p = " + std::to_string(p) + " is not an odd prime below 2^16");
    return static_cast<std::uint32_t>(p);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path);
}

struct VerifyOptions {
    std::string p = "3", n = "2", checks = "all", field = "auto", out, csv, cache;
    std::uint64_t seed = 42;
    unsigned threads = 1;
    bool timings = false;
};

int run_verify(const VerifyOptions& o) {
    std::vector<harness::VerificationJob> jobs;
    const auto checks = parse_checks(o.checks);
    const auto field = harness::parse_field(o.field);
    for (std::size_t p : parse_list(o.p))
        for (std::size_t n : parse_list(o.n)) {
            harness::VerificationJob job{checked_prime(p), n, field, o.seed, checks};
            harness::validate(job);
            jobs.push_back(job);
        }
    std::optional<harness::Cache> cache;
    if (auto dir = harness::Cache::directory(o.cache.empty() ? std::nullopt : std::optional(o.cache))) cache.emplace(*dir);

    const auto g = harness::run_grid(jobs, cache ? &*cache : nullptr, o.threads, o.timings);
    const std::string text = g.report.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        write_file(o.out, text);
        std::string csv = o.csv;
        if (csv.empty()) csv = std::filesystem::path(o.out).replace_extension(".csv").string();
        write_file(csv, harness::csv_summary(g.report));
        for (const auto& job : g.report["jobs"]) {
            std::cout << "p=" << job["p"] << " n=" << job["n"] << " " << job["field"].get<std::string>() << ": "
                      << job["status"].get<std::string>();
            for (const auto& [name, c] : job["checks"].items())
                if (c["status"] != "verified") std::cout << " " << name << "=" << c["status"].get<std::string>();
            std::cout << "\n";
        }
    }
    bool mismatch = false;
    for (const auto& job : g.report["jobs"]) mismatch |= job["status"] != "verified";
    return mismatch ? 1 : 0;
}

// Calls f with the H^1 module over the field selected for (p, n).
template <class F>
void with_h1(std::uint32_t p, std::size_t n, harness::FieldMode mode, std::uint64_t seed, F f) {
    harness::VerificationJob job{p, n, mode, seed, {}};
    harness::validate(job);
    if (harness::resolve_field(job) == harness::FieldMode::Exact) {
        f(build_h1(std::make_shared<const PolyModule<RationalFunction>>(exact_poly_module(p, n))), "exact");
    } else {
        const auto m = ExtensionField::degree_for(
            p, std::max<unsigned long long>(2 * predict::der_dimension(p, n) + 16, 1u << 16));
        auto F_ = ExtensionField::create(p, m);
        const ExtElement s = F_->from_code(harness::specialization_codes(job, F_->order()).front());
        f(build_h1(std::make_shared<const PolyModule<ExtElement>>(p, n, s)), "specialize");
    }
}

int run_decompose(std::size_t p_in, std::size_t n, const std::string& group, const std::string& field,
                  std::uint64_t seed) {
    const std::uint32_t p = checked_prime(p_in);
    if (group != "A" && group != "G") throw UsageError("--group must be A or G");
    int status = 0;
    with_h1(p, n, harness::parse_field(field), seed, [&](const auto& h, const char* mode) {
        std::cout << "H^1 for p=" << p << " n=" << n << " (" << mode << "), dimension " << h.dim() << "\n";
        if (group == "A") {
            const auto profile = jordan_profile(h.sigma_A, p);
            std::cout << "eA: " << profile << "\n";
            if (n >= 2) {
                const bool ok = profile == JordanProfile(predict::predict_KA(p, n).blocks);
                std::cout << "predicted: " << JordanProfile(predict::predict_KA(p, n).blocks)
                          << (ok ? " (agrees)" : " (differs)") << "\n";
                status = ok ? 0 : 1;
            }
            return;
        }
        const auto rp = rank_profile(h.sigma_A, h.sigma_B, p);
        std::cout << "rank profile rank((eA-1)^a (eB-1)^b), rows a, columns b:\n";
        for (const auto& row : rp.table) {
            for (std::size_t b = 0; b < row.size(); ++b) std::cout << (b ? " " : "  ") << row[b];
            std::cout << "\n";
        }
        std::cout << "free summands: " << rp.at(p - 1, p - 1) << "\n";
        if (n >= 2) {
            const auto pred = predict::predict_KG(p, n);
            const bool ok = match_decomposition(rp, h.dim(), harness::to_reference(pred.summands), p);
            std::cout << "predicted:";
            for (const auto& s : harness::to_reference(pred.summands)) std::cout << " " << s.name();
            std::cout << (ok ? " (rank profiles agree)" : " (rank profiles differ)") << "\n";
            status = ok ? 0 : 1;
        }
    });
    return status;
}

int run_predict(std::size_t p_in, std::size_t n) {
    const std::uint32_t p = checked_prime(p_in);
    if (n < 1) throw UsageError("n must be at least 1");
    harness::json j{{"p", p}, {"n", n}, {"h1_dim", predict::h1_dimension(p, n)},
                    {"der_dim", predict::der_dimension(p, n)},
                    {"der_A", harness::blocks_to_json(predict::predict_der(p, n).blocks)},
                    {"stalk", harness::blocks_to_json(predict::predict_stalk(p, n).blocks)},
                    {"invariants_G", predict::predicted_G_invariants(p, n)},
                    {"norm_corrected_invariants_G", predict::norm_corrected_G_invariants(p, n)}};
    if (n >= 2) {
        const auto ka = predict::predict_KA(p, n);
        const auto kg = predict::predict_KG(p, n);
        j["h1_A"] = harness::blocks_to_json(ka.blocks);
        j["h1_G"] = harness::summands_to_json(kg.summands, p);
        j["free_rank"] = predict::predicted_free_rank(p, n);
        j["nakajima"] = harness::blocks_to_json(predict::nakajima_multiplicities(p, n).blocks);
        j["r0_convention"] = ka.r0_convention;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_stalk(std::size_t p_in, std::size_t n) {
    const std::uint32_t p = checked_prime(p_in);
    if (n < 1) throw UsageError("n must be at least 1");
    const auto computed = stalk_profile(p, n);
    const JordanProfile predicted(predict::predict_stalk(p, n).blocks);
    std::cout << "stalk p=" << p << " n=" << n << ": " << computed << "\n"
              << "predicted: " << predicted << (computed == predicted ? " (agrees)" : " (differs)") << "\n";
    return computed == predicted ? 0 : 1;
}

int run_tensor(std::size_t p_in, std::size_t a, std::size_t b) {
    const std::uint32_t p = checked_prime(p_in);
    if (a < 1 || b < 1 || a > p || b > p) throw UsageError("block sizes must lie in [1, p]");
    std::cout << "J_" << a << " (x) J_" << b << " = " << tensor_profile(a, b, p) << "\n";
    return 0;
}

int run_abelian(std::size_t p_in) {
    const std::uint32_t p = checked_prime(p_in);
    const auto rep = build_integer_rep(p);
    const auto s = mod_p_structure(rep);
    const std::size_t inv_A = integer_invariants(rep, Subgroup::A), inv_G = integer_invariants(rep, Subgroup::G);
    const bool faithful = check_faithful(rep);
    std::cout << "Gamma^ab has rank " << rep.rank() << "\n"
              << "rank of A-invariants: " << inv_A << "\n"
              << "rank of G-invariants: " << inv_G << "\n"
              << "faithful: " << (faithful ? "yes" : "no") << "\n"
              << "mod " << p << ", eA: " << s.profile_A << "\n"
              << "mod " << p << ", dim of G-invariants: " << s.invariants_G << "\n"
              << "indecomposable: " << (s.indecomposable ? "yes" : "no") << "\n";
    JordanProfile want;
    want.add(p - 1, p - 1);
    const bool ok = inv_A == p - 1 && inv_G == 1 && faithful && s.profile_A == want && s.indecomposable;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modular structure of H^1 for the Fermat-curve subgroup"};
    app.require_subcommand(1);

    VerifyOptions v;
    auto* verify = app.add_subcommand("verify", "Compare computed modules with the predictions over a grid");
    verify->add_option("--p", v.p, "Primes, e.g. 3,5,7")->capture_default_str();
    verify->add_option("--n", v.n, "Values of n, e.g. 2..6")->capture_default_str();
    verify->add_option("--checks", v.checks, "all or a list of KA,KG,DER,STALK,N1,INV,QMATRIX,NAKAJIMA")
        ->capture_default_str();
    verify->add_option("--field", v.field, "auto, exact or specialize")->capture_default_str();
    verify->add_option("--seed", v.seed, "Seed for specialization points")->capture_default_str();
    verify->add_option("--out", v.out, "JSON report path (stdout if omitted)");
    verify->add_option("--csv", v.csv, "CSV summary path (defaults to the report path with .csv)");
    verify->add_option("--cache", v.cache, "Cache directory; SUBRAO_CACHE takes precedence");
    verify->add_option("--threads", v.threads, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
    verify->add_flag("--timings", v.timings, "Record elapsed time per job (reports are then not reproducible)");

    std::size_t p = 3, n = 2, a = 1, b = 1;
    std::string group = "A", field = "auto";
    std::uint64_t seed = 42;
    auto* decompose = app.add_subcommand("decompose", "Print the structure of H^1 as a K[A]- or K[G]-module");
    decompose->add_option("--p", p)->required();
    decompose->add_option("--n", n)->required();
    decompose->add_option("--group", group, "A or G")->capture_default_str();
    decompose->add_option("--field", field)->capture_default_str();
    decompose->add_option("--seed", seed)->capture_default_str();

    auto* tensor = app.add_subcommand("tensor", "Decompose J_a (x) J_b");
    tensor->add_option("--p", p)->required();
    tensor->add_option("--a", a)->required();
    tensor->add_option("--b", b)->required();

    auto* predict_cmd = app.add_subcommand("predict", "Print the closed-form predictions as JSON");
    predict_cmd->add_option("--p", p)->required();
    predict_cmd->add_option("--n", n)->required();

    auto* stalk = app.add_subcommand("stalk", "Structure of the stalk t k[[t]] / t^{2n}");
    stalk->add_option("--p", p)->required();
    stalk->add_option("--n", n)->required();

    auto* abelian = app.add_subcommand("abelian", "The conjugation action on the abelianized group");
    abelian->add_option("--p", p)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return run_verify(v);
        if (*decompose) return run_decompose(p, n, group, field, seed);
        if (*tensor) return run_tensor(p, a, b);
        if (*predict_cmd) return run_predict(p, n);
        if (*stalk) return run_stalk(p, n);
        if (*abelian) return run_abelian(p);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EvenPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
