#include <subrao/harness.hpp>

#include <gtest/gtest.h>

#include <fstream>

using namespace subrao;
using namespace subrao::harness;

namespace {

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("subrao_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

VerificationJob job(std::uint32_t p, std::size_t n, FieldMode f = FieldMode::Exact, std::uint64_t seed = 42,
                    std::vector<Check> checks = all_checks()) {
    return {p, n, f, seed, std::move(checks)};
}

}  // namespace

TEST(Serialization, Scalars) {
    EXPECT_EQ(to_json(Fp(4, 7)), json(4));
    const RationalFunction r(Poly(5, {1, 2}), Poly(5, {3, 1}));
    const json j = to_json(r);
    EXPECT_TRUE(j.contains("num") && j.contains("den"));
    const ScalarDecoder dec{5, nullptr};
    EXPECT_EQ(dec.rational(j), r);
    const auto F = ExtensionField::create(5, 3);
    const ScalarDecoder ext{5, F.get()};
    for (std::uint32_t c = 0; c < F->order(); c += 7) EXPECT_EQ(ext.ext(to_json(F->from_code(c))), F->from_code(c));
}

TEST(Serialization, Matrices) {
    const auto P = exact_poly_module(3, 2);
    const Matrix<RationalFunction> m = P.forward(1, 2);
    const ScalarDecoder dec{3, nullptr};
    EXPECT_EQ(matrix_from_json(matrix_to_json(m), P.s(), [&](const json& x) { return dec.rational(x); }), m);
    Matrix<Fp> f(2, 3, Fp(0, 5));
    f(1, 2) = Fp(3, 5);
    EXPECT_EQ(matrix_from_json(matrix_to_json(f), Fp(0, 5), [&](const json& x) { return Fp(x.get<long long>(), 5); }), f);
}

TEST(Serialization, Profiles) {
    const JordanProfile j(std::map<std::size_t, std::size_t>{{5, 7}, {2, 5}});
    EXPECT_EQ(profile_from_json(profile_to_json(j)), j);
    const RankProfile r = reference_rank_profile(ReferenceModule::quotient_by_A(2), 3);
    EXPECT_EQ(rank_profile_from_json(rank_profile_to_json(r)), r);
}

TEST(Cache, EmptyBundle) {
    TempDir dir;
    const Cache cache(dir.path());
    cache.store("empty", json::object());
    EXPECT_EQ(cache.load("empty"), json::object());
    EXPECT_FALSE(cache.load("missing").has_value());
}

TEST(Cache, ModuleBundleRoundTrip) {
    TempDir dir;
    const Cache cache(dir.path());
    json bundle;
    const auto P = std::make_shared<const PolyModule<RationalFunction>>(exact_poly_module(3, 2));
    const Analysis a = analyze(P, kProfileA | kRanks | kInvariants, &bundle);
    cache.store("b", bundle);
    const auto loaded = cache.load("b");
    ASSERT_TRUE(loaded.has_value());
    EXPECT_EQ(*loaded, bundle);
    EXPECT_EQ(analysis_from_json(loaded->at("analysis")), a);
    const ScalarDecoder dec{3, nullptr};
    const auto sigma = matrix_from_json(loaded->at("sigma_A"), P->s(), [&](const json& x) { return dec.rational(x); });
    EXPECT_EQ(jordan_profile(sigma, 3), *a.h1_A);
    // checksum stable across encodings
    EXPECT_EQ(Cache::encode(bundle), Cache::encode(*loaded));
}

TEST(Cache, TruncatedFile) {
    TempDir dir;
    const Cache cache(dir.path());
    cache.store("t", json{{"x", 1}, {"y", "long enough"}});
    const auto f = cache.path("t");
    const auto size = std::filesystem::file_size(f);
    std::filesystem::resize_file(f, size / 2);
    EXPECT_THROW(cache.load("t"), CorruptCache);
}

TEST(Cache, ChecksumMismatch) {
    const std::string text = Cache::encode(json{{"x", 1}});
    std::string tampered = text;
    tampered.replace(tampered.find("\"x\":1"), 5, "\"x\":2");
    EXPECT_THROW(Cache::decode(tampered), CorruptCache);
    EXPECT_EQ(Cache::decode(text), (json{{"x", 1}}));
}

TEST(Cache, CorruptEntryIsRecomputed) {
    TempDir dir;
    const Cache cache(dir.path());
    const auto checks = std::vector<Check>{Check::KA};
    const auto first = run_job(job(3, 2, FieldMode::Exact, 42, checks), &cache);
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir.path())) files.push_back(e.path());
    ASSERT_EQ(files.size(), 1u);
    std::ofstream(files[0], std::ios::trunc) << "{\"checksum\": \"0\"";
    const auto second = run_job(job(3, 2, FieldMode::Exact, 42, checks), &cache);
    EXPECT_EQ(second.report["checks"], first.report["checks"]);
    const json& notes = second.report["notes"];
    EXPECT_TRUE(std::any_of(notes.begin(), notes.end(), [](const json& n) {
        return n.get<std::string>().find("recomputed") != std::string::npos;
    }));
    const auto third = run_job(job(3, 2, FieldMode::Exact, 42, checks), &cache);
    EXPECT_EQ(third.report, first.report);
}

TEST(Cache, EnvironmentOverride) {
    ::setenv("SUBRAO_CACHE", "/tmp/from_env", 1);
    EXPECT_EQ(Cache::directory(std::string("/tmp/from_flag")), std::filesystem::path("/tmp/from_env"));
    ::unsetenv("SUBRAO_CACHE");
    EXPECT_EQ(Cache::directory(std::string("/tmp/from_flag")), std::filesystem::path("/tmp/from_flag"));
    EXPECT_FALSE(Cache::directory(std::nullopt).has_value());
}

TEST(RunJob, AnchorCase) {
    const auto out = run_job(job(3, 2));
    const json& checks = out.report["checks"];
    for (const char* name : {"KA", "KG", "DER", "STALK", "N1", "QMATRIX", "NAKAJIMA"})
        EXPECT_EQ(checks[name]["status"], "verified") << name;
    // The stated G-invariant count 2n-1 = 3 differs from the computed 1.
    EXPECT_EQ(checks["INV"]["status"], "mismatch");
    EXPECT_EQ(checks["INV"]["computed"]["invariants_G"], 1);
    EXPECT_EQ(checks["INV"]["computed"]["amalgam_h1_dim"], 1);
    EXPECT_EQ(checks["INV"]["predicted"]["invariants_G"], 3);
    EXPECT_EQ(out.report["status"], "mismatch");
    EXPECT_FALSE(out.verified);
}

TEST(RunJob, MismatchEmbedsBothSides) {
    const auto out = run_job(job(5, 3, FieldMode::Exact, 42, {Check::INV}));
    const json& c = out.report["checks"]["INV"];
    EXPECT_EQ(c["status"], "mismatch");
    EXPECT_TRUE(c.contains("computed") && c.contains("predicted"));
}

TEST(RunJob, UsageErrors) {
    EXPECT_THROW(run_job(job(2, 2)), UsageError);
    EXPECT_THROW(run_job(job(9, 2)), UsageError);
    EXPECT_THROW(run_job(job(3, 0)), UsageError);
    EXPECT_THROW(parse_check("XX"), UsageError);
    EXPECT_THROW(parse_field("fast"), UsageError);
}

TEST(RunJob, NEqualsOne) {
    const auto out = run_job(job(5, 1));
    const json& checks = out.report["checks"];
    for (const char* name : {"KA", "KG", "NAKAJIMA"}) EXPECT_EQ(checks[name]["status"], "skipped");
    for (const char* name : {"DER", "STALK", "N1", "INV", "QMATRIX"}) EXPECT_EQ(checks[name]["status"], "verified") << name;
    EXPECT_TRUE(out.verified);
}

TEST(RunJob, SpecializationMatchesExact) {
    const std::vector<Check> checks{Check::KA, Check::KG, Check::DER, Check::INV, Check::QMATRIX};
    const auto ex = run_job(job(5, 2, FieldMode::Exact, 7, checks));
    const auto sp = run_job(job(5, 2, FieldMode::Specialize, 7, checks));
    EXPECT_EQ(sp.report["field"], "specialize");
    EXPECT_EQ(sp.report["points"].size(), 3u);
    EXPECT_FALSE(sp.report.contains("escalated"));
    for (const auto& [name, c] : ex.report["checks"].items()) {
        EXPECT_EQ(sp.report["checks"][name]["status"], c["status"]) << name;
        EXPECT_EQ(sp.report["checks"][name]["computed"], c["computed"]) << name;
    }
}

TEST(RunJob, AutoFieldThreshold) {
    EXPECT_EQ(resolve_field(job(5, 6, FieldMode::Auto)), FieldMode::Exact);    // dim 165
    EXPECT_EQ(resolve_field(job(7, 4, FieldMode::Auto)), FieldMode::Specialize);  // dim 245
    EXPECT_EQ(resolve_field(job(7, 3, FieldMode::Auto)), FieldMode::Exact);    // dim 175
}

TEST(RunJob, SpecializationPointsReproducible) {
    const auto a = specialization_codes(job(5, 3, FieldMode::Specialize, 9), 15625);
    const auto b = specialization_codes(job(5, 3, FieldMode::Specialize, 9), 15625);
    const auto c = specialization_codes(job(5, 3, FieldMode::Specialize, 10), 15625);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    EXPECT_EQ(std::set<std::uint32_t>(a.begin(), a.end()).size(), 3u);
    for (auto x : a) EXPECT_NE(x, 0u);
}

TEST(Grid, DeterministicAndOrderIndependent) {
    std::vector<VerificationJob> jobs;
    for (std::uint32_t p : {3u, 5u})
        for (std::size_t n = 1; n <= 3; ++n) jobs.push_back(job(p, n, FieldMode::Auto, 42));
    const auto serial = run_grid(jobs, nullptr, 1);
    const auto again = run_grid(jobs, nullptr, 1);
    const auto parallel = run_grid(jobs, nullptr, 4);
    EXPECT_EQ(serial.report.dump(), again.report.dump());
    EXPECT_EQ(serial.report.dump(), parallel.report.dump());
    EXPECT_EQ(serial.report["schema_version"], kSchemaVersion);
    EXPECT_EQ(serial.report["jobs"].size(), jobs.size());
    EXPECT_FALSE(serial.report["jobs"][0].contains("elapsed_ms"));
    EXPECT_TRUE(run_grid({job(3, 1)}, nullptr, 1, true).report["jobs"][0].contains("elapsed_ms"));
}

TEST(Grid, CsvSummary) {
    const auto g = run_grid({job(3, 1, FieldMode::Exact, 42, {Check::STALK, Check::N1})});
    const std::string csv = csv_summary(g.report);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "p,n,field,check,status,computed,predicted");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
    EXPECT_NE(csv.find("3,1,exact,N1,verified"), std::string::npos);
}
