#include "twinkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "twinkit/building_checks.hpp"
#include "twinkit/building_io.hpp"
#include "twinkit/dynkin.hpp"
#include "twinkit/errors.hpp"
#include "twinkit/km_algebra.hpp"
#include "twinkit/rgd.hpp"
#include "twinkit/roots.hpp"
#include "twinkit/sl_group.hpp"
#include "twinkit/thin_building.hpp"

namespace twinkit::cli {

namespace {

using nlohmann::json;

constexpr int kMaxHeight = 12;
constexpr std::uint64_t kMaxGroupOrder = 400000;
constexpr int kDimensionCap = 8;
constexpr int kGalleryLength = 3;

const std::vector<std::string> kBuildingSuites = {"axioms", "census", "dimension", "foundation", "galleries",
                                                  "lemmas", "panel_multiplication", "stratification"};
const std::vector<std::string> kGroupSuites = {"decomposition", "lang", "rgd"};
const std::vector<std::string> kAlgebraSuites = {"algebra", "carriers", "dimension", "roots"};

json envelope(const std::string& command, const RunConfig& cfg) {
    return {{"tool", "twinkit"}, {"version", kVersion}, {"command", command}, {"config", cfg.to_json()}, {"seed", cfg.seed}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw MalformedInput(path + ": " + e.what());
    }
}

json read_json_stream(std::istream& in, const std::string& what) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw MalformedInput(what + ": " + e.what());
    }
}

bool is_rank2_finite(const Gcm& a) {
    return a.rank() == 2 && a(0, 1) * a(1, 0) <= 3;
}

CheckResult from_dimension(const DimensionReport& d, const std::string& name) {
    CheckResult r(name);
    r.instances = d.elements_checked;
    if (!d.consistent())
        r.fail("well-definedness disagrees with constancy on odd components", d.to_json());
    else if (!d.well_defined)
        r.detail = "not well defined, as predicted";
    return r;
}

std::vector<CheckResult> dimension_suite(const CoxeterSystem& sys) {
    std::vector<int> ones(static_cast<std::size_t>(sys.rank()), 1), steps;
    for (int i = 0; i < sys.rank(); ++i) steps.push_back(i + 1);
    return {from_dimension(check_dimension_function(sys, ones, kDimensionCap), "dimension_constant"),
            from_dimension(check_dimension_function(sys, steps, kDimensionCap), "dimension_graded")};
}

CheckResult foundation_check(const TwinBuilding& b) {
    CheckResult r("collapse_base_point");
    if (!b.is_thick()) {
        r.skip("model is not thick");
        return r;
    }
    if (!b.type().parabolic_info(GeneratorSet::all(b.rank())).finite && b.length_cap()) {
        r.skip("capped model");
        return r;
    }
    try {
        const json first = collapse_foundation(b, {Sign::Plus, 0}).type_list();
        for (Sign s : {Sign::Plus, Sign::Minus})
            for (int c = 0; c < b.chamber_count(s); ++c) {
                ++r.instances;
                const json here = collapse_foundation(b, {s, c}).type_list();
                if (here != first)
                    r.fail("residue types depend on the base chamber",
                           {{"chamber", chamber_to_json({s, c})}, {"types", here}, {"base_types", first}});
            }
    } catch (const NotTwoSpherical& e) {
        r.skip(e.what());
    }
    return r;
}

CheckResult lang_check(const SlTwinBuilding& m) {
    CheckResult r("lang_strata");
    const auto rep = flip_lang(m, transpose_inverse);
    r.instances = rep.elements_checked;
    if (!rep.equivalence_ok) r.fail("Lang fibre and chamber stratum disagree", rep.witness);
    return r;
}

CheckResult roots_check(const Gcm& a, int height) {
    CheckResult r("root_enumeration");
    auto table = positive_real_roots(a, height);
    const auto order = root_enumeration(table);
    r.instances = static_cast<long long>(order.size());
    if (!enumeration_compatible(table, order)) r.fail("enumeration violates the monotonicity conditions", table.to_json());
    return r;
}

std::vector<CheckResult> carriers_suite(const Gcm& a, int height) {
    KmAlgebra alg(a, height);
    if (alg.window_closed()) return carrier_checks(alg, window_carrier(alg));
    std::vector<CheckResult> out;
    for (int i = 0; i < alg.rank(); ++i)
        for (auto r : carrier_checks(alg, invariant_subspace(alg, alg.e(i), {i}))) {
            r.name += "_a" + std::to_string(i + 1);
            out.push_back(std::move(r));
        }
    return out;
}

int parse_int(const json& j, const char* key) {
    if (!j.at(key).is_number_integer()) throw MalformedInput(std::string(key) + " must be an integer");
    return j.at(key).get<int>();
}

} // namespace

json RunConfig::to_json() const {
    json j{{"model", model}, {"type", type}, {"n", n}, {"p", p}, {"height", height}, {"suites", suites},
           {"out", out}, {"seed", seed}, {"dot", dot}, {"timings", timings}};
    j["gcm"] = gcm ? *gcm : json(nullptr);
    j["cap"] = cap ? json(*cap) : json(nullptr);
    if (model == "file") j["building"] = building;
    return j;
}

RunConfig RunConfig::from_json(const json& j) {
    if (!j.is_object()) throw MalformedInput("config must be a JSON object");
    static const std::vector<std::string> keys = {"model", "type", "gcm", "n", "p", "cap", "height", "suites",
                                                  "out", "seed", "dot", "timings", "building"};
    for (const auto& [k, v] : j.items())
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw MalformedInput("unknown config key '" + k + "'");
    RunConfig c;
    try {
        if (j.contains("model")) c.model = j["model"].get<std::string>();
        if (j.contains("type")) c.type = j["type"].get<std::string>();
        if (j.contains("gcm") && !j["gcm"].is_null()) c.gcm = j["gcm"];
        if (j.contains("n")) c.n = parse_int(j, "n");
        if (j.contains("p")) c.p = parse_int(j, "p");
        if (j.contains("cap") && !j["cap"].is_null()) c.cap = parse_int(j, "cap");
        if (j.contains("height")) c.height = parse_int(j, "height");
        if (j.contains("suites")) c.suites = j["suites"].get<std::vector<std::string>>();
        if (j.contains("out")) c.out = j["out"].get<std::string>();
        if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("dot")) c.dot = j["dot"].get<bool>();
        if (j.contains("timings")) c.timings = j["timings"].get<bool>();
        if (j.contains("building")) c.building = j["building"];
    } catch (const json::exception& e) {
        throw MalformedInput(e.what());
    }
    return c;
}

void validate(const RunConfig& cfg) {
    if (cfg.model != "thin" && cfg.model != "sl_n" && cfg.model != "kac_moody" && cfg.model != "file")
        throw MalformedInput("model must be thin, sl_n, kac_moody or file");
    if (cfg.cap && (*cfg.cap < 1 || *cfg.cap > 12)) throw MalformedInput("cap must lie in 1..12");
    if (cfg.height < 1 || cfg.height > kMaxHeight) throw MalformedInput("height must lie in 1..12");
    if (cfg.model == "sl_n") {
        if (cfg.n < 2 || cfg.n > 4) throw MalformedInput("n must lie in 2..4");
        if (!is_prime(cfg.p) || cfg.p > PrimeField::kMaxPrime) throw MalformedInput("p must be a prime <= 13");
        std::uint64_t order = 1;
        const auto q = static_cast<std::uint64_t>(cfg.p);
        for (int i = 0; i < cfg.n * (cfg.n - 1) / 2; ++i) order *= q;
        std::uint64_t qi = q;
        for (int i = 2; i <= cfg.n; ++i) {
            qi *= q;
            order *= qi - 1;
        }
        if (order > kMaxGroupOrder) throw MalformedInput("|SL_n(F_p)| exceeds the supported bound");
    }
    if (cfg.model == "file" && cfg.building.is_null()) throw MalformedInput("model file needs a building document");
    const auto available = available_suites(cfg);
    for (const auto& s : cfg.suites)
        if (std::find(available.begin(), available.end(), s) == available.end())
            throw MalformedInput("suite '" + s + "' is not available for model " + cfg.model);
}

Gcm config_gcm(const RunConfig& cfg) {
    try {
        if (cfg.gcm) return gcm_from_json(*cfg.gcm);
        return gcm_by_name(cfg.type);
    } catch (const InvalidGcm& e) {
        throw MalformedInput(e.what());
    } catch (const json::exception& e) {
        throw MalformedInput(e.what());
    }
}

TwinBuilding config_building(const RunConfig& cfg) {
    if (cfg.model == "sl_n") return TwinBuilding::tabulate(SlTwinBuilding(cfg.n, cfg.p));
    if (cfg.model == "file") return building_from_json(cfg.building);
    if (cfg.model == "thin") {
        CoxeterSystem sys(config_gcm(cfg));
        if (!cfg.cap && !sys.parabolic_info(GeneratorSet::all(sys.rank())).finite)
            throw MalformedInput("infinite type needs --cap");
        return TwinBuilding::tabulate(ThinTwinBuilding(sys, cfg.cap));
    }
    throw MalformedInput("model " + cfg.model + " has no building");
}

std::vector<std::string> available_suites(const RunConfig& cfg) {
    std::vector<std::string> out;
    if (cfg.model == "kac_moody") {
        out = kAlgebraSuites;
        if (is_rank2_finite(config_gcm(cfg))) out.push_back("rank2_rgd");
    } else {
        out = kBuildingSuites;
        if (cfg.model == "sl_n") out.insert(out.end(), kGroupSuites.begin(), kGroupSuites.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Report::passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

json Report::to_json(bool timings) const {
    json j{{"tool", "twinkit"}, {"version", kVersion}, {"command", command}, {"config", config}, {"seed", seed}};
    j["status"] = passed() ? "pass" : "fail";
    json ss = json::array();
    for (const auto& s : suites) {
        json e{{"name", s.name}, {"status", s.passed() ? "pass" : "fail"}, {"checks", twinkit::to_json(s.checks)}};
        if (timings) e["seconds"] = s.seconds;
        ss.push_back(e);
    }
    j["suites"] = ss;
    j["certified"] = certified;
    return j;
}

Report cmd_check(const RunConfig& cfg) {
    validate(cfg);
    Report rep;
    rep.command = "check";
    rep.config = cfg.to_json();
    rep.seed = cfg.seed;
    auto names = cfg.suites.empty() ? available_suites(cfg) : cfg.suites;
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());

    std::map<std::string, std::function<std::vector<CheckResult>()>> jobs;
    std::shared_ptr<TwinBuilding> b;
    std::shared_ptr<SlTwinBuilding> sl;
    if (cfg.model == "kac_moody") {
        const Gcm a = config_gcm(cfg);
        const int h = cfg.height;
        {
            KmAlgebra probe(a, h);
            rep.certified = {{"height", h}, {"dimension", probe.dimension()}, {"window_closed", probe.window_closed()},
                             {"positive_dims", probe.positive_dims()}};
        }
        jobs["algebra"] = [a, h] { return algebra_checks(KmAlgebra(a, h)); };
        jobs["carriers"] = [a, h] { return carriers_suite(a, h); };
        jobs["roots"] = [a, h] { return std::vector<CheckResult>{roots_check(a, h)}; };
        jobs["dimension"] = [a] { return dimension_suite(CoxeterSystem(a)); };
        const int p = cfg.p;
        jobs["rank2_rgd"] = [a, p] { return rank2_rgd_check(a, p); };
    } else {
        if (cfg.model == "sl_n") {
            sl = std::make_shared<SlTwinBuilding>(cfg.n, cfg.p);
            sl->group().elements();
            b = std::make_shared<TwinBuilding>(TwinBuilding::tabulate(*sl));
        } else {
            b = std::make_shared<TwinBuilding>(config_building(cfg));
        }
        rep.certified = {{"model", b->name()},
                         {"cap", b->length_cap() ? json(*b->length_cap()) : json(nullptr)},
                         {"chambers", {{"plus", b->chamber_count(Sign::Plus)}, {"minus", b->chamber_count(Sign::Minus)}}},
                         {"interior", {{"plus", b->interior(Sign::Plus).size()}, {"minus", b->interior(Sign::Minus).size()}}}};
        jobs["axioms"] = [b] {
            try {
                return check_axioms(*b).checks;
            } catch (const RegionTooSmall& e) {
                CheckResult r("axioms");
                r.fail(e.what(), json::object());
                return std::vector<CheckResult>{r};
            }
        };
        jobs["lemmas"] = [b] {
            return std::vector<CheckResult>{check_projections(*b), check_coprojection_agreement(*b),
                                            check_common_opposites(*b), check_codistance_subexpression(*b),
                                            check_opposite_witness(*b), check_twin_apartments(*b),
                                            check_retractions(*b)};
        };
        jobs["census"] = [b] { return std::vector<CheckResult>{check_census(*b), check_cell_sizes(*b)}; };
        jobs["galleries"] = [b] { return std::vector<CheckResult>{check_gallery_spaces(*b, kGalleryLength)}; };
        jobs["panel_multiplication"] = [b] { return std::vector<CheckResult>{check_panel_multiplication(*b)}; };
        jobs["stratification"] = [b] { return std::vector<CheckResult>{check_stratification(*b)}; };
        jobs["dimension"] = [b] { return dimension_suite(b->type()); };
        jobs["foundation"] = [b] { return std::vector<CheckResult>{foundation_check(*b)}; };
        if (sl) {
            jobs["decomposition"] = [sl, b] {
                const auto& g = sl->group();
                return std::vector<CheckResult>{check_decompositions(g), check_rho_membership(g), check_rho_one_is_pi(g),
                                                check_coprojection_formula(*sl, *b, false),
                                                check_coprojection_formula(*sl, *b, true)};
            };
            const std::uint64_t seed = cfg.seed;
            jobs["rgd"] = [sl, seed] {
                RgdOptions opt;
                opt.seed = seed;
                auto out = rgd_axiom_check(sl->group(), opt);
                for (auto& r : check_ordered_products(sl->group())) out.push_back(std::move(r));
                return out;
            };
            jobs["lang"] = [sl] { return std::vector<CheckResult>{lang_check(*sl)}; };
        }
    }

    std::vector<std::future<SuiteResult>> running;
    for (const auto& name : names) {
        auto job = jobs.at(name);
        running.push_back(std::async(std::launch::async, [name, job] {
            const auto t0 = std::chrono::steady_clock::now();
            SuiteResult s;
            s.name = name;
            s.checks = job();
            s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return s;
        }));
    }
    for (auto& f : running) rep.suites.push_back(f.get());
    return rep;
}

json cmd_decompose(const json& matrix, const std::string& kind) {
    const FpMatrix g = FpMatrix::from_json(matrix);
    if (g.n() < 2 || g.n() > 8) throw MalformedInput("matrix size must lie in 2..8");
    SlRealization r(g.n(), g.p());
    r.require_sl(g);
    json out{{"kind", kind}, {"modulus", g.p()}};
    if (kind == "ult") {
        const auto f = r.ult_factor(g);
        out["w"] = json::array();
        out["witness"] = {{"u_plus", f.u_plus.to_json()}, {"t", f.t.to_json()}, {"u_minus", f.u_minus.to_json()}};
        return out;
    }
    if (kind != "bruhat" && kind != "birkhoff") throw MalformedInput("kind must be bruhat, birkhoff or ult");
    const auto d = kind == "bruhat" ? r.bruhat_decompose(g) : r.birkhoff_decompose(g);
    out["cell"] = kind == "bruhat" ? "B+ w B+" : "B- w B+";
    out["w"] = element_to_json(d.w);
    out["witness"] = {{"left", d.left.to_json()}, {"w_hat", r.w_hat(d.w).to_json()}, {"right", d.right.to_json()}};
    return out;
}

Artifact cmd_report(const std::string& kind, const RunConfig& cfg, const std::string& action) {
    Artifact a;
    a.json = envelope("report", cfg);
    a.json["kind"] = kind;
    if (kind == "census" || kind == "strata") {
        validate(cfg);
        if (cfg.model == "kac_moody") throw MalformedInput(kind + " needs a building model");
        const auto b = config_building(cfg);
        a.json["model"] = b.name();
        a.json["chambers"] = {{"plus", b.chamber_count(Sign::Plus)}, {"minus", b.chamber_count(Sign::Minus)}};
        if (kind == "census") {
            json halves;
            for (Sign s : {Sign::Plus, Sign::Minus}) halves[s == Sign::Plus ? "plus" : "minus"] = schubert_census(b, {s, 0}).to_json();
            a.json["census"] = halves;
        } else {
            const auto st = stratification(b, {Sign::Plus, 0});
            a.json["strata"] = st.to_json();
            a.dot = st.to_dot(b.type());
        }
        return a;
    }
    if (kind == "building") {
        validate(cfg);
        a.json["building"] = building_to_json(config_building(cfg));
        return a;
    }
    if (kind != "dynkin") throw MalformedInput("report kind must be census, strata, dynkin or building");
    a.json["action"] = action;
    if (action == "enumerate") {
        const auto trees = enumerate_trees(cfg.n);
        json entries = json::array();
        for (const auto& t : trees) {
            entries.push_back({{"code", canonical_code(t)}, {"tree", t.to_json()}});
            a.dot += t.to_dot();
        }
        a.json["n"] = cfg.n;
        a.json["count"] = trees.size();
        a.json["entries"] = entries;
    } else if (action == "gcm") {
        const Gcm g = config_gcm(cfg);
        const auto t = dynkin_of_gcm(g);
        a.json["gcm"] = gcm_to_json(g);
        a.json["tree"] = t.to_json();
        a.json["code"] = canonical_code(t);
        a.dot = t.to_dot();
    } else if (action == "collapse") {
        validate(cfg);
        const auto b = config_building(cfg);
        const auto f = collapse_foundation(b, {Sign::Plus, 0});
        a.json["foundation"] = f.to_json();
        try {
            const auto t = f.dynkin();
            a.json["tree"] = t.to_json();
            a.json["code"] = canonical_code(t);
            a.dot = t.to_dot();
        } catch (const NotATree& e) {
            a.json["tree"] = nullptr;
            a.json["note"] = e.what();
        } catch (const MalformedInput& e) {
            a.json["tree"] = nullptr;
            a.json["note"] = e.what();
        }
    } else {
        throw MalformedInput("dynkin action must be enumerate, gcm or collapse");
    }
    return a;
}

namespace {

void emit(const json& j, const std::string& dot, const RunConfig& cfg, const std::string& stem, std::ostream& out) {
    if (!cfg.out.empty()) {
        std::filesystem::create_directories(cfg.out);
        std::ofstream(std::filesystem::path(cfg.out) / (stem + ".json")) << j.dump(2) << "\n";
        if (cfg.dot && !dot.empty()) std::ofstream(std::filesystem::path(cfg.out) / (stem + ".dot")) << dot;
        out << j.dump(2) << "\n";
        return;
    }
    if (cfg.dot && !dot.empty())
        out << dot;
    else
        out << j.dump(2) << "\n";
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"twin buildings, BN-pairs and Kac-Moody root data over finite fields", "twinkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string config_file, model, type, gcm_file, building_file;
    int n = 0, p = 0, cap = 0, height = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> suites;
    std::string out_dir;
    bool dot = false, timings = false;

    auto* o_config = app.add_option("--config", config_file, "JSON run configuration");
    auto* o_model = app.add_option("--model", model, "thin | sl_n | kac_moody | file");
    auto* o_type = app.add_option("--type", type, "named type: A<n>, B2, G2, ~A1");
    auto* o_p = app.add_option("--p", p, "prime field size");
    auto* o_n = app.add_option("--n", n, "matrix size, or vertex count for dynkin enumerate");
    auto* o_gcm = app.add_option("--gcm", gcm_file, "GCM document {\"rank\", \"cartan\"}");
    auto* o_cap = app.add_option("--cap", cap, "length cap for infinite types");
    auto* o_height = app.add_option("--height", height, "Kac-Moody window height");
    auto* o_suite = app.add_option("--suite", suites, "suite names")->delimiter(',');
    auto* o_out = app.add_option("--out", out_dir, "output directory");
    auto* o_seed = app.add_option("--seed", seed, "seed for sampled suites");
    auto* o_building = app.add_option("--building", building_file, "building document for --model file");
    app.add_flag("--dot", dot, "emit DOT");
    app.add_flag("--timings", timings, "record per-suite timings");

    auto* check = app.add_subcommand("check", "run property suites");
    auto* decompose = app.add_subcommand("decompose", "Bruhat, Birkhoff or big-cell factorization");
    std::string dkind, input = "-";
    decompose->add_option("kind", dkind, "bruhat | birkhoff | ult")->required()->check(CLI::IsMember({"bruhat", "birkhoff", "ult"}));
    decompose->add_option("input", input, "matrix JSON file, - for stdin");
    auto* report = app.add_subcommand("report", "census, strata or dynkin artifacts");
    std::string rkind, action = "enumerate";
    report->add_option("kind", rkind, "census | strata | dynkin | building")
        ->required()
        ->check(CLI::IsMember({"census", "strata", "dynkin", "building"}));
    report->add_option("action", action, "dynkin: enumerate | gcm | collapse")->check(CLI::IsMember({"enumerate", "gcm", "collapse"}));
    for (auto* sub : {check, decompose, report}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kMalformed;
    }

    try {
        RunConfig cfg;
        if (*o_config) cfg = RunConfig::from_json(read_json_file(config_file));
        if (*o_model) cfg.model = model;
        if (*o_type) cfg.type = type;
        if (*o_p) cfg.p = p;
        if (*o_n) cfg.n = n;
        if (*o_gcm) cfg.gcm = read_json_file(gcm_file);
        if (*o_cap) cfg.cap = cap;
        if (*o_height) cfg.height = height;
        if (*o_suite) cfg.suites = suites;
        if (*o_out) cfg.out = out_dir;
        if (*o_seed) cfg.seed = seed;
        if (*o_building) {
            cfg.building = read_json_file(building_file);
            // A report document wraps the building.
            if (cfg.building.contains("building") && cfg.building.contains("tool")) cfg.building = cfg.building["building"];
        }
        if (dot) cfg.dot = true;
        if (timings) cfg.timings = true;
        if (cfg.model != "file" && !cfg.building.is_null() && !*o_model) cfg.model = "file";

        if (check->parsed()) {
            const auto rep = cmd_check(cfg);
            emit(rep.to_json(cfg.timings), "", cfg, "check", out);
            return rep.passed() ? kOk : kCheckFailed;
        }
        if (decompose->parsed()) {
            json m = input == "-" ? read_json_stream(std::cin, "stdin") : read_json_file(input);
            json j = envelope("decompose", cfg);
            try {
                j.update(cmd_decompose(m, dkind));
                j["status"] = "ok";
            } catch (const NotInBigCell& e) {
                j["kind"] = dkind;
                j["status"] = "NotInBigCell";
                j["detail"] = e.what();
                emit(j, "", cfg, "decompose", out);
                return kCheckFailed;
            }
            emit(j, "", cfg, "decompose", out);
            return kOk;
        }
        const auto art = cmd_report(rkind, cfg, action);
        emit(art.json, art.dot, cfg, rkind, out);
        return kOk;
    } catch (const Error& e) {
        err << "twinkit: " << e.what() << "\n";
        return kMalformed;
    } catch (const json::exception& e) {
        err << "twinkit: MalformedInput: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::exception& e) {
        err << "twinkit: " << e.what() << "\n";
        return kMalformed;
    }
}

} // namespace twinkit::cli
