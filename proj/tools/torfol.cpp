// torfol: singular foliations on toric varieties in homogeneous coordinates.
//
// Subcommands operate on fan/form/map JSON files and print deterministic
// text or JSON reports; see README.md for the file formats.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "torfol/fixture_maps.hpp"
#include "torfol/foliation.hpp"
#include "torfol/io.hpp"
#include "torfol/ratmap.hpp"
#include "torfol/verify.hpp"

using namespace torfol;

namespace {

struct SessionConfig {
    std::string fan_path;
    std::string form_path;
    std::string map_path;
    std::string order = "degrevlex";
    unsigned long long step_budget = 10'000'000ULL;
    std::string format = "text"; // text | json
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path, 0);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// FNV-1a digest of the input bytes; keeps reports reproducible without
/// pulling in a hash library.
std::string digest(const std::string& bytes) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

struct Inputs {
    Fan fan;
    GradingData grading;
    std::string fan_digest;
};

Inputs load_fan(const SessionConfig& cfg) {
    if (cfg.fan_path.empty()) throw ParseError("missing --fan", 0);
    std::string bytes = read_file(cfg.fan_path);
    Inputs in;
    in.fan = fan_from_json(Json::parse(bytes));
    in.grading = class_group(in.fan);
    in.fan_digest = digest(bytes);
    return in;
}

KForm load_form(const SessionConfig& cfg, const RingPtr& ring, std::string* dig = nullptr) {
    if (cfg.form_path.empty()) throw ParseError("missing --form", 0);
    std::string bytes = read_file(cfg.form_path);
    if (dig) *dig = digest(bytes);
    return form_from_json(Json::parse(bytes), ring);
}

void emit(const SessionConfig& cfg, const Json& report) {
    if (cfg.format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::function<void(const Json&, const std::string&)> walk = [&](const Json& j,
                                                                    const std::string& prefix) {
        if (j.is_object()) {
            for (const auto& [k, v] : j.items()) {
                if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_object())) {
                    std::cout << prefix << k << ":\n";
                    walk(v, prefix + "  ");
                } else if (v.is_array()) {
                    std::cout << prefix << k << ":";
                    if (v.empty()) std::cout << " (none)";
                    std::cout << "\n";
                    for (const auto& item : v) {
                        if (item.is_string())
                            std::cout << prefix << "  " << item.get<std::string>() << "\n";
                        else
                            std::cout << prefix << "  " << item.dump() << "\n";
                    }
                } else if (v.is_string()) {
                    std::cout << prefix << k << ": " << v.get<std::string>() << "\n";
                } else {
                    std::cout << prefix << k << ": " << v.dump() << "\n";
                }
            }
        } else if (j.is_array()) {
            for (const auto& item : j) walk(item, prefix);
        }
    };
    walk(report, "");
}

Json grading_json(const GradingData& g) {
    Json j;
    std::string cl = "Z";
    if (g.s != 1) cl += "^" + std::to_string(g.s);
    for (auto t : g.torsion_orders) cl += " x Z_" + std::to_string(t);
    j["class_group"] = cl;
    Json degs = Json::object();
    for (std::size_t i = 0; i < g.m; ++i) degs[g.ring->name(i)] = g.degrees[i].str();
    j["degree_map"] = degs;
    Json rel = Json::array();
    for (const auto& row : g.relation_basis) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        rel.push_back(r);
    }
    j["relation_basis"] = rel;
    j["anticanonical"] = g.anticanonical().str();
    return j;
}

int cmd_fan_info(const SessionConfig& cfg) {
    Inputs in = load_fan(cfg);
    Json report;
    report["command"] = "fan-info";
    report["fan_digest"] = in.fan_digest;
    report.update(grading_json(in.grading));
    report["irrelevant_ideal"] = ideal_strings(irrelevant_ideal(in.fan));
    Json radials = Json::array();
    for (const auto& r : radial_fields(in.grading)) {
        std::string s;
        for (std::size_t i = 0; i < in.grading.m; ++i) {
            if (r.coefficient(i).is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + r.coefficient(i).str() + ")*d/d" + in.grading.ring->name(i);
        }
        radials.push_back(s);
    }
    report["radial_fields"] = radials;
    if (in.fan.dim() == 2) {
        Json pairs = Json::array();
        for (auto [i, j] : nonconsecutive_pairs(in.fan))
            pairs.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        report["nonconsecutive_pairs"] = pairs;
    }
    FanReport fr = validate_fan(in.fan);
    report["warnings"] = fr.warnings;
    emit(cfg, report);
    return 0;
}

int cmd_check(const SessionConfig& cfg) {
    Inputs in = load_fan(cfg);
    std::string fdig;
    KForm a = load_form(cfg, in.grading.ring, &fdig);
    Json report;
    report["command"] = "check";
    report["fan_digest"] = in.fan_digest;
    report["form_digest"] = fdig;
    FoliationForm f = check_foliation(a, in.grading);
    report["degree"] = f.degree.str();
    report["homogeneous"] = f.checks.homogeneous;
    report["descent"] = f.checks.descent;
    report["locally_decomposable"] = f.checks.locally_decomposable;
    report["integrable"] = f.checks.integrable;
    report["singular_codim"] = f.checks.singular_codim;
    report["codim_ge_2"] = f.checks.codim_ok;
    report["foliation"] = f.checks.all_passed();
    emit(cfg, report);
    return f.checks.all_passed() ? 0 : 1;
}

int cmd_ideals(const SessionConfig& cfg) {
    Inputs in = load_fan(cfg);
    std::string fdig;
    KForm a = load_form(cfg, in.grading.ring, &fdig);
    Json report;
    report["command"] = "ideals";
    report["fan_digest"] = in.fan_digest;
    report["form_digest"] = fdig;
    Ideal j = singular_ideal(a);
    report["J"] = ideal_strings(j);
    MonomialOrder order = cfg.order == "lex" ? MonomialOrder::lex(in.grading.m)
                                             : MonomialOrder::grevlex(in.grading.m);
    report["J_groebner"] = ideal_strings(Ideal(in.grading.ring, j.basis(order)));
    KupkaIdeal k = kupka_ideal(a);
    report["K"] = ideal_strings(k.ideal);
    if (k.closed_form)
        report["warning"] = "d(alpha) = 0: Kupka quotient by <0> reported as <1>";
    report["K_set_presentation"] = ideal_strings(kupka_set_presentation(a));
    report["singular_codim"] = codimension(j);
    emit(cfg, report);
    return 0;
}

int cmd_gamma(const SessionConfig& cfg) {
    Inputs in = load_fan(cfg);
    std::string fdig;
    KForm a = load_form(cfg, in.grading.ring, &fdig);
    GammaSets gs = gamma_sets(a, in.fan);
    auto render = [](const std::vector<std::pair<int, int>>& v) {
        Json arr = Json::array();
        for (auto [i, j] : v)
            arr.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        return arr;
    };
    Json report;
    report["command"] = "gamma";
    report["fan_digest"] = in.fan_digest;
    report["form_digest"] = fdig;
    report["gamma"] = render(gs.gamma);
    report["gamma_K"] = render(gs.gamma_k);
    report["gamma_K_set"] = render(gs.gamma_k_set);
    emit(cfg, report);
    return 0;
}

int cmd_pullback(const SessionConfig& cfg) {
    Inputs in = load_fan(cfg);
    std::string fdig;
    KForm a = load_form(cfg, in.grading.ring, &fdig);
    if (cfg.map_path.empty()) throw ParseError("missing --map", 0);
    std::string mbytes = read_file(cfg.map_path);
    MapFile mf = map_from_json(Json::parse(mbytes));
    RationalMapLifting lift = RationalMapLifting::make(mf.components, mf.degrees, in.fan,
                                                       mf.flat_pullback, mf.complete);
    Json report;
    report["command"] = "pullback";
    report["fan_digest"] = in.fan_digest;
    report["form_digest"] = fdig;
    report["map_digest"] = digest(mbytes);
    MapReport mrep = validate(lift);
    Json hypotheses;
    hypotheses["flat_pullback"] = std::string(mrep.flat_asserted ? "asserted" : "not asserted");
    hypotheses["complete"] =
        std::string(mrep.complete_asserted
                        ? (mrep.completeness_ok ? "asserted and verified" : "asserted but FAILED")
                        : "not asserted");
    hypotheses["relation"] = std::string(mrep.relation_ok ? "verified" : "violated");
    hypotheses["homogeneity"] = std::string(mrep.homogeneous_ok ? "verified" : "violated");
    report["hypotheses"] = hypotheses;
    if (mrep.completeness_checked) report["base_locus_codim"] = mrep.base_locus_codim;

    GenericityReport gen = genericity_report(a);
    Json genericity;
    genericity["J_alpha_codim"] = gen.j_codim;
    genericity["J_alpha_codim_ge_2"] = gen.j_codim_ge_2;
    genericity["C_dalpha_codim"] = gen.c_dalpha_codim;
    genericity["C_dalpha_codim_ge_3"] = gen.c_dalpha_codim_ge_3;
    genericity["K_alpha_equals_J_alpha"] = gen.k_equals_j;
    genericity["radical_spot_check"] = gen.radical_spot_check;
    report["genericity_checklist"] = genericity;

    PullbackIdeals pb = pullback_ideals(lift, a);
    report["omega"] = form_to_json(pb.omega);
    auto expected = expected_pullback_degree(lift, a);
    long actual = static_cast<long>(form_degree(pb.omega, lift.source_grading).free[0].get_si());
    report["degree"] = actual;
    if (expected) {
        report["degree_expected"] = *expected;
        report["degree_matches"] = (*expected == actual);
    }
    report["J_omega"] = ideal_strings(pb.j_omega);
    report["J_tilde"] = ideal_strings(pb.j_tilde);
    report["K_omega"] = ideal_strings(pb.k_omega);
    report["residual"] = ideal_strings(pb.residual);
    report["K_equals_pullback_of_K_alpha"] = pb.k_equals_pullback;
    report["K_equals_J_tilde"] = pb.k_equals_jtilde;
    report["chain_J_in_Jtilde_in_K"] = pb.chain_ok;
    Json members = Json::array();
    for (bool b : pb.unfolding_members) members.push_back(b);
    report["A_i_of_F_in_unfoldings_ideal"] = members;
    emit(cfg, report);
    bool math_ok = mrep.ok() && pb.chain_ok;
    return math_ok ? 0 : 1;
}

int cmd_deform(const SessionConfig& cfg) {
    Inputs in = load_fan(cfg);
    std::string fdig;
    KForm a = load_form(cfg, in.grading.ring, &fdig);
    auto basis = deformation_space(a, in.grading);
    Json report;
    report["command"] = "deform";
    report["fan_digest"] = in.fan_digest;
    report["form_digest"] = fdig;
    report["dimension"] = basis.size();
    Json arr = Json::array();
    for (const auto& eta : basis) arr.push_back(form_to_json(eta));
    report["basis"] = arr;
    emit(cfg, report);
    return 0;
}

int cmd_unfold(const SessionConfig& cfg) {
    Inputs in = load_fan(cfg);
    std::string fdig;
    KForm a = load_form(cfg, in.grading.ring, &fdig);
    auto pairs = unfoldings_space_toric(a, in.grading);
    Json report;
    report["command"] = "unfold";
    report["fan_digest"] = in.fan_digest;
    report["form_digest"] = fdig;
    report["dimension"] = pairs.size();
    Json arr = Json::array();
    for (const auto& u : pairs) {
        Json pair;
        pair["h"] = u.h.str();
        pair["eta"] = form_to_json(u.eta);
        arr.push_back(pair);
    }
    report["basis"] = arr;
    emit(cfg, report);
    return 0;
}

int cmd_flag(const SessionConfig& cfg) {
    Inputs in = load_fan(cfg);
    if (cfg.map_path.empty()) throw ParseError("missing --map", 0);
    std::string mbytes = read_file(cfg.map_path);
    MapFile mf = map_from_json(Json::parse(mbytes));
    RationalMapLifting lift = RationalMapLifting::make(mf.components, mf.degrees, in.fan,
                                                       mf.flat_pullback, mf.complete);
    FlagResult flag = flag_builder(lift, mf.degrees);
    Json report;
    report["command"] = "flag";
    report["fan_digest"] = in.fan_digest;
    report["map_digest"] = digest(mbytes);
    Json rel = Json::array();
    for (const auto& row : flag.relation_basis) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        rel.push_back(r);
    }
    report["relation_basis"] = rel;
    Json etas = Json::array(), omegas = Json::array();
    for (const auto& e : flag.eta) etas.push_back(form_to_json(e));
    for (const auto& w : flag.omega) omegas.push_back(form_to_json(w));
    report["eta"] = etas;
    report["omega"] = omegas;
    emit(cfg, report);
    return 0;
}

int cmd_paper_verify(const SessionConfig& cfg) {
    bool all = true;
    Json arr = Json::array();
    auto results = verify::run_all([&](const verify::CriterionResult& r) {
        if (cfg.format == "text") {
            // timing goes to stderr so stdout stays byte-deterministic
            std::cout << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  "
                      << r.name;
            if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
            std::cout << "\n" << std::flush;
            std::cerr << "criterion " << r.id << " took " << r.seconds << "s\n";
        }
    });
    for (const auto& r : results) {
        all = all && r.passed;
        Json jr;
        jr["id"] = r.id;
        jr["name"] = r.name;
        jr["passed"] = r.passed;
        if (!r.detail.empty()) jr["detail"] = r.detail;
        arr.push_back(jr);
    }
    if (cfg.format == "json") {
        Json report;
        report["command"] = "paper-verify";
        report["criteria"] = arr;
        report["all_passed"] = all;
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << (all ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"singular foliations on simplicial complete toric varieties"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    SessionConfig cfg;
    if (const char* env = std::getenv("TORFOL_STEP_BUDGET"))
        cfg.step_budget = std::strtoull(env, nullptr, 10);

    app.add_option("--order", cfg.order, "monomial order: degrevlex|lex")->capture_default_str();
    app.add_option("--step-budget", cfg.step_budget, "reduction step budget")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format: text|json")->capture_default_str();

    auto add_fan = [&](CLI::App* sub) { sub->add_option("--fan", cfg.fan_path, "fan JSON file"); };
    auto add_form = [&](CLI::App* sub) {
        sub->add_option("--form", cfg.form_path, "form JSON file");
    };
    auto add_map = [&](CLI::App* sub) { sub->add_option("--map", cfg.map_path, "map JSON file"); };

    CLI::App* fan_info = app.add_subcommand("fan-info", "class group, degrees, irrelevant ideal");
    add_fan(fan_info);
    CLI::App* check = app.add_subcommand("check", "run the foliation checks on a form");
    add_fan(check);
    add_form(check);
    CLI::App* ideals = app.add_subcommand("ideals", "singular/Kupka ideals and saturation");
    add_fan(ideals);
    add_form(ideals);
    CLI::App* gamma = app.add_subcommand("gamma", "Gamma sets over the irrelevant primes");
    add_fan(gamma);
    add_form(gamma);
    CLI::App* pullback = app.add_subcommand("pullback", "validate a lifting and pull back a form");
    add_fan(pullback);
    add_form(pullback);
    add_map(pullback);
    CLI::App* deform = app.add_subcommand("deform", "first-order deformation space");
    add_fan(deform);
    add_form(deform);
    CLI::App* unfold = app.add_subcommand("unfold", "first-order unfolding space");
    add_fan(unfold);
    add_form(unfold);
    CLI::App* flagc = app.add_subcommand("flag", "flag of logarithmic subfoliations");
    add_fan(flagc);
    add_map(flagc);
    app.add_subcommand("paper-verify", "run the acceptance fixtures");

    CLI11_PARSE(app, argc, argv);

    if (cfg.order != "degrevlex" && cfg.order != "lex") {
        std::cerr << "error: unknown order '" << cfg.order << "'\n";
        return 2;
    }
    default_groebner_options().step_budget = cfg.step_budget;

    try {
        if (fan_info->parsed()) return cmd_fan_info(cfg);
        if (check->parsed()) return cmd_check(cfg);
        if (ideals->parsed()) return cmd_ideals(cfg);
        if (gamma->parsed()) return cmd_gamma(cfg);
        if (pullback->parsed()) return cmd_pullback(cfg);
        if (deform->parsed()) return cmd_deform(cfg);
        if (unfold->parsed()) return cmd_unfold(cfg);
        if (flagc->parsed()) return cmd_flag(cfg);
        return cmd_paper_verify(cfg);
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error (at " << e.position << "): " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
