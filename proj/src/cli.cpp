#include "finsym/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "finsym/characters.hpp"
#include "finsym/identities.hpp"
#include "finsym/involutions.hpp"
#include "finsym/multiplicity.hpp"
#include "finsym/orbits.hpp"
#include "finsym/tableaux.hpp"

namespace finsym {

namespace {

using nlohmann::json;

json int_json(const Int& v) {
    /* keep arbitrary-precision values exact in the output */
    std::ostringstream s;
    s << v;
    std::string text = s.str();
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(std::stoll(text));
    return json(text);
}

std::vector<int> parse_parts(const std::string& text) {
    return Partition::parse(text).parts();
}

InvolutionFilter filter_by_name(const std::string& name) {
    if (name == "none") return {};
    if (name == "ff") return {.no_fixed = true};
    if (name == "no-odd-fixed") return {.no_odd_fixed = true};
    if (name == "no-even-fixed-no-half") return {.no_even_fixed = true, .no_even_half = true};
    throw CLI::ValidationError("--filter", "unknown filter '" + name + "'");
}

InvolutionWeight weight_by_name(const std::string& name) {
    if (name == "one") return {};
    if (name == "neg1-l2") return {.neg_l2 = true};
    if (name == "neg2-l1") return {.base = -2};
    if (name == "pow2-l1") return {.base = 2};
    if (name == "unitary-uu") return {.neg_l2_0mod4 = true, .neg_half_l3_odd = true};
    if (name == "unitary-on")
        return {.neg_l1_even = true, .neg_l2_2mod4 = true, .neg_half_l3_odd = true, .base = 2};
    if (name == "unitary-son")
        return {.neg_l1 = true, .neg_l2_2mod4 = true, .neg_half_l3_odd = true, .base = 2};
    throw CLI::ValidationError("--weight", "unknown weight '" + name + "'");
}

OrbitTag tag_by_name(const std::string& name) {
    if (name == "One") return OrbitTag::One;
    if (name == "MinusOne") return OrbitTag::MinusOne;
    if (name == "SelfDualOther") return OrbitTag::SelfDualOther;
    if (name == "DualPair") return OrbitTag::DualPair;
    throw std::invalid_argument("unknown orbit tag '" + name + "'");
}

struct MultInput {
    SymmetricSpaceCase space;
    OrbitTable table;
    MultiPartition assignment;
};

MultInput parse_mult_input(const std::string& case_key, const json& j) {
    CaseKind kind = SymmetricSpaceCase::kind_from_key(case_key);
    Twist twist = (kind == CaseKind::GlSp || kind == CaseKind::GlGlGl || kind == CaseKind::GlGl2 ||
                   kind == CaseKind::GlO || kind == CaseKind::GlOpm)
                      ? Twist::Split
                      : Twist::Nonsplit;

    MultInput in{SymmetricSpaceCase{kind, 0}, {}, {}};
    if (j.contains("orbits")) {
        std::vector<AbstractOrbitSpec> specs;
        for (const auto& o : j.at("orbits")) {
            specs.push_back({tag_by_name(o.at("tag").get<std::string>()), o.value("m", 1),
                             o.value("d", 1)});
        }
        in.table = make_abstract_table(twist, specs);
    } else if (j.contains("q")) {
        in.table = enumerate_orbits(j.at("q").get<long long>(), twist, j.value("max_level", 1));
    } else {
        throw std::invalid_argument("input needs either \"orbits\" (abstract) or \"q\" (concrete)");
    }

    in.assignment.table = &in.table;
    for (const auto& [key, value] : j.at("assignments").items()) {
        std::vector<int> parts = value.get<std::vector<int>>();
        in.assignment.assign[std::stoi(key)] = Partition(parts);
    }

    int n = in.assignment.total();
    if (j.contains("n") && j.at("n").get<int>() != n)
        throw std::invalid_argument("declared n does not match the assignments");
    int eps = 1;
    if (j.contains("epsilon")) {
        if (j.at("epsilon").is_string())
            eps = j.at("epsilon").get<std::string>() == "-" ? -1 : 1;
        else
            eps = j.at("epsilon").get<int>();
    }
    in.space = SymmetricSpaceCase::make(kind, n, j.value("n_plus", 0), j.value("n_minus", 0), eps,
                                        j.value("so", false));
    return in;
}

json load_input(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file '" + path + "'");
    return json::parse(f);
}

int cmd_verify(const std::string& identity, int max_size, std::ostream& out, std::ostream& err) {
    auto started = std::chrono::steady_clock::now();
    std::vector<std::string> names =
        identity == "all" ? identity_names() : std::vector<std::string>{identity};
    json failures = json::array();
    long long checked = 0;
    for (const auto& name : names) {
        bool signed_family = identity_takes_signature(name) || name == "glngln-star" || name == "unun";
        int cap = std::min(max_size, signed_family ? 7 : 8);
        for (int k = 0; k <= cap; ++k) {
            for (const auto& nu : partitions_of(k)) {
                std::vector<std::optional<int>> sigs;
                if (identity_takes_signature(name)) {
                    for (int d = -k; d <= k; ++d) sigs.push_back(d);
                } else {
                    sigs.push_back(std::nullopt);
                }
                for (auto d : sigs) {
                    auto r = check_identity(name, nu, d);
                    ++checked;
                    if (!r.equal) {
                        json f{{"identity", name}, {"nu", nu.to_string()},
                               {"lhs", int_json(r.lhs)}, {"rhs", int_json(r.rhs)}};
                        if (d) f["signature"] = *d;
                        failures.push_back(f);
                    }
                }
            }
            err << name << ": size " << k << " done\n";
        }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    json report{{"command", "verify"},
                {"identity", identity},
                {"max_size", max_size},
                {"checked", checked},
                {"failures", failures},
                {"ok", failures.empty()},
                {"wall_ms", ms}};
    out << report.dump(2) << "\n";
    return failures.empty() ? 0 : 1;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariant-dimension and identity-verification toolkit"};
    app.require_subcommand(1);

    /* verify */
    auto* verify = app.add_subcommand("verify", "check the combinatorial identities");
    std::string identity = "all";
    int max_size = 6;
    verify->add_option("--identity", identity, "identity key or 'all'");
    verify->add_option("--max-size", max_size, "largest cycle-type size to sweep");

    /* char */
    auto* chr = app.add_subcommand("char", "symmetric-group character value");
    std::string rho_text, nu_text;
    bool use_oracle = false;
    chr->add_option("--rho", rho_text, "character label, e.g. [2,1]")->required();
    chr->add_option("--nu", nu_text, "cycle type, e.g. [3]")->required();
    chr->add_flag("--oracle", use_oracle, "use the Kostka/power-sum oracle");

    /* involutions */
    auto* inv = app.add_subcommand("involutions", "centralizer involution counts");
    std::string inv_nu, family = "plain", filter_name = "none", weight_name = "one";
    int inv_signature = 0;
    bool inv_has_signature = false;
    inv->add_option("--nu", inv_nu, "cycle type")->required();
    inv->add_option("--family", family, "plain | plus | star");
    inv->add_option("--filter", filter_name, "none | ff | no-odd-fixed | no-even-fixed-no-half");
    inv->add_option("--weight", weight_name,
                    "one | neg1-l2 | neg2-l1 | pow2-l1 | unitary-uu | unitary-on | unitary-son");
    auto* inv_sig_opt = inv->add_option("--signature", inv_signature, "signature class d");

    /* tableaux */
    auto* tab = app.add_subcommand("tableaux", "signed tableau counts");
    std::string mu_text, fixed_by;
    int tab_signature = 0;
    bool tab_has_signature = false;
    tab->add_option("--mu", mu_text, "shape")->required();
    auto* tab_sig_opt = tab->add_option("--signature", tab_signature, "signature class d");
    tab->add_option("--fixed-by", fixed_by, "phi | psi | phipsi");

    /* orbits */
    auto* orb = app.add_subcommand("orbits", "power-map orbit table");
    long long q = 3;
    std::string twist_name = "split";
    int max_level = 1;
    orb->add_option("--q", q, "odd prime power, 3..97")->required();
    orb->add_option("--twist", twist_name, "split | nonsplit");
    orb->add_option("--max-level", max_level, "levels to enumerate, 1..6");

    /* mult / crosscheck / unipotent-table */
    auto* mult = app.add_subcommand("mult", "invariant dimension for a labeled character");
    std::string case_key, input_path = "-";
    mult->add_option("--case", case_key, "case key, e.g. gl-sp")->required();
    mult->add_option("--input", input_path, "JSON input file, '-' for stdin");

    auto* cross = app.add_subcommand("crosscheck", "compare the two basic-character routes");
    std::string cross_case, cross_input = "-";
    cross->add_option("--case", cross_case, "case key")->required();
    cross->add_option("--input", cross_input, "JSON input file, '-' for stdin");

    auto* uni = app.add_subcommand("unipotent-table", "closed-form table over all rho of n");
    std::string uni_case, format = "json", uni_eps = "+";
    int uni_n = 0, uni_n_plus = -1;
    uni->add_option("--case", uni_case, "case key")->required();
    uni->add_option("--n", uni_n, "rank")->required();
    uni->add_option("--n-plus", uni_n_plus, "n_plus for the two-factor cases");
    uni->add_option("--epsilon", uni_eps, "+ or -");
    uni->add_option("--format", format, "json | csv");

    std::vector<const char*> argv;
    argv.push_back("finsym");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    inv_has_signature = inv_sig_opt->count() > 0;
    tab_has_signature = tab_sig_opt->count() > 0;

    if (verify->parsed()) return cmd_verify(identity, max_size, out, err);

    if (chr->parsed()) {
        Partition rho = Partition::parse(rho_text), nu = Partition::parse(nu_text);
        Int v = use_oracle ? character_oracle(rho, nu) : character(rho, nu);
        out << int_json(v).dump() << "\n";
        return 0;
    }

    if (inv->parsed()) {
        Partition nu = Partition::parse(inv_nu);
        auto filter = filter_by_name(filter_name);
        auto weight = weight_by_name(weight_name);
        std::optional<int> d;
        if (inv_has_signature) d = inv_signature;
        Int count, weighted;
        if (family == "plain") {
            count = weighted_involution_sum(nu, filter, {});
            weighted = weighted_involution_sum(nu, filter, weight);
        } else if (family == "plus" || family == "star") {
            auto f = family == "plus" ? SignedFamily::Plus : SignedFamily::Star;
            count = count_signed(nu, f, d);
            weighted = weighted_signed_sum(nu, f, d, weight);
        } else {
            throw CLI::ValidationError("--family", "unknown family '" + family + "'");
        }
        out << json{{"count", int_json(count)}, {"weighted_sum", int_json(weighted)}}.dump(2)
            << "\n";
        return 0;
    }

    if (tab->parsed()) {
        Partition mu = Partition::parse(mu_text);
        std::optional<int> d;
        if (tab_has_signature) d = tab_signature;
        Int count = 0;
        if (fixed_by.empty()) {
            count = count_tableaux(mu, d);
        } else {
            enumerate_tableaux(mu, d, [&](const TableauClass& t) {
                TableauClass image = fixed_by == "phi"      ? flip_all(t)
                                     : fixed_by == "psi"    ? reverse_rows(t)
                                     : fixed_by == "phipsi" ? flip_all(reverse_rows(t))
                                                            : throw CLI::ValidationError(
                                                                  "--fixed-by", "unknown value");
                if (image == t) ++count;
            });
        }
        out << json{{"count", int_json(count)}}.dump(2) << "\n";
        return 0;
    }

    if (orb->parsed()) {
        Twist twist = twist_name == "nonsplit" ? Twist::Nonsplit : Twist::Split;
        auto table = enumerate_orbits(q, twist, max_level);
        json rows = json::array();
        for (size_t i = 0; i < table.orbits.size(); ++i) {
            const auto& o = table.orbits[i];
            rows.push_back({{"index", i},
                            {"tag", to_string(o.tag)},
                            {"m", o.m},
                            {"d", o.d},
                            {"partner", o.partner},
                            {"representative", o.rep},
                            {"modulus", o.modulus}});
        }
        out << json{{"q", q}, {"twist", to_string(twist)}, {"orbits", rows}}.dump(2) << "\n";
        return 0;
    }

    if (mult->parsed()) {
        auto in = parse_mult_input(case_key, load_input(input_path));
        in.assignment.table = &in.table; /* re-anchor after the move out */
        Int v = in.space.so_variant ? so_multiplicity(in.space, in.assignment)
                                    : multiplicity(in.space, in.assignment);
        out << json{{"multiplicity", int_json(v)}}.dump(2) << "\n";
        return 0;
    }

    if (cross->parsed()) {
        auto in = parse_mult_input(cross_case, load_input(cross_input));
        in.assignment.table = &in.table; /* re-anchor after the move out */
        Int a = basic_character_multiplicity(in.space, in.assignment, Route::Involution);
        Int b = basic_character_multiplicity(in.space, in.assignment, Route::Character);
        out << json{{"involution_route", int_json(a)},
                    {"character_route", int_json(b)},
                    {"equal", a == b}}
                   .dump(2)
            << "\n";
        return a == b ? 0 : 1;
    }

    if (uni->parsed()) {
        CaseKind kind = SymmetricSpaceCase::kind_from_key(uni_case);
        int n_plus = uni_n_plus >= 0 ? uni_n_plus : uni_n;
        auto space = SymmetricSpaceCase::make(kind, uni_n, n_plus, uni_n - n_plus,
                                              uni_eps == "-" ? -1 : 1);
        json rows = json::array();
        std::ostringstream csv;
        csv << "rho,value\n";
        for (const auto& rho : partitions_of(uni_n)) {
            Int v = unipotent_multiplicity(space, rho);
            rows.push_back({{"rho", rho.to_string()}, {"value", int_json(v)}});
            csv << "\"" << rho.to_string() << "\"," << v << "\n";
        }
        if (format == "csv")
            out << csv.str();
        else
            out << json{{"case", uni_case}, {"n", uni_n}, {"rows", rows}}.dump(2) << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace finsym
