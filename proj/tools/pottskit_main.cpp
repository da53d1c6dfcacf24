// pottskit: command-line surface over the exact fusion / Fock / character
// toolkit.  Exit codes: 0 pass, 1 verification failure, 2 usage error,
// 3 resource or truncation limit.

#include <CLI11.hpp>
#include <json.hpp>

#include "potts/chars/branch.hpp"
#include "potts/chars/series.hpp"
#include "potts/fock/conformal.hpp"
#include "potts/fock/evidence.hpp"
#include "potts/fock/vertex.hpp"
#include "potts/fusion/builtin.hpp"
#include "potts/fusion/grading.hpp"
#include "potts/fusion/verlinde.hpp"
#include "potts/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace potts;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr const char* kConfigEnvVar = "POTTSKIT_CONFIG";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Rational cutoff = 6;
    long scale = chars::kDefaultScale;
    std::string format = "text";  // text | json
    std::vector<std::vector<long>> gram = {{4, -2}, {-2, 4}};
};

Rational cli_rational(const std::string& s) {
    try {
        return potts::parse_rational(s);
    } catch (const std::exception&) {
        throw UsageError("not an exact rational: '" + s + "'");
    }
}

/// Parses `[[4,-2],[-2,4]]` into an integer matrix.
std::vector<std::vector<long>> parse_gram(const std::string& s) {
    std::vector<std::vector<long>> rows;
    std::vector<long> row;
    std::string tok;
    auto flush_tok = [&] {
        if (tok.empty()) return;
        row.push_back(std::stol(tok));
        tok.clear();
    };
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') {
            ++depth;
        } else if (ch == ']') {
            flush_tok();
            if (depth == 2 && !row.empty()) {
                rows.push_back(row);
                row.clear();
            }
            --depth;
        } else if (ch == ',') {
            flush_tok();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            tok += ch;
        }
    }
    if (rows.empty()) throw UsageError("malformed gram matrix: '" + s + "'");
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw UsageError("gram matrix is not square: '" + s + "'");
    return rows;
}

/// Flat key-value config file with one inline gram block, e.g.
///   cutoff = 6
///   scale = 240
///   format = text
///   gram = [[4,-2],[-2,4]]
void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw UsageError("malformed config line: '" + line + "'");
            continue;
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "cutoff") {
            cfg.cutoff = cli_rational(value);
        } else if (key == "scale") {
            cfg.scale = std::stol(value);
        } else if (key == "format") {
            cfg.format = value;
        } else if (key == "gram") {
            cfg.gram = parse_gram(value);
        } else {
            throw UsageError("unknown config key: '" + key + "'");
        }
    }
}

void validate(const RunConfig& cfg) {
    if (cfg.cutoff <= 0) throw UsageError("cutoff must be positive");
    if (cfg.scale <= 0) throw UsageError("scale must be positive");
    if (cfg.format != "text" && cfg.format != "json")
        throw UsageError("format must be 'text' or 'json'");
}

fock::Lattice config_lattice(const RunConfig& cfg) {
    std::vector<Vec> gram;
    for (const auto& row : cfg.gram) {
        Vec r;
        for (long v : row) r.push_back(Rational(v));
        gram.push_back(std::move(r));
    }
    return fock::make_lattice(gram);
}

fusion::FusionRing named_table(const std::string& name) {
    try {
        return fusion::builtin_table(name);
    } catch (const std::invalid_argument&) {
        std::string names;
        for (const auto& n : fusion::builtin_table_names()) names += " " + n;
        throw UsageError("unknown table '" + name + "'; available:" + names);
    }
}

json ring_to_json(const fusion::FusionRing& r) {
    json labels = json::array();
    for (const auto& l : r.basis()) labels.push_back(l.display());
    json dual = json::array();
    for (std::size_t i = 0; i < r.size(); ++i) dual.push_back(r.dual(i));
    json products = json::object();
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) {
            json out = json::object();
            for (const auto& [k, n] : r.multiply(i, j)) out[r.label(k).display()] = n;
            products[r.label(i).display() + " x " + r.label(j).display()] = out;
        }
    return json{{"name", r.name()},
                {"labels", labels},
                {"identity", r.identity_index()},
                {"dual", dual},
                {"products", products}};
}

int cmd_tables(const RunConfig& cfg, const std::string& name, bool verify) {
    const auto ring = named_table(name);
    if (cfg.format == "json") {
        json out = ring_to_json(ring);
        if (verify) {
            const auto rep = ring.check_axioms();
            out["axioms"] = rep.all_pass() ? "pass" : "fail";
        }
        std::cout << out.dump(2) << "\n";
        if (verify && !ring.check_axioms().all_pass()) return kExitFail;
        return kExitPass;
    }
    std::cout << ring.serialize();
    if (verify) {
        const auto rep = ring.check_axioms();
        if (rep.all_pass()) {
            std::cout << "axioms: pass\n";
        } else {
            for (const auto& r : rep.results)
                if (!r.pass) std::cout << "axioms: FAIL " << r.axiom << " at " << r.witness << "\n";
            return kExitFail;
        }
    }
    return kExitPass;
}

int cmd_derive_table_b(const RunConfig& cfg, const std::vector<std::string>& drop) {
    const auto d = derive_table_b(drop, fock::Cutoff(cfg.cutoff));
    bool all_established = true;
    for (const auto& item : d.items) {
        std::cout << "evidence (" << item.id << "): "
                  << (item.established ? "nonzero" : "NOT ESTABLISHED");
        for (const auto& t : item.triples)
            std::cout << " [" << t[0] << " x " << t[1] << " -> " << t[2] << "]";
        std::cout << "\n";
        all_established = all_established && item.established;
    }
    for (const auto& id : drop) std::cout << "evidence (" << id << "): dropped\n";

    const auto ext = fusion::builtin_table("B_ext");
    if (std::holds_alternative<fusion::AmbiguityReport>(d.result)) {
        std::cout << std::get<fusion::AmbiguityReport>(d.result).describe(ext.basis());
        std::cout << "derived ring == Table B: AMBIGUOUS\n";
        return kExitFail;
    }
    const auto& derived = std::get<fusion::FusionRing>(d.result);
    if (!derived.same_table(ext)) {
        std::cout << "derived ring:\n" << derived.serialize();
        std::cout << "builtin Table B:\n" << ext.serialize();
        std::cout << "derived ring == Table B: FAIL\n";
        return kExitFail;
    }
    std::cout << "derived ring == Table B: PASS\n";
    return all_established ? kExitPass : kExitFail;
}

int cmd_gradings(const std::string& name, unsigned max_order) {
    const auto ring = named_table(name);
    const auto gg = fusion::enumerate_gradings(ring, max_order);

    std::vector<std::pair<fusion::GradingAssignment, std::string>> special;
    if (name == "B_ext") {
        std::vector<long> exps(ring.size(), 0);
        exps[ring.index_of("W(2/3,+)")] = 1;
        exps[ring.index_of("W(1/15,+)")] = 1;
        exps[ring.index_of("W(2/3,-)")] = 2;
        exps[ring.index_of("W(1/15,-)")] = 2;
        special.emplace_back(fusion::make_grading(ring, 3, exps), "Theorem A");
    } else if (name == "sigma_fixed_sub") {
        std::vector<long> exps(ring.size(), 0);
        exps[ring.index_of("3")] = 1;
        exps[ring.index_of("2/5")] = 1;
        special.emplace_back(fusion::make_grading(ring, 2, exps), "Theorem B: mu_T");
    } else if (name == "C_full") {
        std::vector<long> exps(ring.size(), 0);
        for (const char* odd : {"1/8", "13/8", "1/40", "21/40"}) exps[ring.index_of(odd)] = 1;
        special.emplace_back(fusion::make_grading(ring, 2, exps), "sigma");
    }

    std::cout << "gradings of " << name << " (orders up to " << max_order
              << "): " << gg.assignments.size() << " assignments\n";
    for (std::size_t i = 0; i < gg.assignments.size(); ++i) {
        const auto& g = gg.assignments[i];
        std::cout << "g" << (i + 1) << " (order " << g.order << "): " << g.str();
        for (const auto& [sg, tag] : special)
            if (g == sg) std::cout << "  [" << tag << "]";
        std::cout << "\n";
    }
    std::cout << "group: " << (gg.cyclic ? "cyclic" : "abelian") << " of order " << gg.group_order
              << "\n";
    return kExitPass;
}

fock::FockVector read_fock_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read vector file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return fock::FockVector::parse(buf.str());
    } catch (const std::exception& e) {
        throw UsageError("malformed vector in " + path + ": " + e.what());
    }
}

int cmd_fock_mode(const RunConfig& cfg, const std::string& n, const std::string& ufile,
                  const std::string& vfile) {
    const auto lat = config_lattice(cfg);
    const auto u = read_fock_vector(ufile);
    const auto v = read_fock_vector(vfile);
    const auto r = fock::vertex_mode(lat, u, cli_rational(n), v, fock::Cutoff(cfg.cutoff));
    if (r.is_zero())
        std::cout << "0\n";
    else
        std::cout << r.serialize();
    return kExitPass;
}

int cmd_conformal() {
    const auto& lat = fock::sqrt2_a2();
    const auto triple = fock::conformal_triple_search(lat);
    for (int i = 0; i < 3; ++i) {
        std::cout << "w" << (i + 1) << " (central charge " << to_string(triple[i].central_charge)
                  << "):\n"
                  << triple[i].vector.serialize();
    }
    std::cout << "sum == omega: "
              << ((triple[0].vector + triple[1].vector + triple[2].vector ==
                   fock::virasoro_vector(lat))
                      ? "yes"
                      : "NO")
              << "\n";
    return kExitPass;
}

int cmd_characters(const RunConfig& cfg, const std::string& coset) {
    int g = -1;
    if (coset == "M0") g = 0;
    if (coset == "M1") g = 1;
    if (coset == "M2") g = 2;
    if (g < 0) throw UsageError("coset must be M0, M1 or M2");
    const auto lat = config_lattice(cfg);
    const auto rep = fock::coset_rep(g);

    const auto theta = chars::theta_series(lat, rep, cfg.cutoff, cfg.scale);
    const auto gd = chars::graded_dim_module(lat, rep, cfg.cutoff, cfg.scale);
    std::cout << "theta series (" << coset << "):\n" << theta.series.str();
    std::cout << "graded dimensions (" << coset << "):\n" << gd.series.str();

    const auto br = chars::branch_module(lat, rep, cfg.cutoff, cfg.scale);
    std::cout << "branching (" << coset << "):\n";
    if (!br.success) {
        std::cout << "failed: " << br.diagnosis << "\n";
        return kExitFail;
    }
    auto sorted = br.components;
    std::sort(sorted.begin(), sorted.end());
    json out = json::object();
    for (const auto& [w, m] : sorted)
        out["(" + to_string(w[0]) + "," + to_string(w[1]) + "," + to_string(w[2]) + ")"] = m;
    std::cout << out.dump(2) << "\n";
    return kExitPass;
}

int cmd_verify_all() {
    const auto checks = run_verification_suite();
    bool all_pass = true, truncated = false;
    for (const auto& c : checks) {
        std::cout << "check " << c.id << " (" << c.name << "): " << (c.pass ? "pass" : "FAIL");
        if (!c.pass) std::cout << " -- " << c.detail;
        std::cout << "\n";
        all_pass = all_pass && c.pass;
        truncated = truncated || c.detail.rfind("truncation:", 0) == 0;
    }
    std::cout << (all_pass ? "verify-all: PASS\n" : "verify-all: FAIL\n");
    if (all_pass) return kExitPass;
    return truncated ? kExitResource : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fusion-rule, Fock-space and character toolkit"};
    app.require_subcommand(1);

    std::string cutoff_str, scale_str, format_str, config_path;
    app.add_option("--cutoff", cutoff_str, "degree cutoff (exact rational, default 6)");
    app.add_option("--scale", scale_str, "series exponent denominator scale");
    app.add_option("--format", format_str, "output format: text | json");
    app.add_option("--config", config_path,
                   "config file path (default: $" + std::string(kConfigEnvVar) + ")");

    auto* t = app.add_subcommand("tables", "emit a built-in fusion table");
    std::string table_name;
    bool verify = false;
    t->add_option("name", table_name, "table name")->required();
    t->add_flag("--verify", verify, "also run the axiom checker");

    auto* dtb = app.add_subcommand("derive-table-b",
                                   "derive the extension fusion table from Fock-space evidence");
    std::vector<std::string> drop_evidence;
    dtb->add_option("--drop-evidence", drop_evidence, "withhold evidence items by id (e.g. 2.7)");

    auto* gr = app.add_subcommand("gradings", "enumerate root-of-unity gradings of a table");
    std::string grading_table;
    unsigned max_order = 6;
    gr->add_option("name", grading_table, "table name")->required();
    gr->add_option("--max-order", max_order, "largest grading order considered (default 6)");

    auto* fm = app.add_subcommand("fock-mode", "apply the n-th vertex mode of one vector to another");
    std::string mode_n, ufile, vfile;
    fm->add_option("-n,--n", mode_n, "mode index (exact rational)")->required();
    fm->add_option("u", ufile, "file with the acting vector")->required();
    fm->add_option("v", vfile, "file with the target vector")->required();

    app.add_subcommand("conformal", "search for the charge-(1/2, 7/10, 4/5) conformal triple");

    auto* ch = app.add_subcommand("characters", "coset theta/graded-dimension/branching reports");
    std::string coset = "M0";
    ch->add_option("--coset", coset, "coset module: M0 | M1 | M2");

    app.add_subcommand("verify-all", "run the full verification suite");

    // allow the global flags (--cutoff etc.) after the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        RunConfig cfg;
        if (config_path.empty())
            if (const char* env = std::getenv(kConfigEnvVar)) config_path = env;
        if (!config_path.empty()) load_config_file(cfg, config_path);
        if (!cutoff_str.empty()) cfg.cutoff = cli_rational(cutoff_str);
        if (!scale_str.empty()) cfg.scale = std::stol(scale_str);
        if (!format_str.empty()) cfg.format = format_str;
        validate(cfg);

        if (t->parsed()) return cmd_tables(cfg, table_name, verify);
        if (dtb->parsed()) return cmd_derive_table_b(cfg, drop_evidence);
        if (gr->parsed()) return cmd_gradings(grading_table, max_order);
        if (fm->parsed()) return cmd_fock_mode(cfg, mode_n, ufile, vfile);
        if (app.get_subcommand("conformal")->parsed()) return cmd_conformal();
        if (ch->parsed()) return cmd_characters(cfg, coset);
        if (app.get_subcommand("verify-all")->parsed()) return cmd_verify_all();
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TruncationError& e) {
        std::cerr << "truncation: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
