// qalg: exact-arithmetic workbench for graded quiver algebras.
//
// Subcommands: info, check-grading, cartan, snf, singularity-k0, motive,
// resolve, ext, verify-lemma. Every subcommand reads an algebra-description
// document (or a corpus manifest) and renders either a human table (--format
// text) or a stable versioned JSON tree (--format tree).
//
// Exit codes: 0 ok, 1 internal error, 2 parse error, 3 validation error,
// 4 property failure, 5 inconclusive.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qalg/cartan.hpp"
#include "qalg/lemma.hpp"
#include "qalg/presentation.hpp"
#include "qalg/resolution.hpp"

using json = nlohmann::ordered_json;
using namespace qalg;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "0x" << std::hex << std::setfill('0') << std::setw(16) << h;
    return os.str();
}

json provenance(const std::filesystem::path& path) {
    return json{{"path", path.string()}, {"fnv1a64", fnv1a64(read_file(path))}};
}

json tree_root(const std::string& command, const std::filesystem::path& input) {
    json root;
    root["schema_version"] = 1;
    root["command"] = command;
    root["input"] = provenance(input);
    root["options"] = json::object();
    return root;
}

void emit(const json& root) { std::cout << root.dump(2) << "\n"; }

std::string render_imat(const IMat& m) {
    std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 1);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            width[static_cast<std::size_t>(j)] =
                std::max(width[static_cast<std::size_t>(j)], std::to_string(m(i, j)).size());
        }
    }
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << std::setw(static_cast<int>(width[static_cast<std::size_t>(j)])) << m(i, j);
        }
        os << "]\n";
    }
    return os.str();
}

json imat_to_json(const IMat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

// transform entries can exceed 64 bits, so they are carried as decimal strings
json bigmat_to_json(const BigMat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

std::string render_bigmat(const BigMat& m) {
    std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 1);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            width[static_cast<std::size_t>(j)] =
                std::max(width[static_cast<std::size_t>(j)], m(i, j).get_str().size());
        }
    }
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << std::setw(static_cast<int>(width[static_cast<std::size_t>(j)])) << m(i, j).get_str();
        }
        os << "]\n";
    }
    return os.str();
}

json group_to_json(const AbelianGroup& g) {
    return json{{"pretty", g.str()}, {"free_rank", g.free_rank}, {"torsion", g.torsion}};
}

struct Parsed {
    Presentation pres;
    std::filesystem::path path;
};

Parsed load_algebra(const std::string& path) {
    return {parse_presentation_file(path), path};
}

// Runs f on the algebra built over its declared field.
template <class F>
void on_algebra(const Parsed& in, F&& f) {
    with_field(in.pres.field, [&](auto ctx) {
        using K = decltype(ctx.one());
        const auto alg = std::make_shared<const GradedAlgebra<K>>(build_algebra<K>(in.pres, ctx));
        f(alg);
    });
}

int cmd_info(const std::string& path, const std::string& format) {
    const Parsed in = load_algebra(path);
    int rc = 0;
    on_algebra(in, [&](const auto& alg) {
        const GradingReport grading = validate_grading(*alg);
        std::map<int, long> by_degree;
        for (const auto& b : alg->basis) ++by_degree[b.degree];
        if (format == "tree") {
            json root = tree_root("info", in.path);
            json& r = root["result"];
            r["field"] = alg->presentation.field.str();
            r["n"] = alg->n();
            r["dimension"] = static_cast<long>(alg->dim());
            r["loewy_length"] = alg->loewy_length;
            json deg = json::object();
            for (const auto& [d, c] : by_degree) deg[std::to_string(d)] = c;
            r["basis_by_degree"] = deg;
            r["grading_all_pass"] = grading.all_pass;
            emit(root);
        } else {
            std::cout << "field: " << alg->presentation.field.str() << "\n";
            std::cout << "vertices: " << alg->n() << "\n";
            std::cout << "dimension: " << alg->dim() << "\n";
            std::cout << "loewy length: " << alg->loewy_length << "\n";
            std::cout << "basis by degree:";
            for (const auto& [d, c] : by_degree) std::cout << " " << d << ":" << c;
            std::cout << "\n";
            std::cout << "grading: " << (grading.all_pass ? "PASS" : "FAIL") << " ("
                      << grading.clauses.size() << " clauses)\n";
        }
        rc = grading.all_pass ? 0 : 3;
    });
    return rc;
}

int cmd_check_grading(const std::string& path, const std::string& format) {
    const Parsed in = load_algebra(path);
    int rc = 0;
    on_algebra(in, [&](const auto& alg) {
        const GradingReport grading = validate_grading(*alg);
        if (format == "tree") {
            json root = tree_root("check-grading", in.path);
            json clauses = json::array();
            for (const auto& c : grading.clauses) {
                clauses.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            }
            root["result"] = {{"clauses", clauses}, {"all_pass", grading.all_pass}};
            emit(root);
        } else {
            for (const auto& c : grading.clauses) {
                std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
            }
            std::cout << (grading.all_pass ? "grading: PASS\n" : "grading: FAIL\n");
        }
        rc = grading.all_pass ? 0 : 3;
    });
    return rc;
}

int cmd_cartan(const std::string& path, const std::string& format) {
    const Parsed in = load_algebra(path);
    on_algebra(in, [&](const auto& alg) {
        const CartanMatrix c = cartan_matrix(*alg);
        if (format == "tree") {
            json root = tree_root("cartan", in.path);
            root["result"] = {{"n", c.n()},
                              {"dimension", static_cast<long>(alg->dim())},
                              {"matrix", imat_to_json(c.c)}};
            emit(root);
        } else {
            std::cout << "Cartan matrix (rows [P_i], columns [S_j]):\n" << render_imat(c.c);
            std::cout << "entry sum = dim Lambda = " << alg->dim() << "\n";
        }
    });
    return 0;
}

int cmd_snf(const std::string& path, const std::string& format) {
    const Parsed in = load_algebra(path);
    on_algebra(in, [&](const auto& alg) {
        const CartanMatrix c = cartan_matrix(*alg);
        const SNFDecomposition snf = smith_normal_form(c.c);
        if (format == "tree") {
            json root = tree_root("snf", in.path);
            root["result"] = {{"cartan", imat_to_json(c.c)},
                              {"d", imat_to_json(snf.d)},
                              {"u", bigmat_to_json(snf.u)},
                              {"v", bigmat_to_json(snf.v)},
                              {"invariant_factors", snf.invariant_factors()}};
            emit(root);
        } else {
            std::cout << "Smith normal form U*C*V = D\n";
            std::cout << "C =\n" << render_imat(c.c);
            std::cout << "D =\n" << render_imat(snf.d);
            std::cout << "U =\n" << render_bigmat(snf.u);
            std::cout << "V =\n" << render_bigmat(snf.v);
        }
    });
    return 0;
}

int cmd_singularity_k0(const std::string& path, const std::string& spec_path,
                       const std::string& format) {
    const Parsed in = load_algebra(path);
    on_algebra(in, [&](const auto& alg) {
        const CartanMatrix c = cartan_matrix(*alg);
        const AbelianGroup k0 = k0_singularity(c.c);
        const GradedGroupSpec spec =
            spec_path.empty() ? GradedGroupSpec::k0_only() : parse_group_spec_file(spec_path);
        const ConeResult cone = cone_invariant(c.c, spec);
        if (format == "tree") {
            json root = tree_root("singularity-k0", in.path);
            if (!spec_path.empty()) root["options"]["spec"] = provenance(spec_path);
            json degrees = json::array();
            for (const auto& [d, parts] : cone.degrees) {
                degrees.push_back({{"degree", d},
                                   {"cokernel_part", group_to_json(parts.cokernel_part)},
                                   {"kernel_part", group_to_json(parts.kernel_part)}});
            }
            root["result"] = {{"k0_dsg", group_to_json(k0)},
                              {"cone", {{"trivial", cone.trivial}, {"degrees", degrees}}}};
            emit(root);
        } else {
            std::cout << "K0(Dsg) = " << k0.str() << "\n";
            if (cone.trivial) {
                std::cout << "cone(C on E(k)^n) = 0 in every degree\n";
            } else {
                std::cout << "cone degrees (0 -> coker(C on A_i) -> pi_i(cone) -> ker(C on A_(i-1)) "
                             "-> 0, extension not resolved):\n";
                for (const auto& [d, parts] : cone.degrees) {
                    std::cout << "  degree " << d << ": coker = " << parts.cokernel_part.str()
                              << ", ker = " << parts.kernel_part.str() << "\n";
                }
            }
        }
    });
    return 0;
}

int cmd_motive(const std::string& path, const std::string& format) {
    const Parsed in = load_algebra(path);
    on_algebra(in, [&](const auto& alg) {
        const CartanMatrix c = cartan_matrix(*alg);
        const MotiveVerdict v = motive_triviality(c.c);
        if (format == "tree") {
            json root = tree_root("motive", in.path);
            root["result"] = {{"trivial", v.trivial}, {"det", v.det}, {"k0_dsg", group_to_json(v.k0_sg)}};
            emit(root);
        } else {
            if (v.trivial) {
                std::cout << "trivial motive (det = " << v.det << ")\n";
            } else {
                std::cout << "nontrivial motive: det = " << v.det << ", K0(Dsg) = " << v.k0_sg.str()
                          << "\n";
            }
        }
    });
    return 0;
}

template <scalar_field K>
json resolution_to_json(const GradedResolution<K>& res, const Quiver& q) {
    json terms = json::array();
    for (const auto& spec : res.term_specs) {
        std::map<std::pair<int, int>, long> mult;
        for (const ProjTerm& t : spec) ++mult[{t.vertex, t.twist}];
        json term = json::array();
        for (const auto& [key, count] : mult) {
            term.push_back({{"vertex", q.vertices[static_cast<std::size_t>(key.first)]},
                            {"twist", key.second},
                            {"mult", count}});
        }
        terms.push_back(term);
    }
    return json{{"length", res.length()}, {"finite", res.finite}, {"terms", terms}};
}

template <scalar_field K>
void render_resolution_text(const GradedResolution<K>& res, const Quiver& q) {
    for (std::size_t i = 0; i < res.term_specs.size(); ++i) {
        std::map<std::pair<int, int>, long> mult;
        for (const ProjTerm& t : res.term_specs[i]) ++mult[{t.vertex, t.twist}];
        std::cout << "  P^" << i << " = ";
        if (mult.empty()) std::cout << "0";
        bool first = true;
        for (const auto& [key, count] : mult) {
            if (!first) std::cout << " + ";
            first = false;
            std::cout << "P(" << q.vertices[static_cast<std::size_t>(key.first)] << ")(" << key.second
                      << ")";
            if (count > 1) std::cout << "^" << count;
        }
        std::cout << "\n";
    }
    // Betti table: rows i, columns internal generator degree (= -twist)
    std::map<int, std::map<int, long>> betti;
    int min_d = 0, max_d = 0;
    for (std::size_t i = 0; i < res.term_specs.size(); ++i) {
        for (const ProjTerm& t : res.term_specs[i]) {
            const int d = -t.twist;
            ++betti[static_cast<int>(i)][d];
            min_d = std::min(min_d, d);
            max_d = std::max(max_d, d);
        }
    }
    std::cout << "  betti (rows i, columns generator degree " << min_d << ".." << max_d << "):\n";
    for (std::size_t i = 0; i < res.term_specs.size(); ++i) {
        std::cout << "    i=" << i << ":";
        for (int d = min_d; d <= max_d; ++d) {
            const auto& row = betti[static_cast<int>(i)];
            std::cout << " " << std::setw(3) << (row.count(d) ? row.at(d) : 0);
        }
        std::cout << "\n";
    }
    std::cout << (res.finite ? "  (resolution terminated: finite projective dimension)\n"
                             : "  (truncated at the requested depth)\n");
}

int cmd_resolve(const std::string& path, std::vector<std::string> selectors, int depth,
                const std::string& format) {
    const Parsed in = load_algebra(path);
    on_algebra(in, [&](const auto& alg) {
        if (selectors.empty()) {
            for (const auto& v : alg->presentation.quiver.vertices) selectors.push_back("S" + v);
        }
        json modules = json::array();
        for (const std::string& sel_text : selectors) {
            const ModuleSelector sel = ModuleSelector::parse(sel_text);
            const auto m = select_module(alg, sel);
            const auto res = minimal_graded_resolution(m, depth);
            if (format == "tree") {
                json entry = resolution_to_json(res, alg->presentation.quiver);
                entry["module"] = sel.str();
                modules.push_back(entry);
            } else {
                std::cout << "minimal graded resolution of " << sel.str() << " to depth " << depth
                          << ":\n";
                render_resolution_text(res, alg->presentation.quiver);
            }
        }
        if (format == "tree") {
            json root = tree_root("resolve", in.path);
            root["options"]["depth"] = depth;
            root["options"]["modules"] = selectors;
            root["result"] = {{"resolutions", modules}};
            emit(root);
        }
    });
    return 0;
}

int cmd_ext(const std::string& path, const std::string& m_sel, const std::string& n_sel, int i_max,
            const std::string& jwindow, const std::string& format) {
    const Parsed in = load_algebra(path);
    on_algebra(in, [&](const auto& alg) {
        const ModuleSelector ms = ModuleSelector::parse(m_sel);
        const ModuleSelector ns = ModuleSelector::parse(n_sel);
        const auto m = select_module(alg, ms);
        const auto n = select_module(alg, ns);
        std::pair<int, int> window = default_j_window(*alg, i_max);
        if (!jwindow.empty()) {
            const auto colon = jwindow.find(':');
            try {
                if (colon == std::string::npos) throw std::invalid_argument(jwindow);
                window.first = std::stoi(jwindow.substr(0, colon));
                window.second = std::stoi(jwindow.substr(colon + 1));
            } catch (const std::exception&) {
                throw parse_error("malformed --jwindow '" + jwindow + "' (expected lo:hi)");
            }
            if (window.first > window.second) throw parse_error("--jwindow lo must be <= hi");
        }
        const auto table = ext_graded(m, n, i_max, window);
        if (format == "tree") {
            json root = tree_root("ext", in.path);
            root["options"] = {{"m", ms.str()}, {"n", ns.str()}, {"i_max", i_max},
                               {"jwindow", {window.first, window.second}}};
            json cells = json::array();
            for (const auto& [cell, dim] : table.entries) {
                if (dim != 0) cells.push_back({{"i", cell.first}, {"j", cell.second}, {"dim", dim}});
            }
            root["result"] = {{"nonzero_cells", cells}};
            emit(root);
        } else {
            std::cout << "ext(" << ms.str() << ", " << ns.str() << "), rows i = 0.." << i_max
                      << ", columns j = " << window.first << ".." << window.second << ":\n";
            std::cout << "      ";
            for (int j = window.first; j <= window.second; ++j) std::cout << std::setw(4) << j;
            std::cout << "\n";
            for (int i = 0; i <= i_max; ++i) {
                std::cout << "  i=" << std::setw(2) << i << ":";
                for (int j = window.first; j <= window.second; ++j) {
                    std::cout << std::setw(4) << table.at(i, j);
                }
                std::cout << "\n";
            }
        }
    });
    return 0;
}

int cmd_verify_lemma(const std::string& manifest_path, int default_i_max, const std::string& format) {
    const Manifest manifest = parse_manifest_file(manifest_path);
    const SweepReport sweep = fixture_sweep(manifest, default_i_max);
    if (format == "tree") {
        json root = tree_root("verify-lemma", manifest_path);
        root["options"]["default_i_max"] = default_i_max;
        json cases = json::array();
        for (const auto& c : sweep.cases) {
            json cells = json::array();
            for (const auto& [cell, dim] : c.report.graded) {
                if (dim != 0) cells.push_back({{"i", cell.first}, {"j", cell.second}, {"dim", dim}});
            }
            cases.push_back({{"algebra", c.algebra_path},
                             {"algebra_fnv1a64", fnv1a64(read_file(c.algebra_path))},
                             {"m", c.m_selector},
                             {"n", c.n_selector},
                             {"verdict", str(c.report.verdict)},
                             {"i_max", c.report.i_max},
                             {"window", {c.report.window_used.first, c.report.window_used.second}},
                             {"positive_cells", c.report.positive_cells},
                             {"nonzero_cells", cells},
                             {"ungraded_dims", c.report.ungraded_dims},
                             {"message", c.report.message},
                             {"forensics", c.report.forensics}});
        }
        root["result"] = {{"summary",
                           {{"cases", static_cast<long>(sweep.cases.size())},
                            {"passed", sweep.passed},
                            {"failed", sweep.failed},
                            {"inconclusive", sweep.inconclusive},
                            {"input_errors", sweep.input_errors},
                            {"empty_warning", sweep.empty}}},
                          {"cases", cases}};
        emit(root);
    } else {
        for (const auto& c : sweep.cases) {
            std::cout << str(c.report.verdict) << " " << c.algebra_path << " (" << c.m_selector << ", "
                      << c.n_selector << "): " << c.report.message << "\n";
            for (const auto& line : c.report.forensics) std::cout << "    " << line << "\n";
        }
        if (sweep.empty) std::cout << "warning: 0 cases (vacuous pass)\n";
        std::cout << "summary: " << sweep.cases.size() << " cases, " << sweep.passed << " passed, "
                  << sweep.failed << " failed, " << sweep.inconclusive << " inconclusive, "
                  << sweep.input_errors << " input errors\n";
    }
    return sweep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for graded quiver algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "tree"}));

    std::string algebra_path, spec_path, manifest_path, jwindow;
    std::string ext_m = "S", ext_n = "S";
    std::vector<std::string> resolve_selectors;
    int depth = 8;
    int i_max = 6;

    auto* info = app.add_subcommand("info", "dimensions, grading, Loewy length");
    info->add_option("algebra", algebra_path)->required();

    auto* check = app.add_subcommand("check-grading", "semi-simple grading validation report");
    check->add_option("algebra", algebra_path)->required();

    auto* cartan = app.add_subcommand("cartan", "Cartan matrix by both routes");
    cartan->add_option("algebra", algebra_path)->required();

    auto* snf = app.add_subcommand("snf", "Smith normal form of the Cartan matrix");
    snf->add_option("algebra", algebra_path)->required();

    auto* sk0 = app.add_subcommand("singularity-k0", "K0 of the singularity category and the cone");
    sk0->add_option("algebra", algebra_path)->required();
    sk0->add_option("--spec", spec_path, "graded group spec file (default: K0-only)");

    auto* motive = app.add_subcommand("motive", "det = +-1 triviality verdict");
    motive->add_option("algebra", algebra_path)->required();

    auto* resolve = app.add_subcommand("resolve", "minimal graded projective resolutions");
    resolve->add_option("algebra", algebra_path)->required();
    resolve->add_option("modules", resolve_selectors, "module selectors (default: all simples)");
    resolve->add_option("--depth", depth, "truncation depth")->check(CLI::NonNegativeNumber);

    auto* ext = app.add_subcommand("ext", "bigraded Ext table");
    ext->add_option("algebra", algebra_path)->required();
    ext->add_option("m", ext_m, "source module selector (default S)");
    ext->add_option("n", ext_n, "target module selector (default S)");
    ext->add_option("--imax", i_max, "maximal cohomological degree")->check(CLI::NonNegativeNumber);
    ext->add_option("--jwindow", jwindow, "twist window lo:hi (default: derived bound)");

    auto* verify = app.add_subcommand("verify-lemma", "decomposition sweep over a corpus manifest");
    verify->add_option("manifest", manifest_path)->required();
    verify->add_option("--imax", i_max, "default i_max for cases without one")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*info) return cmd_info(algebra_path, format);
        if (*check) return cmd_check_grading(algebra_path, format);
        if (*cartan) return cmd_cartan(algebra_path, format);
        if (*snf) return cmd_snf(algebra_path, format);
        if (*sk0) return cmd_singularity_k0(algebra_path, spec_path, format);
        if (*motive) return cmd_motive(algebra_path, format);
        if (*resolve) return cmd_resolve(algebra_path, resolve_selectors, depth, format);
        if (*ext) return cmd_ext(algebra_path, ext_m, ext_n, i_max, jwindow, format);
        if (*verify) return cmd_verify_lemma(manifest_path, i_max, format);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
