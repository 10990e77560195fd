#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "osq/analysis.hpp"
#include "osq/boundary.hpp"
#include "osq/groebner.hpp"
#include "osq/matroid_io.hpp"
#include "osq/poly_io.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string matroid_path;
    std::string order_str;
    std::string q_str;
    int max_degree = 6;
    std::string format = "text";
    int jobs = 1;
    int truncate_gc = -1;
    std::string poly_text;
    std::string order_b_str;
};

osq::GroundOrder parse_order(const std::string& text, int n) {
    std::vector<int> seq;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string part = text.substr(pos, comma - pos);
        try {
            seq.push_back(std::stoi(part) - 1);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad order entry '" + part + "'");
        }
        pos = comma + 1;
    }
    if (static_cast<int>(seq.size()) != n)
        throw std::invalid_argument("order must list all " + std::to_string(n) +
                                    " labels");
    return osq::GroundOrder::from_sequence(seq);
}

osq::OrderPtr active_order(const Options& opt, int n) {
    if (opt.order_str.empty()) return osq::natural_order(n);
    return osq::order_ptr(parse_order(opt.order_str, n));
}

osq::GroebnerData make_gd(const osq::Matroid& m, osq::OrderPtr ord, int truncate) {
    auto gcircuits = osq::groebner_circuits(m, *ord);
    if (truncate >= 0 && truncate < static_cast<int>(gcircuits.size()))
        gcircuits.resize(static_cast<std::size_t>(truncate));
    auto gens = osq::build_generators(m, ord, gcircuits);
    return osq::GroebnerData{m, std::move(ord), std::move(gcircuits), std::move(gens)};
}

std::optional<osq::QEvaluation> q_value(const Options& opt) {
    if (opt.q_str.empty()) return std::nullopt;
    try {
        return osq::QEvaluation{osq::Int(opt.q_str)};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad q value '" + opt.q_str + "'");
    }
}

std::vector<int> labels_1based(osq::Subset s, const osq::GroundOrder& ord) {
    std::vector<int> out;
    for (int l : osq::elements_ascending(s, ord)) out.push_back(l + 1);
    return out;
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_validate(const Options& opt) {
    const osq::Matroid m = osq::load_matroid_file(opt.matroid_path);
    const osq::GroundOrder ord(m.size());
    const auto violations = osq::validate_circuits(m);

    json j;
    j["valid"] = violations.empty();
    j["violations"] = json::array();
    std::string text;
    for (const auto& v : violations) {
        json vj;
        std::string line;
        switch (v.axiom) {
            case osq::CircuitViolation::Axiom::C1:
                vj["axiom"] = "C1";
                vj["circuit"] = labels_1based(v.a, ord);
                line = "C1 violation: circuit " + osq::subset_to_string(v.a, ord) +
                       " has size <= 2";
                break;
            case osq::CircuitViolation::Axiom::C2:
                vj["axiom"] = "C2";
                vj["inner"] = labels_1based(v.a, ord);
                vj["outer"] = labels_1based(v.b, ord);
                line = "C2 violation: " + osq::subset_to_string(v.a, ord) +
                       " is contained in " + osq::subset_to_string(v.b, ord);
                break;
            case osq::CircuitViolation::Axiom::C3:
                vj["axiom"] = "C3";
                vj["first"] = labels_1based(v.a, ord);
                vj["second"] = labels_1based(v.b, ord);
                vj["element"] = v.x + 1;
                line = "C3 violation: circuits " + osq::subset_to_string(v.a, ord) +
                       " and " + osq::subset_to_string(v.b, ord) +
                       " with common element " + std::to_string(v.x + 1) +
                       " admit no circuit in their union minus it";
                break;
        }
        j["violations"].push_back(vj);
        text += line + "\n";
    }
    if (violations.empty())
        text = "ok: " + std::to_string(m.circuits().size()) + " circuits on " +
               std::to_string(m.size()) + " elements satisfy (C1)-(C3)\n";
    emit(opt, j, text);
    return violations.empty() ? 0 : 1;
}

int cmd_circuits(const Options& opt) {
    const osq::Matroid m = osq::load_matroid_file(opt.matroid_path);
    osq::OrderPtr ord = active_order(opt, m.size());
    auto circuits = m.circuits();
    std::sort(circuits.begin(), circuits.end(), [&](osq::Subset a, osq::Subset b) {
        return osq::set_deglex_less(a, b, *ord);
    });

    json j;
    j["n"] = m.size();
    j["circuits"] = json::array();
    std::string text = "circuits (" + std::to_string(circuits.size()) + "):\n";
    for (osq::Subset c : circuits) {
        j["circuits"].push_back(labels_1based(c, *ord));
        text += "  " + osq::subset_to_string(c, *ord) + "\n";
    }
    emit(opt, j, text);
    return 0;
}

int cmd_gb(const Options& opt) {
    const osq::Matroid m = osq::load_matroid_file(opt.matroid_path);
    osq::OrderPtr ord = active_order(opt, m.size());
    const auto gd = make_gd(m, ord, opt.truncate_gc);
    const auto qe = q_value(opt);
    const osq::GeneratorSet gens = qe ? gd.gens.specialized(*qe) : gd.gens;

    json j;
    j["gcircuits"] = json::array();
    std::string text = "groebner circuits (" + std::to_string(gd.gcircuits.size()) + "):\n";
    for (osq::Subset c : gd.gcircuits) {
        j["gcircuits"].push_back(labels_1based(c, *ord));
        text += "  " + osq::subset_to_string(c, *ord) + "\n";
    }
    j["generators"] = json::array();
    text += "generators (" + std::to_string(gens.gens().size()) + "):\n";
    for (const auto& g : gens.gens()) {
        const std::string poly = osq::print_poly(g.poly);
        j["generators"].push_back({{"name", g.name(*ord)}, {"poly", poly}});
        text += "  " + g.name(*ord) + " = " + poly + "\n";
    }
    emit(opt, j, text);
    return 0;
}

int cmd_check(const Options& opt) {
    const osq::Matroid m = osq::load_matroid_file(opt.matroid_path);
    osq::OrderPtr ord = active_order(opt, m.size());
    const auto gd = make_gd(m, ord, opt.truncate_gc);
    const auto qe = q_value(opt);
    const osq::GeneratorSet gens = qe ? gd.gens.specialized(*qe) : gd.gens;

    const auto report = osq::buchberger_verify(gens, opt.jobs);

    bool dep_ok = true;
    const osq::Subset all = m.full_set();
    if (m.size() > 0) {
        for (osq::Subset s = 0;; ++s) {
            if (m.is_dependent(s)) {
                osq::FreePolynomial d = osq::del_minus(s, ord);
                if (qe) d = osq::evaluate_q(d, *qe);
                if (!osq::reduce(std::move(d), gens).is_zero()) {
                    dep_ok = false;
                    break;
                }
            }
            if (s == all) break;
        }
    }

    const bool pass = report.pass && dep_ok;
    json j;
    j["pass"] = pass;
    j["n_obstructions"] = report.n_obstructions;
    j["failures"] = json::array();
    std::string text = "obstructions: " + std::to_string(report.n_obstructions) + "\n";
    for (const auto& fail : report.failures) {
        const auto& o = fail.obstruction;
        const auto& gl = gens.gens()[static_cast<std::size_t>(o.left)];
        const auto& gr = gens.gens()[static_cast<std::size_t>(o.right)];
        const std::string kind =
            o.kind == osq::Obstruction::Kind::Overlap ? "overlap" : "containment";
        j["failures"].push_back({{"pair", {gl.name(*ord), gr.name(*ord)}},
                                 {"kind", kind},
                                 {"normal_form", osq::print_poly(fail.normal_form)}});
        text += "fail: " + gl.name(*ord) + " x " + gr.name(*ord) + " (" + kind +
                " at " + std::to_string(o.offset) +
                ") -> " + osq::print_poly(fail.normal_form) + "\n";
    }
    j["dependent_zero"] = dep_ok;
    text += std::string("buchberger: ") + (report.pass ? "pass" : "fail") + "\n";
    text += std::string("dependent reduction: ") + (dep_ok ? "pass" : "fail") + "\n";
    emit(opt, j, text);
    return pass ? 0 : 1;
}

int cmd_nf(const Options& opt) {
    const osq::Matroid m = osq::load_matroid_file(opt.matroid_path);
    osq::OrderPtr ord = active_order(opt, m.size());
    const auto gd = make_gd(m, ord, opt.truncate_gc);
    const auto qe = q_value(opt);
    const osq::GeneratorSet gens = qe ? gd.gens.specialized(*qe) : gd.gens;

    osq::FreePolynomial f = osq::parse_poly(opt.poly_text, ord);
    if (qe) f = osq::evaluate_q(f, *qe);
    const std::string nf = osq::print_poly(osq::reduce(std::move(f), gens));
    emit(opt, json{{"normal_form", nf}}, nf + "\n");
    return 0;
}

int cmd_hilbert(const Options& opt) {
    const osq::Matroid m = osq::load_matroid_file(opt.matroid_path);
    osq::OrderPtr ord = active_order(opt, m.size());
    const auto gd = make_gd(m, ord, opt.truncate_gc);
    const auto summary = osq::hilbert(gd, opt.max_degree);

    json j;
    j["c"] = summary.c;
    j["numerator"] = summary.numerator;
    j["dims"] = json::object();
    for (std::size_t d = 0; d < summary.dims.size(); ++d)
        j["dims"][std::to_string(d)] = summary.dims[d];

    std::string text = "c:";
    for (long long v : summary.c) text += " " + std::to_string(v);
    text += "\nnumerator: " + summary.numerator + "\ndims:";
    for (long long v : summary.dims) text += " " + std::to_string(v);
    text += "\n";
    emit(opt, j, text);
    return 0;
}

int cmd_koszul(const Options& opt) {
    const osq::Matroid m = osq::load_matroid_file(opt.matroid_path);
    const auto report = osq::koszul_check(m);

    json j;
    if (report.partition) {
        j["supersolvable_partition"] = json::array();
        for (osq::Subset b : report.partition->blocks)
            j["supersolvable_partition"].push_back(labels_1based(b, report.order_used));
    } else {
        j["supersolvable_partition"] = nullptr;
    }
    j["max_gcircuit_size"] = report.max_gcircuit_size;
    j["quadratic"] = report.quadratic;

    std::string text = "supersolvable partition: ";
    if (report.partition) {
        bool first = true;
        for (osq::Subset b : report.partition->blocks) {
            if (!first) text += " | ";
            text += osq::subset_to_string(b, report.order_used);
            first = false;
        }
    } else {
        text += "none";
    }
    text += "\norder used:";
    for (int l : report.order_used.sequence()) text += " " + std::to_string(l + 1);
    text += "\nmax groebner circuit size: " + std::to_string(report.max_gcircuit_size);
    text += std::string("\nquadratic: ") + (report.quadratic ? "true" : "false") + "\n";
    emit(opt, j, text);
    return 0;
}

int cmd_indep(const Options& opt) {
    const osq::Matroid m = osq::load_matroid_file(opt.matroid_path);
    osq::OrderPtr ord_a = active_order(opt, m.size());
    const osq::GroundOrder ord_b = parse_order(opt.order_b_str, m.size());
    const bool eq = osq::order_independence_check(m, *ord_a, ord_b);
    emit(opt, json{{"equivalent", eq}},
         std::string("equivalent: ") + (eq ? "true" : "false") + "\n");
    return eq ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deformed Orlik-Solomon algebra toolkit"};
    app.require_subcommand(1);
    Options opt;
    std::function<int(const Options&)> run;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--matroid", opt.matroid_path, "matroid JSON file")->required();
        sub->add_option("--order", opt.order_str,
                        "total order: 1-based labels least first, e.g. 3,1,2");
        sub->add_option("--q", opt.q_str, "specialize q to this integer");
        sub->add_option("--max-degree", opt.max_degree, "table depth (default 6)");
        sub->add_option("--format", opt.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--jobs", opt.jobs, "verification worker threads");
        sub->add_option("--truncate-gc", opt.truncate_gc,
                        "keep only the first K Groebner circuits (negative tests)");
    };

    auto* validate = app.add_subcommand("validate", "check the circuit axioms");
    add_common(validate);
    validate->callback([&] { run = cmd_validate; });

    auto* circuits = app.add_subcommand("circuits", "list the circuits");
    add_common(circuits);
    circuits->callback([&] { run = cmd_circuits; });

    auto* gb = app.add_subcommand("gb", "Groebner circuits and generators");
    add_common(gb);
    gb->callback([&] { run = cmd_gb; });

    auto* check = app.add_subcommand("check", "verify the Groebner basis property");
    add_common(check);
    check->callback([&] { run = cmd_check; });

    auto* nf = app.add_subcommand("nf", "normal form of a polynomial");
    add_common(nf);
    nf->add_option("poly", opt.poly_text, "polynomial text")->required();
    nf->callback([&] { run = cmd_nf; });

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series data");
    add_common(hilbert);
    hilbert->callback([&] { run = cmd_hilbert; });

    auto* koszul = app.add_subcommand("koszul", "supersolvability / quadraticity");
    add_common(koszul);
    koszul->callback([&] { run = cmd_koszul; });

    auto* indep = app.add_subcommand("indep", "order independence of the ideal");
    add_common(indep);
    indep->add_option("order_b", opt.order_b_str, "second total order, e.g. 3,1,2")
        ->required();
    indep->callback([&] { run = cmd_indep; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run(opt);
    } catch (const osq::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
