// neron-jumps: command-line front end.
// Exit codes: 0 success, 1 regression failure, 2 input error.

#include "neron_jumps.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace nj = neron_jumps;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_regression = 1;
constexpr int exit_input = 2;

nj::integer to_int(const std::string& s, const char* what)
{
    std::string_view body = s;
    if (!body.empty() && body.front() == '-')
        body.remove_prefix(1);
    if (body.empty() || body.find_first_not_of("0123456789") != std::string_view::npos)
        throw nj::error(nj::errc::bad_input, std::string(what) + " must be an integer, got '" + s + "'");
    return nj::integer(s);
}

nj::singularity_params read_params(const std::string& a, const std::string& b, const std::string& n)
{
    nj::singularity_params p{to_int(a, "m1"), to_int(b, "m2"), to_int(n, "n")};
    nj::require_valid(p);
    return p;
}

std::string join(const std::vector<nj::integer>& v, const char* sep = ",")
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : sep) + x.str();
    return s;
}

void print_terms(const nj::character_poly& p)
{
    for (const auto& [e, c] : p.terms())
        std::cout << "term exponent=" << e << " coeff=" << c << "\n";
}

int cmd_resolve(const nj::singularity_params& p)
{
    const auto c = nj::resolve(p);
    std::cout << "r=" << c.rotation() << "\n";
    std::cout << "L=" << c.length() << "\n";
    std::cout << "b=" << join(c.b_seq) << "\n";
    std::cout << "mu=" << join(c.mu_seq) << "\n";
    std::cout << "alpha1=" << c.alpha1 << "\n";
    std::cout << "shape_regular=" << (nj::is_shape_regular(c) ? "true" : "false") << "\n";
    for (std::size_t l = 1; l <= c.length() + 1; ++l) {
        const auto ex = nj::action_exponents(c, l);
        std::cout << "chart_" << l << "=" << ex.z << "," << ex.w << "\n";
    }
    return exit_ok;
}

int cmd_trace(const std::string& file, const std::string& n_text)
{
    const auto g = nj::read_graph_file(file);
    const auto n = to_int(n_text, "n");
    const auto tb = nj::trace_contributions(g, n);
    for (const auto& v : tb.vertices) {
        std::cout << "section=vertex id=" << v.label << "\n";
        print_terms(v.trace);
    }
    for (std::size_t e = 0; e < tb.edges.size(); ++e) {
        const auto p = nj::edge_singularity(g, e, n);
        std::cout << "section=edge id=" << tb.edges[e].label << " params=" << p.m1 << "," << p.m2 << "," << p.n
                  << "\n";
        print_terms(tb.edges[e].trace);
    }
    std::cout << "section=total\n";
    print_terms(tb.total);
    return exit_ok;
}

int cmd_character(const std::string& file, const std::string& n_text, bool machine)
{
    const auto g = nj::read_graph_file(file);
    const auto n = to_int(n_text, "n");
    const auto ex = nj::h1_character(g, n);
    if (!machine) {
        std::cout << "H^1 character exponents mod " << n << ": " << join(ex, " ") << "\n";
        return exit_ok;
    }
    std::map<nj::integer, int> counts;
    for (const auto& e : ex)
        ++counts[e];
    std::cout << "genus=" << nj::genus(g) << "\n";
    for (const auto& [e, k] : counts)
        std::cout << "exponent=" << e << " mult=" << k << "\n";
    return exit_ok;
}

int cmd_jumps(const std::string& file, std::size_t samples, const std::string& nmin, bool machine)
{
    const auto g = nj::read_graph_file(file);
    const auto s = nj::jump_spectrum(g, samples, to_int(nmin, "nmin"));
    for (const auto& [j, k] : s.grouped()) {
        if (machine)
            std::cout << "jump " << nj::to_string(j) << " mult=" << k << "\n";
        else
            std::cout << "jump " << nj::format_over(j, s.predicted_denominator) << " (multiplicity " << k << ")\n";
    }
    if (machine) {
        std::cout << "denominator=" << s.predicted_denominator << "\n";
        std::cout << "samples=" << join(s.samples) << "\n";
    } else {
        std::cout << "denominator " << s.predicted_denominator << ", degrees " << join(s.samples, " ") << "\n";
    }
    return exit_ok;
}

int cmd_verify(const nj::singularity_params& p, bool machine)
{
    const auto rep = nj::verify_edge_trace_report(p, &std::cerr);
    std::size_t ok = 0;
    for (const auto& r : rep.roots) {
        ok += r.pass;
        if (machine)
            std::cout << "j=" << r.j << " result=" << (r.pass ? "PASS" : "FAIL") << "\n";
        else
            std::cout << (r.pass ? "PASS" : "FAIL") << " j=" << r.j << "\n";
    }
    if (machine)
        std::cout << "passed=" << ok << " total=" << rep.roots.size() << " result=" << (rep.all_pass() ? "PASS" : "FAIL")
                  << "\n";
    else
        std::cout << "summary: " << ok << "/" << rep.roots.size() << " primitive roots agree ("
                  << (rep.all_pass() ? "PASS" : "FAIL") << ")\n";
    return rep.all_pass() ? exit_ok : exit_regression;
}

void print_result(const nj::table_result& r, bool machine)
{
    if (machine) {
        std::cout << "name=" << r.name << " table=" << r.source_table << " expected=" << nj::format_jumps(r.expected)
                  << " computed=" << nj::format_jumps(r.computed) << " result=" << (r.pass ? "PASS" : "FAIL") << "\n";
        return;
    }
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " {" << nj::format_jumps(r.computed) << "}";
    if (!r.pass)
        std::cout << "  " << r.detail;
    std::cout << "\n";
}

int cmd_catalog(const std::string& name, bool show_graph, bool machine)
{
    if (name.empty()) {
        for (const auto& ft : nj::catalog()) {
            if (machine)
                std::cout << "name=" << ft.name << " table=" << ft.source_table << " genus=" << ft.genus
                          << " expected=" << nj::format_jumps(ft.expected_jumps) << " graph=" << (ft.graph ? 1 : 0)
                          << "\n";
            else
                std::cout << ft.name << "  table " << ft.source_table << "  {" << nj::format_jumps(ft.expected_jumps)
                          << "}" << (ft.graph ? "" : "  (no graph)") << "\n";
        }
        return exit_ok;
    }
    const auto& ft = nj::catalog_entry(name);
    if (show_graph) {
        if (!ft.graph)
            throw nj::error(nj::errc::unknown_type, "fiber type '" + ft.name + "' has no encoded graph");
        std::cout << nj::format_graph(*ft.graph);
        return exit_ok;
    }
    const auto r = nj::check_entry(ft);
    print_result(r, machine);
    return r.pass ? exit_ok : exit_regression;
}

int cmd_run_table(int genus, bool machine)
{
    const auto rep = nj::run_table(genus);
    for (const auto& r : rep.rows)
        print_result(r, machine);
    if (machine)
        std::cout << "passed=" << rep.passed() << " total=" << rep.rows.size() << "\n";
    else
        std::cout << rep.passed() << "/" << rep.rows.size() << " PASS\n";
    return rep.ok() ? exit_ok : exit_regression;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Jumps of the Neron model filtration from SNC fiber data"};
    app.require_subcommand(1);
    app.fallthrough();
    bool machine = false;
    app.add_flag("--machine", machine, "line-oriented key=value output");

    std::string a, b, n, file, nmin = "50", type_name;
    std::size_t samples = 4;
    int table_genus = 1;
    bool show_graph = false;

    auto* resolve = app.add_subcommand("resolve", "resolution chain of the singularity (m1, m2, n)");
    resolve->add_option("m1", a)->required();
    resolve->add_option("m2", b)->required();
    resolve->add_option("n", n)->required();

    auto* trace = app.add_subcommand("trace", "vertex, edge and total trace polynomials at degree n");
    trace->add_option("graphfile", file)->required();
    trace->add_option("n", n)->required();

    auto* character = app.add_subcommand("character", "H^1 character exponents at degree n");
    character->add_option("graphfile", file)->required();
    character->add_option("n", n)->required();

    auto* jumps = app.add_subcommand("jumps", "jump spectrum of a graph file");
    jumps->add_option("graphfile", file)->required();
    jumps->add_option("--samples", samples, "number of sample degrees")->check(CLI::Range(3, 64));
    jumps->add_option("--nmin", nmin, "smallest sample degree");

    auto* verify = app.add_subcommand("verify", "closed edge trace vs chain sum at every primitive root");
    verify->add_option("m1", a)->required();
    verify->add_option("m2", b)->required();
    verify->add_option("n", n)->required();

    auto* cat = app.add_subcommand("catalog", "list fiber types, or check one against its table row");
    cat->add_option("name", type_name);
    cat->add_flag("--graph", show_graph, "print the encoded graph");

    auto* table = app.add_subcommand("run-table", "regression over all encoded types of a genus");
    table->add_option("genus", table_genus)->required()->check(CLI::IsMember({1, 2}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*resolve)
            return cmd_resolve(read_params(a, b, n));
        if (*trace)
            return cmd_trace(file, n);
        if (*character)
            return cmd_character(file, n, machine);
        if (*jumps)
            return cmd_jumps(file, samples, nmin, machine);
        if (*verify)
            return cmd_verify(read_params(a, b, n), machine);
        if (*cat)
            return cmd_catalog(type_name, show_graph, machine);
        if (*table)
            return cmd_run_table(table_genus, machine);
    } catch (const nj::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_regression;
    }
    return exit_input;
}
