/*
   Copyright 2026 the etaflat authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end.  Exit codes, also listed in --help:
//   0  success
//   1  invalid input (unreadable file, malformed JSON, schema violation,
//      failed action validation)
//   2  unsupported action (the group does not split into circle rotation
//      times torus map)
//   3  internal certification failure (a cross-check caught a defect), or
//      a reference-table mismatch in `table7`

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "etaflat/catalog.hpp"
#include "etaflat/eta.hpp"
#include "etaflat/manifold_json.hpp"

namespace {

using namespace etaflat;

struct OutputOptions {
    bool json = false;
    bool breakdown = false;
    bool oracle = false;
    double check_float = 1e-9;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_flag("--json", opts.json, "emit the machine-readable JSON report");
    cmd->add_flag("--breakdown", opts.breakdown, "print the per-element breakdown");
    cmd->add_flag("--oracle", opts.oracle,
                  "re-verify fixed point counts through the Smith normal form");
    cmd->add_option("--check-float", opts.check_float,
                    "tolerance of the double-precision cross-check")
        ->default_val(1e-9);
}

int emit_report(const GroupAction& action, const std::string& name, const OutputOptions& opts) {
    EtaReport report = eta_total(action, name, opts.check_float, opts.oracle);
    if (opts.json)
        std::cout << report_to_json(report);
    else
        std::cout << report_to_text(report, opts.breakdown);
    return 0;
}

int cmd_compute(const std::string& path, const OutputOptions& opts) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    ManifoldFile mf = parse_manifold(buf.str());
    return emit_report(manifold_to_action(mf), mf.name, opts);
}

int cmd_catalog_list() {
    for (const auto& name : builtin_names()) {
        CatalogEntry e = builtin(name);
        std::cout << e.name << "  (dimension " << e.dimension << ", holonomy " << e.holonomy;
        if (e.expected_eta) std::cout << ", eta = " << e.expected_eta->str();
        std::cout << ")\n";
    }
    return 0;
}

int cmd_catalog_show(const std::string& name) {
    CatalogEntry e = builtin(name);
    std::cout << export_manifold(e);
    return 0;
}

int cmd_table7() {
    std::map<std::string, std::set<BigRational>> computed;
    for (const auto& name : builtin_names()) {
        CatalogEntry e = builtin(name);
        if (e.dimension != 7 || !std::holds_alternative<CyclicSpec>(e.spec)) continue;
        computed[e.holonomy].insert(eta_total(build_action(e), e.name).eta_exact);
    }

    bool all_pass = true;
    std::cout << "holonomy  computed      reference     status\n";
    for (const auto& row : dim7_reference_rows()) {
        auto it = computed.find(row.holonomy);
        if (it == computed.end()) continue;
        auto fmt = [](const std::set<BigRational>& s) {
            std::string out = "{";
            for (const auto& v : s) out += (out.size() > 1 ? ", " : "") + v.str();
            return out + "}";
        };
        bool pass = true;
        for (const auto& v : it->second)
            if (!row.reference.count(v)) pass = false;
        all_pass = all_pass && pass;
        std::ostringstream line;
        line.setf(std::ios::left);
        line.width(10);
        line << row.holonomy;
        line.width(14);
        line << fmt(it->second);
        line.width(14);
        line << fmt(row.reference);
        std::cout << line.str() << (pass ? "PASS" : "FAIL") << "\n";
    }
    if (!all_pass) {
        std::cerr << "error: a computed eta value lies outside its reference set\n";
        return 3;
    }
    return 0;
}

int cmd_hw(long m, const OutputOptions& opts) {
    CatalogEntry e = hantzsche_wendt(m);
    return emit_report(build_action(e), e.name, opts);
}

int cmd_z2m(long n, bool closed_form, const OutputOptions& opts) {
    CatalogEntry e = family_z2m(n);
    EtaReport report = eta_total(build_action(e), e.name, opts.check_float, opts.oracle);
    if (closed_form) {
        BigRational cf = closed_form_z2m(n);
        if (cf != report.eta_exact)
            throw CertificationError("closed form disagrees with the elementwise engine");
        if (!opts.json)
            std::cout << "closed form = " << cf.str() << " (agrees with the elementwise sum)\n";
    }
    if (opts.json)
        std::cout << report_to_json(report);
    else
        std::cout << report_to_text(report, opts.breakdown);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "etaflat: exact signature eta invariants of flat manifolds presented as finite-group "
        "quotients of tori.\n"
        "Exit codes: 0 success, 1 invalid input, 2 unsupported action, 3 certification failure."};
    app.require_subcommand(1);

    OutputOptions opts;

    std::string path;
    auto* compute = app.add_subcommand("compute", "compute eta for a manifold JSON file");
    compute->add_option("file", path, "manifold JSON file")->required();
    add_output_options(compute, opts);

    auto* catalog = app.add_subcommand("catalog", "built-in manifold library");
    catalog->require_subcommand(1);
    auto* cat_list = catalog->add_subcommand("list", "list the built-in entries");
    std::string cat_name;
    auto* cat_show = catalog->add_subcommand("show", "print an entry in the manifold format");
    cat_show->add_option("name", cat_name, "entry name")->required();
    auto* cat_compute = catalog->add_subcommand("compute", "compute eta for an entry");
    cat_compute->add_option("name", cat_name, "entry name")->required();
    add_output_options(cat_compute, opts);

    long hw_m = 0;
    auto* hw = app.add_subcommand("hw", "Hantzsche-Wendt type action on T^m (m odd)");
    hw->add_option("m", hw_m, "dimension, odd, 3..11")->required();
    add_output_options(hw, opts);

    long z2m_n = 0;
    bool z2m_closed = false;
    auto* z2m = app.add_subcommand("z2m", "order-2(4n-2) family on T^{4n-1}");
    z2m->add_option("n", z2m_n, "family parameter, 2..6")->required();
    z2m->add_flag("--closed-form", z2m_closed, "also evaluate the closed form and compare");
    add_output_options(z2m, opts);

    auto* table7 = app.add_subcommand(
        "table7", "compute every dimension-7 entry and compare against the reference value sets");

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return cmd_compute(path, opts);
        if (catalog->parsed()) {
            if (cat_list->parsed()) return cmd_catalog_list();
            if (cat_show->parsed()) return cmd_catalog_show(cat_name);
            if (cat_compute->parsed()) {
                CatalogEntry e = builtin(cat_name);
                return emit_report(build_action(e), e.name, opts);
            }
        }
        if (hw->parsed()) return cmd_hw(hw_m, opts);
        if (z2m->parsed()) return cmd_z2m(z2m_n, z2m_closed, opts);
        if (table7->parsed()) return cmd_table7();
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const UnsupportedAction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CertificationError& e) {
        std::cerr << "internal certification failure: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const EtaflatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
