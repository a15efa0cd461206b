// Copyright 2026 The hypsurf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypsurf/cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hypsurf/catalog.h"
#include "hypsurf/distance.h"
#include "hypsurf/error.h"
#include "hypsurf/montecarlo.h"
#include "hypsurf/planar.h"
#include "hypsurf/serialize.h"

namespace hypsurf {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
    }
    out << text;
}

bool two_per_column(const BitMatrix &m) {
    for (const auto &col : m.col_supports()) {
        if (col.size() != 2) {
            return false;
        }
    }
    return true;
}

bool graph_like(const CssCode &c) {
    return two_per_column(c.h_x) && two_per_column(c.h_z);
}

std::string spectrum_text(const std::map<size_t, size_t> &m) {
    std::ostringstream out;
    bool first = true;
    for (auto [w, c] : m) {
        out << (first ? "" : ", ") << w << " (" << c << ")";
        first = false;
    }
    return out.str();
}

std::string support_text(const Chain &c) {
    std::ostringstream out;
    bool first = true;
    for (uint32_t q : c.support()) {
        out << (first ? "" : " ") << q;
        first = false;
    }
    return out.str();
}

// "a:b:step" (inclusive) or "v1,v2,...".
std::vector<double> parse_grid(const std::string &grid, const std::string &list) {
    std::vector<double> ps;
    if (!grid.empty()) {
        double a = 0;
        double b = 0;
        double step = 0;
        char c1 = 0;
        char c2 = 0;
        std::istringstream in(grid);
        if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0 || b < a) {
            throw CLI::ValidationError("--p-grid", "expected a:b:step with a <= b and step > 0");
        }
        const auto count = static_cast<size_t>(std::floor((b - a) / step + 1e-9)) + 1;
        for (size_t i = 0; i < count; ++i) {
            ps.push_back(a + static_cast<double>(i) * step);
        }
    }
    if (!list.empty()) {
        std::istringstream in(list);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            try {
                size_t used = 0;
                ps.push_back(std::stod(tok, &used));
                if (used != tok.size()) {
                    throw std::invalid_argument(tok);
                }
            } catch (const std::exception &) {
                throw CLI::ValidationError("--p", "bad probability '" + tok + "'");
            }
        }
    }
    for (double p : ps) {
        if (!(p >= 0 && p <= 1)) {
            throw CLI::ValidationError("--p", "probabilities must lie in [0, 1]");
        }
    }
    return ps;
}

std::pair<int, int> parse_rs(const std::string &text) {
    int r = 0;
    int s = 0;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> r >> comma >> s) || comma != ',' || !in.eof()) {
        throw CLI::ValidationError("--tiling", "expected r,s");
    }
    return {r, s};
}

RunManifest start_manifest(const std::string &sub, std::map<std::string, std::string> args, uint64_t seed = 0) {
    RunManifest m;
    m.subcommand = sub;
    m.arguments = std::move(args);
    m.version = kToolVersion;
    m.rng = kRngName;
    m.seed = seed;
    m.started = utc_timestamp();
    return m;
}

void finish_manifest(RunManifest m, const std::string &out_path) {
    m.finished = utc_timestamp();
    write_file(out_path + ".manifest.json", manifest_to_json(m));
}

}  // namespace

ResolvedCode resolve_code(const std::string &id) {
    ResolvedCode rc;
    rc.name = id;
    if (id.rfind("toric-", 0) == 0) {
        int L = 0;
        try {
            L = std::stoi(id.substr(6));
        } catch (const std::exception &) {
            throw Error(ErrorCode::kInvalidArgument, "bad toric size in '" + id + "'");
        }
        if (L < 2) {
            throw Error(ErrorCode::kInvalidArgument, "toric codes need L >= 2");
        }
        rc.r = rc.s = 4;
        rc.tiling = build_toric(L);
        rc.code = from_tiling(*rc.tiling);
        return rc;
    }
    if (auto entry = find_entry(id)) {
        rc.r = entry->r;
        rc.s = entry->s;
        rc.tiling = build_tiling(enumerate_quotient(entry->presentation()), entry->r, entry->s);
        rc.code = from_tiling(*rc.tiling);
        rc.catalog_k = static_cast<size_t>(entry->k);
        return rc;
    }
    std::ifstream probe(id);
    if (!probe) {
        throw Error(ErrorCode::kInvalidArgument, "'" + id + "' is neither a catalog id, toric-<L>, nor a file");
    }
    CodeDocument doc = code_from_json(read_file(id));
    rc.name = doc.name.empty() ? id : doc.name;
    rc.r = doc.r;
    rc.s = doc.s;
    rc.code = std::move(doc.code);
    return rc;
}

size_t resolved_distance(const ResolvedCode &rc) {
    if (rc.code.k == 0) {
        return 0;
    }
    if (graph_like(rc.code)) {
        return code_distance(rc.code);
    }
    return *brute_force_distance(rc.code, rc.code.n);
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hyperbolic surface codes: construction, distances and decoding"};
    app.set_version_flag("--version", std::string("hypsurf ") + kToolVersion + " (rng " + kRngName + ")");
    app.require_subcommand(1);

    // catalog
    auto *cat = app.add_subcommand("catalog", "List the built-in closed codes");
    bool cat_all = false;
    cat->add_flag("--all", cat_all, "include the small codes");

    // build
    auto *build = app.add_subcommand("build", "Enumerate a quotient and write its tiling and code");
    std::string build_code;
    std::string build_tiling_rs;
    std::vector<std::string> build_words;
    std::string build_out;
    std::string build_tiling_out;
    auto *build_code_opt = build->add_option("--code", build_code, "catalog id or toric-<L>");
    auto *build_rs_opt = build->add_option("--tiling", build_tiling_rs, "r,s for --word");
    build->add_option("--word", build_words, "extra relator (repeatable)")->needs(build_rs_opt);
    build_rs_opt->excludes(build_code_opt);
    build->add_option("--out", build_out, "code JSON");
    build->add_option("--tiling-out", build_tiling_out, "tiling JSON");

    // params / distance / spectrum
    auto *params = app.add_subcommand("params", "Print [[n,k,d]], systoles and the rate check");
    std::string params_code;
    params->add_option("--code", params_code)->required();

    auto *dist = app.add_subcommand("distance", "Shortest logical operators");
    std::string dist_code;
    std::string dist_method = "auto";
    size_t dist_max_weight = 0;
    dist->add_option("--code", dist_code)->required();
    dist->add_option("--method", dist_method)->check(CLI::IsMember({"auto", "bravyi", "brute"}));
    dist->add_option("--max-weight", dist_max_weight, "bound for --method brute (default n)");

    auto *spectrum_cmd = app.add_subcommand("spectrum", "Weights of a minimum-weight logical basis");
    std::string spec_code;
    spectrum_cmd->add_option("--code", spec_code)->required();

    // simulate
    auto *sim = app.add_subcommand("simulate", "Monte Carlo logical error rate under independent X/Z noise");
    std::string sim_code;
    std::string sim_grid;
    std::string sim_list;
    uint64_t sim_trials = 40000;
    uint64_t sim_seed = 1;
    std::string sim_out;
    unsigned sim_workers = 1;
    sim->add_option("--code", sim_code)->required();
    auto *grid_opt = sim->add_option("--p-grid", sim_grid, "a:b:step");
    auto *list_opt = sim->add_option("--p", sim_list, "v1,v2,...");
    grid_opt->excludes(list_opt);
    sim->add_option("--trials", sim_trials)->check(CLI::PositiveNumber);
    sim->add_option("--seed", sim_seed);
    sim->add_option("--out", sim_out, "CSV file (default stdout)");
    sim->add_option("--workers", sim_workers, "0 = all cores");

    // planar-build
    auto *planar = app.add_subcommand("planar-build", "Grow a planar patch and carve rough/smooth boundaries");
    std::string pl_preset;
    std::string pl_rs;
    int pl_seed_faces = 1;
    int pl_levels = 2;
    size_t pl_regions = 3;
    size_t pl_offset = 0;
    std::string pl_layout = "fan";
    std::string pl_growth = "reflect";
    bool pl_keep_ends = false;
    std::string pl_out;
    auto *preset_opt = planar->add_option("--preset", pl_preset);
    auto *rs_opt = planar->add_option("--tiling", pl_rs, "r,s");
    preset_opt->excludes(rs_opt);
    planar->add_option("--seed-faces", pl_seed_faces)->needs(rs_opt);
    planar->add_option("--levels", pl_levels)->needs(rs_opt);
    planar->add_option("--regions", pl_regions)->needs(rs_opt);
    planar->add_option("--offset", pl_offset)->needs(rs_opt);
    planar->add_option("--layout", pl_layout)->check(CLI::IsMember({"fan", "strip", "star"}))->needs(rs_opt);
    planar->add_option("--growth", pl_growth)->check(CLI::IsMember({"reflect", "rotate"}))->needs(rs_opt);
    planar->add_flag("--keep-arc-ends", pl_keep_ends, "leave weight-2 checks at arc ends")->needs(rs_opt);
    planar->add_option("--out", pl_out, "code JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
        if (build->parsed() && build_code.empty() && build_tiling_rs.empty()) {
            throw CLI::RequiredError("build needs --code or --tiling");
        }
        if (sim->parsed() && sim_grid.empty() && sim_list.empty()) {
            throw CLI::RequiredError("simulate needs --p or --p-grid");
        }
        if (planar->parsed() && pl_preset.empty() && pl_rs.empty()) {
            throw CLI::RequiredError("planar-build needs --preset or --tiling");
        }
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cat->parsed()) {
            out << "id        r  s     n    k   d  csys  csys*\n";
            auto print = [&](const CatalogEntry &e) {
                out << std::left << std::setw(9) << e.id << std::right << std::setw(2) << e.r << std::setw(3) << e.s
                    << std::setw(6) << e.n << std::setw(5) << e.k << std::setw(4) << e.d << std::setw(6) << e.csys
                    << std::setw(7) << e.csys_dual << "\n";
            };
            for (const auto &e : catalog()) {
                print(e);
            }
            if (cat_all) {
                for (const auto &e : small_codes()) {
                    print(e);
                }
            }
            return 0;
        }

        if (build->parsed()) {
            ResolvedCode rc;
            if (!build_code.empty()) {
                rc = resolve_code(build_code);
                if (!rc.tiling) {
                    throw Error(ErrorCode::kInvalidArgument, "build needs a catalog id or toric-<L>");
                }
            } else {
                auto [r, s] = parse_rs(build_tiling_rs);
                std::vector<Word> words;
                for (const auto &w : build_words) {
                    words.push_back(Word::parse(w));
                }
                rc.r = r;
                rc.s = s;
                rc.name = "{" + std::to_string(r) + "," + std::to_string(s) + "}";
                rc.tiling = build_tiling(enumerate_quotient(Presentation(r, s, words)), r, s);
                rc.code = from_tiling(*rc.tiling);
            }
            const Tiling &t = *rc.tiling;
            out << "order=" << t.num_elements() << " V=" << t.num_vertices() << " E=" << t.num_edges()
                << " F=" << t.num_faces() << " chi=" << t.euler_characteristic() << " n=" << rc.code.n
                << " k=" << rc.code.k << "\n";
            auto manifest = start_manifest("build", {{"code", build_code}, {"tiling", build_tiling_rs}});
            if (!build_out.empty()) {
                write_file(build_out, code_to_json({rc.name, rc.r, rc.s, rc.code}));
                finish_manifest(manifest, build_out);
            }
            if (!build_tiling_out.empty()) {
                write_file(build_tiling_out, tiling_to_json(t));
                finish_manifest(manifest, build_tiling_out);
            }
            return 0;
        }

        if (params->parsed()) {
            ResolvedCode rc = resolve_code(params_code);
            const CssCode &c = rc.code;
            if (graph_like(c) && c.k > 0) {
                size_t sys = systole(c).length;
                size_t cosys = cosystole(c).length;
                out << "[[" << c.n << "," << c.k << "," << std::min(sys, cosys) << "]] csys=" << sys
                    << " csys*=" << cosys;
            } else {
                size_t d = resolved_distance(rc);
                out << "[[" << c.n << "," << c.k << "," << d << "]]";
                if (c.k > 0) {
                    out << " dX=" << *brute_force_species_distance(c, Species::kX, c.n)
                        << " dZ=" << *brute_force_species_distance(c, Species::kZ, c.n);
                }
            }
            if (rc.tiling) {
                RateReport rep = rate_check(c, rc.r, rc.s);
                out << " rate-check: " << (rep.match ? "ok" : "FAIL");
                if (!rep.match) {
                    out << " (formula " << rep.formula_value() << ")";
                }
            }
            if (rc.catalog_k && *rc.catalog_k != c.k) {
                out << " catalog-k=" << *rc.catalog_k << " (differs from computed k=" << c.k << ")";
            }
            out << "\n";
            return 0;
        }

        if (dist->parsed()) {
            ResolvedCode rc = resolve_code(dist_code);
            const CssCode &c = rc.code;
            bool bravyi = dist_method == "bravyi" || (dist_method == "auto" && graph_like(c));
            if (bravyi) {
                auto z = systole(c);
                auto x = cosystole(c);
                out << "systole=" << z.length << " cosystole=" << x.length << " d=" << std::min(z.length, x.length)
                    << "\n";
                out << "z-witness: " << support_text(z.witness) << "\n";
                out << "x-witness: " << support_text(x.witness) << "\n";
            } else {
                size_t w = dist_max_weight == 0 ? c.n : dist_max_weight;
                auto dz = brute_force_species_distance(c, Species::kZ, w);
                auto dx = brute_force_species_distance(c, Species::kX, w);
                auto show = [](const std::optional<size_t> &d) { return d ? std::to_string(*d) : std::string(">"); };
                out << "dZ=" << show(dz) << " dX=" << show(dx);
                if (dz && dx) {
                    out << " d=" << std::min(*dz, *dx);
                }
                out << "\n";
            }
            return 0;
        }

        if (spectrum_cmd->parsed()) {
            ResolvedCode rc = resolve_code(spec_code);
            auto sp = logical_weight_spectrum(rc.code);
            out << "Z: " << spectrum_text(sp.z) << "\n";
            out << "X: " << spectrum_text(sp.x) << "\n";
            return 0;
        }

        if (sim->parsed()) {
            auto ps = parse_grid(sim_grid, sim_list);
            ResolvedCode rc = resolve_code(sim_code);
            CodeLabel label{rc.r, rc.s, rc.code.n, rc.code.k, resolved_distance(rc)};
            auto manifest = start_manifest("simulate",
                                           {{"code", sim_code},
                                            {"p-grid", sim_grid},
                                            {"p", sim_list},
                                            {"trials", std::to_string(sim_trials)},
                                            {"workers", std::to_string(sim_workers)}},
                                           sim_seed);
            SimCurve curve = run_curve(rc.code, label, ps, sim_trials, sim_seed, sim_workers);
            if (sim_out.empty()) {
                write_csv(out, {curve});
            } else {
                std::ofstream f(sim_out);
                if (!f) {
                    throw Error(ErrorCode::kInvalidArgument, "cannot write " + sim_out);
                }
                write_csv(f, {curve});
                f.close();
                finish_manifest(manifest, sim_out);
            }
            return 0;
        }

        if (planar->parsed()) {
            PlanarPreset p;
            if (!pl_preset.empty()) {
                p = find_preset(pl_preset);
            } else {
                auto [r, s] = parse_rs(pl_rs);
                p.name = "custom";
                p.r = r;
                p.s = s;
                p.seed_faces = pl_seed_faces;
                p.levels = pl_levels;
                p.layout = pl_layout == "fan" ? SeedLayout::kFan
                           : pl_layout == "strip" ? SeedLayout::kStrip
                                                  : SeedLayout::kStar;
                p.growth = pl_growth == "reflect" ? Growth::kReflect : Growth::kRotate;
                p.carve = CarveOptions{pl_regions, pl_offset, true, !pl_keep_ends};
            }
            PlanarPatch patch = p.patch();
            PlanarCode pc = carve_boundaries(patch, p.carve);
            const CssCode &c = pc.code;
            size_t dx = *brute_force_species_distance(c, Species::kX, c.n);
            size_t dz = *brute_force_species_distance(c, Species::kZ, c.n);
            BoundReport rep = boundary_bound_report(c, std::min(dx, dz));
            out << "[[" << c.n << "," << c.k << "," << std::min(dx, dz) << "]] dX=" << dx << " dZ=" << dz
                << " boundary=" << patch.boundary.size() << " arcs=" << pc.arcs.size()
                << " zz=" << pc.added_z_checks.size() << " kd/n=" << std::setprecision(3) << rep.kd_over_n << "\n";
            if (!pl_out.empty()) {
                auto manifest = start_manifest("planar-build", {{"preset", pl_preset}, {"tiling", pl_rs}});
                write_file(pl_out, code_to_json({"planar-" + p.name, p.r, p.s, c}));
                finish_manifest(manifest, pl_out);
            }
            return 0;
        }
    } catch (const Error &e) {
        err << e.what() << "\n";
        return 1;
    } catch (const CLI::ParseError &e) {
        // Flag values validated after parsing.
        app.exit(e, out, err);
        return 2;
    }
    return 2;
}

}  // namespace hypsurf
