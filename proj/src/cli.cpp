#include "syndet/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"
#include "syndet/constructions.hpp"
#include "syndet/density.hpp"
#include "syndet/differences.hpp"
#include "syndet/filter_lab.hpp"
#include "syndet/ground_set.hpp"
#include "syndet/ramsey.hpp"
#include "syndet/selftest.hpp"
#include "syndet/structure.hpp"

namespace syndet {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

constexpr std::string_view kFsCaveat =
    "capped search: both the sequence length and the subset sums are bounded, "
    "so absence below these caps proves nothing beyond them";

constexpr const char* kAxiomNames[] = {"nonempty", "no-empty-member",
                                       "upward-closure", "intersection-closure",
                                       "dichotomy"};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return std::move(buf).str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write file: " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

GroundSet load_set(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_set(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

json rat_json(const Rational& q) {
    return json{{"num", q.numerator()}, {"den", q.denominator()}};
}

json interval_json(const Interval& iv) {
    return json{{"start", iv.start}, {"length", iv.length}};
}

json opt_str(const std::string& s) { return s.empty() ? json(nullptr) : json(s); }

/// Assembles the standard report envelope, writes it to --out or the stream,
/// and passes the exit code through.
int finish(const char* command, json config, json result,
           const std::string& out_path, std::ostream& out, int code) {
    const json doc{{"schema_version", kSchemaVersion},
                   {"command", command},
                   {"config", std::move(config)},
                   {"result", std::move(result)}};
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        write_file(out_path, text);
    }
    return code;
}

std::pair<std::int64_t, std::int64_t> parse_int_pair(const std::string& s,
                                                     const char* flag) {
    const auto bad = [&] {
        return std::invalid_argument(std::string(flag) + " expects \"d,N\", got \"" +
                                     s + "\"");
    };
    const std::size_t comma = s.find(',');
    if (comma == std::string::npos) throw bad();
    std::int64_t d = 0, n = 0;
    const char* b = s.data();
    auto r1 = std::from_chars(b, b + comma, d);
    auto r2 = std::from_chars(b + comma + 1, b + s.size(), n);
    if (r1.ec != std::errc{} || r1.ptr != b + comma || r2.ec != std::errc{} ||
        r2.ptr != b + s.size()) {
        throw bad();
    }
    return {d, n};
}

std::int64_t infer_num_colors(std::string_view letters) {
    std::int64_t mx = 1;
    for (char ch : letters) {
        const std::size_t idx = kColorLetters.find(ch);
        if (idx == std::string_view::npos) {
            throw std::invalid_argument(std::string("unknown color letter '") + ch +
                                        "'");
        }
        mx = std::max(mx, static_cast<std::int64_t>(idx) + 1);
    }
    return mx;
}

std::string bits_of(const GroundSet& a) {
    std::string bits;
    bits.reserve(static_cast<std::size_t>(a.window_len()));
    for (std::int64_t i = 1; i <= a.window_len(); ++i) {
        bits += a.contains(i) ? '1' : '0';
    }
    return bits;
}

std::vector<filter_lab::Mask> parse_family_literal(filter_lab::Universe u,
                                                   const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("family literal: ") + e.what());
    }
    if (!arr.is_array()) {
        throw std::invalid_argument("family literal must be an array of member "
                                    "lists, got: " + text);
    }
    std::vector<filter_lab::Mask> masks;
    for (const json& item : arr) {
        if (!item.is_array()) {
            throw std::invalid_argument("family member must be a list of elements, "
                                        "got: " + item.dump());
        }
        std::vector<int> elems;
        for (const json& e : item) {
            if (!e.is_number_integer()) {
                throw std::invalid_argument("family element must be an integer, "
                                            "got: " + e.dump());
            }
            elems.push_back(e.get<int>());
        }
        masks.push_back(filter_lab::mask_from_members(u, elems));
    }
    return masks;
}

json mask_json(filter_lab::Mask a) { return json(filter_lab::mask_members(a)); }

json family_json(const filter_lab::SetFamily& f) {
    json arr = json::array();
    for (filter_lab::Mask s : f.members) arr.push_back(mask_json(s));
    return arr;
}

json verdict_json(const filter_lab::FilterVerdict& v) {
    json j{{"ok", v.ok}};
    if (!v.ok) {
        j["axiom"] = v.axiom;
        j["axiom_name"] = kAxiomNames[v.axiom];
        if (v.a) j["witness_a"] = mask_json(*v.a);
        if (v.b) j["witness_b"] = mask_json(*v.b);
        j["detail"] = v.detail;
    }
    return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"finitary shift, density, coloring and filter toolkit"};
    app.require_subcommand(1);

    // Shared per-subcommand report destination; empty means the out stream.
    std::string out_path;
    const auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "write the JSON report to this file");
    };

    // vdw: least window length forcing a monochromatic k-progression.
    std::int64_t vdw_k = 0, vdw_r = 0, vdw_cap = 0;
    std::string vdw_cert_path;
    CLI::App* vdw = app.add_subcommand(
        "vdw", "search the least window length forcing a monochromatic progression");
    vdw->add_option("--k", vdw_k, "progression length")->required()
        ->check(CLI::PositiveNumber);
    vdw->add_option("--r", vdw_r, "number of colors")->required()
        ->check(CLI::PositiveNumber);
    vdw->add_option("--cap", vdw_cap, "largest window length to search")->required()
        ->check(CLI::PositiveNumber);
    vdw->add_option("--emit-certificate", vdw_cert_path,
                    "write the progression-free coloring to this file");
    add_out(vdw);

    // classify: structural analyses of a set file.
    std::string cls_set;
    std::int64_t cls_synd = 0, cls_thick = 0;
    std::string cls_pws;
    CLI::App* classify =
        app.add_subcommand("classify", "structural analyses of a set file");
    classify->add_option("--set", cls_set, "set file to analyse")->required();
    CLI::Option* cls_synd_opt =
        classify->add_option("--syndetic", cls_synd, "gap bound d")
            ->check(CLI::PositiveNumber);
    CLI::Option* cls_thick_opt =
        classify->add_option("--thick", cls_thick, "run length N")
            ->check(CLI::PositiveNumber);
    CLI::Option* cls_pws_opt = classify->add_option(
        "--pws", cls_pws, "piecewise syndetic parameters as d,N");
    add_out(classify);

    // density: exact rational densities of a set file.
    std::string den_set;
    std::int64_t den_prefix = 0;
    std::vector<std::int64_t> den_windows;
    CLI::App* density =
        app.add_subcommand("density", "exact rational densities of a set file");
    density->add_option("--set", den_set, "set file to analyse")->required();
    CLI::Option* den_prefix_opt =
        density->add_option("--prefix", den_prefix, "prefix length N")
            ->check(CLI::PositiveNumber);
    density->add_option("--window", den_windows,
                        "comma-separated window lengths for the sliding profile")
        ->delimiter(',');
    add_out(density);

    // fractal: the self-similar dense word family.
    std::int64_t fr_k = 0, fr_n = 0, fr_len = 0;
    std::string fr_emit, fr_verify = "stats";
    CLI::App* fractal =
        app.add_subcommand("fractal", "self-similar dense word family");
    fractal->add_option("--k", fr_k, "ones per base block")->required()
        ->check(CLI::PositiveNumber);
    CLI::Option* fr_n_opt = fractal->add_option("--n", fr_n, "recursion depth")
                                ->check(CLI::NonNegativeNumber);
    CLI::Option* fr_len_opt =
        fractal->add_option("--len", fr_len, "prefix length of the limit word")
            ->check(CLI::PositiveNumber);
    fr_n_opt->excludes(fr_len_opt);
    fractal->add_option("--emit", fr_emit, "write the set file here");
    fractal->add_option("--verify", fr_verify, "verification to run")
        ->check(CLI::IsMember({"stats", "density", "gaps"}));
    add_out(fractal);

    // jin: difference-set overlap detector.
    std::string jin_a, jin_b;
    std::int64_t jin_dmax = 0, jin_nreq = 0, jin_diag = 0;
    CLI::App* jin = app.add_subcommand(
        "jin", "piecewise-syndetic detector for a difference of two sets");
    jin->add_option("--a", jin_a, "first set file")->required();
    jin->add_option("--b", jin_b, "second set file")->required();
    jin->add_option("--dmax", jin_dmax, "largest gap bound to try")->required()
        ->check(CLI::PositiveNumber);
    jin->add_option("--nreq", jin_nreq, "required run length")->required()
        ->check(CLI::PositiveNumber);
    jin->add_option("--diag-window", jin_diag,
                    "window length for the density diagnostics")
        ->check(CLI::PositiveNumber);
    add_out(jin);

    // fs: monochromatic finite-sums search.
    std::string fs_letters;
    std::int64_t fs_colors = 0, fs_m = 0, fs_sum_cap = 0;
    CLI::App* fs = app.add_subcommand(
        "fs", "search a sequence whose nonempty subset sums are one color");
    fs->add_option("--coloring", fs_letters, "coloring as a letter string")
        ->required();
    fs->add_option("--colors", fs_colors,
                   "number of colors (default: inferred from the letters)")
        ->check(CLI::PositiveNumber);
    fs->add_option("--m", fs_m, "sequence length")->required()
        ->check(CLI::PositiveNumber);
    fs->add_option("--sum-cap", fs_sum_cap, "largest allowed subset sum")
        ->required()->check(CLI::PositiveNumber);
    add_out(fs);

    // filterlab: finite-universe filter laboratory.
    std::int64_t fl_universe = 0;
    std::string fl_check_filter, fl_check_ultra, fl_generate, fl_extend,
        fl_partition, fl_phi;
    CLI::App* filterlab =
        app.add_subcommand("filterlab", "finite-universe filter laboratory");
    filterlab->add_option("--universe", fl_universe, "universe size m")
        ->required()->check(CLI::PositiveNumber);
    filterlab->add_option("--check-filter", fl_check_filter,
                          "family literal to test against the filter axioms");
    filterlab->add_option("--check-ultrafilter", fl_check_ultra,
                          "family literal to test with the dichotomy included");
    filterlab->add_option("--generate", fl_generate,
                          "generator family for the smallest containing filter");
    filterlab->add_option("--extend", fl_extend,
                          "filter family to extend to an ultrafilter");
    filterlab->add_option("--partition-regular", fl_partition,
                          "family to test for partition regularity");
    filterlab->add_option(
        "--phi", fl_phi,
        "predicate menu entry: nonempty | meets:1,3 | contains-some:1;2,3 | "
        "min-size:2");
    add_out(filterlab);

    // selftest: cross-module invariant sweep.
    std::uint64_t st_seed = 1;
    CLI::App* selftest =
        app.add_subcommand("selftest", "cross-module invariant sweep");
    selftest->add_option("--seed", st_seed, "seed for the randomized checks");
    add_out(selftest);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (vdw->parsed()) {
            const VdwResult res = vdw_number(vdw_k, vdw_r, vdw_cap);
            const bool found = res.outcome == VdwResult::Outcome::Found;
            json result{{"outcome", found ? "found" : "exceeded-cap"},
                        {"cap", res.cap},
                        {"certificate", format_coloring(res.certificate)},
                        {"certificate_length", res.certificate.length()},
                        {"nodes", res.stats.nodes}};
            if (found) result["W"] = res.w;
            if (!vdw_cert_path.empty()) {
                write_file(vdw_cert_path, format_certificate(res.certificate, vdw_k));
            }
            const json config{{"k", vdw_k},
                              {"r", vdw_r},
                              {"cap", vdw_cap},
                              {"emit_certificate", opt_str(vdw_cert_path)},
                              {"out", opt_str(out_path)}};
            return finish("vdw", config, result, out_path, out,
                          found ? kExitOk : kExitCap);
        }

        if (classify->parsed()) {
            const GroundSet a = load_set(cls_set);
            const StructureReport sr = structure_report(a);
            json result{{"set", json{{"window_len", a.window_len()},
                                     {"count", a.count()}}},
                        {"structure", json{{"max_gap", sr.max_gap},
                                           {"longest_run", sr.longest_run}}}};
            if (cls_synd_opt->count() > 0) {
                const SyndeticResult r = is_syndetic(a, cls_synd);
                json j{{"d", cls_synd}, {"syndetic", r.syndetic}};
                if (r.empty_window) j["empty_window"] = interval_json(*r.empty_window);
                result["syndetic"] = j;
            }
            if (cls_thick_opt->count() > 0) {
                const ThickResult r = is_thick(a, cls_thick);
                json j{{"n", cls_thick}, {"thick", r.thick}};
                if (r.run) j["run"] = interval_json(*r.run);
                result["thick"] = j;
            }
            json pws_echo(nullptr);
            if (cls_pws_opt->count() > 0) {
                const auto [d, n] = parse_int_pair(cls_pws, "--pws");
                const PwsResult r = is_piecewise_syndetic(a, d, n);
                json j{{"d", d}, {"n", n},
                       {"piecewise_syndetic", r.piecewise_syndetic}};
                if (r.witness) {
                    j["witness"] = json{{"d", r.witness->d},
                                        {"run", interval_json(r.witness->run)}};
                }
                result["pws"] = j;
                pws_echo = cls_pws;
            }
            const json config{
                {"set", cls_set},
                {"syndetic", cls_synd_opt->count() ? json(cls_synd) : json(nullptr)},
                {"thick", cls_thick_opt->count() ? json(cls_thick) : json(nullptr)},
                {"pws", pws_echo},
                {"out", opt_str(out_path)}};
            return finish("classify", config, result, out_path, out, kExitOk);
        }

        if (density->parsed()) {
            if (den_prefix_opt->count() == 0 && den_windows.empty()) {
                throw std::invalid_argument("density: need --prefix and/or --window");
            }
            const GroundSet a = load_set(den_set);
            json result{{"window_len", a.window_len()}, {"count", a.count()}};
            if (den_prefix_opt->count() > 0) {
                const Rational q = prefix_density(a, den_prefix);
                result["prefix"] = json{{"N", den_prefix},
                                        {"value_num", q.numerator()},
                                        {"value_den", q.denominator()}};
            }
            if (!den_windows.empty()) {
                json arr = json::array();
                for (const DensityReport& rep : density_profile(a, den_windows)) {
                    arr.push_back(json{{"N", rep.window_len_used},
                                       {"value_num", rep.value.numerator()},
                                       {"value_den", rep.value.denominator()},
                                       {"witness_start", rep.witness.start}});
                }
                result["profile"] = arr;
            }
            const json config{
                {"set", den_set},
                {"prefix", den_prefix_opt->count() ? json(den_prefix) : json(nullptr)},
                {"window", json(den_windows)},
                {"out", opt_str(out_path)}};
            return finish("density", config, result, out_path, out, kExitOk);
        }

        if (fractal->parsed()) {
            const bool n_mode = fr_n_opt->count() > 0;
            if (!n_mode && fr_len_opt->count() == 0) {
                throw std::invalid_argument("fractal: need --n or --len");
            }
            const GroundSet set =
                n_mode ? GroundSet::from_bits(fractal_word(FractalSpec{fr_k, fr_n}))
                       : fractal_set(fr_k, fr_len);
            const std::int64_t len = set.window_len();
            json result{{"length", len}};
            if (!fr_emit.empty()) {
                write_file(fr_emit, format_set(set, SetForm::Bits));
                result["emitted"] = fr_emit;
            }
            if (fr_verify == "stats") {
                const std::int64_t ones = set.count();
                const auto top = set.max_member();
                const std::int64_t trailing = len - (top ? *top : 0);
                result["word"] = bits_of(set);
                result["ones"] = ones;
                result["trailing_zeros"] = trailing;
                bool ok = false;
                if (n_mode) {
                    const FractalStats st = fractal_stats(FractalSpec{fr_k, fr_n});
                    ok = st.length == len && st.ones == ones &&
                         st.trailing_zeros == trailing;
                } else {
                    // Prefix nesting: one recursion deeper must reproduce the
                    // emitted prefix bit for bit.
                    std::int64_t depth = 0, wl = fr_k;
                    while (wl < len) {
                        wl = 2 * wl + 1;
                        ++depth;
                    }
                    const GroundSet deeper =
                        GroundSet::from_bits(
                            fractal_word(FractalSpec{fr_k, depth + 1}))
                            .truncate(len);
                    ok = set == deeper;
                }
                result["ok"] = ok;
            } else if (fr_verify == "density") {
                const DensityBound b = verify_density_bound(fr_k, len);
                result["min_density"] = rat_json(b.min_density);
                result["at_n"] = b.at_n;
                result["bound"] = rat_json(Rational(fr_k, fr_k + 1));
                result["ok"] = b.min_density >= Rational(fr_k, fr_k + 1);
            } else {  // gaps
                json arr = json::array();
                bool all_ok = true;
                std::int64_t wl = fr_k;  // depth-m word length, m starting at 0
                for (std::int64_t m = 1; m <= 20; ++m) {
                    wl = 2 * wl + 1;
                    if (wl + m > len) break;  // window (wl - m) + 2m must fit
                    const GapStructure g = verify_gap_structure(fr_k, m, len);
                    json j{{"n", m},
                           {"ok", g.ok},
                           {"window_checked", g.window_checked}};
                    if (g.first_failure) j["first_failure"] = *g.first_failure;
                    arr.push_back(j);
                    all_ok = all_ok && g.ok;
                }
                result["gaps"] = arr;
                result["ok"] = all_ok;
            }
            const json config{
                {"k", fr_k},
                {"n", n_mode ? json(fr_n) : json(nullptr)},
                {"len", fr_len_opt->count() ? json(fr_len) : json(nullptr)},
                {"emit", opt_str(fr_emit)},
                {"verify", fr_verify},
                {"out", opt_str(out_path)}};
            return finish("fractal", config, result, out_path, out, kExitOk);
        }

        if (jin->parsed()) {
            const GroundSet a = load_set(jin_a);
            const GroundSet b = load_set(jin_b);
            const JinReport rep = jin_check(a, b, jin_dmax, jin_nreq, jin_diag);
            json result{{"found", rep.found},
                        {"density_a", rat_json(rep.density_a)},
                        {"density_b", rat_json(rep.density_b)},
                        {"diag_window", rep.diag_window},
                        {"caveat", std::string(kJinCaveat)}};
            if (rep.witness) {
                result["witness"] = json{{"d", rep.witness->d},
                                         {"run", interval_json(rep.witness->run)}};
            }
            const json config{{"a", jin_a},
                              {"b", jin_b},
                              {"dmax", jin_dmax},
                              {"nreq", jin_nreq},
                              {"diag_window", rep.diag_window},
                              {"out", opt_str(out_path)}};
            return finish("jin", config, result, out_path, out, kExitOk);
        }

        if (fs->parsed()) {
            const std::int64_t colors =
                fs_colors > 0 ? fs_colors : infer_num_colors(fs_letters);
            const Coloring c = parse_coloring(fs_letters, colors);
            const auto seq = find_mono_fs(c, fs_m, fs_sum_cap);
            json result{{"found", seq.has_value()},
                        {"caveat", std::string(kFsCaveat)}};
            if (seq) {
                result["seq"] = json(*seq);
                const std::int64_t clip = std::min(fs_sum_cap, c.length());
                const GroundSet all = finite_sums(
                    std::span<const std::int64_t>(seq->data(), seq->size()), clip);
                result["fs_members"] = json(all.members());
                result["color"] = c.at(seq->front());
            }
            const json config{{"coloring", fs_letters},
                              {"colors", colors},
                              {"m", fs_m},
                              {"sum_cap", fs_sum_cap},
                              {"out", opt_str(out_path)}};
            return finish("fs", config, result, out_path, out, kExitOk);
        }

        if (filterlab->parsed()) {
            const filter_lab::Universe u(static_cast<int>(fl_universe));
            const int actions = (fl_check_filter.empty() ? 0 : 1) +
                                (fl_check_ultra.empty() ? 0 : 1) +
                                (fl_generate.empty() ? 0 : 1) +
                                (fl_extend.empty() ? 0 : 1) +
                                (fl_partition.empty() ? 0 : 1);
            if (actions != 1) {
                throw std::invalid_argument(
                    "filterlab: give exactly one of --check-filter, "
                    "--check-ultrafilter, --generate, --extend, "
                    "--partition-regular");
            }
            json result;
            std::string action, family_text;
            if (!fl_check_filter.empty()) {
                action = "check-filter";
                family_text = fl_check_filter;
                const filter_lab::SetFamily fam(u,
                                                parse_family_literal(u, family_text));
                result = verdict_json(filter_lab::is_filter(fam));
            } else if (!fl_check_ultra.empty()) {
                action = "check-ultrafilter";
                family_text = fl_check_ultra;
                const filter_lab::SetFamily fam(u,
                                                parse_family_literal(u, family_text));
                result = verdict_json(filter_lab::is_ultrafilter(fam));
            } else if (!fl_generate.empty()) {
                action = "generate";
                family_text = fl_generate;
                const auto gens = parse_family_literal(u, family_text);
                const filter_lab::SetFamily f = filter_lab::generate_filter(u, gens);
                result = json{{"members", family_json(f)}};
            } else if (!fl_extend.empty()) {
                action = "extend";
                family_text = fl_extend;
                if (fl_phi.empty()) {
                    throw std::invalid_argument("filterlab: --extend needs --phi");
                }
                const filter_lab::SetFamily fam(u,
                                                parse_family_literal(u, family_text));
                const filter_lab::SetPredicate phi =
                    filter_lab::parse_predicate(u, fl_phi);
                const filter_lab::SetFamily ext =
                    filter_lab::extend_ultrafilter(fam, phi);
                filter_lab::Mask core = u.full();
                for (filter_lab::Mask s : ext.members) core &= s;
                result = json{{"members", family_json(ext)},
                              {"core", mask_json(core)},
                              {"phi", phi.name}};
            } else {
                action = "partition-regular";
                family_text = fl_partition;
                const auto g = parse_family_literal(u, family_text);
                const filter_lab::PartitionRegularity pr =
                    filter_lab::partition_regular(u, g);
                result = json{{"regular", pr.regular}};
                if (pr.witness) result["witness"] = family_json(*pr.witness);
                if (!pr.refuting_partition.empty()) {
                    json parts = json::array();
                    for (filter_lab::Mask p : pr.refuting_partition) {
                        parts.push_back(mask_json(p));
                    }
                    result["refuting_partition"] = parts;
                }
            }
            const json config{{"universe", fl_universe},
                              {"action", action},
                              {"family", family_text},
                              {"phi", opt_str(fl_phi)},
                              {"out", opt_str(out_path)}};
            return finish("filterlab", config, result, out_path, out, kExitOk);
        }

        // selftest
        const SelftestReport rep = run_selftest(st_seed);
        json checks = json::array();
        for (const SelftestCheck& c : rep.checks) {
            checks.push_back(json{{"name", c.name}, {"pass", c.pass}});
        }
        const json result{{"seed", rep.seed},
                          {"all_pass", rep.all_pass},
                          {"checks", checks}};
        const json config{{"seed", st_seed}, {"out", opt_str(out_path)}};
        return finish("selftest", config, result, out_path, out,
                      rep.all_pass ? kExitOk : kExitUsage);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace syndet
