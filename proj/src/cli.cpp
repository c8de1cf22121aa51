#include "farey_sl2/cli.hpp"

#include "farey_sl2/errors.hpp"
#include "farey_sl2/io.hpp"
#include "farey_sl2/random.hpp"
#include "farey_sl2/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace farey::cli {

namespace {

using io::json;

std::string verdict(bool v, const Options& opts) {
    if (!opts.color) return v ? "true" : "false";
    return v ? "\x1b[32mtrue\x1b[0m" : "\x1b[31mfalse\x1b[0m";
}

// A path from either {"vertices": [...]} or an itinerary spec evaluated over the window.
FareyPath load_path(const std::string& source, std::optional<IndexRange> window) {
    json j = io::load_json(source);
    if (j.is_object() && j.contains("vertices")) {
        FareyPath p = io::path_from_json(j);
        if (!window) return p;
        if (p.kind() == PathKind::closed) return periodic_extension(p, *window);
        return p.slice(window->first, window->last);
    }
    if (!window) throw ParseError("an itinerary spec needs an index window");
    return path_from_itinerary(io::itinerary_spec_from_json(j), *window);
}

void print_window(std::ostream& out, const TilingWindow& w, const std::string& format) {
    if (format == "json")
        out << io::to_json(w).dump() << '\n';
    else
        out << render::tsv(w);
}

void print_word(std::ostream& out, const IndexedWord& w, const std::string& format) {
    if (format == "json") {
        json vals = json::array();
        for (const auto& e : w.values) vals.push_back(e.str());
        out << json{{"first", w.first}, {"word", vals}}.dump() << '\n';
    } else {
        out << io::format_word(w.values) << '\n';
    }
}

struct Roundtrip {
    long count = 100;
    std::uint64_t seed = 1;
};

int run_roundtrip(const Roundtrip& cfg, std::ostream& out, const Options& opts) {
    rnd::Rng rng(cfg.seed);
    IndexRange win{-5, 6};
    long ok = 0;
    for (long t = 0; t < cfg.count; ++t) {
        PathPair pair = rnd::eventually_periodic_pair(rng, win, win);
        TilingWindow m = phi(pair, win, win, SignMode::raw);
        bool good = is_sl2(m) && is_tame(m);
        if (good) {
            PathPair back = psi(m);
            good = same_orbit(pair, back).has_value() && phi(back, win, win, SignMode::raw) == m;
        }
        if (good) {
            ++ok;
        } else {
            out << "pair " << t << ": " << verdict(false, opts) << '\n';
        }
    }
    out << "roundtrip: " << ok << "/" << cfg.count << " pairs recovered\n";
    return ok == cfg.count ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Options opts) {
    CLI::App app{"Exact computations with Farey paths, SL2-tilings and friezes", "farey-sl2"};
    app.require_subcommand(1);

    std::string format, window, gamma, delta, quiddity_word, path_src, itin_src, window_src, polygon_src, period_word;
    std::string direction = "both";
    std::string predicate, input;
    long order = 0, base = 0;
    bool raw = false;
    Roundtrip rt;

    auto* tile = app.add_subcommand("tile", "Tiling window of a pair of paths");
    tile->add_option("--gamma", gamma, "Path or itinerary spec (JSON or file)")->required();
    tile->add_option("--delta", delta, "Path or itinerary spec (JSON or file)")->required();
    tile->add_option("--window", window, "i0:i1,j0:j1")->required();
    tile->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    tile->add_flag("--raw", raw, "Keep the sign given by the lifts");

    auto* frieze = app.add_subcommand("frieze", "Frieze of a closed path");
    auto* fq = frieze->add_option("--quiddity", quiddity_word, "Itinerary e_1..e_n of the closed path, e.g. 1,2,2,3,1,2,4");
    auto* fp = frieze->add_option("--path", path_src, "Closed path (JSON or file)");
    fq->excludes(fp);
    frieze->add_option("--order", order, "Declared order (default: path length)");
    frieze->add_option("--base", base, "Standard form starts near this column");
    frieze->add_option("--window", window, "i0:i1,j0:j1 for tsv/json output");
    frieze->add_option("--format", format, "standard-form, tsv or json")
        ->check(CLI::IsMember({"standard-form", "tsv", "json"}));

    auto* itinerary = app.add_subcommand("itinerary", "Itinerary of a path");
    itinerary->add_option("--path", path_src, "Path (JSON or file)")->required();
    itinerary->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* quid = app.add_subcommand("quiddity", "Quiddity diagonal of a frieze window");
    quid->add_option("--window", window_src, "Window (JSON or file)")->required();
    quid->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* check = app.add_subcommand("check", "Evaluate a predicate");
    check->add_option("predicate", predicate, "tame | sl2 | positive | cycle-seq | acyclic | clockwise | cn0")
        ->required()
        ->check(CLI::IsMember({"tame", "sl2", "positive", "cycle-seq", "acyclic", "clockwise", "cn0"}));
    check->add_option("input", input, "Window / path JSON or file, or a word such as 1,2,2")->required();
    check->add_option("--order", order, "Frieze order for 'positive'");

    auto* limits = app.add_subcommand("limits", "Limits of eventually periodic tails");
    auto* li = limits->add_option("--itinerary", itin_src, "Itinerary spec with periodic tails");
    auto* lp = limits->add_option("--path", path_src, "Path window whose ends follow --period");
    li->excludes(lp);
    limits->add_option("--period", period_word, "Tail period word for --path");
    limits->add_option("--direction", direction, "forward, backward or both")
        ->check(CLI::IsMember({"forward", "backward", "both"}));

    auto* dual = app.add_subcommand("dual", "Dual path of a clockwise window");
    auto* dp = dual->add_option("--path", path_src, "Clockwise path window");
    auto* di = dual->add_option("--itinerary", itin_src, "Itinerary spec; needs --window");
    dp->excludes(di);
    dual->add_option("--window", window, "i0:i1 for --itinerary");
    dual->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* rend = app.add_subcommand("render", "SVG picture in the disc model");
    auto* rp = rend->add_option("--path", path_src, "Path (JSON or file)");
    auto* rg = rend->add_option("--polygon", polygon_src, "Triangulated polygon (JSON or file)");
    rp->excludes(rg);

    auto* roundtrip = app.add_subcommand("roundtrip", "Random tiling/path-pair round trips");
    roundtrip->add_option("--random", rt.count, "Number of random pairs")->check(CLI::PositiveNumber);
    roundtrip->add_option("--seed", rt.seed, "Random seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (tile->parsed()) {
            auto [ir, jr] = io::parse_window(window);
            PathPair pair{load_path(gamma, ir), load_path(delta, jr)};
            print_window(out, phi(pair, ir, jr, raw ? SignMode::raw : SignMode::canonical), format);
            return 0;
        }
        if (frieze->parsed()) {
            if (quiddity_word.empty() && path_src.empty()) throw ParseError("frieze needs --quiddity or --path");
            FareyPath closed = !quiddity_word.empty() ? closed_path_from_word(io::parse_word(quiddity_word))
                                                      : load_path(path_src, std::nullopt);
            if (closed.kind() != PathKind::closed) throw DomainError("frieze needs a closed path");
            long n = order > 0 ? order : closed.length();
            if (format.empty() || format == "standard-form") {
                IndexRange span = render::standard_form_span(n, base);
                out << render::standard_form(frieze_from_closed_path(closed, n, span, span), base);
                return 0;
            }
            IndexRange ir{0, 2 * n}, jr{0, 2 * n};
            if (!window.empty()) std::tie(ir, jr) = io::parse_window(window);
            print_window(out, frieze_from_closed_path(closed, n, ir, jr).window, format);
            return 0;
        }
        if (itinerary->parsed()) {
            print_word(out, itinerary_of(load_path(path_src, std::nullopt)), format);
            return 0;
        }
        if (quid->parsed()) {
            print_word(out, quiddity(io::window_from_json(io::load_json(window_src))), format);
            return 0;
        }
        if (check->parsed()) {
            bool v = false;
            if (predicate == "tame" || predicate == "sl2") {
                TilingWindow w = io::window_from_json(io::load_json(input));
                v = predicate == "tame" ? is_tame(w) : is_sl2(w);
            } else if (predicate == "positive") {
                if (order <= 0) throw ParseError("'check positive' needs --order");
                v = is_positive_frieze(io::window_from_json(io::load_json(input)), order);
            } else if (predicate == "cycle-seq") {
                v = is_cycle_sequence(io::parse_word(input));
            } else if (predicate == "acyclic") {
                v = quiddity_realizable(io::parse_word(input));
            } else if (predicate == "clockwise") {
                v = is_clockwise(load_path(input, std::nullopt));
            } else {
                v = is_Cn0(load_path(input, std::nullopt));
            }
            out << verdict(v, opts) << '\n';
            return v ? 0 : 1;
        }
        if (limits->parsed()) {
            auto report = [&](TailDirection d, const FareyPath& p, const Word& period) {
                TailLimit t = classify_tail_limit(p, period, d);
                out << (d == TailDirection::forward ? "forward: " : "backward: ") << to_string(t) << '\n';
            };
            bool fwd = direction != "backward";
            bool bwd = direction != "forward";
            if (!itin_src.empty()) {
                ItinerarySpec spec = io::itinerary_spec_from_json(io::load_json(itin_src));
                if (bwd) {
                    if (spec.left_period.empty()) throw DomainError("spec has no left period");
                    long n = static_cast<long>(spec.left_period.size());
                    report(TailDirection::backward, path_from_itinerary(spec, {spec.start - n - 1, spec.start}), spec.left_period);
                }
                if (fwd) {
                    if (spec.right_period.empty()) throw DomainError("spec has no right period");
                    long n = static_cast<long>(spec.right_period.size());
                    long t = spec.start + static_cast<long>(spec.core.size());
                    report(TailDirection::forward, path_from_itinerary(spec, {t - 1, t + n}), spec.right_period);
                }
                return 0;
            }
            if (path_src.empty() || period_word.empty()) throw ParseError("limits needs --itinerary, or --path with --period");
            FareyPath p = load_path(path_src, std::nullopt);
            Word period = io::parse_word(period_word);
            if (bwd) report(TailDirection::backward, p, period);
            if (fwd) report(TailDirection::forward, p, period);
            return 0;
        }
        if (dual->parsed()) {
            if (path_src.empty() && itin_src.empty()) throw ParseError("dual needs --path or --itinerary");
            std::optional<IndexRange> range;
            if (!window.empty()) range = io::parse_range(window);
            FareyPath g = load_path(!path_src.empty() ? path_src : itin_src, !path_src.empty() ? std::nullopt : range);
            DualPath d = dual_path(g);
            if (format == "json") {
                json v = json::array();
                for (const auto& x : d.vertices) v.push_back(to_string(x));
                out << json{{"vertices", v}, {"connected", d.connected}, {"open_ends", true}}.dump() << '\n';
            } else {
                std::string line = "...";
                for (const auto& x : d.vertices) line += "," + to_string(x);
                out << line << ",...\n";
            }
            return 0;
        }
        if (rend->parsed()) {
            std::vector<ExtRational> verts;
            std::vector<std::pair<ExtRational, ExtRational>> edges;
            if (!polygon_src.empty()) {
                TriangulatedPolygon poly = realize(io::polygon_from_json(io::load_json(polygon_src)));
                verts = poly.vertices;
                for (long k = 0; k < poly.n; ++k) edges.emplace_back(verts[k], verts[(k + 1) % poly.n]);
                for (const auto& [a, b] : diagonals_of(poly)) edges.emplace_back(verts[a], verts[b]);
            } else if (!path_src.empty()) {
                verts = load_path(path_src, std::nullopt).vertices();
                for (std::size_t k = 0; k + 1 < verts.size(); ++k) edges.emplace_back(verts[k], verts[k + 1]);
                std::sort(verts.begin(), verts.end());
                verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            } else {
                throw ParseError("render needs --path or --polygon");
            }
            out << render::svg(verts, edges);
            return 0;
        }
        if (roundtrip->parsed()) return run_roundtrip(rt, out, opts);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace farey::cli
