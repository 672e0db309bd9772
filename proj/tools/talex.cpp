#include <CLI11.hpp>

#include <talex/talex.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace fs = std::filesystem;
using namespace talex;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct LoadedRep {
    std::string ring;
    std::string hash; // content hash of the file, or a tag for built-ins
    std::variant<Representation<Int>, Representation<Rat>, Representation<Fp>, Representation<Cx>>
        rep;
};

LoadedRep trivial_rep(const Presentation& p, const std::string& ring) {
    LoadedRep out;
    out.ring = ring;
    out.hash = hex64(fnv1a64("trivial:" + ring));
    if (ring == "Z")
        out.rep = trivial_representation(p, Int(1));
    else if (ring == "Q")
        out.rep = trivial_representation(p, Rat(1));
    else if (ring == "C")
        out.rep = trivial_representation(p, Cx(1.0));
    else if (ring.size() > 1 && ring[0] == 'F') {
        std::uint64_t q = 0;
        try {
            q = std::stoull(ring.substr(1));
        } catch (const std::exception&) {
            throw parse_error("bad ring token '" + ring + "'");
        }
        if (q >= (1ull << 31) || !is_prime_u64(q))
            throw parse_error("modulus in '" + ring + "' is not a small prime");
        out.rep = trivial_representation(p, Fp(1, q));
    } else {
        throw parse_error("unknown ring '" + ring + "' (use Z, Q, F<p>, C)");
    }
    return out;
}

LoadedRep load_rep(const Presentation& p, const std::string& rep_path, const std::string& ring) {
    if (rep_path.empty()) return trivial_rep(p, ring.empty() ? "Q" : ring);
    if (!ring.empty())
        throw parse_error("--ring conflicts with an explicit representation file");
    std::string bytes = read_file(rep_path);
    std::istringstream in(bytes);
    ParsedRepresentation parsed = parse_representation(in, rep_path);
    LoadedRep out;
    out.ring = parsed.ring;
    out.hash = hex64(fnv1a64(bytes));
    out.rep = std::move(parsed.rep);
    return out;
}

template <class C>
std::string fibered_lines(const NormalizedInvariant<C>& inv, const ConwayPolynomial& cw,
                          int genus) {
    using F = typename field_of<C>::type;
    auto fc = fibered_check(inv, cw, genus);
    std::string out = "fibered: ";
    out += fc.consistent() ? "consistent" : "NO (" + fc.reason + ")";
    out += "\n";
    if (fc.eps_discrepancy) {
        out += "fibered_note: epsilon != 1, leading-coefficient exponent read as g-1/2; the "
               "alternative 2g-1 gives ";
        out += fc.coeff_ok_alt ? "a match" : "no match";
        out += "\n";
    }
    return out;
}

struct Options {
    std::string topology;
    std::string rep;
    std::string ring;
    std::string format = "text";
    int genus = 0;
    bool has_genus = false;
    int steps = 50;
    std::uint64_t seed = 1;
    std::string manifest;
    std::string cache;
    int jobs = 4;
};

template <class C>
int run_compute(const Presentation& p, const Representation<C>& rho, const Options& opt,
                const std::string& pres_hash, const std::string& ring,
                const std::string& rep_hash) {
    auto inv = normalized_invariant(p, rho);
    if (opt.format == "record")
        std::cout << record_text(inv, ring, pres_hash, rep_hash);
    else
        std::cout << invariant_to_text(inv);
    return 0;
}

template <class C>
int run_report(const Presentation& p, const Representation<C>& rho, const Options& opt) {
    auto inv = normalized_invariant(p, rho);
    std::cout << invariant_to_text(inv);
    auto cw = conway_polynomial(p);
    std::cout << "conway: " << to_string(cw) << "\n";
    if (opt.has_genus)
        std::cout << fibered_lines(inv, cw, opt.genus);
    else
        std::cout << "fibered: skipped\n";
    std::cout << "g_f >= " << free_genus_lower_bound(inv) << "\n";
    std::cout << "g >= " << genus_lower_bound(inv) << "\n";
    return 0;
}

template <class C>
bool invariant_match(const NormalizedInvariant<C>& a, const NormalizedInvariant<C>& b) {
    if constexpr (ring_traits<C>::is_exact) {
        return invariant_equal(a, b);
    } else {
        if (a.n != b.n || a.zero != b.zero) return false;
        if (a.zero) return true;
        if (!(a.eps == b.eps)) return false;
        if (a.eps_power2 != b.eps_power2 && !ring_traits<Cx>::is_one(a.eps)) return false;
        int ok = 0;
        for (int j = 0; j < 8; ++j) {
            Cx u(std::polar(1.17, 0.37 + j * 0.71));
            Cx da = a.value.den().eval_halfpower(u), db = b.value.den().eval_halfpower(u);
            if (std::abs(da.v) < 1e-6 || std::abs(db.v) < 1e-6) continue;
            Cx va = a.value.eval_halfpower(u), vb = b.value.eval_halfpower(u);
            double scale = std::max(1.0, std::max(std::abs(va.v), std::abs(vb.v)));
            if (std::abs((va - vb).v) / scale > 1e-7) return false;
            ++ok;
        }
        return ok >= 4;
    }
}

template <class C>
int run_fuzz(const Presentation& p, const Representation<C>& rho, const Options& opt) {
    auto base = normalized_invariant(p, rho);
    auto run = random_tietze_run(p, opt.steps, opt.seed);
    auto rho2 = extend_through_moves(p, rho, run.moves);
    auto inv2 = normalized_invariant(run.result, rho2);
    bool ok = invariant_match(base, inv2);
    std::cout << "fuzz: " << opt.steps << " moves, seed " << opt.seed
              << (ok ? ": value unchanged: OK" : ": MISMATCH") << "\n";
    if (!ok) {
        std::cout << "moves applied:\n";
        for (const auto& mv : run.moves) std::cout << "  " << mv.text << "\n";
        std::cout << "before:\n" << invariant_to_text(base);
        std::cout << "after:\n" << invariant_to_text(inv2);
        return 1;
    }
    return 0;
}

int dispatch_single(const char* mode, const Options& opt) {
    std::string pres_bytes = read_file(opt.topology);
    std::istringstream pin(pres_bytes);
    Presentation p = load_topology(pin, opt.topology);
    std::string pres_hash = hex64(fnv1a64(pres_bytes));
    LoadedRep rep = load_rep(p, opt.rep, opt.ring);
    return std::visit(
        [&](const auto& rho) -> int {
            if (std::string(mode) == "compute")
                return run_compute(p, rho, opt, pres_hash, rep.ring, rep.hash);
            if (std::string(mode) == "report") return run_report(p, rho, opt);
            return run_fuzz(p, rho, opt);
        },
        rep.rep);
}

// ---- batch ------------------------------------------------------------------

struct BatchItem {
    std::string topology, rep; // as written in the manifest
    std::string status;        // ok | cached | error: ...
    std::string value;
};

std::string record_value_line(const std::string& record) {
    std::istringstream in(record);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("value: ", 0) == 0) return line.substr(7);
    return "?";
}

void process_item(BatchItem& item, const fs::path& base, const fs::path& cache_dir) {
    try {
        fs::path topo_path = base / item.topology;
        std::string pres_bytes = read_file(topo_path.string());
        std::istringstream pin(pres_bytes);
        Presentation p = load_topology(pin, topo_path.string());
        std::string pres_hash = hex64(fnv1a64(pres_bytes));

        LoadedRep rep;
        std::string rep_bytes_tag;
        if (item.rep == "-") {
            rep = trivial_rep(p, "Q");
            rep_bytes_tag = "trivial:Q";
        } else {
            fs::path rep_path = base / item.rep;
            rep_bytes_tag = read_file(rep_path.string());
            std::istringstream rin(rep_bytes_tag);
            ParsedRepresentation parsed = parse_representation(rin, rep_path.string());
            rep.ring = parsed.ring;
            rep.hash = hex64(fnv1a64(rep_bytes_tag));
            rep.rep = std::move(parsed.rep);
        }

        std::string key =
            hex64(fnv1a64(pres_bytes + '\x1f' + rep_bytes_tag + '\x1f' + rep.ring));
        fs::path slot = cache_dir / (key + ".rec");
        if (fs::exists(slot)) {
            std::string record = read_file(slot.string());
            item.status = "cached";
            item.value = record_value_line(record);
            return;
        }
        std::string record = std::visit(
            [&](const auto& rho) {
                auto inv = normalized_invariant(p, rho);
                return record_text(inv, rep.ring, pres_hash,
                                   rep.hash.empty() ? hex64(fnv1a64(rep_bytes_tag)) : rep.hash);
            },
            rep.rep);
        fs::path tmp = cache_dir / (key + ".tmp." + std::to_string(::getpid()));
        {
            std::ofstream out(tmp);
            out << record;
        }
        fs::rename(tmp, slot);
        item.status = "ok";
        item.value = record_value_line(record);
    } catch (const std::exception& e) {
        item.status = std::string("error: ") + e.what();
        item.value = "-";
    }
}

int run_batch(const Options& opt) {
    fs::path manifest_path(opt.manifest);
    std::string manifest = read_file(opt.manifest);
    fs::path base = manifest_path.parent_path();
    fs::path cache_dir = opt.cache.empty() ? base / ".talex-cache" : fs::path(opt.cache);
    fs::create_directories(cache_dir);

    std::vector<BatchItem> items;
    std::istringstream in(manifest);
    auto lines = detail::tokenize_lines(in);
    for (const auto& line : lines) {
        if (line.tokens.size() != 2)
            throw parse_error("manifest line needs: <topology-file> <rep-file | ->",
                              opt.manifest, line.number);
        items.push_back(BatchItem{line.tokens[0], line.tokens[1], "", ""});
    }

    int jobs = std::max(1, opt.jobs);
    for (std::size_t start = 0; start < items.size(); start += jobs) {
        std::vector<std::future<void>> wave;
        for (std::size_t i = start; i < items.size() && i < start + jobs; ++i)
            wave.push_back(std::async(std::launch::async,
                                      [&items, i, &base, &cache_dir]() {
                                          process_item(items[i], base, cache_dir);
                                      }));
        for (auto& f : wave) f.get();
    }

    std::size_t w0 = 8, w1 = 14, w2 = 6;
    for (const auto& it : items) {
        w0 = std::max(w0, it.topology.size());
        w1 = std::max(w1, it.rep.size());
        w2 = std::max(w2, it.status.size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size() + 2, ' ');
    };
    std::cout << pad("topology", w0) << pad("representation", w1) << pad("status", w2)
              << "value\n";
    bool any_error = false;
    for (const auto& it : items) {
        std::cout << pad(it.topology, w0) << pad(it.rep, w1) << pad(it.status, w2) << it.value
                  << "\n";
        if (it.status.rfind("error", 0) == 0) any_error = true;
    }
    return any_error ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"normalized twisted Alexander invariants of knots"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("topology", opt.topology,
                        "presentation (gens:/meridian:/relators) or diagram (X lines) file")
            ->required();
        cmd->add_option("representation", opt.rep, "representation file (dim:/ring:/matrices)");
        cmd->add_option("--ring", opt.ring,
                        "coefficient ring for the built-in trivial representation (Z, Q, F<p>, "
                        "C); default Q");
    };

    CLI::App* compute = app.add_subcommand("compute", "normalized invariant of one pair");
    add_common(compute);
    compute->add_option("--format", opt.format, "text | record")
        ->check(CLI::IsMember({"text", "record"}));

    CLI::App* report =
        app.add_subcommand("report", "invariant plus Conway, fibering and genus bounds");
    add_common(report);
    report->add_option("--genus", opt.genus, "candidate fiber genus for the fibering check")
        ->check(CLI::Range(1, 1 << 20));

    CLI::App* fuzz = app.add_subcommand(
        "fuzz", "random Tietze moves; the invariant must not change");
    add_common(fuzz);
    fuzz->add_option("--steps", opt.steps, "number of moves")->check(CLI::Range(0, 100000));
    fuzz->add_option("--seed", opt.seed, "random seed");

    CLI::App* batch = app.add_subcommand("batch", "compute a manifest of pairs with caching");
    batch->add_option("manifest", opt.manifest, "lines: <topology-file> <rep-file | ->")
        ->required();
    batch->add_option("--cache", opt.cache, "cache directory (default: <manifest dir>/.talex-cache)");
    batch->add_option("--jobs", opt.jobs, "parallel workers")->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    opt.has_genus = report->count("--genus") > 0;

    try {
        if (compute->parsed()) return dispatch_single("compute", opt);
        if (report->parsed()) return dispatch_single("report", opt);
        if (fuzz->parsed()) return dispatch_single("fuzz", opt);
        return run_batch(opt);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const verify_error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 3;
    } catch (const degenerate_error& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
