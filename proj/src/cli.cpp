#include "kmc/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "kmc/characters.hpp"
#include "kmc/typea.hpp"

namespace kmc {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

long parse_long(const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        fail("BadNumber", "not an integer: '" + s + "'");
    }
    if (used != s.size()) fail("BadNumber", "not an integer: '" + s + "'");
    return v;
}

std::vector<long> parse_long_list(const std::string& s, char sep) {
    std::vector<long> out;
    for (const auto& tok : split(s, sep)) out.push_back(parse_long(tok));
    return out;
}

std::vector<std::vector<long>> parse_matrix(const std::string& s) {
    std::vector<std::vector<long>> rows;
    for (const auto& row : split(s, ';')) rows.push_back(parse_long_list(row, ','));
    return rows;
}

CartanData load_cartan(const std::string& name, const std::string& matrix,
                       const std::string& symmetrizer) {
    if (!name.empty()) return builtin_cartan(name);
    if (matrix.empty()) fail("NotGCM", "need --cartan or --matrix");
    std::optional<std::vector<long>> d;
    if (!symmetrizer.empty()) d = parse_long_list(symmetrizer, ',');
    return validate_cartan(parse_matrix(matrix), d, "custom");
}

// "1,0;0,1" = one weight per ';' group. For rank 1, "3,3,3" also reads as
// three weights.
std::vector<std::vector<long>> parse_hw_list(const std::string& s, std::size_t rank) {
    std::vector<std::vector<long>> out;
    std::vector<std::string> groups = split(s, ';');
    if (rank == 1 && groups.size() == 1 && s.find(',') != std::string::npos) {
        for (long v : parse_long_list(s, ',')) out.push_back({v});
        return out;
    }
    for (const auto& g : groups) out.push_back(parse_long_list(g, ','));
    for (const auto& hw : out)
        if (hw.size() != rank) fail("MixedCartanData", "weight length does not match rank");
    return out;
}

struct FactorCache {
    const CartanData& c;
    std::optional<int> depth;
    std::map<std::vector<long>, std::shared_ptr<const CrystalGraph>> cache;

    std::shared_ptr<const CrystalGraph> get(const std::vector<long>& hw) {
        auto it = cache.find(hw);
        if (it != cache.end()) return it->second;
        auto g = std::make_shared<CrystalGraph>(generate_crystal(c, hw, depth));
        cache.emplace(hw, g);
        return g;
    }
};

TensorCrystal tensor_from_flags(const CartanData& c, const std::string& hw,
                                std::optional<int> depth) {
    FactorCache cache{c, depth, {}};
    std::vector<std::shared_ptr<const CrystalGraph>> factors;
    for (const auto& nu : parse_hw_list(hw, c.rank())) factors.push_back(cache.get(nu));
    return build_tensor(std::move(factors));
}

std::int32_t resolve_factor_node(const CrystalGraph& g, const std::string& desc) {
    auto at = desc.find('@');
    std::string weight_part = desc.substr(0, at == std::string::npos ? desc.size() : at);
    auto candidates = g.nodes_by_pairings(parse_long_list(weight_part, ','));
    if (candidates.empty()) fail("LabelNotFound", "no node of weight " + weight_part);
    if (at == std::string::npos) {
        if (candidates.size() > 1)
            fail("AmbiguousLabel",
                 "weight " + weight_part + " is ambiguous; disambiguate with @e1.e2...");
        return candidates.front();
    }
    std::vector<long> exps;
    for (const auto& tok : split(desc.substr(at + 1), '.')) exps.push_back(parse_long(tok));
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    StringWord w = default_word(g.rank());
    for (std::int32_t v : candidates)
        if (string_parametrization(g, v, w).exponents == exps) return v;
    fail("LabelNotFound", "no node of weight " + weight_part + " with that string");
}

TensorLabel parse_label(const TensorCrystal& t, const std::string& s) {
    std::vector<std::string> groups = split(s, ';');
    if (t.rank() == 1 && groups.size() == 1 && t.n_factors() > 1) groups = split(s, ',');
    if (groups.size() != t.n_factors())
        fail("FactorIndexOutOfRange", "label has " + std::to_string(groups.size()) +
                                          " factors, expected " +
                                          std::to_string(t.n_factors()));
    TensorLabel l;
    for (std::size_t j = 0; j < groups.size(); ++j)
        l.push_back(resolve_factor_node(*t.factors[j], groups[j]));
    return l;
}

std::string render_factor_node(const CrystalGraph& g, std::int32_t v) {
    auto pairings = coroot_pairings(g.cartan, g.nodes[v].wt);
    std::string out;
    for (std::size_t i = 0; i < pairings.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(pairings[i]);
    }
    if (g.nodes_by_pairings(pairings).size() > 1) {
        out += "@";
        auto exps = string_parametrization(g, v, default_word(g.rank())).exponents;
        if (exps.empty()) out += "0";
        for (std::size_t k = 0; k < exps.size(); ++k) {
            if (k) out += ".";
            out += std::to_string(exps[k]);
        }
    }
    return out;
}

std::string render_label(const TensorCrystal& t, const TensorLabel& l) {
    std::string out;
    for (std::size_t j = 0; j < l.size(); ++j) {
        if (j) out += ";";
        out += render_factor_node(*t.factors[j], l[j]);
    }
    return out;
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
        return;
    }
    std::filesystem::path p = out_path;
    if (p.is_relative())
        if (const char* dir = std::getenv("KMC_OUT_DIR")) p = std::filesystem::path(dir) / p;
    std::ofstream f(p);
    if (!f) fail("BadOutput", "cannot open " + p.string());
    f << content;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string crystal_text(const CrystalGraph& g) {
    std::ostringstream os;
    os << "cartan: " << g.cartan.name << " (" << kind_name(g.cartan.kind) << ", rank "
       << g.rank() << ")\n";
    os << "nodes: " << g.nodes.size() << "\n";
    std::size_t edges = 0;
    for (const auto& row : g.f_edge)
        for (std::int32_t e : row)
            if (e >= 0) ++edges;
    os << "edges: " << edges << "\n";
    os << "truncated: " << (g.truncated ? "true" : "false") << "\n";
    os << "depth: " << g.depth_used << "\n";
    if (g.level_zero_affine) os << "level_zero_affine: true\n";
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        const auto& node = g.nodes[v];
        os << "node " << v << " depth " << node.depth << " wt "
           << weight_str(g.cartan, node.wt) << " eps [";
        for (std::size_t i = 0; i < g.rank(); ++i) os << (i ? "," : "") << node.eps[i];
        os << "] phi [";
        for (std::size_t i = 0; i < g.rank(); ++i) os << (i ? "," : "") << node.phi[i];
        os << "]\n";
    }
    for (std::size_t v = 0; v < g.nodes.size(); ++v)
        for (std::size_t i = 0; i < g.rank(); ++i)
            if (g.f_edge[v][i] >= 0)
                os << "edge " << v << " -(" << i << ")-> " << g.f_edge[v][i] << "\n";
    return os.str();
}

StringWord parse_word(const std::string& s, std::size_t rank) {
    if (s.empty()) return default_word(rank);
    StringWord w;
    auto bar = s.find('|');
    auto read = [](const std::string& part) {
        std::vector<std::size_t> out;
        if (part.empty()) return out;
        for (const auto& tok : split(part, ',')) {
            long v = parse_long(tok);
            if (v < 0) fail("WordSupportIncomplete", "word letters must be nonnegative");
            out.push_back(static_cast<std::size_t>(v));
        }
        return out;
    };
    if (bar == std::string::npos) {
        w.cycle = read(s);
    } else {
        w.prefix = read(s.substr(0, bar));
        w.cycle = read(s.substr(bar + 1));
    }
    check_word(w, rank);
    return w;
}

Weight parse_weight(const std::string& s, std::size_t rank) {
    auto at = s.find('@');
    Weight w;
    w.fund = parse_long_list(s.substr(0, at == std::string::npos ? s.size() : at), ',');
    if (w.fund.size() != rank) fail("MixedCartanData", "weight length does not match rank");
    w.root.assign(rank, Rat(0));
    if (at != std::string::npos) {
        auto coords = split(s.substr(at + 1), ',');
        if (coords.size() != rank)
            fail("MixedCartanData", "root offset length does not match rank");
        for (std::size_t k = 0; k < rank; ++k) w.root[k] = parse_rat(coords[k]);
    }
    return w;
}

std::string ordering_name(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return "less";
    if (o == std::strong_ordering::greater) return "greater";
    return "equal";
}

struct VerifyRun {
    std::ostream& out;
    bool ok = true;

    void report(const std::string& name, const VerifyReport& rep) {
        if (rep.ok) {
            out << name << ": ok\n";
        } else {
            ok = false;
            out << name << ": " << rep.violations.size() << " violation(s)\n";
            for (const auto& v : rep.violations) out << "  " << v << "\n";
        }
    }
    void check(const std::string& name, bool condition, const std::string& detail = "") {
        if (condition) {
            out << name << ": ok" << (detail.empty() ? "" : " (" + detail + ")") << "\n";
        } else {
            ok = false;
            out << name << ": FAILED" << (detail.empty() ? "" : " (" + detail + ")") << "\n";
        }
    }
};

void run_verify(const CartanData& c, const std::string& hw, std::optional<int> depth,
                std::uint64_t seed, std::ostream& out_stream, bool& all_ok) {
    VerifyRun run{out_stream};
    FactorCache cache{c, depth, {}};
    std::vector<std::shared_ptr<const CrystalGraph>> factors;
    auto hws = parse_hw_list(hw, c.rank());
    for (std::size_t j = 0; j < hws.size(); ++j) {
        auto g = cache.get(hws[j]);
        factors.push_back(g);
        std::string tag = "[" + std::to_string(j) + "]";
        run.out << "crystal" << tag << ": nodes=" << g->nodes.size()
                << " truncated=" << (g->truncated ? "true" : "false") << "\n";
        run.report("axioms" + tag, verify_crystal_axioms(*g));
        if (c.kind == CartanKind::finite && !g->truncated) {
            Int expect = weyl_dimension(c, hws[j]);
            run.check("dimension" + tag, Int(static_cast<long>(g->nodes.size())) == expect,
                      expect.get_str());
        }
        if (c.simply_laced() && c.kind == CartanKind::finite && !g->truncated)
            run.report("stembridge" + tag, verify_stembridge(*g));
    }
    TensorCrystal t = build_tensor(factors);
    run.out << "tensor: labels=" << t.label_count() << "\n";

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> color(0, c.rank() - 1);
    TensorLabel x = t.hw_label();
    long steps = 200, applied = 0;
    bool walk_ok = true;
    for (long s = 0; s < steps; ++s) {
        std::size_t i = color(rng);
        if (rng() % 2) {
            auto down = tensor_f(t, x, i);
            if (!down) continue;
            auto back = tensor_e(t, *down, i);
            if (!back || *back != x) walk_ok = false;
            x = *down;
        } else {
            auto up = tensor_e(t, x, i);
            if (!up) continue;
            auto back = tensor_f(t, *up, i);
            if (!back || *back != x) walk_ok = false;
            x = *up;
        }
        ++applied;
        auto [hp, hm] = h_stats(t, x, i);
        long pairing = 0;
        Weight wt = t.total_weight(x);
        pairing = coroot_pairing_int(c, wt, i);
        if (hm - hp != pairing) walk_ok = false;
    }
    run.check("random-walk", walk_ok, "seed=" + std::to_string(seed) +
                                          ", moves=" + std::to_string(applied));
    StringWord w = default_word(c.rank());
    bool strings_ok = true;
    try {
        StringParam sp = string_parametrization(t, x, w);
        strings_ok = reconstruct_from_string(t, sp) == x;
    } catch (const Error& e) {
        strings_ok = std::string(e.code()) == "TruncatedStatistics";
    }
    run.check("string-roundtrip", strings_ok);
    run.out << "verdict: " << (run.ok ? "ok" : "FAILED") << "\n";
    all_ok = run.ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Kac-Moody crystal combinatorics"};
    app.require_subcommand(1);

    std::string cartan_name, matrix, symmetrizer, hw, label, op, word_str, format = "text";
    std::string out_path, import_path, partition, mode, a_str, b_str;
    std::size_t color = 0;
    long p_mod = 0, r_res = 0;
    std::uint64_t seed = 0;
    std::optional<int> depth;
    int depth_flag = -1;

    auto add_cartan_flags = [&](CLI::App* sub) {
        sub->add_option("--cartan", cartan_name, "builtin Cartan name, e.g. A2, B2, G2, A2~");
        sub->add_option("--matrix", matrix, "Cartan matrix rows, e.g. '2,-1;-1,2'");
        sub->add_option("--symmetrizer", symmetrizer, "symmetrizer diagonal, e.g. '1,1'");
    };
    auto add_common = [&](CLI::App* sub, bool with_hw = true) {
        add_cartan_flags(sub);
        if (with_hw) sub->add_option("--hw", hw, "highest weights, ';'-separated coord lists");
        sub->add_option("--depth", depth_flag, "depth cutoff for generation");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--out", out_path, "output file (KMC_OUT_DIR prefixes relative paths)");
    };

    CLI::App* cmd_crystal = app.add_subcommand("crystal", "generate or import a crystal graph");
    add_common(cmd_crystal);
    cmd_crystal->add_option("--import", import_path, "re-export a crystal from JSON");

    CLI::App* cmd_tensor = app.add_subcommand("tensor-op", "apply a raising/lowering operator");
    add_common(cmd_tensor);
    cmd_tensor->add_option("--label", label, "tensor label")->required();
    cmd_tensor->add_option("--i", color, "color index (0-based)")->required();
    cmd_tensor->add_option("--op", op, "operator")->check(CLI::IsMember({"e", "f"}))->required();

    CLI::App* cmd_sig = app.add_subcommand("signature", "reduced i-signature of a label");
    add_common(cmd_sig);
    cmd_sig->add_option("--label", label, "tensor label")->required();
    cmd_sig->add_option("--i", color, "color index (0-based)")->required();

    CLI::App* cmd_dec = app.add_subcommand("decompose", "connected components of a tensor");
    add_common(cmd_dec);

    CLI::App* cmd_str = app.add_subcommand("string-param", "string parametrization of a label");
    add_common(cmd_str);
    cmd_str->add_option("--label", label, "tensor label")->required();
    cmd_str->add_option("--word", word_str, "index word 'prefix|cycle' or 'cycle'");

    CLI::App* cmd_cmp = app.add_subcommand("compare", "order comparisons");
    add_common(cmd_cmp, false);
    cmd_cmp->add_option("--mode", mode, "comparison mode")
        ->check(CLI::IsMember({"dominance", "inverse-dominance", "exponents"}))
        ->required();
    cmd_cmp->add_option("--a", a_str, "left operand")->required();
    cmd_cmp->add_option("--b", b_str, "right operand")->required();
    cmd_cmp->add_option("--word", word_str, "word for exponent mode");

    CLI::App* cmd_cond = app.add_subcommand("condense", "residue condensation of a partition");
    cmd_cond->add_option("--partition", partition, "comma-separated parts (empty for the empty partition)");
    cmd_cond->add_option("--p", p_mod, "modulus")->required();
    cmd_cond->add_option("--r", r_res, "residue")->required();
    cmd_cond->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_cond->add_option("--out", out_path, "output file");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
    add_common(cmd_verify);
    cmd_verify->add_option("--seed", seed, "seed for randomized checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (depth_flag >= 0) depth = depth_flag;

    try {
        if (cmd_crystal->parsed()) {
            CrystalGraph g;
            if (!import_path.empty()) {
                std::ifstream f(import_path);
                if (!f) fail("BadImport", "cannot open " + import_path);
                nlohmann::json j;
                f >> j;
                g = crystal_from_json(j);
            } else {
                CartanData c = load_cartan(cartan_name, matrix, symmetrizer);
                auto hws = parse_hw_list(hw, c.rank());
                if (hws.size() != 1)
                    fail("MixedCartanData", "crystal takes exactly one highest weight");
                g = generate_crystal(c, hws[0], depth);
            }
            if (format == "json")
                emit(json_text(crystal_to_json(g)), out_path, out);
            else if (format == "dot")
                emit(crystal_to_dot(g), out_path, out);
            else
                emit(crystal_text(g), out_path, out);
            return 0;
        }
        if (cmd_tensor->parsed()) {
            CartanData c = load_cartan(cartan_name, matrix, symmetrizer);
            TensorCrystal t = tensor_from_flags(c, hw, depth);
            TensorLabel l = parse_label(t, label);
            auto result = op == "e" ? tensor_e(t, l, color) : tensor_f(t, l, color);
            if (format == "json") {
                nlohmann::json j{{"schema_version", 1}, {"kind", "tensor_op"}, {"op", op},
                                 {"i", color}};
                if (result) {
                    j["result"] = *result;
                    j["rendered"] = render_label(t, *result);
                } else {
                    j["result"] = nullptr;
                }
                emit(json_text(j), out_path, out);
            } else {
                emit((result ? render_label(t, *result) : "absent") + std::string("\n"),
                     out_path, out);
            }
            return 0;
        }
        if (cmd_sig->parsed()) {
            CartanData c = load_cartan(cartan_name, matrix, symmetrizer);
            TensorCrystal t = tensor_from_flags(c, hw, depth);
            TensorLabel l = parse_label(t, label);
            ReducedSignature r = reduce_signature(i_signature(t, l, color));
            if (format == "json") {
                nlohmann::json j{{"schema_version", 1},
                                 {"kind", "signature"},
                                 {"i", color},
                                 {"text", signature_text(r)},
                                 {"h_plus", r.h_plus},
                                 {"h_minus", r.h_minus}};
                nlohmann::json crossed = nlohmann::json::array();
                for (std::size_t k = 0; k < r.crossed.size(); ++k)
                    if (r.crossed[k]) crossed.push_back(k + 1);
                j["crossed_positions"] = std::move(crossed);
                emit(json_text(j), out_path, out);
            } else {
                std::ostringstream os;
                os << signature_text(r) << "\n";
                os << "h_plus: " << r.h_plus << "\n";
                os << "h_minus: " << r.h_minus << "\n";
                os << "e_factor: "
                   << (r.rightmost_plus < 0
                           ? std::string("absent")
                           : std::to_string(r.sig.group_of[r.rightmost_plus] + 1))
                   << "\n";
                os << "f_factor: "
                   << (r.leftmost_minus < 0
                           ? std::string("absent")
                           : std::to_string(r.sig.group_of[r.leftmost_minus] + 1))
                   << "\n";
                emit(os.str(), out_path, out);
            }
            return 0;
        }
        if (cmd_dec->parsed()) {
            CartanData c = load_cartan(cartan_name, matrix, symmetrizer);
            TensorCrystal t = tensor_from_flags(c, hw, depth);
            auto comps = decompose(t);
            if (format == "json") {
                emit(json_text(decomposition_to_json(t, comps)), out_path, out);
            } else {
                std::ostringstream os;
                for (const auto& comp : comps)
                    os << "hw " << weight_str(c, comp.hw_weight) << " size " << comp.size
                       << (comp.is_cartan ? " cartan" : "") << "\n";
                emit(os.str(), out_path, out);
            }
            return 0;
        }
        if (cmd_str->parsed()) {
            CartanData c = load_cartan(cartan_name, matrix, symmetrizer);
            TensorCrystal t = tensor_from_flags(c, hw, depth);
            TensorLabel l = parse_label(t, label);
            StringWord w = parse_word(word_str, c.rank());
            StringParam sp = string_parametrization(t, l, w);
            if (format == "json") {
                nlohmann::json j{{"schema_version", 1},
                                 {"kind", "string_param"},
                                 {"exponents", sp.exponents}};
                emit(json_text(j), out_path, out);
            } else {
                std::ostringstream os;
                if (sp.exponents.empty()) {
                    os << "0";
                } else {
                    for (std::size_t k = 0; k < sp.exponents.size(); ++k)
                        os << (k ? "." : "") << sp.exponents[k];
                }
                os << "\n";
                emit(os.str(), out_path, out);
            }
            return 0;
        }
        if (cmd_cmp->parsed()) {
            CartanData c = load_cartan(cartan_name, matrix, symmetrizer);
            std::string verdict;
            if (mode == "dominance") {
                Weight wa = parse_weight(a_str, c.rank());
                Weight wb = parse_weight(b_str, c.rank());
                bool ab = dominance_leq(c, wa, wb);
                bool ba = dominance_leq(c, wb, wa);
                verdict = ab && ba ? "equal" : ab ? "less" : ba ? "greater" : "incomparable";
            } else if (mode == "inverse-dominance") {
                WeightTuple ta, tb;
                for (const auto& tok : split(a_str, ';'))
                    ta.entries.push_back(parse_weight(tok, c.rank()));
                for (const auto& tok : split(b_str, ';'))
                    tb.entries.push_back(parse_weight(tok, c.rank()));
                verdict = tuple_order_name(inverse_dominance_compare(c, ta, tb));
            } else {
                StringWord w = parse_word(word_str, c.rank());
                StringParam pa{w, parse_long_list(a_str, ',')};
                StringParam pb{w, parse_long_list(b_str, ',')};
                while (!pa.exponents.empty() && pa.exponents.back() == 0) pa.exponents.pop_back();
                while (!pb.exponents.empty() && pb.exponents.back() == 0) pb.exponents.pop_back();
                verdict = ordering_name(compare_exponent_sequences(pa, pb)) +
                          " lex:" + ordering_name(compare_exponents_lex(pa, pb));
            }
            emit(verdict + "\n", out_path, out);
            return 0;
        }
        if (cmd_cond->parsed()) {
            Partition lam = make_partition(partition.empty() ? std::vector<long>{}
                                                             : parse_long_list(partition, ','));
            CondensationProfile prof = residue_condense(lam, p_mod, r_res);
            if (format == "json") {
                emit(json_text(profile_to_json(prof)), out_path, out);
            } else {
                std::ostringstream os;
                os << "boxes:";
                for (const auto& [x, y] : prof.boxes) os << " (" << x << "," << y << ")";
                os << "\nm:";
                for (long mk : prof.m) os << " " << mk;
                os << "\nfactors:";
                bool any = false;
                for (long mk : prof.m) {
                    if (mk == 0 || mk == prof.p) continue;
                    os << " wedge^" << mk << "(K^" << prof.p << ")";
                    any = true;
                }
                if (!any) os << " (all trivial)";
                os << "\n";
                emit(os.str(), out_path, out);
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            CartanData c = load_cartan(cartan_name, matrix, symmetrizer);
            bool ok = false;
            std::ostringstream os;
            run_verify(c, hw, depth, seed, os, ok);
            emit(os.str(), out_path, out);
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error[" << e.code() << "]: " << e.message() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace kmc
