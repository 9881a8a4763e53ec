#include "coindet/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "coindet/fixtures.hpp"
#include "coindet/massey.hpp"
#include "coindet/oracle.hpp"

namespace coindet::cli {
namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kRefused = 2;

/* Bad invocation that is not a library error (missing file, unknown name). */
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Presentation load_presentation(const std::string& source) {
    if (std::filesystem::exists(source)) {
        std::ifstream in(source, std::ios::binary);
        if (!in) throw UsageError("cannot read " + source);
        std::ostringstream text;
        text << in.rdbuf();
        return Presentation::parse(text.str());
    }
    for (const std::string& name : fixture_names())
        if (name == source) return fixture(source);
    throw UsageError("no such file or fixture: " + source);
}

bool is_scalar(const ordered_json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

/* Text mode prints the same document the JSON mode dumps, so the two
 * renderings cannot drift apart. */
void render_text(const ordered_json& v, std::ostream& out, const std::string& indent) {
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (is_scalar(value)) {
                out << indent << key << ": " << scalar_text(value) << "\n";
            } else if (value.empty()) {
                out << indent << key << ": (none)\n";
            } else {
                out << indent << key << ":\n";
                render_text(value, out, indent + "  ");
            }
        }
    } else if (v.is_array()) {
        for (const auto& element : v) {
            if (is_scalar(element)) {
                out << indent << "- " << scalar_text(element) << "\n";
            } else {
                out << indent << "-\n";
                render_text(element, out, indent + "  ");
            }
        }
    } else {
        out << indent << scalar_text(v) << "\n";
    }
}

void emit(const ordered_json& report, bool json, std::ostream& out) {
    if (json)
        out << report.dump(2) << "\n";
    else
        render_text(report, out, "");
}

/* Runs `body`, folding thrown library errors into the report; the exit code
 * is the body's return, or the category of the exception. */
template <typename Body>
int execute(const std::string& command, bool json, ordered_json inputs, std::ostream& out,
            Body&& body) {
    ordered_json report;
    report["command"] = command;
    report["status"] = "ok";
    report["inputs"] = std::move(inputs);
    int code = kOk;
    try {
        code = body(report);
    } catch (const ParseError& e) {
        report["status"] = "error";
        report["reason"] = e.code();
        report["message"] = e.what();
        code = kUsage;
    } catch (const Refusal& e) {
        report["status"] = "refused";
        report["reason"] = e.code();
        report["message"] = e.what();
        code = kRefused;
    } catch (const Error& e) {
        report["status"] = "error";
        report["reason"] = e.code();
        report["message"] = e.what();
        code = kUsage;
    } catch (const UsageError& e) {
        report["status"] = "error";
        report["reason"] = "usage";
        report["message"] = e.what();
        code = kUsage;
    }
    emit(report, json, out);
    return code;
}

ordered_json subspace_json(const Homology& h, const Gf2Subspace& s, std::size_t degree) {
    ordered_json basis = ordered_json::array();
    for (const Gf2Vector& v : s.basis())
        basis.push_back(h.class_to_string(h.class_from_coords(degree, v)));
    ordered_json doc;
    doc["dim"] = s.dim();
    doc["basis"] = std::move(basis);
    return doc;
}

ordered_json coset_json(const Homology& h, const Gf2AffineSubspace& c, std::size_t degree) {
    ordered_json doc;
    doc["representative"] = h.class_to_string(h.class_from_coords(degree, c.representative()));
    doc["direction"] = subspace_json(h, c.direction(), degree);
    return doc;
}

HomologyClass cycle_class(const Homology& h, const std::string& text) {
    return h.class_of(h.presentation().chain(text));
}

int cmd_verify(const std::string& source, bool json, std::ostream& out) {
    ordered_json inputs;
    inputs["file"] = source;
    return execute("verify", json, std::move(inputs), out, [&](ordered_json& report) {
        Presentation p = load_presentation(source);
        report["name"] = p.name();
        report["truncation"] = p.truncation();
        report["generators"] = p.generators().size();
        ValidationReport v = p.validate();
        report["valid"] = v.ok();
        ordered_json issues = ordered_json::array();
        for (const ValidationIssue& issue : v.issues) {
            ordered_json entry;
            entry["code"] = issue.code;
            entry["detail"] = issue.detail;
            issues.push_back(std::move(entry));
        }
        report["issues"] = std::move(issues);
        if (!v.ok())
            throw Refusal("invalid_presentation",
                          v.issues.front().code + ": " + v.issues.front().detail);
        return kOk;
    });
}

int cmd_homology(const std::string& source, long long max_degree, bool json, std::ostream& out) {
    ordered_json inputs;
    inputs["file"] = source;
    if (max_degree >= 0) inputs["max_degree"] = max_degree;
    return execute("homology", json, std::move(inputs), out, [&](ordered_json& report) {
        Homology h(load_presentation(source));
        std::size_t top = max_degree < 0 ? h.max_degree() : std::size_t(max_degree);
        if (!h.available(top))
            throw Refusal("degree_unavailable",
                          "homology is computed for degrees 0.." + std::to_string(h.max_degree()) +
                              "; requested " + std::to_string(top));
        report["name"] = h.presentation().name();
        report["truncation"] = h.presentation().truncation();
        report["max_degree"] = top;
        ordered_json dims = ordered_json::array();
        ordered_json classes;
        for (std::size_t n = 0; n <= top; ++n) {
            dims.push_back(h.dim(n));
            ordered_json reps = ordered_json::array();
            for (std::size_t i = 0; i < h.dim(n); ++i)
                reps.push_back(h.class_to_string(h.basis_class(n, i)));
            classes[std::to_string(n)] = std::move(reps);
        }
        report["dims"] = std::move(dims);
        report["classes"] = std::move(classes);
        return kOk;
    });
}

int cmd_triple(const std::string& source, const std::array<std::string, 3>& cycles, bool json,
               std::ostream& out) {
    ordered_json inputs;
    inputs["file"] = source;
    inputs["cycles"] = cycles;
    return execute("triple", json, std::move(inputs), out, [&](ordered_json& report) {
        Homology h(load_presentation(source));
        TripleBracket tb = triple_bracket(h, cycle_class(h, cycles[0]), cycle_class(h, cycles[1]),
                                          cycle_class(h, cycles[2]));
        report["degree"] = tb.degree;
        report["representative"] =
            h.class_to_string(h.class_from_coords(tb.degree, tb.value.representative()));
        report["indeterminacy"] = subspace_json(h, tb.value.direction(), tb.degree);
        report["contains_zero"] = tb.contains_zero();
        report["strictly_zero"] = tb.strictly_zero;
        const Presentation& p = h.presentation();
        ordered_json witnesses;
        witnesses["a01"] = p.chain_to_string(tb.witness_a01);
        witnesses["a12"] = p.chain_to_string(tb.witness_a12);
        witnesses["value"] = p.chain_to_string(tb.witness_value);
        report["witnesses"] = std::move(witnesses);
        return kOk;
    });
}

ordered_json coindet_json(const Homology& h, const CoindetResult& cd) {
    ordered_json doc;
    doc["degree"] = cd.degree;
    doc["coset"] = coset_json(h, cd.coset, cd.degree);
    doc["contains_zero"] = cd.contains_zero;
    const Presentation& p = h.presentation();
    if (cd.witness_x) {
        ordered_json witnesses;
        witnesses["x"] = p.chain_to_string(*cd.witness_x);
        witnesses["z"] = p.chain_to_string(*cd.witness_z);
        witnesses["w"] = p.chain_to_string(*cd.witness_w);
        doc["witnesses"] = std::move(witnesses);
    }
    return doc;
}

int cmd_coindet(const std::string& source, const std::array<std::string, 4>& cycles, bool json,
                std::ostream& out) {
    ordered_json inputs;
    inputs["file"] = source;
    inputs["cycles"] = cycles;
    return execute("coindet", json, std::move(inputs), out, [&](ordered_json& report) {
        Homology h(load_presentation(source));
        CoindetResult cd = coindeterminacy(h, cycle_class(h, cycles[0]), cycle_class(h, cycles[1]),
                                           cycle_class(h, cycles[2]), cycle_class(h, cycles[3]));
        ordered_json doc = coindet_json(h, cd);
        for (auto& [key, value] : doc.items()) report[key] = std::move(value);
        return kOk;
    });
}

int cmd_fourfold(const std::string& source, const std::array<std::string, 4>& cycles,
                 std::size_t enumerate_limit, bool json, std::ostream& out) {
    ordered_json inputs;
    inputs["file"] = source;
    inputs["cycles"] = cycles;
    inputs["enumerate_limit"] = enumerate_limit;
    return execute("fourfold", json, std::move(inputs), out, [&](ordered_json& report) {
        Homology h(load_presentation(source));
        std::array<HomologyClass, 4> s = {cycle_class(h, cycles[0]), cycle_class(h, cycles[1]),
                                          cycle_class(h, cycles[2]), cycle_class(h, cycles[3])};
        DefinednessResult res = is_fourfold_defined(h, s[0], s[1], s[2], s[3]);
        report["defined"] = res.defined;
        report["coindeterminacy"] = coindet_json(h, res.coindet);
        if (!res.defined) return kOk;
        FourfoldBracket fb = fourfold_bracket(h, s[0], s[1], s[2], s[3], enumerate_limit);
        ordered_json bracket;
        bracket["degree"] = fb.degree;
        bracket["kernel_dim"] = fb.kernel_dim;
        bracket["enumeration_truncated"] = fb.enumeration_truncated;
        bracket["representative"] = h.class_to_string(fb.representative);
        bracket["lower_bound_direction"] = subspace_json(h, fb.lower_bound_direction, fb.degree);
        if (!fb.enumeration_truncated) {
            bracket["value_count"] = fb.values.size();
            ordered_json values = ordered_json::array();
            for (const HomologyClass& v : fb.values) values.push_back(h.class_to_string(v));
            bracket["values"] = std::move(values);
        }
        const Presentation& p = h.presentation();
        ordered_json witnesses;
        const char* names[] = {"a01", "a12", "a23", "a02", "a13"};
        for (std::size_t i = 0; i < fb.witnesses.size(); ++i)
            witnesses[names[i]] = p.chain_to_string(fb.witnesses[i]);
        bracket["witnesses"] = std::move(witnesses);
        report["bracket"] = std::move(bracket);
        return kOk;
    });
}

std::vector<Gf2Vector> sorted_coords(const std::vector<HomologyClass>& classes) {
    std::vector<Gf2Vector> coords;
    coords.reserve(classes.size());
    for (const HomologyClass& c : classes) coords.push_back(c.coords);
    std::sort(coords.begin(), coords.end());
    return coords;
}

std::vector<Gf2Vector> affine_coords(const Gf2AffineSubspace& set) {
    std::vector<Gf2Vector> coords;
    set.for_each_element([&](const Gf2Vector& v) { coords.push_back(v); });
    std::sort(coords.begin(), coords.end());
    return coords;
}

/* One fast-path/oracle comparison; appends a mismatch entry on disagreement
 * and reports whether the pair could be compared at all. */
template <typename Fast, typename Slow, typename Same>
void compare(const char* operation, const Homology& h,
             const std::array<HomologyClass, 4>& inputs, bool fourth, Fast&& fast, Slow&& slow,
             Same&& same, ordered_json& mismatches, std::size_t& checks, std::size_t& skipped) {
    auto describe = [&] {
        ordered_json entry;
        entry["operation"] = operation;
        entry["presentation"] = h.presentation().serialize();
        ordered_json args = ordered_json::array();
        for (std::size_t i = 0; i < (fourth ? 4u : 3u); ++i)
            args.push_back(h.class_to_string(inputs[i]));
        entry["inputs"] = std::move(args);
        return entry;
    };
    std::optional<std::string> fast_refusal, slow_refusal;
    bool agree = false;
    try {
        auto fast_value = fast();
        try {
            auto slow_value = slow();
            agree = same(fast_value, slow_value);
        } catch (const Refusal& e) {
            if (e.code() == "cap_exceeded") {
                ++skipped;
                return;
            }
            slow_refusal = e.code();
        }
    } catch (const Refusal& e) {
        fast_refusal = e.code();
        try {
            slow();
            slow_refusal.reset();
        } catch (const Refusal& inner) {
            if (inner.code() == "cap_exceeded") {
                ++skipped;
                return;
            }
            slow_refusal = inner.code();
        }
        agree = slow_refusal && *slow_refusal == *fast_refusal;
    }
    ++checks;
    if (agree) return;
    ordered_json entry = describe();
    entry["fast"] = fast_refusal ? "refused: " + *fast_refusal : "value";
    entry["oracle"] = slow_refusal ? "refused: " + *slow_refusal : "value";
    mismatches.push_back(std::move(entry));
}

int cmd_random_check(std::size_t count, std::uint64_t seed, std::size_t max_gens,
                     std::size_t max_degree, bool json, std::ostream& out) {
    ordered_json inputs;
    inputs["count"] = count;
    inputs["seed"] = seed;
    inputs["max_gens"] = max_gens;
    inputs["max_degree"] = max_degree;
    return execute("random-check", json, std::move(inputs), out, [&](ordered_json& report) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 1);
        std::size_t checks = 0, skipped = 0;
        ordered_json mismatches = ordered_json::array();
        for (std::size_t i = 0; i < count; ++i) {
            RandomDgaSpec spec{seed + i, max_gens, max_degree, 0.7};
            Homology h(random_presentation(spec));
            std::vector<HomologyClass> pool = {h.zero_class(1)};
            for (std::size_t j = 0; j < std::min<std::size_t>(h.dim(1), 3); ++j)
                pool.push_back(h.basis_class(1, j));
            auto pick = [&] { return pool[rng() % pool.size()]; };
            for (int round = 0; round < 4; ++round) {
                std::array<HomologyClass, 4> s = {pick(), pick(), pick(), pick()};
                compare(
                    "triple", h, s, false,
                    [&] { return triple_bracket(h, s[0], s[1], s[2]).value; },
                    [&] { return brute_force_triple(h, s[0], s[1], s[2]); },
                    [&](const Gf2AffineSubspace& fast, const std::vector<HomologyClass>& slow) {
                        return affine_coords(fast) == sorted_coords(slow);
                    },
                    mismatches, checks, skipped);
                compare(
                    "coindet", h, s, true,
                    [&] { return coindeterminacy(h, s[0], s[1], s[2], s[3]).coset; },
                    [&] { return brute_force_coindet(h, s[0], s[1], s[2], s[3]); },
                    [&](const Gf2AffineSubspace& fast, const std::vector<HomologyClass>& slow) {
                        return affine_coords(fast) == sorted_coords(slow);
                    },
                    mismatches, checks, skipped);
                compare(
                    "fourfold_defined", h, s, true,
                    [&] { return is_fourfold_defined(h, s[0], s[1], s[2], s[3]).defined; },
                    [&] { return brute_force_fourfold_defined(h, s[0], s[1], s[2], s[3]); },
                    [&](bool fast, bool slow) { return fast == slow; }, mismatches, checks,
                    skipped);
            }
        }
        report["instances"] = count;
        report["checks"] = checks;
        report["skipped"] = skipped;
        report["mismatches"] = std::move(mismatches);
        bool passed = report["mismatches"].empty();
        report["passed"] = passed;
        return passed ? kOk : kRefused;
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Massey products and the coindeterminacy invariant for finite differential "
                 "graded algebras over F2"};
    app.name("coindet");
    app.require_subcommand(1);

    std::string file;
    std::array<std::string, 4> cycles;
    bool json = false;
    long long max_degree = -1;
    std::size_t enumerate_limit = 16;
    std::size_t count = 25, max_gens = 5, max_deg_opt = 3;
    std::uint64_t seed = 1;
    int exit_code = kOk;

    const char* file_help = "Presentation file path or built-in fixture name";
    const char* cycle_help = "Cycle as a polynomial in the generators, e.g. 'a0 + a1 * a2'";

    CLI::App* verify = app.add_subcommand("verify", "Check the differential algebra axioms");
    verify->add_option("file", file, file_help)->required();
    verify->add_flag("--json", json, "Emit JSON instead of text");
    verify->callback([&] { exit_code = cmd_verify(file, json, out); });

    CLI::App* homology = app.add_subcommand("homology", "Per-degree homology dimensions and bases");
    homology->add_option("file", file, file_help)->required();
    homology->add_option("--max-degree", max_degree, "Highest degree to report");
    homology->add_flag("--json", json, "Emit JSON instead of text");
    homology->callback([&] { exit_code = cmd_homology(file, max_degree, json, out); });

    CLI::App* triple = app.add_subcommand("triple", "Threefold Massey product of three classes");
    triple->add_option("file", file, file_help)->required();
    for (std::size_t i = 0; i < 3; ++i)
        triple->add_option("c" + std::to_string(i), cycles[i], cycle_help)->required();
    triple->add_flag("--json", json, "Emit JSON instead of text");
    triple->callback([&] {
        exit_code = cmd_triple(file, {cycles[0], cycles[1], cycles[2]}, json, out);
    });

    CLI::App* coindet =
        app.add_subcommand("coindet", "Coindeterminacy coset of four classes");
    coindet->add_option("file", file, file_help)->required();
    for (std::size_t i = 0; i < 4; ++i)
        coindet->add_option("c" + std::to_string(i), cycles[i], cycle_help)->required();
    coindet->add_flag("--json", json, "Emit JSON instead of text");
    coindet->callback([&] { exit_code = cmd_coindet(file, cycles, json, out); });

    CLI::App* fourfold =
        app.add_subcommand("fourfold", "Fourfold Massey product definedness and value set");
    fourfold->add_option("file", file, file_help)->required();
    for (std::size_t i = 0; i < 4; ++i)
        fourfold->add_option("c" + std::to_string(i), cycles[i], cycle_help)->required();
    fourfold->add_option("--enumerate-limit", enumerate_limit,
                         "Largest choice-kernel dimension enumerated exhaustively");
    fourfold->add_flag("--json", json, "Emit JSON instead of text");
    fourfold->callback([&] { exit_code = cmd_fourfold(file, cycles, enumerate_limit, json, out); });

    CLI::App* random_check =
        app.add_subcommand("random-check", "Compare the fast path against the brute-force oracle");
    random_check->add_option("--count", count, "Number of random presentations");
    random_check->add_option("--seed", seed, "Base seed; reports are deterministic per seed");
    random_check->add_option("--max-gens", max_gens, "Largest generator count");
    random_check->add_option("--max-degree", max_deg_opt, "Largest generator degree");
    random_check->add_flag("--json", json, "Emit JSON instead of text");
    random_check->callback(
        [&] { exit_code = cmd_random_check(count, seed, max_gens, max_deg_opt, json, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    return exit_code;
}

}  // namespace coindet::cli
