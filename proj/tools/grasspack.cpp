// grasspack: build, verify and export the Grassmannian packings produced by
// the recursive construction and the associated Clifford-group orbits.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
// I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "grasspack/clifford.hpp"
#include "grasspack/construction.hpp"
#include "grasspack/export_io.hpp"
#include "grasspack/families.hpp"

using namespace grasspack;

namespace {

int env_max_level() {
    const char* v = std::getenv("GRASSPACK_MAX_LEVEL");
    if (!v) return 5;
    int parsed = std::atoi(v);
    return parsed > 0 ? parsed : 5;
}

// Default level caps; --stretch lifts them to the environment cap.
int default_cap(const std::string& family) {
    if (family == "lines") return 4;
    if (family == "planes2") return 3;
    if (family == "quarter") return 4;  // ambient dimension 16
    return 5;                           // main
}

void enforce_level(const std::string& what, int level, int cap, bool stretch) {
    const int env_cap = env_max_level();
    if (what == "quarter" && level < 2)
        throw CLI::ValidationError("quarter: level must be >= 2 (ambient dimension >= 4)");
    if (level > env_cap)
        throw CLI::ValidationError(what + ": level " + std::to_string(level) +
                                   " exceeds GRASSPACK_MAX_LEVEL = " + std::to_string(env_cap));
    if (!stretch && level > cap)
        throw CLI::ValidationError(what + ": level " + std::to_string(level) +
                                   " is a stretch run (default cap " + std::to_string(cap) +
                                   "); pass --stretch to confirm");
}

std::optional<OrbitFamily> parse_family(const std::string& name) {
    if (name == "lines") return OrbitFamily::lines;
    if (name == "planes2") return OrbitFamily::planes_2;
    if (name == "quarter") return OrbitFamily::quarter;
    return std::nullopt;  // "main"
}

Packing build_packing(const std::string& family, int level, std::uint64_t limit) {
    auto fam = parse_family(family);
    if (!fam) return build_family(level).packing;
    return realize(*fam, level, limit);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << text;
    if (!os) throw std::runtime_error("write failed: " + path);
}

nlohmann::json report_to_json(const VerificationReport& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks())
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"subject", rep.subject()},
            {"all_passed", rep.all_passed()},
            {"checks", std::move(checks)},
            {"data", rep.data()}};
}

Subspace parse_seed(const std::string& spec, int m) {
    if (spec.rfind("coords:", 0) == 0) {
        int k = std::atoi(spec.c_str() + 7);
        if (k < 1 || k >= m)
            throw CLI::ValidationError("seed coords:k needs 1 <= k < " + std::to_string(m));
        return Subspace(ScaledIntMatrix::identity(k).hcat(ScaledIntMatrix(k, m - k, 0)));
    }
    // Inline generator matrix as a JSON array of integer rows.
    auto rows = nlohmann::json::parse(spec);
    std::vector<BigInt> entries;
    int cols = -1;
    for (const auto& row : rows) {
        if (cols < 0) cols = static_cast<int>(row.size());
        for (const auto& e : row) entries.emplace_back(e.get<long long>());
    }
    if (cols != m)
        throw CLI::ValidationError("seed generator must have " + std::to_string(m) + " columns");
    return Subspace(
        ScaledIntMatrix(static_cast<int>(rows.size()), cols, std::move(entries), 0));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal Grassmannian packings: construction, verification, orbits, export"};
    app.require_subcommand(1);

    std::string family = "main";
    int level = 2;
    int threads = 0;
    std::uint64_t limit = 0;
    std::string out_path;
    std::string format = "json";
    bool stretch = false;
    bool exhaustive = false, transitive = false;
    std::string seed_spec = "coords:1";

    auto add_common = [&](CLI::App* cmd, bool with_family) {
        cmd->add_option("--i", level, "construction level; the ambient dimension is 2^i")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--threads", threads, "thread count for pairwise sweeps (0 = default)");
        cmd->add_flag("--stretch", stretch, "allow levels beyond the per-family default cap");
        if (with_family)
            cmd->add_option("--family", family, "main, lines, planes2 or quarter")
                ->check(CLI::IsMember({"main", "lines", "planes2", "quarter"}));
    };

    auto* generate = app.add_subcommand("generate", "build a packing and export it");
    add_common(generate, true);
    generate->add_option("--out", out_path, "output path (default stdout)");
    generate->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    generate->add_option("--limit", limit, "orbit size limit (0 = automatic)");

    auto* verify = app.add_subcommand("verify", "run the verification suite for a family");
    add_common(verify, true);
    verify->add_option("--out", out_path, "write the JSON report here as well");
    verify->add_flag("--exhaustive", exhaustive, "force the all-pairs exact sweep");
    verify->add_flag("--transitive", transitive,
                     "verify distances from one representative, justified by the orbit certificate");
    verify->add_option("--limit", limit, "orbit size limit (0 = automatic)");

    auto* order = app.add_subcommand("order", "group order: closed form vs stabilizer chain");
    add_common(order, false);

    auto* orbit = app.add_subcommand("orbit", "enumerate the orbit of a seed subspace");
    add_common(orbit, false);
    orbit->add_option("--seed", seed_spec,
                      "coords:k (span of the first k coordinates) or a JSON row matrix");
    orbit->add_option("--out", out_path, "output path (default stdout)");
    orbit->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    orbit->add_option("--limit", limit, "orbit size limit (0 = automatic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(generate)) {
            enforce_level(family, level, default_cap(family), stretch);
            Packing packing = build_packing(family, level, limit);
            if (format == "json") {
                write_text(out_path, packing_to_json(packing, family, level, threads).dump(2) + "\n");
            } else {
                std::ostringstream os;
                packing_to_csv(os, packing);
                write_text(out_path, os.str());
            }
            return 0;
        }

        if (app.got_subcommand(verify)) {
            if (exhaustive && transitive)
                throw CLI::ValidationError("--exhaustive and --transitive are exclusive");
            enforce_level(family, level, default_cap(family), stretch);
            VerificationReport rep = [&] {
                auto fam = parse_family(family);
                if (!fam) {
                    SweepMode mode = SweepMode::automatic;
                    if (exhaustive) mode = SweepMode::exhaustive;
                    if (transitive) mode = SweepMode::transitive;
                    return verify_theorem(level, mode, threads);
                }
                if (exhaustive || transitive)
                    throw CLI::ValidationError(
                        "--exhaustive/--transitive apply to the main family only");
                return check_family(*fam, level, threads, limit);
            }();
            std::cout << rep.summary();
            if (!out_path.empty()) write_text(out_path, report_to_json(rep).dump(2) + "\n");
            return rep.all_passed() ? 0 : 1;
        }

        if (app.got_subcommand(order)) {
            enforce_level("order", level, 4, stretch);
            BigInt half = half_group_order_formula(level);
            BigInt full = 2 * half;
            auto gens = make_generators(level);
            std::vector<BigInt> e(gens.dim());
            e[0] = 1;
            auto rep = permutation_representation(
                gens, ScaledIntMatrix(1, gens.dim(), std::move(e), 0), 1ull << 26);
            BigInt chain = group_order(rep);
            std::cout << "closed-form half-group order: " << half << "\n"
                      << "closed-form full order (x2):  " << full << "\n"
                      << "stabilizer-chain order:       " << chain << "\n";
            if (chain != full) {
                std::cout << "MISMATCH between closed form and stabilizer chain\n";
                return 1;
            }
            std::cout << "orders agree\n";
            return 0;
        }

        if (app.got_subcommand(orbit)) {
            enforce_level("orbit", level, 5, stretch);
            auto gens = make_generators(level);
            Subspace seed = parse_seed(seed_spec, gens.dim());
            std::uint64_t effective_limit = limit ? limit : 1ull << 20;
            OrbitResult result = subspace_orbit(seed, gens, effective_limit);
            std::cerr << "orbit size: " << result.members.size() << "\n";
            if (format == "json") {
                auto j = packing_to_json(result.members, "orbit(" + seed_spec + ")", level,
                                         threads);
                write_text(out_path, j.dump(2) + "\n");
            } else {
                std::ostringstream os;
                packing_to_csv(os, result.members);
                write_text(out_path, os.str());
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const grasspack::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
