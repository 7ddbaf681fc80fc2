// Command-line front end: decide EF1 / EFX0 orientability of chore graphs,
// verify orientations, run the brute-force oracle, generate instances and
// benchmark the solvers.
//
// Exit codes: 0 orientable or criterion satisfied, 1 not orientable or not
// satisfied, 2 input or usage error, 3 internal invariant breach.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chorient/ef1.hpp"
#include "chorient/efx.hpp"
#include "chorient/fairness.hpp"
#include "chorient/generators.hpp"
#include "chorient/io.hpp"

namespace {

using namespace chorient;
using nlohmann::json;

constexpr int kOrientable = 0;
constexpr int kNotOrientable = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

Criterion parse_criterion(const std::string& name) {
    return name == "ef1" ? Criterion::Ef1 : Criterion::Efx0;
}

const char* criterion_name(Criterion criterion) {
    return criterion == Criterion::Ef1 ? "ef1" : "efx0";
}

json verdict_json(const ChoreInstance& instance, Criterion criterion,
                  const std::optional<Orientation>& result, std::int64_t micros) {
    json verdict = {
        {"criterion", criterion_name(criterion)},
        {"orientable", result.has_value()},
        {"stats",
         {{"vertices", instance.vertex_count()},
          {"edges", instance.edge_count()},
          {"negative_components", negative_components(instance).components.size()},
          {"solve_micros", micros}}},
    };
    if (result) verdict["orientation"] = orientation_to_json(*result);
    return verdict;
}

int emit_verdict(const ChoreInstance& instance, Criterion criterion,
                 const std::optional<Orientation>& result, std::int64_t micros,
                 const std::string& out_path) {
    if (result && !check(instance, allocation_from_orientation(instance, *result), criterion)) {
        std::cerr << "internal error: produced orientation fails its own checker\n";
        return kInternalError;
    }
    if (result && !out_path.empty()) save_orientation(out_path, *result);
    std::cout << verdict_json(instance, criterion, result, micros).dump(2) << '\n';
    return result ? kOrientable : kNotOrientable;
}

int run_solve(const std::string& instance_path, const std::string& criterion_name,
              const std::string& out_path) {
    const ChoreInstance instance = load_instance(instance_path);
    if (instance.allow_multi()) {
        std::cerr << "error: the polynomial solvers need a simple instance; "
                     "run the oracle command for multigraphs\n";
        return kInputError;
    }
    const Criterion criterion = parse_criterion(criterion_name);
    const auto start = std::chrono::steady_clock::now();
    const auto result = criterion == Criterion::Ef1 ? solve_ef1(instance) : solve_efx0(instance);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return emit_verdict(instance, criterion, result, micros, out_path);
}

int run_oracle(const std::string& instance_path, const std::string& criterion_name,
               const std::string& out_path) {
    const ChoreInstance instance = load_instance(instance_path);
    int non_loop = 0;
    for (const Edge& e : instance.edges())
        if (!e.is_loop()) ++non_loop;
    if (non_loop > kEnumerationEdgeLimit) {
        std::cerr << "error: " << non_loop << " non-loop edges exceed the oracle limit of "
                  << kEnumerationEdgeLimit << '\n';
        return kInputError;
    }
    const Criterion criterion = parse_criterion(criterion_name);
    const auto start = std::chrono::steady_clock::now();
    const auto result = enumerate_orientations(instance, criterion);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return emit_verdict(instance, criterion, result, micros, out_path);
}

int run_check(const std::string& instance_path, const std::string& orientation_path,
              const std::string& criterion_name) {
    const ChoreInstance instance = load_instance(instance_path);
    const Orientation orientation = load_orientation(orientation_path, instance);
    const Criterion criterion = parse_criterion(criterion_name);
    const bool satisfied =
        check(instance, allocation_from_orientation(instance, orientation), criterion);
    std::cout << json{{"criterion", criterion_name}, {"satisfied", satisfied}}.dump(2) << '\n';
    return satisfied ? kOrientable : kNotOrientable;
}

int emit_instance(const ChoreInstance& instance, const std::string& out_path) {
    if (out_path.empty())
        std::cout << instance_to_json(instance).dump(2) << '\n';
    else
        save_instance(out_path, instance);
    return 0;
}

int run_bench(const std::vector<int>& sizes, const std::string& criterion_name,
              std::uint64_t seed) {
    const Criterion criterion = parse_criterion(criterion_name);
    for (std::size_t t = 0; t < sizes.size(); ++t) {
        RandomParams params;
        params.vertices = sizes[t];
        params.edges = 2 * sizes[t];
        params.self_loop_fraction = 0.2;
        const ChoreInstance instance = gen_random(params, seed + t);
        const auto start = std::chrono::steady_clock::now();
        const auto result =
            criterion == Criterion::Ef1 ? solve_ef1(instance) : solve_efx0(instance);
        const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        (void)result;
        std::cout << sizes[t] << '\t' << micros << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"EF1 / EFX0 orientation toolkit for graphs of chores"};
    app.require_subcommand(1);

    std::string instance_path, orientation_path, criterion = "efx0", out_path;
    std::uint64_t seed = 0;
    std::vector<std::int64_t> values;
    bool efx_variant = false;
    RandomParams random_params;
    std::vector<int> sizes;
    int rc = 0;

    const auto add_criterion = [&](CLI::App* cmd) {
        cmd->add_option("--criterion", criterion, "fairness criterion")
            ->check(CLI::IsMember({"ef1", "efx0"}))
            ->capture_default_str();
    };

    CLI::App* solve = app.add_subcommand("solve", "decide orientability, emit a witness");
    solve->add_option("instance", instance_path, "instance file")->required();
    add_criterion(solve);
    solve->add_option("--out", out_path, "write the witness orientation here");
    solve->callback([&] { rc = run_solve(instance_path, criterion, out_path); });

    CLI::App* check_cmd = app.add_subcommand("check", "verify an orientation file");
    check_cmd->add_option("instance", instance_path, "instance file")->required();
    check_cmd->add_option("orientation", orientation_path, "orientation file")->required();
    add_criterion(check_cmd);
    check_cmd->callback([&] { rc = run_check(instance_path, orientation_path, criterion); });

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force search over all orientations");
    oracle->add_option("instance", instance_path, "instance file")->required();
    add_criterion(oracle);
    oracle->add_option("--out", out_path, "write the witness orientation here");
    oracle->callback([&] { rc = run_oracle(instance_path, criterion, out_path); });

    CLI::App* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);

    CLI::App* partition2 = gen->add_subcommand(
        "partition2", "two-agent reduction from an equipartition question");
    partition2->add_option("values", values, "positive integers")->required();
    partition2->add_flag("--efx", efx_variant, "emit the efx0 variant (zero-weight loops)");
    partition2->add_option("--out", out_path, "write the instance here");
    partition2->callback([&] {
        rc = emit_instance(gen_two_vertex(PartitionInstance{values},
                                          efx_variant ? Criterion::Efx0 : Criterion::Ef1),
                           out_path);
    });

    CLI::App* partition3 = gen->add_subcommand(
        "partition3", "three-agent loop-free reduction from an equipartition question");
    partition3->add_option("values", values, "positive integers")->required();
    partition3->add_option("--out", out_path, "write the instance here");
    partition3->callback(
        [&] { rc = emit_instance(gen_three_vertex(PartitionInstance{values}), out_path); });

    CLI::App* random = gen->add_subcommand("random", "seed-deterministic random instance");
    random->add_option("--vertices", random_params.vertices)->required();
    random->add_option("--edges", random_params.edges)->required();
    random->add_option("--min-utility", random_params.min_utility)->capture_default_str();
    random->add_option("--objective-fraction", random_params.objective_fraction)
        ->capture_default_str();
    random->add_option("--self-loop-fraction", random_params.self_loop_fraction)
        ->capture_default_str();
    random->add_flag("--multigraph", random_params.multigraph, "allow parallel edges");
    random->add_option("--seed", seed)->capture_default_str();
    random->add_option("--out", out_path, "write the instance here");
    random->callback([&] { rc = emit_instance(gen_random(random_params, seed), out_path); });

    CLI::App* bench = app.add_subcommand("bench", "time the solver on random instances");
    bench->add_option("--sizes", sizes, "vertex counts (edges = 2x)");
    add_criterion(bench);
    bench->add_option("--seed", seed)->capture_default_str();
    bench->callback([&] { rc = run_bench(sizes, criterion, seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : kInputError;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kInputError;
    }
    return rc;
}
