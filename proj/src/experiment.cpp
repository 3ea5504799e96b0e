#include "accs/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "accs/errors.hpp"
#include "accs/random_search.hpp"

namespace accs {

namespace {

std::uint64_t fnv1a64(std::string_view s, std::uint64_t h) {
    for (const unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t fnv1a64_u64(std::uint64_t v, std::uint64_t h) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xFF;
        h *= 0x100000001B3ULL;
    }
    return h;
}

constexpr std::string_view kKnownAlgorithms[] = {"accs", "pso", "random"};

std::uint64_t accs_budget(const AccsParams& params) {
    return params.pop_size + 4ULL * params.pop_size * params.max_iterations;
}

struct RunTask {
    std::string algorithm;
    std::string function;
    std::uint64_t run_index;
};

RunRecord execute(const RunTask& task, const BenchmarkFn& fn, const ExperimentConfig& config) {
    const std::uint64_t search_id = derive_stream_id(task.algorithm, task.function,
                                                     task.run_index, "search");
    const std::uint64_t noise_id = derive_stream_id(task.algorithm, task.function,
                                                    task.run_index, "noise");
    const Objective objective = make_objective(fn, config.root_seed, noise_id);
    RngStream rng(config.root_seed, search_id);
    const std::string context =
        task.algorithm + "/" + task.function + "/#" + std::to_string(task.run_index) + ": ";

    RunRecord record;
    try {
        if (task.algorithm == "accs") {
            record = optimize(objective, fn.space(), config.accs, rng);
        } else if (task.algorithm == "pso") {
            record = pso_optimize(objective, fn.space(), config.pso, rng);
        } else if (task.algorithm == "random") {
            const std::uint64_t budget =
                config.random_budget > 0 ? config.random_budget : accs_budget(config.accs);
            record = random_search(objective, fn.space(), budget, rng);
        } else {
            throw std::invalid_argument("unknown algorithm id '" + task.algorithm + "'");
        }
    } catch (const EvaluationError& e) {
        throw EvaluationError(context + e.what(), e.position());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(context + e.what());
    }
    record.algorithm = task.algorithm;
    record.function = task.function;
    record.run_index = task.run_index;
    return record;
}

} // namespace

std::uint64_t derive_stream_id(std::string_view algorithm, std::string_view function,
                               std::uint64_t run_index, std::string_view purpose) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    h = fnv1a64(algorithm, h);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(function, h);
    h = fnv1a64("\x1f", h);
    h = fnv1a64_u64(run_index, h);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(purpose, h);
    return h;
}

Objective make_objective(const BenchmarkFn& fn, std::uint64_t root_seed,
                         std::uint64_t noise_stream_id) {
    if (!fn.stochastic()) {
        return [&fn](std::span<const double> x) { return fn.evaluate(x); };
    }
    // Shared_ptr keeps the stream alive and copyable inside std::function;
    // each bound objective owns exactly one consumer of it.
    auto stream = std::make_shared<RngStream>(root_seed, noise_stream_id);
    return [&fn, stream](std::span<const double> x) { return fn.evaluate(x, *stream); };
}

std::vector<std::string> resolve_function_ids(std::span<const std::string> requested) {
    const std::vector<BenchmarkFn> catalogue = all_benchmarks();
    std::vector<std::string> ids;
    const auto push = [&ids](const std::string& id) {
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
            ids.push_back(id);
        }
    };
    for (const std::string& request : requested) {
        if (request == "all") {
            for (const BenchmarkFn& fn : catalogue) {
                push(fn.id());
            }
        } else if (request == "classical") {
            for (const BenchmarkFn& fn : catalogue) {
                if (!fn.id().starts_with("CEC")) {
                    push(fn.id());
                }
            }
        } else if (request == "cec2019") {
            for (const BenchmarkFn& fn : catalogue) {
                if (fn.id().starts_with("CEC")) {
                    push(fn.id());
                }
            }
        } else if (find_benchmark(catalogue, request) != nullptr) {
            push(request);
        } else {
            throw std::invalid_argument("unknown function id '" + request + "'");
        }
    }
    return ids;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config) {
    if (config.runs < 1) {
        throw std::invalid_argument("run_experiment: runs must be at least 1");
    }
    for (const std::string& algorithm : config.algorithms) {
        if (std::find(std::begin(kKnownAlgorithms), std::end(kKnownAlgorithms), algorithm) ==
            std::end(kKnownAlgorithms)) {
            throw std::invalid_argument("unknown algorithm id '" + algorithm + "'");
        }
    }
    const std::vector<std::string> function_ids = resolve_function_ids(config.functions);
    const std::vector<BenchmarkFn> catalogue = all_benchmarks();

    std::vector<RunTask> tasks;
    tasks.reserve(config.algorithms.size() * function_ids.size() * config.runs);
    for (const std::string& algorithm : config.algorithms) {
        for (const std::string& function : function_ids) {
            for (std::uint64_t run = 0; run < config.runs; ++run) {
                tasks.push_back({algorithm, function, run});
            }
        }
    }

    std::vector<RunRecord> records(tasks.size());
    const std::size_t workers = std::max<std::size_t>(1, config.workers);

    if (workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            const BenchmarkFn* fn = find_benchmark(catalogue, tasks[i].function);
            records[i] = execute(tasks[i], *fn, config);
        }
        return records;
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::size_t first_error_task = tasks.size();

    const auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) {
                return;
            }
            try {
                const BenchmarkFn* fn = find_benchmark(catalogue, tasks[i].function);
                records[i] = execute(tasks[i], *fn, config);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (i < first_error_task) {
                    first_error_task = i;
                    first_error = std::current_exception();
                }
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    for (std::thread& t : pool) {
        t.join();
    }
    if (first_error) {
        // execute() already attached the triple context.
        std::rethrow_exception(first_error);
    }
    return records;
}

void write_experiment_outputs(std::span<const RunRecord> records,
                              const std::filesystem::path& out_dir, TimingMode timing) {
    std::filesystem::create_directories(out_dir);
    {
        std::ofstream os(out_dir / "runs.csv", std::ios::binary);
        if (!os) {
            throw std::invalid_argument("cannot write " + (out_dir / "runs.csv").string());
        }
        write_runs_csv(records, os, timing);
    }
    {
        std::ofstream os(out_dir / "traces.csv", std::ios::binary);
        if (!os) {
            throw std::invalid_argument("cannot write " + (out_dir / "traces.csv").string());
        }
        write_traces_csv(records, os);
    }
}

} // namespace accs
