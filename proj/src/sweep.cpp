#include "negdef/sweep.hpp"

#include "negdef/generators.hpp"

#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

namespace negdef::sweep {

namespace {

struct Task {
    std::int64_t n;
    std::int64_t q;
    std::size_t index;
};

Entry run_one(const Options& options, const Task& task) {
    const toric::ResolutionFan fan = toric::build_fan(task.n, task.q);
    gen::Rng rng(gen::derive_seed(options.seed, static_cast<std::uint64_t>(task.n),
                                  static_cast<std::uint64_t>(task.q), task.index));
    Entry entry;
    entry.n = task.n;
    entry.q = task.q;
    entry.index = task.index;
    entry.d = gen::random_toric_divisor(fan, rng);
    entry.pairing = toric::pairing(fan, entry.d);

    const CurveSystem sys = toric::curve_matrix(fan);
    const CompletionResult completion = exceptional_completion(sys, entry.pairing, options.mode);
    entry.e = toric::ToricDivisor::from_exceptional(fan, completion.e);

    const auto window = toric::Window::square(
        toric::default_window_radius(fan, entry.d, entry.e, options.tmax));
    entry.with_e = toric::verify_nakayama(fan, entry.d, entry.e,
                                          toric::t_grid(entry.d, entry.e, options.tmax), window);

    bool needs_e = false;
    for (const auto& p : entry.pairing) {
        needs_e = needs_e || sgn(p) > 0;
    }
    if (needs_e) {
        const toric::ToricDivisor zero = toric::ToricDivisor::zero(fan);
        const auto zero_window =
            toric::Window::square(toric::default_window_radius(fan, entry.d, zero, options.tmax));
        entry.without_e = toric::verify_nakayama(
            fan, entry.d, zero, toric::t_grid(entry.d, zero, options.tmax), zero_window);
    }
    return entry;
}

io::json verdict_summary(const toric::Verdict& v) {
    io::json full = io::to_json(v);
    full.erase("t_samples");
    full["t_count"] = v.t_samples.size();
    return full;
}

}  // namespace

Result run(const Options& options) {
    std::vector<Task> tasks;
    for (std::int64_t n = 2; n <= options.n_max; ++n) {
        for (std::int64_t q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) {
                continue;
            }
            for (std::size_t k = 0; k < options.divisors; ++k) {
                tasks.push_back({n, q, k});
            }
        }
    }

    Result result;
    result.entries.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(std::max(1U, options.jobs));
    auto worker = [&](std::size_t slot) {
        try {
            for (std::size_t i = next++; i < tasks.size(); i = next++) {
                result.entries[i] = run_one(options, tasks[i]);
            }
        } catch (...) {
            errors[slot] = std::current_exception();
            next = tasks.size();
        }
    };
    if (options.jobs <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < options.jobs; ++j) {
            pool.emplace_back(worker, j);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    for (const auto& entry : result.entries) {
        result.passed += entry.with_e.pass ? 1 : 0;
        if (entry.without_e) {
            ++result.needs_e;
            result.e_zero_failed += entry.without_e->pass ? 0 : 1;
        }
    }
    return result;
}

io::json report(const Options& options, const Result& result) {
    io::json entries = io::json::array();
    for (const auto& entry : result.entries) {
        io::json row{{"n", entry.n},
                     {"q", entry.q},
                     {"k", entry.index},
                     {"divisor", io::toric_divisor_to_json(entry.d)},
                     {"e", io::toric_divisor_to_json(entry.e)},
                     {"pairing", io::to_json(entry.pairing)},
                     {"with_e", verdict_summary(entry.with_e)},
                     {"without_e", entry.without_e ? verdict_summary(*entry.without_e) : nullptr}};
        entries.push_back(std::move(row));
    }
    return io::json{
        {"options",
         {{"n_max", options.n_max},
          {"divisors", options.divisors},
          {"seed", options.seed},
          {"tmax", options.tmax},
          {"mode", options.mode == CompletionMode::scaled ? "scaled" : "minimal"}}},
        {"summary",
         {{"instances", result.entries.size()},
          {"passed", result.passed},
          {"needs_e", result.needs_e},
          {"e_zero_failed", result.e_zero_failed},
          {"e_zero_held", result.needs_e - result.e_zero_failed}}},
        {"verdict", result.ok() ? "pass" : "fail"},
        {"entries", entries}};
}

}  // namespace negdef::sweep
