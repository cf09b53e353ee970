#pragma once

#include "negdef/io.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace negdef::sweep {

struct Options {
    std::int64_t n_max = 30;
    std::size_t divisors = 10;
    std::uint64_t seed = 0;
    std::int64_t tmax = 5;
    unsigned jobs = 1;
    CompletionMode mode = CompletionMode::scaled;
};

/// One (n, q, k) instance: random D on the fan of (n, q), its completion E,
/// and the two verifications.
struct Entry {
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::size_t index = 0;
    toric::ToricDivisor d;
    toric::ToricDivisor e;
    PairingVector pairing;
    toric::Verdict with_e;
    /// Present when some D.C_i > 0.
    std::optional<toric::Verdict> without_e;
};

struct Result {
    std::vector<Entry> entries;
    std::size_t passed = 0;
    std::size_t needs_e = 0;
    std::size_t e_zero_failed = 0;

    /// Every instance passes with E.
    bool ok() const { return passed == entries.size(); }
    /// E = 0 also fails on every instance where some D.C_i > 0. Positive
    /// pairing does not force this: the exceptional constraints can all stay
    /// slack, so this is reported, not required.
    bool e_zero_always_fails() const { return e_zero_failed == needs_e; }
};

/// Runs every coprime (n, q) with 2 <= n <= n_max against `divisors` seeded
/// random divisors each. Entry order is (n, q, k) regardless of `jobs`.
Result run(const Options& options);

/// Deterministic report body: no timings, stable key order.
io::json report(const Options& options, const Result& result);

}  // namespace negdef::sweep
