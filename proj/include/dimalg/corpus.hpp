#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dimalg/bockstein.hpp"
#include "dimalg/graded.hpp"

namespace dimalg {

/// Parameters for random Bockstein-function generation.
struct GenOptions {
    bool allow_infinities = true;
    std::int64_t value_min = -4;
    std::int64_t value_max = 4;
    int max_exceptions = 2;
    std::vector<std::int64_t> prime_pool = {2, 3, 5, 7};
};

/// Deterministic seeded generator. All draws go through the raw engine so a
/// seed fully determines the corpus.
class Corpus {
public:
    explicit Corpus(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, n).
    std::uint64_t pick(std::uint64_t n);
    std::int64_t pick_in(std::int64_t lo, std::int64_t hi);
    bool coin();

    ExtInt value(const GenOptions& opts);

    /// Random valid function: q plus default triple plus up to
    /// opts.max_exceptions exceptional primes from the pool, every slot
    /// satisfying the six axioms (rejection sampling per slot).
    BocksteinFunction function(const GenOptions& opts);

    /// Random compactum profile data: with small probability the zero
    /// function, otherwise a valid function with values in {1..4, +inf}.
    BocksteinFunction profile_function(const std::vector<std::int64_t>& prime_pool = {2, 3, 5});

    /// Random graded group: up to max_degrees supported degrees in
    /// [deg_min, deg_max], one to three basic summands each, drawn from
    /// Z, Q and the four families at the pool primes. May be zero.
    GradedGroup graded(std::int64_t deg_min = -4, std::int64_t deg_max = 4,
                       int max_degrees = 4,
                       const std::vector<std::int64_t>& prime_pool = {2, 3, 5});

    /// Random subset of the pool with 1..max_count elements.
    std::vector<std::int64_t> primes_subset(const std::vector<std::int64_t>& pool,
                                            int max_count);

private:
    PrimeTriple triple_given_q(ExtInt q, const GenOptions& opts);
    std::mt19937_64 eng_;
};

/// The fixed test universe: Z, Q and the four families with cyclic exponents
/// up to three over primes {2, 3, 5}.
std::vector<FiniteSumGroup> universe_groups();

/// universe_groups() plus all pairwise sums.
std::vector<FiniteSumGroup> universe_groups_with_pairs();

} // namespace dimalg
