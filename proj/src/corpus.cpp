#include "dimalg/corpus.hpp"

#include <algorithm>

namespace dimalg {

std::uint64_t Corpus::pick(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

std::int64_t Corpus::pick_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(pick(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool Corpus::coin() { return (eng_() & 1) != 0; }

ExtInt Corpus::value(const GenOptions& opts) {
    // Infinities get two slots each so corner configurations stay frequent.
    std::int64_t span = opts.value_max - opts.value_min + 1;
    if (opts.allow_infinities) {
        std::int64_t roll = pick_in(0, span + 3);
        if (roll >= span) return (roll - span) < 2 ? ExtInt::plus_inf() : ExtInt::minus_inf();
        return ExtInt(opts.value_min + roll);
    }
    return ExtInt(pick_in(opts.value_min, opts.value_max));
}

PrimeTriple Corpus::triple_given_q(ExtInt q, const GenOptions& opts) {
    for (;;) {
        PrimeTriple t{value(opts), value(opts), value(opts)};
        PrimePattern probe;
        probe.q = q;
        probe.def = t;
        if (check_axioms(probe).empty()) return t;
    }
}

BocksteinFunction Corpus::function(const GenOptions& opts) {
    for (;;) {
        ExtInt q = value(opts);
        // A valid default triple exists for every q (take the constant one),
        // so the per-slot rejection terminates.
        PrimePattern pat;
        pat.q = q;
        pat.def = triple_given_q(q, opts);
        int n_exc = static_cast<int>(pick(static_cast<std::uint64_t>(opts.max_exceptions + 1)));
        std::vector<std::int64_t> pool = opts.prime_pool;
        for (int i = 0; i < n_exc && !pool.empty(); ++i) {
            std::size_t j = static_cast<std::size_t>(pick(pool.size()));
            std::int64_t p = pool[j];
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
            pat.exc.emplace(p, triple_given_q(q, opts));
        }
        pat.normalize();
        if (check_axioms(pat).empty()) return BocksteinFunction::from_pattern(std::move(pat));
    }
}

BocksteinFunction Corpus::profile_function(const std::vector<std::int64_t>& prime_pool) {
    if (pick(8) == 0) return BocksteinFunction::zero();
    GenOptions opts;
    opts.allow_infinities = true;
    opts.value_min = 1;
    opts.value_max = 4;
    opts.max_exceptions = 2;
    opts.prime_pool = prime_pool;
    // value() may draw -inf; reject until the function is -inf-free, which
    // the profile positivity rule requires.
    for (;;) {
        BocksteinFunction f = function(opts);
        bool ok = !f.q().is_minus_inf();
        auto tri_ok = [](const PrimeTriple& t) {
            return !t.loc.is_minus_inf() && !t.mod.is_minus_inf() && !t.pru.is_minus_inf();
        };
        ok = ok && tri_ok(f.default_triple());
        for (const auto& [p, t] : f.exceptions()) ok = ok && tri_ok(t);
        if (ok) return f;
    }
}

GradedGroup Corpus::graded(std::int64_t deg_min, std::int64_t deg_max, int max_degrees,
                           const std::vector<std::int64_t>& prime_pool) {
    std::vector<BasicGroup> palette{group_z(), group_q()};
    for (std::int64_t p : prime_pool) {
        palette.push_back(group_cyclic(p, 1));
        palette.push_back(group_cyclic(p, 2));
        palette.push_back(group_prufer(p));
        palette.push_back(group_localized(p));
    }
    GradedGroup out;
    int degs = static_cast<int>(pick(static_cast<std::uint64_t>(max_degrees + 1)));
    for (int i = 0; i < degs; ++i) {
        std::int64_t d = pick_in(deg_min, deg_max);
        int n = static_cast<int>(1 + pick(3));
        std::vector<BasicGroup> gs;
        for (int j = 0; j < n; ++j)
            gs.push_back(palette[static_cast<std::size_t>(pick(palette.size()))]);
        out = direct_sum(out, single(d, FiniteSumGroup(std::move(gs))));
    }
    return out;
}

std::vector<std::int64_t> Corpus::primes_subset(const std::vector<std::int64_t>& pool,
                                                int max_count) {
    std::vector<std::int64_t> from = pool;
    std::vector<std::int64_t> out;
    int n = static_cast<int>(1 + pick(static_cast<std::uint64_t>(max_count)));
    for (int i = 0; i < n && !from.empty(); ++i) {
        std::size_t j = static_cast<std::size_t>(pick(from.size()));
        out.push_back(from[j]);
        from.erase(from.begin() + static_cast<std::ptrdiff_t>(j));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FiniteSumGroup> universe_groups() {
    std::vector<FiniteSumGroup> u{FiniteSumGroup{group_z()}, FiniteSumGroup{group_q()}};
    for (std::int64_t p : {2, 3, 5}) {
        u.push_back(FiniteSumGroup{group_cyclic(p, 1)});
        u.push_back(FiniteSumGroup{group_cyclic(p, 2)});
        u.push_back(FiniteSumGroup{group_cyclic(p, 3)});
        u.push_back(FiniteSumGroup{group_prufer(p)});
        u.push_back(FiniteSumGroup{group_localized(p)});
    }
    return u;
}

std::vector<FiniteSumGroup> universe_groups_with_pairs() {
    std::vector<FiniteSumGroup> u = universe_groups();
    std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) u.push_back(sum(u[i], u[j]));
    return u;
}

} // namespace dimalg
