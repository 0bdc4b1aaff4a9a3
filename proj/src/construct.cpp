#include "homog/construct.hpp"

#include "homog/containment.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace homog {

ZeroOneMatrix random_pfree(const Pattern& p, std::size_t n, std::uint64_t seed,
                           int max_retries) {
    if (n == 0) raise(errc::invalid_size, "n must be at least 1");
    ZeroOneMatrix core = cyclic_core(p.matrix());
    if (core.empty())
        raise(errc::pattern_acyclic, "pattern reduces to nothing; it is acyclic");
    std::size_t k = core.rows(), l = core.cols();
    double prob = 0.25 * std::pow(double(n), -1.0 + 1.0 / double(k + l));

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::mt19937_64 rng((seed + std::uint64_t(attempt)) ^ 0x9f7ee11dull);
        std::uniform_real_distribution<double> dist(0, 1);
        std::vector<std::vector<int>> data(n, std::vector<int>(2 * n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < 2 * n; ++j) data[i][j] = dist(rng) < prob ? 1 : 0;
        ZeroOneMatrix a0 = ZeroOneMatrix::from_rows(data);

        auto copies = enumerate_ordered_copies(a0, core, 2 * n);
        if (copies.size() > n) continue;

        // delete the last column of every copy, then rightmost extras
        std::set<std::size_t> doomed;
        for (const auto& w : copies) doomed.insert(w.cols.v.back());
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < 2 * n && keep.size() < n; ++j)
            if (!doomed.count(j)) keep.push_back(j);
        ZeroOneMatrix a = slice(a0, IndexSet::full(n), IndexSet(keep));

        if (contains_ordered(a, core).found || contains_ordered(a, p.matrix()).found)
            continue; // cannot happen when enumeration was complete; belt and braces
        return a;
    }
    raise(errc::retries_exhausted, "no pattern-free draw within retry budget");
}

ZeroOneMatrix blowup(const ZeroOneMatrix& b, std::size_t n) {
    if (b.empty()) raise(errc::invalid_size, "base matrix must be nonempty");
    if (b.rows() != b.cols()) raise(errc::invalid_params, "base matrix must be square");
    std::size_t m = b.rows();
    if (n % m != 0)
        raise(errc::indivisible_size,
              std::to_string(n) + " not divisible by base size " + std::to_string(m));
    std::size_t cell = n / m;
    return ZeroOneMatrix::from_fn(
        n, n, [&](std::size_t i, std::size_t j) { return b(i / cell, j / cell) != 0; });
}

ZeroOneMatrix staircase(std::size_t n) {
    if (n == 0) raise(errc::invalid_size, "n must be at least 1");
    auto a = ZeroOneMatrix::from_fn(n, n, [](std::size_t i, std::size_t j) { return j >= i; });
    // family property: free of the corner pattern (1 at (i,j) forces j >= i)
    if (n <= 64 && contains_ordered(a, corner(1).matrix()).found)
        raise(errc::invalid_params, "staircase generation lost its corner-freeness");
    return a;
}

ZeroOneMatrix laminar(std::size_t n) {
    if (n < 2) raise(errc::invalid_size, "n must be at least 2");
    std::size_t base = n / 2;
    return ZeroOneMatrix::from_fn(n, n, [&](std::size_t i, std::size_t j) {
        std::size_t z = base + (i * (n - base)) / n; // zero prefix length for row i
        return j >= z;
    });
}

ZeroOneMatrix bernoulli(std::size_t rows, std::size_t cols, double p, std::uint64_t seed) {
    if (rows == 0 || cols == 0) raise(errc::invalid_size, "dimensions must be at least 1");
    if (p < 0 || p > 1) raise(errc::invalid_params, "probability must be in [0,1]");
    std::mt19937_64 rng(seed ^ 0xbe7a0011ull);
    std::uniform_real_distribution<double> dist(0, 1);
    std::vector<std::vector<int>> data(rows, std::vector<int>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) data[i][j] = dist(rng) < p ? 1 : 0;
    return ZeroOneMatrix::from_rows(data);
}

namespace {

std::vector<std::size_t> sorted_sample(std::mt19937_64& rng, std::size_t k, std::size_t n) {
    std::set<std::size_t> pick;
    while (pick.size() < k) pick.insert(rng() % n);
    return std::vector<std::size_t>(pick.begin(), pick.end());
}

} // namespace

ZeroOneMatrix planted(std::size_t n, const ZeroOneMatrix& pattern, std::uint64_t seed,
                      PlantBackground bg, double bg_density) {
    if (pattern.rows() > n || pattern.cols() > n)
        raise(errc::invalid_params, "pattern does not fit the requested size");
    std::mt19937_64 rng(seed ^ 0x91a47edull);
    ZeroOneMatrix a;
    switch (bg) {
        case PlantBackground::zeros: a = ZeroOneMatrix(n, n, 0); break;
        case PlantBackground::ones: a = ZeroOneMatrix(n, n, 1); break;
        case PlantBackground::random: a = bernoulli(n, n, bg_density, rng()); break;
    }
    auto rowpick = sorted_sample(rng, pattern.rows(), n);
    auto colpick = sorted_sample(rng, pattern.cols(), n);
    return ZeroOneMatrix::from_fn(n, n, [&](std::size_t i, std::size_t j) {
        auto ri = std::lower_bound(rowpick.begin(), rowpick.end(), i);
        auto cj = std::lower_bound(colpick.begin(), colpick.end(), j);
        if (ri != rowpick.end() && *ri == i && cj != colpick.end() && *cj == j)
            return pattern(std::size_t(ri - rowpick.begin()), std::size_t(cj - colpick.begin())) !=
                   0;
        return a(i, j) != 0;
    });
}

ZeroOneMatrix interval_matrix(std::size_t n, std::uint64_t seed) {
    if (n == 0) raise(errc::invalid_size, "n must be at least 1");
    std::mt19937_64 rng(seed ^ 0x1e7e90a1ull);
    std::vector<std::pair<std::size_t, std::size_t>> ivals(n);
    for (auto& iv : ivals) {
        std::size_t a = rng() % n, b = rng() % n;
        iv = {std::min(a, b), std::max(a, b)};
    }
    return ZeroOneMatrix::from_fn(n, n, [&](std::size_t i, std::size_t j) {
        return ivals[i].first <= j && j <= ivals[i].second;
    });
}

ZeroOneMatrix generate(const GeneratorSpec& spec) {
    if (spec.kind == "random-pfree") {
        if (!spec.pattern) raise(errc::invalid_params, "random-pfree needs a pattern");
        return random_pfree(Pattern(*spec.pattern), spec.n, spec.seed);
    }
    if (spec.kind == "blowup") {
        if (!spec.base) raise(errc::invalid_params, "blowup needs a base matrix");
        return blowup(*spec.base, spec.n);
    }
    if (spec.kind == "staircase") return staircase(spec.n);
    if (spec.kind == "laminar") return laminar(spec.n);
    if (spec.kind == "bernoulli") return bernoulli(spec.n, spec.n, spec.p, spec.seed);
    if (spec.kind == "interval") return interval_matrix(spec.n, spec.seed);
    if (spec.kind == "planted") {
        if (!spec.pattern) raise(errc::invalid_params, "planted needs a pattern");
        PlantBackground bg = PlantBackground::zeros;
        if (spec.background == "ones") bg = PlantBackground::ones;
        else if (spec.background == "random") bg = PlantBackground::random;
        else if (spec.background != "zeros")
            raise(errc::invalid_params, "unknown background '" + spec.background + "'");
        return planted(spec.n, *spec.pattern, spec.seed, bg, spec.p);
    }
    raise(errc::invalid_params, "unknown generator kind '" + spec.kind + "'");
}

} // namespace homog
