#include "subthresh/embedding.hpp"

#include <algorithm>
#include <array>

namespace subthresh {

EmbeddingPlan::EmbeddingPlan(const Graph& pattern) {
    const int n = pattern.order();
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    Row placed = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        int best_links = -1;
        int best_degree = -1;
        for (int v = 0; v < n; ++v) {
            if ((placed >> v) & 1U) continue;
            const int links = std::popcount(pattern.neighbors(v) & placed);
            const int degree = pattern.degree(v);
            if (links > best_links || (links == best_links && degree > best_degree)) {
                best = v;
                best_links = links;
                best_degree = degree;
            }
        }
        Step s;
        s.vertex = best;
        s.degree = best_degree;
        for (Row nb = pattern.neighbors(best) & placed; nb; nb &= nb - 1) {
            s.placed_neighbours.push_back(position[static_cast<std::size_t>(std::countr_zero(nb))]);
        }
        position[static_cast<std::size_t>(best)] = step;
        placed |= bit(best);
        max_degree_ = std::max(max_degree_, best_degree);
        steps_.push_back(std::move(s));
    }
}

template <bool StopAtFirst>
std::uint64_t EmbeddingPlan::search(const Graph& host) const {
    const int depth_total = static_cast<int>(steps_.size());
    if (depth_total == 0) return 1;
    if (depth_total > host.order()) return 0;

    // host vertices of degree >= d, for each d up to the pattern's max degree
    std::array<Row, kMaxVertices + 1> min_degree{};
    for (int d = 0; d <= max_degree_; ++d) min_degree[static_cast<std::size_t>(d)] = 0;
    for (int v = 0; v < host.order(); ++v) {
        const int dv = std::min(host.degree(v), max_degree_);
        for (int d = 0; d <= dv; ++d) min_degree[static_cast<std::size_t>(d)] |= bit(v);
    }

    std::array<int, kMaxVertices> image{};
    std::array<Row, kMaxVertices> candidates{};
    Row used = 0;
    std::uint64_t found = 0;

    auto candidates_for = [&](int depth) {
        const Step& s = steps_[static_cast<std::size_t>(depth)];
        Row c = min_degree[static_cast<std::size_t>(s.degree)] & ~used;
        for (int p : s.placed_neighbours) c &= host.neighbors(image[static_cast<std::size_t>(p)]);
        return c;
    };

    int depth = 0;
    candidates[0] = candidates_for(0);
    for (;;) {
        Row& c = candidates[static_cast<std::size_t>(depth)];
        if (!c) {
            if (depth == 0) break;
            --depth;
            used &= ~bit(image[static_cast<std::size_t>(depth)]);
            continue;
        }
        const int v = std::countr_zero(c);
        c &= c - 1;
        if (depth + 1 == depth_total) {
            ++found;
            if constexpr (StopAtFirst) return found;
            continue;
        }
        image[static_cast<std::size_t>(depth)] = v;
        used |= bit(v);
        ++depth;
        candidates[static_cast<std::size_t>(depth)] = candidates_for(depth);
    }
    return found;
}

std::uint64_t EmbeddingPlan::count(const Graph& host) const { return search<false>(host); }

bool EmbeddingPlan::exists(const Graph& host) const { return search<true>(host) > 0; }

std::uint64_t count_embeddings(const Graph& pattern, const Graph& host) {
    return EmbeddingPlan(pattern).count(host);
}

} // namespace subthresh
