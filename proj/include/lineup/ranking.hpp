#pragma once

#include "lineup/configuration.hpp"
#include "lineup/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lineup {

/// An r-ranking: level blocks S_1..S_m taken until |S_1 u .. u S_m| >= r,
/// optionally followed by one "everything else" block.
struct Ranking {
    std::size_t r = 0;
    std::vector<std::vector<std::size_t>> blocks;

    /// Number of level blocks (the prefix reaching size r).
    std::size_t level_blocks() const;
    bool has_rest() const { return level_blocks() < blocks.size(); }

    friend bool operator==(const Ranking&, const Ranking&) = default;
};

/// Sorts every block and drops a trailing empty block. Throws
/// std::invalid_argument unless the blocks partition the points and have
/// the r-ranking shape.
Ranking validated(Ranking s, const PointConfiguration& c);

Ranking ranking_of(const Vector& y, const PointConfiguration& c, std::size_t r);
Ranking ranking_of(const IntVector& y, const PointConfiguration& c, std::size_t r);

/// Singleton blocks following l, then the rest of the points as one block.
Ranking lineup_ranking(const Lineup& l, const PointConfiguration& c);

struct Realizability {
    bool realizable = false;
    /// A functional inducing the ranking, when realizable.
    std::optional<Vector> certificate;
};

Realizability is_realizable(const Ranking& s, const PointConfiguration& c);

/// Throws std::invalid_argument if s is not realizable.
bool is_uncoarsenable(const Ranking& s, const PointConfiguration& c);

/// Same question as is_realizable, answered with the gap programs left
/// uncapped (unbounded counts as positive).
bool is_realizable_uncapped(const Ranking& s, const PointConfiguration& c);

std::string ranking_to_json(const Ranking& s, const PointConfiguration& c);
Ranking ranking_from_json(const std::string& text, const PointConfiguration& c);

}  // namespace lineup
