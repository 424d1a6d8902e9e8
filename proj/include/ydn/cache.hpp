#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ydn/nichols.hpp"

namespace ydn {

/**
 * @brief Combinatorial state of a computed truncation, keyed by the input
 * hash it was computed from.
 *
 * Holds everything the dims command reports: per-degree dimensions, the
 * chosen basis words, the multidegree tables, and the completion state.
 */
struct TruncationSnapshot {
    std::string key;
    int cutoff = 0;
    int letters = 0;
    bool complete = false;
    int top_degree = 0;
    std::vector<int> dims;
    std::vector<std::vector<int>> basis_words;
    std::vector<std::vector<std::pair<std::vector<int>, int>>> multidegree;

    bool operator==(const TruncationSnapshot& o) const = default;
};

TruncationSnapshot snapshot_of(const NicholsTruncation& B, const std::string& key);

/// Canonical text form; a stored entry deserializes and re-serializes to
/// the identical bytes.
std::string serialize_snapshot(const TruncationSnapshot& s);

/// Throws input_error on any structural defect in `text`.
TruncationSnapshot deserialize_snapshot(const std::string& text);

/**
 * @brief Directory of truncation snapshots addressed by (key, cutoff).
 *
 * Writes land in a temporary file first and are renamed into place, so a
 * concurrent reader never observes a partial entry. A corrupt or mislabeled
 * entry is evicted with a warning on stderr and treated as a miss. Raising
 * the cutoff addresses a different entry; older entries stay valid.
 */
class TruncationCache {
public:
    /// An empty directory string disables the cache entirely.
    explicit TruncationCache(std::string dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }
    std::string path_for(const std::string& key, int cutoff) const;

    std::optional<TruncationSnapshot> load(const std::string& key, int cutoff) const;
    void store(const TruncationSnapshot& s) const;

private:
    std::string dir_;
};

}  // namespace ydn
