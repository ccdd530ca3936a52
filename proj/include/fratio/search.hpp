#ifndef FRATIO_SEARCH_HPP
#define FRATIO_SEARCH_HPP

#include <functional>
#include <iosfwd>
#include <optional>

#include "fratio/classify.hpp"
#include "fratio/core.hpp"

namespace fratio {

struct SearchConfig {
    long max_terms = 4;   // K bound; L = K + 1
    long max_entry = 40;  // per-entry cap
    long max_sum = 80;    // cap on sum of a
    int parallel_shards = 1;
    // when set, per-shard hit lists are checkpointed here and reloaded on
    // rerun instead of recomputed
    std::string checkpoint_dir;

    bool valid() const {
        return max_terms >= 1 && max_entry >= 1 && max_sum >= max_entry &&
               parallel_shards >= 1;
    }
};

struct CatalogEntry {
    long id;  // lexicographic ordinal among sporadics, 1-based
    FactorialParams params;
    long degree;  // hypergeometric dimension d
};

/// Immutable snapshot of the sporadic solutions found within some bounds.
class Catalog {
public:
    SearchConfig bounds;
    std::vector<CatalogEntry> entries;  // sorted by (K, a, b)

    std::optional<long> find(const FactorialParams& canonical) const;
};

struct SearchResult {
    Catalog catalog;
    long family1_hits = 0;
    long family2_hits = 0;
    long family3_hits = 0;
    long total_hits = 0;
    // hits failing re-verification; nonzero would signal a search bug
    long unclassified = 0;
};

/// Visit every canonical pair (a desc, b desc, disjoint, balanced, gcd 1)
/// with K <= max_terms, L = K+1, entries <= max_entry, sum a <= max_sum,
/// exactly once, in lexicographic order of (K, sum, a, b).
void enumerate_candidates(const SearchConfig& cfg,
                          const std::function<void(const FactorialParams&)>& visit);

/// Filter candidates by the Landau criterion (first-fail breakpoint
/// pruning), tag family hits, and collect the rest as the sporadic
/// catalog.  Output is deterministic and independent of shard count.
SearchResult run_search(const SearchConfig& cfg);

/// Human-readable summary of a finished search.
std::string completeness_report(const SearchResult& r);

/// Line-oriented catalog persistence: one JSON header line with the search
/// bounds, then one JSON record per sporadic entry, sorted by id.
void write_catalog(std::ostream& os, const Catalog& c);
Catalog read_catalog(std::istream& is);

}  // namespace fratio

#endif
