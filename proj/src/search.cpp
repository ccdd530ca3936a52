#include "fratio/search.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace fratio {

namespace {

using Part = std::vector<long>;

// Non-increasing tuples of `parts` entries in [1, maxv] summing to `sum`,
// in lexicographic order.
void gen_partitions(long sum, long parts, long maxv, Part& cur,
                    std::vector<Part>& out) {
    if (parts == 1) {
        if (sum >= 1 && sum <= maxv) {
            cur.push_back(sum);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    long hi = std::min(maxv, sum - (parts - 1));
    for (long v = hi; v >= 1; v--) {
        if (v * parts < sum) break;  // remaining parts can't reach sum
        cur.push_back(v);
        gen_partitions(sum - v, parts - 1, v, cur, out);
        cur.pop_back();
    }
}

std::vector<Part> partitions(long sum, long parts, long maxv) {
    std::vector<Part> out;
    Part cur;
    if (parts >= 1 && sum >= parts) gen_partitions(sum, parts, maxv, cur, out);
    // lexicographic ascending order of the descending-sorted tuples
    std::sort(out.begin(), out.end());
    return out;
}

// Sorted-descending multisets share no element.
bool disjoint(const Part& a, const Part& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] > b[j])
            i++;
        else
            j++;
    }
    return true;
}

long gcd_all(const Part& a, const Part& b) {
    long g = 0;
    for (long v : a) g = std::gcd(g, v);
    for (long v : b) g = std::gcd(g, v);
    return g;
}

inline long f_at(const Part& a, const Part& b, long j, long m) {
    long s = 0;
    for (long v : a) s += v * j / m;
    for (long v : b) s -= v * j / m;
    return s;
}

// Landau check over all breakpoints j/m, cheapest-to-fail points first:
// a single pass over x = 1/m for each modulus descending kills most
// non-integral candidates before the full scan.
bool integral_fast(const Part& a, const Part& b) {
    if (a[0] <= b[0]) return false;  // f(1/b[0]) would be negative
    Part all;
    all.reserve(a.size() + b.size());
    all.insert(all.end(), a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end(), std::greater<>());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (long m : all)
        if (f_at(a, b, 1, m) < 0) return false;
    for (long m : all)
        for (long j = 2; j < m; j++)
            if (f_at(a, b, j, m) < 0) return false;
    return true;
}

// Enumerate candidates in lexicographic order of (K, sum, a, b).  The
// visitor receives a running candidate-group index (one per a-tuple) used
// for deterministic sharding.
template <typename F>
void enumerate_impl(const SearchConfig& cfg, F&& visit) {
    long group = 0;
    for (long k = 1; k <= cfg.max_terms; k++) {
        for (long sum = k + 1; sum <= cfg.max_sum; sum++) {
            auto as = partitions(sum, k, cfg.max_entry);
            if (as.empty()) continue;
            auto bs = partitions(sum, k + 1, cfg.max_entry);
            if (bs.empty()) continue;
            for (const Part& a : as) {
                long g = group++;
                for (const Part& b : bs) {
                    if (!disjoint(a, b)) continue;
                    if (gcd_all(a, b) != 1) continue;
                    visit(g, a, b);
                }
            }
        }
    }
}

std::string shard_checkpoint_path(const std::string& dir, int shard) {
    return dir + "/shard-" + std::to_string(shard) + ".jsonl";
}

void save_shard(const std::string& path, const std::vector<FactorialParams>& hits) {
    std::ofstream os(path + ".tmp");
    for (const auto& p : hits) {
        nlohmann::json j{{"a", p.a}, {"b", p.b}};
        os << j.dump() << "\n";
    }
    os.close();
    std::filesystem::rename(path + ".tmp", path);
}

std::optional<std::vector<FactorialParams>> load_shard(const std::string& path) {
    std::ifstream is(path);
    if (!is) return std::nullopt;
    std::vector<FactorialParams> hits;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        hits.push_back(FactorialParams{j.at("a").get<std::vector<long>>(),
                                       j.at("b").get<std::vector<long>>()});
    }
    return hits;
}

}  // namespace

std::optional<long> Catalog::find(const FactorialParams& canonical) const {
    for (const auto& e : entries)
        if (e.params == canonical) return e.id;
    return std::nullopt;
}

void enumerate_candidates(const SearchConfig& cfg,
                          const std::function<void(const FactorialParams&)>& visit) {
    if (!cfg.valid()) throw std::invalid_argument("invalid search config");
    enumerate_impl(cfg, [&](long, const Part& a, const Part& b) {
        visit(FactorialParams{a, b});
    });
}

SearchResult run_search(const SearchConfig& cfg) {
    if (!cfg.valid()) throw std::invalid_argument("invalid search config");
    int shards = cfg.parallel_shards;
    std::vector<std::vector<FactorialParams>> hits(shards);

    auto work = [&](int shard) {
        if (!cfg.checkpoint_dir.empty()) {
            auto path = shard_checkpoint_path(cfg.checkpoint_dir, shard);
            if (auto cached = load_shard(path)) {
                hits[shard] = std::move(*cached);
                return;
            }
        }
        enumerate_impl(cfg, [&](long group, const Part& a, const Part& b) {
            if (group % shards != shard) return;
            if (integral_fast(a, b)) hits[shard].push_back(FactorialParams{a, b});
        });
        if (!cfg.checkpoint_dir.empty()) {
            std::filesystem::create_directories(cfg.checkpoint_dir);
            save_shard(shard_checkpoint_path(cfg.checkpoint_dir, shard),
                       hits[shard]);
        }
    };

    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int s = 0; s < shards; s++) pool.emplace_back(work, s);
        for (auto& t : pool) t.join();
    }

    // order-insensitive merge
    std::vector<FactorialParams> all;
    for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
    std::sort(all.begin(), all.end());

    SearchResult res;
    res.catalog.bounds = cfg;
    res.total_hits = static_cast<long>(all.size());
    for (const auto& p : all) {
        if (!is_integral(p).integral || p.L() - p.K() != 1) {
            res.unclassified++;
            continue;
        }
        if (auto fam = match_family(p)) {
            switch (fam->tag) {
                case Tag::Family1: res.family1_hits++; break;
                case Tag::Family2: res.family2_hits++; break;
                case Tag::Family3: res.family3_hits++; break;
                default: res.unclassified++; break;
            }
            continue;
        }
        long d = static_cast<long>(spectrum_of(p).degree());
        long id = static_cast<long>(res.catalog.entries.size()) + 1;
        res.catalog.entries.push_back(CatalogEntry{id, p, d});
    }
    return res;
}

std::string completeness_report(const SearchResult& r) {
    std::ostringstream os;
    const auto& c = r.catalog;
    os << "search bounds: K <= " << c.bounds.max_terms
       << ", entries <= " << c.bounds.max_entry << ", sum(a) <= "
       << c.bounds.max_sum << "\n";
    os << "integral hits: " << r.total_hits << "\n";
    os << "  family1: " << r.family1_hits << "\n";
    os << "  family2: " << r.family2_hits << "\n";
    os << "  family3: " << r.family3_hits << "\n";
    os << "  sporadic: " << c.entries.size() << "\n";
    if (r.unclassified > 0)
        os << "*** UNCLASSIFIED RESIDUE: " << r.unclassified
           << " hits failed re-verification; this indicates a bug ***\n";
    os << "sporadic entries (id, params, d):\n";
    for (const auto& e : c.entries)
        os << "  " << e.id << "  " << e.params.to_string() << "  d=" << e.degree
           << "\n";
    return os.str();
}

void write_catalog(std::ostream& os, const Catalog& c) {
    nlohmann::ordered_json header{
        {"format", "fratio-catalog"},
        {"version", 1},
        {"bounds",
         {{"max_terms", c.bounds.max_terms},
          {"max_entry", c.bounds.max_entry},
          {"max_sum", c.bounds.max_sum}}}};
    os << header.dump() << "\n";
    for (const auto& e : c.entries) {
        nlohmann::ordered_json rec{
            {"id", e.id},
            {"a", e.params.a},
            {"b", e.params.b},
            {"tag", "sporadic"},
            {"d", e.degree},
            {"bounds",
             {{"max_terms", c.bounds.max_terms},
              {"max_entry", c.bounds.max_entry},
              {"max_sum", c.bounds.max_sum}}}};
        os << rec.dump() << "\n";
    }
}

Catalog read_catalog(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty catalog file");
    auto header = nlohmann::json::parse(line);
    if (header.value("format", "") != "fratio-catalog")
        throw std::runtime_error("not a fratio catalog file");
    Catalog c;
    c.bounds.max_terms = header.at("bounds").at("max_terms").get<long>();
    c.bounds.max_entry = header.at("bounds").at("max_entry").get<long>();
    c.bounds.max_sum = header.at("bounds").at("max_sum").get<long>();
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        CatalogEntry e;
        e.id = j.at("id").get<long>();
        e.params = FactorialParams{j.at("a").get<std::vector<long>>(),
                                   j.at("b").get<std::vector<long>>()};
        e.degree = j.at("d").get<long>();
        c.entries.push_back(e);
    }
    return c;
}

}  // namespace fratio
