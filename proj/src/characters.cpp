#include "mv/characters.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "mv/errors.hpp"

namespace mv {

namespace {

// One Murnaghan-Nakayama evaluation: class parts are fixed up front (sorted
// largest-first), the memo is keyed by (remaining shape, next part index).
struct MNEval {
    std::vector<int> cls;
    std::map<std::pair<std::vector<int>, size_t>, Int> memo;

    Int eval(const std::vector<int>& shape, size_t idx) {
        if (shape.empty()) return Int(1);
        auto key = std::make_pair(shape, idx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int k = cls[idx];
        int l = static_cast<int>(shape.size());
        std::vector<int> beta(shape.size());
        for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] = shape[static_cast<size_t>(i)] + (l - 1 - i);
        Int total = 0;
        for (int i = 0; i < l; ++i) {
            int nb = beta[static_cast<size_t>(i)] - k;
            if (nb < 0) continue;
            bool occupied = false;
            int height = 0;
            for (int j = 0; j < l; ++j) {
                if (beta[static_cast<size_t>(j)] == nb) occupied = true;
                if (beta[static_cast<size_t>(j)] > nb && beta[static_cast<size_t>(j)] < beta[static_cast<size_t>(i)])
                    ++height;
            }
            if (occupied) continue;
            std::vector<int> nbeta = beta;
            nbeta[static_cast<size_t>(i)] = nb;
            std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
            std::vector<int> nshape;
            for (int j = 0; j < l; ++j) {
                int part = nbeta[static_cast<size_t>(j)] - (l - 1 - j);
                if (part > 0) nshape.push_back(part);
            }
            Int sub = eval(nshape, idx + 1);
            if (height % 2)
                total -= sub;
            else
                total += sub;
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

Int mn_value(const std::vector<int>& shape, const std::vector<int>& cls_sorted_desc) {
    MNEval ev;
    ev.cls = cls_sorted_desc;
    return ev.eval(shape, 0);
}

}  // namespace

Int mn_character(const Partition& nu, const Partition& mu) {
    if (nu.size() != mu.size()) throw std::invalid_argument("mn_character: |nu| != |mu|");
    std::vector<int> cls = mu.parts();  // already sorted descending
    return mn_value(nu.parts(), cls);
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), p, PartitionLess{});
    if (it == labels.end() || !(*it == p)) throw std::invalid_argument("CharacterTable: unknown label " + p.str());
    return static_cast<int>(it - labels.begin());
}

const Int& CharacterTable::value(const Partition& nu, const Partition& mu) const {
    return value(index_of(nu), index_of(mu));
}

void check_column_orthogonality(const CharacterTable& t) {
    size_t n = t.labels.size();
    std::vector<Int> z(n);
    for (size_t m = 0; m < n; ++m) z[m] = partition_stats(t.labels[m]).z;
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = a; b < n; ++b) {
            Int acc = 0;
            for (size_t v = 0; v < n; ++v) acc += t.values[v][a] * t.values[v][b];
            Int expect = (a == b) ? z[a] : Int(0);
            if (acc != expect)
                throw IdentityViolation("character table orthogonality failed at classes " + t.labels[a].str() +
                                        ", " + t.labels[b].str());
        }
    }
}

CharacterTable character_table_serial(int d) {
    if (d < 1) throw std::invalid_argument("character_table: d must be >= 1");
    CharacterTable t;
    t.d = d;
    t.labels = enumerate_partitions(d);
    size_t n = t.labels.size();
    t.values.assign(n, std::vector<Int>(n));
    for (size_t v = 0; v < n; ++v)
        for (size_t m = 0; m < n; ++m) t.values[v][m] = mn_value(t.labels[v].parts(), t.labels[m].parts());
    check_column_orthogonality(t);
    return t;
}

CharacterTable character_table(int d, Exec how) {
    if (how == Exec::serial) return character_table_serial(d);
    if (d < 1) throw std::invalid_argument("character_table: d must be >= 1");
    CharacterTable t;
    t.d = d;
    t.labels = enumerate_partitions(d);
    int n = static_cast<int>(t.labels.size());
    t.values.assign(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (int v = 0; v < n; ++v) {
        for (int m = 0; m < n; ++m)
            t.values[static_cast<size_t>(v)][static_cast<size_t>(m)] =
                mn_value(t.labels[static_cast<size_t>(v)].parts(), t.labels[static_cast<size_t>(m)].parts());
    }
    check_column_orthogonality(t);
    return t;
}

const CharacterTable& cached_character_table(int d) {
    static std::mutex mu;
    static std::map<int, CharacterTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, character_table(d)).first;
    return it->second;
}

Rat central_character(const Partition& nu, const Partition& mu) {
    if (nu.size() != mu.size()) throw std::invalid_argument("central_character: |nu| != |mu|");
    int d = nu.size();
    if (d == 0) return Rat(1);
    const CharacterTable& t = cached_character_table(d);
    Int chi = t.value(nu, mu);
    Int dim = t.dimension(t.index_of(nu));
    Int z = partition_stats(mu).z;
    Rat f(factorial(static_cast<unsigned long>(d)) * chi, z * dim);
    f.canonicalize();
    return f;
}

}  // namespace mv
