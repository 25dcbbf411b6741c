#include "jellyfish/swarm.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

namespace jf {

bool is_admissible(const Field& f, Element a, Element b) {
    if (a.enc == 0 || b.enc == 0) return false;
    if (a == b) return false;
    if (f.add(a, b).enc == 0) return false;  // a = -b
    return f.phi(f.mul(a, b)) == 1;
}

AdmissiblePair agm_step(const Field& f, AdmissiblePair v) {
    Element c = f.half(f.add(v.a, v.b));
    Element r = f.canonical_sqrt(f.mul(v.a, v.b));
    Element d = (f.phi(f.mul(c, r)) == 1) ? r : f.neg(r);
    return {c, d};
}

AdmissiblePair scale(const Field& f, AdmissiblePair v, Element alpha) {
    if (alpha.enc == 0) throw InvalidInputError("scale by zero");
    return {f.mul(alpha, v.a), f.mul(alpha, v.b)};
}

std::vector<AdmissiblePair> parents(const Field& f, AdmissiblePair v) {
    // A + B = 2a, AB = b^2  =>  A, B = a +- sqrt(a^2 - b^2)
    Element disc = f.sub(f.mul(v.a, v.a), f.mul(v.b, v.b));
    if (f.phi(disc) != 1) return {};
    Element r = f.canonical_sqrt(disc);
    std::vector<AdmissiblePair> out;
    for (Element s : {r, f.neg(r)}) {
        AdmissiblePair cand{f.add(v.a, s), f.sub(v.a, s)};
        if (is_admissible(f, cand) && agm_step(f, cand) == v) out.push_back(cand);
    }
    return out;
}

Orbit orbit(const Field& f, AdmissiblePair start) {
    if (!is_admissible(f, start)) throw InvalidInputError("orbit start is not admissible");
    std::vector<AdmissiblePair> seq;
    std::unordered_map<uint64_t, size_t> seen;
    auto key = [&](AdmissiblePair v) { return uint64_t(v.a.enc) * f.q() + v.b.enc; };
    AdmissiblePair v = start;
    while (true) {
        auto it = seen.find(key(v));
        if (it != seen.end()) {
            Orbit o;
            o.preperiod.assign(seq.begin(), seq.begin() + it->second);
            o.cycle.assign(seq.begin() + it->second, seq.end());
            return o;
        }
        seen.emplace(key(v), seq.size());
        seq.push_back(v);
        v = agm_step(f, v);
    }
}

// ---- dense pair indexing ----

PairIndexer::PairIndexer(const Field& f) : f_(f) {
    uint32_t q = f.q();
    half_ = (q - 3) / 2;
    count_ = uint64_t(q - 1) * half_;
    squares_.reserve((q - 1) / 2);
    nonsquares_.reserve((q - 1) / 2);
    sq_rank_.resize(q);
    ns_rank_.resize(q);
    for (uint32_t e = 1; e < q; ++e) {
        sq_rank_[e] = uint32_t(squares_.size());
        ns_rank_[e] = uint32_t(nonsquares_.size());
        if (f.phi({e}) == 1)
            squares_.push_back(e);
        else
            nonsquares_.push_back(e);
    }
}

uint64_t PairIndexer::index(AdmissiblePair v) const {
    bool sq = f_.phi(v.a) == 1;
    const auto& rank = sq ? sq_rank_ : ns_rank_;
    uint64_t rb = rank[v.b.enc];
    uint64_t ra = rank[v.a.enc];  // a belongs to the same class as its partners
    uint64_t bidx = rb - (ra < rb ? 1 : 0);
    return uint64_t(v.a.enc - 1) * half_ + bidx;
}

AdmissiblePair PairIndexer::pair(uint64_t index) const {
    uint32_t a = uint32_t(index / half_) + 1;
    uint64_t k = index % half_;
    bool sq = f_.phi({a}) == 1;
    const auto& cls = sq ? squares_ : nonsquares_;
    const auto& rank = sq ? sq_rank_ : ns_rank_;
    uint64_t ra = rank[a];
    uint32_t b = cls[k < ra ? k : k + 1];
    return {{a}, {b}};
}

// ---- swarm construction ----

namespace {

// path-halving find, union by size
struct UnionFind {
    std::vector<uint32_t> parent;
    std::vector<uint32_t> size;
    explicit UnionFind(uint32_t n) : parent(n), size(n, 1) {
        for (uint32_t i = 0; i < n; ++i) parent[i] = i;
    }
    uint32_t find(uint32_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(uint32_t i, uint32_t j) {
        i = find(i);
        j = find(j);
        if (i == j) return;
        if (size[i] < size[j]) std::swap(i, j);
        parent[j] = i;
        size[i] += size[j];
    }
};

} // namespace

Swarm build_swarm(FieldPtr field) {
    const Field& f = *field;
    uint32_t q = f.q();
    Swarm swarm;
    swarm.field = field;
    if (q == 3) return swarm;  // zero admissible pairs, d = 0

    uint64_t n64 = uint64_t(q - 1) * ((q - 3) / 2);
    if (n64 > uint64_t(std::numeric_limits<int32_t>::max()))
        throw TooLargeError("swarm with " + std::to_string(n64) + " nodes exceeds the dense index limit");
    uint32_t n = uint32_t(n64);
    swarm.node_count = n64;

    PairIndexer ix(f);
    std::vector<uint32_t> succ(n);
    for (uint32_t i = 0; i < n; ++i)
        succ[i] = uint32_t(ix.index(agm_step(f, ix.pair(i))));

    UnionFind uf(n);
    for (uint32_t i = 0; i < n; ++i) uf.unite(i, succ[i]);
    uf.size.clear();
    uf.size.shrink_to_fit();

    // mark cycle nodes: walk unvisited chains with visit stamps
    std::vector<uint8_t> color(n, 0);  // 0 new, 1 on current walk, 2 done
    std::vector<uint8_t> on_cycle(n, 0);
    {
        std::vector<uint32_t> walk_pos(n);
        std::vector<uint32_t> path;
        for (uint32_t s = 0; s < n; ++s) {
            if (color[s]) continue;
            path.clear();
            uint32_t u = s;
            while (color[u] == 0) {
                color[u] = 1;
                walk_pos[u] = uint32_t(path.size());
                path.push_back(u);
                u = succ[u];
            }
            if (color[u] == 1)
                for (size_t k = walk_pos[u]; k < path.size(); ++k) on_cycle[path[k]] = 1;
            for (uint32_t v : path) color[v] = 2;
        }
    }
    color.clear();
    color.shrink_to_fit();

    // jellyfish ids by smallest node key of the component
    constexpr uint32_t kUnset = std::numeric_limits<uint32_t>::max();
    std::vector<uint32_t> id_of_root(n, kUnset);
    uint32_t d = 0;
    for (uint32_t i = 0; i < n; ++i) {
        uint32_t r = uf.find(i);
        if (id_of_root[r] == kUnset) id_of_root[r] = d++;
    }
    swarm.jellyfish.resize(d);

    // collect each cycle starting at its smallest on-cycle key
    std::vector<uint32_t> cycle_pos(n, kUnset);
    for (uint32_t i = 0; i < n; ++i) {
        if (!on_cycle[i] || cycle_pos[i] != kUnset) continue;
        Jellyfish& jelly = swarm.jellyfish[id_of_root[uf.find(i)]];
        jelly.id = id_of_root[uf.find(i)];
        uint32_t u = i;
        do {
            cycle_pos[u] = uint32_t(jelly.cycle.size());
            jelly.cycle.push_back(ix.pair(u));
            u = succ[u];
        } while (u != i);
        jelly.tentacles.resize(jelly.cycle.size(), AdmissiblePair{{0}, {0}});
    }

    // attach tentacles aligned with their cycle targets
    for (uint32_t i = 0; i < n; ++i) {
        if (on_cycle[i]) continue;
        uint32_t u = succ[i];
        if (!on_cycle[u]) throw InternalError("tentacle of length > 1");  // Theorem-level guarantee
        Jellyfish& jelly = swarm.jellyfish[id_of_root[uf.find(i)]];
        AdmissiblePair& slot = jelly.tentacles[cycle_pos[u]];
        if (slot.a.enc != 0) throw InternalError("cycle node with two tentacles");
        slot = ix.pair(i);
    }
    for (const Jellyfish& jelly : swarm.jellyfish)
        for (const AdmissiblePair& t : jelly.tentacles)
            if (t.a.enc == 0) throw InternalError("cycle node without a tentacle");

    for (const Jellyfish& jelly : swarm.jellyfish)
        ++swarm.size_histogram[jelly.size()];
    return swarm;
}

SwarmStats swarm_stats(const Swarm& swarm) {
    SwarmStats st;
    st.node_count = swarm.node_count;
    st.d = swarm.jellyfish.size();
    st.histogram = swarm.size_histogram;
    if (!st.histogram.empty()) {
        st.min_size = st.histogram.begin()->first;
        st.max_size = st.histogram.rbegin()->first;
    }
    uint64_t qm1 = swarm.field->q() - 1;
    for (auto [size, count] : st.histogram)
        if ((size * count) % qm1 != 0) st.divisibility_ok = false;
    return st;
}

} // namespace jf
