#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "jellyfish/field.hpp"

namespace jf {

// A node of the swarm: a, b nonzero, a != +-b, phi(ab) = +1.
struct AdmissiblePair {
    Element a, b;
    friend constexpr auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;
};

bool is_admissible(const Field& f, Element a, Element b);
inline bool is_admissible(const Field& f, AdmissiblePair v) { return is_admissible(f, v.a, v.b); }

// One AGM step: (a, b) -> ((a+b)/2, d) where d is the square root of ab
// with phi(((a+b)/2) * d) = +1. Output of an admissible pair is admissible.
AdmissiblePair agm_step(const Field& f, AdmissiblePair v);

// (a, b) -> (alpha a, alpha b); an automorphism of the swarm for alpha != 0.
AdmissiblePair scale(const Field& f, AdmissiblePair v, Element alpha);

// All admissible (A, B) with agm_step((A, B)) = v. Either empty or the two
// orderings of the root pair of X^2 - 2aX + b^2 (exists iff phi(a^2-b^2) = +1).
std::vector<AdmissiblePair> parents(const Field& f, AdmissiblePair v);

struct Orbit {
    std::vector<AdmissiblePair> preperiod;  // before the first repeated pair
    std::vector<AdmissiblePair> cycle;      // in first-visit order
};
Orbit orbit(const Field& f, AdmissiblePair start);

// Invariant factors of E(F_q) = Z/n1 x Z/n2 with n1 | n2, plus the 2-parts
// and the trace of Frobenius. Filled by legendre_curves for p >= 7.
struct GroupStructure {
    uint64_t order = 0;
    uint32_t n1 = 1, n2 = 1;
    uint32_t sylow1 = 1, sylow2 = 1;  // 2-parts of (n1, n2)
    int64_t trace = 0;
    friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

// A weakly connected component: a cycle ("bell head") plus one length-1
// tentacle per cycle node. tentacles[i] steps onto cycle[i].
struct Jellyfish {
    uint32_t id = 0;
    std::vector<AdmissiblePair> cycle;      // successor order, starting at the smallest node key
    std::vector<AdmissiblePair> tentacles;  // in-degree-0 nodes, aligned with cycle targets
    std::optional<int64_t> trace;           // a_q(i), filled by annotate_swarm
    std::optional<GroupStructure> group;
    uint64_t size() const { return cycle.size() + tentacles.size(); }
};

struct Swarm {
    FieldPtr field;
    std::vector<Jellyfish> jellyfish;          // ordered by smallest node key per component
    uint64_t node_count = 0;                   // (q-1)(q-3)/2
    std::map<uint64_t, uint64_t> size_histogram;  // n -> N_n
    uint32_t d() const { return uint32_t(jellyfish.size()); }
    bool annotated() const { return !jellyfish.empty() && jellyfish.front().trace.has_value(); }
};

// Enumerates all admissible pairs, partitions them into jellyfish, and fills
// the histogram. q = 3 yields the empty swarm. Throws TooLargeError when the
// node table does not fit the dense 32-bit index.
Swarm build_swarm(FieldPtr field);

struct SwarmStats {
    uint64_t node_count = 0;
    uint64_t d = 0;
    std::map<uint64_t, uint64_t> histogram;
    uint64_t min_size = 0, max_size = 0;
    bool divisibility_ok = true;  // (q-1) | n * N_n for every n
};
SwarmStats swarm_stats(const Swarm& swarm);

// Dense node indexing used by build_swarm and the exporters: pairs are ranked
// by key enc(a)*q + enc(b) over admissible pairs; each a has exactly (q-3)/2
// partners b (the nonzero values with phi(ab) = +1, minus b = a).
class PairIndexer {
public:
    explicit PairIndexer(const Field& f);
    uint64_t node_count() const { return count_; }
    uint64_t index(AdmissiblePair v) const;
    AdmissiblePair pair(uint64_t index) const;

private:
    const Field& f_;
    uint64_t half_ = 0;  // (q-3)/2
    uint64_t count_ = 0;
    std::vector<uint32_t> squares_, nonsquares_;      // ascending encodings
    std::vector<uint32_t> sq_rank_, ns_rank_;         // #elements of the class below enc
};

} // namespace jf
