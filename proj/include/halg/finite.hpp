#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "halg/error.hpp"

namespace halg::fin {

// Finite set with distinct element labels; elements are referenced by index.
struct FiniteSet {
    std::vector<std::string> labels;

    FiniteSet() = default;
    explicit FiniteSet(std::vector<std::string> ls);
    static FiniteSet range(std::size_t n, const std::string& prefix = "e");

    std::size_t size() const { return labels.size(); }
    std::optional<std::size_t> index_of(const std::string& label) const;
};

// Total function between finite sets, by image index.
struct FiniteFunction {
    FiniteSet domain, codomain;
    std::vector<std::size_t> graph;  // graph[i] in [0, codomain.size())

    FiniteFunction() = default;
    FiniteFunction(FiniteSet dom, FiniteSet cod, std::vector<std::size_t> g);
    std::size_t operator()(std::size_t i) const { return graph[i]; }
};

struct FiniteRelation {
    FiniteSet carrier;
    std::set<std::pair<std::size_t, std::size_t>> pairs;

    FiniteRelation() = default;
    explicit FiniteRelation(FiniteSet c) : carrier(std::move(c)) {}
    void add(std::size_t a, std::size_t b);
    bool holds(std::size_t a, std::size_t b) const { return pairs.count({a, b}) > 0; }
    bool is_equivalence() const;
};

// Disjoint covering blocks over a carrier.
struct Partition {
    FiniteSet carrier;
    std::vector<std::vector<std::size_t>> blocks;  // each sorted; blocks sorted by least element
    std::vector<std::size_t> block_of;             // element -> block index

    bool same_block(std::size_t a, std::size_t b) const { return block_of[a] == block_of[b]; }
};

Partition partition_from_blocks(FiniteSet carrier, std::vector<std::vector<std::size_t>> blocks);

struct CheckResult {
    bool ok = true;
    std::string counterexample;  // human-readable witness when ok is false

    static CheckResult pass() { return {true, {}}; }
    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

// pairing: pairing[a*|B|+b] = index of f(a)(b) in P.
// Passes iff every p in P equals f(a)(b) for exactly one pair (a, b).
CheckResult check_pair_constructor(const FiniteSet& A, const FiniteSet& B, const FiniteSet& P,
                                   const std::vector<std::size_t>& pairing);

// Passes iff for all (a, b) there is a unique p with pA(p) = a, pB(p) = b.
CheckResult check_projections(const FiniteSet& A, const FiniteSet& B, const FiniteSet& P,
                              const FiniteFunction& pA, const FiniteFunction& pB);

// Projections recovered from a passing pair constructor, and vice versa.
std::pair<FiniteFunction, FiniteFunction> projections_from_pairing(
    const FiniteSet& A, const FiniteSet& B, const FiniteSet& P,
    const std::vector<std::size_t>& pairing);
std::vector<std::size_t> pairing_from_projections(const FiniteSet& A, const FiniteSet& B,
                                                  const FiniteSet& P, const FiniteFunction& pA,
                                                  const FiniteFunction& pB);

// Finest partition whose induced relation contains R (union-find closure).
Partition equivalence_closure(const FiniteRelation& R);

// q surjective and fibers of q = blocks of R's equivalence closure. When R
// is not already an equivalence relation it is closed first and flagged.
struct QuotientCheck {
    bool ok = false;
    bool pre_closed = false;  // input relation had to be closed first
    std::string counterexample;
};
QuotientCheck check_set_quotient(const FiniteSet& Q, const FiniteFunction& q,
                                 const FiniteRelation& R);

// Orbit n0, s(n0), ..., s^bound(n0): no repetition, covers all of N.
CheckResult check_natural_type(const FiniteSet& N, std::size_t n0, const FiniteFunction& s,
                               std::size_t bound);

}  // namespace halg::fin
