#include "halg/finite.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace halg::fin {

FiniteSet::FiniteSet(std::vector<std::string> ls) : labels(std::move(ls)) {
    std::set<std::string> seen;
    for (const auto& l : labels)
        require(seen.insert(l).second, ErrorCode::Generic, "duplicate label '" + l + "'");
}

FiniteSet FiniteSet::range(std::size_t n, const std::string& prefix) {
    std::vector<std::string> ls;
    ls.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ls.push_back(prefix + std::to_string(i));
    return FiniteSet(std::move(ls));
}

std::optional<std::size_t> FiniteSet::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    return std::nullopt;
}

FiniteFunction::FiniteFunction(FiniteSet dom, FiniteSet cod, std::vector<std::size_t> g)
    : domain(std::move(dom)), codomain(std::move(cod)), graph(std::move(g)) {
    require(graph.size() == domain.size(), ErrorCode::Dimension, "function graph is not total");
    for (auto v : graph)
        require(v < codomain.size(), ErrorCode::Dimension, "image outside the codomain");
}

void FiniteRelation::add(std::size_t a, std::size_t b) {
    require(a < carrier.size() && b < carrier.size(), ErrorCode::Dimension,
            "relation pair outside the carrier");
    pairs.insert({a, b});
}

bool FiniteRelation::is_equivalence() const {
    std::size_t n = carrier.size();
    for (std::size_t a = 0; a < n; ++a)
        if (!holds(a, a)) return false;
    for (const auto& [a, b] : pairs)
        if (!holds(b, a)) return false;
    for (const auto& [a, b] : pairs)
        for (std::size_t c = 0; c < n; ++c)
            if (holds(b, c) && !holds(a, c)) return false;
    return true;
}

Partition partition_from_blocks(FiniteSet carrier, std::vector<std::vector<std::size_t>> blocks) {
    Partition p;
    p.carrier = std::move(carrier);
    p.block_of.assign(p.carrier.size(), static_cast<std::size_t>(-1));
    for (auto& blk : blocks) {
        require(!blk.empty(), ErrorCode::Generic, "empty partition block");
        std::sort(blk.begin(), blk.end());
    }
    std::sort(blocks.begin(), blocks.end());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (auto e : blocks[b]) {
            require(e < p.carrier.size(), ErrorCode::Dimension, "block element outside carrier");
            require(p.block_of[e] == static_cast<std::size_t>(-1), ErrorCode::Generic,
                    "blocks are not disjoint");
            p.block_of[e] = b;
        }
    }
    for (auto b : p.block_of)
        require(b != static_cast<std::size_t>(-1), ErrorCode::Generic, "blocks do not cover");
    p.blocks = std::move(blocks);
    return p;
}

CheckResult check_pair_constructor(const FiniteSet& A, const FiniteSet& B, const FiniteSet& P,
                                   const std::vector<std::size_t>& pairing) {
    require(pairing.size() == A.size() * B.size(), ErrorCode::Dimension,
            "pairing table has wrong size");
    std::vector<std::size_t> hits(P.size(), 0);
    for (std::size_t a = 0; a < A.size(); ++a)
        for (std::size_t b = 0; b < B.size(); ++b) {
            std::size_t p = pairing[a * B.size() + b];
            require(p < P.size(), ErrorCode::Dimension, "pairing image outside P");
            ++hits[p];
        }
    for (std::size_t p = 0; p < P.size(); ++p) {
        if (hits[p] == 0)
            return CheckResult::fail("element '" + P.labels[p] + "' is not constructed by any pair");
        if (hits[p] > 1)
            return CheckResult::fail("element '" + P.labels[p] + "' is constructed by " +
                                     std::to_string(hits[p]) + " pairs");
    }
    return CheckResult::pass();
}

CheckResult check_projections(const FiniteSet& A, const FiniteSet& B, const FiniteSet& P,
                              const FiniteFunction& pA, const FiniteFunction& pB) {
    require(pA.graph.size() == P.size() && pB.graph.size() == P.size(), ErrorCode::Dimension,
            "projections must be defined on P");
    for (std::size_t a = 0; a < A.size(); ++a)
        for (std::size_t b = 0; b < B.size(); ++b) {
            std::size_t count = 0;
            for (std::size_t p = 0; p < P.size(); ++p)
                if (pA(p) == a && pB(p) == b) ++count;
            if (count != 1) {
                std::ostringstream os;
                os << "(" << A.labels[a] << ", " << B.labels[b] << ") has " << count
                   << " preimages under the projections";
                return CheckResult::fail(os.str());
            }
        }
    return CheckResult::pass();
}

std::pair<FiniteFunction, FiniteFunction> projections_from_pairing(
    const FiniteSet& A, const FiniteSet& B, const FiniteSet& P,
    const std::vector<std::size_t>& pairing) {
    auto chk = check_pair_constructor(A, B, P, pairing);
    require(chk.ok, ErrorCode::Generic, "pairing is not free: " + chk.counterexample);
    std::vector<std::size_t> ga(P.size()), gb(P.size());
    for (std::size_t a = 0; a < A.size(); ++a)
        for (std::size_t b = 0; b < B.size(); ++b) {
            std::size_t p = pairing[a * B.size() + b];
            ga[p] = a;
            gb[p] = b;
        }
    return {FiniteFunction(P, A, std::move(ga)), FiniteFunction(P, B, std::move(gb))};
}

std::vector<std::size_t> pairing_from_projections(const FiniteSet& A, const FiniteSet& B,
                                                  const FiniteSet& P, const FiniteFunction& pA,
                                                  const FiniteFunction& pB) {
    auto chk = check_projections(A, B, P, pA, pB);
    require(chk.ok, ErrorCode::Generic, "projections are not free: " + chk.counterexample);
    std::vector<std::size_t> pairing(A.size() * B.size());
    for (std::size_t p = 0; p < P.size(); ++p) pairing[pA(p) * B.size() + pB(p)] = p;
    return pairing;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);  // smallest index leads, keeps output canonical
        parent[b] = a;
        return true;
    }
};

}  // namespace

Partition equivalence_closure(const FiniteRelation& R) {
    std::size_t n = R.carrier.size();
    UnionFind uf(n);
    for (const auto& [a, b] : R.pairs) uf.unite(a, b);
    std::vector<std::vector<std::size_t>> blocks(n);
    for (std::size_t i = 0; i < n; ++i) blocks[uf.find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> nonempty;
    for (auto& b : blocks)
        if (!b.empty()) nonempty.push_back(std::move(b));
    return partition_from_blocks(R.carrier, std::move(nonempty));
}

QuotientCheck check_set_quotient(const FiniteSet& Q, const FiniteFunction& q,
                                 const FiniteRelation& R) {
    QuotientCheck out;
    require(q.graph.size() == R.carrier.size(), ErrorCode::Dimension,
            "quotient map must be defined on the carrier of R");
    out.pre_closed = !R.is_equivalence();
    Partition part = equivalence_closure(R);

    std::vector<bool> hit(Q.size(), false);
    for (auto v : q.graph) hit[v] = true;
    for (std::size_t p = 0; p < Q.size(); ++p) {
        if (!hit[p]) {
            out.counterexample = "'" + Q.labels[p] + "' has no preimage (q not surjective)";
            return out;
        }
    }
    std::size_t n = R.carrier.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            bool rel = part.same_block(a, b);
            bool eq = q(a) == q(b);
            if (rel != eq) {
                out.counterexample = "q(" + R.carrier.labels[a] + ") = q(" + R.carrier.labels[b] +
                                     ") is " + (eq ? "true" : "false") + " but the relation is " +
                                     (rel ? "true" : "false");
                return out;
            }
        }
    out.ok = true;
    return out;
}

CheckResult check_natural_type(const FiniteSet& N, std::size_t n0, const FiniteFunction& s,
                               std::size_t bound) {
    require(bound >= 1, ErrorCode::Generic, "orbit bound must be at least 1");
    require(n0 < N.size(), ErrorCode::Dimension, "base point outside N");
    require(s.graph.size() == N.size(), ErrorCode::Dimension, "successor must be defined on N");

    std::vector<bool> seen(N.size(), false);
    std::size_t cur = n0;
    std::size_t steps = 0;
    while (true) {
        if (seen[cur])
            return CheckResult::fail("orbit repeats at '" + N.labels[cur] + "' after " +
                                     std::to_string(steps) + " steps");
        seen[cur] = true;
        if (steps == bound) break;
        cur = s(cur);
        ++steps;
    }
    for (std::size_t i = 0; i < N.size(); ++i) {
        if (!seen[i])
            return CheckResult::fail("element '" + N.labels[i] +
                                     "' is not in the orbit of the base point within the bound");
    }
    return CheckResult::pass();
}

}  // namespace halg::fin
