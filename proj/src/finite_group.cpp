#include "halg/finite_group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace halg::grp {

FiniteMonoid::FiniteMonoid(fin::FiniteSet carrier, std::vector<std::size_t> table,
                           std::size_t identity)
    : carrier_(std::move(carrier)), table_(std::move(table)), identity_(identity) {
    std::size_t n = carrier_.size();
    require(table_.size() == n * n, ErrorCode::Dimension, "Cayley table has wrong size");
    require(identity_ < n, ErrorCode::Dimension, "identity index outside the carrier");
    for (auto v : table_) require(v < n, ErrorCode::Dimension, "Cayley entry outside the carrier");
    for (std::size_t a = 0; a < n; ++a) {
        require(op(identity_, a) == a && op(a, identity_) == a, ErrorCode::Generic,
                "identity fails neutrality at '" + carrier_.labels[a] + "'");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                require(op(op(a, b), c) == op(a, op(b, c)), ErrorCode::Generic,
                        "associativity fails at (" + carrier_.labels[a] + ", " +
                            carrier_.labels[b] + ", " + carrier_.labels[c] + ")");
}

bool FiniteMonoid::is_commutative() const {
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = a + 1; b < size(); ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

FiniteMonoid FiniteMonoid::cyclic_add(std::size_t n) {
    require(n >= 1, ErrorCode::Generic, "cyclic monoid needs n >= 1");
    std::vector<std::size_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    return FiniteMonoid(fin::FiniteSet::range(n, ""), std::move(table), 0);
}

FiniteGroup::FiniteGroup(fin::FiniteSet carrier, std::vector<std::size_t> table,
                         std::size_t identity)
    : FiniteMonoid(std::move(carrier), std::move(table), identity) {
    std::size_t n = size();
    inv_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (op(a, b) == identity_ && op(b, a) == identity_) {
                inv_[a] = b;
                break;
            }
        }
        require(inv_[a] < n, ErrorCode::Generic,
                "no inverse for '" + carrier_.labels[a] + "'");
    }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    require(n >= 1, ErrorCode::Generic, "cyclic group needs n >= 1");
    std::vector<std::size_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    return FiniteGroup(fin::FiniteSet::range(n, ""), std::move(table), 0);
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    require(n >= 1 && n <= 5, ErrorCode::Generic, "symmetric group supported for n <= 5");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto label = [&](const std::vector<std::size_t>& perm) {
        std::string s = "(";
        for (std::size_t i = 0; i < perm.size(); ++i) s += std::to_string(perm[i]);
        return s + ")";
    };
    std::vector<std::string> labels;
    for (const auto& perm : perms) labels.push_back(label(perm));

    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;

    std::size_t m = perms.size();
    std::vector<std::size_t> table(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            std::vector<std::size_t> comp(n);
            for (std::size_t i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
            table[a * m + b] = index[comp];
        }
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    return FiniteGroup(fin::FiniteSet(std::move(labels)), std::move(table), index[id]);
}

bool verify_monoid_hom(const FiniteMonoid& M, const FiniteMonoid& N, const MonoidHom& f) {
    if (f.images.size() != M.size()) return false;
    for (auto v : f.images)
        if (v >= N.size()) return false;
    if (f.images[M.identity()] != N.identity()) return false;
    for (std::size_t a = 0; a < M.size(); ++a)
        for (std::size_t b = 0; b < M.size(); ++b)
            if (f.images[M.op(a, b)] != N.op(f.images[a], f.images[b])) return false;
    return true;
}

std::size_t free_monoid_extend(const FiniteMonoid& M, const std::vector<std::size_t>& h,
                               const Word& w) {
    std::size_t acc = M.identity();
    for (auto letter : w.letters) {
        require(letter < h.size(), ErrorCode::Dimension, "letter without an image");
        acc = M.op(acc, h[letter]);
    }
    return acc;
}

fin::Partition congruence_closure(const FiniteMonoid& M,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::size_t n = M.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<std::pair<std::size_t, std::size_t>> work = pairs;
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        std::size_t ra = find(a), rb = find(b);
        if (ra == rb) continue;
        if (rb < ra) std::swap(ra, rb);
        parent[rb] = ra;
        // translation closure: merged classes force products to merge
        for (std::size_t z = 0; z < n; ++z) {
            work.push_back({M.op(ra, z), M.op(rb, z)});
            work.push_back({M.op(z, ra), M.op(z, rb)});
        }
    }

    std::vector<std::vector<std::size_t>> blocks(n);
    for (std::size_t i = 0; i < n; ++i) blocks[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> nonempty;
    for (auto& b : blocks)
        if (!b.empty()) nonempty.push_back(std::move(b));
    return fin::partition_from_blocks(M.carrier(), std::move(nonempty));
}

bool is_congruence(const FiniteMonoid& M, const fin::Partition& part) {
    std::size_t n = M.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t a2 = 0; a2 < n; ++a2) {
            if (!part.same_block(a, a2)) continue;
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t b2 = 0; b2 < n; ++b2) {
                    if (!part.same_block(b, b2)) continue;
                    if (!part.same_block(M.op(a, b), M.op(a2, b2))) return false;
                }
        }
    return true;
}

QuotientMonoid quotient_by_congruence(const FiniteMonoid& M, const fin::Partition& part) {
    require(is_congruence(M, part), ErrorCode::Generic,
            "partition is not a congruence; quotient table would be ill-defined");
    std::size_t k = part.blocks.size();
    std::vector<std::string> labels;
    for (const auto& blk : part.blocks) {
        std::string l = "{";
        for (std::size_t i = 0; i < blk.size(); ++i) {
            if (i) l += ",";
            l += M.carrier().labels[blk[i]];
        }
        labels.push_back(l + "}");
    }
    std::vector<std::size_t> table(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            table[a * k + b] = part.block_of[M.op(part.blocks[a][0], part.blocks[b][0])];
    QuotientMonoid out{
        FiniteMonoid(fin::FiniteSet(std::move(labels)), std::move(table),
                     part.block_of[M.identity()]),
        MonoidHom{part.block_of}};
    return out;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<std::size_t>& subset) {
    std::set<std::size_t> s(subset.begin(), subset.end());
    if (!s.count(G.identity())) return false;
    for (auto a : s) {
        if (a >= G.size()) return false;
        if (!s.count(G.inverse(a))) return false;
        for (auto b : s)
            if (!s.count(G.op(a, b))) return false;
    }
    return true;
}

bool is_normal_subgroup(const FiniteGroup& G, const std::vector<std::size_t>& subset) {
    if (!is_subgroup(G, subset)) return false;
    std::set<std::size_t> s(subset.begin(), subset.end());
    for (auto h : s)
        for (std::size_t g = 0; g < G.size(); ++g)
            if (!s.count(G.op(G.op(g, h), G.inverse(g)))) return false;
    return true;
}

std::vector<std::size_t> subgroup_generated(const FiniteGroup& G,
                                            const std::vector<std::size_t>& gens) {
    std::set<std::size_t> s{G.identity()};
    std::vector<std::size_t> work{G.identity()};
    auto push = [&](std::size_t x) {
        if (s.insert(x).second) work.push_back(x);
    };
    for (auto g : gens) {
        require(g < G.size(), ErrorCode::Dimension, "generator outside the group");
        push(g);
        push(G.inverse(g));
    }
    while (!work.empty()) {
        std::size_t x = work.back();
        work.pop_back();
        push(G.inverse(x));
        for (auto y : std::vector<std::size_t>(s.begin(), s.end())) {
            push(G.op(x, y));
            push(G.op(y, x));
        }
    }
    return {s.begin(), s.end()};
}

std::vector<std::size_t> normal_closure(const FiniteGroup& G, const std::vector<std::size_t>& S) {
    // generated by all conjugates g s g^-1
    std::vector<std::size_t> conj;
    for (auto s : S) {
        require(s < G.size(), ErrorCode::Dimension, "element outside the group");
        for (std::size_t g = 0; g < G.size(); ++g)
            conj.push_back(G.op(G.op(g, s), G.inverse(g)));
    }
    return subgroup_generated(G, conj);
}

QuotientGroup quotient_group(const FiniteGroup& G, const std::vector<std::size_t>& H) {
    require(is_subgroup(G, H), ErrorCode::Generic, "H is not a subgroup");
    std::vector<std::size_t> N = H;
    bool closed = false;
    if (!is_normal_subgroup(G, H)) {
        N = normal_closure(G, H);
        closed = true;
    }
    std::set<std::size_t> ns(N.begin(), N.end());

    // left cosets in deterministic least-representative order
    std::vector<std::size_t> coset_of(G.size(), static_cast<std::size_t>(-1));
    std::vector<std::vector<std::size_t>> cosets;
    for (std::size_t g = 0; g < G.size(); ++g) {
        if (coset_of[g] != static_cast<std::size_t>(-1)) continue;
        std::vector<std::size_t> coset;
        for (auto h : ns) coset.push_back(G.op(g, h));
        std::sort(coset.begin(), coset.end());
        for (auto x : coset) coset_of[x] = cosets.size();
        cosets.push_back(std::move(coset));
    }

    std::size_t k = cosets.size();
    std::vector<std::string> labels;
    for (const auto& coset : cosets) labels.push_back(G.carrier().labels[coset[0]] + "N");
    std::vector<std::size_t> table(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            table[a * k + b] = coset_of[G.op(cosets[a][0], cosets[b][0])];

    QuotientGroup out{FiniteGroup(fin::FiniteSet(std::move(labels)), std::move(table),
                                  coset_of[G.identity()]),
                      MonoidHom{coset_of},
                      std::move(N),
                      closed};
    return out;
}

std::vector<std::size_t> hom_kernel(const FiniteGroup& G, const FiniteGroup& H,
                                    const MonoidHom& f) {
    require(verify_monoid_hom(G, H, f), ErrorCode::Generic, "map is not a homomorphism");
    std::vector<std::size_t> ker;
    for (std::size_t g = 0; g < G.size(); ++g)
        if (f.images[g] == H.identity()) ker.push_back(g);
    return ker;
}

std::vector<std::size_t> hom_image(const FiniteGroup& G, const FiniteGroup& H,
                                   const MonoidHom& f) {
    require(verify_monoid_hom(G, H, f), ErrorCode::Generic, "map is not a homomorphism");
    std::set<std::size_t> im;
    for (std::size_t g = 0; g < G.size(); ++g) im.insert(f.images[g]);
    return {im.begin(), im.end()};
}

bool first_iso_check(const FiniteGroup& G, const FiniteGroup& H, const MonoidHom& f) {
    if (!verify_monoid_hom(G, H, f)) return false;
    auto ker = hom_kernel(G, H, f);
    auto im = hom_image(G, H, f);
    QuotientGroup q = quotient_group(G, ker);
    if (q.closed_to_normal) return false;  // kernels are always normal
    if (q.quotient.size() != im.size()) return false;

    // induced map: coset of g -> f(g); well-defined, homomorphic, bijective
    std::map<std::size_t, std::size_t> induced;
    for (std::size_t g = 0; g < G.size(); ++g) {
        std::size_t c = q.projection.images[g];
        auto it = induced.find(c);
        if (it == induced.end())
            induced[c] = f.images[g];
        else if (it->second != f.images[g])
            return false;
    }
    std::set<std::size_t> values;
    for (auto& [c, v] : induced) values.insert(v);
    if (values.size() != induced.size()) return false;  // injectivity
    for (auto v : values)
        if (std::find(im.begin(), im.end(), v) == im.end()) return false;
    // homomorphism property on the quotient
    for (std::size_t a = 0; a < q.quotient.size(); ++a)
        for (std::size_t b = 0; b < q.quotient.size(); ++b) {
            std::size_t ab = q.quotient.op(a, b);
            if (induced[ab] != H.op(induced[a], induced[b])) return false;
        }
    return true;
}

}  // namespace halg::grp
