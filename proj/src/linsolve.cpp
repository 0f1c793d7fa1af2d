#include "halg/linsolve.hpp"

namespace halg {

namespace {

gb::VecPoly to_vecpoly(const std::vector<Elem>& row) {
    gb::VecPoly v;
    v.reserve(row.size());
    for (const auto& e : row) v.push_back(e.poly());
    return v;
}

}  // namespace

std::optional<std::vector<Elem>> lift_through_rows(const RingPtr& ring,
                                                   const std::vector<std::vector<Elem>>& rows,
                                                   std::size_t width,
                                                   const std::vector<Elem>& target) {
    require(target.size() == width, ErrorCode::Dimension, "lift target has wrong width");
    const Ring& R = *ring;
    if (rows.empty()) {
        for (const auto& e : target)
            if (!R.is_zero(e)) return std::nullopt;
        return std::vector<Elem>{};
    }
    if (R.is_euclidean()) {
        // columns of A are the rows; solve A*c = target
        Matrix A(ring, width, rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == width, ErrorCode::Dimension, "ragged row list");
            for (std::size_t j = 0; j < width; ++j) A.at(j, i) = rows[i][j];
        }
        auto sol = solve_linear(A, target);
        if (!sol) return std::nullopt;
        return sol->particular;
    }
    require(R.has_groebner(), ErrorCode::Capability,
            "row-span lift needs a euclidean or groebner ring, got " + R.name());
    std::vector<gb::VecPoly> gens;
    gens.reserve(rows.size());
    for (const auto& r : rows) gens.push_back(to_vecpoly(r));
    gb::Basis b = gb::buchberger(ring, width, gens);
    auto h = b.member(to_vecpoly(target));
    if (!h) return std::nullopt;
    std::vector<Elem> out;
    out.reserve(h->size());
    for (auto& p : *h) out.push_back(Elem{std::move(p)});
    return out;
}

std::vector<std::vector<Elem>> row_syzygies(const RingPtr& ring,
                                            const std::vector<std::vector<Elem>>& rows,
                                            std::size_t width) {
    const Ring& R = *ring;
    if (rows.empty()) return {};
    if (R.is_euclidean()) {
        Matrix A(ring, width, rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == width, ErrorCode::Dimension, "ragged row list");
            for (std::size_t j = 0; j < width; ++j) A.at(j, i) = rows[i][j];
        }
        return kernel_basis(A);
    }
    require(R.has_groebner(), ErrorCode::Capability,
            "syzygy computation needs a euclidean or groebner ring, got " + R.name());
    std::vector<gb::VecPoly> gens;
    gens.reserve(rows.size());
    for (const auto& r : rows) gens.push_back(to_vecpoly(r));
    auto syz = gb::syzygies(ring, width, gens);
    std::vector<std::vector<Elem>> out;
    out.reserve(syz.size());
    for (auto& s : syz) {
        std::vector<Elem> row;
        row.reserve(s.size());
        for (auto& p : s) row.push_back(Elem{std::move(p)});
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace halg
