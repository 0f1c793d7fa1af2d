#include <fstream>
#include <random>
#include <sstream>

#include "halg/cli.hpp"

namespace halg::cli {

namespace {

[[noreturn]] void unknown(const std::string& kind, const std::string& name) {
    raise(ErrorCode::UnknownBinding, "unknown " + kind + " '" + name + "'");
}

RingPtr resolve_ring(const Session& s, const RingRef& ref) {
    if (ref.present && !ref.inline_src.empty()) return parse_ring_literal(ref.inline_src);
    if (ref.present) {
        auto it = s.rings.find(ref.name);
        if (it == s.rings.end()) unknown("ring", ref.name);
        return it->second;
    }
    if (!s.default_ring.empty()) return s.rings.at(s.default_ring);
    raise(ErrorCode::UnknownBinding, "no ring given and no ring bound yet");
}

const PresentedModule& resolve_module(const Session& s, const std::string& name) {
    auto it = s.modules.find(name);
    if (it == s.modules.end()) unknown("module", name);
    return it->second;
}

const ModuleHom& resolve_hom(const Session& s, const std::string& name) {
    auto it = s.homs.find(name);
    if (it == s.homs.end()) unknown("hom", name);
    return it->second;
}

const loc::Localization& resolve_loc(const Session& s, const std::string& name) {
    auto it = s.locs.find(name);
    if (it == s.locs.end()) unknown("localization", name);
    return it->second;
}

Matrix parse_matrix(const RingPtr& R, const std::vector<std::vector<std::string>>& rows,
                    std::size_t cols) {
    for (const auto& r : rows)
        require(r.size() == cols, ErrorCode::Dimension, "matrix rows must all have width " +
                                                            std::to_string(cols));
    Matrix m(R, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = R->parse(rows[i][j]);
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.ring()->show(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json module_to_json(const PresentedModule& M) {
    return Json{{"ring", M.ring()->name()},
                {"gens", M.gens()},
                {"relations", matrix_to_json(M.relations())}};
}

std::string module_text(const PresentedModule& M) {
    // render finite abelian / univariate quotients through invariant factors
    const Ring& R = *M.ring();
    if (M.is_zero_module()) return "0";
    if (R.is_euclidean()) {
        SmithForm s = smith_normal_form(M.relations());
        std::size_t rank = M.gens() - s.invariant_factors.size();
        std::ostringstream os;
        bool first = true;
        std::string base = R.name() == "ZZ" ? "Z" : R.name();
        for (const auto& d : s.invariant_factors) {
            if (R.is_one(d)) continue;
            if (!first) os << " + ";
            os << base << "/(" << R.show(d) << ")";
            first = false;
        }
        if (rank > 0) {
            if (!first) os << " + ";
            os << base;
            if (rank > 1) os << "^" << rank;
            first = false;
        }
        if (first) return "0";
        return os.str();
    }
    std::ostringstream os;
    os << R.name() << "^" << M.gens();
    if (M.relations().rows() > 0) os << " / " << M.relations().show();
    return os.str();
}

Json invariant_factors_json(const PresentedModule& M) {
    const Ring& R = *M.ring();
    if (!R.is_euclidean()) return Json::array();
    SmithForm s = smith_normal_form(M.relations());
    Json out = Json::array();
    for (const auto& d : s.invariant_factors) out.push_back(R.show(d));
    return out;
}

std::vector<gb::VecPoly> parse_poly_gens(const RingPtr& R, const std::vector<std::string>& texts) {
    require(R->is_poly(), ErrorCode::Capability,
            "this command needs a polynomial ring, got " + R->name());
    std::vector<gb::VecPoly> gens;
    for (const auto& t : texts) gens.push_back(gb::VecPoly{R->parse(t).poly()});
    return gens;
}

grp::Alphabet infer_alphabet(const std::string& word_text) {
    grp::Alphabet a;
    std::size_t i = 0;
    while (i < word_text.size()) {
        char ch = word_text[i];
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = i;
            while (i < word_text.size() && (std::isalnum(static_cast<unsigned char>(word_text[i])) ||
                                            word_text[i] == '_'))
                ++i;
            std::string name = word_text.substr(start, i - start);
            if (!a.has(name)) a.letters.push_back(name);
        } else {
            ++i;
        }
    }
    return a;
}

}  // namespace

Json complex_to_json(const Complex& C) {
    Json modules = Json::array();
    for (long i = C.lo(); i <= C.hi(); ++i) {
        modules.push_back(Json{{"gens", C.module_at(i).gens()},
                               {"relations", matrix_to_json(C.module_at(i).relations())}});
    }
    Json diffs = Json::array();
    for (long i = C.lo() + 1; i <= C.hi(); ++i) diffs.push_back(matrix_to_json(C.diff(i).matrix()));
    return Json{{"ring", C.ring()->name()}, {"lo", C.lo()}, {"modules", modules},
                {"differentials", diffs}};
}

Complex complex_from_json(const Json& j) {
    RingPtr R = parse_ring_literal(j.at("ring").get<std::string>());
    long lo = j.at("lo").get<long>();
    std::vector<PresentedModule> modules;
    for (const auto& jm : j.at("modules")) {
        std::size_t gens = jm.at("gens").get<std::size_t>();
        std::vector<std::vector<std::string>> rel_rows;
        for (const auto& row : jm.at("relations"))
            rel_rows.push_back(row.get<std::vector<std::string>>());
        modules.push_back(PresentedModule(R, gens, parse_matrix(R, rel_rows, gens)));
    }
    std::vector<ModuleHom> diffs;
    const auto& jd = j.at("differentials");
    require(jd.size() + 1 == modules.size(), ErrorCode::Parse,
            "complex JSON needs one differential per adjacent pair");
    for (std::size_t k = 0; k < jd.size(); ++k) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : jd[k]) rows.push_back(row.get<std::vector<std::string>>());
        require(rows.size() == modules[k + 1].gens(), ErrorCode::Parse,
                "differential has wrong row count");
        diffs.push_back(ModuleHom(modules[k + 1], modules[k],
                                  parse_matrix(R, rows, modules[k].gens())));
    }
    return Complex(lo, std::move(modules), std::move(diffs));
}

Json ses_to_json(const SesOfComplexes& S) {
    Json inj = Json::array(), prj = Json::array();
    for (long i = S.B().lo(); i <= S.B().hi(); ++i) {
        inj.push_back(matrix_to_json(S.inject().map_at(i).matrix()));
        prj.push_back(matrix_to_json(S.project().map_at(i).matrix()));
    }
    return Json{{"A", complex_to_json(S.A())},
                {"B", complex_to_json(S.B())},
                {"C", complex_to_json(S.C())},
                {"inject", inj},
                {"project", prj}};
}

SesOfComplexes ses_from_json(const Json& j) {
    Complex A = complex_from_json(j.at("A"));
    Complex B = complex_from_json(j.at("B"));
    Complex C = complex_from_json(j.at("C"));
    RingPtr R = A.ring();
    std::map<long, ModuleHom> inj, prj;
    const auto& ji = j.at("inject");
    const auto& jp = j.at("project");
    for (long i = B.lo(); i <= B.hi(); ++i) {
        std::size_t k = static_cast<std::size_t>(i - B.lo());
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : ji.at(k)) rows.push_back(row.get<std::vector<std::string>>());
        inj.emplace(i, ModuleHom(A.module_at(i), B.module_at(i),
                                 parse_matrix(R, rows, B.module_at(i).gens())));
        rows.clear();
        for (const auto& row : jp.at(k)) rows.push_back(row.get<std::vector<std::string>>());
        prj.emplace(i, ModuleHom(B.module_at(i), C.module_at(i),
                                 parse_matrix(R, rows, C.module_at(i).gens())));
    }
    return SesOfComplexes(ComplexHom(A, B, std::move(inj)), ComplexHom(B, C, std::move(prj)));
}

Json flatness_report_to_json(const FlatnessReport& rep, const std::string& poly_text) {
    Json j;
    j["command"] = "flatcheck";
    j["verdict"] = rep.flat ? "FLAT" : "NOT-FLAT";
    j["base_ring"] = rep.base->name();
    j["polynomial"] = poly_text;
    Json coeffs = Json::array();
    for (const auto& c : rep.coefficients) coeffs.push_back(rep.base->show(c));
    j["coefficients"] = coeffs;
    Json combo = Json::array();
    for (const auto& c : rep.combination) combo.push_back(rep.base->show(c));
    j["combination"] = combo;
    Json basis = Json::array();
    for (const auto& c : rep.ideal_basis) basis.push_back(rep.base->show(c));
    j["ideal_basis"] = basis;
    j["detail"] = rep.detail;
    return j;
}

Json run_finite_check(const Json& j) {
    using namespace fin;
    std::string kind = j.at("kind").get<std::string>();
    auto set_of = [&](const char* key) {
        return FiniteSet(j.at(key).get<std::vector<std::string>>());
    };
    Json out;
    out["kind"] = kind;
    if (kind == "pair_constructor") {
        FiniteSet A = set_of("A"), B = set_of("B"), P = set_of("P");
        auto pairing = j.at("pairing").get<std::vector<std::size_t>>();
        CheckResult r = check_pair_constructor(A, B, P, pairing);
        out["ok"] = r.ok;
        out["counterexample"] = r.counterexample;
    } else if (kind == "projections") {
        FiniteSet A = set_of("A"), B = set_of("B"), P = set_of("P");
        FiniteFunction pA(P, A, j.at("pA").get<std::vector<std::size_t>>());
        FiniteFunction pB(P, B, j.at("pB").get<std::vector<std::size_t>>());
        CheckResult r = check_projections(A, B, P, pA, pB);
        out["ok"] = r.ok;
        out["counterexample"] = r.counterexample;
    } else if (kind == "equivalence_closure") {
        FiniteSet carrier = set_of("carrier");
        FiniteRelation R(carrier);
        for (const auto& p : j.at("pairs")) R.add(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
        Partition part = equivalence_closure(R);
        Json blocks = Json::array();
        for (const auto& blk : part.blocks) {
            Json b = Json::array();
            for (auto e : blk) b.push_back(carrier.labels[e]);
            blocks.push_back(std::move(b));
        }
        out["blocks"] = blocks;
        out["ok"] = true;
    } else if (kind == "set_quotient") {
        FiniteSet carrier = set_of("carrier"), Q = set_of("Q");
        FiniteRelation R(carrier);
        for (const auto& p : j.at("pairs")) R.add(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
        FiniteFunction q(carrier, Q, j.at("q").get<std::vector<std::size_t>>());
        QuotientCheck r = check_set_quotient(Q, q, R);
        out["ok"] = r.ok;
        out["pre_closed"] = r.pre_closed;
        out["counterexample"] = r.counterexample;
    } else if (kind == "natural_type") {
        FiniteSet N = set_of("N");
        FiniteFunction s(N, N, j.at("s").get<std::vector<std::size_t>>());
        CheckResult r = check_natural_type(N, j.at("n0").get<std::size_t>(), s,
                                           j.at("bound").get<std::size_t>());
        out["ok"] = r.ok;
        out["counterexample"] = r.counterexample;
    } else {
        raise(ErrorCode::Parse, "unknown finite check kind '" + kind + "'");
    }
    return out;
}

namespace {

struct Exec {
    Session s;  // working copy
    Output out;

    gb::BasisOptions gb_opts() const {
        gb::BasisOptions opt;
        opt.pair_budget = s.config.gb_budget;
        return opt;
    }

    void operator()(const LetRing& cmd) {
        RingPtr R = parse_ring_literal(cmd.source);
        s.rings[cmd.name] = R;
        s.default_ring = cmd.name;
        out.text = cmd.name + " = " + R->name();
        out.data = Json{{"command", "let"}, {"kind", "ring"}, {"name", cmd.name},
                        {"ring", R->name()}};
    }

    void operator()(const LetModule& cmd) {
        RingPtr R = resolve_ring(s, cmd.ring);
        PresentedModule M(R, cmd.gens, parse_matrix(R, cmd.rels, cmd.gens));
        s.modules.erase(cmd.name);
        s.modules.emplace(cmd.name, M);
        out.text = cmd.name + " = " + module_text(M);
        out.data = Json{{"command", "let"}, {"kind", "module"}, {"name", cmd.name},
                        {"module", module_to_json(M)}};
    }

    void operator()(const LetHom& cmd) {
        const PresentedModule& src = resolve_module(s, cmd.src);
        const PresentedModule& tgt = resolve_module(s, cmd.tgt);
        require(src.ring()->same_ring(*tgt.ring()), ErrorCode::TypeMismatch,
                "hom endpoints live over different rings");
        ModuleHom h(src, tgt, parse_matrix(src.ring(), cmd.mat, tgt.gens()));
        s.homs.erase(cmd.name);
        s.homs.emplace(cmd.name, h);
        out.text = cmd.name + " = hom " + cmd.src + " -> " + cmd.tgt + " (well-defined)";
        out.data = Json{{"command", "let"},
                        {"kind", "hom"},
                        {"name", cmd.name},
                        {"matrix", matrix_to_json(h.matrix())},
                        {"well_defined", true}};
    }

    void operator()(const LetLocalization& cmd) {
        RingPtr R = resolve_ring(s, cmd.ring);
        std::vector<Elem> gens;
        for (const auto& g : cmd.gens) gens.push_back(R->parse(g));
        loc::Localization L(R, gens);
        s.locs.erase(cmd.name);
        s.locs.emplace(cmd.name, std::move(L));
        out.text = cmd.name + " = " + R->name() + " localized at " +
                   std::to_string(gens.size()) + " generator(s)";
        out.data = Json{{"command", "let"}, {"kind", "localization"}, {"name", cmd.name},
                        {"ring", R->name()}};
    }

    void operator()(const Groebner& cmd) {
        RingPtr R = resolve_ring(s, cmd.ring);
        auto gens = parse_poly_gens(R, cmd.gens);
        gb::Basis b = gb::buchberger(R, 1, gens, gb_opts());
        std::ostringstream os;
        os << "basis {";
        Json basis = Json::array(), transform = Json::array();
        for (std::size_t i = 0; i < b.basis.size(); ++i) {
            if (i) os << ", ";
            os << poly_show(R->ctx(), b.basis[i][0]);
            basis.push_back(poly_show(R->ctx(), b.basis[i][0]));
            Json row = Json::array();
            for (const auto& p : b.to_gens[i]) row.push_back(poly_show(R->ctx(), p));
            transform.push_back(std::move(row));
        }
        os << "}";
        out.text = os.str();
        out.data = Json{{"command", "groebner"}, {"ring", R->name()}, {"basis", basis},
                        {"to_generators", transform}};
    }

    void operator()(const ReduceCmd& cmd) {
        RingPtr R = resolve_ring(s, cmd.ring);
        auto gens = parse_poly_gens(R, cmd.gens);
        Poly f = R->parse(cmd.f).poly();
        gb::Reduction r = gb::reduce(R, 1, gb::VecPoly{f}, gens);
        out.text = "remainder " + poly_show(R->ctx(), r.remainder[0]);
        Json quot = Json::array();
        for (const auto& q : r.quotients) quot.push_back(poly_show(R->ctx(), q));
        out.data = Json{{"command", "reduce"},
                        {"remainder", poly_show(R->ctx(), r.remainder[0])},
                        {"quotients", quot}};
    }

    void operator()(const MemberCmd& cmd) {
        RingPtr R = resolve_ring(s, cmd.ring);
        Poly f = R->parse(cmd.f).poly();
        std::vector<Poly> gens;
        for (const auto& t : cmd.gens) gens.push_back(R->parse(t).poly());
        auto h = gb::ideal_membership(R, f, gens, gb_opts());
        if (h) {
            std::ostringstream os;
            os << "member: certificate [";
            Json cert = Json::array();
            for (std::size_t i = 0; i < h->size(); ++i) {
                if (i) os << ", ";
                os << poly_show(R->ctx(), (*h)[i]);
                cert.push_back(poly_show(R->ctx(), (*h)[i]));
            }
            os << "]";
            out.text = os.str();
            out.data = Json{{"command", "member"}, {"member", true}, {"certificate", cert}};
        } else {
            out.text = "not a member";
            out.data = Json{{"command", "member"}, {"member", false}};
        }
    }

    void operator()(const SyzygyCmd& cmd) {
        RingPtr R = resolve_ring(s, cmd.ring);
        std::vector<std::vector<Elem>> rows;
        for (const auto& t : cmd.gens) rows.push_back({R->parse(t)});
        auto syz = row_syzygies(R, rows, 1);
        Json js = Json::array();
        std::ostringstream os;
        os << "syzygies:";
        if (syz.empty()) os << " none";
        for (const auto& row : syz) {
            Json jr = Json::array();
            os << " (";
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << ", ";
                os << R->show(row[i]);
                jr.push_back(R->show(row[i]));
            }
            os << ")";
            js.push_back(std::move(jr));
        }
        out.text = os.str();
        out.data = Json{{"command", "syzygy"}, {"rows", js}};
    }

    void operator()(const CoeffsCmd& cmd) {
        RingPtr R = resolve_ring(s, cmd.ring);
        Poly f = R->parse(cmd.f).poly();
        std::vector<std::size_t> split;
        for (const auto& name : cmd.split) {
            bool found = false;
            for (std::size_t v = 0; v < R->vars().size(); ++v)
                if (R->vars()[v] == name) {
                    split.push_back(v);
                    found = true;
                }
            require(found, ErrorCode::Parse, "split variable '" + name + "' not in " + R->name());
        }
        auto sc = gb::coefficients_wrt(R, f, split);
        std::ostringstream os;
        os << "coefficients over " << sc.base->name() << ": {";
        Json jc = Json::array();
        for (std::size_t i = 0; i < sc.coeffs.size(); ++i) {
            if (i) os << ", ";
            os << sc.base->show(sc.coeffs[i]);
            jc.push_back(sc.base->show(sc.coeffs[i]));
        }
        os << "}";
        out.text = os.str();
        out.data = Json{{"command", "coeffs"}, {"base_ring", sc.base->name()},
                        {"coefficients", jc}};
    }

    void operator()(const SnfCmd& cmd) {
        RingPtr R = resolve_ring(s, cmd.ring);
        std::size_t cols = cmd.mat.empty() ? 0 : cmd.mat[0].size();
        Matrix A = parse_matrix(R, cmd.mat, cols);
        SmithForm f = smith_normal_form(A);
        std::ostringstream os;
        os << "invariant factors (";
        Json inv = Json::array();
        for (std::size_t i = 0; i < f.invariant_factors.size(); ++i) {
            if (i) os << ", ";
            os << R->show(f.invariant_factors[i]);
            inv.push_back(R->show(f.invariant_factors[i]));
        }
        os << ")";
        out.text = os.str();
        out.data = Json{{"command", "snf"},
                        {"invariant_factors", inv},
                        {"U", matrix_to_json(f.U)},
                        {"D", matrix_to_json(f.D)},
                        {"V", matrix_to_json(f.V)}};
    }

    void operator()(const SolveCmd& cmd) {
        RingPtr R = resolve_ring(s, cmd.ring);
        std::size_t cols = cmd.mat.empty() ? 0 : cmd.mat[0].size();
        Matrix A = parse_matrix(R, cmd.mat, cols);
        std::vector<Elem> b;
        for (const auto& t : cmd.rhs) b.push_back(R->parse(t));
        auto sol = solve_linear(A, b);
        if (!sol) {
            out.text = "no solution";
            out.data = Json{{"command", "solve"}, {"solvable", false}};
            return;
        }
        std::ostringstream os;
        os << "x = (";
        Json jx = Json::array(), jk = Json::array();
        for (std::size_t i = 0; i < sol->particular.size(); ++i) {
            if (i) os << ", ";
            os << R->show(sol->particular[i]);
            jx.push_back(R->show(sol->particular[i]));
        }
        os << "), kernel rank " << sol->kernel.size();
        for (const auto& k : sol->kernel) {
            Json row = Json::array();
            for (const auto& e : k) row.push_back(R->show(e));
            jk.push_back(std::move(row));
        }
        out.text = os.str();
        out.data = Json{{"command", "solve"}, {"solvable", true}, {"x", jx}, {"kernel", jk}};
    }

    void operator()(const ResolveCmd& cmd) {
        const PresentedModule& M = resolve_module(s, cmd.module);
        Resolution r = free_resolution(M, cmd.length);
        std::ostringstream os;
        os << "ranks";
        Json jr = Json::array(), jd = Json::array();
        for (auto k : r.ranks) {
            os << " " << k;
            jr.push_back(k);
        }
        os << (r.complete ? " (complete)" : " (truncated: nonzero tail)");
        for (const auto& d : r.diffs) jd.push_back(matrix_to_json(d));
        out.text = os.str();
        out.data = Json{{"command", "resolve"}, {"ranks", jr}, {"differentials", jd},
                        {"complete", r.complete}};
    }

    void operator()(const TorCmd& cmd) {
        const PresentedModule& M = resolve_module(s, cmd.left);
        const PresentedModule& N = resolve_module(s, cmd.right);
        TorResult t = tor(M, N, cmd.degree);
        out.text = "Tor_" + std::to_string(cmd.degree) + " = " + module_text(t.value);
        Json jr = Json::array();
        for (auto k : t.resolution.ranks) jr.push_back(k);
        out.data = Json{{"command", "tor"},
                        {"degree", cmd.degree},
                        {"value", module_to_json(t.value)},
                        {"invariant_factors", invariant_factors_json(t.value)},
                        {"vanishes", t.vanishes()},
                        {"resolution_ranks", jr}};
    }

    void operator()(const TorLesCmd& cmd) {
        const ModuleHom& f = resolve_hom(s, cmd.inject);
        const ModuleHom& g = resolve_hom(s, cmd.project);
        const PresentedModule& N = resolve_module(s, cmd.coeff);
        TorLes t = tor_les(f, g, N, cmd.max_degree, s.config.sign);
        std::ostringstream os;
        os << (t.les.exact ? "long exact sequence verified exact" : "EXACTNESS FAILED");
        Json nodes = Json::array();
        const Complex& L = t.les.sequence;
        for (long i = L.hi(); i >= L.lo(); --i) {
            Json node;
            node["label"] = t.les.node_labels[static_cast<std::size_t>(i - L.lo())];
            node["module"] = module_text(L.module_at(i));
            node["exact"] =
                (i == L.lo() || i == L.hi()) ? true
                                             : static_cast<bool>(t.les.exact_at[static_cast<std::size_t>(
                                                   i - L.lo())]);
            nodes.push_back(std::move(node));
        }
        out.text = os.str();
        out.data = Json{{"command", "torles"}, {"exact", t.les.exact}, {"sign", s.config.sign},
                        {"nodes", nodes}};
    }

    void operator()(const FlatcheckCmd& cmd) {
        RingPtr base = resolve_ring(s, cmd.ring);
        // extend the base ring by the split variables (f lives in base[split])
        std::vector<std::string> vars = base->is_poly() ? base->vars() : std::vector<std::string>{};
        std::vector<std::size_t> split_idx;
        for (const auto& v : cmd.split) {
            bool already = false;
            for (std::size_t k = 0; k < vars.size(); ++k)
                if (vars[k] == v) {
                    split_idx.push_back(k);
                    already = true;
                }
            if (!already) {
                split_idx.push_back(vars.size());
                vars.push_back(v);
            }
        }
        RingPtr scalar = base->is_poly() ? base->base_ring() : base;
        RingPtr S = Ring::poly_over(scalar, vars, base->order());
        Poly f = S->parse(cmd.f).poly();
        FlatnessReport rep = hypersurface_flat_check(S, f, split_idx);
        std::ostringstream os;
        os << (rep.flat ? "FLAT" : "NOT-FLAT");
        if (rep.flat) {
            os << ": 1 =";
            for (std::size_t i = 0; i < rep.coefficients.size(); ++i) {
                if (i) os << " +";
                os << " (" << rep.base->show(rep.combination[i]) << ")*("
                   << rep.base->show(rep.coefficients[i]) << ")";
            }
        } else {
            os << ": coefficient ideal basis {";
            for (std::size_t i = 0; i < rep.ideal_basis.size(); ++i) {
                if (i) os << ", ";
                os << rep.base->show(rep.ideal_basis[i]);
            }
            os << "} does not contain 1";
        }
        out.text = os.str();
        out.data = flatness_report_to_json(rep, S->show(Elem{f}));
    }

    void operator()(const WreduceCmd& cmd) {
        grp::Alphabet a = infer_alphabet(cmd.word);
        grp::SignedWord w = grp::word_parse(a, cmd.word);
        grp::SignedWord r = grp::reduce_word(w);
        out.text = grp::word_show(a, r);
        out.data = Json{{"command", "wreduce"}, {"reduced", grp::word_show(a, r)},
                        {"length", r.seq.size()}};
    }

    void operator()(const AbelianizeCmd& cmd) {
        grp::FpGroupPresentation p = grp::presentation_parse(cmd.presentation);
        grp::Abelianization a = grp::abelianization(p);
        out.text = grp::abelianization_show(a);
        Json tors = Json::array();
        for (const auto& d : a.torsion) tors.push_back(d.get_str());
        out.data = Json{{"command", "abelianize"},
                        {"free_rank", a.free_rank},
                        {"torsion", tors},
                        {"rendered", grp::abelianization_show(a)}};
    }

    void operator()(const FracCmd& cmd) {
        const loc::Localization& L = resolve_loc(s, cmd.loc);
        loc::Fraction acc = L.parse(cmd.operands.at(0));
        for (std::size_t k = 0; k < cmd.ops.size(); ++k) {
            loc::Fraction rhs = L.parse(cmd.operands.at(k + 1));
            switch (cmd.ops[k]) {
                case '+': acc = L.add(acc, rhs); break;
                case '-': acc = L.sub(acc, rhs); break;
                case '*': acc = L.mul(acc, rhs); break;
                default: raise(ErrorCode::Parse, "unknown fraction operator");
            }
        }
        out.text = L.show(acc);
        out.data = Json{{"command", "frac"}, {"value", L.show(acc)}};
    }

    void operator()(const FracEqCmd& cmd) {
        const loc::Localization& L = resolve_loc(s, cmd.loc);
        bool eq = L.equal(L.parse(cmd.lhs), L.parse(cmd.rhs));
        out.text = eq ? "equal" : "not equal";
        out.data = Json{{"command", "fraceq"}, {"equal", eq}};
    }

    void operator()(const StricklandCmd& cmd) {
        const loc::Localization& L = resolve_loc(s, cmd.loc);
        const Ring& R = *L.ring();
        std::mt19937_64 rng(s.config.seed);
        std::uniform_int_distribution<long> small(-6, 6);
        std::uniform_int_distribution<unsigned> expo(0, 3);
        std::vector<Elem> ring_samples;
        std::vector<loc::Fraction> frac_samples;
        for (std::size_t t = 0; t < cmd.samples; ++t) {
            Elem r = R.from_int(small(rng));
            if (R.is_poly()) {
                // sprinkle the variables in deterministically
                for (std::size_t v = 0; v < R.vars().size(); ++v)
                    r = R.add(r, R.mul(R.from_int(small(rng)),
                                       Elem{poly_var(R.ctx(), v, expo(rng))}));
            }
            ring_samples.push_back(r);
            std::vector<unsigned> e(L.generators().size());
            for (auto& x : e) x = expo(rng);
            frac_samples.push_back(L.make(r, e));
        }
        loc::StricklandReport rep = strickland_verify(L, ring_samples, frac_samples);
        std::ostringstream os;
        os << "units " << (rep.units_ok ? "ok" : "VIOLATED") << ", fractions "
           << (rep.fractions_ok ? "ok" : "VIOLATED") << ", kernel "
           << (rep.kernel_ok ? "ok" : "VIOLATED");
        Json viol = Json::array();
        for (const auto& v : rep.violations) viol.push_back(v);
        out.text = os.str();
        out.data = Json{{"command", "strickland"},
                        {"units_ok", rep.units_ok},
                        {"fractions_ok", rep.fractions_ok},
                        {"kernel_ok", rep.kernel_ok},
                        {"violations", viol},
                        {"samples", cmd.samples}};
    }

    void operator()(const UcheckCmd& cmd) {
        std::ifstream in(cmd.file);
        require(in.good(), ErrorCode::Generic, "cannot open '" + cmd.file + "'");
        Json j = Json::parse(in);
        Json r = run_finite_check(j);
        out.text = r.contains("ok") && r["ok"].get<bool>() ? "check passed" : "check failed";
        if (r.contains("counterexample") && !r["counterexample"].get<std::string>().empty())
            out.text += ": " + r["counterexample"].get<std::string>();
        if (r.contains("blocks")) out.text = "closure computed: " + r["blocks"].dump();
        r["command"] = "ucheck";
        out.data = r;
    }

    void operator()(const CohomCmd& cmd) {
        std::ifstream in(cmd.file);
        require(in.good(), ErrorCode::Generic, "cannot open '" + cmd.file + "'");
        Complex C = complex_from_json(Json::parse(in));
        CohomologyAt h = cohomology_at(C, cmd.degree);
        out.text = "h_" + std::to_string(cmd.degree) + " = " + module_text(h.H);
        out.data = Json{{"command", "cohom"},
                        {"degree", cmd.degree},
                        {"value", module_to_json(h.H)},
                        {"invariant_factors", invariant_factors_json(h.H)}};
    }

    void operator()(const LesCmd& cmd) {
        std::ifstream in(cmd.file);
        require(in.good(), ErrorCode::Generic, "cannot open '" + cmd.file + "'");
        SesOfComplexes S = ses_from_json(Json::parse(in));
        LongExactSequence les = long_exact_sequence(S, s.config.sign);
        out.text = les.exact ? "long exact sequence verified exact" : "EXACTNESS FAILED";
        Json nodes = Json::array();
        const Complex& L = les.sequence;
        for (long i = L.hi(); i >= L.lo(); --i) {
            nodes.push_back(Json{
                {"label", les.node_labels[static_cast<std::size_t>(i - L.lo())]},
                {"module", module_text(L.module_at(i))}});
        }
        out.data = Json{{"command", "les"}, {"exact", les.exact}, {"sign", s.config.sign},
                        {"nodes", nodes}};
    }

    void operator()(const BinnatCmd& cmd) {
        fin::BinNat b = fin::to_binary(cmd.n);
        out.text = fin::bin_show(b);
        out.data = Json{{"command", "binnat"}, {"n", cmd.n}, {"binary", fin::bin_show(b)},
                        {"round_trip", fin::from_binary(b)}};
    }

    void operator()(const RunCmd&) {
        raise(ErrorCode::Generic, "'run' is handled by the command-line driver");
    }

    void operator()(const HelpCmd&) {
        out.text =
            "commands: let, groebner, reduce, member, syzygy, coeffs, snf, solve, resolve, tor, "
            "torles, flatcheck, wreduce, abelianize, frac, fraceq, strickland, ucheck, cohom, "
            "les, binnat, run, help, quit";
        out.data = Json{{"command", "help"}};
    }

    void operator()(const QuitCmd&) {
        out.text = "bye";
        out.data = Json{{"command", "quit"}};
    }
};

}  // namespace

std::pair<Session, Output> execute(const Session& s, const Command& cmd) {
    Exec e{s, {}};
    std::visit(e, cmd);
    return {std::move(e.s), std::move(e.out)};
}

std::string emit(const Output& out, const std::string& format) {
    if (format == "json") return out.data.dump();
    return out.text;
}

}  // namespace halg::cli
