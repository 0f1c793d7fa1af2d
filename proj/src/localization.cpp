#include "halg/localization.hpp"

#include <sstream>

namespace halg::loc {

Localization::Localization(RingPtr ring, std::vector<Elem> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
    require(ring_ != nullptr, ErrorCode::Generic, "localization needs a ring");
    require(ring_->is_domain(), ErrorCode::Capability, "localization is restricted to domains");
    for (const auto& s : gens_)
        require(!ring_->is_zero(s), ErrorCode::Generic,
                "0 cannot generate a multiplicative set over a domain");
}

Elem Localization::denominator_of(const std::vector<unsigned>& exp) const {
    require(exp.size() == gens_.size(), ErrorCode::Dimension, "exponent witness has wrong length");
    Elem d = ring_->one();
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (exp[i]) d = ring_->mul(d, ring_->pow(gens_[i], exp[i]));
    return d;
}

std::optional<Localization::Witness> Localization::witness(const Elem& d) const {
    if (ring_->is_zero(d)) return std::nullopt;
    // bounded backtracking over generator divisions; greedy first
    struct Frame {
        Elem rest;
        std::vector<unsigned> exp;
        std::size_t from;
    };
    std::vector<Frame> stack{{d, std::vector<unsigned>(gens_.size(), 0), 0}};
    int steps = 0;
    while (!stack.empty() && ++steps < 4096) {
        Frame f = stack.back();
        stack.pop_back();
        if (ring_->is_unit(f.rest)) return Witness{f.exp, f.rest};
        for (std::size_t i = f.from; i < gens_.size(); ++i) {
            Elem q;
            if (ring_->divide_exact(f.rest, gens_[i], q)) {
                Frame next{q, f.exp, i};
                ++next.exp[i];
                stack.push_back(std::move(next));
            }
        }
    }
    return std::nullopt;
}

Fraction Localization::make(Elem num, std::vector<unsigned> exp) const {
    require(exp.size() == gens_.size(), ErrorCode::Dimension, "exponent witness has wrong length");
    Fraction f{std::move(num), std::move(exp)};
    if (ring_->is_zero(f.num)) {
        std::fill(f.exp.begin(), f.exp.end(), 0u);
        return f;
    }
    if (ring_->is_euclidean()) {
        // cancel generator factors out of the numerator where division is exact
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            while (f.exp[i] > 0) {
                Elem q;
                if (!ring_->divide_exact(f.num, gens_[i], q)) break;
                f.num = q;
                --f.exp[i];
            }
        }
    }
    return f;
}

Fraction Localization::from_ring(const Elem& r) const {
    return Fraction{r, std::vector<unsigned>(gens_.size(), 0)};
}

Fraction Localization::inv_generator(std::size_t i) const {
    require(i < gens_.size(), ErrorCode::Dimension, "generator index out of range");
    std::vector<unsigned> e(gens_.size(), 0);
    e[i] = 1;
    return Fraction{ring_->one(), std::move(e)};
}

Fraction Localization::add(const Fraction& a, const Fraction& b) const {
    // (r, s) + (r', s') = (r s' + r' s, s s')
    Elem num = ring_->add(ring_->mul(a.num, denominator_of(b.exp)),
                          ring_->mul(b.num, denominator_of(a.exp)));
    std::vector<unsigned> exp(gens_.size());
    for (std::size_t i = 0; i < exp.size(); ++i) exp[i] = a.exp[i] + b.exp[i];
    return make(std::move(num), std::move(exp));
}

Fraction Localization::mul(const Fraction& a, const Fraction& b) const {
    std::vector<unsigned> exp(gens_.size());
    for (std::size_t i = 0; i < exp.size(); ++i) exp[i] = a.exp[i] + b.exp[i];
    return make(ring_->mul(a.num, b.num), std::move(exp));
}

Fraction Localization::neg(const Fraction& a) const { return Fraction{ring_->neg(a.num), a.exp}; }

Fraction Localization::sub(const Fraction& a, const Fraction& b) const { return add(a, neg(b)); }

std::optional<Fraction> Localization::invert(const Fraction& a) const {
    auto w = witness(a.num);
    if (!w) return std::nullopt;
    // num = unit * prod s^w  =>  1/num = inv(unit) * den(w)^-1, so
    // (num/den(e))^-1 = inv(unit) * den(e) / den(w)
    Elem n = ring_->mul(ring_->inv(w->unit), denominator_of(a.exp));
    return make(std::move(n), w->exp);
}

bool Localization::equal(const Fraction& a, const Fraction& b) const {
    // over a domain with 0 not in S: r/s = r'/s' iff r s' - r' s = 0
    Elem lhs = ring_->mul(a.num, denominator_of(b.exp));
    Elem rhs = ring_->mul(b.num, denominator_of(a.exp));
    return ring_->eq(lhs, rhs);
}

bool Localization::is_zero(const Fraction& a) const { return ring_->is_zero(a.num); }

bool Localization::is_one(const Fraction& a) const { return equal(a, from_ring(ring_->one())); }

std::string Localization::show(const Fraction& a) const {
    bool trivial_den = true;
    for (auto e : a.exp)
        if (e) trivial_den = false;
    std::string num = ring_->show(a.num);
    if (trivial_den) return num;
    std::string den = ring_->show(denominator_of(a.exp));
    bool wrap_num = num.find_first_of("+- ") != std::string::npos;
    bool wrap_den = den.find_first_of("+- ") != std::string::npos;
    std::string out = wrap_num ? "(" + num + ")" : num;
    out += "/";
    out += wrap_den ? "(" + den + ")" : den;
    return out;
}

Fraction Localization::parse(const std::string& text) const {
    // the last '/' at paren depth 0 separates numerator and denominator;
    // rational coefficient literals inside a component need parentheses
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '/' && depth == 0) split = i;
    }
    if (split == std::string::npos) return from_ring(ring_->parse(text));
    Elem num = ring_->parse(text.substr(0, split));
    Elem den = ring_->parse(text.substr(split + 1));
    auto w = witness(den);
    require(w.has_value(), ErrorCode::Parse,
            "denominator '" + ring_->show(den) + "' is not in the multiplicative set");
    return make(ring_->mul(num, ring_->inv(w->unit)), w->exp);
}

StricklandReport strickland_verify(const Localization& L, const std::vector<Elem>& ring_samples,
                                   const std::vector<Fraction>& fraction_samples,
                                   const std::function<Fraction(const Elem&)>* map_override) {
    const Ring& R = *L.ring();
    auto q = [&](const Elem& r) { return map_override ? (*map_override)(r) : L.from_ring(r); };
    StricklandReport rep;

    // clause 1: q sends every generator of S to a unit
    for (std::size_t i = 0; i < L.generators().size(); ++i) {
        Fraction qs = q(L.generators()[i]);
        auto inv = L.invert(qs);
        bool good = inv && L.is_one(L.mul(qs, *inv));
        if (!good) {
            rep.units_ok = false;
            rep.violations.push_back("q(" + R.show(L.generators()[i]) +
                                     ") is not a unit in the fraction ring");
        }
    }

    // clause 2: every sampled fraction is q(r) * q(s)^-1 for its own (r, s)
    for (const auto& f : fraction_samples) {
        Elem den = L.denominator_of(f.exp);
        Fraction qd = q(den);
        auto inv = L.invert(qd);
        bool good = false;
        if (inv) good = L.equal(f, L.mul(q(f.num), *inv));
        if (!good) {
            rep.fractions_ok = false;
            rep.violations.push_back("fraction " + L.show(f) +
                                     " does not decompose as q(num) * q(den)^-1");
        }
    }

    // clause 3: ker q = Ann(S) = 0 over a domain with 0 not in S
    for (const auto& r : ring_samples) {
        bool q_zero = L.is_zero(q(r));
        bool r_zero = R.is_zero(r);
        if (q_zero != r_zero) {
            rep.kernel_ok = false;
            rep.violations.push_back("kernel clause fails at " + R.show(r) + ": q(r) is " +
                                     (q_zero ? "zero" : "nonzero"));
        }
    }
    return rep;
}

UniversalFactorResult universal_factor(const Localization& L, const RingPtr& target,
                                       const std::function<Elem(const Elem&)>& f,
                                       const std::vector<Elem>& generator_inverses,
                                       const std::vector<Fraction>& samples) {
    const Ring& R = *L.ring();
    const Ring& T = *target;
    require(generator_inverses.size() == L.generators().size(), ErrorCode::Dimension,
            "one inverse witness per generator is required");
    for (std::size_t i = 0; i < L.generators().size(); ++i) {
        Elem prod = T.mul(f(L.generators()[i]), generator_inverses[i]);
        require(T.is_one(prod), ErrorCode::Generic,
                "witness " + std::to_string(i) + " does not invert the generator image");
    }
    auto g = [&](const Fraction& x) {
        Elem acc = f(x.num);
        for (std::size_t i = 0; i < x.exp.size(); ++i)
            for (unsigned k = 0; k < x.exp[i]; ++k) acc = T.mul(acc, generator_inverses[i]);
        return acc;
    };

    UniversalFactorResult out;
    out.target = target;
    for (const auto& s : samples) out.images.push_back(g(s));

    // well-definedness spot check: frac-equal samples get equal images
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            if (!L.equal(samples[i], samples[j])) continue;
            require(T.eq(out.images[i], out.images[j]), ErrorCode::Internal,
                    "factorized map is not constant on a fraction equality class");
        }
    // g after the localization map agrees with f on the sampled numerators
    for (const auto& s : samples) {
        Elem lhs = g(L.from_ring(s.num));
        require(T.eq(lhs, f(s.num)), ErrorCode::Internal,
                "factorized map does not extend f through r -> r/1");
    }
    return out;
}

}  // namespace halg::loc
