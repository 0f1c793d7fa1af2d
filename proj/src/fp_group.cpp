#include "halg/fp_group.hpp"

#include <cctype>
#include <sstream>

namespace halg::grp {

FpGroupPresentation presentation_parse(const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    require(i < text.size() && text[i] == '<', ErrorCode::Parse, "presentation starts with '<'");
    ++i;
    std::size_t bar = text.find('|', i);
    std::size_t close = text.rfind('>');
    require(close != std::string::npos && close > i, ErrorCode::Parse, "presentation ends with '>'");

    FpGroupPresentation p;
    std::string gen_part = text.substr(i, (bar == std::string::npos ? close : bar) - i);
    std::istringstream gs(gen_part);
    std::string tok;
    while (std::getline(gs, tok, ',')) {
        std::string name;
        for (char c : tok)
            if (!std::isspace(static_cast<unsigned char>(c))) name += c;
        if (!name.empty()) {
            require(!p.generators.has(name), ErrorCode::Parse, "duplicate generator '" + name + "'");
            p.generators.letters.push_back(name);
        }
    }
    require(p.generators.size() > 0, ErrorCode::Parse, "presentation needs at least one generator");

    if (bar != std::string::npos && bar < close) {
        std::string rel_part = text.substr(bar + 1, close - bar - 1);
        std::istringstream rs(rel_part);
        while (std::getline(rs, tok, ',')) {
            bool blank = true;
            for (char c : tok)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (!blank) p.relators.push_back(word_parse(p.generators, tok));
        }
    }
    return p;
}

std::string presentation_show(const FpGroupPresentation& p) {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) os << ",";
        os << p.generators.letters[i];
    }
    if (!p.relators.empty()) {
        os << " | ";
        for (std::size_t i = 0; i < p.relators.size(); ++i) {
            if (i) os << ", ";
            os << word_show(p.generators, p.relators[i]);
        }
    }
    os << ">";
    return os.str();
}

Abelianization abelianization(const FpGroupPresentation& p) {
    RingPtr ZZ = Ring::ZZ();
    std::size_t g = p.generators.size();
    Matrix M(ZZ, p.relators.size(), g);
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        std::vector<long> expo(g, 0);
        for (const auto& sl : p.relators[r].seq) expo[sl.letter] += sl.sign;
        for (std::size_t c = 0; c < g; ++c) M.at(r, c) = ZZ->from_int(expo[c]);
    }

    Abelianization out;
    out.exponent_matrix = M;
    if (p.relators.empty()) {
        out.free_rank = g;
        return out;
    }
    SmithForm snf = smith_normal_form(M);
    out.free_rank = g - snf.invariant_factors.size();
    for (const auto& d : snf.invariant_factors) {
        const Int& z = std::get<Int>(d.scalar());
        if (z != 1) out.torsion.push_back(z);
    }
    return out;
}

std::string abelianization_show(const Abelianization& a) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (a.free_rank == 1) {
        sep();
        os << "Z";
    } else if (a.free_rank > 1) {
        sep();
        os << "Z^" << a.free_rank;
    }
    for (const auto& d : a.torsion) {
        sep();
        os << "Z/" << d.get_str();
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace halg::grp
