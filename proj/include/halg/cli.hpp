#pragma once

#include <map>
#include <variant>

#include "json.hpp"

#include "halg/binnat.hpp"
#include "halg/finite.hpp"
#include "halg/fp_group.hpp"
#include "halg/localization.hpp"
#include "halg/tor.hpp"

namespace halg::cli {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// command AST

struct RingRef {
    std::string name;       // bound name, or empty when inline/absent
    std::string inline_src; // literal like "QQ[x,y]" when given inline
    bool present = false;
};

struct LetRing {
    std::string name;
    std::string source;  // ring literal
};
struct LetModule {
    std::string name;
    RingRef ring;
    std::size_t gens = 0;
    std::vector<std::vector<std::string>> rels;
};
struct LetHom {
    std::string name;
    std::string src, tgt;
    std::vector<std::vector<std::string>> mat;
};
struct LetLocalization {
    std::string name;
    RingRef ring;
    std::vector<std::string> gens;
};
struct Groebner {
    RingRef ring;
    std::vector<std::string> gens;
};
struct ReduceCmd {
    RingRef ring;
    std::string f;
    std::vector<std::string> gens;
};
struct MemberCmd {
    RingRef ring;
    std::string f;
    std::vector<std::string> gens;
};
struct SyzygyCmd {
    RingRef ring;
    std::vector<std::string> gens;
};
struct CoeffsCmd {
    RingRef ring;
    std::string f;
    std::vector<std::string> split;
};
struct SnfCmd {
    RingRef ring;
    std::vector<std::vector<std::string>> mat;
};
struct SolveCmd {
    RingRef ring;
    std::vector<std::vector<std::string>> mat;
    std::vector<std::string> rhs;
};
struct ResolveCmd {
    std::string module;
    std::size_t length = 1;
};
struct TorCmd {
    std::string left, right;
    std::size_t degree = 0;
};
struct TorLesCmd {
    std::string inject, project, coeff;
    std::size_t max_degree = 1;
};
struct FlatcheckCmd {
    RingRef ring;
    std::string f;
    std::vector<std::string> split;
};
struct WreduceCmd {
    std::string word;
};
struct AbelianizeCmd {
    std::string presentation;
};
struct FracCmd {
    std::string loc;
    std::vector<std::string> operands;  // left-assoc chain
    std::vector<char> ops;              // '+', '-', '*'
};
struct FracEqCmd {
    std::string loc;
    std::string lhs, rhs;
};
struct StricklandCmd {
    std::string loc;
    std::size_t samples = 100;
};
struct UcheckCmd {
    std::string file;
};
struct CohomCmd {
    std::string file;
    long degree = 0;
};
struct LesCmd {
    std::string file;
};
struct BinnatCmd {
    std::uint64_t n = 0;
};
struct RunCmd {
    std::string file;
};
struct HelpCmd {};
struct QuitCmd {};

using Command =
    std::variant<LetRing, LetModule, LetHom, LetLocalization, Groebner, ReduceCmd, MemberCmd,
                 SyzygyCmd, CoeffsCmd, SnfCmd, SolveCmd, ResolveCmd, TorCmd, TorLesCmd,
                 FlatcheckCmd, WreduceCmd, AbelianizeCmd, FracCmd, FracEqCmd, StricklandCmd,
                 UcheckCmd, CohomCmd, LesCmd, BinnatCmd, RunCmd, HelpCmd, QuitCmd>;

// Deterministic parse; diagnostics carry a column and the expected tokens.
Command parse_command(const std::string& line);

// ---------------------------------------------------------------------------
// session and execution

struct Config {
    std::string format = "text";  // "text" | "json"
    std::uint64_t seed = 12345;
    std::size_t gb_budget = 200000;
    int sign = +1;
};

struct Session {
    Config config;
    std::map<std::string, RingPtr> rings;
    std::map<std::string, PresentedModule> modules;
    std::map<std::string, ModuleHom> homs;
    std::map<std::string, loc::Localization> locs;
    std::string default_ring;  // most recently bound ring name
};

struct Output {
    std::string text;
    Json data;
};

// Functional update: the input session is left untouched.
std::pair<Session, Output> execute(const Session& s, const Command& cmd);

std::string emit(const Output& out, const std::string& format);

// JSON (de)serialization of complexes and SESs of complexes (the homology
// wire format) plus finite-structure check descriptions.
Json complex_to_json(const Complex& C);
Complex complex_from_json(const Json& j);
Json ses_to_json(const SesOfComplexes& S);
SesOfComplexes ses_from_json(const Json& j);

Json flatness_report_to_json(const FlatnessReport& rep, const std::string& poly_text);

// Runs one finite-structure check described by a JSON object (see docs).
Json run_finite_check(const Json& j);

RingPtr parse_ring_literal(const std::string& text);

}  // namespace halg::cli
