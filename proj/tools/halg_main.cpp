#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "halg/cli.hpp"

namespace {

using namespace halg;

int error_exit_code(const Error& e) {
    return e.code() == ErrorCode::BudgetExceeded ? 2 : 1;
}

// Executes one line against the session; returns false on 'quit'.
bool handle_line(cli::Session& session, const std::string& line, bool& had_error) {
    std::string trimmed = line;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.erase(trimmed.begin());
    if (trimmed.empty() || trimmed[0] == '#') return true;

    cli::Command cmd = cli::parse_command(trimmed);
    if (std::holds_alternative<cli::QuitCmd>(cmd)) return false;
    if (auto* run = std::get_if<cli::RunCmd>(&cmd)) {
        std::ifstream file(run->file);
        if (!file.good()) throw Error(ErrorCode::Generic, "cannot open '" + run->file + "'");
        std::string script_line;
        while (std::getline(file, script_line)) {
            if (!handle_line(session, script_line, had_error)) return false;
        }
        return true;
    }
    auto [next, out] = cli::execute(session, cmd);
    session = std::move(next);
    std::cout << cli::emit(out, session.config.format) << "\n";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"halg: exact constructive algebra with certificates"};

    cli::Session session;
    std::string script;
    std::string command;
    app.add_option("--format", session.config.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", session.config.seed, "seed for sampled verifications")
        ->capture_default_str();
    app.add_option("--gb-budget", session.config.gb_budget, "S-pair budget for basis completion")
        ->capture_default_str();
    app.add_option("--sign", session.config.sign, "connecting-map sign (+1 or -1)")
        ->check(CLI::IsMember({1, -1}))
        ->capture_default_str();
    app.add_option("script", script, "script file to run (omit for a REPL)");
    app.add_option("-c,--command", command, "run a single command and exit");

    CLI11_PARSE(app, argc, argv);

    bool had_error = false;
    try {
        if (!command.empty()) {
            handle_line(session, command, had_error);
            return 0;
        }
        if (!script.empty()) {
            handle_line(session, "run " + script, had_error);
            return 0;
        }
        std::string line;
        std::cout << "halg> " << std::flush;
        while (std::getline(std::cin, line)) {
            try {
                if (!handle_line(session, line, had_error)) break;
            } catch (const Error& e) {
                std::cerr << "error: " << e.what() << "\n";
            }
            std::cout << "halg> " << std::flush;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return error_exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
