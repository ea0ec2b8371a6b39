#include "heesch/cnf.hpp"
#include "heesch/error.hpp"

#include <atomic>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace heesch {

std::string export_dimacs(const CnfFormula& formula) {
    std::string out = "p cnf " + std::to_string(formula.num_vars()) + " " +
                      std::to_string(formula.clause_count()) + "\n";
    for (std::size_t i = 0; i < formula.clause_count(); ++i) {
        for (Lit l : formula.clause(i)) {
            out += std::to_string(l);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

namespace {

struct TokenStream {
    std::string_view text;
    std::size_t pos = 0;

    std::string_view next() {
        while (pos < text.size() && std::isspace(std::uint8_t(text[pos]))) ++pos;
        const std::size_t start = pos;
        while (pos < text.size() && !std::isspace(std::uint8_t(text[pos]))) ++pos;
        return text.substr(start, pos - start);
    }

    void skip_line() {
        while (pos < text.size() && text[pos] != '\n') ++pos;
    }
};

std::int64_t to_int(std::string_view tok) {
    std::int64_t v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw parse_error("malformed integer '" + std::string(tok) + "'");
    return v;
}

} // namespace

CnfFormula import_dimacs(std::string_view text) {
    CnfFormula formula;
    TokenStream ts{text};
    bool have_header = false;
    std::vector<Lit> clause;
    for (;;) {
        std::string_view tok = ts.next();
        if (tok.empty()) break;
        if (tok == "c") {
            ts.skip_line();
            continue;
        }
        if (tok == "p") {
            if (ts.next() != "cnf") throw parse_error("expected 'p cnf' header");
            formula.set_num_vars(std::int32_t(to_int(ts.next())));
            to_int(ts.next());  // clause count; informative only
            have_header = true;
            continue;
        }
        if (!have_header) throw parse_error("clause before 'p cnf' header");
        const std::int64_t v = to_int(tok);
        if (v == 0) {
            formula.add_clause(clause);
            clause.clear();
        } else {
            clause.push_back(Lit(v));
        }
    }
    if (!clause.empty()) throw parse_error("unterminated clause");
    if (!have_header) throw parse_error("missing 'p cnf' header");
    return formula;
}

SolveOutcome import_model(std::string_view solver_output, std::int32_t num_vars) {
    SolveOutcome out;
    bool have_status = false;
    TokenStream ts{solver_output};
    for (;;) {
        std::string_view tok = ts.next();
        if (tok.empty()) break;
        if (tok == "c") {
            ts.skip_line();
            continue;
        }
        if (tok == "s") {
            const std::string_view st = ts.next();
            if (st == "SATISFIABLE") {
                out.status = SolveStatus::Sat;
                out.model.assign(std::size_t(num_vars) + 1, 0);
            } else if (st == "UNSATISFIABLE") {
                out.status = SolveStatus::Unsat;
            } else if (st == "UNKNOWN" || st == "INDETERMINATE") {
                out.status = SolveStatus::Budget;
            } else {
                throw parse_error("unknown solver status '" + std::string(st) + "'");
            }
            have_status = true;
            continue;
        }
        if (tok == "v") {
            if (!have_status || out.status != SolveStatus::Sat)
                throw parse_error("value line without SATISFIABLE status");
            continue;  // literals follow as ordinary tokens
        }
        if (have_status && out.status == SolveStatus::Sat) {
            const std::int64_t v = to_int(tok);
            if (v == 0) continue;
            const std::int64_t var = v < 0 ? -v : v;
            if (var > num_vars)
                throw parse_error("model literal " + std::to_string(v) +
                                  " outside variable range");
            out.model[std::size_t(var)] = v > 0 ? 1 : 0;
            continue;
        }
        ts.skip_line();
    }
    if (!have_status) throw parse_error("solver output has no status line");
    return out;
}

SolveOutcome SolveSession::solve_external(const SolveBudget&) {
    static std::atomic<unsigned> counter{0};
    const auto dir = std::filesystem::temp_directory_path();
    const std::string path =
        (dir / ("heesch-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter.fetch_add(1)) + ".cnf"))
            .string();
    {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw error("cannot write DIMACS file " + path);
        f << export_dimacs(formula_);
    }
    std::string command = config_.command;
    const std::string placeholder = "{}";
    if (const std::size_t at = command.find(placeholder); at != std::string::npos)
        command.replace(at, placeholder.size(), path);
    else
        command += " " + path;

    std::string output;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) {
        std::filesystem::remove(path);
        throw error("cannot run external solver: " + command);
    }
    char buf[4096];
    std::size_t n = 0;
    while ((n = ::fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
    ::pclose(pipe);
    std::filesystem::remove(path);

    SolveOutcome out = import_model(output, formula_.num_vars());
    if (out.status == SolveStatus::Sat && !model_satisfies(formula_, out.model))
        throw integrity_error("external solver model fails evaluation");
    return out;
}

} // namespace heesch
