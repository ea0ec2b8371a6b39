#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace heesch {

// Signed literal: +v / -v with variable ids starting at 1.
using Lit = std::int32_t;

// Clause database in flat storage: variable count plus a sequence of
// nonempty clauses.
class CnfFormula {
public:
    std::int32_t num_vars() const { return num_vars_; }
    void set_num_vars(std::int32_t n);
    std::int32_t new_var() { return ++num_vars_; }

    // Throws invalid_input on an empty clause or an out-of-range literal.
    void add_clause(std::span<const Lit> lits);

    std::size_t clause_count() const { return starts_.size() - 1; }
    std::span<const Lit> clause(std::size_t i) const {
        return {pool_.data() + starts_[i], pool_.data() + starts_[i + 1]};
    }
    void reserve(std::size_t clauses, std::size_t literals);

private:
    std::int32_t num_vars_ = 0;
    std::vector<Lit> pool_;
    std::vector<std::uint32_t> starts_{0};
};

// model[v] holds the value of variable v (index 0 unused).
using Model = std::vector<std::uint8_t>;

bool clause_satisfied(std::span<const Lit> clause, const Model& model);
bool model_satisfies(const CnfFormula& formula, const Model& model);

enum class SolveStatus { Sat, Unsat, Budget };

struct SolveBudget {
    std::int64_t max_conflicts = 0;  // per solve call; 0 = unlimited
    double max_seconds = 0.0;        // per solve call; 0 = unlimited
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Unsat;
    Model model;  // populated when status == Sat
    std::int64_t conflicts = 0;
};

struct SolverConfig {
    bool use_external = false;
    // Command template for an external solver; "{}" is replaced by the
    // DIMACS path (appended when absent).  Output must follow SAT-
    // competition conventions ("s ..." status line, "v ..." value lines).
    std::string command;
};

class Solver;

// Clause container bound to a decision procedure.  Clauses added between
// solve calls persist; an empty clause makes the session permanently
// unsatisfiable.
class SolveSession {
public:
    explicit SolveSession(SolverConfig config = {});
    ~SolveSession();
    SolveSession(SolveSession&&) noexcept;
    SolveSession& operator=(SolveSession&&) noexcept;

    void ensure_vars(std::int32_t count);
    std::int32_t new_var();
    void add_clause(std::span<const Lit> lits);
    void add_clause(std::initializer_list<Lit> lits) {
        add_clause(std::span<const Lit>(lits.begin(), lits.size()));
    }
    void load(const CnfFormula& formula);

    SolveOutcome solve(const SolveBudget& budget = {});

    const CnfFormula& formula() const { return formula_; }

private:
    SolveOutcome solve_external(const SolveBudget& budget);

    SolverConfig config_;
    CnfFormula formula_;
    std::unique_ptr<Solver> builtin_;
    bool empty_clause_seen_ = false;
    std::int64_t conflicts_before_ = 0;
};

// DIMACS interchange: "p cnf V C" header, 0-terminated clause lines.
std::string export_dimacs(const CnfFormula& formula);
CnfFormula import_dimacs(std::string_view text);

// Parses SAT-competition solver output.  Variables not mentioned in the
// value lines default to false.  Throws parse_error on malformed text.
SolveOutcome import_model(std::string_view solver_output, std::int32_t num_vars);

} // namespace heesch
