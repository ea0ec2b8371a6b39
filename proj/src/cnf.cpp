#include "heesch/cnf.hpp"

#include "heesch/error.hpp"
#include "heesch/solver.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace heesch {

void CnfFormula::set_num_vars(std::int32_t n) {
    if (n < num_vars_)
        throw invalid_input("cannot shrink variable count");
    num_vars_ = n;
}

void CnfFormula::add_clause(std::span<const Lit> lits) {
    if (lits.empty()) throw invalid_input("empty clause");
    for (Lit l : lits) {
        const std::int32_t v = std::abs(l);
        if (l == 0 || v > num_vars_)
            throw invalid_input("literal " + std::to_string(l) +
                                " outside declared variable range");
    }
    pool_.insert(pool_.end(), lits.begin(), lits.end());
    starts_.push_back(std::uint32_t(pool_.size()));
}

void CnfFormula::reserve(std::size_t clauses, std::size_t literals) {
    starts_.reserve(clauses + 1);
    pool_.reserve(literals);
}

bool clause_satisfied(std::span<const Lit> clause, const Model& model) {
    for (Lit l : clause) {
        const bool val = model[std::size_t(std::abs(l))] != 0;
        if (val == (l > 0)) return true;
    }
    return false;
}

bool model_satisfies(const CnfFormula& formula, const Model& model) {
    if (std::int32_t(model.size()) < formula.num_vars() + 1) return false;
    for (std::size_t i = 0; i < formula.clause_count(); ++i)
        if (!clause_satisfied(formula.clause(i), model)) return false;
    return true;
}

SolveSession::SolveSession(SolverConfig config) : config_(std::move(config)) {
    if (!config_.use_external) builtin_ = std::make_unique<Solver>();
}

SolveSession::~SolveSession() = default;
SolveSession::SolveSession(SolveSession&&) noexcept = default;
SolveSession& SolveSession::operator=(SolveSession&&) noexcept = default;

void SolveSession::ensure_vars(std::int32_t count) {
    if (count > formula_.num_vars()) formula_.set_num_vars(count);
    if (builtin_) builtin_->ensure_vars(count);
}

std::int32_t SolveSession::new_var() {
    const std::int32_t v = formula_.new_var();
    if (builtin_) builtin_->ensure_vars(v);
    return v;
}

void SolveSession::add_clause(std::span<const Lit> lits) {
    if (lits.empty()) {
        empty_clause_seen_ = true;
        return;
    }
    formula_.add_clause(lits);
    if (builtin_) builtin_->add_clause(lits);
}

void SolveSession::load(const CnfFormula& formula) {
    ensure_vars(formula.num_vars());
    for (std::size_t i = 0; i < formula.clause_count(); ++i)
        add_clause(formula.clause(i));
}

SolveOutcome SolveSession::solve(const SolveBudget& budget) {
    if (empty_clause_seen_) return {SolveStatus::Unsat, {}, 0};
    if (config_.use_external) return solve_external(budget);

    std::chrono::steady_clock::time_point deadline{};
    if (budget.max_seconds > 0.0)
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(budget.max_seconds));
    const std::int64_t before = builtin_->conflicts();
    const Solver::Status st = builtin_->solve(budget.max_conflicts, deadline);

    SolveOutcome out;
    out.conflicts = builtin_->conflicts() - before;
    switch (st) {
    case Solver::Status::Unsat:
        out.status = SolveStatus::Unsat;
        return out;
    case Solver::Status::Budget:
        out.status = SolveStatus::Budget;
        return out;
    case Solver::Status::Sat: break;
    }
    out.status = SolveStatus::Sat;
    out.model.assign(std::size_t(formula_.num_vars()) + 1, 0);
    for (std::int32_t v = 1; v <= formula_.num_vars(); ++v)
        out.model[std::size_t(v)] = builtin_->model_value(v) ? 1 : 0;
    if (!model_satisfies(formula_, out.model))
        throw integrity_error("solver returned a model that fails evaluation");
    return out;
}

} // namespace heesch
