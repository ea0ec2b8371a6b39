#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

namespace heesch {

// Complete SAT decision procedure: conflict-driven clause learning with
// two-watched-literal propagation, first-UIP learning, VSIDS branching
// with phase saving, Luby restarts, and activity-based deletion of
// learnt clauses.  Fully deterministic: ties break on variable index
// and there is no randomization.
class Solver {
public:
    enum class Status { Sat, Unsat, Budget };

    // External literals use the signed convention: +v / -v with v >= 1.
    using ExtLit = std::int32_t;

    Solver();

    void ensure_vars(int count);
    int num_vars() const { return int(assigns_.size()); }

    // Returns false once the formula is unsatisfiable at the root.
    bool add_clause(std::span<const ExtLit> lits);

    // max_conflicts 0 means unlimited; a default-constructed deadline
    // means none.  Clauses may be added between calls; learnt clauses
    // persist.
    Status solve(std::int64_t max_conflicts = 0,
                 std::chrono::steady_clock::time_point deadline = {});

    bool model_value(int var) const;  // valid after a Sat result
    std::int64_t conflicts() const { return conflicts_; }

private:
    using Lit = std::uint32_t;  // 2*var + sign, variables 0-based
    using CRef = std::uint32_t;
    static constexpr CRef kNullRef = 0xffffffffu;
    static constexpr Lit kLitUndef = 0xffffffffu;

    static constexpr Lit mk_lit(int var, bool neg) {
        return Lit(var) << 1 | Lit(neg);
    }
    static constexpr int var_of(Lit l) { return int(l >> 1); }
    static constexpr bool sign_of(Lit l) { return l & 1; }
    static constexpr Lit negate(Lit l) { return l ^ 1; }

    struct Watcher {
        CRef cref;
        Lit blocker;
    };

    // Clause layout in the arena: header word, activity word when
    // learnt, then the literals.
    std::uint32_t clause_size(CRef c) const { return arena_[c] >> 2; }
    bool clause_learnt(CRef c) const { return arena_[c] & 1; }
    bool clause_dead(CRef c) const { return arena_[c] & 2; }
    Lit* clause_lits(CRef c) { return &arena_[c + 1 + (arena_[c] & 1)]; }
    const Lit* clause_lits(CRef c) const { return &arena_[c + 1 + (arena_[c] & 1)]; }
    float clause_act(CRef c) const;
    void set_clause_act(CRef c, float a);

    int value_lit(Lit l) const {
        const int v = assigns_[std::size_t(var_of(l))];
        return sign_of(l) ? -v : v;
    }

    CRef alloc_clause(std::span<const Lit> lits, bool learnt);
    void attach(CRef c);
    void detach(CRef c);
    void remove_clause(CRef c);
    void unchecked_enqueue(Lit l, CRef reason);
    CRef propagate();
    void cancel_until(int level);
    int decision_level() const { return int(trail_lim_.size()); }
    void analyze(CRef conflict, std::vector<Lit>& learnt, int& out_level);
    bool literal_redundant(Lit l) const;
    void bump_var(int var);
    void decay_var_activity();
    void bump_clause(CRef c);
    void decay_clause_activity();
    void reduce_learnts();
    void collect_garbage();
    CRef relocate(CRef c, std::vector<std::uint32_t>& to) const;
    Lit pick_branch();
    void heap_insert(int var);
    void heap_update(int var);
    int heap_pop();
    bool heap_less(int a, int b) const;
    void heap_sift_up(std::size_t i);
    void heap_sift_down(std::size_t i);
    static std::int64_t luby(std::int64_t i);

    bool ok_ = true;
    std::vector<std::uint32_t> arena_;
    std::size_t wasted_ = 0;
    std::vector<CRef> original_;
    std::vector<CRef> learnts_;
    std::vector<std::vector<Watcher>> watches_;  // indexed by literal
    std::vector<std::int8_t> assigns_;           // +1 / -1 / 0 per var
    std::vector<std::int8_t> model_;
    std::vector<std::uint8_t> polarity_;
    std::vector<CRef> reason_;
    std::vector<std::int32_t> level_;
    std::vector<Lit> trail_;
    std::vector<std::int32_t> trail_lim_;
    std::size_t qhead_ = 0;

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    std::vector<std::int32_t> heap_;
    std::vector<std::int32_t> heap_pos_;

    double cla_inc_ = 1.0;
    double max_learnts_ = 0.0;

    std::vector<std::uint8_t> seen_;
    std::int64_t conflicts_ = 0;
};

} // namespace heesch
