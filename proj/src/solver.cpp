#include "heesch/solver.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>

namespace heesch {

namespace {
constexpr double kVarDecay = 1.0 / 0.95;
constexpr double kClauseDecay = 1.0 / 0.999;
constexpr std::int64_t kRestartUnit = 128;
} // namespace

Solver::Solver() = default;

void Solver::ensure_vars(int count) {
    while (num_vars() < count) {
        const int v = num_vars();
        assigns_.push_back(0);
        polarity_.push_back(0);
        reason_.push_back(kNullRef);
        level_.push_back(0);
        activity_.push_back(0.0);
        seen_.push_back(0);
        heap_pos_.push_back(-1);
        watches_.emplace_back();
        watches_.emplace_back();
        heap_insert(v);
    }
}

float Solver::clause_act(CRef c) const {
    return std::bit_cast<float>(arena_[c + 1]);
}

void Solver::set_clause_act(CRef c, float a) {
    arena_[c + 1] = std::bit_cast<std::uint32_t>(a);
}

Solver::CRef Solver::alloc_clause(std::span<const Lit> lits, bool learnt) {
    const CRef c = CRef(arena_.size());
    arena_.push_back(std::uint32_t(lits.size()) << 2 | std::uint32_t(learnt));
    if (learnt) arena_.push_back(std::bit_cast<std::uint32_t>(1.0f));
    arena_.insert(arena_.end(), lits.begin(), lits.end());
    return c;
}

void Solver::attach(CRef c) {
    const Lit* l = clause_lits(c);
    watches_[negate(l[0])].push_back({c, l[1]});
    watches_[negate(l[1])].push_back({c, l[0]});
}

void Solver::detach(CRef c) {
    const Lit* l = clause_lits(c);
    for (Lit w : {negate(l[0]), negate(l[1])}) {
        auto& list = watches_[w];
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i].cref == c) {
                list[i] = list.back();
                list.pop_back();
                break;
            }
        }
    }
}

void Solver::remove_clause(CRef c) {
    detach(c);
    wasted_ += 1 + (arena_[c] & 1) + clause_size(c);
    arena_[c] |= 2;  // dead
}

bool Solver::add_clause(std::span<const ExtLit> ext) {
    if (!ok_) return false;
    assert(decision_level() == 0);
    std::vector<Lit> lits;
    lits.reserve(ext.size());
    int max_var = 0;
    for (ExtLit e : ext) {
        assert(e != 0);
        max_var = std::max(max_var, std::abs(e));
    }
    ensure_vars(max_var);
    for (ExtLit e : ext) lits.push_back(mk_lit(std::abs(e) - 1, e < 0));
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    // Drop root-false literals, skip satisfied or tautological clauses.
    std::vector<Lit> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i + 1 < lits.size() && lits[i + 1] == negate(lits[i])) return true;
        if (i > 0 && lits[i] == negate(lits[i - 1])) return true;
        const int val = value_lit(lits[i]);
        if (val > 0) return true;
        if (val == 0) kept.push_back(lits[i]);
    }
    if (kept.empty()) {
        ok_ = false;
        return false;
    }
    if (kept.size() == 1) {
        unchecked_enqueue(kept[0], kNullRef);
        if (propagate() != kNullRef) ok_ = false;
        return ok_;
    }
    const CRef c = alloc_clause(kept, false);
    original_.push_back(c);
    attach(c);
    return true;
}

void Solver::unchecked_enqueue(Lit l, CRef reason) {
    const int v = var_of(l);
    assigns_[std::size_t(v)] = sign_of(l) ? -1 : 1;
    level_[std::size_t(v)] = decision_level();
    reason_[std::size_t(v)] = reason;
    trail_.push_back(l);
}

Solver::CRef Solver::propagate() {
    while (qhead_ < trail_.size()) {
        const Lit p = trail_[qhead_++];  // p became true
        auto& list = watches_[p];
        std::size_t i = 0, j = 0;
        while (i < list.size()) {
            const Watcher w = list[i];
            if (value_lit(w.blocker) > 0) {
                list[j++] = list[i++];
                continue;
            }
            const CRef c = w.cref;
            if (clause_dead(c)) {
                ++i;
                continue;
            }
            Lit* l = clause_lits(c);
            const Lit false_lit = negate(p);
            if (l[0] == false_lit) std::swap(l[0], l[1]);
            ++i;
            if (value_lit(l[0]) > 0) {
                list[j++] = {c, l[0]};
                continue;
            }
            const std::uint32_t size = clause_size(c);
            bool moved = false;
            for (std::uint32_t k = 2; k < size; ++k) {
                if (value_lit(l[k]) >= 0) {
                    std::swap(l[1], l[k]);
                    watches_[negate(l[1])].push_back({c, l[0]});
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            // Unit or conflicting.
            list[j++] = {c, l[0]};
            if (value_lit(l[0]) < 0) {
                while (i < list.size()) list[j++] = list[i++];
                list.resize(j);
                qhead_ = trail_.size();
                return c;
            }
            unchecked_enqueue(l[0], c);
        }
        list.resize(j);
    }
    return kNullRef;
}

void Solver::cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    const std::size_t bound = std::size_t(trail_lim_[std::size_t(lvl)]);
    for (std::size_t i = trail_.size(); i-- > bound;) {
        const int v = var_of(trail_[i]);
        polarity_[std::size_t(v)] = std::uint8_t(assigns_[std::size_t(v)] > 0);
        assigns_[std::size_t(v)] = 0;
        reason_[std::size_t(v)] = kNullRef;
        if (heap_pos_[std::size_t(v)] < 0) heap_insert(v);
    }
    trail_.resize(bound);
    trail_lim_.resize(std::size_t(lvl));
    qhead_ = trail_.size();
}

bool Solver::literal_redundant(Lit l) const {
    // A learnt literal is redundant when its reason's other literals are
    // all already in the clause (seen) or fixed at the root.
    const CRef r = reason_[std::size_t(var_of(l))];
    if (r == kNullRef) return false;
    const Lit* lits = clause_lits(r);
    const std::uint32_t size = clause_size(r);
    for (std::uint32_t k = 0; k < size; ++k) {
        const int v = var_of(lits[k]);
        if (v == var_of(l)) continue;
        if (!seen_[std::size_t(v)] && level_[std::size_t(v)] > 0) return false;
    }
    return true;
}

void Solver::analyze(CRef conflict, std::vector<Lit>& learnt, int& out_level) {
    learnt.assign(1, 0);  // slot for the asserting literal
    int counter = 0;
    Lit p = 0;
    bool have_p = false;
    std::size_t index = trail_.size();
    CRef reason = conflict;
    std::vector<int> to_clear;

    for (;;) {
        assert(reason != kNullRef);
        if (clause_learnt(reason)) bump_clause(reason);
        const Lit* lits = clause_lits(reason);
        const std::uint32_t size = clause_size(reason);
        // For a reason clause the implied literal sits at index 0 and is
        // the literal being resolved on; skip it.
        for (std::uint32_t k = have_p ? 1 : 0; k < size; ++k) {
            const int v = var_of(lits[k]);
            if (seen_[std::size_t(v)] || level_[std::size_t(v)] == 0) continue;
            seen_[std::size_t(v)] = 1;
            to_clear.push_back(v);
            bump_var(v);
            if (level_[std::size_t(v)] >= decision_level())
                ++counter;
            else
                learnt.push_back(lits[k]);
        }
        // Next current-level literal to resolve on.
        while (!seen_[std::size_t(var_of(trail_[index - 1]))]) --index;
        p = trail_[--index];
        seen_[std::size_t(var_of(p))] = 0;
        have_p = true;
        if (--counter == 0) break;
        reason = reason_[std::size_t(var_of(p))];
    }
    learnt[0] = negate(p);

    // Minimize: drop redundant non-asserting literals.
    std::size_t w = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i)
        if (!literal_redundant(learnt[i])) learnt[w++] = learnt[i];
    learnt.resize(w);

    out_level = 0;
    if (learnt.size() > 1) {
        std::size_t max_i = 1;
        for (std::size_t i = 2; i < learnt.size(); ++i)
            if (level_[std::size_t(var_of(learnt[i]))] >
                level_[std::size_t(var_of(learnt[max_i]))])
                max_i = i;
        std::swap(learnt[1], learnt[max_i]);
        out_level = level_[std::size_t(var_of(learnt[1]))];
    }

    for (int v : to_clear) seen_[std::size_t(v)] = 0;
}

void Solver::bump_var(int var) {
    activity_[std::size_t(var)] += var_inc_;
    if (activity_[std::size_t(var)] > 1e100) {
        for (double& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_pos_[std::size_t(var)] >= 0) heap_update(var);
}

void Solver::decay_var_activity() { var_inc_ *= kVarDecay; }

void Solver::bump_clause(CRef c) {
    float a = clause_act(c) + float(cla_inc_);
    set_clause_act(c, a);
    if (a > 1e20f) {
        for (CRef lc : learnts_)
            if (!clause_dead(lc)) set_clause_act(lc, clause_act(lc) * 1e-20f);
        cla_inc_ *= 1e-20;
    }
}

void Solver::decay_clause_activity() { cla_inc_ *= kClauseDecay; }

void Solver::reduce_learnts() {
    // Keep binary, locked, and high-activity clauses; drop half the rest.
    std::vector<CRef> cands;
    for (CRef c : learnts_) {
        if (clause_dead(c)) continue;
        const Lit* l = clause_lits(c);
        const bool locked = value_lit(l[0]) > 0 &&
                            reason_[std::size_t(var_of(l[0]))] == c;
        if (clause_size(c) > 2 && !locked) cands.push_back(c);
    }
    std::sort(cands.begin(), cands.end(), [&](CRef a, CRef b) {
        if (clause_act(a) != clause_act(b)) return clause_act(a) < clause_act(b);
        return a < b;
    });
    for (std::size_t i = 0; i < cands.size() / 2; ++i) remove_clause(cands[i]);
    std::erase_if(learnts_, [&](CRef c) { return clause_dead(c); });
    if (wasted_ * 3 > arena_.size()) collect_garbage();
}

Solver::CRef Solver::relocate(CRef c, std::vector<std::uint32_t>& to) const {
    const CRef nc = CRef(to.size());
    const std::uint32_t words = 1 + (arena_[c] & 1) + clause_size(c);
    for (std::uint32_t k = 0; k < words; ++k) to.push_back(arena_[c + k]);
    return nc;
}

void Solver::collect_garbage() {
    std::vector<std::uint32_t> fresh;
    fresh.reserve(arena_.size() - wasted_);
    std::vector<CRef> remap_from;
    std::vector<CRef> remap_to;
    auto move_all = [&](std::vector<CRef>& list) {
        for (CRef& c : list) {
            const CRef nc = relocate(c, fresh);
            remap_from.push_back(c);
            remap_to.push_back(nc);
            c = nc;
        }
    };
    move_all(original_);
    move_all(learnts_);
    // Remap watches and reasons via binary search over the old refs.
    std::vector<std::size_t> order(remap_from.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return remap_from[a] < remap_from[b];
    });
    std::vector<CRef> sorted_from(order.size()), sorted_to(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted_from[i] = remap_from[order[i]];
        sorted_to[i] = remap_to[order[i]];
    }
    auto remap = [&](CRef c) {
        const auto it = std::lower_bound(sorted_from.begin(), sorted_from.end(), c);
        assert(it != sorted_from.end() && *it == c);
        return sorted_to[std::size_t(it - sorted_from.begin())];
    };
    for (auto& list : watches_)
        for (Watcher& w : list) w.cref = remap(w.cref);
    for (std::size_t v = 0; v < reason_.size(); ++v)
        if (reason_[v] != kNullRef) reason_[v] = remap(reason_[v]);
    arena_ = std::move(fresh);
    wasted_ = 0;
}

bool Solver::heap_less(int a, int b) const {
    const double aa = activity_[std::size_t(a)], ab = activity_[std::size_t(b)];
    return aa > ab || (aa == ab && a < b);
}

void Solver::heap_sift_up(std::size_t i) {
    const int v = heap_[i];
    while (i > 0) {
        const std::size_t parent = (i - 1) / 2;
        if (!heap_less(v, heap_[parent])) break;
        heap_[i] = heap_[parent];
        heap_pos_[std::size_t(heap_[i])] = std::int32_t(i);
        i = parent;
    }
    heap_[i] = v;
    heap_pos_[std::size_t(v)] = std::int32_t(i);
}

void Solver::heap_sift_down(std::size_t i) {
    const int v = heap_[i];
    const std::size_t n = heap_.size();
    for (;;) {
        std::size_t child = 2 * i + 1;
        if (child >= n) break;
        if (child + 1 < n && heap_less(heap_[child + 1], heap_[child])) ++child;
        if (!heap_less(heap_[child], v)) break;
        heap_[i] = heap_[child];
        heap_pos_[std::size_t(heap_[i])] = std::int32_t(i);
        i = child;
    }
    heap_[i] = v;
    heap_pos_[std::size_t(v)] = std::int32_t(i);
}

void Solver::heap_insert(int var) {
    heap_.push_back(var);
    heap_pos_[std::size_t(var)] = std::int32_t(heap_.size() - 1);
    heap_sift_up(heap_.size() - 1);
}

void Solver::heap_update(int var) {
    heap_sift_up(std::size_t(heap_pos_[std::size_t(var)]));
}

int Solver::heap_pop() {
    const int v = heap_[0];
    heap_pos_[std::size_t(v)] = -1;
    if (heap_.size() > 1) {
        heap_[0] = heap_.back();
        heap_pos_[std::size_t(heap_[0])] = 0;
        heap_.pop_back();
        heap_sift_down(0);
    } else {
        heap_.pop_back();
    }
    return v;
}

Solver::Lit Solver::pick_branch() {
    while (!heap_.empty()) {
        const int v = heap_pop();
        if (assigns_[std::size_t(v)] == 0)
            return mk_lit(v, polarity_[std::size_t(v)] == 0);
    }
    return kLitUndef;
}

std::int64_t Solver::luby(std::int64_t i) {
    // Luby restart sequence 1,1,2,1,1,2,4,...
    std::int64_t k = 1;
    while ((std::int64_t(1) << k) - 1 < i + 1) ++k;
    while ((std::int64_t(1) << k) - 1 != i + 1) {
        --k;
        i -= (std::int64_t(1) << k) - 1;
    }
    return std::int64_t(1) << (k - 1);
}

Solver::Status Solver::solve(std::int64_t max_conflicts,
                             std::chrono::steady_clock::time_point deadline) {
    if (!ok_) return Status::Unsat;
    if (propagate() != kNullRef) {
        ok_ = false;
        return Status::Unsat;
    }
    if (max_learnts_ <= 0.0)
        max_learnts_ = std::max(4000.0, double(original_.size()) / 3.0);
    const bool has_deadline = deadline != std::chrono::steady_clock::time_point{};
    const std::int64_t conflict_cap =
        max_conflicts > 0 ? conflicts_ + max_conflicts : 0;

    std::int64_t restart = 0;
    std::int64_t restart_budget = luby(restart) * kRestartUnit;
    std::int64_t restart_conflicts = 0;
    std::vector<Lit> learnt;

    for (;;) {
        const CRef conflict = propagate();
#ifdef HEESCH_SOLVER_PARANOID
        if (conflict == kNullRef) {
            for (CRef c : original_) {
                const Lit* l = clause_lits(c);
                const std::uint32_t size = clause_size(c);
                int undef = 0, sat = 0;
                for (std::uint32_t k = 0; k < size; ++k) {
                    if (value_lit(l[k]) > 0) ++sat;
                    if (value_lit(l[k]) == 0) ++undef;
                }
                if (sat == 0 && undef <= 1) {
                    std::fprintf(stderr,
                                 "PARANOID: clause %u size %u undef %d at level %d "
                                 "conflicts %lld (w0=%d w1=%d)\n",
                                 c, size, undef, decision_level(),
                                 (long long)conflicts_, value_lit(l[0]),
                                 value_lit(l[1]));
                    std::abort();
                }
            }
        }
#endif
        if (conflict != kNullRef) {
            ++conflicts_;
            ++restart_conflicts;
            if (decision_level() == 0) {
                ok_ = false;
                return Status::Unsat;
            }
            int back_level = 0;
            analyze(conflict, learnt, back_level);
            cancel_until(back_level);
            if (learnt.size() == 1) {
                unchecked_enqueue(learnt[0], kNullRef);
            } else {
                const CRef c = alloc_clause(learnt, true);
                learnts_.push_back(c);
                attach(c);
                bump_clause(c);
                unchecked_enqueue(learnt[0], c);
            }
            decay_var_activity();
            decay_clause_activity();
            if (conflict_cap && conflicts_ >= conflict_cap) {
                cancel_until(0);
                return Status::Budget;
            }
            if (has_deadline && (conflicts_ & 1023) == 0 &&
                std::chrono::steady_clock::now() >= deadline) {
                cancel_until(0);
                return Status::Budget;
            }
        } else {
            if (restart_conflicts >= restart_budget) {
                restart_conflicts = 0;
                restart_budget = luby(++restart) * kRestartUnit;
                cancel_until(0);
                continue;
            }
            if (double(learnts_.size()) >= max_learnts_ + double(trail_.size())) {
                reduce_learnts();
                max_learnts_ *= 1.05;
            }
            const Lit next = pick_branch();
            if (next == kLitUndef) {
                model_.assign(assigns_.begin(), assigns_.end());
                cancel_until(0);
                return Status::Sat;
            }
            trail_lim_.push_back(std::int32_t(trail_.size()));
            unchecked_enqueue(next, kNullRef);
        }
    }
}

bool Solver::model_value(int var) const {
    return model_[std::size_t(var - 1)] > 0;
}

} // namespace heesch
