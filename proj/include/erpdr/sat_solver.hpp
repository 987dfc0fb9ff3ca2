#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace erpdr::sat {

using Var = int32_t;
constexpr Var kVarUndef = -1;

// Literal as 2*var + sign, sign set for the negated polarity.
class Lit {
public:
    Lit() = default;
    Lit(Var v, bool sign = false) : x_(v + v + (sign ? 1 : 0)) {}

    [[nodiscard]] Var var() const { return x_ >> 1; }
    [[nodiscard]] bool sign() const { return x_ & 1; }
    [[nodiscard]] int index() const { return x_; }

    [[nodiscard]] Lit operator~() const
    {
        Lit p;
        p.x_ = x_ ^ 1;
        return p;
    }

    friend bool operator==(Lit a, Lit b) { return a.x_ == b.x_; }
    friend bool operator!=(Lit a, Lit b) { return a.x_ != b.x_; }
    friend bool operator<(Lit a, Lit b) { return a.x_ < b.x_; }

private:
    int32_t x_ = -2;
};

constexpr int8_t kTrue = 0, kFalse = 1, kUndef = 2;

enum class Status { Sat, Unsat, Undef };

// Incremental CDCL solver: two-watched-literal propagation, VSIDS decisions,
// phase saving, Luby restarts, activity-based learnt-clause reduction and
// assumption-based solving with final-conflict cores.
class Solver {
public:
    Solver();
    Solver(const Solver&) = delete;
    Solver& operator=(const Solver&) = delete;

    Var new_var();
    [[nodiscard]] int num_vars() const { return static_cast<int>(assigns_.size()); }

    // Returns false when the clause set became unsatisfiable at root level.
    bool add_clause(std::vector<Lit> lits);

    // max_conflicts < 0 means no budget; Undef is returned on budget exhaustion.
    Status solve(std::span<const Lit> assumptions, int64_t max_conflicts = -1);

    // Valid after Sat: total assignment.
    [[nodiscard]] bool model_value(Var v) const { return model_[static_cast<size_t>(v)] == kTrue; }
    [[nodiscard]] bool model_value(Lit p) const { return model_value(p.var()) != p.sign(); }

    // Valid after Unsat: subset of the assumptions sufficient for unsatisfiability.
    [[nodiscard]] const std::vector<Lit>& core() const { return core_; }

    [[nodiscard]] bool okay() const { return ok_; }

    uint64_t solves = 0, conflicts = 0, propagations = 0, decisions = 0;

private:
    using CRef = uint32_t;
    static constexpr CRef kCRefUndef = 0xffffffff;

    struct Watcher {
        CRef cref;
        Lit blocker;
    };

    struct VarData {
        CRef reason = kCRefUndef;
        int level = 0;
    };

    // Clause arena. Layout per clause: header word (size << 2 | learnt << 1 |
    // dead), then for learnt clauses one activity word, then the literals.
    std::vector<uint32_t> arena_;
    std::vector<CRef> clauses_;
    std::vector<CRef> learnts_;

    [[nodiscard]] uint32_t clause_size(CRef c) const { return arena_[c] >> 2; }
    [[nodiscard]] bool clause_learnt(CRef c) const { return (arena_[c] >> 1) & 1; }
    [[nodiscard]] bool clause_dead(CRef c) const { return arena_[c] & 1; }
    void mark_dead(CRef c) { arena_[c] |= 1; }
    [[nodiscard]] float& clause_act(CRef c) { return reinterpret_cast<float&>(arena_[c + 1]); }
    [[nodiscard]] Lit* clause_lits(CRef c)
    {
        return reinterpret_cast<Lit*>(&arena_[c + 1 + (clause_learnt(c) ? 1 : 0)]);
    }
    [[nodiscard]] const Lit* clause_lits(CRef c) const
    {
        return reinterpret_cast<const Lit*>(&arena_[c + 1 + (clause_learnt(c) ? 1 : 0)]);
    }
    CRef alloc_clause(const std::vector<Lit>& lits, bool learnt);

    std::vector<int8_t> assigns_;
    std::vector<int8_t> model_;
    std::vector<int8_t> saved_phase_;
    std::vector<VarData> vardata_;
    std::vector<std::vector<Watcher>> watches_; // indexed by Lit::index()
    std::vector<Lit> trail_;
    std::vector<int> trail_lim_;
    size_t qhead_ = 0;

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    double cla_inc_ = 1.0;
    std::vector<int> heap_;
    std::vector<int> heap_pos_;

    std::vector<Lit> assumptions_;
    std::vector<Lit> core_;
    std::vector<char> seen_;
    std::vector<Lit> analyze_stack_;

    bool ok_ = true;
    uint64_t max_learnts_adjust_ = 100;

    [[nodiscard]] int8_t value(Var v) const { return assigns_[static_cast<size_t>(v)]; }
    [[nodiscard]] int8_t value(Lit p) const
    {
        int8_t a = assigns_[static_cast<size_t>(p.var())];
        return a == kUndef ? kUndef : static_cast<int8_t>(a ^ static_cast<int8_t>(p.sign()));
    }
    [[nodiscard]] int level(Var v) const { return vardata_[static_cast<size_t>(v)].level; }
    [[nodiscard]] int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    void attach(CRef c);
    void detach(CRef c);
    void enqueue(Lit p, CRef from);
    CRef propagate();
    void cancel_until(int lvl);
    void analyze(CRef confl, std::vector<Lit>& out_learnt, int& out_btlevel);
    bool lit_redundant(Lit p, uint32_t abstract_levels);
    void analyze_final(Lit p);
    Lit pick_branch_lit();
    void new_decision_level() { trail_lim_.push_back(static_cast<int>(trail_.size())); }

    void var_bump(Var v);
    void var_decay() { var_inc_ /= 0.95; }
    void cla_bump(CRef c);
    void cla_decay() { cla_inc_ /= 0.999; }
    void heap_insert(Var v);
    void heap_up(int i);
    void heap_down(int i);
    Var heap_pop();
    [[nodiscard]] bool heap_contains(Var v) const { return heap_pos_[static_cast<size_t>(v)] >= 0; }

    void reduce_db();
    Status search(int64_t conflict_budget, int max_learnt);
};

} // namespace erpdr::sat
