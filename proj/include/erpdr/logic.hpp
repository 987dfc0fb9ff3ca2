#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace erpdr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TautologyError : Error {
    using Error::Error;
};

// Kind partitioning is total; ordering of the enum values defines the
// canonical kind order used when sorting literals.
enum class VarKind : uint8_t { State = 0, Input, NextState, Aux, Tseitin };

const char* to_string(VarKind k);

class Variable {
public:
    Variable() = default;
    constexpr Variable(uint32_t id, VarKind kind) : id_(id), kind_(kind) {}

    [[nodiscard]] constexpr uint32_t id() const { return id_; }
    [[nodiscard]] constexpr VarKind kind() const { return kind_; }

    // Canonical key: kind-major, id-minor.
    [[nodiscard]] constexpr uint64_t key() const
    {
        return (static_cast<uint64_t>(kind_) << 32) | id_;
    }

    friend constexpr bool operator==(Variable a, Variable b) { return a.id_ == b.id_ && a.kind_ == b.kind_; }
    friend constexpr bool operator!=(Variable a, Variable b) { return !(a == b); }
    friend constexpr bool operator<(Variable a, Variable b) { return a.key() < b.key(); }

private:
    uint32_t id_ = 0;
    VarKind kind_ = VarKind::State;
};

class Literal {
public:
    Literal() = default;
    constexpr Literal(Variable var, bool negated = false) : var_(var), neg_(negated) {}

    [[nodiscard]] constexpr Variable var() const { return var_; }
    [[nodiscard]] constexpr bool negated() const { return neg_; }

    [[nodiscard]] constexpr Literal operator~() const { return Literal(var_, !neg_); }
    [[nodiscard]] constexpr Literal with_sign(bool negated) const { return Literal(var_, negated); }

    // (kind, index, polarity) canonical key; positive before negative.
    [[nodiscard]] constexpr uint64_t key() const { return (var_.key() << 1) | (neg_ ? 1 : 0); }

    friend constexpr bool operator==(Literal a, Literal b) { return a.var_ == b.var_ && a.neg_ == b.neg_; }
    friend constexpr bool operator!=(Literal a, Literal b) { return !(a == b); }
    friend constexpr bool operator<(Literal a, Literal b) { return a.key() < b.key(); }

private:
    Variable var_;
    bool neg_ = false;
};

std::string to_string(Variable v);
std::string to_string(Literal l);

namespace detail {

// Shared representation of Clause and Cube: a duplicate-free literal set
// ordered by (kind, index, polarity). Tautological input is rejected.
class LiteralSet {
public:
    LiteralSet() = default;
    explicit LiteralSet(std::vector<Literal> lits);
    LiteralSet(std::initializer_list<Literal> lits);

    [[nodiscard]] std::span<const Literal> literals() const { return lits_; }
    [[nodiscard]] size_t size() const { return lits_.size(); }
    [[nodiscard]] bool empty() const { return lits_.empty(); }
    [[nodiscard]] Literal operator[](size_t i) const { return lits_[i]; }
    [[nodiscard]] auto begin() const { return lits_.begin(); }
    [[nodiscard]] auto end() const { return lits_.end(); }

    [[nodiscard]] bool contains(Literal l) const;
    [[nodiscard]] bool contains_var(Variable v) const;
    [[nodiscard]] uint64_t hash() const { return hash_; }
    // Over-approximate variable signature for fast subset rejection.
    [[nodiscard]] uint64_t signature() const { return sig_; }

    friend bool operator==(const LiteralSet& a, const LiteralSet& b)
    {
        return a.hash_ == b.hash_ && a.lits_ == b.lits_;
    }
    friend bool operator!=(const LiteralSet& a, const LiteralSet& b) { return !(a == b); }
    friend bool operator<(const LiteralSet& a, const LiteralSet& b);

protected:
    std::vector<Literal> lits_;
    uint64_t hash_ = 0;
    uint64_t sig_ = 0;
};

} // namespace detail

class Clause;
class Cube;

// A disjunction of literals.
class Clause : public detail::LiteralSet {
public:
    using LiteralSet::LiteralSet;

    // The literal set {~l | l in *this} as a cube.
    [[nodiscard]] Cube negate() const;

    [[nodiscard]] Clause without(Literal l) const;
    [[nodiscard]] Clause with(Literal l) const;

    [[nodiscard]] std::string str() const;
};

// A conjunction of literals.
class Cube : public detail::LiteralSet {
public:
    using LiteralSet::LiteralSet;

    // The literal set {~l | l in *this} as a clause (De Morgan).
    [[nodiscard]] Clause negate() const;

    [[nodiscard]] std::string str() const;
};

// true iff literals(c1) is a subset of literals(c2).
bool clause_subsumes(const Clause& c1, const Clause& c2);

inline Clause negate_cube(const Cube& q) { return q.negate(); }
inline Cube negate_clause(const Clause& c) { return c.negate(); }

// Deduplicate and sort; throws TautologyError when both l and ~l are present.
Clause canonicalize(std::vector<Literal> lits);

// A duplicate-free set of clauses. Iteration order is insertion order;
// structural duplicates are rejected on insert.
class CnfFormula {
public:
    CnfFormula() = default;
    CnfFormula(std::initializer_list<Clause> clauses);

    // Returns false when an equal clause is already present.
    bool add(Clause c);
    // Removes the structurally equal clause; returns false when absent.
    bool remove(const Clause& c);
    [[nodiscard]] bool contains(const Clause& c) const;

    [[nodiscard]] size_t size() const { return clauses_.size(); }
    [[nodiscard]] bool empty() const { return clauses_.empty(); }
    [[nodiscard]] auto begin() const { return clauses_.begin(); }
    [[nodiscard]] auto end() const { return clauses_.end(); }
    [[nodiscard]] const Clause& operator[](size_t i) const { return clauses_[i]; }
    [[nodiscard]] const std::vector<Clause>& clauses() const { return clauses_; }

    // Canonically sorted copy of the clause list.
    [[nodiscard]] std::vector<Clause> sorted() const;

    friend bool operator==(const CnfFormula& a, const CnfFormula& b);

private:
    std::vector<Clause> clauses_;
    std::vector<uint32_t> index_; // positions sorted by clause order, for lookup
    [[nodiscard]] size_t lookup(const Clause& c) const; // index into index_, or npos
};

} // namespace erpdr
