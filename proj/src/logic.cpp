#include "erpdr/logic.hpp"

#include <algorithm>
#include <sstream>

namespace erpdr {

const char* to_string(VarKind k)
{
    switch (k) {
    case VarKind::State: return "state";
    case VarKind::Input: return "input";
    case VarKind::NextState: return "next";
    case VarKind::Aux: return "aux";
    case VarKind::Tseitin: return "tseitin";
    }
    return "?";
}

std::string to_string(Variable v)
{
    std::ostringstream os;
    os << to_string(v.kind()) << v.id();
    return os.str();
}

std::string to_string(Literal l)
{
    return (l.negated() ? "~" : "") + to_string(l.var());
}

namespace detail {

namespace {

uint64_t mix(uint64_t h, uint64_t x)
{
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace

LiteralSet::LiteralSet(std::vector<Literal> lits) : lits_(std::move(lits))
{
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
    for (size_t i = 1; i < lits_.size(); ++i) {
        if (lits_[i].var() == lits_[i - 1].var())
            throw TautologyError("complementary pair on " + to_string(lits_[i].var()));
    }
    hash_ = 0x51ed270b;
    for (Literal l : lits_) {
        hash_ = mix(hash_, l.key());
        sig_ |= 1ULL << (l.var().key() % 64);
    }
}

LiteralSet::LiteralSet(std::initializer_list<Literal> lits)
    : LiteralSet(std::vector<Literal>(lits))
{
}

bool LiteralSet::contains(Literal l) const
{
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool LiteralSet::contains_var(Variable v) const
{
    auto it = std::lower_bound(lits_.begin(), lits_.end(), Literal(v, false));
    return it != lits_.end() && it->var() == v;
}

bool operator<(const LiteralSet& a, const LiteralSet& b)
{
    return std::lexicographical_compare(a.lits_.begin(), a.lits_.end(),
                                        b.lits_.begin(), b.lits_.end());
}

} // namespace detail

Cube Clause::negate() const
{
    std::vector<Literal> out;
    out.reserve(size());
    for (Literal l : lits_)
        out.push_back(~l);
    return Cube(std::move(out));
}

Clause Clause::without(Literal l) const
{
    std::vector<Literal> out;
    out.reserve(size());
    for (Literal x : lits_)
        if (x != l)
            out.push_back(x);
    return Clause(std::move(out));
}

Clause Clause::with(Literal l) const
{
    std::vector<Literal> out(lits_.begin(), lits_.end());
    out.push_back(l);
    return Clause(std::move(out));
}

std::string Clause::str() const
{
    std::string s = "(";
    for (size_t i = 0; i < size(); ++i) {
        if (i)
            s += " | ";
        s += to_string(lits_[i]);
    }
    return s + ")";
}

Clause Cube::negate() const
{
    std::vector<Literal> out;
    out.reserve(size());
    for (Literal l : lits_)
        out.push_back(~l);
    return Clause(std::move(out));
}

std::string Cube::str() const
{
    std::string s = "(";
    for (size_t i = 0; i < size(); ++i) {
        if (i)
            s += " & ";
        s += to_string(lits_[i]);
    }
    return s + ")";
}

bool clause_subsumes(const Clause& c1, const Clause& c2)
{
    if (c1.size() > c2.size())
        return false;
    if (c1.signature() & ~c2.signature())
        return false;
    return std::includes(c2.begin(), c2.end(), c1.begin(), c1.end());
}

Clause canonicalize(std::vector<Literal> lits)
{
    return Clause(std::move(lits));
}

CnfFormula::CnfFormula(std::initializer_list<Clause> clauses)
{
    for (const Clause& c : clauses)
        add(c);
}

size_t CnfFormula::lookup(const Clause& c) const
{
    auto less = [&](uint32_t i, const Clause& x) { return clauses_[i] < x; };
    auto it = std::lower_bound(index_.begin(), index_.end(), c, less);
    if (it == index_.end() || !(clauses_[*it] == c))
        return static_cast<size_t>(-1);
    return static_cast<size_t>(it - index_.begin());
}

bool CnfFormula::contains(const Clause& c) const
{
    return lookup(c) != static_cast<size_t>(-1);
}

bool CnfFormula::add(Clause c)
{
    if (contains(c))
        return false;
    auto less = [&](uint32_t i, const Clause& x) { return clauses_[i] < x; };
    auto it = std::lower_bound(index_.begin(), index_.end(), c, less);
    clauses_.push_back(std::move(c));
    index_.insert(it, static_cast<uint32_t>(clauses_.size() - 1));
    return true;
}

bool CnfFormula::remove(const Clause& c)
{
    size_t pos = lookup(c);
    if (pos == static_cast<size_t>(-1))
        return false;
    uint32_t slot = index_[pos];
    index_.erase(index_.begin() + static_cast<long>(pos));
    clauses_.erase(clauses_.begin() + slot);
    for (uint32_t& i : index_)
        if (i > slot)
            --i;
    return true;
}

std::vector<Clause> CnfFormula::sorted() const
{
    std::vector<Clause> out;
    out.reserve(clauses_.size());
    for (uint32_t i : index_)
        out.push_back(clauses_[i]);
    return out;
}

bool operator==(const CnfFormula& a, const CnfFormula& b)
{
    if (a.size() != b.size())
        return false;
    return a.sorted() == b.sorted();
}

} // namespace erpdr
