#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace sudocsp {

using VariableId = int;

// A domain is a set of values 1..max_value stored as a bitmask: bit (v-1)
// set means value v is present. Iteration is always in ascending value
// order so that runs are reproducible.
using DomainMask = std::uint32_t;

inline constexpr int kMaxValue = 32;

constexpr DomainMask value_bit(int value) {
    return DomainMask{1} << (value - 1);
}

constexpr DomainMask full_domain(int max_value) {
    return max_value == kMaxValue ? ~DomainMask{0}
                                  : (DomainMask{1} << max_value) - 1;
}

constexpr bool mask_contains(DomainMask m, int value) {
    return (m & value_bit(value)) != 0;
}

constexpr int mask_size(DomainMask m) {
    return std::popcount(m);
}

// Smallest value present in a non-empty mask.
constexpr int lowest_value(DomainMask m) {
    return std::countr_zero(m) + 1;
}

// Ascending range over the values of a mask: for (int v : values_in(m)) ...
class ValueRange {
public:
    class iterator {
    public:
        explicit iterator(DomainMask m) : m_(m) {}
        int operator*() const { return lowest_value(m_); }
        iterator& operator++() {
            m_ &= m_ - 1;
            return *this;
        }
        bool operator!=(const iterator& other) const { return m_ != other.m_; }

    private:
        DomainMask m_;
    };

    explicit ValueRange(DomainMask m) : m_(m) {}
    iterator begin() const { return iterator(m_); }
    iterator end() const { return iterator(0); }

private:
    DomainMask m_;
};

inline ValueRange values_in(DomainMask m) {
    return ValueRange(m);
}

// Binary relation over value pairs, stored as one support mask per left
// value: support(a) is the set of right values b with (a, b) allowed.
class Relation {
public:
    Relation() = default;

    template <typename Pred>
    static Relation from_predicate(int max_value, Pred&& allows) {
        Relation rel;
        for (int a = 1; a <= max_value; ++a) {
            DomainMask m = 0;
            for (int b = 1; b <= max_value; ++b) {
                if (allows(a, b)) m |= value_bit(b);
            }
            rel.support_[a - 1] = m;
        }
        return rel;
    }

    static Relation not_equal(int max_value);

    DomainMask support(int a) const { return support_[a - 1]; }
    bool allows(int a, int b) const { return mask_contains(support_[a - 1], b); }
    Relation transposed(int max_value) const;

    bool operator==(const Relation&) const = default;

private:
    std::array<DomainMask, kMaxValue> support_{};
};

// Per-variable candidate sets plus a stack of snapshots for backtracking.
// restore(t) reinstates the exact state captured by snapshot t and discards
// every snapshot taken after it (LIFO discipline).
class DomainStore {
public:
    using SnapshotToken = std::size_t;

    DomainStore(int variable_count, int max_value);

    int variable_count() const { return static_cast<int>(domains_.size()); }
    int max_value() const { return max_value_; }

    DomainMask mask(VariableId v) const { return domains_[static_cast<size_t>(v)]; }
    bool contains(VariableId v, int value) const { return mask_contains(mask(v), value); }
    int size(VariableId v) const { return mask_size(mask(v)); }
    bool empty(VariableId v) const { return mask(v) == 0; }

    // Value of a singleton domain.
    int sole_value(VariableId v) const;

    // Returns true when the value was present.
    bool remove(VariableId v, int value);
    // Restrict the domain to a single value.
    void assign(VariableId v, int value);
    void set_mask(VariableId v, DomainMask m);

    SnapshotToken snapshot();
    void restore(SnapshotToken token);
    std::size_t depth() const { return snapshots_.size(); }

    bool operator==(const DomainStore&) const = default;

private:
    void check_value(int value) const;

    int max_value_;
    std::vector<DomainMask> domains_;
    std::vector<std::vector<DomainMask>> snapshots_;
};

struct Arc {
    VariableId from = 0;
    VariableId to = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A binary CSP: variables 0..n-1, a domain store, and directed constraint
// arcs with one relation per orientation. Adjacency is kept symmetric and
// sorted; the arc list holds both orientations of every constrained pair.
class CspInstance {
public:
    struct Edge {
        VariableId to;
        int relation_index;
    };

    CspInstance(int variable_count, int max_value);

    // Adds both orientations of a constraint; rel is read as (a, b).
    // Rejects self-arcs and duplicate pairs.
    void add_constraint(VariableId a, VariableId b, const Relation& rel);

    int variable_count() const { return domains_.variable_count(); }
    int max_value() const { return domains_.max_value(); }

    DomainStore& domains() { return domains_; }
    const DomainStore& domains() const { return domains_; }

    // All directed arcs in ascending (from, to) order.
    std::span<const Arc> arcs() const { return arcs_; }

    // Sorted, duplicate-free list of variables constrained with v.
    std::vector<VariableId> neighbors(VariableId v) const;

    // Edges out of v, sorted by target; the fast path used by propagation.
    std::span<const Edge> edges(VariableId v) const {
        return adjacency_[static_cast<size_t>(v)];
    }

    bool constrained(VariableId a, VariableId b) const;

    // Relation attached to the directed arc (from, to); the arc must exist.
    const Relation& relation(VariableId from, VariableId to) const;

private:
    const Edge* find_edge(VariableId from, VariableId to) const;
    void check_variable(VariableId v) const;

    DomainStore domains_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Edge>> adjacency_;
    std::vector<Relation> relations_;
};

// Removes every value of domain(from) with no support in domain(to) under
// the arc's relation. Returns the number of values removed. domain(to) is
// never touched. Throws std::invalid_argument when (from, to) is not a
// constrained arc.
int revise_count(CspInstance& csp, VariableId from, VariableId to);

// True iff revise_count removed at least one value.
bool revise(CspInstance& csp, VariableId from, VariableId to);

}  // namespace sudocsp
