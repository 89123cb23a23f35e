#include "sudocsp/csp.hpp"

#include <algorithm>
#include <string>

namespace sudocsp {

Relation Relation::not_equal(int max_value) {
    return from_predicate(max_value, [](int a, int b) { return a != b; });
}

Relation Relation::transposed(int max_value) const {
    Relation t;
    for (int a = 1; a <= max_value; ++a) {
        for (int b : values_in(support_[static_cast<size_t>(a - 1)])) {
            t.support_[static_cast<size_t>(b - 1)] |= value_bit(a);
        }
    }
    return t;
}

DomainStore::DomainStore(int variable_count, int max_value) : max_value_(max_value) {
    if (variable_count < 0 || max_value < 1 || max_value > kMaxValue) {
        throw std::invalid_argument("DomainStore: bad variable count or value range");
    }
    domains_.assign(static_cast<size_t>(variable_count), full_domain(max_value));
}

int DomainStore::sole_value(VariableId v) const {
    DomainMask m = mask(v);
    if (mask_size(m) != 1) {
        throw std::logic_error("sole_value: domain of variable " + std::to_string(v) +
                               " is not a singleton");
    }
    return lowest_value(m);
}

bool DomainStore::remove(VariableId v, int value) {
    check_value(value);
    DomainMask& m = domains_[static_cast<size_t>(v)];
    if (!mask_contains(m, value)) return false;
    m &= ~value_bit(value);
    return true;
}

void DomainStore::assign(VariableId v, int value) {
    check_value(value);
    domains_[static_cast<size_t>(v)] = value_bit(value);
}

void DomainStore::set_mask(VariableId v, DomainMask m) {
    if ((m & ~full_domain(max_value_)) != 0) {
        throw std::invalid_argument("set_mask: values outside 1.." +
                                    std::to_string(max_value_));
    }
    domains_[static_cast<size_t>(v)] = m;
}

DomainStore::SnapshotToken DomainStore::snapshot() {
    snapshots_.push_back(domains_);
    return snapshots_.size() - 1;
}

void DomainStore::restore(SnapshotToken token) {
    if (token >= snapshots_.size()) {
        throw std::logic_error("restore: snapshot token out of range");
    }
    domains_ = snapshots_[token];
    snapshots_.resize(token);
}

void DomainStore::check_value(int value) const {
    if (value < 1 || value > max_value_) {
        throw std::invalid_argument("value " + std::to_string(value) +
                                    " outside 1.." + std::to_string(max_value_));
    }
}

CspInstance::CspInstance(int variable_count, int max_value)
    : domains_(variable_count, max_value),
      adjacency_(static_cast<size_t>(variable_count)) {}

void CspInstance::add_constraint(VariableId a, VariableId b, const Relation& rel) {
    check_variable(a);
    check_variable(b);
    if (a == b) throw std::invalid_argument("add_constraint: self-arc");
    if (constrained(a, b)) {
        throw std::invalid_argument("add_constraint: duplicate pair (" +
                                    std::to_string(a) + ", " + std::to_string(b) + ")");
    }

    int forward = static_cast<int>(relations_.size());
    relations_.push_back(rel);
    Relation back = rel.transposed(max_value());
    int backward = forward;
    if (!(back == rel)) {
        backward = static_cast<int>(relations_.size());
        relations_.push_back(back);
    }

    auto insert_edge = [this](VariableId from, VariableId to, int rel_index) {
        auto& edges = adjacency_[static_cast<size_t>(from)];
        auto pos = std::lower_bound(edges.begin(), edges.end(), to,
                                    [](const Edge& e, VariableId v) { return e.to < v; });
        edges.insert(pos, Edge{to, rel_index});
        Arc arc{from, to};
        arcs_.insert(std::lower_bound(arcs_.begin(), arcs_.end(), arc), arc);
    };
    insert_edge(a, b, forward);
    insert_edge(b, a, backward);
}

std::vector<VariableId> CspInstance::neighbors(VariableId v) const {
    check_variable(v);
    const auto& edges = adjacency_[static_cast<size_t>(v)];
    std::vector<VariableId> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.push_back(e.to);
    return out;
}

bool CspInstance::constrained(VariableId a, VariableId b) const {
    return find_edge(a, b) != nullptr;
}

const Relation& CspInstance::relation(VariableId from, VariableId to) const {
    const Edge* e = find_edge(from, to);
    if (e == nullptr) {
        throw std::invalid_argument("no constraint between variables " +
                                    std::to_string(from) + " and " + std::to_string(to));
    }
    return relations_[static_cast<size_t>(e->relation_index)];
}

const CspInstance::Edge* CspInstance::find_edge(VariableId from, VariableId to) const {
    if (from < 0 || from >= variable_count() || to < 0 || to >= variable_count()) {
        return nullptr;
    }
    const auto& edges = adjacency_[static_cast<size_t>(from)];
    auto pos = std::lower_bound(edges.begin(), edges.end(), to,
                                [](const Edge& e, VariableId v) { return e.to < v; });
    if (pos == edges.end() || pos->to != to) return nullptr;
    return &*pos;
}

void CspInstance::check_variable(VariableId v) const {
    if (v < 0 || v >= variable_count()) {
        throw std::invalid_argument("variable " + std::to_string(v) + " out of range");
    }
}

int revise_count(CspInstance& csp, VariableId from, VariableId to) {
    const Relation& rel = csp.relation(from, to);
    DomainStore& dom = csp.domains();
    const DomainMask to_mask = dom.mask(to);
    const DomainMask from_mask = dom.mask(from);

    DomainMask keep = 0;
    for (int a : values_in(from_mask)) {
        if ((rel.support(a) & to_mask) != 0) keep |= value_bit(a);
    }
    int removed = mask_size(from_mask) - mask_size(keep);
    if (removed > 0) dom.set_mask(from, keep);
    return removed;
}

bool revise(CspInstance& csp, VariableId from, VariableId to) {
    return revise_count(csp, from, to) > 0;
}

}  // namespace sudocsp
