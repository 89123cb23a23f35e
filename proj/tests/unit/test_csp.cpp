#include <doctest.h>

#include <random>
#include <set>

#include "sudocsp/csp.hpp"
#include "sudocsp/sudoku.hpp"

using namespace sudocsp;

namespace {

CspInstance two_var_not_equal(DomainMask x, DomainMask y) {
    CspInstance csp(2, 9);
    csp.add_constraint(0, 1, Relation::not_equal(9));
    csp.domains().set_mask(0, x);
    csp.domains().set_mask(1, y);
    return csp;
}

DomainMask mask_of(std::initializer_list<int> values) {
    DomainMask m = 0;
    for (int v : values) m |= value_bit(v);
    return m;
}

// Small random instance: dense-ish random relations over random domains.
CspInstance random_csp(std::mt19937_64& rng) {
    int n = 2 + static_cast<int>(rng() % 6);
    int range = 2 + static_cast<int>(rng() % 5);
    CspInstance csp(n, range);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (rng() % 3 == 0) continue;  // leave some pairs unconstrained
            std::uint64_t bits = rng();
            auto rel = Relation::from_predicate(range, [&](int x, int y) {
                return (bits >> ((x * range + y) % 48)) & 1;
            });
            csp.add_constraint(a, b, rel);
        }
        DomainMask m = static_cast<DomainMask>(rng()) & full_domain(range);
        if (m == 0) m = value_bit(1 + static_cast<int>(rng() % range));
        csp.domains().set_mask(a, m);
    }
    return csp;
}

}  // namespace

TEST_CASE("revise removes unsupported values") {
    auto csp = two_var_not_equal(mask_of({1, 2}), mask_of({1}));
    CHECK(revise(csp, 0, 1));
    CHECK(csp.domains().mask(0) == mask_of({2}));
    CHECK(csp.domains().mask(1) == mask_of({1}));
}

TEST_CASE("revise leaves supported values alone") {
    auto csp = two_var_not_equal(mask_of({2}), mask_of({1}));
    CHECK_FALSE(revise(csp, 0, 1));
    CHECK(csp.domains().mask(0) == mask_of({2}));
}

TEST_CASE("revise may empty the from domain") {
    auto csp = two_var_not_equal(mask_of({1}), mask_of({1}));
    CHECK(revise(csp, 0, 1));
    CHECK(csp.domains().mask(0) == 0);
}

TEST_CASE("revise is idempotent and monotone, and never touches the target") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        CspInstance csp = random_csp(rng);
        for (const Arc& arc : csp.arcs()) {
            DomainMask from_before = csp.domains().mask(arc.from);
            DomainMask to_before = csp.domains().mask(arc.to);
            revise(csp, arc.from, arc.to);
            DomainMask from_after = csp.domains().mask(arc.from);
            CHECK((from_after & ~from_before) == 0);
            CHECK(csp.domains().mask(arc.to) == to_before);
            CHECK_FALSE(revise(csp, arc.from, arc.to));
        }
    }
}

TEST_CASE("revise rejects unconstrained pairs") {
    CspInstance csp(3, 4);
    csp.add_constraint(0, 1, Relation::not_equal(4));
    CHECK_THROWS_AS(revise(csp, 0, 2), std::invalid_argument);
}

TEST_CASE("snapshot and restore round-trip") {
    auto csp = two_var_not_equal(full_domain(9), full_domain(9));
    DomainStore& dom = csp.domains();
    DomainStore before = dom;

    auto token = dom.snapshot();
    dom.remove(0, 3);
    dom.remove(0, 5);
    dom.remove(1, 9);
    dom.restore(token);
    CHECK(dom == before);

    SUBCASE("restore without mutation is a no-op") {
        auto t = dom.snapshot();
        dom.restore(t);
        CHECK(dom == before);
    }
}

TEST_CASE("nested snapshots restore in LIFO order") {
    DomainStore dom(3, 5);
    auto t1 = dom.snapshot();
    dom.remove(0, 1);
    DomainStore at_depth1 = dom;
    auto t2 = dom.snapshot();
    dom.remove(1, 2);
    dom.remove(2, 3);

    dom.restore(t2);
    CHECK(dom.depth() == 1);
    CHECK(dom.mask(1) == full_domain(5));
    CHECK(dom.mask(0) == at_depth1.mask(0));
    dom.restore(t1);
    CHECK(dom.depth() == 0);
    CHECK(dom.mask(0) == full_domain(5));
}

TEST_CASE("restoring an old token discards everything above it") {
    DomainStore dom(2, 9);
    DomainStore pristine = dom;
    auto t1 = dom.snapshot();
    dom.assign(0, 4);
    dom.snapshot();
    dom.assign(1, 5);
    dom.restore(t1);
    CHECK(dom == pristine);
}

TEST_CASE("snapshot round-trip is bit-exact under random interleaving") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 100; ++round) {
        DomainStore dom(8, 9);
        // random starting state
        for (int v = 0; v < 8; ++v) {
            DomainMask m = static_cast<DomainMask>(rng()) & full_domain(9);
            dom.set_mask(v, m);
        }
        std::vector<std::pair<DomainStore::SnapshotToken, DomainStore>> stack;
        for (int step = 0; step < 40; ++step) {
            int action = static_cast<int>(rng() % 3);
            if (action == 0) {
                stack.emplace_back(dom.snapshot(), dom);
            } else if (action == 1 && !stack.empty() && rng() % 4 == 0) {
                auto [token, expected] = stack.back();
                stack.pop_back();
                dom.restore(token);
                CHECK(dom.mask(0) == expected.mask(0));
                CHECK(dom.depth() == token);
                for (int v = 0; v < 8; ++v) CHECK(dom.mask(v) == expected.mask(v));
            } else {
                int v = static_cast<int>(rng() % 8);
                int value = 1 + static_cast<int>(rng() % 9);
                dom.remove(v, value);
            }
        }
        while (!stack.empty()) {
            auto [token, expected] = stack.back();
            stack.pop_back();
            dom.restore(token);
            for (int v = 0; v < 8; ++v) CHECK(dom.mask(v) == expected.mask(v));
        }
    }
}

TEST_CASE("neighbors of a Sudoku corner cell") {
    CspInstance csp = to_csp(SudokuGrid{});
    std::set<VariableId> expected;
    for (int c = 1; c <= 8; ++c) expected.insert(c);
    for (int r = 1; r <= 8; ++r) expected.insert(r * 9);
    expected.insert(10);
    expected.insert(11);
    expected.insert(19);
    expected.insert(20);

    auto got = csp.neighbors(0);
    CHECK(got.size() == 20);
    CHECK(std::set<VariableId>(got.begin(), got.end()) == expected);
    CHECK(std::is_sorted(got.begin(), got.end()));
}

TEST_CASE("every Sudoku cell has exactly 20 neighbors and 1620 directed arcs exist") {
    CspInstance csp = to_csp(SudokuGrid{});
    for (int v = 0; v < 81; ++v) CHECK(csp.neighbors(v).size() == 20);
    CHECK(csp.arcs().size() == 1620);
}

TEST_CASE("two-variable instance neighbor list") {
    CspInstance csp(2, 4);
    csp.add_constraint(0, 1, Relation::not_equal(4));
    CHECK(csp.neighbors(0) == std::vector<VariableId>{1});
    CHECK(csp.neighbors(1) == std::vector<VariableId>{0});
}

TEST_CASE("adjacency is symmetric and the arc list has both orientations") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 50; ++round) {
        CspInstance csp = random_csp(rng);
        std::set<Arc> arc_set(csp.arcs().begin(), csp.arcs().end());
        CHECK(arc_set.size() == csp.arcs().size());  // no duplicates
        for (const Arc& arc : arc_set) {
            CHECK(arc.from != arc.to);
            CHECK(arc_set.count(Arc{arc.to, arc.from}) == 1);
            CHECK(csp.constrained(arc.from, arc.to));
        }
        for (int v = 0; v < csp.variable_count(); ++v) {
            for (VariableId w : csp.neighbors(v)) {
                auto back = csp.neighbors(w);
                CHECK(std::find(back.begin(), back.end(), v) != back.end());
            }
        }
    }
}

TEST_CASE("transposed relation swaps the pair order") {
    std::mt19937_64 rng(4);
    for (int round = 0; round < 20; ++round) {
        std::uint64_t bits = rng();
        auto rel = Relation::from_predicate(6, [&](int a, int b) {
            return (bits >> ((a * 7 + b) % 53)) & 1;
        });
        Relation t = rel.transposed(6);
        for (int a = 1; a <= 6; ++a) {
            for (int b = 1; b <= 6; ++b) {
                CHECK(rel.allows(a, b) == t.allows(b, a));
            }
        }
    }
}

TEST_CASE("constraint construction rejects self-arcs and duplicates") {
    CspInstance csp(3, 4);
    CHECK_THROWS_AS(csp.add_constraint(1, 1, Relation::not_equal(4)),
                    std::invalid_argument);
    csp.add_constraint(0, 1, Relation::not_equal(4));
    CHECK_THROWS_AS(csp.add_constraint(0, 1, Relation::not_equal(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(csp.add_constraint(1, 0, Relation::not_equal(4)),
                    std::invalid_argument);
}

TEST_CASE("domain store validates values and tokens") {
    DomainStore dom(2, 9);
    CHECK_THROWS_AS(dom.remove(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(dom.assign(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(dom.set_mask(0, value_bit(12)), std::invalid_argument);
    CHECK_THROWS_AS(dom.restore(0), std::logic_error);
    dom.assign(0, 4);
    CHECK(dom.sole_value(0) == 4);
    CHECK_THROWS_AS(dom.sole_value(1), std::logic_error);
}
