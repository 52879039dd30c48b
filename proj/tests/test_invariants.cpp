#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pcup/cupcore.hpp"
#include "pcup/fixtures.hpp"
#include "pcup/invariants.hpp"

using namespace pcup;

static step_invariant random_invariant(std::mt19937& rng, codomain_t tag) {
	step_invariant inv;
	inv.tag = tag;
	size_t m = 1 + rng() % 5;
	std::vector<double> grid;
	double t = 0;
	for (size_t i = 0; i < m; ++i) {
		t += 0.25 + (rng() % 8) * 0.25;
		grid.push_back(t);
	}
	inv.init_grid(grid);
	auto rand_value = [&]() {
		if (tag == codomain_t::scalar) return inv_value::scalar((int64_t)(rng() % 5));
		std::vector<std::vector<int64_t>> rows(tag == codomain_t::sequence ? 1 : 1 + rng() % 3);
		for (auto& r : rows) {
			r.resize(1 + rng() % 3);
			for (auto& x : r) x = rng() % 4;
		}
		return inv_value::matrix(rows);
	};
	for (size_t i = 0; i < m; ++i) {
		for (size_t j = i; j <= m; ++j) inv.at_cells(i, j) = rand_value();
	}
	return inv;
}

TEST_CASE("mobius_invert: two-disk cup invariant is -1 at [1,1]") {
	auto bc = persistent_cohomology(std::make_shared<filtered_complex>(fixtures::two_disks()));
	step_invariant inv = cup_invariant(bc);
	signed_diagram d = mobius_invert(inv);
	// grid {0,1,2,3}: [1,1] is cell (1,1)
	CHECK(d.at(1, 1).at(0, 0) == -1);
}

TEST_CASE("mobius_invert: rank invariant of a single interval module") {
	// module K[1,2) on grid {0,1,2,3}: rank 1 exactly on closed [t,s] inside [1,2)
	step_invariant rk;
	rk.tag = codomain_t::scalar;
	rk.init_grid({0, 1, 2, 3});
	rk.vals[1][0] = inv_value::scalar(1);
	signed_diagram d = mobius_invert(rk);
	REQUIRE(d.entries.size() == 1);
	CHECK(d.at(1, 1).at(0, 0) == 1);
}

TEST_CASE("mobius_invert: monotonicity-lost flag example gives (0,1,0,...)") {
	// flag rank sequence: (1,0,..) on [0,1) cells, (1,1,0..) at [1,1], 0 from 2 on
	step_invariant rk;
	rk.tag = codomain_t::sequence;
	rk.init_grid({0, 1, 2});
	rk.vals[0][0] = inv_value::sequence({1});
	rk.vals[0][1] = inv_value::sequence({1});
	rk.vals[1][0] = inv_value::sequence({1, 1});
	signed_diagram d = mobius_invert(rk);
	CHECK(d.at(1, 1) == inv_value::sequence({0, 1}));
}

TEST_CASE("mobius roundtrip is the identity on random step invariants") {
	std::mt19937 rng(101);
	for (codomain_t tag : {codomain_t::scalar, codomain_t::sequence, codomain_t::matrix})
		for (int trial = 0; trial < 120; ++trial) {
			step_invariant inv = random_invariant(rng, tag);
			step_invariant back = mobius_sum(mobius_invert(inv));
			CHECK(back == inv);
		}
}

TEST_CASE("mobius_sum: empty diagram and a single entry") {
	signed_diagram d;
	d.tag = codomain_t::scalar;
	d.grid = {0, 1, 2};
	step_invariant z = mobius_sum(d);
	for (size_t i = 0; i < z.m(); ++i)
		for (size_t j = i; j <= z.m(); ++j) CHECK(z.at_cells(i, j).is_zero());

	d.entries[{0, 2}] = inv_value::scalar(3);  // 3 on subintervals of closed [0,2]
	step_invariant s = mobius_sum(d);
	for (size_t i = 0; i < s.m(); ++i)
		for (size_t j = i; j <= s.m(); ++j) {
			bool inside = j <= 2;
			CHECK(s.at_cells(i, j).at(0, 0) == (inside ? 3 : 0));
		}
}

TEST_CASE("mobius_invert of interval-decomposable rank invariants is nonnegative") {
	std::mt19937 rng(107);
	for (int trial = 0; trial < 20; ++trial) {
		auto cx = build_vr(oracles::random_metric(rng, 6), 2, infty);
		auto bc = persistent_cohomology(std::make_shared<filtered_complex>(cx));
		// positive-degree rank invariant from the bars
		step_invariant rk;
		rk.tag = codomain_t::scalar;
		rk.init_grid(cx.grid);
		for (size_t i = 0; i < rk.m(); ++i)
			for (size_t j = i; j <= rk.m(); ++j) {
				int64_t count = 0;
				for (const bar_t& b : bc.bars)
					if (b.degree >= 1 && b.contains_closed((int)i, j == rk.m() ? -1 : (int)j)) ++count;
				rk.at_cells(i, j) = inv_value::scalar(count);
			}
		signed_diagram d = mobius_invert(rk);
		int64_t total = 0;
		for (const auto& [key, v] : d.entries) {
			CHECK(v.at(0, 0) >= 0);
			total += v.at(0, 0);
		}
		int64_t positive_bars = 0;
		for (const bar_t& b : bc.bars)
			if (b.degree >= 1) ++positive_bars;
		CHECK(total == positive_bars);
	}
}

TEST_CASE("snapping: off-grid queries use half-open cells, below-grid is zero") {
	step_invariant inv;
	inv.tag = codomain_t::scalar;
	inv.init_grid({1, 2});
	inv.vals[0][0] = inv_value::scalar(4);
	inv.vals[0][1] = inv_value::scalar(2);
	inv.vals[1][0] = inv_value::scalar(3);
	inv.inf_col[0] = inv_value::scalar(1);
	inv.inf_col[1] = inv_value::scalar(1);
	CHECK(inv.eval(1.5, 1.9).at(0, 0) == 4);
	CHECK(inv.eval(1.0, 2.0).at(0, 0) == 2);
	CHECK(inv.eval(2.4, 7.0).at(0, 0) == 3);
	CHECK(inv.eval(0.5, 1.5).at(0, 0) == 0);
	CHECK(inv.eval(1.0, infty).at(0, 0) == 1);
	CHECK(inv.eval(0.0, infty).at(0, 0) == 0);
}

TEST_CASE("inv_value: entrywise order, shapes padded with zeros") {
	inv_value a = inv_value::matrix({{2, 0}, {1, 1}});
	inv_value b = inv_value::matrix({{2}, {1, 1}, {0}});
	CHECK(a.at(0, 1) == 0);
	CHECK(b == inv_value::matrix({{2, 0}, {1, 1}}));
	CHECK(inv_value::scalar(0).is_zero());
	inv_value c = inv_value::matrix({{2, 0}, {1, 0}, {0, 1}});
	CHECK_FALSE(a.leq(c));
	CHECK_FALSE(c.leq(a));
	CHECK(a.leq(a.plus(c)));
	CHECK(a.vmax(c) == inv_value::matrix({{2, 0}, {1, 1}, {0, 1}}));
	CHECK(a.minus(c) == inv_value::matrix({{0, 0}, {0, 1}, {0, -1}}));
}
