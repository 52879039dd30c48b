#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pcup/cupcore.hpp"
#include "pcup/fixtures.hpp"

using namespace pcup;

static barcode_with_reps compute(const filtered_complex& cx, coeff_t p = 2) {
	return persistent_cohomology(std::make_shared<filtered_complex>(cx), fp_field(p));
}

static cochain simplex_dual(const filtered_complex& cx, std::vector<int> verts) {
	cochain x;
	x.degree = (int)verts.size() - 1;
	x.coeffs.push(cx.index(simplex_t(std::move(verts))), 1);
	return x;
}

static support_interval closed_to_inf(double left, const std::vector<double>& grid) {
	support_interval s;
	s.empty = false;
	s.left = left;
	s.left_gi = (int)(std::lower_bound(grid.begin(), grid.end(), left) - grid.begin());
	s.right = infty;
	s.right_inf = true;
	s.right_gi = -1;
	return s;
}

static support_interval bounded(double left, double right, const std::vector<double>& grid) {
	support_interval s;
	s.empty = false;
	s.left = left;
	s.left_gi = (int)(std::lower_bound(grid.begin(), grid.end(), left) - grid.begin());
	s.right = right;
	s.right_gi = (int)(std::lower_bound(grid.begin(), grid.end(), right) - grid.begin());
	s.right_inf = false;
	return s;
}

TEST_CASE("cup: matching endpoint concatenates, mismatch gives zero") {
	// one filled triangle
	auto cx = from_explicit({{simplex_t({0}), 0},
	                         {simplex_t({1}), 0},
	                         {simplex_t({2}), 0},
	                         {simplex_t({0, 1}), 0},
	                         {simplex_t({1, 2}), 0},
	                         {simplex_t({0, 2}), 0},
	                         {simplex_t({0, 1, 2}), 0}});
	fp_field f(2);
	cochain a = cup(cx, f, simplex_dual(cx, {0, 1}), simplex_dual(cx, {1, 2}));
	REQUIRE(a.coeffs.size() == 1);
	CHECK(a.coeffs.entries[0].first == cx.index(simplex_t({0, 1, 2})));
	CHECK(a.degree == 2);

	cochain b = cup(cx, f, simplex_dual(cx, {0, 1}), simplex_dual(cx, {0, 2}));
	CHECK(b.is_zero());
}

TEST_CASE("cup: bilinearity on a two-triangle complex") {
	// contains [1,2,3] but no triple starting at 0
	auto cx = from_explicit({{simplex_t({0}), 0},
	                         {simplex_t({1}), 0},
	                         {simplex_t({2}), 0},
	                         {simplex_t({3}), 0},
	                         {simplex_t({0, 1}), 0},
	                         {simplex_t({1, 2}), 0},
	                         {simplex_t({2, 3}), 0},
	                         {simplex_t({1, 3}), 0},
	                         {simplex_t({1, 2, 3}), 0}});
	fp_field f(2);
	cochain sum = simplex_dual(cx, {0, 1});
	sum.coeffs = axpy(f, sum.coeffs, 1, simplex_dual(cx, {1, 2}).coeffs);
	cochain prod = cup(cx, f, sum, simplex_dual(cx, {2, 3}));
	REQUIRE(prod.coeffs.size() == 1);
	CHECK(prod.coeffs.entries[0].first == cx.index(simplex_t({1, 2, 3})));
}

TEST_CASE("cup beyond max_dim is the zero cochain") {
	auto cx = fixtures::triangulated_circle();
	fp_field f(2);
	CHECK(cup(cx, f, simplex_dual(cx, {0, 1}), simplex_dual(cx, {1, 2})).is_zero());
}

TEST_CASE("support: a single bar supports itself") {
	auto bc = compute(fixtures::pinched_torus());
	for (size_t i : bc.positive) {
		support_interval s = support(bc, {i});
		CHECK_FALSE(s.empty);
		CHECK(s.left == bc.bars[i].birth);
		CHECK(s.right_inf == bc.bars[i].infinite());
		if (!s.right_inf) CHECK(s.right == bc.bars[i].death);
	}
}

TEST_CASE("support: pinched torus (alpha, beta) -> [2,3)") {
	auto bc = compute(fixtures::pinched_torus());
	size_t alpha = 0, beta = 0;
	for (size_t i : bc.positive) {
		if (bc.bars[i].degree == 1 && !bc.bars[i].infinite()) alpha = i;
		if (bc.bars[i].degree == 1 && bc.bars[i].infinite()) beta = i;
	}
	support_interval s = support(bc, {alpha, beta});
	REQUIRE_FALSE(s.empty);
	CHECK(s.left == 2);
	CHECK(s.right == 3);
	CHECK_FALSE(s.right_inf);
	// strictly contained in the intersection [1, 3)
	CHECK(s.left > std::max(bc.bars[alpha].birth, bc.bars[beta].birth));
}

TEST_CASE("support: two-disk classes have trivial products") {
	auto bc = compute(fixtures::two_disks());
	REQUIRE(bc.positive.size() == 2);
	CHECK(support(bc, {bc.positive[0], bc.positive[1]}).empty);
}

TEST_CASE("support rejects degree-0 bars and foreign indices") {
	auto bc = compute(fixtures::two_disks());
	size_t deg0 = 0;
	while (bc.bars[deg0].degree != 0) ++deg0;
	CHECK_THROWS_AS(support(bc, {deg0}), input_error);
	CHECK_THROWS_AS(support(bc, {bc.bars.size() + 5}), input_error);
	CHECK_THROWS_AS(support(bc, {}), input_error);
}

TEST_CASE("cup_length_diagram: pinched torus") {
	auto bc = compute(fixtures::pinched_torus());
	cup_diagram d = cup_length_diagram(bc);
	const auto& g = bc.grid();
	REQUIRE(d.values.size() == 4);
	CHECK(d.at(bounded(0, 3, g)) == 1);
	CHECK(d.at(closed_to_inf(1, g)) == 1);
	CHECK(d.at(closed_to_inf(2, g)) == 1);
	CHECK(d.at(bounded(2, 3, g)) == 2);
}

TEST_CASE("cup_length_diagram: two disks") {
	auto bc = compute(fixtures::two_disks());
	cup_diagram d = cup_length_diagram(bc);
	const auto& g = bc.grid();
	REQUIRE(d.values.size() == 2);
	CHECK(d.at(bounded(0, 2, g)) == 1);
	CHECK(d.at(bounded(1, 3, g)) == 1);
}

TEST_CASE("cup_length_diagram: no positive bars -> empty diagram") {
	auto bc = compute(from_explicit({{simplex_t({0}), 0}, {simplex_t({1}), 1}}));
	CHECK(cup_length_diagram(bc).values.empty());
}

TEST_CASE("invariant_from_diagram: pinched torus case list") {
	auto bc = compute(fixtures::pinched_torus());
	step_invariant inv = invariant_from_diagram(cup_length_diagram(bc));
	// grid {0,1,2,3}: half-open bars make the closed queries [0,3] and [2,3]
	// evaluate to 0 and 1 (alpha is dead at 3)
	auto v = [&](size_t i, size_t j) { return inv.at_cells(i, j).at(0, 0); };
	size_t inf = inv.m();
	CHECK(v(0, 0) == 1);
	CHECK(v(0, 1) == 1);
	CHECK(v(0, 2) == 1);
	CHECK(v(0, 3) == 0);
	CHECK(v(0, inf) == 0);
	CHECK(v(1, 1) == 1);
	CHECK(v(1, 2) == 1);
	CHECK(v(1, 3) == 1);
	CHECK(v(1, inf) == 1);
	CHECK(v(2, 2) == 2);
	CHECK(v(2, 3) == 1);
	CHECK(v(2, inf) == 1);
	CHECK(v(3, 3) == 1);
	CHECK(v(3, inf) == 1);
	CHECK(inv.antitone());
}

TEST_CASE("invariant_from_diagram: empty diagram and two-disk case list") {
	cup_diagram empty;
	empty.grid = {0, 1};
	step_invariant z = invariant_from_diagram(empty);
	for (size_t i = 0; i < z.m(); ++i)
		for (size_t j = i; j <= z.m(); ++j) CHECK(z.at_cells(i, j).is_zero());

	auto bc = compute(fixtures::two_disks());
	step_invariant inv = invariant_from_diagram(cup_length_diagram(bc));
	auto v = [&](size_t i, size_t j) { return inv.at_cells(i, j).at(0, 0); };
	// 1 iff [t,s] inside [0,2) or [1,3)
	CHECK(v(0, 0) == 1);
	CHECK(v(0, 1) == 1);
	CHECK(v(1, 1) == 1);
	CHECK(v(1, 2) == 1);
	CHECK(v(2, 2) == 1);
	CHECK(v(0, 2) == 0);
	CHECK(v(0, 3) == 0);
	CHECK(v(1, 3) == 0);
	CHECK(v(2, 3) == 0);
	CHECK(v(3, 3) == 0);
	for (size_t i = 0; i < 4; ++i) CHECK(v(i, inv.m()) == 0);
}

TEST_CASE("cup_length_of_image: pinched torus spot values") {
	auto bc = compute(fixtures::pinched_torus());
	CHECK(cup_length_of_image(bc, 2, 2.5) == 2);
	CHECK(cup_length_of_image(bc, 0, 3) == 0);
	CHECK(cup_length_of_image(bc, 2, 2) == 2);
	CHECK(cup_length_of_image(bc, 1, 1) == 1);
	CHECK(cup_length_of_image(bc, 0, infty) == 0);
	CHECK(cup_length_of_image(bc, 3, infty) == 1);
}

TEST_CASE("tropical Mobius: diagram recovers the oracle on random VR complexes") {
	std::mt19937 rng(71);
	for (int trial = 0; trial < 12; ++trial) {
		auto cx = build_vr(oracles::random_metric(rng, 5 + (int)(rng() % 3)), 2 + (int)(rng() % 2),
		                   infty);
		auto bc = compute(cx);
		step_invariant inv = invariant_from_diagram(cup_length_diagram(bc));
		for (size_t i = 0; i < inv.m(); ++i)
			for (size_t j = i; j <= inv.m(); ++j) {
				double b = j == inv.m() ? infty : cx.grid[j];
				CHECK(inv.at_cells(i, j).at(0, 0) == cup_length_of_image(bc, cx.grid[i], b));
			}
	}
}

TEST_CASE("support is permutation invariant and contained in the intersection") {
	std::mt19937 rng(73);
	for (int trial = 0; trial < 8; ++trial) {
		auto cx = build_vr(oracles::random_metric(rng, 6), 3, infty);
		auto bc = compute(cx);
		const auto& pos = bc.positive;
		if (pos.size() < 2) continue;
		for (size_t a = 0; a < pos.size(); ++a)
			for (size_t b = 0; b < pos.size(); ++b) {
				support_interval s1 = support(bc, {pos[a], pos[b]});
				support_interval s2 = support(bc, {pos[b], pos[a]});
				CHECK(s1 == s2);
				if (!s1.empty) {
					// right end hits the right end of the intersection
					int mb, md;
					detail::intersection_bounds(bc, {pos[a], pos[b]}, mb, md);
					CHECK(s1.right_inf == (md < 0));
					if (md >= 0) CHECK(s1.right_gi == md);
					CHECK(s1.left_gi >= mb);
				}
			}
	}
}

TEST_CASE("invariant_max and invariant_sum") {
	auto i1 = fixtures::cup_vr_circle();
	step_invariant zero = step_invariant::zero(codomain_t::scalar);
	CHECK(invariant_max(i1, zero) == i1);

	// d-fold sum of cup(VR(S^1)) is cup(VR(T^d))
	step_invariant acc = invariant_sum(i1, i1);
	CHECK(acc == fixtures::cup_vr_torus2());
	CHECK_THROWS_AS(invariant_max(i1, fixtures::phi_rank_t2s3()), input_error);
}

TEST_CASE("invariant_max of two shifted circle invariants") {
	auto bc1 = compute(fixtures::triangulated_circle());
	auto bc2 = compute(shifted(fixtures::triangulated_circle(), 0.5));
	step_invariant a = cup_invariant(bc1), b = cup_invariant(bc2);
	step_invariant m = invariant_max(a, b);
	CHECK(m.grid == std::vector<double>{0, 0.5, 1, 1.5});
	for (size_t i = 0; i < m.m(); ++i)
		for (size_t j = i; j <= m.m(); ++j) {
			double qa = m.grid[i], qb = j == m.m() ? infty : m.grid[j];
			int64_t expect = std::max(a.eval(qa, qb).at(0, 0), b.eval(qa, qb).at(0, 0));
			CHECK(m.at_cells(i, j).at(0, 0) == expect);
		}
}

TEST_CASE("product classes vanish outside the bars' intersection") {
	std::mt19937 rng(79);
	for (int trial = 0; trial < 6; ++trial) {
		auto cx = build_vr(oracles::random_metric(rng, 6), 3, infty);
		auto bc = compute(cx);
		for (size_t a : bc.positive)
			for (size_t b : bc.positive) {
				cochain x = cup(*bc.cx, bc.field, bc.bars[a].rep, bc.bars[b].rep);
				int mb, md;
				detail::intersection_bounds(bc, {a, b}, mb, md);
				for (int g = 0; g < (int)cx.grid.size(); ++g) {
					bool inside = g >= mb && (md < 0 || g < md);
					if (!inside) CHECK_FALSE(bc.class_nonzero(x, g));
				}
			}
	}
}

TEST_CASE("cup-length is bounded by alive positive bars and by max_dim") {
	std::mt19937 rng(83);
	for (int trial = 0; trial < 6; ++trial) {
		auto cx = build_vr(oracles::random_metric(rng, 6), 2, infty);
		auto bc = compute(cx);
		step_invariant inv = invariant_from_diagram(cup_length_diagram(bc));
		for (size_t i = 0; i < inv.m(); ++i)
			for (size_t j = i; j <= inv.m(); ++j) {
				int64_t v = inv.at_cells(i, j).at(0, 0);
				int64_t bars = 0;
				for (size_t k : bc.positive)
					if (bc.bars[k].contains_closed((int)i, j == inv.m() ? -1 : (int)j)) ++bars;
				CHECK(v <= bars);
				CHECK(v <= cx.max_dim);
			}
	}
}

TEST_CASE("odd characteristic: pinched-torus diagram over Z/3 and Z/5") {
	for (coeff_t p : {3, 5}) {
		auto bc = compute(fixtures::pinched_torus(), p);
		cup_diagram d = cup_length_diagram(bc);
		const auto& g = bc.grid();
		REQUIRE(d.values.size() == 4);
		CHECK(d.at(bounded(2, 3, g)) == 2);
		CHECK(d.at(bounded(0, 3, g)) == 1);
		// the tropical identity holds over odd primes too
		step_invariant inv = invariant_from_diagram(d);
		for (size_t i = 0; i < inv.m(); ++i)
			for (size_t j = i; j <= inv.m(); ++j) {
				double b = j == inv.m() ? infty : g[j];
				CHECK(inv.at_cells(i, j).at(0, 0) == cup_length_of_image(bc, g[i], b));
			}
	}
}
