#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "pcup/complex.hpp"
#include "pcup/linalg.hpp"

namespace pcup {

// Cochain: coefficients indexed by the canonical simplex order of one complex.
struct cochain {
	int degree = 0;
	sparse_vec coeffs;

	bool is_zero() const { return coeffs.empty(); }
};

// restriction to the first n simplices (an index prefix is a subcomplex)
inline cochain restrict_prefix(const cochain& x, index_t n) {
	cochain out;
	out.degree = x.degree;
	for (const auto& e : x.coeffs.entries) {
		if (e.first >= n) break;
		out.coeffs.entries.push_back(e);
	}
	return out;
}

struct bar_t {
	int degree = 0;
	double birth = 0;
	double death = infty;
	int birth_gi = 0;
	int death_gi = -1;  // grid index of death value, -1 for infinite bars
	cochain rep;        // cocycle of the complex just before death (or the full complex)

	bool infinite() const { return death_gi < 0; }
	bool alive_at(int gi) const { return birth_gi <= gi && (infinite() || gi < death_gi); }
	// does [birth, death) contain the closed grid interval [s_i, s_j] (j == -1: s_j = infinity)?
	bool contains_closed(int i, int j) const {
		if (i < birth_gi) return false;
		if (j < 0) return infinite();
		return infinite() || j < death_gi;
	}
	std::string str() const {
		std::ostringstream os;
		os << "[" << birth << "," << (infinite() ? std::string("inf") : std::to_string(death)) << ")";
		return os.str();
	}
};

// Result of expressing a restricted cocycle in the alive-representative basis.
struct class_handle {
	bool zero = true;
	std::vector<std::pair<size_t, coeff_t>> coords;  // (bar index, coefficient), nonzero only
};

struct barcode_with_reps {
	std::shared_ptr<const filtered_complex> cx;
	fp_field field;
	std::vector<bar_t> bars;
	std::vector<size_t> positive;  // indices of bars with degree >= 1

	barcode_with_reps() = default;
	// copies and moves drop the solver cache (it is rebuilt on demand)
	barcode_with_reps(const barcode_with_reps& o)
	    : cx(o.cx), field(o.field), bars(o.bars), positive(o.positive),
	      solver_budget(o.solver_budget) {}
	barcode_with_reps(barcode_with_reps&& o) noexcept
	    : cx(std::move(o.cx)), field(o.field), bars(std::move(o.bars)),
	      positive(std::move(o.positive)), solver_budget(o.solver_budget) {}
	barcode_with_reps& operator=(barcode_with_reps o) {
		cx = std::move(o.cx);
		field = o.field;
		bars = std::move(o.bars);
		positive = std::move(o.positive);
		solver_budget = o.solver_budget;
		std::lock_guard<std::mutex> lock(solver_mutex);
		solver_cache.clear();
		solver_clock = 0;
		solver_bytes = 0;
		return *this;
	}

	const std::vector<double>& grid() const { return cx->grid; }

	std::vector<size_t> alive_of_degree(int p, int gi) const {
		std::vector<size_t> out;
		for (size_t i = 0; i < bars.size(); ++i)
			if (bars[i].degree == p && bars[i].alive_at(gi)) out.push_back(i);
		return out;
	}

	// --- class machinery -------------------------------------------------

	bool is_cocycle_at(const cochain& x, int gi) const {
		if (gi < 0) return true;
		index_t n = cx->prefix(gi);
		int q = x.degree + 1;
		if (q > cx->max_dim) return true;
		for (index_t s : cx->by_dim[q]) {
			if (s >= n) break;
			coeff_t v = 0;
			for (const auto& [facet, sign] : cx->boundary(s))
				v = field.add(v, field.mul(field.normalize(sign), x.coeffs.at(facet)));
			if (v != 0) return false;
		}
		return true;
	}

	// is x (already a cocycle at gi) a coboundary in X_gi?
	bool is_coboundary_at(const cochain& x, int gi) const;
	// dead classes (non-cocycle restriction) count as zero here
	bool class_nonzero(const cochain& x, int gi) const;

	class_handle class_coords(const cochain& x, int gi) const;

	// Per-(parameter, degree) solvers are memoized under a byte budget; the
	// least recently used are rebuilt on demand if evicted. The cache is the
	// only mutable state, guarded so that a computed barcode can be queried
	// from several threads.
	struct class_solver;
	std::shared_ptr<const class_solver> solver_at(int gi, int p) const;
	struct solver_entry;
	mutable std::mutex solver_mutex;
	mutable std::map<std::pair<int, int>, solver_entry> solver_cache;
	mutable uint64_t solver_clock = 0;
	mutable size_t solver_bytes = 0;
	size_t solver_budget = size_t(256) << 20;
};

// Solver for the cocycle space at one (parameter, degree) pair: an echelon
// column basis of [alive representatives | coboundary generators], each
// column tracking its combination over the representative part. Reducing a
// cocycle against the basis yields its class in the representative basis
// (cocycles split as representatives plus coboundaries, and representative
// coefficients are unique since the representatives stay independent modulo
// coboundaries).
struct barcode_with_reps::class_solver {
	std::vector<size_t> rep_bars;        // bar index per representative column
	std::vector<sparse_vec> ecols;       // echelon columns, distinct lead rows
	std::map<index_t, size_t> lead_of;   // lead row -> echelon column
	std::vector<std::vector<coeff_t>> combo;  // rep-part combination per column

	class_solver() = default;

	// insert a column, eliminating existing leads; returns false if dependent
	bool insert(const fp_field& f, sparse_vec v, std::vector<coeff_t> u) {
		while (!v.empty()) {
			auto it = lead_of.find(v.lead_index());
			if (it == lead_of.end()) break;
			coeff_t c = f.neg(f.div(v.lead_coeff(), ecols[it->second].lead_coeff()));
			v = axpy(f, v, c, ecols[it->second]);
			const auto& w = combo[it->second];
			for (size_t k = 0; k < u.size(); ++k) u[k] = f.add(u[k], f.mul(c, w[k]));
		}
		if (v.empty()) return false;
		lead_of[v.lead_index()] = ecols.size();
		ecols.push_back(std::move(v));
		combo.push_back(std::move(u));
		return true;
	}

	class_solver(const barcode_with_reps& bc, int gi, int p) {
		const filtered_complex& cx = *bc.cx;
		const fp_field& f = bc.field;
		index_t n = cx.prefix(gi);
		rep_bars = bc.alive_of_degree(p, gi);
		for (size_t k = 0; k < rep_bars.size(); ++k) {
			std::vector<coeff_t> unit(rep_bars.size(), 0);
			unit[k] = 1;
			insert(f, restrict_prefix(bc.bars[rep_bars[k]].rep, n).coeffs, std::move(unit));
		}
		if (p >= 1 && p <= cx.max_dim) {
			std::map<index_t, sparse_vec> cob;
			for (index_t s : cx.by_dim[p]) {
				if (s >= n) break;
				for (const auto& [facet, sign] : cx.boundary(s)) cob[facet].push(s, f.normalize(sign));
			}
			for (auto& [tau, col] : cob)
				insert(f, std::move(col), std::vector<coeff_t>(rep_bars.size(), 0));
		}
	}

	// class of a cocycle in the representative basis
	class_handle reduce(const fp_field& f, const sparse_vec& y) const {
		sparse_vec v = y;
		std::vector<coeff_t> u(rep_bars.size(), 0);
		while (!v.empty()) {
			auto it = lead_of.find(v.lead_index());
			if (it == lead_of.end())
				throw internal_error("cocycle not expressible in the representative basis");
			coeff_t c = f.div(v.lead_coeff(), ecols[it->second].lead_coeff());
			v = axpy(f, v, f.neg(c), ecols[it->second]);
			const auto& w = combo[it->second];
			for (size_t k = 0; k < u.size(); ++k) u[k] = f.add(u[k], f.mul(c, w[k]));
		}
		class_handle out;
		for (size_t k = 0; k < u.size(); ++k)
			if (u[k] != 0) out.coords.emplace_back(rep_bars[k], u[k]);
		out.zero = out.coords.empty();
		return out;
	}
};

struct barcode_with_reps::solver_entry {
	std::shared_ptr<const class_solver> solver;
	uint64_t stamp = 0;
	size_t bytes = 0;
};

inline std::shared_ptr<const barcode_with_reps::class_solver> barcode_with_reps::solver_at(
    int gi, int p) const {
	auto key = std::make_pair(gi, p);
	{
		std::lock_guard<std::mutex> lock(solver_mutex);
		auto it = solver_cache.find(key);
		if (it != solver_cache.end()) {
			it->second.stamp = ++solver_clock;
			return it->second.solver;
		}
	}
	auto solver = std::make_shared<const class_solver>(*this, gi, p);
	size_t bytes = sizeof(class_solver);
	for (const sparse_vec& c : solver->ecols) bytes += c.size() * sizeof(c.entries[0]) + 48;
	for (const auto& u : solver->combo) bytes += u.size() * sizeof(coeff_t);
	std::lock_guard<std::mutex> lock(solver_mutex);
	auto it = solver_cache.find(key);
	if (it != solver_cache.end()) return it->second.solver;  // another thread won the race
	while (solver_bytes + bytes > solver_budget && !solver_cache.empty()) {
		auto victim = solver_cache.begin();
		for (auto v = solver_cache.begin(); v != solver_cache.end(); ++v)
			if (v->second.stamp < victim->second.stamp) victim = v;
		solver_bytes -= victim->second.bytes;
		solver_cache.erase(victim);
	}
	solver_bytes += bytes;
	solver_cache.emplace(key, solver_entry{solver, ++solver_clock, bytes});
	return solver;
}

inline bool barcode_with_reps::is_coboundary_at(const cochain& x, int gi) const {
	cochain r = restrict_prefix(x, cx->prefix(gi));
	if (r.is_zero()) return true;
	return solver_at(gi, x.degree)->reduce(field, r.coeffs).coords.empty();
}

inline bool barcode_with_reps::class_nonzero(const cochain& x, int gi) const {
	if (gi < 0) return false;
	cochain r = restrict_prefix(x, cx->prefix(gi));
	if (r.is_zero()) return false;
	if (!is_cocycle_at(r, gi)) return false;
	return !solver_at(gi, x.degree)->reduce(field, r.coeffs).coords.empty();
}

inline class_handle barcode_with_reps::class_coords(const cochain& x, int gi) const {
	if (gi < 0) return class_handle{};
	return solver_at(gi, x.degree)->reduce(field, restrict_prefix(x, cx->prefix(gi)).coeffs);
}

// --- persistent cohomology -------------------------------------------------

// Coboundary-style reduction processing simplices in filtration order while
// maintaining live cocycles; adding a simplex either creates a new cocycle or
// kills the youngest live cocycle its boundary pairs with. The cocycle frozen
// at death time is the bar's representative.
inline barcode_with_reps persistent_cohomology(std::shared_ptr<const filtered_complex> cx,
                                               const fp_field& field = fp_field(2)) {
	struct live_t {
		index_t birth_simplex;
		int degree;
		sparse_vec coeffs;
	};
	const filtered_complex& c = *cx;
	std::vector<live_t> live;
	barcode_with_reps bc;
	bc.cx = cx;
	bc.field = field;

	for (index_t j = 0; j < (index_t)c.size(); ++j) {
		int p = c.simplices[j].dim();
		std::vector<std::pair<size_t, coeff_t>> hits;
		if (p >= 1) {
			auto bd = c.boundary(j);
			for (size_t i = 0; i < live.size(); ++i) {
				if (live[i].degree != p - 1) continue;
				coeff_t v = 0;
				for (const auto& [facet, sign] : bd)
					v = field.add(v, field.mul(field.normalize(sign), live[i].coeffs.at(facet)));
				if (v != 0) hits.emplace_back(i, v);
			}
		}
		if (hits.empty()) {
			sparse_vec unit;
			unit.push(j, 1);
			live.push_back({j, p, std::move(unit)});
			continue;
		}
		// youngest live cocycle dies (ties impossible: birth simplices differ)
		size_t star = 0;
		for (size_t k = 1; k < hits.size(); ++k)
			if (live[hits[k].first].birth_simplex > live[hits[star].first].birth_simplex) star = k;
		const auto [is, cs] = hits[star];
		double birth = c.values[live[is].birth_simplex];
		double death = c.values[j];
		if (birth != death) {
			bar_t b;
			b.degree = p - 1;
			b.birth = birth;
			b.death = death;
			b.birth_gi = c.grid_index_at(birth);
			b.death_gi = c.grid_index_at(death);
			b.rep.degree = p - 1;
			b.rep.coeffs = live[is].coeffs;
			bc.bars.push_back(std::move(b));
		}
		for (const auto& [i, ci] : hits) {
			if (i == is) continue;
			live[i].coeffs = axpy(field, live[i].coeffs, field.neg(field.div(ci, cs)), live[is].coeffs);
		}
		live.erase(live.begin() + is);
	}
	for (const live_t& z : live) {
		bar_t b;
		b.degree = z.degree;
		b.birth = c.values[z.birth_simplex];
		b.birth_gi = c.grid_index_at(b.birth);
		b.rep.degree = z.degree;
		b.rep.coeffs = z.coeffs;
		bc.bars.push_back(std::move(b));
	}
	std::sort(bc.bars.begin(), bc.bars.end(), [](const bar_t& a, const bar_t& b) {
		if (a.degree != b.degree) return a.degree < b.degree;
		if (a.birth != b.birth) return a.birth < b.birth;
		bool ai = a.infinite(), bi = b.infinite();
		if (ai != bi) return bi;
		if (!ai && a.death != b.death) return a.death < b.death;
		return a.rep.coeffs < b.rep.coeffs;
	});
	for (size_t i = 0; i < bc.bars.size(); ++i)
		if (bc.bars[i].degree >= 1) bc.positive.push_back(i);
	return bc;
}

// Public class query: strict about the cocycle precondition.
inline class_handle restrict_class(const barcode_with_reps& bc, const cochain& x, double t) {
	int gi = bc.cx->grid_index_at(t);
	if (gi < 0) return class_handle{};
	cochain r = restrict_prefix(x, bc.cx->prefix(gi));
	if (!bc.is_cocycle_at(r, gi)) {
		std::ostringstream os;
		os << "not a cocycle at " << t;
		throw input_error(os.str());
	}
	if (r.is_zero() || bc.is_coboundary_at(r, gi)) return class_handle{};
	return bc.class_coords(x, gi);
}

inline bool is_coboundary(const barcode_with_reps& bc, const cochain& x, double t) {
	int gi = bc.cx->grid_index_at(t);
	if (gi < 0) return true;
	cochain r = restrict_prefix(x, bc.cx->prefix(gi));
	if (!bc.is_cocycle_at(r, gi)) {
		std::ostringstream os;
		os << "not a cocycle at " << t;
		throw input_error(os.str());
	}
	return bc.is_coboundary_at(r, gi);
}

}  // namespace pcup
