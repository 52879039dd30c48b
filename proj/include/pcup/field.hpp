#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pcup {

typedef int64_t index_t;
typedef int64_t coeff_t;

struct input_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct internal_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// Arithmetic in Z/p for a runtime prime p. Residues are kept in [0, p).
struct fp_field {
	coeff_t p;

	explicit fp_field(coeff_t prime = 2) : p(prime) {
		if (prime < 2) throw input_error("field characteristic must be a prime >= 2");
		for (coeff_t d = 2; d * d <= prime; ++d)
			if (prime % d == 0) throw input_error("field characteristic must be prime");
	}

	coeff_t normalize(coeff_t x) const {
		x %= p;
		return x < 0 ? x + p : x;
	}
	coeff_t add(coeff_t a, coeff_t b) const { return (a + b) % p; }
	coeff_t sub(coeff_t a, coeff_t b) const { return normalize(a - b); }
	coeff_t mul(coeff_t a, coeff_t b) const { return (a * b) % p; }
	coeff_t neg(coeff_t a) const { return a == 0 ? 0 : p - a; }

	coeff_t inv(coeff_t a) const {
		a = normalize(a);
		if (a == 0) throw internal_error("inverse of zero");
		// Fermat: a^(p-2) mod p
		coeff_t result = 1, base = a, e = p - 2;
		while (e) {
			if (e & 1) result = mul(result, base);
			base = mul(base, base);
			e >>= 1;
		}
		return result;
	}
	coeff_t div(coeff_t a, coeff_t b) const { return mul(normalize(a), inv(b)); }

	bool operator==(const fp_field& other) const { return p == other.p; }
};

// Sparse vector over Z/p: entries sorted by index, no zero coefficients stored.
struct sparse_vec {
	std::vector<std::pair<index_t, coeff_t>> entries;

	bool empty() const { return entries.empty(); }
	size_t size() const { return entries.size(); }
	index_t lead_index() const { return entries.front().first; }
	coeff_t lead_coeff() const { return entries.front().second; }

	coeff_t at(index_t i) const {
		auto it = std::lower_bound(entries.begin(), entries.end(), i,
		                           [](const auto& e, index_t k) { return e.first < k; });
		return (it != entries.end() && it->first == i) ? it->second : 0;
	}

	void push(index_t i, coeff_t c) {
		if (!entries.empty() && entries.back().first >= i)
			throw internal_error("sparse_vec entries must be pushed in increasing index order");
		if (c != 0) entries.emplace_back(i, c);
	}

	bool operator==(const sparse_vec& other) const { return entries == other.entries; }
	bool operator<(const sparse_vec& other) const { return entries < other.entries; }
};

// a + c*b, merged in one pass
inline sparse_vec axpy(const fp_field& f, const sparse_vec& a, coeff_t c, const sparse_vec& b) {
	sparse_vec out;
	c = f.normalize(c);
	if (c == 0) return a;
	out.entries.reserve(a.size() + b.size());
	size_t i = 0, j = 0;
	while (i < a.size() || j < b.size()) {
		if (j == b.size() || (i < a.size() && a.entries[i].first < b.entries[j].first)) {
			out.entries.push_back(a.entries[i++]);
		} else if (i == a.size() || b.entries[j].first < a.entries[i].first) {
			coeff_t v = f.mul(c, b.entries[j].second);
			if (v != 0) out.entries.emplace_back(b.entries[j].first, v);
			++j;
		} else {
			coeff_t v = f.add(a.entries[i].second, f.mul(c, b.entries[j].second));
			if (v != 0) out.entries.emplace_back(a.entries[i].first, v);
			++i, ++j;
		}
	}
	return out;
}

inline sparse_vec scale(const fp_field& f, const sparse_vec& a, coeff_t c) {
	sparse_vec out;
	c = f.normalize(c);
	if (c == 0) return out;
	out.entries.reserve(a.size());
	for (const auto& [i, v] : a.entries) out.entries.emplace_back(i, f.mul(c, v));
	return out;
}

}  // namespace pcup
