#include "binfty/twisting.hpp"

namespace binfty {

Twisting Twisting::make(GradedSpace space, int cap, std::map<int, MultiMap> components) {
	if (cap < 1)
		throw Error("Twisting: cap must be >= 1");
	for (const auto &[n, mm] : components) {
		if (n < 1 || n > cap)
			throw Error("Twisting: component index outside 1..cap");
		if (mm.in_arity != n || mm.out_arity != 1)
			throw Error("Twisting: t_n arity mismatch");
		if (!mm.is_zero() && mm.degree != 0)
			throw Error("Twisting: t_n must have degree 0");
	}
	auto it = components.find(1);
	if (it == components.end() || !multimap_equal(it->second, MultiMap::identity(space)))
		throw Error("Twisting: t_1 must be the identity");
	Twisting tau;
	tau.space = std::move(space);
	tau.cap = cap;
	tau.t = std::move(components);
	return tau;
}

const MultiMap *Twisting::at(int n) const {
	auto it = t.find(n);
	return it == t.end() ? nullptr : &it->second;
}

Tensor Twisting::apply_word(const Word &w) const {
	int n = static_cast<int>(w.size());
	if (n == 0)
		return Tensor{{Word{}, Rational(1)}};
	if (n > cap)
		throw CapError("Twisting: word length exceeds cap");
	Tensor out;
	for (int r = 1; r <= n; ++r) {
		for (const auto &comp : compositions(n, r, true)) {
			std::vector<AppliedFactor> factors;
			factors.reserve(r);
			int pos = 0;
			bool dead = false;
			for (int a = 0; a < r; ++a) {
				const MultiMap *m = at(comp[a]);
				if (!m) {
					dead = true;
					break;
				}
				Word block(w.begin() + pos, w.begin() + pos + comp[a]);
				pos += comp[a];
				factors.push_back({0, space.degree_of(block), m->row(block)});
			}
			if (!dead)
				tensor_add(out, combine_factors(factors));
		}
	}
	return out;
}

Tensor Twisting::apply(const Tensor &x) const {
	Tensor out;
	for (const auto &[w, c] : x)
		tensor_add(out, apply_word(w), c);
	return out;
}

MultiMap iterated_product(const GradedSpace &V, const MultiMap &op, int n) {
	if (n < 1)
		throw Error("iterated_product: n must be >= 1");
	if (op.in_arity != 2 || op.out_arity != 1)
		throw Error("iterated_product: op must have arity 2 -> 1");
	MultiMap acc = MultiMap::identity(V);
	const MultiMap id = MultiMap::identity(V);
	for (int k = 2; k <= n; ++k)
		acc = compose_multimap(V, op, {&acc, &id});
	return acc;
}

Twisting twisting_from_product(const GradedSpace &V, const MultiMap &circ, int cap) {
	LawReport report;
	report.law = "circ associativity";
	probe_associative(V, circ, "circ", report);
	if (!report.all_pass())
		throw ValidationError("twisting_from_product: circ is not associative; " +
		                          report.summary(),
		                      report);
	std::map<int, MultiMap> t;
	for (int n = 1; n <= cap; ++n)
		t.emplace(n, iterated_product(V, circ, n));
	return Twisting::make(V, cap, std::move(t));
}

Twisting invert_twisting(const Twisting &tau) {
	const GradedSpace &V = tau.space;
	std::map<int, MultiMap> u;
	u.emplace(1, MultiMap::identity(V));
	for (int n = 2; n <= tau.cap; ++n) {
		std::map<Word, Tensor, WordLess> table;
		for (const Word &w : basis_words(V, n)) {
			Tensor acc;
			for (int r = 1; r < n; ++r) {
				for (const auto &comp : compositions(n, r, true)) {
					std::vector<AppliedFactor> factors;
					factors.reserve(r);
					int pos = 0;
					bool dead = false;
					for (int a = 0; a < r; ++a) {
						const MultiMap *m = tau.at(comp[a]);
						if (!m) {
							dead = true;
							break;
						}
						Word block(w.begin() + pos, w.begin() + pos + comp[a]);
						pos += comp[a];
						factors.push_back({0, V.degree_of(block), m->row(block)});
					}
					if (dead)
						continue;
					for (const auto &[mid, c] : combine_factors(factors))
						tensor_add(acc, u.at(r).row(mid), c);
				}
			}
			Tensor row = tensor_scaled(acc, Rational(-1));
			if (!row.empty())
				table.emplace(w, std::move(row));
		}
		u.emplace(n, MultiMap::make(V, n, 1, 0, std::move(table)));
	}
	return Twisting::make(V, tau.cap, std::move(u));
}

BInfinity twist_b_infinity(const BInfinity &s, const Twisting &tau, int arity_cap) {
	if (arity_cap > tau.cap)
		throw CapError("twist_b_infinity: arity cap exceeds twisting cap");
	if (arity_cap > s.a.arity_cap || arity_cap > s.b.arity_cap)
		throw CapError("twist_b_infinity: arity cap exceeds structure cap");
	const GradedSpace &V = s.a.space;
	Twisting inv = invert_twisting(tau);

	auto project = [](const Tensor &x) {
		Tensor out;
		for (const auto &[w, c] : x)
			if (w.size() == 1)
				out.emplace(w, c);
		return out;
	};

	std::map<int, MultiMap> am;
	for (int n = 1; n <= arity_cap; ++n) {
		std::map<Word, Tensor, WordLess> table;
		for (const Word &w : basis_words(V, n)) {
			Tensor mid = coderivation_apply(s.a, tau.apply_word(w));
			Tensor row = project(inv.apply(mid));
			if (!row.empty())
				table.emplace(w, std::move(row));
		}
		MultiMap mm = MultiMap::make(V, n, 1, -1, std::move(table));
		if (!mm.is_zero())
			am.emplace(n, std::move(mm));
	}

	std::map<std::pair<int, int>, MultiMap> bm;
	for (int i = 1; i < arity_cap; ++i) {
		for (int j = 1; i + j <= arity_cap; ++j) {
			std::map<Word, Tensor, WordLess> table;
			for (const Word &w : basis_words(V, i + j)) {
				Tensor x = tau.apply_word(Word(w.begin(), w.begin() + i));
				Tensor y = tau.apply_word(Word(w.begin() + i, w.end()));
				Tensor mid = multibrace_product(s.b, x, y);
				Tensor row = project(inv.apply(mid));
				if (!row.empty())
					table.emplace(w, std::move(row));
			}
			MultiMap mm = MultiMap::make(V, i + j, 1, 0, std::move(table));
			if (!mm.is_zero())
				bm.emplace(std::make_pair(i, j), std::move(mm));
		}
	}

	return BInfinity::make(AInfinity::make(V, arity_cap, std::move(am)),
	                       Multibrace::make(V, arity_cap, std::move(bm)));
}

} // namespace binfty
