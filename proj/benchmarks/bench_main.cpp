#include <benchmark/benchmark.h>

#include "binfty/algebra_file.hpp"
#include "binfty/inf_bialgebra.hpp"
#include "binfty/twisting.hpp"

using namespace binfty;

namespace {

void BM_derive_underlying(benchmark::State &state) {
	auto alg = corpus_algebra("poly3").algebra();
	int cap = static_cast<int>(state.range(0));
	for (auto _ : state) {
		BInfinity s = underlying_b_infinity(alg, cap);
		benchmark::DoNotOptimize(s.b.m.size());
	}
}
BENCHMARK(BM_derive_underlying)->Arg(3)->Arg(4)->Arg(5);

void BM_check_multibrace(benchmark::State &state) {
	auto alg = corpus_algebra("upper2").algebra();
	BInfinity s = underlying_b_infinity(alg, static_cast<int>(state.range(0)));
	for (auto _ : state) {
		LawReport r = check_multibrace(s.b, static_cast<int>(state.range(0)));
		benchmark::DoNotOptimize(r.all_pass());
	}
}
BENCHMARK(BM_check_multibrace)->Arg(4)->Arg(5)->Arg(6);

void BM_twisting_inverse(benchmark::State &state) {
	auto alg = corpus_algebra("poly3").algebra();
	Twisting tau = twisting_from_product(alg.space, alg.circ, static_cast<int>(state.range(0)));
	for (auto _ : state) {
		Twisting inv = invert_twisting(tau);
		benchmark::DoNotOptimize(inv.t.size());
	}
}
BENCHMARK(BM_twisting_inverse)->Arg(4)->Arg(6);

void BM_primitives_kernel(benchmark::State &state) {
	std::vector<GradedSpace::Generator> gens;
	for (int i = 0; i < static_cast<int>(state.range(0)); ++i)
		gens.push_back({"v" + std::to_string(i), 0});
	GradedSpace V = GradedSpace::make(std::move(gens));
	auto ws = word_space(V, 4);
	auto fc = truncated_tensor_coalgebra(ws);
	for (auto _ : state) {
		auto prim = primitives(fc);
		benchmark::DoNotOptimize(prim.size());
	}
}
BENCHMARK(BM_primitives_kernel)->Arg(2)->Arg(3);

void BM_shuffle_product(benchmark::State &state) {
	GradedSpace V = GradedSpace::make({{"a", 1}, {"b", 2}});
	Tensor x{{Word{0, 1, 0}, Rational(1)}};
	Tensor y{{Word{1, 0}, Rational(1)}};
	for (auto _ : state) {
		Tensor r = shuffle_product(V, x, y, 6);
		benchmark::DoNotOptimize(r.size());
	}
}
BENCHMARK(BM_shuffle_product);

void BM_enveloping_round_trip(benchmark::State &state) {
	auto alg = corpus_algebra("ext1").algebra();
	BInfinity a = underlying_b_infinity(alg, 3);
	for (auto _ : state) {
		TwoAssocDiffBialgebra u = enveloping(a, 3);
		PrimResult res = prim_b_infinity(u, 3);
		benchmark::DoNotOptimize(res.conilpotent);
	}
}
BENCHMARK(BM_enveloping_round_trip);

} // namespace

BENCHMARK_MAIN();
