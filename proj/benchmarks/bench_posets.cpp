#include <benchmark/benchmark.h>

#include "windlass/forest.hpp"
#include "windlass/hopf.hpp"
#include "windlass/leaning.hpp"
#include "windlass/order.hpp"
#include "windlass/poset.hpp"
#include "windlass/shell.hpp"
#include "windlass/term.hpp"

using namespace windlass;

namespace {

Term right_comb(int arity, int degree) {
    Term t = Term::leaf();
    for (int i = 0; i < degree; ++i) {
        std::vector<Term> kids(static_cast<std::size_t>(arity), Term::leaf());
        kids.back() = t;
        t = Term::node(a_symbol(arity), kids);
    }
    return t;
}

void upper_set_comb(benchmark::State& state) {
    Term t = right_comb(3, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(upper_set(t));
    state.counters["elements"] = static_cast<double>(upper_set(t).size());
}
BENCHMARK(upper_set_comb)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void fuss_catalan(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(fuss_catalan_poset(m, n));
}
BENCHMARK(fuss_catalan)->Args({1, 6})->Args({2, 6})->Args({3, 6})->Unit(benchmark::kMillisecond);

void el_check_comb(benchmark::State& state) {
    Poset p = upper_set(right_comb(2, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(el_check(p));
}
BENCHMARK(el_check_comb)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void mobius_rows(benchmark::State& state) {
    Poset p = rooted_tree_poset(static_cast<int>(state.range(0)));
    Comparability c(p);
    for (auto _ : state)
        for (int x = 0; x < p.size(); ++x) benchmark::DoNotOptimize(mobius_row(p, c, x));
}
BENCHMARK(mobius_rows)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void f_product(benchmark::State& state) {
    auto f = HopfElement::basis_element(Basis::F, f_up({Token{a_symbol(2), 2}, Token{a_symbol(1), 1}}));
    HopfElement x = f;
    for (int i = 1; i < state.range(0); ++i) x = product(x, f);
    for (auto _ : state) benchmark::DoNotOptimize(product(x, f));
}
BENCHMARK(f_product)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void change_basis_f_to_e(benchmark::State& state) {
    DecorationWord w;
    for (int i = 0; i < state.range(0); ++i) w.push_back(Token{a_symbol(2), 2});
    auto f = HopfElement::basis_element(Basis::F, f_up(w));
    for (auto _ : state) benchmark::DoNotOptimize(change_basis(f, Basis::E));
}
BENCHMARK(change_basis_f_to_e)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
