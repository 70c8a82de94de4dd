// Serial against OpenMP timings for the parallel kernels, with equality checks.
// usage: bench_parallel [repeats]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "splitdec/catalog.hpp"
#include "splitdec/classifier.hpp"
#include "splitdec/commuting_graph.hpp"
#include "splitdec/minimizer.hpp"

using namespace splitdec;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

int mismatches = 0;

void row(const std::string& name, double serial, double parallel, bool equal) {
  std::printf("%-34s serial %9.4f s  parallel %9.4f s  speedup %5.2f  %s\n", name.c_str(), serial, parallel,
              serial / parallel, equal ? "equal" : "MISMATCH");
  mismatches += !equal;
}

std::vector<Elem> nontrivial(const Group& G) {
  std::vector<Elem> v;
  for (Elem x = 1; x < G.order(); ++x) v.push_back(x);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled\n");
#endif

  for (const char* name : {"A6", "L2_8", "Sz8"}) {
    const Group G = Catalog::builtin().get(name);
    const auto verts = nontrivial(G);
    CommutingGraph s = CommutingGraph::build_serial(G, verts), p = CommutingGraph::build(G, verts);
    const double ts = best_of(repeats, [&] { s = CommutingGraph::build_serial(G, verts); });
    const double tp = best_of(repeats, [&] { p = CommutingGraph::build(G, verts); });
    row(std::string("commuting graph ") + name, ts, tp, s == p);
  }

  for (const char* name : {"A6", "Sz8"}) {
    const Group G = Catalog::builtin().get(name);
    MinOptions serial, parallel;
    serial.parallel = false;
    MinResult rs, rp;
    const double ts = best_of(repeats, [&] { rs = exact_min_fixed_A(G, trivial_subgroup(G), serial); });
    const double tp = best_of(repeats, [&] { rp = exact_min_fixed_A(G, trivial_subgroup(G), parallel); });
    row(std::string("component coloring ") + name + " A=1", ts, tp, rs.n == rp.n && rs.proven_exact == rp.proven_exact);
  }

  {
    const auto groups = default_sweep_groups();
    SweepOptions serial, parallel;
    serial.parallel = false;
    SweepReport rs, rp;
    const double ts = best_of(repeats, [&] { rs = sweep(groups, 3, serial); });
    const double tp = best_of(repeats, [&] { rp = sweep(groups, 3, parallel); });
    bool equal = rs.records.size() == rp.records.size();
    for (std::size_t i = 0; equal && i < rs.records.size(); ++i) equal = rs.records[i].to_json() == rp.records[i].to_json();
    row("classifier sweep n=3", ts, tp, equal);
  }
  return mismatches == 0 ? 0 : 1;
}
