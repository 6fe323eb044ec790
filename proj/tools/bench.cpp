// Compares the serial reference kernels against the OpenMP ones on the
// heavier inputs: subgroup lattice enumeration, the fixed-dimension table and
// the full exclusion run.

#include <chrono>
#include <iostream>
#include <string>

#include "oliver/engine.hpp"
#include "oliver/namedgroups.hpp"
#include "oliver/parallel.hpp"

using namespace oliver;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void bench_group(const std::string& spec, long long dim) {
  Group G = parse_group_spec(spec);
  std::cout << spec << " (order " << G.order() << ")\n";

  LatticeOptions serial_opt{100000, false};
  LatticeOptions parallel_opt{100000, true};
  double t_lat_s = 0, t_lat_p = 0;
  SubgroupLattice L = SubgroupLattice::enumerate(G, parallel_opt);
  t_lat_s = time_ms([&] { SubgroupLattice::enumerate(G, serial_opt); });
  t_lat_p = time_ms([&] { SubgroupLattice::enumerate(G, parallel_opt); });
  std::cout << "  lattice          serial " << t_lat_s << " ms, parallel " << t_lat_p
            << " ms (" << L.num_subgroups() << " subgroups)\n";

  auto reals = realify(compute_character_table(G), G);
  double t_fd_s = time_ms([&] { fixed_dim_table(G, reals, L, false); });
  double t_fd_p = time_ms([&] { fixed_dim_table(G, reals, L, true); });
  std::cout << "  fixdim table     serial " << t_fd_s << " ms, parallel " << t_fd_p
            << " ms\n";

  auto tags = tag_classes(G, L, true);
  double t_tr_s =
      time_ms([&] { good_triples(G, L, tags, StrategyFilter::both, false); });
  double t_tr_p =
      time_ms([&] { good_triples(G, L, tags, StrategyFilter::both, true); });
  std::cout << "  triple streams   serial " << t_tr_s << " ms, parallel " << t_tr_p
            << " ms\n";

  Session session = Session::build(std::move(G));
  ExcludeOptions opt_serial;
  opt_serial.parallel = false;
  ExcludeOptions opt_parallel;
  double t_ex_s = time_ms([&] { exclude(session, spec, dim, opt_serial); });
  double t_ex_p = time_ms([&] { exclude(session, spec, dim, opt_parallel); });
  std::cout << "  exclude --dim " << dim << " serial " << t_ex_s << " ms, parallel "
            << t_ex_p << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::cout << "threads: " << parallel::thread_count() << "\n";
  if (argc > 1) {
    bench_group(argv[1], argc > 2 ? std::stoll(argv[2]) : 6);
    return 0;
  }
  bench_group("A5xC3", 6);
  bench_group("S4xC3", 6);
  bench_group("A5xC7", 6);
  return 0;
}
