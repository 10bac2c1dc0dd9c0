// Times the parallel kernels against their serial references and checks that
// both produce the same member lists.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "simcore/finiteness.hpp"
#include "simcore/parallel.hpp"
#include "simcore/weyl_orbit.hpp"

using namespace simcore;

namespace {

double seconds(const std::function<void()>& work, int repeats) {
  auto begin = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) work();
  auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(end - begin).count() / repeats;
}

template <class Parallel, class Serial>
bool compare(const std::string& label, Parallel parallel, Serial serial, int repeats) {
  auto a = parallel();
  auto b = serial();
  double tp = seconds([&] { parallel(); }, repeats);
  double ts = seconds([&] { serial(); }, repeats);
  std::printf("%-34s members=%-6zu serial=%9.4fs parallel=%9.4fs speedup=%5.2f %s\n", label.c_str(), a.size(), ts, tp,
              tp > 0 ? ts / tp : 0.0, a == b ? "same" : "DIFFERENT");
  return a == b;
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::stoi(argv[1]) : 3;
  std::printf("threads=%d repeats=%d\n", thread_count(), repeats);
  bool same = true;

  for (auto [text, n] : {std::pair{"3:0,1", 20}, {"4:0,2,1", 12}, {"0:0,1", 10}}) {
    Datum d = parse_datum(text);
    same &= compare(std::string("orbit ") + text + " n=" + std::to_string(n), [&] { return orbit_members(d, n); },
                    [&] { return serial::orbit_members(d, n); }, repeats);
  }
  for (auto [text, n] : {std::pair{"0:0,0", 14}, {"0:1,3,0;0:3,0,1", 10}, {"2:0,1;0:0,3", 16}}) {
    DatumSet t = parse_datum_set(text);
    same &= compare(std::string("enumerate ") + text + " n=" + std::to_string(n),
                    [&] { return enumerate_members(t, n, Mode::bounded).members; },
                    [&] { return serial::enumerate_members(t, n, Mode::bounded).members; }, repeats);
  }
  DatumSet tri = parse_datum_set("0:1,3,0;0:3,0,1");
  same &= compare("complete 0:1,3,0;0:3,0,1", [&] { return enumerate_members(tri, 12, Mode::complete).members; },
                  [&] { return serial::enumerate_members(tri, 12, Mode::complete).members; }, repeats);
  return same ? 0 : 1;
}
