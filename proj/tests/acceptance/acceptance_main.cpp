// One line per criterion; exit status 1 when any criterion fails.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "weylscope/acceptance.hpp"

using namespace weylscope;

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) ids = criterion_ids();
  int failed = 0;
  for (int id : ids) {
    const auto r = run_criterion(id);
    if (!r.pass) ++failed;
    std::printf("criterion %2d  %s  %-38s %7.1f s  %s\n", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str(), r.runtime_s,
                r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(ids.size()) - failed, ids.size());
  return failed ? 1 : 0;
}
