#include <cstdlib>
#include <iostream>

#include "hgc/suite/criteria.hpp"

int main(int argc, char** argv) {
  hgc::suite::SuiteOptions options;
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  bool all = true;
  auto print = [&](const hgc::suite::CriterionResult& r) {
    std::cout << r.line() << " [" << r.seconds << " s]" << std::endl;
    all = all && r.pass;
  };
  if (only > 0)
    print(hgc::suite::run_criterion(only, options));
  else
    hgc::suite::run_all(options, print);
  return all ? 0 : 1;
}
