// golden_check <cli> <golden dir> [--update]
#include <fstream>
#include <iostream>

#include "golden.hpp"

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: golden_check <cli> <golden dir> [--update]\n";
    return 2;
  }
  const std::string cli = argv[1], dir = argv[2];
  if (argc > 3 && std::string(argv[3]) == "--update") {
    for (const auto& c : golden::load_cases(dir)) {
      const golden::Run r = golden::run(cli, dir, c, 1);
      std::ofstream(golden::expected_path(dir, c), std::ios::binary) << r.out;
      std::cout << c.name << ": exit " << r.exit_code << (r.exit_code == c.exit_code ? "" : "  (UNEXPECTED)") << "\n";
    }
    return 0;
  }
  const golden::Summary s = golden::check_all(cli, dir);
  for (const auto& f : s.failures) std::cout << "FAIL " << f << "\n";
  std::cout << s.cases << " cases, " << s.runs << " runs, " << s.failures.size() << " failures\n";
  return s.ok() ? 0 : 1;
}
