// Prints size and coverage figures for the first few generations of a
// system: a preset name or a definition file given as the only argument.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lsys/lsys.hpp"

int main(int argc, char** argv) {
  const std::string which = argc > 1 ? argv[1] : "hilbert-a";
  std::string text;
  if (auto def = lsys::preset_definition(which)) {
    text = *def;
  } else {
    std::ifstream in(which);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  try {
    const lsys::LSystem sys = lsys::parse_system_file(text);
    std::cout << sys.name << '\n';
    for (unsigned m = 1; m <= 6; ++m) {
      const lsys::Path p = lsys::decode_path(sys, m);
      const auto box = lsys::bounding_box(p);
      const auto cover = lsys::check_path_grid_coverage(p, m);
      std::cout << "  m=" << m << "  symbols=" << lsys::generation_length(sys, m)
                << "  nodes=" << p.size() << "  box=" << box.width() + 1 << 'x'
                << box.height() + 1 << "  covers grid: " << (cover.passed ? "yes" : "no")
                << '\n';
    }
  } catch (const lsys::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}
