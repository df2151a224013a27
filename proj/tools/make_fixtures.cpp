// Writes the shipped generator files for the named fixtures.

#include <algorithm>
#include <fstream>
#include <iostream>

#include "blockdeg/fixtures.hpp"

using namespace blockdeg;

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "data/groups";
    for (const auto& name : fixtures::builtin_names()) {
        auto g = fixtures::resolve_group(name);
        std::string fname = name;
        for (auto& c : fname)
            if (c == '(') c = '_';
        fname.erase(std::remove(fname.begin(), fname.end(), ')'), fname.end());
        std::ofstream out(dir + "/" + fname + ".grp");
        if (!out.good()) {
            std::cerr << "cannot write to " << dir << "\n";
            return 1;
        }
        out << "# " << name << ", |G| = " << g.order().get_str() << "\n";
        out << permgroup::format_group(g);
        std::cout << fname << ".grp  |G| = " << g.order().get_str() << "\n";
    }
    return 0;
}
