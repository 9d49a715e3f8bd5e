// Runs the bundled verification suite and prints one line per criterion.
#include "nfalg/paper_suite.hpp"

#include <iostream>

int main() {
    auto results = nfalg::suite::run_all();
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (" << r.detail << ")\n";
        if (!r.pass) all = false;
    }
    std::cout << (all ? "all criteria passed" : "there were failures") << std::endl;
    return all ? 0 : 1;
}
