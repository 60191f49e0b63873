// Runs the acceptance criteria with their pinned seeds and prints one
// PASS/FAIL line per criterion. Usage: dcolor_acceptance [suite] [threads]

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include "dcolor/acceptance.hpp"

int main(int argc, char** argv) {
    const std::string suite = argc > 1 ? argv[1] : "all";
    dcolor::AcceptOptions options;
    options.threads = argc > 2 ? static_cast<std::size_t>(std::stoul(argv[2])) : 0;
    options.progress = &std::cerr;
    try {
        const auto results = dcolor::run_acceptance(suite, options);
        std::cout << dcolor::format_acceptance_report(suite, results);
        return dcolor::all_passed(results) ? EXIT_SUCCESS : EXIT_FAILURE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
