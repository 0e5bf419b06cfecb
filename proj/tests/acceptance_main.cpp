#include "willmore/acceptance.hpp"
#include <iostream>
int main() {
    const auto results = willmore::run_acceptance(&std::cerr);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name
                  << (r.detail.empty() ? "" : "  -- " + r.detail) << "\n";
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
