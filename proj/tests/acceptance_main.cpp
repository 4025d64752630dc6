#include <cstdio>

#include "mplab/acceptance.hpp"

int main() {
    auto results = mplab::run_acceptance("all", 1);
    bool ok = mplab::print_acceptance(results);
    return ok ? 0 : 1;
}
