// From one splitting of Z_7 by [1,3] to infinitely many split primes: the
// bootstrap builds the index logarithm, lifts it, and scans.

#include <iostream>

#include "splitterlab/logarithms.hpp"

using namespace splitterlab;

int main() {
    auto m = MultiplierSet({1, 2, 3});
    auto base = find_splitter(m, 7);
    if (!base.found()) return 1;
    std::cout << "[1,3] splits Z_7 with S = {";
    for (u64 s : base.value.splitters) std::cout << " " << s;
    std::cout << " }\n";

    auto certs = bootstrap_from_prime(m, 7, 100000, /*limit=*/5);
    std::cout << "bootstrap finds " << certs.size() << " more split primes:\n";
    for (const auto& c : certs)
        std::cout << "  p = " << c.modulus << "  (|S| = " << c.splitters.size() << ")\n";
    return certs.empty() ? 1 : 0;
}
