// Build a limited-magnitude code from a splitting of Z_13 by [-1,1]* and
// walk one encode / corrupt / decode cycle.

#include <iostream>

#include "splitterlab/codec.hpp"

using namespace splitterlab;

int main() {
    auto m = MultiplierSet::interval(1, 1);
    auto search = find_splitter(m, 13);
    if (!search.found()) {
        std::cerr << "no splitting found\n";
        return 1;
    }
    auto spec = CodeSpec::from_certificate(search.value);
    std::cout << "splitters:";
    for (u64 s : spec.splitters()) std::cout << " " << s;
    std::cout << "\ncode length " << spec.length() << " over Z_13\n";

    std::vector<u64> message{3, 1, 4, 1, 5};
    auto word = spec.encode(message);
    std::cout << "codeword:";
    for (u64 x : word) std::cout << " " << x;
    std::cout << "\n";

    auto corrupted = word;
    corrupted[2] = (corrupted[2] + 1) % 13;  // +1 error in cell 2
    auto decoded = spec.decode(corrupted);
    std::cout << "decoded " << (decoded.status == CodeSpec::DecodeStatus::corrected ? "with" : "without")
              << " correction";
    if (decoded.correction)
        std::cout << " at position " << decoded.correction->position << ", magnitude "
                  << decoded.correction->magnitude;
    std::cout << "\n";
    return decoded.word == word ? 0 : 1;
}
