#pragma once

// Splitter sets as perfect codes correcting one limited-magnitude error:
// a verified splitting of Z_p by [-k1,k2]* yields a length-|S| code whose
// syndrome decomposes uniquely as (magnitude) x (position).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "splitterlab/splitting.hpp"
#include "splitterlab/zmod.hpp"

namespace splitterlab {

// Code over Z_p of length n = |S|; underlying certificate re-verified at
// construction, multipliers must carry interval form for the signed
// magnitude semantics.
class CodeSpec {
  public:
    static CodeSpec from_certificate(const SplittingCertificate& cert) {
        MultiplierSet m(cert.multipliers);
        if (!m.interval_form())
            throw std::invalid_argument("CodeSpec: multipliers must be an interval [-k1,k2]*");
        if (!verify_splitting(m, cert.splitters, cert.modulus))
            throw std::invalid_argument("CodeSpec: certificate does not verify");
        CodeSpec spec(std::move(m), cert.modulus, cert.splitters);
        return spec;
    }

    u64 p() const { return p_; }
    size_t length() const { return splitters_.size(); }
    const MultiplierSet& multipliers() const { return mult_; }
    const std::vector<u64>& splitters() const { return splitters_; }

    u64 syndrome(const std::vector<u64>& word) const {
        if (word.size() != splitters_.size())
            throw std::invalid_argument("syndrome: word length mismatch");
        u64 s = 0;
        for (size_t i = 0; i < word.size(); ++i)
            s = add_mod(s, mul_mod(splitters_[i], word[i] % p_, p_), p_);
        return s;
    }

    // Systematic: message fills the first n-1 cells, the last splitter
    // position carries the check symbol that zeroes the syndrome.
    std::vector<u64> encode(const std::vector<u64>& message) const {
        if (message.size() + 1 != splitters_.size())
            throw std::invalid_argument("encode: message must have length n-1");
        std::vector<u64> word(message);
        for (u64& x : word) x %= p_;
        word.push_back(0);
        u64 s = syndrome(word);
        u64 check = mul_mod(sub_mod(0, s, p_), inv_mod(splitters_.back(), p_), p_);
        word.back() = check;
        return word;
    }

    struct Correction {
        size_t position = 0;
        i64 magnitude = 0;  // signed, in [-k1, k2]*
    };

    enum class DecodeStatus { clean, corrected, uncorrectable };

    struct DecodeResult {
        DecodeStatus status = DecodeStatus::clean;
        std::vector<u64> word;
        std::optional<Correction> correction;
    };

    // At most one error of magnitude in [-k1,k2]*: the nonzero syndrome
    // decomposes uniquely as m * s_i by the splitting property, locating
    // the position and the signed magnitude.
    DecodeResult decode(const std::vector<u64>& received) const {
        u64 s = syndrome(received);
        if (s == 0) return {DecodeStatus::clean, received, std::nullopt};
        for (size_t i = 0; i < splitters_.size(); ++i) {
            u64 e = mul_mod(s, inv_mod(splitters_[i], p_), p_);
            auto it = magnitude_of_.find(e);
            if (it == magnitude_of_.end()) continue;
            std::vector<u64> fixed(received);
            fixed[i] = sub_mod(fixed[i] % p_, e, p_);
            Correction c{i, it->second};
            return {DecodeStatus::corrected, std::move(fixed), c};
        }
        return {DecodeStatus::uncorrectable, received, std::nullopt};
    }

  private:
    CodeSpec(MultiplierSet m, u64 p, std::vector<u64> splitters)
        : mult_(std::move(m)), p_(p), splitters_(std::move(splitters)) {
        for (i64 x : mult_.elements()) magnitude_of_[canonical_mod(x, p_)] = x;
    }

    MultiplierSet mult_;
    u64 p_;
    std::vector<u64> splitters_;
    std::map<u64, i64> magnitude_of_;  // reduced residue -> signed magnitude
};

}  // namespace splitterlab
