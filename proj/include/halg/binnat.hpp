#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace halg::fin {

// Binary natural numbers in canonical little-endian form (no trailing zero
// bits, zero is the empty list). Arithmetic is implemented directly on the
// bit representation so the semiring homomorphism checks against unary
// arithmetic are meaningful.
struct BinNat {
    std::vector<std::uint8_t> bits;  // little-endian, each 0 or 1

    bool is_zero() const { return bits.empty(); }
    bool canonical() const { return bits.empty() || bits.back() == 1; }
    friend bool operator==(const BinNat&, const BinNat&) = default;
};

BinNat to_binary(std::uint64_t n);
std::uint64_t from_binary(const BinNat& b);

BinNat bin_add(const BinNat& a, const BinNat& b);
BinNat bin_mul(const BinNat& a, const BinNat& b);
BinNat bin_succ(const BinNat& a);

std::string bin_show(const BinNat& b);  // most significant bit first, "0" for zero

}  // namespace halg::fin
