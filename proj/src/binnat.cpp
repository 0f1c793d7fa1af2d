#include "halg/binnat.hpp"

namespace halg::fin {

namespace {

void trim(BinNat& b) {
    while (!b.bits.empty() && b.bits.back() == 0) b.bits.pop_back();
}

}  // namespace

BinNat to_binary(std::uint64_t n) {
    BinNat b;
    while (n) {
        b.bits.push_back(static_cast<std::uint8_t>(n & 1));
        n >>= 1;
    }
    return b;
}

std::uint64_t from_binary(const BinNat& b) {
    std::uint64_t n = 0;
    for (std::size_t i = b.bits.size(); i-- > 0;) n = (n << 1) | b.bits[i];
    return n;
}

BinNat bin_add(const BinNat& a, const BinNat& b) {
    BinNat r;
    std::uint8_t carry = 0;
    std::size_t n = std::max(a.bits.size(), b.bits.size());
    r.bits.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t s = carry;
        if (i < a.bits.size()) s += a.bits[i];
        if (i < b.bits.size()) s += b.bits[i];
        r.bits.push_back(s & 1);
        carry = s >> 1;
    }
    if (carry) r.bits.push_back(1);
    trim(r);
    return r;
}

BinNat bin_mul(const BinNat& a, const BinNat& b) {
    BinNat acc;
    for (std::size_t i = 0; i < a.bits.size(); ++i) {
        if (!a.bits[i]) continue;
        BinNat shifted;
        shifted.bits.assign(i, 0);
        shifted.bits.insert(shifted.bits.end(), b.bits.begin(), b.bits.end());
        acc = bin_add(acc, shifted);
    }
    trim(acc);
    return acc;
}

BinNat bin_succ(const BinNat& a) {
    BinNat one;
    one.bits = {1};
    return bin_add(a, one);
}

std::string bin_show(const BinNat& b) {
    if (b.is_zero()) return "0";
    std::string s;
    for (std::size_t i = b.bits.size(); i-- > 0;) s += static_cast<char>('0' + b.bits[i]);
    return s;
}

}  // namespace halg::fin
