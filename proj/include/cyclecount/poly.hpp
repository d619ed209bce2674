#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cyclecount {

using BigInt = boost::multiprecision::cpp_int;

// Generating polynomial of cycle counts by length: coefficient i counts
// cycles of total weight i. Total-count mode runs with all weights zero,
// so everything lands in coefficient 0.
class LengthPoly {
public:
    LengthPoly() = default;
    static LengthPoly monomial(std::size_t degree, const BigInt& coeff = 1);

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    BigInt total() const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    LengthPoly& operator+=(const LengthPoly& o);
    // Caller guarantees no coefficient goes negative.
    LengthPoly& operator-=(const LengthPoly& o);
    LengthPoly operator*(const LengthPoly& o) const;
    LengthPoly operator+(const LengthPoly& o) const { LengthPoly r = *this; r += o; return r; }
    bool operator==(const LengthPoly& o) const { return coeffs_ == o.coeffs_; }

    // Divide by z^k; the low k coefficients must be zero.
    LengthPoly shifted_down(std::size_t k) const;

    std::map<std::size_t, BigInt> nonzero_terms() const;
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

}  // namespace cyclecount
