#include "cyclecount/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclecount {

LengthPoly LengthPoly::monomial(std::size_t degree, const BigInt& coeff) {
    LengthPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, 0);
        p.coeffs_[degree] = coeff;
    }
    return p;
}

BigInt LengthPoly::total() const {
    BigInt t = 0;
    for (const auto& c : coeffs_) t += c;
    return t;
}

void LengthPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

LengthPoly& LengthPoly::operator+=(const LengthPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

LengthPoly& LengthPoly::operator-=(const LengthPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
        if (coeffs_[i] < 0) throw std::logic_error("LengthPoly: negative coefficient");
    }
    trim();
    return *this;
}

LengthPoly LengthPoly::operator*(const LengthPoly& o) const {
    LengthPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

LengthPoly LengthPoly::shifted_down(std::size_t k) const {
    LengthPoly r;
    if (is_zero()) return r;
    for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) throw std::logic_error("LengthPoly: shift would drop a nonzero term");
    if (k >= coeffs_.size()) return r;
    r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
    return r;
}

std::map<std::size_t, BigInt> LengthPoly::nonzero_terms() const {
    std::map<std::size_t, BigInt> m;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) m[i] = coeffs_[i];
    return m;
}

std::string LengthPoly::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [len, c] : nonzero_terms()) {
        os << (first ? "" : ", ") << len << ": " << c;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace cyclecount
