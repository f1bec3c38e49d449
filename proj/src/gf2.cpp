#include "gf2.hpp"

#include <algorithm>
#include <bit>

#include "errors.hpp"

namespace spsl {

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    Gf2Poly r = *this;
    if (o.w_.size() > r.w_.size()) r.w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) r.w_[i] ^= o.w_[i];
    r.recompute_degree();
    return r;
}

Gf2Poly Gf2Poly::shifted(int e) const {
    if (is_zero()) return Gf2Poly();
    Gf2Poly r;
    for (int i = 0; i <= deg_; ++i)
        if (coeff(i)) r.set_coeff(i + e, true);
    return r;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    if (is_zero() || o.is_zero()) return Gf2Poly();
    Gf2Poly r;
    r.w_.assign(std::size_t((deg_ + o.deg_) >> 6) + 1, 0);
    for (int i = 0; i <= deg_; ++i) {
        if (!coeff(i)) continue;
        for (std::size_t w = 0; w < o.w_.size(); ++w) {
            const std::uint64_t v = o.w_[w];
            if (!v) continue;
            const int base = (i & 63);
            const std::size_t wi = std::size_t(i >> 6) + w;
            r.w_[wi] ^= v << base;
            if (base && wi + 1 < r.w_.size()) r.w_[wi + 1] ^= v >> (64 - base);
        }
    }
    r.recompute_degree();
    return r;
}

Gf2Poly Gf2Poly::mod(const Gf2Poly& divisor) const {
    require(!divisor.is_zero(), ErrorKind::invalid_argument, "Gf2Poly::mod by zero");
    Gf2Poly r = *this;
    while (r.deg_ >= divisor.deg_) {
        const int shift = r.deg_ - divisor.deg_;
        for (int i = 0; i <= divisor.deg_; ++i)
            if (divisor.coeff(i)) r.toggle_fast(i + shift);
        r.recompute_degree();
    }
    return r;
}

bool Gf2Poly::divides(const Gf2Poly& dividend) const {
    return dividend.mod(*this).is_zero();
}

void Gf2Poly::recompute_degree() {
    deg_ = -1;
    for (int w = int(w_.size()) - 1; w >= 0; --w) {
        if (w_[std::size_t(w)]) {
            deg_ = (w << 6) + 63 - std::countl_zero(w_[std::size_t(w)]);
            return;
        }
    }
}

bool Gf2Poly::equal_words(const Gf2Poly& o) const {
    const std::size_t n = std::max(w_.size(), o.w_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t a = i < w_.size() ? w_[i] : 0;
        const std::uint64_t b = i < o.w_.size() ? o.w_[i] : 0;
        if (a != b) return false;
    }
    return true;
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = deg_; i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) s += "1";
        else if (i == 1) s += "x";
        else s += "x^" + std::to_string(i);
    }
    return s;
}

std::uint32_t BinaryField::default_primitive_poly(int m) {
    // Conway-free standard choices, lowest-weight primitive polynomials.
    static const std::uint32_t table[17] = {
        0, 0,
        0x7,     // m=2:  x^2 + x + 1
        0xb,     // m=3:  x^3 + x + 1
        0x13,    // m=4:  x^4 + x + 1
        0x25,    // m=5:  x^5 + x^2 + 1
        0x43,    // m=6:  x^6 + x + 1
        0x89,    // m=7:  x^7 + x^3 + 1
        0x11d,   // m=8:  x^8 + x^4 + x^3 + x^2 + 1
        0x211,   // m=9:  x^9 + x^4 + 1
        0x409,   // m=10: x^10 + x^3 + 1
        0x805,   // m=11: x^11 + x^2 + 1
        0x1053,  // m=12: x^12 + x^6 + x^4 + x + 1
        0x201b,  // m=13: x^13 + x^4 + x^3 + x + 1
        0x4443,  // m=14: x^14 + x^10 + x^6 + x + 1
        0x8003,  // m=15: x^15 + x + 1
        0x1100b, // m=16: x^16 + x^12 + x^3 + x + 1
    };
    require(m >= 2 && m <= 16, ErrorKind::invalid_argument, "BinaryField: m outside [2,16]");
    return table[m];
}

BinaryField::BinaryField(int m, std::uint32_t primitive_poly) : m_(m) {
    require(m >= 2 && m <= 16, ErrorKind::invalid_argument, "BinaryField: m outside [2,16]");
    poly_ = primitive_poly ? primitive_poly : default_primitive_poly(m);
    require((poly_ >> m) == 1u, ErrorKind::construction,
            "BinaryField: polynomial degree != m");

    const int size = 1 << m_;
    antilog_.assign(std::size_t(n()), 0);
    log_.assign(std::size_t(size), 0);

    std::uint32_t x = 1;  // alpha^0
    for (int i = 0; i < n(); ++i) {
        require(x != 1u || i == 0, ErrorKind::construction,
                "BinaryField: polynomial is not primitive (alpha order " +
                    std::to_string(i) + " < " + std::to_string(n()) + ")");
        antilog_[std::size_t(i)] = std::uint16_t(x);
        log_[x] = std::uint16_t(i);
        x <<= 1;
        if (x >> m_) x ^= poly_;
    }
    require(x == 1u, ErrorKind::construction, "BinaryField: alpha does not close the cycle");
}

int BinaryField::log(std::uint16_t v) const {
    require(v != 0, ErrorKind::invalid_argument, "BinaryField::log of zero");
    return log_[v];
}

std::uint16_t BinaryField::inv(std::uint16_t a) const {
    require(a != 0, ErrorKind::invalid_argument, "BinaryField::inv of zero");
    return antilog_[std::size_t((n() - log_[a]) % n())];
}

std::vector<int> cyclotomic_coset(int m, int i) {
    const int n = (1 << m) - 1;
    std::vector<int> coset;
    int x = i % n;
    do {
        coset.push_back(x);
        x = (2 * x) % n;
    } while (x != i % n);
    std::sort(coset.begin(), coset.end());
    return coset;
}

Gf2Poly minimal_polynomial(const BinaryField& field, int i) {
    require(i >= 1 && i <= field.n() - 1, ErrorKind::invalid_argument,
            "minimal_polynomial: exponent outside [1, 2^m - 2]");
    const auto coset = cyclotomic_coset(field.m(), i);
    // Product of (x + alpha^j) with coefficients tracked in GF(2^m);
    // coeffs[k] is the coefficient of x^k.
    std::vector<std::uint16_t> coeffs{1};
    for (int j : coset) {
        const std::uint16_t root = field.alpha_pow(j);
        std::vector<std::uint16_t> next(coeffs.size() + 1, 0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] ^= coeffs[k];                  // x * coeff
            next[k] ^= field.mul(coeffs[k], root);     // root * coeff
        }
        coeffs = std::move(next);
    }
    Gf2Poly p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        require(coeffs[k] <= 1, ErrorKind::construction,
                "minimal_polynomial: coefficient escaped GF(2)");
        if (coeffs[k]) p.set_coeff(int(k), true);
    }
    return p;
}

}  // namespace spsl
