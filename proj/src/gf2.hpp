#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spsl {

// Dense polynomial over GF(2); bit i of the word array is the coefficient of x^i.
class Gf2Poly {
public:
    Gf2Poly() = default;

    static Gf2Poly zero() { return Gf2Poly(); }
    static Gf2Poly one() { return x_pow(0); }
    static Gf2Poly x_pow(int e) {
        Gf2Poly p;
        p.set_coeff(e, true);
        return p;
    }

    int degree() const { return deg_; }
    bool is_zero() const { return deg_ < 0; }

    bool coeff(int i) const {
        if (i < 0 || std::size_t(i >> 6) >= w_.size()) return false;
        return (w_[std::size_t(i >> 6)] >> (i & 63)) & 1u;
    }
    void set_coeff(int i, bool v) {
        if (std::size_t(i >> 6) >= w_.size()) w_.resize(std::size_t(i >> 6) + 1, 0);
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[std::size_t(i >> 6)] |= m; else w_[std::size_t(i >> 6)] &= ~m;
        if (v && i > deg_) deg_ = i;
        else if (!v && i == deg_) recompute_degree();
    }

    Gf2Poly operator+(const Gf2Poly& o) const;   // XOR of coefficients
    Gf2Poly operator*(const Gf2Poly& o) const;   // carry-less product
    Gf2Poly shifted(int e) const;                // * x^e
    Gf2Poly mod(const Gf2Poly& divisor) const;
    bool divides(const Gf2Poly& dividend) const; // this | dividend

    bool operator==(const Gf2Poly& o) const { return deg_ == o.deg_ && equal_words(o); }

    std::string to_string() const;  // e.g. "x^4 + x + 1"

private:
    void recompute_degree();
    bool equal_words(const Gf2Poly& o) const;
    // XOR a coefficient in place; caller must already have capacity and is
    // responsible for restoring the degree invariant.
    void toggle_fast(int i) { w_[std::size_t(i >> 6)] ^= std::uint64_t(1) << (i & 63); }

    std::vector<std::uint64_t> w_;
    int deg_ = -1;
};

// GF(2^m) built from a primitive polynomial, with log/antilog tables over the
// generator alpha = x. Immutable after construction.
class BinaryField {
public:
    // primitive_poly = 0 selects the bundled default for this m.
    explicit BinaryField(int m, std::uint32_t primitive_poly = 0);

    int m() const { return m_; }
    int order() const { return 1 << m_; }          // field size 2^m
    int n() const { return (1 << m_) - 1; }        // multiplicative group size
    std::uint32_t primitive_poly() const { return poly_; }

    std::uint16_t alpha_pow(int i) const {          // alpha^i, exponent mod n
        int e = i % n();
        if (e < 0) e += n();
        return antilog_[std::size_t(e)];
    }
    int log(std::uint16_t x) const;                 // discrete log of nonzero x

    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[std::size_t((log_[a] + log_[b]) % n())];
    }
    std::uint16_t inv(std::uint16_t a) const;
    static std::uint16_t add(std::uint16_t a, std::uint16_t b) { return a ^ b; }

    static std::uint32_t default_primitive_poly(int m);

private:
    int m_;
    std::uint32_t poly_;
    std::vector<std::uint16_t> log_, antilog_;
};

// Cyclotomic coset of i modulo 2^m - 1 (closure under doubling), sorted.
std::vector<int> cyclotomic_coset(int m, int i);

// Minimal polynomial of alpha^i over GF(2): product of (x - alpha^j) over the
// coset of i. Coefficients are verified to land in {0,1}.
Gf2Poly minimal_polynomial(const BinaryField& field, int i);

}  // namespace spsl
