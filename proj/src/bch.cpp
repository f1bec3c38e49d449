#include "bch.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "errors.hpp"

namespace spsl {

BchCode build_bch(const BinaryField& field, int design_distance, int shorten_by) {
    require(design_distance >= 2 && design_distance <= field.n(), ErrorKind::invalid_argument,
            "build_bch: need 2 <= d <= n");
    require(shorten_by >= 0, ErrorKind::invalid_argument, "build_bch: shorten_by < 0");

    Gf2Poly g = Gf2Poly::one();
    std::set<int> covered;
    for (int i = 1; i <= design_distance - 1; ++i) {
        if (covered.count(i)) continue;
        for (int j : cyclotomic_coset(field.m(), i)) covered.insert(j);
        g = g * minimal_polynomial(field, i);
    }

    BchCode code{field, field.n(), field.n() - g.degree(), design_distance, g, shorten_by};
    require(code.k > 0, ErrorKind::construction,
            "build_bch: d=" + std::to_string(design_distance) + " leaves no message bits (k=" +
                std::to_string(code.k) + ")");
    require(shorten_by < code.k, ErrorKind::construction,
            "build_bch: shortening exceeds message dimension");
    return code;
}

BchCode build_bch_for_message_bits(const BinaryField& field, int message_bits) {
    require(message_bits >= 1, ErrorKind::invalid_argument,
            "build_bch_for_message_bits: message_bits < 1");
    int best_d = -1, best_k = -1;
    for (int d = 3; d <= field.n(); d += 2) {
        Gf2Poly g = Gf2Poly::one();
        std::set<int> covered;
        for (int i = 1; i <= d - 1; ++i) {
            if (covered.count(i)) continue;
            for (int j : cyclotomic_coset(field.m(), i)) covered.insert(j);
            g = g * minimal_polynomial(field, i);
        }
        const int k = field.n() - g.degree();
        if (k < message_bits) break;
        best_d = d;
        best_k = k;
    }
    require(best_d > 0, ErrorKind::construction,
            "build_bch_for_message_bits: no code with k >= " + std::to_string(message_bits));
    return build_bch(field, best_d, best_k - message_bits);
}

BitVec encode_systematic(const BchCode& code, const BitVec& message) {
    require(int(message.size()) == code.message_length(), ErrorKind::invalid_argument,
            "encode_systematic: message length " + std::to_string(message.size()) +
                " != " + std::to_string(code.message_length()));
    // Full message = shorten_by zeros then the payload; bit j of the full
    // message is the coefficient of x^(n-1-j), so m(x) x^(n-k) places the
    // payload at degrees n-1-shorten_by .. n-k.
    Gf2Poly shifted;
    for (std::size_t i = 0; i < message.size(); ++i)
        if (message.get(i)) shifted.set_coeff(code.n - 1 - code.shorten_by - int(i), true);
    const Gf2Poly parity = shifted.mod(code.generator);

    BitVec out{std::size_t(code.transmitted_length())};
    for (std::size_t i = 0; i < message.size(); ++i) out.set(i, message.get(i));
    for (int j = 0; j < code.parity_length(); ++j) {
        // Parity occupies full-codeword indices k..n-1, i.e. degrees n-k-1..0.
        const int degree = code.parity_length() - 1 - j;
        out.set(std::size_t(code.message_length() + j), parity.coeff(degree));
    }
    return out;
}

namespace {

// Received transmitted word -> set bits as polynomial degrees (shortened
// prefix re-inserted as zeros, so degrees are n-1-(j+shorten_by)).
std::vector<int> received_degrees(const BchCode& code, const BitVec& received) {
    std::vector<int> degrees;
    for (std::size_t j = 0; j < received.size(); ++j)
        if (received.get(j)) degrees.push_back(code.n - 1 - (int(j) + code.shorten_by));
    return degrees;
}

}  // namespace

std::optional<BitVec> bounded_distance_decode(const BchCode& code, const BitVec& received) {
    require(int(received.size()) == code.transmitted_length(), ErrorKind::invalid_argument,
            "bounded_distance_decode: wrong received length");
    const BinaryField& gf = code.field;
    const int t = code.correctable();
    const int n_syn = 2 * t;

    const auto degrees = received_degrees(code, received);

    std::vector<std::uint16_t> syn(std::size_t(n_syn) + 1, 0);  // syn[i] = S_i, 1-based
    bool all_zero = true;
    for (int i = 1; i <= n_syn; ++i) {
        std::uint16_t s = 0;
        for (int e : degrees) s ^= gf.alpha_pow(i * e);
        syn[std::size_t(i)] = s;
        all_zero &= (s == 0);
    }

    BitVec corrected = received;
    if (!all_zero) {
        // Berlekamp-Massey: find the shortest LFSR C(x) generating the syndromes.
        std::vector<std::uint16_t> C{1}, B{1};
        int L = 0, m = 1;
        std::uint16_t b = 1;
        for (int i = 0; i < n_syn; ++i) {
            std::uint16_t delta = syn[std::size_t(i) + 1];
            for (int j = 1; j <= L && j < int(C.size()); ++j)
                if (C[std::size_t(j)]) delta ^= gf.mul(C[std::size_t(j)], syn[std::size_t(i + 1 - j)]);
            if (delta == 0) {
                ++m;
            } else if (2 * L <= i) {
                auto T = C;
                const std::uint16_t coef = gf.mul(delta, gf.inv(b));
                if (C.size() < B.size() + std::size_t(m)) C.resize(B.size() + std::size_t(m), 0);
                for (std::size_t j = 0; j < B.size(); ++j)
                    C[j + std::size_t(m)] ^= gf.mul(coef, B[j]);
                L = i + 1 - L;
                B = std::move(T);
                b = delta;
                m = 1;
            } else {
                const std::uint16_t coef = gf.mul(delta, gf.inv(b));
                if (C.size() < B.size() + std::size_t(m)) C.resize(B.size() + std::size_t(m), 0);
                for (std::size_t j = 0; j < B.size(); ++j)
                    C[j + std::size_t(m)] ^= gf.mul(coef, B[j]);
                ++m;
            }
        }
        if (L > t) return std::nullopt;  // more errors than the code can bound

        // Chien search: error at degree e iff C(alpha^{-e}) == 0.
        std::vector<int> error_degrees;
        for (int e = 0; e < code.n; ++e) {
            std::uint16_t v = 0;
            for (int j = 0; j < int(C.size()); ++j)
                if (C[std::size_t(j)]) v ^= gf.alpha_pow((-e * j) % gf.n());
            if (v == 0) error_degrees.push_back(e);
        }
        if (int(error_degrees.size()) != L) return std::nullopt;  // locator does not split

        for (int e : error_degrees) {
            const int j = code.n - 1 - e - code.shorten_by;  // transmitted index
            if (j < 0 || j >= code.transmitted_length())
                return std::nullopt;  // "error" in the known-zero prefix: miscorrection
            corrected.flip(std::size_t(j));
        }

        // Re-check the syndromes on the corrected word.
        const auto fixed = received_degrees(code, corrected);
        for (int i = 1; i <= n_syn; ++i) {
            std::uint16_t s = 0;
            for (int e : fixed) s ^= gf.alpha_pow(i * e);
            if (s != 0) return std::nullopt;
        }
    }

    BitVec message{std::size_t(code.message_length())};
    for (std::size_t i = 0; i < message.size(); ++i) message.set(i, corrected.get(i));
    return message;
}

std::vector<std::pair<int, int>> codeword_weights(const BchCode& code,
                                                  const std::vector<BitVec>& messages) {
    std::vector<std::pair<int, int>> weights;
    weights.reserve(messages.size());
    for (const auto& msg : messages) {
        const BitVec cw = encode_systematic(code, msg);
        const int ones = int(cw.popcount());
        weights.emplace_back(ones, int(cw.size()) - ones);
    }
    return weights;
}

}  // namespace spsl
