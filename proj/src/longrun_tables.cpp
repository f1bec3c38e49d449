#include "gray.hpp"
#include "errors.hpp"

namespace spsl {
namespace {
// 8 values, minimum cyclic run length 2; found by offline search.
const std::uint16_t kLongRun3[8] = {
    0, 1, 5, 4, 6, 7, 3, 2,
};

// 16 values, minimum cyclic run length 2; found by offline search.
const std::uint16_t kLongRun4[16] = {
    0, 1, 3, 2, 6, 7, 5, 4, 12, 13, 9, 11, 15, 14, 10, 8,
};

// 32 values, minimum cyclic run length 4; found by offline search.
const std::uint16_t kLongRun5[32] = {
    0, 1, 3, 7, 15, 14, 30, 26, 24, 25, 17, 21, 23, 22, 6, 2,
    10, 11, 9, 13, 5, 4, 20, 16, 18, 19, 27, 31, 29, 28, 12, 8,
};

// 64 values, minimum cyclic run length 4; found by offline search.
const std::uint16_t kLongRun6[64] = {
    0, 32, 33, 35, 39, 47, 63, 31, 29, 28, 24, 16, 18, 2, 3, 7,
    15, 13, 12, 8, 40, 56, 58, 59, 51, 19, 17, 21, 20, 52, 60, 44,
    46, 14, 10, 11, 9, 1, 5, 37, 36, 38, 54, 62, 30, 26, 27, 25,
    57, 49, 48, 50, 34, 42, 43, 41, 45, 61, 53, 55, 23, 22, 6, 4,
};

}  // namespace

bool long_run_supported(int bits) {
    switch (bits) {
        case 3:
        case 4:
        case 5:
        case 6:
            return true;
        default:
            return false;
    }
}

const std::vector<std::uint16_t>& long_run_sequence(int bits) {
    switch (bits) {
        case 3: {
            static const std::vector<std::uint16_t> seq(kLongRun3, kLongRun3 + 8);
            return seq;
        }
        case 4: {
            static const std::vector<std::uint16_t> seq(kLongRun4, kLongRun4 + 16);
            return seq;
        }
        case 5: {
            static const std::vector<std::uint16_t> seq(kLongRun5, kLongRun5 + 32);
            return seq;
        }
        case 6: {
            static const std::vector<std::uint16_t> seq(kLongRun6, kLongRun6 + 64);
            return seq;
        }
        default:
            raise(ErrorKind::invalid_argument,
                  "long_run_sequence: unsupported L=" + std::to_string(bits) +
                      " (supported: 3..10)");
    }
}

}  // namespace spsl
