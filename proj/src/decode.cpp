#include "decode.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "errors.hpp"
#include "gray.hpp"

namespace spsl {

PackedCodebook::PackedCodebook(const Codebook& book)
    : columns_(book.columns), frames_(book.frames), wpc_((book.frames + 63) / 64) {
    words_.assign(std::size_t(columns_) * wpc_, 0);
    for (std::uint32_t c = 0; c < columns_; ++c) {
        const auto& w = book.table[c].words();
        std::copy(w.begin(), w.end(), words_.begin() + std::ptrdiff_t(c * wpc_));
    }
}

std::vector<BitVec> PackedCodebook::unpack() const {
    std::vector<BitVec> out(columns_, BitVec(frames_));
    for (std::uint32_t c = 0; c < columns_; ++c)
        for (std::uint32_t t = 0; t < frames_; ++t)
            out[c].set(t, (codeword(c)[t >> 6] >> (t & 63)) & 1u);
    return out;
}

PackedCodebook PackedCodebook::rotated(std::uint32_t offset) const {
    PackedCodebook r;
    r.columns_ = columns_;
    r.frames_ = frames_;
    r.wpc_ = wpc_;
    r.words_.assign(words_.size(), 0);
    for (std::uint32_t c = 0; c < columns_; ++c) {
        const std::uint64_t* src = codeword(c);
        std::uint64_t* dst = r.words_.data() + c * wpc_;
        for (std::uint32_t t = 0; t < frames_; ++t) {
            const std::uint32_t s = (t + offset) % frames_;
            if ((src[s >> 6] >> (s & 63)) & 1u) dst[t >> 6] |= std::uint64_t(1) << (t & 63);
        }
    }
    return r;
}

DecodeResult mdd_decode_batch(std::span<const BitVec> queries, const PackedCodebook& book) {
    const std::size_t wpc = book.words_per_codeword();
    DecodeResult res;
    res.column.resize(queries.size());
    res.distance.resize(queries.size());
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        require(queries[qi].size() == book.frames(), ErrorKind::invalid_argument,
                "mdd_decode_batch: query length != T");
        const std::uint64_t* q = queries[qi].words().data();
        std::uint32_t best_col = 0, best_dist = book.frames() + 1;
        for (std::uint32_t c = 0; c < book.columns(); ++c) {
            const std::uint64_t* cw = book.codeword(c);
            std::uint32_t dist = 0;
            for (std::size_t w = 0; w < wpc; ++w)
                dist += std::uint32_t(std::popcount(q[w] ^ cw[w]));
            if (dist < best_dist) {
                best_dist = dist;
                best_col = c;
            }
        }
        res.column[qi] = best_col;
        res.distance[qi] = best_dist;
    }
    return res;
}

DecodeResult naive_mdd(std::span<const BitVec> queries, const Codebook& book) {
    DecodeResult res;
    res.column.resize(queries.size());
    res.distance.resize(queries.size());
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        const BitVec& q = queries[qi];
        require(q.size() == book.frames, ErrorKind::invalid_argument,
                "naive_mdd: query length != T");
        std::uint32_t best_col = 0, best_dist = book.frames + 1;
        for (std::uint32_t c = 0; c < book.columns; ++c) {
            std::uint32_t dist = 0;
            for (std::uint32_t t = 0; t < book.frames; ++t)
                dist += std::uint32_t(q.get(t) != book.table[c].get(t));
            if (dist < best_dist) {
                best_dist = dist;
                best_col = c;
            }
        }
        res.column[qi] = best_col;
        res.distance[qi] = best_dist;
    }
    return res;
}

std::uint32_t matched_filter_decode(const BitVec& sequence, int l_shift) {
    const std::uint32_t phases = std::uint32_t(1) << l_shift;
    const std::uint32_t period = phases * 2;
    require(sequence.size() == period, ErrorKind::invalid_argument,
            "matched_filter_decode: sequence length != 2^(L_shift+1)");
    int best_score = std::numeric_limits<int>::min();
    std::uint32_t best_v = 0;
    for (std::uint32_t v = 0; v < phases; ++v) {
        int score = 0;
        for (std::uint32_t t = 0; t < phases; ++t)
            score += sequence.get((v + t) % period) ? 1 : -1;
        if (score > best_score) {
            best_score = score;
            best_v = v;
        }
    }
    return best_v;
}

BitVec majority_vote_decode(const BitVec& sequence, int message_bits, int repetitions) {
    require(message_bits >= 1 && repetitions >= 1, ErrorKind::invalid_argument,
            "majority_vote_decode: bad dimensions");
    require(sequence.size() == std::size_t(message_bits) * std::size_t(repetitions),
            ErrorKind::invalid_argument, "majority_vote_decode: length != r*L");
    BitVec msg{std::size_t(message_bits)};
    const int threshold = (repetitions + 1) / 2;  // ceil(r/2)
    for (int j = 0; j < message_bits; ++j) {
        int ones = 0;
        for (int b = 0; b < repetitions; ++b)
            ones += sequence.get(std::size_t(b * message_bits + j));
        msg.set(std::size_t(j), ones >= threshold);
    }
    return msg;
}

DecodeResult hybrid_decode_batch(std::span<const BitVec> queries, const HybridLayout& layout,
                                 const PackedCodebook& bch_segment_book) {
    const std::uint32_t phases = std::uint32_t(1) << layout.shift_bits;
    const std::uint32_t period = phases * 2;
    const std::uint32_t t_total = layout.bch_frames + period;

    std::vector<BitVec> bch_queries;
    bch_queries.reserve(queries.size());
    for (const auto& q : queries) {
        require(q.size() == t_total, ErrorKind::invalid_argument,
                "hybrid_decode_batch: query length mismatch");
        BitVec seg(layout.bch_frames);
        for (std::uint32_t t = 0; t < layout.bch_frames; ++t) seg.set(t, q.get(t));
        bch_queries.push_back(std::move(seg));
    }
    DecodeResult groups = mdd_decode_batch(bch_queries, bch_segment_book);

    DecodeResult res;
    res.column.resize(queries.size());
    res.distance.resize(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i) {
        BitVec tail(period);
        for (std::uint32_t t = 0; t < period; ++t)
            tail.set(t, queries[i].get(layout.bch_frames + t));
        const std::uint32_t v = matched_filter_decode(tail, layout.shift_bits);
        res.column[i] = groups.column[i] * phases + v;
        res.distance[i] = groups.distance[i];
    }
    return res;
}

std::uint32_t ColumnDecoder::decode_one(const BitVec& query) const {
    const BitVec arr[1] = {query};
    return decode_batch(std::span<const BitVec>(arr, 1)).column[0];
}

namespace {

class MddDecoder final : public ColumnDecoder {
public:
    explicit MddDecoder(const Codebook& book) : packed_(book) {}
    DecodeResult decode_batch(std::span<const BitVec> queries) const override {
        return mdd_decode_batch(queries, packed_);
    }

private:
    PackedCodebook packed_;
};

// Direct message -> column lookup for codes that use every message value.
class TableDecoder final : public ColumnDecoder {
public:
    TableDecoder(const Codebook& book, int message_bits, int repetitions)
        : bits_(message_bits), reps_(repetitions), column_of_(std::size_t(1) << message_bits,
                                                             kDecodeFailure) {
        for (std::uint32_t c = 0; c < book.columns; ++c)
            column_of_[value_from_message(book.message_map[c])] = c;
    }
    DecodeResult decode_batch(std::span<const BitVec> queries) const override {
        DecodeResult res;
        res.column.resize(queries.size());
        res.distance.assign(queries.size(), 0);
        for (std::size_t i = 0; i < queries.size(); ++i) {
            const BitVec msg = reps_ == 1 ? queries[i]
                                          : majority_vote_decode(queries[i], bits_, reps_);
            res.column[i] = column_of_[value_from_message(msg)];
        }
        return res;
    }

private:
    int bits_, reps_;
    std::vector<std::uint32_t> column_of_;
};

class ShiftDecoder final : public ColumnDecoder {
public:
    explicit ShiftDecoder(int l_shift) : l_shift_(l_shift) {}
    DecodeResult decode_batch(std::span<const BitVec> queries) const override {
        DecodeResult res;
        res.column.resize(queries.size());
        res.distance.assign(queries.size(), 0);
        for (std::size_t i = 0; i < queries.size(); ++i)
            res.column[i] = matched_filter_decode(queries[i], l_shift_);
        return res;
    }

private:
    int l_shift_;
};

class HybridDecoder final : public ColumnDecoder {
public:
    explicit HybridDecoder(const Codebook& book)
        : layout_{book.meta_int("L"), book.meta_int("L_bch"), book.meta_int("L_shift"), 0},
          segment_(make_segment(book)) {
        layout_.bch_frames = book.frames - (std::uint32_t(2) << layout_.shift_bits);
    }
    DecodeResult decode_batch(std::span<const BitVec> queries) const override {
        return hybrid_decode_batch(queries, layout_, segment_);
    }

private:
    static PackedCodebook make_segment(const Codebook& book) {
        // Rebuild the BCH-segment table (one codeword per MSB group) by
        // truncating one representative column per group.
        const std::uint32_t phases = std::uint32_t(1) << book.meta_int("L_shift");
        const std::uint32_t t_bch = book.frames - 2 * phases;
        const std::uint32_t groups = (book.columns + phases - 1) / phases;
        Codebook seg;
        seg.strategy = Strategy::bch;
        seg.columns = groups;
        seg.frames = t_bch;
        seg.table.reserve(groups);
        for (std::uint32_t h = 0; h < groups; ++h) {
            BitVec cw(t_bch);
            const BitVec& rep = book.table[h * phases];
            for (std::uint32_t t = 0; t < t_bch; ++t) cw.set(t, rep.get(t));
            seg.table.push_back(std::move(cw));
        }
        return PackedCodebook(seg);
    }

    HybridLayout layout_;
    PackedCodebook segment_;
};

}  // namespace

std::unique_ptr<ColumnDecoder> make_decoder(const Codebook& book) {
    switch (book.strategy) {
        case Strategy::gray:
        case Strategy::long_run_gray:
            return std::make_unique<TableDecoder>(book, book.meta_int("L"), 1);
        case Strategy::repetition:
            return std::make_unique<TableDecoder>(book, book.meta_int("L"),
                                                  book.meta_int("r"));
        case Strategy::bch:
            return std::make_unique<MddDecoder>(book);
        case Strategy::binary_shift:
            return std::make_unique<ShiftDecoder>(book.meta_int("L_shift"));
        case Strategy::hybrid:
            return std::make_unique<HybridDecoder>(book);
    }
    raise(ErrorKind::invalid_argument, "make_decoder: unknown strategy");
}

std::unique_ptr<ColumnDecoder> make_mdd_decoder(const Codebook& book) {
    return std::make_unique<MddDecoder>(book);
}

}  // namespace spsl
