#include "codebook.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "errors.hpp"
#include "gray.hpp"

namespace spsl {

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::gray: return "gray";
        case Strategy::long_run_gray: return "longrun-gray";
        case Strategy::repetition: return "repetition";
        case Strategy::bch: return "bch";
        case Strategy::binary_shift: return "binary-shift";
        case Strategy::hybrid: return "hybrid";
    }
    return "?";
}

Strategy strategy_from_name(std::string_view name) {
    for (Strategy s : {Strategy::gray, Strategy::long_run_gray, Strategy::repetition,
                       Strategy::bch, Strategy::binary_shift, Strategy::hybrid})
        if (name == strategy_name(s)) return s;
    raise(ErrorKind::invalid_argument, "unknown strategy '" + std::string(name) + "'");
}

int Codebook::meta_int(const std::string& key) const {
    auto it = metadata.find(key);
    require(it != metadata.end(), ErrorKind::invalid_argument,
            "codebook metadata missing key '" + key + "'");
    return std::stoi(it->second);
}

namespace {

void check_distinct(const Codebook& book) {
    std::set<std::string> seen;
    for (const auto& cw : book.table)
        require(seen.insert(cw.to_string()).second, ErrorKind::construction,
                "codebook: duplicate codeword");
}

}  // namespace

Codebook gray_codebook(int bits) {
    Codebook book;
    book.strategy = Strategy::gray;
    book.message_map = gray_messages(bits);
    book.table = book.message_map;
    book.columns = std::uint32_t(book.table.size());
    book.frames = std::uint32_t(bits);
    book.metadata["L"] = std::to_string(bits);
    return book;
}

Codebook long_run_gray_codebook(int bits) {
    Codebook book;
    book.strategy = Strategy::long_run_gray;
    book.message_map = long_run_gray_messages(bits);
    book.table = book.message_map;
    book.columns = std::uint32_t(book.table.size());
    book.frames = std::uint32_t(bits);
    book.metadata["L"] = std::to_string(bits);
    return book;
}

Codebook repetition_codebook(const Codebook& base, int repetitions) {
    require(repetitions >= 1, ErrorKind::invalid_argument, "repetition_codebook: r < 1");
    Codebook book;
    book.strategy = Strategy::repetition;
    book.columns = base.columns;
    book.frames = base.frames * std::uint32_t(repetitions);
    book.message_map = base.message_map;
    book.table.reserve(base.table.size());
    for (const auto& cw : base.table) {
        BitVec rep{std::size_t(book.frames)};
        for (std::uint32_t t = 0; t < book.frames; ++t)
            rep.set(t, cw.get(t % base.frames));
        book.table.push_back(std::move(rep));
    }
    book.metadata = base.metadata;
    book.metadata["base"] = std::string(strategy_name(base.strategy));
    book.metadata["r"] = std::to_string(repetitions);
    check_distinct(book);
    return book;
}

Codebook bch_codebook(const std::vector<BitVec>& messages, const BchCode& code,
                      Strategy base_tag) {
    require(!messages.empty(), ErrorKind::invalid_argument, "bch_codebook: no messages");
    require(messages.size() <= (std::size_t(1) << code.message_length()),
            ErrorKind::invalid_argument, "bch_codebook: more messages than the code admits");
    Codebook book;
    book.strategy = Strategy::bch;
    book.columns = std::uint32_t(messages.size());
    book.frames = std::uint32_t(code.transmitted_length());
    book.message_map = messages;
    book.table.reserve(messages.size());
    for (const auto& msg : messages) book.table.push_back(encode_systematic(code, msg));
    book.metadata["L"] = std::to_string(code.message_length());
    book.metadata["base"] = std::string(strategy_name(base_tag));
    book.metadata["n"] = std::to_string(code.n);
    book.metadata["k"] = std::to_string(code.k);
    book.metadata["d"] = std::to_string(code.d);
    book.metadata["shorten_by"] = std::to_string(code.shorten_by);
    check_distinct(book);
    return book;
}

Codebook binary_shift_codebook(int shift_bits, std::uint32_t columns) {
    require(shift_bits >= 1 && shift_bits <= 15, ErrorKind::invalid_argument,
            "binary_shift_codebook: L_shift outside [1,15]");
    const std::uint32_t phases = std::uint32_t(1) << shift_bits;
    require(columns >= phases, ErrorKind::invalid_argument,
            "binary_shift_codebook: need at least 2^L_shift columns");
    const std::uint32_t period = phases * 2;
    Codebook book;
    book.strategy = Strategy::binary_shift;
    book.columns = columns;
    book.frames = period;
    book.table.reserve(columns);
    book.message_map.reserve(columns);
    for (std::uint32_t c = 0; c < columns; ++c) {
        const std::uint32_t v = c % phases;
        BitVec cw(period);
        for (std::uint32_t t = 0; t < period; ++t)
            cw.set(t, ((t + period - v) % period) < phases);
        book.table.push_back(std::move(cw));
        book.message_map.push_back(message_from_value(v, shift_bits));
    }
    book.metadata["L_shift"] = std::to_string(shift_bits);
    return book;
}

HybridParams make_hybrid_params(int total_bits, int bch_bits, int shift_bits,
                                int codeword_length) {
    require(total_bits == bch_bits + shift_bits, ErrorKind::invalid_argument,
            "hybrid: L != L_BCH + L_shift");
    require(bch_bits >= 1 && shift_bits >= 1, ErrorKind::invalid_argument,
            "hybrid: L_BCH and L_shift must be >= 1");
    int m = 0;
    while ((1 << m) - 1 < codeword_length) ++m;
    require((1 << m) - 1 == codeword_length, ErrorKind::invalid_argument,
            "hybrid: codeword length must be 2^m - 1");
    BinaryField field(m);
    HybridParams params{total_bits, bch_bits, shift_bits,
                        build_bch_for_message_bits(field, bch_bits)};
    return params;
}

Codebook hybrid_codebook(const HybridParams& params, std::uint32_t columns) {
    require(params.total_bits == params.bch_bits + params.shift_bits,
            ErrorKind::invalid_argument, "hybrid_codebook: L != L_BCH + L_shift");
    require(params.bch.message_length() == params.bch_bits, ErrorKind::invalid_argument,
            "hybrid_codebook: BCH message length != L_BCH");
    require(columns <= (std::uint32_t(1) << params.total_bits), ErrorKind::invalid_argument,
            "hybrid_codebook: more columns than 2^L");
    const std::uint32_t phases = std::uint32_t(1) << params.shift_bits;
    const Codebook shifts = binary_shift_codebook(params.shift_bits, std::max(columns, phases));
    const std::uint32_t t_bch = std::uint32_t(params.bch.transmitted_length());
    const std::uint32_t t_total = t_bch + shifts.frames;

    // One BCH codeword per MSB group; groups change every 2^L_shift columns.
    std::vector<BitVec> group_codewords;
    const std::uint32_t groups = (columns + phases - 1) / phases;
    group_codewords.reserve(groups);
    for (std::uint32_t h = 0; h < groups; ++h)
        group_codewords.push_back(
            encode_systematic(params.bch, message_from_value(gray_value(h), params.bch_bits)));

    Codebook book;
    book.strategy = Strategy::hybrid;
    book.columns = columns;
    book.frames = t_total;
    book.table.reserve(columns);
    book.message_map.reserve(columns);
    for (std::uint32_t c = 0; c < columns; ++c) {
        const std::uint32_t h = c / phases;
        const std::uint32_t v = c % phases;
        BitVec cw(t_total);
        const BitVec& bch_part = group_codewords[h];
        for (std::uint32_t t = 0; t < t_bch; ++t) cw.set(t, bch_part.get(t));
        for (std::uint32_t t = 0; t < shifts.frames; ++t)
            cw.set(t_bch + t, shifts.table[v].get(t));
        book.table.push_back(std::move(cw));
        // Message = Gray code of the group on L_BCH bits, then the phase.
        BitVec msg{std::size_t(params.total_bits)};
        const BitVec high = message_from_value(gray_value(h), params.bch_bits);
        for (int i = 0; i < params.bch_bits; ++i) msg.set(std::size_t(i), high.get(std::size_t(i)));
        const BitVec low = message_from_value(v, params.shift_bits);
        for (int i = 0; i < params.shift_bits; ++i)
            msg.set(std::size_t(params.bch_bits + i), low.get(std::size_t(i)));
        book.message_map.push_back(std::move(msg));
    }
    book.metadata["L"] = std::to_string(params.total_bits);
    book.metadata["L_bch"] = std::to_string(params.bch_bits);
    book.metadata["L_shift"] = std::to_string(params.shift_bits);
    book.metadata["n"] = std::to_string(params.bch.n);
    book.metadata["k"] = std::to_string(params.bch.k);
    book.metadata["d"] = std::to_string(params.bch.d);
    book.metadata["shorten_by"] = std::to_string(params.bch.shorten_by);
    check_distinct(book);

    require(stripe_width(book) >= int(phases), ErrorKind::construction,
            "hybrid_codebook: stripe width fell below 2^L_shift");
    return book;
}

int stripe_width(const Codebook& book) {
    int best = int(book.columns);
    for (std::uint32_t t = 0; t < book.frames; ++t) {
        int prev_transition = -1;
        for (std::uint32_t c = 0; c + 1 < book.columns; ++c) {
            if (book.pattern_bit(t, c) != book.pattern_bit(t, c + 1)) {
                const int pos = int(c) + 1;  // stripe boundary before column pos
                if (prev_transition >= 0) best = std::min(best, pos - prev_transition);
                prev_transition = pos;
            }
        }
    }
    return best;
}

void serialize_lut(const Codebook& book, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorKind::io, "serialize_lut: cannot open '" + path + "'");
    out << "SPSL-LUT 1 " << strategy_name(book.strategy) << ' ' << book.frames << ' '
        << book.columns << '\n';
    bool first = true;
    for (const auto& [key, value] : book.metadata) {
        if (!first) out << ',';
        out << key << '=' << value;
        first = false;
    }
    out << '\n';
    std::string row(book.columns, '0');
    for (std::uint32_t t = 0; t < book.frames; ++t) {
        for (std::uint32_t c = 0; c < book.columns; ++c)
            row[c] = book.pattern_bit(t, c) ? '1' : '0';
        out << row << '\n';
    }
    require(out.good(), ErrorKind::io, "serialize_lut: write failed for '" + path + "'");
}

namespace {

[[noreturn]] void parse_fail(const std::string& path, int line, const std::string& what) {
    raise(ErrorKind::parse, path + ":" + std::to_string(line) + ": " + what);
}

// message_map is not stored in the file; it is a pure function of
// (strategy, metadata, table) and is rebuilt here.
void rebuild_message_map(Codebook& book, const std::string& path) {
    book.message_map.clear();
    book.message_map.reserve(book.columns);
    switch (book.strategy) {
        case Strategy::gray:
        case Strategy::long_run_gray:
            book.message_map = book.table;
            break;
        case Strategy::repetition:
        case Strategy::bch: {
            const int bits = book.meta_int("L");
            for (const auto& cw : book.table) {
                BitVec msg{std::size_t(bits)};
                for (int i = 0; i < bits; ++i) msg.set(std::size_t(i), cw.get(std::size_t(i)));
                book.message_map.push_back(std::move(msg));
            }
            break;
        }
        case Strategy::binary_shift: {
            const int bits = book.meta_int("L_shift");
            const std::uint32_t phases = std::uint32_t(1) << bits;
            for (std::uint32_t c = 0; c < book.columns; ++c)
                book.message_map.push_back(message_from_value(c % phases, bits));
            break;
        }
        case Strategy::hybrid: {
            const int l = book.meta_int("L");
            const int l_shift = book.meta_int("L_shift");
            const int l_bch = book.meta_int("L_bch");
            require(l == l_bch + l_shift, ErrorKind::parse,
                    path + ": hybrid metadata violates L = L_bch + L_shift");
            const std::uint32_t phases = std::uint32_t(1) << l_shift;
            for (std::uint32_t c = 0; c < book.columns; ++c) {
                BitVec msg{std::size_t(l)};
                const BitVec high = message_from_value(gray_value(c / phases), l_bch);
                for (int i = 0; i < l_bch; ++i) msg.set(std::size_t(i), high.get(std::size_t(i)));
                const BitVec low = message_from_value(c % phases, l_shift);
                for (int i = 0; i < l_shift; ++i)
                    msg.set(std::size_t(l_bch + i), low.get(std::size_t(i)));
                book.message_map.push_back(std::move(msg));
            }
            break;
        }
    }
}

}  // namespace

Codebook deserialize_lut(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorKind::io, "deserialize_lut: cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) parse_fail(path, 1, "missing header");
    std::istringstream header(line);
    std::string magic, strat;
    int version = 0;
    std::uint32_t frames = 0, columns = 0;
    header >> magic >> version >> strat >> frames >> columns;
    if (magic != "SPSL-LUT") parse_fail(path, 1, "bad magic '" + magic + "'");
    if (version != 1) parse_fail(path, 1, "unsupported version " + std::to_string(version));
    if (header.fail() || frames == 0 || columns == 0)
        parse_fail(path, 1, "malformed header fields");

    Codebook book;
    try {
        book.strategy = strategy_from_name(strat);
    } catch (const Error&) {
        parse_fail(path, 1, "unknown strategy '" + strat + "'");
    }
    book.frames = frames;
    book.columns = columns;

    if (!std::getline(in, line)) parse_fail(path, 2, "missing metadata line");
    if (!line.empty()) {
        std::istringstream meta(line);
        std::string item;
        while (std::getline(meta, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                parse_fail(path, 2, "metadata item '" + item + "' is not key=value");
            book.metadata[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }

    std::vector<std::string> rows;
    rows.reserve(frames);
    for (std::uint32_t t = 0; t < frames; ++t) {
        if (!std::getline(in, line)) parse_fail(path, int(3 + t), "missing pattern row");
        if (line.size() != columns)
            parse_fail(path, int(3 + t),
                       "row has " + std::to_string(line.size()) + " columns, expected " +
                           std::to_string(columns));
        for (std::size_t c = 0; c < line.size(); ++c)
            if (line[c] != '0' && line[c] != '1')
                parse_fail(path, int(3 + t),
                           "invalid character at offset " + std::to_string(c));
        rows.push_back(line);
    }

    book.table.assign(columns, BitVec(frames));
    for (std::uint32_t t = 0; t < frames; ++t)
        for (std::uint32_t c = 0; c < columns; ++c)
            if (rows[t][c] == '1') book.table[c].set(t, true);

    rebuild_message_map(book, path);
    return book;
}

}  // namespace spsl
