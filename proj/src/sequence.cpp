#include "zerosum/sequence.hpp"

#include <cctype>

#include "zerosum/errors.hpp"

namespace zerosum {

void GSequence::add(int e, uint32_t k) {
    if (length + k > kMaxSequenceLength)
        throw ResourceError("sequence length cap " + std::to_string(kMaxSequenceLength) +
                            " exceeded");
    counts[e] += k;
    length += k;
}

void GSequence::remove(int e, uint32_t k) {
    if (counts[e] < k)
        throw UsageError("cannot remove " + std::to_string(k) + " copies of element " +
                         std::to_string(e) + ", only " + std::to_string(counts[e]) + " present");
    counts[e] -= k;
    length -= k;
}

std::vector<int> GSequence::support() const {
    std::vector<int> out;
    for (int e = 0; e < universe(); ++e)
        if (counts[e]) out.push_back(e);
    return out;
}

int GSequence::max_support() const {
    for (int e = universe(); e-- > 0;)
        if (counts[e]) return e;
    return -1;
}

std::string GSequence::memo_key() const {
    std::string key;
    key.reserve(16);
    for (int e = 0; e < universe(); ++e) {
        uint32_t c = counts[e];
        if (!c) continue;
        key.push_back(char(uint8_t(e)));
        //counts almost always fit a byte; 0xff escapes to a 16-bit count
        if (c < 0xff) {
            key.push_back(char(uint8_t(c)));
        } else {
            key.push_back(char(0xff));
            key.push_back(char(uint8_t(c & 0xff)));
            key.push_back(char(uint8_t((c >> 8) & 0xff)));
        }
    }
    return key;
}

GSequence concat(const GSequence& a, const GSequence& b) {
    if (a.universe() != b.universe()) throw UsageError("sequence universes differ");
    GSequence out = a;
    for (int e = 0; e < b.universe(); ++e)
        if (b.counts[e]) out.add(e, b.counts[e]);
    return out;
}

GSequence remove_subsequence(const GSequence& a, const GSequence& b) {
    if (a.universe() != b.universe()) throw UsageError("sequence universes differ");
    if (!is_subsequence(b, a)) throw UsageError("not a subsequence");
    GSequence out = a;
    for (int e = 0; e < b.universe(); ++e)
        if (b.counts[e]) out.remove(e, b.counts[e]);
    return out;
}

GSequence restrict_to(const GSequence& s, const ElementSet& a) {
    GSequence out(s.universe());
    for (int e = 0; e < s.universe(); ++e)
        if (s.counts[e] && a.contains(e)) out.add(e, s.counts[e]);
    return out;
}

bool is_subsequence(const GSequence& sub, const GSequence& super) {
    if (sub.universe() != super.universe()) return false;
    for (int e = 0; e < sub.universe(); ++e)
        if (sub.counts[e] > super.counts[e]) return false;
    return true;
}

GSequence parse_sequence(const std::string& text, int universe) {
    GSequence out(universe);
    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw UsageError("sequence literal error at offset " + std::to_string(pos) + ": " + why);
    };
    auto read_int = [&]() -> long {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > long(kMaxSequenceLength)) fail("value too large");
            ++pos;
        }
        return v;
    };
    //empty literal denotes the empty sequence
    if (text.find_first_not_of(" \t") == std::string::npos) return out;
    while (true) {
        long e = read_int();
        if (e >= universe) fail("element index " + std::to_string(e) + " out of range [0, " +
                                std::to_string(universe) + ")");
        long k = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            k = read_int();
            if (k < 1) fail("repetition must be >= 1");
        }
        out.add(int(e), uint32_t(k));
        if (pos == text.size()) break;
        if (text[pos] != ',') fail("expected ',' or end of literal");
        ++pos;
    }
    return out;
}

std::string render_sequence(const GSequence& s) {
    std::string out;
    for (int e = 0; e < s.universe(); ++e) {
        uint32_t c = s.counts[e];
        if (!c) continue;
        if (!out.empty()) out += ",";
        out += std::to_string(e);
        if (c > 1) out += "^" + std::to_string(c);
    }
    return out;
}

}  // namespace zerosum
