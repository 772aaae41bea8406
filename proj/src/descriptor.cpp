#include "zerosum/descriptor.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "zerosum/errors.hpp"
#include "zerosum/group.hpp"

namespace zerosum {

namespace {

struct Parser {
    std::string text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& expected) const {
        throw UsageError("descriptor syntax error at offset " + std::to_string(pos) +
                         ": expected " + expected);
    }

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    bool literal(const std::string& s) {
        if (text.compare(pos, s.size(), s) != 0) return false;
        pos += s.size();
        return true;
    }

    long parse_int() {
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("an integer");
        long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000) fail("a smaller integer");
            ++pos;
        }
        return v;
    }

    GroupTerm parse_term() {
        GroupTerm t;
        if (literal("meta")) {
            if (!literal("(")) fail("'(' after meta");
            t.kind = GroupTerm::kMetacyclic;
            t.meta.s = int(parse_int());
            if (!literal(",")) fail("','");
            t.meta.m = int(parse_int());
            if (!literal(",")) fail("','");
            t.meta.r = int(parse_int());
            if (!literal(")")) fail("')'");
            t.order = t.meta.s * t.meta.m;
            check_meta(t.meta);
            return t;
        }
        if (literal("cayley:")) {
            t.kind = GroupTerm::kCayleyFile;
            t.path = text.substr(pos);
            pos = text.size();
            if (t.path.empty()) fail("a file path after 'cayley:'");
            return t;
        }
        if (literal("c")) {
            t.kind = GroupTerm::kCyclic;
            t.order = int(parse_int());
            if (t.order < 1 || t.order > kMaxGroupOrder)
                throw UsageError("invalid parameters: cyclic order must be in [1, " +
                                 std::to_string(kMaxGroupOrder) + "], got " +
                                 std::to_string(t.order));
            return t;
        }
        if (literal("d")) {
            t.kind = GroupTerm::kDihedral;
            t.order = int(parse_int());
            if (t.order < 6 || t.order % 2 != 0 || t.order > kMaxGroupOrder)
                throw UsageError("invalid parameters: dihedral order must be even and >= 6, got " +
                                 std::to_string(t.order));
            return t;
        }
        if (literal("q")) {
            t.kind = GroupTerm::kDicyclic;
            t.order = int(parse_int());
            if (t.order < 8 || t.order % 4 != 0 || t.order > kMaxGroupOrder)
                throw UsageError(
                    "invalid parameters: dicyclic order must be a multiple of 4 and >= 8, got " +
                    std::to_string(t.order));
            return t;
        }
        fail("one of c<INT>, d<INT>, q<INT>, meta(s,m,r), cayley:<path>");
    }

    static void check_meta(const MetacyclicParams& p) {
        auto bad = [&](const std::string& why) {
            throw UsageError("invalid parameters: meta(" + std::to_string(p.s) + "," +
                             std::to_string(p.m) + "," + std::to_string(p.r) + "): " + why);
        };
        if (p.s < 1) bad("s must be >= 1");
        if (p.m < 2) bad("m must be >= 2");
        if (p.r < 1 || p.r >= p.m) bad("r must be in [1, m)");
        if (std::gcd(p.r, p.m) != 1) bad("gcd(r, m) must be 1");
        long long rs = 1;
        for (int i = 0; i < p.s; ++i) rs = rs * p.r % p.m;
        if (rs != 1 % p.m) bad("r^s must be 1 mod m");
        if (p.s * p.m > kMaxGroupOrder)
            bad("order exceeds cap " + std::to_string(kMaxGroupOrder));
    }
};

}  // namespace

GroupDescriptor parse_descriptor(const std::string& raw) {
    //tokens are whitespace-free; surrounding whitespace is tolerated
    size_t b = raw.find_first_not_of(" \t\r\n");
    size_t e = raw.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw UsageError("empty group descriptor");
    std::string text = raw.substr(b, e - b + 1);
    std::string lowered = text;
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });

    Parser p{lowered};
    GroupDescriptor d;
    d.terms.push_back(p.parse_term());
    while (!p.eof()) {
        if (!p.literal("x")) p.fail("'x' between factors or end of input");
        d.terms.push_back(p.parse_term());
    }
    //cayley paths are case-sensitive; recover them from the original text
    size_t cursor = 0;
    for (auto& t : d.terms) {
        if (t.kind == GroupTerm::kCayleyFile) {
            size_t at = lowered.find("cayley:", cursor);
            t.path = text.substr(at + 7);
        }
    }
    return d;
}

std::string render_term(const GroupTerm& t) {
    switch (t.kind) {
        case GroupTerm::kCyclic: return "c" + std::to_string(t.order);
        case GroupTerm::kDihedral: return "d" + std::to_string(t.order);
        case GroupTerm::kDicyclic: return "q" + std::to_string(t.order);
        case GroupTerm::kMetacyclic:
            return "meta(" + std::to_string(t.meta.s) + "," + std::to_string(t.meta.m) + "," +
                   std::to_string(t.meta.r) + ")";
        case GroupTerm::kCayleyFile: return "cayley:" + t.path;
    }
    return "?";
}

std::string render_descriptor(const GroupDescriptor& d) {
    std::vector<std::string> parts;
    for (const auto& t : d.terms) parts.push_back(render_term(t));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& s : parts) {
        if (!out.empty()) out += "x";
        out += s;
    }
    return out;
}

std::vector<GroupDescriptor> group_catalog(int max_order) {
    std::vector<GroupDescriptor> out;
    auto add = [&](std::vector<GroupTerm> terms) {
        GroupDescriptor d;
        d.terms = std::move(terms);
        out.push_back(std::move(d));
    };
    auto cyclic = [](int n) {
        GroupTerm t;
        t.kind = GroupTerm::kCyclic;
        t.order = n;
        return t;
    };
    max_order = std::min(max_order, kMaxGroupOrder);
    for (int n = 1; n <= max_order; ++n) add({cyclic(n)});
    for (int a = 2; a * a <= max_order; ++a)
        for (int b = a; a * b <= max_order; ++b) add({cyclic(a), cyclic(b)});
    for (int m = 3; 2 * m <= max_order; ++m) {
        GroupTerm t;
        t.kind = GroupTerm::kDihedral;
        t.order = 2 * m;
        add({t});
    }
    for (int m = 2; 4 * m <= max_order; ++m) {
        GroupTerm t;
        t.kind = GroupTerm::kDicyclic;
        t.order = 4 * m;
        add({t});
    }
    for (int s = 2; s <= max_order / 3; ++s)
        for (int m = 3; s * m <= max_order; ++m)
            for (int r = 2; r < m; ++r) {
                if (s == 2 && r == m - 1) continue;  //duplicates the dihedral table
                if (std::gcd(r, m) != 1) continue;
                long long rs = 1;
                for (int i = 0; i < s; ++i) rs = rs * r % m;
                if (rs != 1) continue;
                GroupTerm t;
                t.kind = GroupTerm::kMetacyclic;
                t.order = s * m;
                t.meta = {s, m, r};
                add({t});
            }
    std::stable_sort(out.begin(), out.end(), [](const GroupDescriptor& x, const GroupDescriptor& y) {
        int ox = 1, oy = 1;
        for (const auto& t : x.terms) ox *= t.order;
        for (const auto& t : y.terms) oy *= t.order;
        if (ox != oy) return ox < oy;
        return render_descriptor(x) < render_descriptor(y);
    });
    return out;
}

}  // namespace zerosum
