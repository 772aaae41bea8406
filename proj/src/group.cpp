#include "zerosum/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "zerosum/errors.hpp"

namespace zerosum {

namespace {

//normal-form word like "x^2*y^3"; zero exponents drop out, identity is "1"
std::string word_name(const std::vector<std::pair<std::string, int>>& parts) {
    std::string out;
    for (const auto& [gen, exp] : parts) {
        if (exp == 0) continue;
        if (!out.empty()) out += "*";
        out += gen;
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out.empty() ? "1" : out;
}

struct RawGroup {
    int n = 0;
    std::vector<uint8_t> table;
    std::vector<std::string> names;
};

RawGroup make_cyclic(int n, const std::string& suffix) {
    RawGroup g;
    g.n = n;
    g.table.resize(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[size_t(a) * n + b] = uint8_t((a + b) % n);
    for (int a = 0; a < n; ++a) g.names.push_back(word_name({{"g" + suffix, a}}));
    return g;
}

RawGroup make_metacyclic(const MetacyclicParams& p, const std::string& suffix) {
    //x^i y^j at index i*m + j; y^j x^k = x^k y^(j*r^k)
    RawGroup g;
    int s = p.s, m = p.m;
    g.n = s * m;
    g.table.resize(size_t(g.n) * g.n);
    std::vector<long long> rpow(s);
    rpow[0] = 1 % m;
    for (int i = 1; i < s; ++i) rpow[i] = rpow[i - 1] * p.r % m;
    for (int i1 = 0; i1 < s; ++i1)
        for (int j1 = 0; j1 < m; ++j1)
            for (int i2 = 0; i2 < s; ++i2)
                for (int j2 = 0; j2 < m; ++j2) {
                    int i = (i1 + i2) % s;
                    int j = int((j1 * rpow[i2] + j2) % m);
                    g.table[size_t(i1 * m + j1) * g.n + (i2 * m + j2)] = uint8_t(i * m + j);
                }
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < m; ++j)
            g.names.push_back(word_name({{"x" + suffix, i}, {"y" + suffix, j}}));
    return g;
}

RawGroup make_dihedral(int order, const std::string& suffix) {
    //same table as metacyclic(2, m, m-1) with x the reflection
    int m = order / 2;
    RawGroup g = make_metacyclic({2, m, m - 1}, suffix);
    return g;
}

RawGroup make_dicyclic(int order, const std::string& suffix) {
    //a^(2m)=1, b^2=a^m, b^-1 a b = a^-1; a^i b^j at index j*2m + i
    int m = order / 4;
    int two_m = 2 * m;
    RawGroup g;
    g.n = order;
    g.table.resize(size_t(g.n) * g.n);
    auto idx = [&](int i, int j) { return j * two_m + i; };
    for (int j1 = 0; j1 < 2; ++j1)
        for (int i1 = 0; i1 < two_m; ++i1)
            for (int j2 = 0; j2 < 2; ++j2)
                for (int i2 = 0; i2 < two_m; ++i2) {
                    int i, j;
                    if (j1 == 0) {
                        i = (i1 + i2) % two_m;
                        j = j2;
                    } else {
                        i = ((i1 - i2) % two_m + two_m) % two_m;
                        j = 1 - j2;
                        if (j2 == 1) i = (i + m) % two_m;
                    }
                    g.table[size_t(idx(i1, j1)) * g.n + idx(i2, j2)] = uint8_t(idx(i, j));
                }
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < two_m; ++i)
            g.names.push_back(word_name({{"a" + suffix, i}, {"b" + suffix, j}}));
    return g;
}

RawGroup make_product(const std::vector<RawGroup>& factors) {
    RawGroup g;
    g.n = 1;
    for (const auto& f : factors) g.n *= f.n;
    if (g.n > kMaxGroupOrder)
        throw UsageError("group order " + std::to_string(g.n) + " exceeds cap " +
                         std::to_string(kMaxGroupOrder));
    g.table.resize(size_t(g.n) * g.n);
    auto split = [&](int e, std::vector<int>& out) {
        for (size_t f = factors.size(); f-- > 0;) {
            out[f] = e % factors[f].n;
            e /= factors[f].n;
        }
    };
    std::vector<int> ea(factors.size()), eb(factors.size());
    for (int a = 0; a < g.n; ++a) {
        split(a, ea);
        for (int b = 0; b < g.n; ++b) {
            split(b, eb);
            int e = 0;
            for (size_t f = 0; f < factors.size(); ++f)
                e = e * factors[f].n + factors[f].table[size_t(ea[f]) * factors[f].n + eb[f]];
            g.table[size_t(a) * g.n + b] = uint8_t(e);
        }
    }
    for (int a = 0; a < g.n; ++a) {
        split(a, ea);
        std::string name;
        for (size_t f = 0; f < factors.size(); ++f) {
            const std::string& part = factors[f].names[ea[f]];
            if (part == "1") continue;
            if (!name.empty()) name += "*";
            name += part;
        }
        g.names.push_back(name.empty() ? "1" : name);
    }
    return g;
}

RawGroup make_term(const GroupTerm& t, const std::string& suffix);

RawGroup make_cayley_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open cayley file: " + path);
    int n = 0;
    if (!(in >> n) || n < 1 || n > kMaxGroupOrder)
        throw UsageError("cayley file " + path + ": first line must be an order in [1, " +
                         std::to_string(kMaxGroupOrder) + "]");
    RawGroup g;
    g.n = n;
    g.table.resize(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int v;
            if (!(in >> v))
                throw UsageError("cayley file " + path + ": expected " + std::to_string(n * n) +
                                 " entries");
            if (v < 0 || v >= n)
                throw UsageError("cayley file " + path + ": entry " + std::to_string(v) +
                                 " out of range at row " + std::to_string(a));
            g.table[size_t(a) * n + b] = uint8_t(v);
        }
    if (auto bad = validate_cayley(g.table, n))
        throw UsageError("cayley file " + path + " is not a group: " + bad->describe());
    for (int a = 0; a < n; ++a) g.names.push_back(std::to_string(a));
    return g;
}

RawGroup make_term(const GroupTerm& t, const std::string& suffix) {
    switch (t.kind) {
        case GroupTerm::kCyclic: return make_cyclic(t.order, suffix);
        case GroupTerm::kDihedral: return make_dihedral(t.order, suffix);
        case GroupTerm::kDicyclic: return make_dicyclic(t.order, suffix);
        case GroupTerm::kMetacyclic: return make_metacyclic(t.meta, suffix);
        case GroupTerm::kCayleyFile: return make_cayley_from_file(t.path);
    }
    throw UsageError("unknown group term");
}

}  // namespace

std::string CayleyViolation::describe() const {
    std::ostringstream os;
    os << what << " violated at (" << a;
    if (b >= 0) os << ", " << b;
    if (c >= 0) os << ", " << c;
    os << ")";
    return os.str();
}

std::optional<CayleyViolation> validate_cayley(const std::vector<uint8_t>& table, int n) {
    if (n < 1 || table.size() != size_t(n) * n) return CayleyViolation{"closure", -1, -1, -1};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table[size_t(a) * n + b] >= n) return CayleyViolation{"closure", a, b, -1};
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = table[size_t(cand) * n + a] == a && table[size_t(a) * n + cand] == a;
        if (ok) {
            e = cand;
            break;
        }
    }
    if (e < 0) return CayleyViolation{"identity", -1, -1, -1};
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n && !found; ++b)
            found = table[size_t(a) * n + b] == e && table[size_t(b) * n + a] == e;
        if (!found) return CayleyViolation{"inverse", a, -1, -1};
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int ab_c = table[size_t(table[size_t(a) * n + b]) * n + c];
                int a_bc = table[size_t(a) * n + table[size_t(b) * n + c]];
                if (ab_c != a_bc) return CayleyViolation{"associativity", a, b, c};
            }
    return std::nullopt;
}

FiniteGroup::FiniteGroup(std::vector<uint8_t> table, int n, std::string descriptor,
                         std::vector<std::string> names)
    : n_(n), table_(std::move(table)), descriptor_(std::move(descriptor)),
      names_(std::move(names)) {
    if (n_ < 1 || n_ > kMaxGroupOrder || table_.size() != size_t(n_) * n_)
        throw UsageError("bad table dimensions for order " + std::to_string(n_));
    identity_ = -1;
    for (int e = 0; e < n_ && identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw UsageError("table has no identity element");
    inv_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
        int found = -1;
        for (int b = 0; b < n_ && found < 0; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) found = b;
        if (found < 0) throw UsageError("element " + std::to_string(a) + " has no inverse");
        inv_[a] = uint8_t(found);
    }
    abelian_ = true;
    for (int a = 0; a < n_ && abelian_; ++a)
        for (int b = a + 1; b < n_ && abelian_; ++b) abelian_ = mul(a, b) == mul(b, a);
    exponent_ = 1;
    cyclic_ = false;
    for (int a = 0; a < n_; ++a) {
        int o = element_order(a);
        exponent_ = int(std::lcm(exponent_, o));
        if (o == n_) cyclic_ = true;
    }
    if (names_.empty())
        for (int a = 0; a < n_; ++a) names_.push_back(std::to_string(a));
}

int FiniteGroup::pow(int a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int acc = identity_;
    while (e > 0) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

int FiniteGroup::element_order(int a) const {
    int o = 1;
    int x = a;
    while (x != identity_) {
        x = mul(x, a);
        ++o;
    }
    return o;
}

ElementSet FiniteGroup::left_translate(int g, const ElementSet& a) const {
    ElementSet out(n_);
    a.for_each([&](int e) { out.add(mul(g, e)); });
    return out;
}

FiniteGroup build_group(const GroupDescriptor& d) {
    if (d.terms.empty()) throw UsageError("empty group descriptor");
    RawGroup raw;
    if (d.terms.size() == 1) {
        raw = make_term(d.terms[0], "");
    } else {
        std::vector<RawGroup> factors;
        for (size_t f = 0; f < d.terms.size(); ++f)
            factors.push_back(make_term(d.terms[f], std::to_string(f + 1)));
        raw = make_product(factors);
    }
    return FiniteGroup(std::move(raw.table), raw.n, render_descriptor(d), std::move(raw.names));
}

FiniteGroup build_group(const std::string& descriptor_text) {
    return build_group(parse_descriptor(descriptor_text));
}

FiniteGroup build_group_from_cayley_file(const std::string& path) {
    GroupDescriptor d;
    GroupTerm t;
    t.kind = GroupTerm::kCayleyFile;
    t.path = path;
    d.terms.push_back(t);
    return build_group(d);
}

ElementSet subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
    ElementSet seen(g.order());
    seen.add(g.identity());
    for (int e : gens) {
        if (e < 0 || e >= g.order())
            throw UsageError("generator index " + std::to_string(e) + " out of range");
        seen.add(e);
    }
    //multiplicative closure; inverses come along as powers in a finite group
    bool grew = true;
    while (grew) {
        grew = false;
        auto elems = seen.elements();
        for (int a : elems)
            for (int b : elems) {
                int c = g.mul(a, b);
                if (!seen.contains(c)) {
                    seen.add(c);
                    grew = true;
                }
            }
    }
    return seen;
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const ElementSet& h) {
    if (!h.contains(g.identity())) throw UsageError("not a subgroup: missing identity");
    auto elems = h.elements();
    for (int a : elems) {
        if (!h.contains(g.inv(a))) throw UsageError("not a subgroup: missing inverse");
        for (int b : elems)
            if (!h.contains(g.mul(a, b))) throw UsageError("not a subgroup: not closed");
    }
    std::vector<std::vector<int>> cosets;
    ElementSet assigned(g.order());
    for (int e = 0; e < g.order(); ++e) {
        if (assigned.contains(e)) continue;
        std::vector<int> coset;
        for (int a : elems) {
            int x = g.mul(e, a);
            coset.push_back(x);
            assigned.add(x);
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

ElementSet stabilizer(const FiniteGroup& g, const ElementSet& a) {
    ElementSet out(g.order());
    for (int e = 0; e < g.order(); ++e)
        if (g.left_translate(e, a) == a) out.add(e);
    return out;
}

}  // namespace zerosum
