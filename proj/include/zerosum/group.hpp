#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zerosum/descriptor.hpp"
#include "zerosum/element_set.hpp"

namespace zerosum {

inline constexpr int kMaxGroupOrder = 255;

//finite group as a dense multiplication table over indices 0..n-1
class FiniteGroup {
public:
    FiniteGroup(std::vector<uint8_t> table, int n, std::string descriptor,
                std::vector<std::string> names);

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[size_t(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return identity_; }
    const std::string& descriptor() const { return descriptor_; }
    const std::string& name(int e) const { return names_[e]; }
    const std::vector<std::string>& names() const { return names_; }

    int pow(int a, long long e) const;
    int element_order(int a) const;

    bool is_abelian() const { return abelian_; }
    bool is_cyclic() const { return cyclic_; }
    int exponent() const { return exponent_; }

    //translate of a set: {g*a : a in A}
    ElementSet left_translate(int g, const ElementSet& a) const;

private:
    int n_;
    std::vector<uint8_t> table_;
    std::vector<uint8_t> inv_;
    int identity_;
    std::string descriptor_;
    std::vector<std::string> names_;
    bool abelian_;
    bool cyclic_;
    int exponent_;
};

//violation found by validate_cayley, with a witnessing triple
struct CayleyViolation {
    std::string what;  //"closure" | "identity" | "inverse" | "associativity"
    int a = -1, b = -1, c = -1;
    std::string describe() const;
};

//checks closure, two-sided identity, inverses, and associativity; returns
//the first violation or nullopt when the table is a group
std::optional<CayleyViolation> validate_cayley(const std::vector<uint8_t>& table, int n);

//builds the group for a descriptor; throws UsageError on invalid parameters
//and IoError / UsageError for unreadable or non-group cayley files
FiniteGroup build_group(const GroupDescriptor& d);
FiniteGroup build_group(const std::string& descriptor_text);

//reads "n\n" followed by n rows of n indices
FiniteGroup build_group_from_cayley_file(const std::string& path);

//closure of the given elements under multiplication
ElementSet subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);

//left cosets of a subgroup, each sorted, ordered by minimal element;
//throws UsageError when h is not a subgroup
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const ElementSet& h);

//{g : g*A = A}; always a subgroup
ElementSet stabilizer(const FiniteGroup& g, const ElementSet& a);

}  // namespace zerosum
