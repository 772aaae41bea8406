#pragma once

#include <string>
#include <vector>

namespace zerosum {

//metacyclic presentation <x,y | x^s = y^m = 1, x^-1 y x = y^r>
struct MetacyclicParams {
    int s = 0;
    int m = 0;
    int r = 0;
};

struct GroupTerm {
    enum Kind { kCyclic, kDihedral, kDicyclic, kMetacyclic, kCayleyFile };
    Kind kind = kCyclic;
    int order = 0;           //cyclic: n, dihedral: 2m, dicyclic: 4m
    MetacyclicParams meta;   //kMetacyclic only
    std::string path;        //kCayleyFile only
};

//product of terms; a single term is the common case
struct GroupDescriptor {
    std::vector<GroupTerm> terms;
};

//grammar: term ('x' term)*, term = 'c'INT | 'd'INT | 'q'INT |
//'meta(INT,INT,INT)' | 'cayley:PATH'; case-insensitive, no whitespace.
//a cayley term consumes the rest of the input since paths may contain 'x'.
//throws UsageError with byte offset and expected-token set on syntax errors,
//and a distinct UsageError for semantically invalid parameters (d7, q10,
//meta with r^s != 1 mod m, ...).
GroupDescriptor parse_descriptor(const std::string& text);

//lowercase canonical form; product factors sorted by their rendering, so
//parse/render/parse is a fixpoint
std::string render_descriptor(const GroupDescriptor& d);
std::string render_term(const GroupTerm& t);

//constructor families with small parameters, used by catalog-wide checks.
//cyclic groups, products of two cyclics, dihedral, dicyclic, and non-abelian
//metacyclic groups (descriptors duplicating a dihedral table are skipped).
std::vector<GroupDescriptor> group_catalog(int max_order);

}  // namespace zerosum
