#pragma once

#include <optional>
#include <string>

#include "zerosum/group.hpp"
#include "zerosum/invariants.hpp"
#include "zerosum/reports.hpp"

namespace zerosum {

//single-file JSON store for invariant results, keyed by (canonical
//descriptor, invariant name).  a hit is only served after its certificate
//re-validates against a fresh product computation; entries that fail
//validation or carry a foreign version are dropped.  io errors are
//reported by load/store return values and never abort a computation.
class ResultCache {
public:
    explicit ResultCache(std::string path);

    //false on unreadable or unparsable file (treated as empty)
    bool load();
    //false when the file cannot be written
    bool store() const;

    std::optional<InvariantReport> lookup(const FiniteGroup& g, const std::string& which,
                                          const SearchBudget& budget);
    void put(const InvariantReport& rep);

    const std::string& path() const { return path_; }
    uint64_t entries() const;

private:
    std::string path_;
    ordered_json doc_;
};

}  // namespace zerosum
