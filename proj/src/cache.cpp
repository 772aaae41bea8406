#include "zerosum/cache.hpp"

#include <chrono>
#include <fstream>

#include "zerosum/sequence.hpp"
#include "zerosum/version.hpp"

namespace zerosum {

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    doc_ = ordered_json::object();
    doc_["version"] = kVersion;
    doc_["entries"] = ordered_json::object();
}

bool ResultCache::load() {
    std::ifstream in(path_);
    if (!in) return false;
    ordered_json parsed = ordered_json::parse(in, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) return false;
    if (!parsed.contains("version") || parsed["version"] != kVersion) return false;
    if (!parsed.contains("entries") || !parsed["entries"].is_object()) return false;
    doc_ = std::move(parsed);
    return true;
}

bool ResultCache::store() const {
    std::ofstream out(path_);
    if (!out) return false;
    out << doc_.dump(2) << '\n';
    return bool(out);
}

uint64_t ResultCache::entries() const { return doc_["entries"].size(); }

std::optional<InvariantReport> ResultCache::lookup(const FiniteGroup& g,
                                                   const std::string& which,
                                                   const SearchBudget& budget) {
    std::string key = g.descriptor() + "|" + which;
    auto& entries = doc_["entries"];
    if (!entries.contains(key)) return std::nullopt;
    const ordered_json& e = entries[key];
    InvariantReport rep;
    try {
        rep.which = which;
        rep.group = g.descriptor();
        rep.value = e.at("value").get<uint64_t>();
        rep.certificate = parse_sequence(e.at("certificate").get<std::string>(), g.order());
        rep.method = e.at("method").get<std::string>();
    } catch (...) {
        entries.erase(key);
        return std::nullopt;
    }
    if (!revalidate_invariant_certificate(g, which, rep.value, rep.certificate, budget)) {
        entries.erase(key);
        return std::nullopt;
    }
    return rep;
}

void ResultCache::put(const InvariantReport& rep) {
    ordered_json e = ordered_json::object();
    e["value"] = rep.value;
    e["certificate"] = render_sequence(rep.certificate);
    e["method"] = rep.method;
    e["timestamp"] =
        uint64_t(std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::system_clock::now().time_since_epoch())
                     .count());
    doc_["entries"][rep.group + "|" + rep.which] = std::move(e);
}

}  // namespace zerosum
