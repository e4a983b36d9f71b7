#include "hullsmith/catalog.hpp"

#include <cstdlib>
#include <fstream>

namespace hullsmith {

Catalog::Catalog(std::string path) : path_(std::move(path)) {
    if (path_.empty()) {
        if (const char* env = std::getenv("HULLSMITH_CATALOG"))
            path_ = env;
        else
            path_ = "hullsmith_catalog.jsonl";
    }
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            if (j.contains("hash")) hashes_.insert(j["hash"].get<std::string>());
        } catch (...) {
            // tolerate foreign lines; they simply never dedupe
        }
    }
}

bool Catalog::append(const std::string& kind, const json& payload) {
    json rec{{"kind", kind}, {"payload", payload}};
    std::string h = content_hash(rec);
    if (hashes_.count(h)) return false;
    if (!out_.is_open()) {
        out_.open(path_, std::ios::app);
        require(out_.good(), errc::parse_error, "cannot append to catalog " + path_);
    }
    rec["hash"] = h;
    out_ << rec.dump() << "\n";
    out_.flush();
    hashes_.insert(h);
    return true;
}

} // namespace hullsmith
