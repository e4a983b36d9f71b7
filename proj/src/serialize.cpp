#include "hullsmith/serialize.hpp"

#include <fstream>

namespace hullsmith {

json to_json(const Field& f) {
    return json{{"p", f->p()}, {"m", f->m()}, {"modulus", f->modulus()}};
}

Field field_from_json(const json& j) {
    require(j.contains("p") && j.contains("m") && j.contains("modulus"), errc::parse_error,
            "field descriptor needs p, m, modulus");
    return FieldSpec::make(j["p"].get<uint32_t>(), j["m"].get<uint32_t>(),
                           j["modulus"].get<std::vector<uint32_t>>());
}

json to_json(const GrsCode& c) {
    return json{{"field", to_json(c.field)}, {"n", c.n()},        {"k", c.k},
                {"k1", c.k1},                {"extended", c.extended}, {"a", c.a},
                {"v", c.v}};
}

GrsCode grs_from_json(const json& j) {
    GrsCode c;
    c.field = field_from_json(j.at("field"));
    c.a = j.at("a").get<std::vector<uint32_t>>();
    c.v = j.at("v").get<std::vector<uint32_t>>();
    c.k = j.at("k").get<int>();
    c.k1 = j.value("k1", 0);
    c.extended = j.value("extended", false);
    c.validate();
    return c;
}

json to_json(const LinearCode& c) {
    std::vector<std::vector<uint32_t>> rows;
    for (size_t r = 0; r < c.generator.rows(); ++r) rows.push_back(c.generator.row_vec(r));
    return json{{"field", to_json(c.generator.field())},
                {"generator", rows},
                {"mds_structural", c.mds_structural}};
}

LinearCode linear_from_json(const json& j) {
    Field f = field_from_json(j.at("field"));
    auto rows = j.at("generator").get<std::vector<std::vector<uint32_t>>>();
    require(!rows.empty(), errc::parse_error, "generator must have rows");
    FFMatrix G(f, rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == rows[0].size(), errc::parse_error, "ragged generator");
        for (size_t c = 0; c < rows[r].size(); ++c) G.at(r, c) = rows[r][c];
    }
    LinearCode c{G, j.value("mds_structural", false)};
    require(rank(c.generator) == c.generator.rows(), errc::parse_error,
            "generator must have full row rank");
    return c;
}

json to_json(const RuleOutcome& o) {
    json j;
    j["code"] = o.grs ? to_json(*o.grs) : to_json(o.code);
    j["rule_tag"] = o.rule_tag;
    j["predicted_hull_lb"] = o.predicted_hull_lb;
    j["predicted_exact"] = o.predicted_exact;
    j["hull_dim"] = o.computed.hull_dim;
    j["gram_rank"] = o.computed.gram_rank;
    if (o.flagged_below_statement) j["flagged_below_statement"] = true;
    return j;
}

json to_json(const EaqeccParams& p) {
    return json{{"q", p.q}, {"n", p.n},
                {"k", p.k}, {"d", p.d},
                {"c", p.c}, {"mds", to_string(p.mds)},
                {"degenerate", p.degenerate}};
}

AnyCode code_from_json(const json& j) {
    AnyCode out;
    if (j.contains("a") && j.contains("v"))
        out.grs = grs_from_json(j);
    else if (j.contains("generator"))
        out.linear = linear_from_json(j);
    else
        fail(errc::parse_error, "descriptor is neither a GRS nor a linear code");
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::parse_error, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(errc::parse_error, "bad JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    require(out.good(), errc::parse_error, "cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string content_hash(const json& j) {
    std::string s = j.dump();
    uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

} // namespace hullsmith
