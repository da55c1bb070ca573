// SPDX-License-Identifier: Apache-2.0
#include "gcodelab/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace gcodelab {

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
    return v;
}

GroupPtr parse_single(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string_view family = spec.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    if (family == "trivial") return make_cyclic(1);
    if (family == "quaternion8" || family == "q8") return make_quaternion8();
    if (family == "cyclic") return make_cyclic(parse_count(args, "cyclic order"));
    if (family == "dihedral") return make_dihedral(parse_count(args, "dihedral parameter"));
    if (family == "symmetric") return make_symmetric(parse_count(args, "symmetric degree"));
    if (family == "elemabelian") {
        const auto comma = args.find(',');
        if (comma == std::string_view::npos) throw std::invalid_argument("elemabelian needs P,M");
        return make_elementary_abelian(static_cast<std::uint32_t>(parse_count(args.substr(0, comma), "prime")),
                                       parse_count(args.substr(comma + 1), "rank"));
    }
    throw std::invalid_argument("unknown group family '" + std::string(family) + "'");
}

}  // namespace

GroupPtr parse_group_spec(std::string_view spec) {
    GroupPtr result;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t star = spec.find('*', pos);
        if (star == std::string_view::npos) star = spec.size();
        GroupPtr factor = parse_single(spec.substr(pos, star - pos));
        result = result ? direct_product(result, factor) : factor;
        pos = star + 1;
    }
    return result;
}

nlohmann::json group_to_json(const Group& g) {
    return {{"name", g.name()}, {"order", g.order()}, {"table", g.table()}, {"labels", g.labels()}};
}

GroupPtr group_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_group_spec(j.get<std::string>());
    if (!j.is_object()) throw std::invalid_argument("group must be an object or a builtin name");
    if (!j.contains("table")) {
        if (j.contains("name")) return parse_group_spec(j.at("name").get<std::string>());
        throw std::invalid_argument("group object needs a table");
    }
    auto table = j.at("table").get<std::vector<std::vector<Elem>>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
        throw std::invalid_argument("group order does not match the table");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    const std::string name = j.value("name", std::string("custom"));
    return std::make_shared<const Group>(Group::from_table(name, std::move(table), std::move(labels)));
}

nlohmann::json code_to_json(const GCode& c) {
    return {{"group", group_to_json(*c.group())}, {"p", c.spec().p()}, {"basis", c.basis().matrix().to_rows()}};
}

GCode code_from_json(const nlohmann::json& j) {
    GroupPtr g = group_from_json(j.at("group"));
    const FieldSpec spec(j.at("p").get<std::uint32_t>());
    const auto rows = j.at("basis").get<std::vector<Vector>>();
    return GCode(g, span_of(spec, g->order(), rows));
}

nlohmann::json report_to_json(const SweepReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"check", f.check}, {"subject", f.subject}, {"message", f.message}});
    return {{"checked", r.checked}, {"failures", failures}};
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace gcodelab
