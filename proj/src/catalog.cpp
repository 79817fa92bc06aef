#include "ordlat/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "ordlat/io.hpp"

namespace ordlat {

namespace {

// Accept the Greek capital lambda (UTF-8 CE 9B) as an alias for "L".
std::string normalize_name(const std::string& name) {
    std::string out;
    for (std::size_t i = 0; i < name.size(); ++i) {
        if (i + 1 < name.size() && static_cast<unsigned char>(name[i]) == 0xCE &&
            static_cast<unsigned char>(name[i + 1]) == 0x9B) {
            out += 'L';
            ++i;
        } else {
            out += name[i];
        }
    }
    return out;
}

std::string name_to_slug(const std::string& name) {
    std::string slug = normalize_name(name);
    std::replace(slug.begin(), slug.end(), '/', '_');
    return slug;
}

std::string slug_to_name(const std::string& slug) {
    std::string name = slug;
    auto pos = name.rfind('_');
    if (pos != std::string::npos) name[pos] = '/';
    return name;
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open", path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("invalid JSON (") + e.what() + ")", path);
    }
    return j;
}

}  // namespace

std::string catalog_data_dir() {
    if (const char* env = std::getenv("ORDLAT_DATA_DIR")) return env;
    return ORDLAT_DATA_DIR;
}

std::vector<std::string> list_entries() {
    namespace fs = std::filesystem;
    std::vector<std::string> names;
    const std::string dir = catalog_data_dir();
    if (!fs::is_directory(dir)) return names;
    const std::string sidecar = ".expected.json";
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::string file = entry.path().filename().string();
        if (file.size() > sidecar.size() &&
            file.compare(file.size() - sidecar.size(), sidecar.size(), sidecar) == 0)
            names.push_back(slug_to_name(file.substr(0, file.size() - sidecar.size())));
    }
    std::sort(names.begin(), names.end());
    return names;
}

CatalogEntry catalog_entry(const std::string& name) {
    const std::string slug = name_to_slug(name);
    const std::string dir = catalog_data_dir();
    CatalogEntry e;
    e.name = slug_to_name(slug);
    e.lattice_file = dir + "/" + slug + ".json";
    e.expected_file = dir + "/" + slug + ".expected.json";
    if (!std::filesystem::exists(e.expected_file)) throw UnknownEntryError(name);
    nlohmann::json j = read_json(e.expected_file);
    e.order_name = j.at("order").get<std::string>();
    e.expected.det = parse_rat(j.at("det").get<std::string>());
    e.expected.min_norm = parse_rat(j.at("min_norm").get<std::string>());
    e.expected.gamma_nth = parse_rat(j.at("gamma_nth").get<std::string>());
    if (j.contains("kissing")) e.expected.kissing = j.at("kissing").get<long>();
    if (j.contains("citations"))
        for (const auto& c : j.at("citations")) e.citations.push_back(c.get<std::string>());
    return e;
}

OLattice load_catalog(const std::string& name) {
    CatalogEntry e = catalog_entry(name);
    return load_lattice(e.lattice_file);
}

CatalogVerification verify_entry(const std::string& name, std::size_t node_budget) {
    CatalogEntry e = catalog_entry(name);
    OLattice lattice = load_lattice(e.lattice_file);

    CatalogVerification v;
    v.name = e.name;
    v.o_invariant = lattice.check_o_invariance().ok();

    auto check = [&v](const std::string& field, const Rat& expected, const Rat& computed) {
        v.checks.push_back({field, to_string(expected), to_string(computed),
                            expected == computed});
    };

    check("det", e.expected.det, lattice.determinant());
    Rat min = shortest_norm(lattice, node_budget);
    check("min_norm", e.expected.min_norm, min);
    const unsigned long n = lattice.zrank();
    check("gamma_nth", e.expected.gamma_nth, pow_rat(min, n) / lattice.determinant());
    if (e.expected.kissing) {
        long kissing = static_cast<long>(minimal_vectors(lattice, node_budget).size());
        v.checks.push_back({"kissing", std::to_string(*e.expected.kissing),
                            std::to_string(kissing), kissing == *e.expected.kissing});
    }
    v.pass = v.o_invariant &&
             std::all_of(v.checks.begin(), v.checks.end(),
                         [](const FieldCheck& c) { return c.pass; });
    return v;
}

void export_entry(const std::string& name, const std::string& path) {
    CatalogEntry e = catalog_entry(name);
    save_lattice(load_lattice(e.lattice_file), path);
}

}  // namespace ordlat
