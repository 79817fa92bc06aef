#include "ordlat/io.hpp"

#include <fstream>

namespace ordlat {

namespace {

nlohmann::json qmatrix_to_json(const QMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.num_rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.num_cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QMatrix qmatrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a non-empty array of rows");
    QMatrix m(j.size(), j.at(0).size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& row = j.at(i);
        if (row.size() != m.num_cols())
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < m.num_cols(); ++c)
            m(i, c) = parse_rat(row.at(c).get<std::string>());
    }
    return m;
}

}  // namespace

nlohmann::json order_to_json(const Order& o) {
    if (!o.name().empty()) return o.name();
    nlohmann::json alg;
    if (o.spec().kind() == AlgebraSpec::Kind::Quadratic) {
        alg = {{"kind", "quadratic"}, {"d", to_string(o.spec().d())}};
    } else {
        alg = {{"kind", "quaternion"},
               {"a", to_string(o.spec().a())},
               {"b", to_string(o.spec().b())}};
    }
    return {{"algebra", alg}, {"basis", qmatrix_to_json(o.basis_matrix())}};
}

std::shared_ptr<const Order> order_from_json(const nlohmann::json& j) {
    if (j.is_string()) return builtin_order_ptr(j.get<std::string>());
    if (!j.is_object() || !j.contains("algebra") || !j.contains("basis"))
        throw std::invalid_argument("order must be a builtin name or {algebra, basis}");
    const auto& alg = j.at("algebra");
    std::string kind = alg.at("kind").get<std::string>();
    AlgebraSpec spec = [&] {
        if (kind == "quadratic")
            return AlgebraSpec::quadratic(parse_rat(alg.at("d").get<std::string>()));
        if (kind == "quaternion")
            return AlgebraSpec::quaternion(parse_rat(alg.at("a").get<std::string>()),
                                           parse_rat(alg.at("b").get<std::string>()));
        throw std::invalid_argument("unknown algebra kind: " + kind);
    }();
    auto order = std::make_shared<Order>(spec, qmatrix_from_json(j.at("basis")));
    ClosureReport closure = verify_ring_closure(*order);
    if (!closure.ok())
        throw std::invalid_argument("order basis is not closed under the ring operations: " +
                                    closure.violations.front().what);
    return order;
}

nlohmann::json lattice_to_json(const OLattice& lattice) {
    const std::size_t r = lattice.order().rank();
    const std::size_t m = lattice.ambient_dim();
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t i = 0; i < lattice.zrank(); ++i) {
        KVector v = lattice.basis_vector(i);
        nlohmann::json vec = nlohmann::json::array();
        for (std::size_t t = 0; t < m; ++t) {
            nlohmann::json coords = nlohmann::json::array();
            for (std::size_t c = 0; c < r; ++c) coords.push_back(to_string(v[t][c]));
            vec.push_back(std::move(coords));
        }
        gens.push_back(std::move(vec));
    }
    nlohmann::json j = {{"order", order_to_json(lattice.order())},
                        {"m", m},
                        {"generators", std::move(gens)}};
    nlohmann::json metadata = nlohmann::json::object();
    if (lattice.form_scale() != 1) metadata["form_scale"] = to_string(lattice.form_scale());
    if (!lattice.full_rank()) metadata["relative"] = true;
    if (!metadata.empty()) j["metadata"] = std::move(metadata);
    return j;
}

OLattice lattice_from_json(const nlohmann::json& j) {
    auto order = order_from_json(j.at("order"));
    const std::size_t r = order->rank();
    const std::size_t m = j.at("m").get<std::size_t>();
    if (m == 0) throw std::invalid_argument("lattice requires m >= 1");
    std::vector<KVector> gens;
    for (const auto& vec : j.at("generators")) {
        if (vec.size() != m) throw std::invalid_argument("generator has wrong ambient dimension");
        KVector v;
        for (const auto& coords : vec) {
            if (coords.size() != r)
                throw std::invalid_argument("generator entry has wrong coordinate count");
            Elem e;
            for (const auto& c : coords) e.push_back(parse_rat(c.get<std::string>()));
            v.push_back(std::move(e));
        }
        gens.push_back(std::move(v));
    }
    const nlohmann::json metadata =
        j.contains("metadata") ? j.at("metadata") : nlohmann::json::object();
    const bool relative = metadata.value("relative", false);
    OLattice lattice = [&] {
        if (!relative) return OLattice::from_generators(order, m, gens);
        // Relative lattice: spans a proper K-subspace, so skip the rank demand.
        QMatrix rows(gens.size(), r * m);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t t = 0; t < m; ++t)
                for (std::size_t c = 0; c < r; ++c) rows(i, t * r + c) = gens[i][t][c];
        return OLattice::from_realization(order, m, std::move(rows), true, false);
    }();
    if (metadata.contains("form_scale")) {
        Rat c = parse_rat(metadata.at("form_scale").get<std::string>());
        if (c <= 0) throw std::invalid_argument("form_scale must be positive");
        lattice = lattice.scaled(c);
    }
    return lattice;
}

void save_lattice(const OLattice& lattice, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing", path);
    out << lattice_to_json(lattice).dump(2) << "\n";
    if (!out) throw IoError("write failed", path);
}

OLattice load_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open", path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("invalid JSON (") + e.what() + ")", path);
    }
    return lattice_from_json(j);
}

}  // namespace ordlat
