#include "ktorus/serialize.hpp"

#include <stdexcept>

namespace ktorus {

nlohmann::json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

mpz_class mpz_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

nlohmann::json matrix_to_json(const ZMatrix& a) {
    nlohmann::json data = nlohmann::json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(mpz_to_json(a.at(i, j)));
        data.push_back(std::move(row));
    }
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

ZMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw std::invalid_argument("matrix JSON needs rows, cols and data");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& data = j.at("data");
    if (!data.is_array() || data.size() != rows)
        throw std::invalid_argument("matrix data has the wrong number of rows");
    ZMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = data.at(i);
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix data has a row of the wrong length");
        for (std::size_t c = 0; c < cols; ++c) a.at(i, c) = mpz_from_json(row.at(c));
    }
    return a;
}

nlohmann::json group_to_json(const FGAbelianGroup& g) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& d : g.torsion) torsion.push_back(mpz_to_json(d));
    return {{"rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

}  // namespace ktorus
