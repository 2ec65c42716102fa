#include "ktorus/exterior.hpp"

#include <sstream>
#include <stdexcept>

#include "ktorus/combinatorics.hpp"
#include "ktorus/serialize.hpp"

namespace ktorus {

std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    if (r > n) return out;
    std::vector<std::size_t> cur(r);
    for (std::size_t i = 0; i < r; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        if (r == 0) break;
        // Advance the rightmost index that still has room.
        std::size_t i = r;
        while (i > 0 && cur[i - 1] == n - r + i) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

// Determinant of the submatrix of a on rows I and columns J (1-based index
// sets), by fraction-free elimination on the extracted block.
mpz_class minor_det(const ZMatrix& a, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
    const std::size_t r = rows.size();
    ZMatrix sub(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub.at(i, j) = a.at(rows[i] - 1, cols[j] - 1);
    return sub.determinant();
}

}  // namespace

ZMatrix wedge_power(const ZMatrix& a, std::size_t r) {
    if (!a.is_square()) throw std::invalid_argument("exterior power of non-square matrix");
    const std::size_t n = a.rows();
    if (r > n) throw std::invalid_argument("exterior power index out of range");
    if (r == 0) return ZMatrix::from_rows({{1}});
    if (r == 1) return a;
    auto basis = lex_subsets(n, r);
    const std::size_t dim = basis.size();
    ZMatrix out(dim, dim);
    for (std::size_t bi = 0; bi < dim; ++bi)
        for (std::size_t bj = 0; bj < dim; ++bj)
            out.at(bi, bj) = minor_det(a, basis[bi], basis[bj]);
    return out;
}

ZMatrix anzai_matrix(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    ZMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        s.at(i, i) = 1;
        if (i + 1 < n) s.at(i, i + 1) = 1;
    }
    return s;
}

ZMatrix binomial_power_matrix(std::size_t n, long k) {
    const std::size_t dim = n + 1;
    ZMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
            m.at(i, j) = extbinom(k, static_cast<long>(j - i));
    return m;
}

void LinearizationSpec::validate() const {
    switch (kind) {
        case Kind::anzai:
            if (n == 0) throw std::invalid_argument("anzai spec needs n >= 1");
            break;
        case Kind::ascending: {
            if (n == 0 || ascending_k.size() != n - 1)
                throw std::invalid_argument("ascending spec needs n - 1 exponents");
            for (std::size_t i = 0; i < ascending_k.size(); ++i) {
                if (ascending_k[i] == 0)
                    throw std::invalid_argument("ascending exponents must be nonzero");
                if (i + 1 < ascending_k.size() && ascending_k[i + 1] % ascending_k[i] != 0)
                    throw std::invalid_argument("each ascending exponent must divide the next");
            }
            break;
        }
        case Kind::furstenberg: {
            if (n < 2) throw std::invalid_argument("furstenberg spec needs n >= 2");
            for (const auto& [ij, val] : b) {
                auto [i, j] = ij;
                (void)val;
                if (i < 1 || j <= i || j > n)
                    throw std::invalid_argument("exponent indices must satisfy 1 <= i < j <= n");
            }
            for (std::size_t i = 1; i < n; ++i) {
                auto it = b.find({i, i + 1});
                if (it == b.end() || it->second == 0)
                    throw std::invalid_argument("superdiagonal exponents must be nonzero");
            }
            break;
        }
        case Kind::general: {
            if (general.rows() != n || general.cols() != n || n == 0)
                throw std::invalid_argument("general spec matrix must be square of size n");
            mpz_class d = general.determinant();
            if (d != 1 && d != -1)
                throw std::invalid_argument("general spec matrix must have determinant +-1");
            break;
        }
    }
}

LinearizationSpec LinearizationSpec::from_json(const nlohmann::json& j) {
    LinearizationSpec spec;
    if (j.is_object() && !j.contains("kind") && j.contains("data")) {
        // Bare matrix object.
        spec.kind = Kind::general;
        spec.general = matrix_from_json(j);
        spec.n = spec.general.rows();
        spec.validate();
        return spec;
    }
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("linearization JSON needs a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "anzai") {
        spec.kind = Kind::anzai;
        spec.n = j.at("n").get<std::size_t>();
    } else if (kind == "ascending") {
        spec.kind = Kind::ascending;
        for (const auto& e : j.at("k")) spec.ascending_k.push_back(mpz_from_json(e));
        spec.n = spec.ascending_k.size() + 1;
    } else if (kind == "furstenberg") {
        spec.kind = Kind::furstenberg;
        std::size_t max_j = 0;
        for (const auto& [key, val] : j.at("b").items()) {
            std::istringstream is(key);
            std::size_t bi = 0, bj = 0;
            char comma = 0;
            if (!(is >> bi >> comma >> bj) || comma != ',')
                throw std::invalid_argument("exponent keys must look like \"i,j\"");
            spec.b[{bi, bj}] = mpz_from_json(val);
            max_j = std::max(max_j, bj);
        }
        spec.n = j.contains("n") ? j.at("n").get<std::size_t>() : max_j;
    } else if (kind == "general") {
        spec.kind = Kind::general;
        spec.general = matrix_from_json(j.at("matrix"));
        spec.n = spec.general.rows();
    } else {
        throw std::invalid_argument("unknown linearization kind: " + kind);
    }
    spec.validate();
    return spec;
}

nlohmann::json LinearizationSpec::to_json() const {
    switch (kind) {
        case Kind::anzai:
            return {{"kind", "anzai"}, {"n", n}};
        case Kind::ascending: {
            nlohmann::json k = nlohmann::json::array();
            for (const auto& e : ascending_k) k.push_back(mpz_to_json(e));
            return {{"kind", "ascending"}, {"k", std::move(k)}};
        }
        case Kind::furstenberg: {
            nlohmann::json bj = nlohmann::json::object();
            for (const auto& [ij, val] : b) {
                std::ostringstream key;
                key << ij.first << ',' << ij.second;
                bj[key.str()] = mpz_to_json(val);
            }
            return {{"kind", "furstenberg"}, {"n", n}, {"b", std::move(bj)}};
        }
        case Kind::general:
            return {{"kind", "general"}, {"matrix", matrix_to_json(general)}};
    }
    throw std::logic_error("unreachable");
}

ZMatrix linearization(const LinearizationSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case LinearizationSpec::Kind::anzai:
            return anzai_matrix(spec.n);
        case LinearizationSpec::Kind::ascending: {
            ZMatrix a = ZMatrix::identity(spec.n);
            for (std::size_t i = 0; i + 1 < spec.n; ++i) a.at(i, i + 1) = spec.ascending_k[i];
            return a;
        }
        case LinearizationSpec::Kind::furstenberg: {
            ZMatrix a = ZMatrix::identity(spec.n);
            for (const auto& [ij, val] : spec.b) a.at(ij.first - 1, ij.second - 1) = val;
            return a;
        }
        case LinearizationSpec::Kind::general:
            return spec.general;
    }
    throw std::logic_error("unreachable");
}

std::optional<std::size_t> unipotent_degree(const ZMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("unipotence is defined for square matrices");
    const std::size_t n = a.rows();
    ZMatrix nil = a - ZMatrix::identity(n);
    ZMatrix power = nil;
    for (std::size_t k = 1; k <= n; ++k) {
        if (power.is_zero()) return k;
        power = power * nil;
    }
    // A unipotent matrix of size n satisfies (A - I)^n == 0, so stopping at n
    // is a complete test.
    return std::nullopt;
}

}  // namespace ktorus
