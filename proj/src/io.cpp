#include "homlts/io.hpp"

#include "homlts/errors.hpp"

#include <sstream>

namespace homlts {

namespace {

Rational scalar_from_json(const Json& j) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    throw ParseError("expected a rational string, got: " + j.dump());
}

Vector vector_from_json(const Json& j, std::size_t expected) {
    if (!j.is_array())
        throw ParseError("expected an array of scalars, got: " + j.dump());
    if (j.size() != expected)
        throw ParseError("expected " + std::to_string(expected) + " coefficients, got " +
                         std::to_string(j.size()));
    Vector v;
    v.reserve(j.size());
    for (const auto& x : j)
        v.push_back(scalar_from_json(x));
    return v;
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

std::vector<std::size_t> indices_from_json(const Json& j, std::size_t arity,
                                           std::size_t dim) {
    if (!j.is_array() || j.size() != arity)
        throw ParseError("bracket entry needs " + std::to_string(arity) + " indices");
    std::vector<std::size_t> idx;
    for (const auto& x : j) {
        if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0))
            throw ParseError("bracket index must be a non-negative integer");
        const std::size_t i = x.get<std::size_t>();
        if (i >= dim)
            throw ParseError("bracket index " + std::to_string(i) + " out of range [0, " +
                             std::to_string(dim) + ")");
        idx.push_back(i);
    }
    return idx;
}

} // namespace

AlgebraFile algebra_from_json(const Json& j) {
    if (!j.is_object())
        throw ParseError("algebra file must be a JSON object");
    AlgebraFile file;
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ParseError("missing string field 'kind'");
    file.kind = j["kind"].get<std::string>();
    if (file.kind != "lie" && file.kind != "hom_lie" && file.kind != "hom_lts")
        throw ParseError("unknown kind '" + file.kind + "'");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
        throw ParseError("missing numeric field 'dim'");
    file.dim = j["dim"].get<std::size_t>();

    if (j.contains("basis")) {
        if (!j["basis"].is_array())
            throw ParseError("'basis' must be an array of names");
        for (const auto& name : j["basis"])
            file.basis.push_back(name.get<std::string>());
        if (file.basis.size() != file.dim)
            throw ParseError("basis has " + std::to_string(file.basis.size()) +
                             " names but dim is " + std::to_string(file.dim));
    }

    const std::size_t arity = file.kind == "hom_lts" ? 3 : 2;
    if (j.contains("bracket")) {
        if (!j["bracket"].is_array())
            throw ParseError("'bracket' must be an array of entries");
        for (const auto& entry : j["bracket"]) {
            if (!entry.is_object() || !entry.contains("indices") || !entry.contains("value"))
                throw ParseError("bracket entry needs 'indices' and 'value'");
            auto indices = indices_from_json(entry["indices"], arity, file.dim);
            auto value = vector_from_json(entry["value"], file.dim);
            file.bracket.push_back({std::move(indices), std::move(value)});
        }
    }

    auto read_matrix = [&](const char* field) -> std::optional<Matrix> {
        if (!j.contains(field))
            return std::nullopt;
        Matrix m = matrix_from_json(j[field]);
        if (m.rows() != file.dim || m.cols() != file.dim)
            throw ParseError(std::string(field) + " must be a " + std::to_string(file.dim) +
                             "x" + std::to_string(file.dim) + " matrix");
        return m;
    };
    file.alpha = read_matrix("alpha");
    file.alpha2 = read_matrix("alpha2");

    if (j.contains("grading")) {
        const auto& g = j["grading"];
        if (!g.is_object() || !g.contains("even") || !g.contains("odd"))
            throw ParseError("'grading' needs 'even' and 'odd' index lists");
        std::vector<std::size_t> even, odd;
        for (const auto& x : g["even"])
            even.push_back(x.get<std::size_t>());
        for (const auto& x : g["odd"])
            odd.push_back(x.get<std::size_t>());
        file.grading = {std::move(even), std::move(odd)};
    }
    return file;
}

Json algebra_to_json(const AlgebraFile& file) {
    Json j;
    j["kind"] = file.kind;
    j["dim"] = file.dim;
    if (!file.basis.empty())
        j["basis"] = file.basis;
    Json entries = Json::array();
    for (const auto& entry : file.bracket) {
        Json e;
        e["indices"] = entry.indices;
        e["value"] = vector_to_json(entry.value);
        entries.push_back(std::move(e));
    }
    j["bracket"] = std::move(entries);
    auto rows_only = [](const Matrix& m) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i)
            rows.push_back(vector_to_json(m.row(i)));
        return rows;
    };
    if (file.alpha)
        j["alpha"] = rows_only(*file.alpha);
    if (file.alpha2)
        j["alpha2"] = rows_only(*file.alpha2);
    if (file.grading) {
        Json g;
        g["even"] = file.grading->first;
        g["odd"] = file.grading->second;
        j["grading"] = std::move(g);
    }
    return j;
}

AlgebraFile parse_algebra(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return algebra_from_json(j);
}

std::string write_algebra(const AlgebraFile& file) {
    return algebra_to_json(file).dump(2) + "\n";
}

HomLieAlgebra to_hom_lie(const AlgebraFile& file) {
    if (file.kind != "lie" && file.kind != "hom_lie")
        throw ParseError("expected kind 'lie' or 'hom_lie', found '" + file.kind + "'");
    if (file.kind == "hom_lie" && !file.alpha)
        throw ParseError("kind 'hom_lie' requires an 'alpha' matrix");
    const std::size_t n = file.dim;
    Tensor2 bracket(n, std::vector<Vector>(n, zero_vector(n)));
    std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
    for (const auto& e : file.bracket) {
        if (given[e.indices[0]][e.indices[1]])
            throw ParseError("duplicate bracket entry at (" + std::to_string(e.indices[0]) +
                             "," + std::to_string(e.indices[1]) + ")");
        given[e.indices[0]][e.indices[1]] = true;
        bracket[e.indices[0]][e.indices[1]] = e.value;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (given[i][j] && i != j && !given[j][i])
                bracket[j][i] = vec_scaled(Rational(-1), bracket[i][j]);
    return HomLieAlgebra{n, std::move(bracket),
                         file.alpha ? *file.alpha : Matrix::identity(n)};
}

HomLTS to_hom_lts(const AlgebraFile& file) {
    if (file.kind != "hom_lts")
        throw ParseError("expected kind 'hom_lts', found '" + file.kind + "'");
    if (!file.alpha)
        throw ParseError("kind 'hom_lts' requires an 'alpha' matrix");
    const std::size_t n = file.dim;
    Tensor3 bracket(n, std::vector<std::vector<Vector>>(n, std::vector<Vector>(n, zero_vector(n))));
    std::vector<std::vector<std::vector<bool>>> given(
        n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
    for (const auto& e : file.bracket) {
        const auto [i, j, k] = std::tuple{e.indices[0], e.indices[1], e.indices[2]};
        if (given[i][j][k])
            throw ParseError("duplicate bracket entry at (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
        given[i][j][k] = true;
        bracket[i][j][k] = e.value;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (given[i][j][k] && i != j && !given[j][i][k])
                    bracket[j][i][k] = vec_scaled(Rational(-1), bracket[i][j][k]);
    return HomLTS{n, std::move(bracket), *file.alpha,
                  file.alpha2 ? *file.alpha2 : *file.alpha};
}

AlgebraFile from_hom_lie(const HomLieAlgebra& l, const std::string& kind,
                         std::vector<std::string> basis) {
    AlgebraFile file;
    file.kind = kind;
    file.dim = l.dim;
    file.basis = std::move(basis);
    for (std::size_t i = 0; i < l.dim; ++i)
        for (std::size_t j = 0; j < l.dim; ++j) {
            if (vec_is_zero(l.bracket[i][j]))
                continue;
            // skip mirrors that skewness reproduces
            if (j < i && l.bracket[i][j] == vec_scaled(Rational(-1), l.bracket[j][i]))
                continue;
            file.bracket.push_back({{i, j}, l.bracket[i][j]});
        }
    if (kind != "lie" || !l.alpha.is_identity())
        file.alpha = l.alpha;
    return file;
}

AlgebraFile from_hom_lts(const HomLTS& t, std::vector<std::string> basis) {
    AlgebraFile file;
    file.kind = "hom_lts";
    file.dim = t.dim;
    file.basis = std::move(basis);
    for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = 0; j < t.dim; ++j)
            for (std::size_t k = 0; k < t.dim; ++k) {
                if (vec_is_zero(t.bracket3[i][j][k]))
                    continue;
                if (j < i &&
                    t.bracket3[i][j][k] == vec_scaled(Rational(-1), t.bracket3[j][i][k]))
                    continue;
                file.bracket.push_back({{i, j, k}, t.bracket3[i][j][k]});
            }
    file.alpha = t.alpha1;
    if (t.alpha2 != t.alpha1)
        file.alpha2 = t.alpha2;
    return file;
}

AlgebraFile from_graded(const GradedLieWithAut& g) {
    AlgebraFile file = from_hom_lie(g.lie, "lie");
    file.alpha = g.lie.alpha; // keep the automorphism even when it is trivial
    file.grading = {g.even, g.odd};
    return file;
}

GradedLieWithAut to_graded(const AlgebraFile& file) {
    if (!file.grading)
        throw ParseError("graded algebra file requires a 'grading' field");
    HomLieAlgebra lie = to_hom_lie(file);
    return GradedLieWithAut{std::move(lie), file.grading->first, file.grading->second};
}

Matrix matrix_from_json(const Json& j) {
    const Json* rows_json = nullptr;
    if (j.is_array()) {
        rows_json = &j;
    } else if (j.is_object() && j.contains("matrix")) {
        rows_json = &j["matrix"];
        if (!rows_json->is_array())
            throw ParseError("'matrix' must be an array of rows");
    } else {
        throw ParseError("expected a matrix (array of rows)");
    }
    const std::size_t rows = rows_json->size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!(*rows_json)[0].is_array())
            throw ParseError("matrix rows must be arrays");
        cols = (*rows_json)[0].size();
    } else if (j.is_object() && j.contains("cols")) {
        cols = j["cols"].get<std::size_t>();
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = (*rows_json)[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = scalar_from_json(row[k]);
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(vector_to_json(m.row(i)));
    j["matrix"] = std::move(rows);
    return j;
}

Matrix parse_matrix(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(j);
}

bool Report::ok() const {
    for (const auto& v : verdicts)
        if (!v.pass)
            return false;
    return true;
}

void Report::add_fact(std::string name, std::string value) {
    facts.emplace_back(std::move(name), std::move(value));
}

void Report::add_verdict(std::string name, bool pass, std::string detail) {
    verdicts.push_back({std::move(name), pass, std::move(detail)});
}

void Report::add_axioms(const AxiomReport& report, const std::string& prefix) {
    for (const auto& e : report.entries)
        add_verdict(prefix + e.axiom, e.pass, e.pass ? "" : witness_string(e));
}

std::string witness_string(const AxiomReport::Entry& entry) {
    std::ostringstream out;
    out << "witness=(";
    for (std::size_t k = 0; k < entry.witness.size(); ++k)
        out << (k ? "," : "") << entry.witness[k];
    out << ") defect=(";
    for (std::size_t k = 0; k < entry.defect.size(); ++k)
        out << (k ? "," : "") << to_string(entry.defect[k]);
    out << ")";
    return out.str();
}

std::string Report::text() const {
    std::ostringstream out;
    out << "command: " << command << "\n";
    for (const auto& [name, value] : facts)
        out << name << ": " << value << "\n";
    for (const auto& v : verdicts) {
        out << (v.pass ? "[pass] " : "[FAIL] ") << v.name;
        if (!v.detail.empty())
            out << "  " << v.detail;
        out << "\n";
    }
    out << "result: " << (ok() ? "pass" : "fail") << "\n";
    return out.str();
}

Json Report::to_json() const {
    Json j;
    j["command"] = command;
    Json facts_json;
    for (const auto& [name, value] : facts)
        facts_json[name] = value;
    j["facts"] = std::move(facts_json);
    Json verdicts_json = Json::array();
    for (const auto& v : verdicts) {
        Json vj;
        vj["name"] = v.name;
        vj["pass"] = v.pass;
        if (!v.detail.empty())
            vj["detail"] = v.detail;
        verdicts_json.push_back(std::move(vj));
    }
    j["verdicts"] = std::move(verdicts_json);
    if (!constructed.is_null())
        j["constructed"] = constructed;
    j["ok"] = ok();
    return j;
}

} // namespace homlts
