#include "jchain/json_io.hpp"

#include <fstream>
#include <sstream>

namespace jchain {

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j).str());
        }
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
    try {
        const size_t rows = j.at("rows").get<size_t>();
        const size_t cols = j.at("cols").get<size_t>();
        const Json& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != rows) {
            throw ParseError("matrix entries must hold exactly \"rows\" rows");
        }
        Matrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i) {
            const Json& row = entries[i];
            if (!row.is_array() || row.size() != cols) {
                throw ParseError("matrix row " + std::to_string(i) +
                                 " must hold exactly \"cols\" scalars");
            }
            for (size_t jx = 0; jx < cols; ++jx) {
                m(i, jx) = Scalar::parse(row[jx].get<std::string>());
            }
        }
        return m;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
}

Json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

Subspace subspace_from_json(const Json& j) {
    return Subspace::row_space(matrix_from_json(j));
}

Json tuple_to_json(const GeneratorTuple& u) {
    Json vectors = Json::array();
    for (const auto& v : u.vectors) {
        Json row = Json::array();
        for (const auto& s : v) {
            row.push_back(s.str());
        }
        vectors.push_back(std::move(row));
    }
    return Json{{"ambient", u.ambient}, {"vectors", std::move(vectors)}};
}

GeneratorTuple tuple_from_json(const Json& j) {
    try {
        GeneratorTuple u;
        u.ambient = j.at("ambient").get<size_t>();
        for (const Json& row : j.at("vectors")) {
            Vector v;
            for (const Json& s : row) {
                v.push_back(Scalar::parse(s.get<std::string>()));
            }
            if (v.size() != u.ambient) {
                throw ParseError("generator vector length differs from ambient dimension");
            }
            u.vectors.push_back(std::move(v));
        }
        return u;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad generator tuple JSON: ") + e.what());
    }
}

Json report_to_json(const TheoremReport& r) {
    Json j{{"admissible", r.admissible},
           {"trials", r.trials},
           {"all_equal", r.all_equal},
           {"witness", nullptr}};
    if (r.witness) {
        j["witness"] = Json{{"tuple", tuple_to_json(r.witness->tuple)},
                            {"space_u", subspace_to_json(r.witness->space_u)},
                            {"space_v", subspace_to_json(r.witness->space_v)}};
    }
    return j;
}

Json problem_to_json(const RiccatiProblem& p) {
    return Json{{"F", matrix_to_json(p.f)},
                {"D", matrix_to_json(p.d)},
                {"Q", matrix_to_json(p.q)}};
}

RiccatiProblem problem_from_json(const Json& j) {
    try {
        RiccatiProblem p;
        p.f = matrix_from_json(j.at("F"));
        p.d = matrix_from_json(j.at("D"));
        p.q = matrix_from_json(j.at("Q"));
        return p;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad Riccati problem JSON: ") + e.what());
    }
}

Json solution_to_json(const RiccatiSolution& s, const std::vector<size_t>& segre) {
    return Json{{"X", matrix_to_json(s.x)},
                {"residual", matrix_to_json(s.residual)},
                {"W", subspace_to_json(s.w)},
                {"segre", segre}};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

} // namespace jchain
