#include "jchain/truncation.hpp"

#include <algorithm>

namespace jchain {

void check_bounds(const std::vector<size_t>& t, const TruncationIndex& r) {
    if (r.size() != t.size()) {
        throw IndexError("truncation index has " + std::to_string(r.size()) +
                         " entries, Segre characteristic has " + std::to_string(t.size()));
    }
    for (size_t i = 0; i < t.size(); ++i) {
        if (r.r[i] >= t[i]) {
            throw IndexError("truncation depth r[" + std::to_string(i) +
                             "] = " + std::to_string(r.r[i]) + " is out of bounds for t[" +
                             std::to_string(i) + "] = " + std::to_string(t[i]));
        }
    }
}

bool is_admissible(const std::vector<size_t>& t, const TruncationIndex& r) {
    check_bounds(t, r);
    for (size_t i = 0; i + 1 < t.size(); ++i) {
        if (r.r[i] > r.r[i + 1]) {
            return false;
        }
        if (t[i] - r.r[i] > t[i + 1] - r.r[i + 1]) {
            return false;
        }
    }
    return true;
}

Subspace truncated_space(const Matrix& n, const GeneratorTuple& u, const TruncationIndex& r) {
    if (u.size() == 0 || u.ambient != n.rows()) {
        throw Error("invalid generator tuple");
    }
    std::vector<size_t> t;
    for (const auto& v : u.vectors) {
        t.push_back(exponent(n, v));
    }
    check_bounds(t, r);
    std::vector<Subspace> parts;
    size_t expected = 0;
    for (size_t i = 0; i < u.size(); ++i) {
        Vector start = u.vectors[i];
        for (size_t j = 0; j < r.r[i]; ++j) {
            start = n.apply(start);
        }
        parts.push_back(cyclic_subspace(n, start));
        expected += t[i] - r.r[i];
    }
    Subspace w = direct_sum(parts); // failure signals an invalid tuple
    if (w.dim() != expected) {
        throw Error("truncated space has unexpected dimension; invalid tuple");
    }
    return w;
}

Subspace w_of_r(const Matrix& n, const std::vector<size_t>& t, const TruncationIndex& r) {
    check_bounds(t, r);
    Subspace acc = Subspace::zero(n.rows());
    for (size_t i = 0; i < t.size(); ++i) {
        Subspace part = intersect(image(n.pow(r.r[i])), kernel(n.pow(t[i] - r.r[i])));
        acc = sum(acc, part);
    }
    return acc;
}

TheoremReport check_theorem(const Matrix& n, const TruncationIndex& r, size_t trials,
                            uint64_t seed) {
    EigenStructure es = eigen_structure(n, Scalar(0));
    TheoremReport report;
    report.admissible = is_admissible(es.segre, r);
    GeneratorTuple u = generator_tuple(n);

    if (report.admissible) {
        Subspace target = w_of_r(n, es.segre, r);
        report.all_equal = truncated_space(n, u, r) == target;
        for (size_t trial = 0; trial < trials && report.all_equal; ++trial) {
            GeneratorTuple v = random_generator_tuple(n, seed + trial);
            report.all_equal = truncated_space(n, v, r) == target;
            ++report.trials;
        }
        return report;
    }

    GeneratorTuple v = distinguishing_tuple(n, u, r);
    Subspace wu = truncated_space(n, u, r);
    Subspace wv = truncated_space(n, v, r);
    report.all_equal = wu == wv;
    if (!report.all_equal) {
        report.witness = TheoremReport::Witness{std::move(v), std::move(wu), std::move(wv)};
    }
    return report;
}

GeneratorTuple distinguishing_tuple(const Matrix& n, const GeneratorTuple& u,
                                    const TruncationIndex& r) {
    std::vector<size_t> t;
    for (const auto& v : u.vectors) {
        t.push_back(exponent(n, v));
    }
    if (is_admissible(t, r)) {
        throw IndexError("distinguishing_tuple called with an admissible truncation index");
    }
    const size_t k = t.size();

    // Equal block lengths with unequal depths: swapping the two generators
    // already moves the truncated space.
    for (size_t s = 0; s + 1 < k; ++s) {
        if (t[s] == t[s + 1] && r.r[s] != r.r[s + 1]) {
            GeneratorTuple v = u;
            std::swap(v.vectors[s], v.vectors[s + 1]);
            return v;
        }
    }
    // Depths not weakly increasing: v_{s+1} = u_{s+1} + u_s.
    for (size_t s = 0; s + 1 < k; ++s) {
        if (r.r[s] > r.r[s + 1]) {
            GeneratorTuple v = u;
            v.vectors[s + 1] = vec_add(u.vectors[s + 1], u.vectors[s]);
            return v;
        }
    }
    // Co-depths not weakly increasing: v_s = u_s + N^{t_{s+1}-t_s} u_{s+1}.
    for (size_t s = 0; s + 1 < k; ++s) {
        if (t[s] - r.r[s] > t[s + 1] - r.r[s + 1]) {
            GeneratorTuple v = u;
            Vector w = u.vectors[s + 1];
            for (size_t j = 0; j < t[s + 1] - t[s]; ++j) {
                w = n.apply(w);
            }
            v.vectors[s] = vec_add(u.vectors[s], w);
            return v;
        }
    }
    throw TheoremError("inadmissible index matched no distinguishing construction");
}

bool is_invariant(const Matrix& n, const Subspace& m) {
    if (m.ambient() != n.rows() || !n.is_square()) {
        return false;
    }
    for (size_t i = 0; i < m.dim(); ++i) {
        if (!m.contains(n.apply(m.basis().row(i)))) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> restriction_segre(const Matrix& n, const Subspace& m) {
    if (!is_invariant(n, m)) {
        throw Error("subspace is not invariant under the matrix");
    }
    const size_t d = m.dim();
    if (d == 0) {
        return {};
    }
    // Coordinates in the canonical basis read off at the pivot columns.
    std::vector<size_t> pivots;
    for (size_t i = 0; i < d; ++i) {
        size_t p = 0;
        while (m.basis()(i, p).is_zero()) {
            ++p;
        }
        pivots.push_back(p);
    }
    Matrix restricted(d, d);
    for (size_t i = 0; i < d; ++i) {
        Vector w = n.apply(m.basis().row(i));
        for (size_t j = 0; j < d; ++j) {
            restricted(j, i) = w[pivots[j]];
        }
    }
    if (restricted.is_zero()) {
        return std::vector<size_t>(d, 1);
    }
    return eigen_structure(restricted, Scalar(0)).segre;
}

bool in_segre_class(const Matrix& n, const Subspace& m, const std::vector<size_t>& t,
                    const TruncationIndex& r) {
    check_bounds(t, r);
    if (!is_invariant(n, m)) {
        return false;
    }
    std::vector<size_t> expected;
    for (size_t i = 0; i < t.size(); ++i) {
        expected.push_back(t[i] - r.r[i]);
    }
    std::sort(expected.begin(), expected.end());
    try {
        return restriction_segre(n, m) == expected;
    } catch (const Error&) {
        return false;
    }
}

} // namespace jchain
