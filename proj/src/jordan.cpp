#include "jchain/jordan.hpp"

#include <algorithm>
#include <random>

namespace jchain {

size_t EigenStructure::eigenspace_dim() const {
    size_t total = 0;
    for (size_t t : segre) {
        total += t;
    }
    return total;
}

Matrix shift(const Matrix& a, const Scalar& lambda) {
    if (!a.is_square()) {
        throw Error("shift requires a square matrix");
    }
    Matrix n = a;
    for (size_t i = 0; i < a.rows(); ++i) {
        n(i, i) -= lambda;
    }
    return n;
}

Subspace generalized_eigenspace(const Matrix& a, const Scalar& lambda) {
    Matrix n = shift(a, lambda);
    return kernel(n.pow(n.rows()));
}

namespace {

// Kernel filtration of a (locally) nilpotent matrix: K_0 = 0 up to the
// power where the kernels stabilize.
struct Filtration {
    std::vector<Subspace> kernels; // kernels[j] = Ker N^j, j = 0..t_max
    size_t t_max = 0;
};

Filtration kernel_filtration(const Matrix& n) {
    if (!n.is_square()) {
        throw Error("expected a square matrix");
    }
    const size_t dim = n.rows();
    Filtration f;
    f.kernels.push_back(Subspace::zero(dim));
    Matrix power = Matrix::identity(dim);
    for (size_t j = 1; j <= dim; ++j) {
        power = power * n;
        Subspace k = kernel(power);
        if (k.dim() == f.kernels.back().dim()) {
            break;
        }
        f.kernels.push_back(std::move(k));
        f.t_max = j;
    }
    return f;
}

EigenStructure structure_from_filtration(const Filtration& f) {
    EigenStructure es;
    es.lambda = Scalar(0);
    for (size_t j = 1; j <= f.t_max; ++j) {
        es.weyr.push_back(f.kernels[j].dim() - f.kernels[j - 1].dim());
    }
    // Segre is the conjugate partition of Weyr, reported ascending.
    const size_t k = es.weyr.empty() ? 0 : es.weyr.front();
    for (size_t c = k; c-- > 0;) {
        size_t length = 0;
        for (size_t w : es.weyr) {
            if (w > c) {
                ++length;
            }
        }
        es.segre.push_back(length);
    }
    std::sort(es.segre.begin(), es.segre.end());
    return es;
}

EigenStructure eigen_structure_at_zero(const Matrix& n) {
    Filtration f = kernel_filtration(n);
    if (f.t_max == 0) {
        throw EigenvalueError("0 is not an eigenvalue");
    }
    EigenStructure es = structure_from_filtration(f);
    es.n = n.rows();
    return es;
}

void require_in_eigenspace(const Matrix& n, const Vector& v) {
    if (v.size() != n.rows()) {
        throw Error("vector/matrix dimension mismatch");
    }
    Vector w = v;
    for (size_t p = 0; p <= n.rows(); ++p) {
        if (is_zero_vector(w)) {
            return;
        }
        w = n.apply(w);
    }
    throw Error("vector is not in the generalized eigenspace at 0");
}

} // namespace

EigenStructure eigen_structure(const Matrix& a, const Scalar& lambda) {
    Matrix n = shift(a, lambda);
    EigenStructure es = eigen_structure_at_zero(n);
    es.lambda = lambda;
    return es;
}

size_t height(const Matrix& n, const Vector& v) {
    if (is_zero_vector(v)) {
        throw Error("height of the zero vector is undefined");
    }
    require_in_eigenspace(n, v);
    Matrix power = n;
    size_t q = 0;
    while (q < n.rows() && image(power).contains(v)) {
        ++q;
        power = power * n;
    }
    return q;
}

size_t exponent(const Matrix& n, const Vector& v) {
    if (is_zero_vector(v)) {
        throw Error("exponent of the zero vector is undefined");
    }
    Vector w = v;
    size_t p = 0;
    while (!is_zero_vector(w)) {
        if (p > n.rows()) {
            throw Error("vector is not in the generalized eigenspace at 0");
        }
        w = n.apply(w);
        ++p;
    }
    return p;
}

Subspace cyclic_subspace(const Matrix& n, const Vector& v) {
    std::vector<Vector> gens;
    Vector w = v;
    while (!is_zero_vector(w)) {
        if (gens.size() > n.rows()) {
            throw Error("vector is not in the generalized eigenspace at 0");
        }
        gens.push_back(w);
        w = n.apply(w);
    }
    return Subspace::span(v.size(), gens);
}

GeneratorTuple generator_tuple(const Matrix& n) {
    Filtration f = kernel_filtration(n);
    if (f.t_max == 0) {
        throw EigenvalueError("0 is not an eigenvalue");
    }
    const size_t dim = n.rows();
    std::vector<size_t> weyr;
    for (size_t j = 1; j <= f.t_max; ++j) {
        weyr.push_back(f.kernels[j].dim() - f.kernels[j - 1].dim());
    }
    weyr.push_back(0);

    // Top-down: at level j keep the chain vectors of exponent exactly j.
    // New chain tops extend Ker N^{j-1} + N(level j+1) inside Ker N^j,
    // scanning the canonical kernel basis for representatives.
    std::vector<Vector> above; // level j+1 vectors
    std::vector<std::pair<size_t, Vector>> tops;
    for (size_t j = f.t_max; j >= 1; --j) {
        std::vector<Vector> level;
        level.reserve(above.size());
        SpanBuilder sb(dim);
        for (size_t i = 0; i < f.kernels[j - 1].dim(); ++i) {
            sb.insert(f.kernels[j - 1].basis().row(i));
        }
        for (const auto& v : above) {
            Vector w = n.apply(v);
            if (!sb.insert(w)) {
                throw TheoremError("chain propagation broke independence");
            }
            level.push_back(std::move(w));
        }
        size_t needed = weyr[j - 1] - weyr[j];
        const Matrix& kb = f.kernels[j].basis();
        for (size_t i = 0; i < kb.rows() && needed > 0; ++i) {
            Vector cand = kb.row(i);
            if (sb.insert(cand)) {
                tops.emplace_back(j, cand);
                level.push_back(std::move(cand));
                --needed;
            }
        }
        if (needed > 0) {
            throw TheoremError("kernel filtration did not yield enough chain tops");
        }
        above = std::move(level);
    }

    std::stable_sort(tops.begin(), tops.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    GeneratorTuple u;
    u.ambient = dim;
    for (auto& [exp, vec] : tops) {
        u.vectors.push_back(std::move(vec));
    }
    return u;
}

bool verify_generator_tuple(const Matrix& n, const GeneratorTuple& u) {
    try {
        if (!n.is_square() || u.ambient != n.rows() || u.vectors.empty()) {
            return false;
        }
        EigenStructure es = eigen_structure_at_zero(n);
        if (u.size() != es.chains()) {
            return false;
        }
        std::vector<Subspace> parts;
        for (size_t i = 0; i < u.size(); ++i) {
            if (is_zero_vector(u.vectors[i])) {
                return false;
            }
            if (exponent(n, u.vectors[i]) != es.segre[i]) {
                return false;
            }
            parts.push_back(cyclic_subspace(n, u.vectors[i]));
        }
        return direct_sum(parts).dim() == es.eigenspace_dim();
    } catch (const Error&) {
        return false;
    }
}

GeneratorTuple random_generator_tuple(const Matrix& n, uint64_t seed) {
    GeneratorTuple base = generator_tuple(n);
    JordanBasis jb = jordan_basis(n, base);
    std::vector<size_t> exps;
    for (const auto& v : base.vectors) {
        exps.push_back(exponent(n, v));
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2);
    constexpr int kMaxAttempts = 256;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        GeneratorTuple cand;
        cand.ambient = base.ambient;
        for (size_t i = 0; i < base.size(); ++i) {
            Vector v = base.vectors[i];
            // Perturb by chain vectors of exponent <= t_i; chain vector
            // N^nu u_j has exponent t_j - nu.
            for (size_t j = 0; j < jb.chains.size(); ++j) {
                for (size_t nu = 0; nu < jb.chains[j].size(); ++nu) {
                    if (exps[j] - nu > exps[i]) {
                        continue;
                    }
                    int c = coeff(rng);
                    if (c != 0) {
                        v = vec_add(v, vec_scale(Scalar(c), jb.chains[j][nu]));
                    }
                }
            }
            cand.vectors.push_back(std::move(v));
        }
        if (verify_generator_tuple(n, cand)) {
            return cand;
        }
    }
    throw Error("random_generator_tuple: sampling budget exhausted");
}

JordanBasis jordan_basis(const Matrix& n, const GeneratorTuple& u) {
    if (!verify_generator_tuple(n, u)) {
        throw Error("invalid generator tuple");
    }
    JordanBasis jb;
    SpanBuilder independent(u.ambient);
    for (const auto& top : u.vectors) {
        std::vector<Vector> chain;
        Vector w = top;
        while (!is_zero_vector(w)) {
            if (!independent.insert(w)) {
                throw TheoremError("jordan basis vectors are dependent");
            }
            chain.push_back(w);
            w = n.apply(w);
        }
        jb.chains.push_back(std::move(chain));
    }
    return jb;
}

} // namespace jchain
