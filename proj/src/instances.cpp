#include "jchain/instances.hpp"

#include <random>

namespace jchain {

Matrix nilpotent_from_segre(const std::vector<size_t>& t) {
    if (t.empty()) {
        throw Error("Segre characteristic must be nonempty");
    }
    size_t n = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 1) {
            throw Error("Segre entries must be >= 1");
        }
        if (i > 0 && t[i] < t[i - 1]) {
            throw Error("Segre characteristic must be ascending");
        }
        n += t[i];
    }
    Matrix a(n, n);
    size_t offset = 0;
    for (size_t size : t) {
        for (size_t j = 1; j < size; ++j) {
            a(offset + j - 1, offset + j) = 1;
        }
        offset += size;
    }
    return a;
}

Conjugated conjugate_random(const Matrix& a, uint64_t seed, int entry_bound) {
    if (!a.is_square()) {
        throw Error("conjugation requires a square matrix");
    }
    const size_t n = a.rows();
    Conjugated out;
    out.s = Matrix::identity(n);
    Matrix s_inv = Matrix::identity(n);
    if (n > 1) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<size_t> pick(0, n - 1);
        std::uniform_int_distribution<int> coeff(-entry_bound, entry_bound);
        std::uniform_int_distribution<int> op(0, 3);
        const size_t ops = 3 * n;
        for (size_t step = 0; step < ops; ++step) {
            size_t i = pick(rng);
            size_t j = pick(rng);
            if (i == j) {
                continue;
            }
            if (op(rng) == 0) {
                // Row swap on S, column swap on S^{-1}.
                for (size_t c = 0; c < n; ++c) {
                    std::swap(out.s(i, c), out.s(j, c));
                }
                for (size_t r = 0; r < n; ++r) {
                    std::swap(s_inv(r, i), s_inv(r, j));
                }
            } else {
                int c = coeff(rng);
                if (c == 0) {
                    continue;
                }
                // row_j += c * row_i on S; col_i -= c * col_j on S^{-1}.
                Scalar sc(c);
                for (size_t col = 0; col < n; ++col) {
                    out.s(j, col) += sc * out.s(i, col);
                }
                for (size_t row = 0; row < n; ++row) {
                    s_inv(row, i) -= sc * s_inv(row, j);
                }
            }
        }
    }
    out.b = out.s * a * s_inv;
    return out;
}

namespace {

Scalar random_gaussian_int(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    int re = dist(rng);
    int im = dist(rng);
    return Scalar(Rational(re), Rational(im));
}

Scalar random_int(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    return Scalar(dist(rng));
}

} // namespace

PlantedRiccati random_riccati_nilpotent(size_t m, uint64_t seed, int entry_bound) {
    if (m < 1) {
        throw Error("Riccati instances need m >= 1");
    }
    std::mt19937_64 rng(seed);
    constexpr int kMaxAttempts = 100;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        // Hermitian X0: real diagonal, conjugate-mirrored upper part.
        Matrix x0(m, m);
        for (size_t i = 0; i < m; ++i) {
            x0(i, i) = random_int(rng, entry_bound);
            for (size_t j = i + 1; j < m; ++j) {
                Scalar v = random_gaussian_int(rng, entry_bound);
                x0(i, j) = v;
                x0(j, i) = v.conj();
            }
        }
        // Strictly upper triangular closed loop, hence nilpotent.
        Matrix ac(m, m);
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = i + 1; j < m; ++j) {
                ac(i, j) = random_gaussian_int(rng, entry_bound);
            }
        }
        Matrix l(m, m);
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < m; ++j) {
                l(i, j) = random_gaussian_int(rng, entry_bound);
            }
        }
        Matrix d = l * l.conj_transpose(); // hermitian PSD by construction

        RiccatiProblem p;
        p.d = d;
        p.f = ac + d * x0;
        p.q = -(p.f.conj_transpose() * x0) - x0 * p.f + x0 * d * x0;

        if (!is_controllable(p.f, p.d)) {
            continue;
        }
        try {
            hamiltonian(p); // nilpotent with even degrees by construction
        } catch (const NilpotencyError&) {
            continue;
        }
        return PlantedRiccati{std::move(p), std::move(x0)};
    }
    throw Error("random_riccati_nilpotent: sampling budget exhausted");
}

} // namespace jchain
