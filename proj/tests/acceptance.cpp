// Acceptance suite: one line per criterion, exact checks throughout
// (tolerance is zero everywhere; the arithmetic is exact).

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <jchain/instances.hpp>
#include <jchain/json_io.hpp>

#include "fixtures.hpp"
#include "gen.hpp"

using namespace jchain;

namespace {

int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

    void check(bool ok, const std::string& detail) {
        ++checks_;
        if (!ok) {
            ++failed_;
            if (failed_ <= 3) {
                details_ << "      " << detail << "\n";
            }
        }
    }

    ~Criterion() {
        if (failed_ == 0) {
            std::cout << "PASS  criterion " << number_ << ": " << title_ << " (" << checks_
                      << " checks)\n";
        } else {
            ++g_failures;
            std::cout << "FAIL  criterion " << number_ << ": " << title_ << " (" << failed_
                      << " of " << checks_ << " checks failed)\n"
                      << details_.str();
        }
    }

private:
    int number_;
    std::string title_;
    size_t checks_ = 0;
    size_t failed_ = 0;
    std::ostringstream details_;
};

void ascending_partitions(size_t max_total, size_t min_part,
                          std::vector<size_t>& current,
                          const std::function<void(const std::vector<size_t>&)>& emit) {
    for (size_t part = min_part; part <= max_total; ++part) {
        current.push_back(part);
        emit(current);
        ascending_partitions(max_total - part, part, current, emit);
        current.pop_back();
    }
}

void for_each_partition(size_t max_total, bool even_only,
                        const std::function<void(const std::vector<size_t>&)>& emit) {
    std::vector<size_t> current;
    ascending_partitions(max_total, 1, current, [&](const std::vector<size_t>& t) {
        if (even_only) {
            for (size_t p : t) {
                if (p % 2 != 0) {
                    return;
                }
            }
        }
        emit(t);
    });
}

/// Every in-bounds truncation index for t, odometer order.
void for_each_index(const std::vector<size_t>& t,
                    const std::function<void(const TruncationIndex&)>& emit) {
    TruncationIndex r{std::vector<size_t>(t.size(), 0)};
    while (true) {
        emit(r);
        size_t pos = 0;
        while (pos < t.size()) {
            if (++r.r[pos] < t[pos]) {
                break;
            }
            r.r[pos] = 0;
            ++pos;
        }
        if (pos == t.size()) {
            return;
        }
    }
}

std::string show(const std::vector<size_t>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

void criterion_1() {
    Criterion c(1, "worked example regression on diag(N2,N3)");
    Matrix a = fixtures::two_block_5x5();
    GeneratorTuple u{5, {fixtures::e(5, 2), fixtures::e(5, 5)}};
    GeneratorTuple ut{5, {fixtures::e(5, 2), vec_add(fixtures::e(5, 5), fixtures::e(5, 2))}};

    TruncationIndex r10{{1, 0}};
    Subspace wu = truncated_space(a, u, r10);
    Subspace wt = truncated_space(a, ut, r10);
    c.check(wu == fixtures::unit_span(5, {0, 2, 3, 4}), "W((1,0),U) basis mismatch");
    Subspace expected_wt = Subspace::span(
        5, {fixtures::e(5, 1), fixtures::e(5, 3),
            vec_add(fixtures::e(5, 4), fixtures::e(5, 1)),
            vec_add(fixtures::e(5, 5), fixtures::e(5, 2))});
    c.check(wt == expected_wt, "W((1,0),U~) basis mismatch");
    c.check(wu != wt, "W((1,0),U) and W((1,0),U~) should differ");

    TruncationIndex r12{{1, 2}};
    Subspace target = w_of_r(a, {2, 3}, r12);
    c.check(target == fixtures::unit_span(5, {0, 2}), "W((1,2)) should be span{e1,e3}");
    c.check(truncated_space(a, u, r12) == target, "W((1,2),U) != W(r)");
    c.check(truncated_space(a, ut, r12) == target, "W((1,2),U~) != W(r)");
}

void criterion_2() {
    Criterion c(2, "theorem forward direction, exhaustive with sum(t) <= 8");
    for_each_partition(8, false, [&](const std::vector<size_t>& t) {
        Matrix base = nilpotent_from_segre(t);
        std::vector<Matrix> family{base};
        for (uint64_t s = 1; s <= 3; ++s) {
            family.push_back(conjugate_random(base, s).b);
        }
        for_each_index(t, [&](const TruncationIndex& r) {
            if (!is_admissible(t, r)) {
                return;
            }
            for (size_t fi = 0; fi < family.size(); ++fi) {
                const Matrix& n = family[fi];
                Subspace target = w_of_r(n, t, r);
                GeneratorTuple u = generator_tuple(n);
                bool ok = truncated_space(n, u, r) == target;
                for (uint64_t seed = 0; ok && seed < 20; ++seed) {
                    GeneratorTuple v = random_generator_tuple(n, seed);
                    ok = truncated_space(n, v, r) == target;
                }
                c.check(ok, "t=" + show(t) + " r=" + show(r.r) + " family member " +
                                std::to_string(fi));
            }
        });
    });
}

void criterion_3() {
    Criterion c(3, "theorem converse direction, exhaustive with sum(t) <= 8");
    for_each_partition(8, false, [&](const std::vector<size_t>& t) {
        Matrix base = nilpotent_from_segre(t);
        std::vector<Matrix> family{base};
        for (uint64_t s = 1; s <= 3; ++s) {
            family.push_back(conjugate_random(base, s).b);
        }
        for_each_index(t, [&](const TruncationIndex& r) {
            if (is_admissible(t, r)) {
                return;
            }
            for (size_t fi = 0; fi < family.size(); ++fi) {
                const Matrix& n = family[fi];
                GeneratorTuple u = generator_tuple(n);
                GeneratorTuple v = distinguishing_tuple(n, u, r);
                bool ok = verify_generator_tuple(n, v) &&
                          truncated_space(n, u, r) != truncated_space(n, v, r);
                c.check(ok, "t=" + show(t) + " r=" + show(r.r) + " family member " +
                                std::to_string(fi));
            }
        });
    });
}

void criterion_4() {
    Criterion c(4, "half-truncation corollary on even partitions with sum <= 8");
    for_each_partition(8, true, [&](const std::vector<size_t>& t) {
        Matrix n = nilpotent_from_segre(t);
        TruncationIndex half{{}};
        for (size_t ti : t) {
            half.r.push_back(ti / 2);
        }
        Subspace rhs = w_of_r(n, t, half);
        for (uint64_t seed = 0; seed < 20; ++seed) {
            GeneratorTuple u = random_generator_tuple(n, seed);
            bool exps_ok = true;
            std::vector<Subspace> parts;
            for (size_t i = 0; i < u.size(); ++i) {
                Vector w = u.vectors[i];
                for (size_t j = 0; j < t[i] / 2; ++j) {
                    w = n.apply(w);
                }
                exps_ok = exps_ok && exponent(n, w) == t[i] / 2;
                parts.push_back(cyclic_subspace(n, w));
            }
            c.check(exps_ok, "t=" + show(t) + " seed " + std::to_string(seed) +
                                 ": exponent halving failed");
            c.check(direct_sum(parts) == rhs, "t=" + show(t) + " seed " +
                                                  std::to_string(seed) +
                                                  ": direct sum != intersection sum");
        }
    });
}

void criterion_5() {
    Criterion c(5, "restriction class example with n=10, t=(4,6), r=(2,3)");
    std::vector<size_t> t{4, 6};
    TruncationIndex r{{2, 3}};
    Matrix b = nilpotent_from_segre(t);
    GeneratorTuple u = generator_tuple(b);
    Subspace w = w_of_r(b, t, r);

    Vector au1 = b.apply(u.vectors[0]);
    Vector a4u2 = u.vectors[1];
    for (int i = 0; i < 4; ++i) {
        a4u2 = b.apply(a4u2);
    }
    Subspace m_tilde = direct_sum({cyclic_subspace(b, au1), cyclic_subspace(b, a4u2)});

    c.check(is_invariant(b, m_tilde), "M~ should be invariant");
    c.check(restriction_segre(b, m_tilde) == std::vector<size_t>{2, 3},
            "restriction Segre of M~ should be (2,3)");
    c.check(in_segre_class(b, m_tilde, t, r), "M~ should be in the Segre class of r");
    c.check(m_tilde != w, "M~ must differ from W(r)");
    c.check(truncated_space(b, u, r) == w, "W(r,U) should equal W(r) for admissible r");
}

void criterion_6() {
    Criterion c(6, "riccati round-trip on planted instances");
    for (size_t m = 1; m <= 3; ++m) {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            std::string tag = "m=" + std::to_string(m) + " seed=" + std::to_string(seed);
            try {
                PlantedRiccati inst = random_riccati_nilpotent(m, seed);
                HamiltonianData h = hamiltonian(inst.problem);
                Subspace w = riccati_subspace(h);
                c.check(w.dim() == m, tag + ": dim W != m");
                RiccatiSolution sol = solve_are(inst.problem);
                c.check(rank(sol.y) == m, tag + ": Y singular");
                c.check(sol.x == inst.x0, tag + ": X != planted X0");
                c.check(sol.residual.is_zero(), tag + ": nonzero residual");
            } catch (const Error& e) {
                c.check(false, tag + ": " + e.what());
            }
        }
    }
    RiccatiProblem hand{Matrix{{1}}, Matrix{{1}}, Matrix{{-1}}};
    c.check(solve_are(hand).x == Matrix{{1}}, "hand example (1,1,-1) should give X = 1");
}

void criterion_7() {
    Criterion c(7, "property suites, 200+ seeded cases each");

    { // Grassmann identity.
        gen::Rng rng(70001);
        for (int i = 0; i < 200; ++i) {
            size_t n = std::uniform_int_distribution<size_t>(1, 6)(rng);
            Subspace u = gen::random_subspace(rng, n, 4);
            Subspace v = gen::random_subspace(rng, n, 4);
            c.check(sum(u, v).dim() + intersect(u, v).dim() == u.dim() + v.dim(),
                    "Grassmann identity case " + std::to_string(i));
        }
    }
    { // Rank-nullity.
        gen::Rng rng(70002);
        for (int i = 0; i < 200; ++i) {
            size_t rows = std::uniform_int_distribution<size_t>(1, 6)(rng);
            size_t cols = std::uniform_int_distribution<size_t>(1, 6)(rng);
            Matrix m = gen::random_matrix(rng, rows, cols);
            c.check(rank(m) + kernel(m).dim() == cols,
                    "rank-nullity case " + std::to_string(i));
        }
    }
    { // Canonical uniqueness under shuffling/rescaling.
        gen::Rng rng(70003);
        for (int i = 0; i < 200; ++i) {
            size_t n = std::uniform_int_distribution<size_t>(1, 6)(rng);
            Subspace s = gen::random_subspace(rng, n, 4);
            std::vector<Vector> gens = s.basis_vectors();
            std::shuffle(gens.begin(), gens.end(), rng);
            for (auto& g : gens) {
                Scalar f = gen::random_scalar(rng);
                if (!f.is_zero()) {
                    g = vec_scale(f, g);
                }
            }
            gens.push_back(gen::random_member(rng, s));
            c.check(Subspace::span(n, gens) == s,
                    "canonical uniqueness case " + std::to_string(i));
        }
    }
    { // Similarity invariance of the Segre characteristic.
        gen::Rng rng(70004);
        int done = 0;
        while (done < 200) {
            std::vector<size_t> t;
            size_t total = 0;
            size_t prev = 1;
            while (total < 6 && t.size() < 3) {
                prev = std::uniform_int_distribution<size_t>(prev, 3)(rng);
                if (total + prev > 6) {
                    break;
                }
                t.push_back(prev);
                total += prev;
                if (std::uniform_int_distribution<int>(0, 1)(rng)) {
                    break;
                }
            }
            if (t.empty()) {
                continue;
            }
            Matrix a = nilpotent_from_segre(t);
            Matrix b = conjugate_random(a, static_cast<uint64_t>(done) * 31 + 7).b;
            c.check(eigen_structure(b, Scalar(0)).segre == t,
                    "similarity invariance case " + std::to_string(done));
            ++done;
        }
    }
    { // N-invariance of every truncated_space output.
        gen::Rng rng(70005);
        int done = 0;
        while (done < 200) {
            std::vector<size_t> t;
            size_t prev = 1;
            for (size_t i = 0, k = std::uniform_int_distribution<size_t>(1, 3)(rng); i < k;
                 ++i) {
                prev = std::uniform_int_distribution<size_t>(prev, prev + 2)(rng);
                t.push_back(prev);
            }
            Matrix n = conjugate_random(nilpotent_from_segre(t),
                                        static_cast<uint64_t>(done) * 17 + 3)
                           .b;
            GeneratorTuple u = random_generator_tuple(n, static_cast<uint64_t>(done));
            TruncationIndex r{{}};
            for (size_t ti : t) {
                r.r.push_back(std::uniform_int_distribution<size_t>(0, ti - 1)(rng));
            }
            Subspace w = truncated_space(n, u, r);
            bool invariant = true;
            for (size_t i = 0; i < w.dim(); ++i) {
                invariant = invariant && w.contains(n.apply(w.basis().row(i)));
            }
            c.check(invariant, "N-invariance case " + std::to_string(done) + " t=" + show(t) +
                                   " r=" + show(r.r));
            ++done;
        }
    }
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
    return 1;
}
