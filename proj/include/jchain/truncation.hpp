#pragma once

#include <optional>

#include "jchain/jordan.hpp"

namespace jchain {

/// Truncation depths r = (r_1, ..., r_k) aligned with the ascending Segre
/// characteristic t; in-bounds means 0 <= r_i < t_i for all i.
struct TruncationIndex {
    std::vector<size_t> r;

    size_t size() const { return r.size(); }
};

/// Result of probing whether the truncated space is independent of the
/// generator tuple.
struct TheoremReport {
    struct Witness {
        GeneratorTuple tuple;  // the distinguishing tuple V
        Subspace space_u;      // truncated space of the deterministic tuple
        Subspace space_v;      // truncated space of V, different from space_u
    };

    bool admissible = false;
    size_t trials = 0; // random tuples actually tested
    bool all_equal = false;
    std::optional<Witness> witness;
};

/// Throws IndexError unless r is in bounds of t.
void check_bounds(const std::vector<size_t>& t, const TruncationIndex& r);

/// Both r and t - r weakly increasing.
bool is_admissible(const std::vector<size_t>& t, const TruncationIndex& r);

/// W(r,U) = <N^{r_1} u_1> + ... + <N^{r_k} u_k>, verified direct;
/// dim = sum(t_i - r_i). Admissibility is not required.
Subspace truncated_space(const Matrix& n, const GeneratorTuple& u, const TruncationIndex& r);

/// W(r) = (Im N^{r_1} cap Ker N^{t_1-r_1}) + ... + (Im N^{r_k} cap Ker N^{t_k-r_k}).
/// Defined for any in-bounds r; equals W(r,U) exactly when r is admissible.
Subspace w_of_r(const Matrix& n, const std::vector<size_t>& t, const TruncationIndex& r);

/// For admissible r, checks W(r,V) = W(r) for the deterministic tuple and
/// `trials` seeded random tuples; for inadmissible r, produces a witness
/// pair of unequal truncated spaces.
TheoremReport check_theorem(const Matrix& n, const TruncationIndex& r, size_t trials,
                            uint64_t seed);

/// For inadmissible r, a valid tuple V with W(r,U) != W(r,V), built by the
/// first matching construction: equal-length swap, then the
/// v_{s+1} = u_{s+1} + u_s perturbation, then v_s = u_s + N^{t_{s+1}-t_s} u_{s+1}.
/// Throws IndexError when r is admissible.
GeneratorTuple distinguishing_tuple(const Matrix& n, const GeneratorTuple& u,
                                    const TruncationIndex& r);

bool is_invariant(const Matrix& n, const Subspace& m);

/// Segre characteristic of N restricted to an N-invariant subspace M,
/// computed from the matrix of the restriction in M's canonical basis.
/// Throws Error when M is not invariant.
std::vector<size_t> restriction_segre(const Matrix& n, const Subspace& m);

/// True iff M is N-invariant and the restriction's Segre characteristic is
/// the sorted multiset {t_i - r_i}; never throws for bad M.
bool in_segre_class(const Matrix& n, const Subspace& m, const std::vector<size_t>& t,
                    const TruncationIndex& r);

} // namespace jchain
