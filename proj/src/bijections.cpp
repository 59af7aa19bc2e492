#include "eolab/bijections.hpp"

#include <algorithm>

namespace eolab {

namespace {

void record(BijectionTrace* trace, const std::string& label, const Partition& p) {
    if (trace != nullptr) {
        trace->add(label, p);
    }
}

void record_note(BijectionTrace* trace, const std::string& label) {
    if (trace != nullptr) {
        trace->note(label);
    }
}

void require_r(int r) {
    if (r < 0) {
        throw DomainError("r must be nonnegative");
    }
}

Partition without_largest(const Partition& p) {
    return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

Partition with_part(const Partition& p, int part) {
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    if (part > 0) {
        parts.push_back(part);
    }
    return Partition::from_unsorted(std::move(parts));
}

// Removes one occurrence of size; DomainError when absent.
Partition without_part(const Partition& p, int size) {
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    auto it = std::find(parts.begin(), parts.end(), size);
    if (it == parts.end()) {
        throw DomainError("part " + std::to_string(size) + " not present in " + to_string(p));
    }
    parts.erase(it);
    return Partition(std::move(parts));
}

// Checks lambda in P_k with k = lambda_1 and pi in P_{<=k+r}.
void require_phi_domain(const Partition& lambda, const Partition& pi, int r) {
    require_r(r);
    const int k = lambda.largest();
    if (!is_p_upto(pi, k + r)) {
        throw DomainError("pi = " + to_string(pi) + " has a part above k + r = " +
                          std::to_string(k + r));
    }
}

} // namespace

std::string to_string(const PhiCase& c) {
    switch (c.kind) {
    case PhiCaseKind::Case1:
        return "CASE1";
    case PhiCaseKind::Case2:
        return "CASE2";
    case PhiCaseKind::Case3:
        return "CASE3(s=" + std::to_string(c.s) + ")";
    }
    return "?";
}

PhiResult phi_forward(const Partition& lambda, const Partition& pi, int r, BijectionTrace* trace) {
    require_phi_domain(lambda, pi, r);
    const int k = lambda.largest();
    const int s = durfee_width(pi, r);
    record(trace, "lambda", lambda);
    record(trace, "pi", pi);

    if (in_q(pi, s, r)) {
        record_note(trace, "CASE1: pi lies in Q_{" + std::to_string(s) + "," + std::to_string(r) +
                               "}, pair unchanged");
        return {lambda, pi, {PhiCaseKind::Case1, 0}};
    }

    // Not in Q_{s,r}: the part below the rectangle is exactly s + r + 1.
    const Partition mu = without_largest(lambda);
    std::vector<int> nu(pi.parts().begin(), pi.parts().end());
    if (s == 0) {
        nu[0] += k;
        record_note(trace, "CASE2: pi_1 = r+1, move lambda_1 = " + std::to_string(k) +
                               " onto the first row of pi");
        record(trace, "mu", mu);
        record(trace, "nu", Partition(nu));
        return {mu, Partition(std::move(nu)), {PhiCaseKind::Case2, 0}};
    }

    // Shift the overhangs e_i = pi_i - (s+r+1) one row down, then widen the
    // first row to k+r+1 and add one cell to each of the next s rows.
    std::vector<int> shifted(pi.parts().begin(), pi.parts().end());
    const int rect = s + r + 1;
    std::vector<int> moved(shifted.size());
    moved[0] = rect;
    for (int i = 1; i <= s; ++i) {
        moved[i] = shifted[i - 1];
    }
    for (std::size_t j = s + 1; j < shifted.size(); ++j) {
        moved[j] = shifted[j];
    }
    record_note(trace, "CASE3: rectangle " + std::to_string(s) + "x" + std::to_string(rect) +
                           ", overhangs moved one row down");
    moved[0] += k - s;
    for (int i = 1; i <= s; ++i) {
        moved[i] += 1;
    }
    Partition nu_p(std::move(moved));
    record(trace, "mu", mu);
    record(trace, "nu", nu_p);
    return {mu, nu_p, {PhiCaseKind::Case3, s}};
}

PhiResult phi_inverse(const Partition& mu, const Partition& nu, int r, BijectionTrace* trace) {
    require_r(r);
    const int t = durfee_width(nu, r);
    if (!in_q(nu, t, r)) {
        throw DomainError("nu = " + to_string(nu) + " is not in any Q_{t," + std::to_string(r) +
                          "}");
    }
    record(trace, "mu", mu);
    record(trace, "nu", nu);

    if (nu.largest() <= mu.largest() + r) {
        record_note(trace, "CASE1: nu_1 <= mu_1 + r, pair unchanged");
        return {mu, nu, {PhiCaseKind::Case1, 0}};
    }

    const int k = nu.largest() - r - 1;
    std::vector<int> lambda_parts{k};
    lambda_parts.insert(lambda_parts.end(), mu.parts().begin(), mu.parts().end());
    Partition lambda(std::move(lambda_parts));
    std::vector<int> pi(nu.parts().begin(), nu.parts().end());

    if (t == 1) {
        pi[0] = r + 1;
        record_note(trace, "CASE2: rectangle width 1, return nu_1 - r - 1 = " + std::to_string(k) +
                               " to lambda");
        Partition pi_p(std::move(pi));
        record(trace, "lambda", lambda);
        record(trace, "pi", pi_p);
        return {lambda, pi_p, {PhiCaseKind::Case2, 0}};
    }

    const int s = t - 1;
    std::vector<int> restored(pi.size());
    for (int i = 0; i < s; ++i) {
        restored[i] = pi[i + 1] - 1;
    }
    restored[s] = s + r + 1;
    for (std::size_t j = s + 1; j < pi.size(); ++j) {
        restored[j] = pi[j];
    }
    record_note(trace, "CASE3: rectangle width " + std::to_string(t) + ", overhangs moved up");
    Partition pi_p(std::move(restored));
    record(trace, "lambda", lambda);
    record(trace, "pi", pi_p);
    return {lambda, pi_p, {PhiCaseKind::Case3, s}};
}

Partition quadruple(const Partition& p) {
    std::vector<int> parts;
    parts.reserve(2 * p.parts().size());
    for (int part : p.parts()) {
        parts.push_back(2 * part);
        parts.push_back(2 * part);
    }
    return Partition(std::move(parts));
}

Partition unquadruple(const Partition& p) {
    if (!is_e_star(p)) {
        throw DomainError(to_string(p) + " is not a 2x2-block diagram");
    }
    std::vector<int> parts;
    for (int i = 0; i < p.length(); i += 2) {
        parts.push_back(p.parts()[i] / 2);
    }
    return Partition(std::move(parts));
}

PartitionPair lemma2_forward(const Partition& lambda, const Partition& pi, int r,
                             BijectionTrace* trace) {
    require_phi_domain(lambda, pi, r);
    const int k = lambda.largest();
    const Partition lambda4 = quadruple(lambda);
    const Partition pi4 = quadruple(pi);
    record(trace, "lambda'", lambda4);
    record(trace, "pi'", pi4);

    const Partition lambda_trim = k > 0 ? without_part(lambda4, 2 * k) : lambda4;
    const Partition pi_top = with_part(pi4, 2 * k + 2 * r);
    record(trace, "lambda' minus one part 2k", lambda_trim);
    record(trace, "pi' with 2k+2r on top", pi_top);

    PartitionPair out{conjugate(lambda_trim), conjugate(pi_top)};
    record(trace, "lambda*", out.first);
    record(trace, "pi*", out.second);
    return out;
}

PartitionPair lemma2_inverse(const Partition& lambda_star, const Partition& pi_star, int r,
                             BijectionTrace* trace) {
    require_r(r);
    if (lambda_star.length() % 2 != 0) {
        throw DomainError("lambda* must have an even number of parts");
    }
    const int k = lambda_star.length() / 2;
    if (!is_o_star(lambda_star, k) || !is_o_star(pi_star, k + r)) {
        throw DomainError("(" + to_string(lambda_star) + ", " + to_string(pi_star) +
                          ") is not in O*_k x O*_{k+r} for k = " + std::to_string(k));
    }
    record(trace, "lambda*", lambda_star);
    record(trace, "pi*", pi_star);

    const Partition lambda4 = with_part(conjugate(lambda_star), 2 * k);
    const Partition pi_conj = conjugate(pi_star);
    const Partition pi4 = k + r > 0 ? without_part(pi_conj, 2 * k + 2 * r) : pi_conj;
    record(trace, "lambda'", lambda4);
    record(trace, "pi'", pi4);

    PartitionPair out{unquadruple(lambda4), unquadruple(pi4)};
    record(trace, "lambda", out.first);
    record(trace, "pi", out.second);
    return out;
}

PartitionPair lemma3_forward(const Partition& mu, const Partition& nu, int r,
                             BijectionTrace* trace) {
    require_r(r);
    const int k = durfee_width(nu, r);
    if (!in_q(nu, k, r)) {
        throw DomainError("nu = " + to_string(nu) + " is not in any Q_{k," + std::to_string(r) +
                          "}");
    }
    const Partition mu_star = quadruple(mu);
    const Partition nu4 = quadruple(nu);
    record(trace, "mu*", mu_star);
    record(trace, "nu'", nu4);

    // Drop one of the two height-2k columns right of the 2k x (2k+2r) rectangle.
    std::vector<int> parts(nu4.parts().begin(), nu4.parts().end());
    for (int i = 0; i < 2 * k; ++i) {
        parts[i] -= 1;
    }
    const Partition trimmed(std::move(parts));
    record(trace, "nu' minus one column", trimmed);

    const Partition nu_star = with_part(trimmed, 2 * k + 2 * r);
    record(trace, "nu*", nu_star);
    return {mu_star, nu_star};
}

PartitionPair lemma3_inverse(const Partition& mu_star, const Partition& nu_star, int r,
                             BijectionTrace* trace) {
    require_r(r);
    if (!is_e_star(mu_star)) {
        throw DomainError("mu* = " + to_string(mu_star) + " is not in E*");
    }
    const int odd = odd_part_count(nu_star);
    const int k = odd / 2;
    if (odd % 2 != 0 || !is_eo_star_kr(nu_star, k, r)) {
        throw DomainError("nu* = " + to_string(nu_star) + " is not in EO*_{k," +
                          std::to_string(r) + "}");
    }
    record(trace, "mu*", mu_star);
    record(trace, "nu*", nu_star);

    const Partition trimmed = k + r > 0 ? without_part(nu_star, 2 * k + 2 * r) : nu_star;
    std::vector<int> parts(trimmed.parts().begin(), trimmed.parts().end());
    for (int i = 0; i < 2 * k; ++i) {
        parts[i] += 1;
    }
    const Partition nu4(std::move(parts));
    record(trace, "nu'", nu4);

    PartitionPair out{unquadruple(mu_star), unquadruple(nu4)};
    record(trace, "mu", out.first);
    record(trace, "nu", out.second);
    return out;
}

CrankResult crank_bijection(const Partition& lambda_star, const Partition& pi_star, int r,
                            BijectionTrace* trace) {
    record_note(trace, "step 1: inverse square-quadrupling (lemma2^-1)");
    const PartitionPair plain = lemma2_inverse(lambda_star, pi_star, r, trace);
    record_note(trace, "step 2: phi");
    const PhiResult moved = phi_forward(plain.first, plain.second, r, trace);
    record_note(trace, "step 3: square-quadrupling into E* x EO*_{k,r} (lemma3)");
    const PartitionPair out = lemma3_forward(moved.first, moved.second, r, trace);
    return {out.first, out.second, moved.which};
}

CrankResult crank_bijection_inverse(const Partition& mu_star, const Partition& nu_star, int r,
                                    BijectionTrace* trace) {
    record_note(trace, "step 1: lemma3^-1");
    const PartitionPair plain = lemma3_inverse(mu_star, nu_star, r, trace);
    record_note(trace, "step 2: phi^-1");
    const PhiResult moved = phi_inverse(plain.first, plain.second, r, trace);
    record_note(trace, "step 3: lemma2");
    const PartitionPair out = lemma2_forward(moved.first, moved.second, r, trace);
    return {out.first, out.second, moved.which};
}

} // namespace eolab
