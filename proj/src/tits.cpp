#include "e7forge/tits.hpp"

namespace e7f {

namespace {

// Sector decode: kind 0 = H_L (idx 1..3), 1 = J_I (idx 1..52),
// 2 = h_i (x) j_a (idx = quaternion slot 1..3, a 1..26).
struct Slot {
    int kind;
    int i; // H index, J index, or quaternion slot
    int a; // Jordan index for kind 2
};

Slot decode(int A) {
    if (A <= 3) return {0, A, 0};
    if (A <= 55) return {1, A - 3, 0};
    if (A <= 81) return {2, 1, A - 55};
    if (A <= 107) return {2, 2, A - 81};
    return {2, 3, A - 107};
}

int tensor_index(int quat, int a) { return 55 + (quat - 1) * 26 + a; }

int eps(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    if ((i == 1 && j == 2 && k == 3) || (i == 2 && j == 3 && k == 1) || (i == 3 && j == 1 && k == 2))
        return 1;
    return -1;
}

int third_index(int i, int j) { return 6 - i - j; }

void add_coeff(SparseCoeffs& out, int index, const ExactScalar& v) {
    if (v.is_zero()) return;
    for (auto& [idx, c] : out)
        if (idx == index) {
            c += v;
            return;
        }
    out.emplace_back(index, v);
}

} // namespace

SparseCoeffs tits_basis_bracket(const F4E6Basis& fb, int A, int B) {
    SparseCoeffs out;
    Slot x = decode(A), y = decode(B);

    if (x.kind == 0 && y.kind == 0) {
        // [H_L, H_M] = 2 eps_{LMN} H_N
        int N = third_index(x.i, y.i);
        if (x.i != y.i) add_coeff(out, N, ExactScalar(2 * eps(x.i, y.i, N)));
        return out;
    }
    if (x.kind == 0 && y.kind == 1) return out; // [H, J] = 0
    if (x.kind == 1 && y.kind == 0) return out;

    if (x.kind == 0 && y.kind == 2) {
        // [H_L, h_i (x) j_a] = 2 eps_{Lik} h_k (x) j_a
        if (x.i == y.i) return out;
        int k = third_index(x.i, y.i);
        add_coeff(out, tensor_index(k, y.a), ExactScalar(2 * eps(x.i, y.i, k)));
        return out;
    }
    if (x.kind == 2 && y.kind == 0) {
        SparseCoeffs sw = tits_basis_bracket(fb, B, A);
        for (auto& [idx, v] : sw) add_coeff(out, idx, -v);
        return out;
    }

    if (x.kind == 1 && y.kind == 1) {
        for (const auto& [K, v] : fb.f(x.i, y.i)) add_coeff(out, K + 3, v);
        return out;
    }

    if (x.kind == 1 && y.kind == 2) {
        // [J_I, h_i (x) j_a] = (C_I)^c_a h_i (x) j_c
        for (int c = 1; c <= 26; ++c) {
            const ExactScalar& coeff = fb.C(x.i).at(c - 1, y.a - 1);
            if (!coeff.is_zero()) add_coeff(out, tensor_index(y.i, c), coeff);
        }
        return out;
    }
    if (x.kind == 2 && y.kind == 1) {
        SparseCoeffs sw = tits_basis_bracket(fb, B, A);
        for (auto& [idx, v] : sw) add_coeff(out, idx, -v);
        return out;
    }

    // Both tensor elements.
    if (x.i == y.i) {
        // -<h,h>[L_a, L_b] = -sum alpha_{ab}^K J_K
        if (x.a == y.a) return out;
        for (const auto& [K, v] : fb.alpha(x.a, y.a)) add_coeff(out, K + 3, -v);
        return out;
    }
    // (1/12)<j_a,j_b> D_{h_i,h_j} + (1/2)[h_i,h_j] (x) (j_a * j_b)
    //   = (1/3) delta_ab eps_{ijk} H_k + eps_{ijk} (R_a)^c_b h_k (x) j_c.
    int k = third_index(x.i, y.i);
    int e = eps(x.i, y.i, k);
    if (x.a == y.a) add_coeff(out, k, ExactScalar(Rational(e, 3)));
    for (int c = 1; c <= 26; ++c) {
        const ExactScalar& coeff = fb.R(x.a).at(c - 1, y.a - 1);
        if (!coeff.is_zero()) add_coeff(out, tensor_index(k, c), ExactScalar(Rational(e, 1)) * coeff);
    }
    return out;
}

SparseCoeffs tits_basis_bracket_normalized(const F4E6Basis& fb, int A, int B) {
    // kappa_A = 1/sqrt6 for the quaternion derivations, 1 otherwise.
    SparseCoeffs raw = tits_basis_bracket(fb, A, B);
    ExactScalar inv_s6 = ExactScalar::sqrt6().inverse();
    ExactScalar kAB = ExactScalar::one();
    if (A <= 3) kAB *= inv_s6;
    if (B <= 3) kAB *= inv_s6;
    SparseCoeffs out;
    for (auto& [idx, v] : raw) {
        ExactScalar w = kAB * v;
        if (idx <= 3) w *= ExactScalar::sqrt6();
        add_coeff(out, idx, w);
    }
    return out;
}

std::vector<double> tits_constants_with_coefficients(const F4E6Basis& fb, double alpha,
                                                     double beta, double gamma) {
    const int n = kTitsDim;
    std::vector<double> c(static_cast<std::size_t>(n) * n * n, 0.0);
    auto put = [&](int A, int B, int C, double v) {
        c[(static_cast<std::size_t>(A - 1) * n + static_cast<std::size_t>(B - 1)) * n +
          static_cast<std::size_t>(C - 1)] = v;
    };

    for (int A = 1; A <= n; ++A)
        for (int B = 1; B <= n; ++B) {
            if (A == B) continue;
            Slot x = decode(A), y = decode(B);
            if (x.kind == 2 && y.kind == 2) {
                if (x.i == y.i) {
                    if (x.a == y.a) continue;
                    for (const auto& [K, v] : fb.alpha(x.a, y.a))
                        put(A, B, K + 3, -beta * v.embed().real());
                } else {
                    int k = third_index(x.i, y.i);
                    int e = eps(x.i, y.i, k);
                    // (alpha/3) * 2 delta_ab * 2 eps H_k
                    if (x.a == y.a) put(A, B, k, e * 4.0 * alpha / 3.0);
                    for (int cc = 1; cc <= 26; ++cc) {
                        double r = fb.R(x.a).at(cc - 1, y.a - 1).embed().real();
                        if (r != 0.0) put(A, B, tensor_index(k, cc), e * 2.0 * gamma * r);
                    }
                }
            } else {
                for (const auto& [idx, v] : tits_basis_bracket(fb, A, B))
                    put(A, B, idx, v.embed().real());
            }
        }
    return c;
}

} // namespace e7f
