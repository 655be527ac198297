#include "e7forge/f4e6.hpp"

namespace e7f {

ExactMatrix F4E6Basis::left_mul_matrix(const JordanMatrix& x) const {
    ExactMatrix m(27, 27);
    for (int nu = 1; nu <= 27; ++nu) {
        auto coords = jb_->coordinates(jordan_mul(x, jb_->element(nu)));
        for (int mu = 1; mu <= 27; ++mu) m.at(mu - 1, nu - 1) = coords[static_cast<std::size_t>(mu - 1)];
    }
    return m;
}

F4E6Basis::F4E6Basis(const JordanBasis& jb) : jb_(&jb) {
    // Left-multiplication matrices of the traceless basis.
    R_.reserve(26);
    for (int a = 1; a <= 26; ++a) R_.push_back(left_mul_matrix(jb.element(a)));

    ExactScalar one = ExactScalar::one();
    JordanMatrix d23 = JordanMatrix::diag_matrix(ExactScalar::zero(), one, ExactScalar(-1));
    JordanMatrix d12 = JordanMatrix::diag_matrix(one, ExactScalar(-1), ExactScalar::zero());
    JordanMatrix d13 = JordanMatrix::diag_matrix(one, ExactScalar::zero(), ExactScalar(-1));
    ExactMatrix L23 = left_mul_matrix(d23);
    ExactMatrix L12 = left_mul_matrix(d12);
    ExactMatrix L13 = left_mul_matrix(d13);

    std::vector<ExactMatrix> Lf23, Lf12, Lf13;
    for (int u = 0; u < 8; ++u) {
        Lf12.push_back(left_mul_matrix(JordanMatrix::off_matrix(0, Octonion::unit(u))));
        Lf13.push_back(left_mul_matrix(JordanMatrix::off_matrix(1, Octonion::unit(u))));
        Lf23.push_back(left_mul_matrix(JordanMatrix::off_matrix(2, Octonion::unit(u))));
    }

    C_.reserve(52);
    // Rotations among the eight octonion coordinates of position (2,3).
    for (int p = 0; p < 8; ++p)
        for (int q = p + 1; q < 8; ++q) C_.push_back(commutator(Lf23[static_cast<std::size_t>(q)], Lf23[static_cast<std::size_t>(p)]));
    // Rotations between position-(2,3) coordinates and the diagonal direction.
    for (int p = 0; p < 8; ++p) C_.push_back(commutator(L23, Lf23[static_cast<std::size_t>(p)]));
    // Transvections toward positions (1,2) and (1,3).
    for (int u = 0; u < 8; ++u) C_.push_back(commutator(L12, Lf12[static_cast<std::size_t>(u)]));
    for (int u = 0; u < 8; ++u) C_.push_back(commutator(L13, Lf13[static_cast<std::size_t>(u)]));

    // The basis contract: exact orthogonality with tr(C_I C_J) = -6 delta.
    for (int i = 0; i < 52; ++i)
        for (int j = i; j < 52; ++j) {
            ExactScalar t = trace_product(C_[static_cast<std::size_t>(i)], C_[static_cast<std::size_t>(j)]);
            ExactScalar expect = (i == j) ? ExactScalar(-6) : ExactScalar::zero();
            if (t != expect)
                throw Error(ErrorKind::ExactFieldOverflow,
                            "derivation basis is not -6-orthonormal at (" + std::to_string(i + 1) +
                                "," + std::to_string(j + 1) + ")");
        }

    Ct_.reserve(26);
    ExactScalar minus_i = -ExactScalar::i();
    for (const auto& r : R_) Ct_.push_back(minus_i * r);

    // Invariant cubic tensor.
    cubic_.assign(27u * 27u * 27u, ExactScalar());
    for (int a = 1; a <= 27; ++a)
        for (int b = a; b <= 27; ++b)
            for (int c = b; c <= 27; ++c) {
                ExactScalar v = det_form(jb.element(a), jb.element(b), jb.element(c));
                int perm[6][3] = {{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}};
                for (auto& p : perm) cubic_[idx3(p[0] - 1, p[1] - 1, p[2] - 1)] = v;
            }

    // Freudenthal action matrices.
    A_.reserve(27);
    for (int alpha = 1; alpha <= 27; ++alpha) {
        ExactMatrix m(27, 27);
        for (int gamma = 1; gamma <= 27; ++gamma) {
            auto coords = jb.coordinates(freudenthal(jb.element(alpha), jb.element(gamma)));
            for (int beta = 1; beta <= 27; ++beta)
                m.at(beta - 1, gamma - 1) = coords[static_cast<std::size_t>(beta - 1)];
        }
        A_.push_back(std::move(m));
    }

    // Structure constants of the derivation algebra, exact, with an exact
    // closure check.
    f_.resize(52u * 52u);
    for (int i = 0; i < 52; ++i)
        for (int j = 0; j < 52; ++j) {
            if (i == j) continue;
            if (j < i) {
                f_[static_cast<std::size_t>(i) * 52 + static_cast<std::size_t>(j)].clear();
                for (const auto& [k, v] : f_[static_cast<std::size_t>(j) * 52 + static_cast<std::size_t>(i)])
                    f_[static_cast<std::size_t>(i) * 52 + static_cast<std::size_t>(j)].emplace_back(k, -v);
                continue;
            }
            ExactMatrix br = commutator(C_[static_cast<std::size_t>(i)], C_[static_cast<std::size_t>(j)]);
            f_[static_cast<std::size_t>(i) * 52 + static_cast<std::size_t>(j)] = project_onto_C(br, "[C,C]");
        }

    alpha_.resize(26u * 26u);
    for (int a = 0; a < 26; ++a)
        for (int b = a + 1; b < 26; ++b) {
            ExactMatrix br = commutator(R_[static_cast<std::size_t>(a)], R_[static_cast<std::size_t>(b)]);
            SparseCoeffs co = project_onto_C(br, "[L,L]");
            alpha_[static_cast<std::size_t>(a) * 26 + static_cast<std::size_t>(b)] = co;
            SparseCoeffs neg;
            for (const auto& [k, v] : co) neg.emplace_back(k, -v);
            alpha_[static_cast<std::size_t>(b) * 26 + static_cast<std::size_t>(a)] = std::move(neg);
        }
}

SparseCoeffs F4E6Basis::project_onto_C(const ExactMatrix& m, const char* what) const {
    SparseCoeffs out;
    ExactMatrix residual = m;
    ExactScalar inv_norm(Rational(-1, 6));
    for (int k = 0; k < 52; ++k) {
        ExactScalar coeff = inv_norm * trace_product(m, C_[static_cast<std::size_t>(k)]);
        if (coeff.is_zero()) continue;
        out.emplace_back(k + 1, coeff);
        residual = residual - coeff * C_[static_cast<std::size_t>(k)];
    }
    if (!residual.is_zero())
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + " does not lie in the span of the derivation basis");
    return out;
}

} // namespace e7f
