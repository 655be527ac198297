#include "e7forge/rep133.hpp"

namespace e7f {

GeneratorSet build_adjoint_133(const F4E6Basis& fb, bool normalized) {
    GeneratorSet g;
    g.construction = Construction::Tits;
    g.rep_dim = 133;
    g.labels.reserve(kTitsDim);
    g.exact.reserve(kTitsDim);
    g.mats.reserve(kTitsDim);

    for (int A = 1; A <= kTitsDim; ++A) {
        SparseExactMatrix m;
        m.dim = kTitsDim;
        for (int B = 1; B <= kTitsDim; ++B) {
            if (A == B) continue;
            SparseCoeffs co = normalized ? tits_basis_bracket_normalized(fb, A, B)
                                         : tits_basis_bracket(fb, A, B);
            for (const auto& [C, v] : co) m.add(C - 1, B - 1, v);
        }
        m.sort_entries();
        g.mats.push_back(m.embed());
        g.exact.push_back(std::move(m));
        g.labels.push_back("M" + std::to_string(A));
    }
    return g;
}

} // namespace e7f
