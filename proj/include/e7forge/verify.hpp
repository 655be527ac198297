#pragma once

#include <memory>

#include "e7forge/e7mat.hpp"
#include "e7forge/euler.hpp"
#include "e7forge/f4e6.hpp"
#include "e7forge/measures.hpp"
#include "e7forge/rep133.hpp"
#include "e7forge/rep56.hpp"
#include "e7forge/report.hpp"
#include "e7forge/roots.hpp"

namespace e7f {

/// Lazily built artifacts shared by the verification suites (everything is
/// expensive enough to build once).
class VerifyContext {
  public:
    const JordanBasis& jordan();
    const F4E6Basis& f4e6();
    const GeneratorSet& y56();
    const GeneratorSet& m133();     // normalized basis
    const GeneratorSet& m133_raw(); // display-normalized blocks
    const StructureConstants& c56();
    const StructureConstants& c133();
    const SplitSet& split();
    const RootDatum& split_roots();
    const EviSet& evi();
    const EviRootReport& evi_roots();
    const SplitHaarSampler& sampler();

  private:
    std::unique_ptr<JordanBasis> jb_;
    std::unique_ptr<F4E6Basis> fb_;
    std::unique_ptr<GeneratorSet> y56_, m133_, m133_raw_;
    std::unique_ptr<StructureConstants> c56_, c133_;
    std::unique_ptr<SplitSet> split_;
    std::unique_ptr<RootDatum> split_roots_;
    std::unique_ptr<EviSet> evi_;
    std::unique_ptr<EviRootReport> evi_roots_;
    std::unique_ptr<SplitHaarSampler> sampler_;
};

VerificationReport verify_structure(VerifyContext& cx, double tol = 1e-9);
VerificationReport verify_jacobi(VerifyContext& cx, double tol = 1e-9, bool exhaustive = false,
                                 int triples = 100000, std::uint64_t seed = 20240817);
VerificationReport verify_center(VerifyContext& cx, double tol = 1e-10);
VerificationReport verify_roots(VerifyContext& cx);
VerificationReport verify_volumes(VerifyContext& cx);
VerificationReport verify_euler(VerifyContext& cx, std::uint64_t seed = 42);

std::vector<VerificationReport> verify_suite(VerifyContext& cx, const std::string& suite,
                                             double tol, bool exhaustive,
                                             std::uint64_t seed);

} // namespace e7f
