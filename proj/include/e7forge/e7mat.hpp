#pragma once

#include <string>

#include "e7forge/genset.hpp"

namespace e7f {

/// E7MAT v1: bit-exact sparse matrix interchange.
///
///   #E7MAT v1
///   construction=<tag> rep=<dim> count=<n> dim=<d> scalar=<exact|float>
///   @ index=<A> label=<name>
///   r c <scalar>
///   ...
///   (blank line between matrices)
///
/// Entries are 0-based and row-major ordered.  Exact scalars use the
/// ExactScalar text rendering; float scalars are "re,im" with 17 significant
/// digits.  Comment lines starting with '#' after the header are ignored by
/// the reader (the sampler writes its manifest that way).
struct E7MatFile {
    GeneratorSet set;
    bool exact_mode = true;
    std::string manifest; // optional comment payload
};

std::string e7mat_write(const E7MatFile& f);
E7MatFile e7mat_read(const std::string& text);

void e7mat_save(const E7MatFile& f, const std::string& path);
E7MatFile e7mat_load(const std::string& path);

} // namespace e7f
