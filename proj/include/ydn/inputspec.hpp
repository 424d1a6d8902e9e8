#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ydn/linalg.hpp"
#include "ydn/ydmodule.hpp"

namespace ydn {

/**
 * @brief One tuple entry as written in an input document.
 *
 * Either the diagonal shorthand (a square matrix of root-of-unity literals,
 * one section for the whole tuple) or an explicit module with a group degree
 * per basis vector and one action matrix per invariant-factor generator.
 */
struct ModuleSpec {
    bool diagonal = false;
    Mat q;
    std::vector<int> degrees;
    std::vector<Mat> gen_action;
};

/**
 * @brief Parsed input document: an abelian group and modules over it.
 *
 * The scalar grammar is exact: integers, fractions "p/q" and root-of-unity
 * literals "z(N,k)" standing for the k-th power of a primitive N-th root.
 * No floating point enters parsing. `conductor` is normalized to the lcm of
 * the stated value and the conductors of all literals in the document.
 */
struct InputSpec {
    long conductor = 1;
    std::vector<long> invariant_factors;
    std::vector<ModuleSpec> modules;
};

/// Parse a document; throws input_error with line context on bad syntax.
InputSpec parse_input(const std::string& text);

/// Read and parse a file; throws input_error when unreadable.
InputSpec load_input(const std::string& path);

/// Canonical rendering used for hashing, independent of comments,
/// whitespace and literal spelling in the source document.
std::string normalized(const InputSpec& in);

/// FNV-1a over the normalized form plus the format-version tag.
std::uint64_t content_hash(const InputSpec& in);

/// The same hash as sixteen lowercase hex digits.
std::string content_hash_hex(const InputSpec& in);

/// Modules realized over the common group, in document order. A diagonal
/// section expands to one entry per row of its matrix.
struct BuiltModules {
    std::shared_ptr<const FiniteGroup> G;
    std::vector<YDModule> entries;
};

BuiltModules build_modules(const InputSpec& in);

}  // namespace ydn
