#ifndef FOURFOLD_BLOCKS_HPP
#define FOURFOLD_BLOCKS_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fourfold/manifold.hpp"

namespace fourfold {
namespace blocks {

// Catalog of named building blocks. Every descriptor a constructor returns
// passes validate_descriptor, and only carries invariants and certificates
// with a citable source.

struct SurfaceProduct { std::int64_t g = 1, h = 1; };       // Sigma_g x Sigma_h
struct K3 {};
struct HomotopyK3 { std::int64_t m = 0; };                  // homeomorphic, exotic for distinct m
struct CP2 {};
struct CP2Bar {};
struct S1xS3 {};
struct Yp { std::int64_t p = 2; };                          // 0-surgery on {pt} x S1 in L(p,1) x S1
struct PrimaryKodaira {};
struct Gompf { std::int64_t alpha = 2, beta = 0; };         // simply connected symplectic spin
struct MinimalSc { std::int64_t a = 0, b = -2; };           // minimal simply connected symplectic, odd form
struct IrreducibleZ { std::int64_t a = 0, b = -2; };        // pi1 = Z lattice family
struct IrreducibleZp { std::int64_t a = 0, b = -2, p = 3; };  // pi1 = Z/p, p odd

using BlockKind =
    std::variant<SurfaceProduct, K3, HomotopyK3, CP2, CP2Bar, S1xS3, Yp, PrimaryKodaira, Gompf,
                 MinimalSc, IrreducibleZ, IrreducibleZp>;

/// Throws InvalidParameters when the kind's parameter ranges are violated.
ManifoldDescriptor make_block(const BlockKind& kind);

/// CLI-facing kind names with their parameter arity, e.g.
/// "surface-product g h".
std::vector<std::string> block_usage();

/// Parses "surface-product", 3, 3 style argument lists.
BlockKind parse_block(const std::string& name, const std::vector<std::int64_t>& params);

/// Optional upgrade rule, off by default: amenable-by-tag fundamental groups
/// (trivial, free abelian, finite cyclic) force vanishing simplicial volume.
ManifoldDescriptor apply_amenable_volume_rule(ManifoldDescriptor d);

}  // namespace blocks
}  // namespace fourfold

#endif
