#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lmt/complex_matrix.hpp"

namespace lmt {

enum class OperatorKind {
    Ginibre,
    Normal,
    Quasinormal,
    PartialIsometry,
    RankOne,
    TruncatedShift,
    Nilpotent,
    Positive,
};

std::string kind_name(OperatorKind k);
OperatorKind kind_from_name(const std::string& name);
const std::vector<OperatorKind>& all_kinds();

/// Recipe for one deterministic random operator.  Every generated matrix
/// is certified against its own kind via classify before being returned.
struct OperatorSpec {
    OperatorKind kind = OperatorKind::Ginibre;
    int dim = 4;
    std::uint64_t seed = 0;

    // Kind-specific optional parameters; drawn from the seed when empty.
    std::vector<double> weights;  // truncated shift
    CVec x, y;                    // rank one
};

/// Deterministic PRNG: mt19937_64 driven, Gaussian via Box-Muller so the
/// stream does not depend on library distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    double uniform();                     // [0, 1)
    double uniform(double lo, double hi);
    double gaussian();
    Complex cgaussian();
    CVec cgaussian_vec(std::size_t n);
    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
    bool haveSpare_ = false;
    double spare_ = 0.0;
};

/// Stateless seed mixer for deriving independent substreams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Haar-ish random unitary via Householder QR of a Ginibre matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

/// Deterministic in the recipe (same seed, same matrix); throws
/// KindUnsatisfied if the produced matrix fails its class certification
/// at 1e-10.
ComplexMatrix generate(const OperatorSpec& spec);

}  // namespace lmt
