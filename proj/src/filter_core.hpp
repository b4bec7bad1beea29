// Core set-membership NLMS recursions with a sparsity-aware dead zone.
//
// All update functions share one arithmetic path so that the epsilon = 0
// reductions are bit-exact, and they optionally tally the real arithmetic
// operations they execute (see complexity.hpp for the counting convention).

#ifndef LCSM_FILTER_CORE_HPP
#define LCSM_FILTER_CORE_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <optional>
#include <vector>

namespace lcsm {

enum class Algorithm {
    SmNlms,
    LcsmNlms1,
    LcsmNlms2,
    SmPnlms,
    SmL0Nlms,
};

std::optional<Algorithm> algorithm_from_name(std::string_view name);
std::string_view algorithm_name(Algorithm a);

/// Immutable recursion parameters. `order` is N; the weight vector has
/// N+1 entries.
struct FilterConfig {
    int order = 0;
    double epsilon = 0.0;    // discard threshold, >= 0
    double gamma_bar = 0.1;  // error bound, > 0
    double delta = 1e-12;    // denominator regularizer, >= 0

    void validate() const;  // throws std::invalid_argument
};

struct Sample {
    std::span<const double> input;  // x(k), length order+1
    double desired = 0.0;           // d(k)
};

struct FilterState {
    std::vector<double> weights;
    std::uint64_t iteration = 0;
};

struct UpdateOutcome {
    bool updated = false;         // |e(k)| > gamma_bar fired
    double error = 0.0;           // a priori error e(k)
    double mu = 0.0;              // step size, in [0, 1)
    double posterior_error = 0.0; // d(k) - w^T(k+1) x(k)
    int active_count = 0;         // #{i : |w_i(k)| >= epsilon} before the update
};

/// Tallies of real arithmetic operations on the per-iteration path.
/// Comparisons, sign manipulation and mask tests are not counted.
struct OpCount {
    std::uint64_t add_sub = 0;
    std::uint64_t mul = 0;
    std::uint64_t div = 0;

    OpCount& operator+=(const OpCount& o) {
        add_sub += o.add_sub;
        mul += o.mul;
        div += o.div;
        return *this;
    }
    bool operator==(const OpCount&) const = default;
};

/// 0/1 diagonal of the discard matrix as a boolean vector.
/// The matrix is idempotent and equals its own pseudoinverse.
struct DiscardMask {
    std::vector<bool> mask;

    int active_count() const;
    /// Zeroes v_i where mask_i is false.
    void apply(std::span<double> v) const;
};

/// Componentwise dead zone: w if |w| >= epsilon, else 0. Boundary inclusive.
double discard(double w, double epsilon);

DiscardMask discard_mask(std::span<const double> weights, double epsilon);

/// d(k) - w^T(k) x(k). Throws std::invalid_argument on dimension mismatch.
double a_priori_error(const FilterState& state, const Sample& sample);

/// 1 - gamma_bar/|e| if |e| > gamma_bar, else 0. Always in [0, 1).
double step_size(double error, double gamma_bar);

/// Fresh state at iteration 0. Throws if the weight length does not match
/// the order or, for the LCSM variants, if any |w_i(0)| <= epsilon.
FilterState make_initial_state(Algorithm a, const FilterConfig& cfg,
                               std::span<const double> initial_weights);
FilterState make_initial_state(Algorithm a, const FilterConfig& cfg,
                               double initial_value);

// In-place update recursions. Each returns the per-iteration outcome and,
// when `tally` is given, adds the executed arithmetic to it. The state
// transition is identical with and without tallying.
UpdateOutcome sm_nlms_update(FilterState& state, const Sample& sample,
                             const FilterConfig& cfg, OpCount* tally = nullptr);
UpdateOutcome lcsm_nlms1_update(FilterState& state, const Sample& sample,
                                const FilterConfig& cfg, OpCount* tally = nullptr);
UpdateOutcome lcsm_nlms2_update(FilterState& state, const Sample& sample,
                                const FilterConfig& cfg, OpCount* tally = nullptr);

}  // namespace lcsm

#endif
