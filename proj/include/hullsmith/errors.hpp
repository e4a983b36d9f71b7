#pragma once

#include <stdexcept>
#include <string>

namespace hullsmith {

enum class errc {
    non_prime,
    degree_too_large,
    zero_element,
    not_in_subfield,
    not_quadratic_tower,
    bad_exponent,
    negative_power_with_zero_point,
    mode_infeasible,
    zero_scale,
    bad_position,
    lambda_not_in_subfield,
    field_full,
    dimension_full,
    corner_not_cancellable,
    target_above_current,
    search_exhausted,
    hull_shape_mismatch,
    not_full_field,
    out_of_range,
    bad_parameters,
    no_all_nonzero_solution,
    range_violation,
    unknown_distance,
    parse_error,
    internal,
};

/// Single exception type carrying a machine-readable code; the CLI maps
/// search_exhausted to exit 3 and everything else to exit 2.
class error : public std::runtime_error {
  public:
    error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline void require(bool ok, errc c, const std::string& what) {
    if (!ok) fail(c, what);
}

} // namespace hullsmith
