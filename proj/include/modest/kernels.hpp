#ifndef MODEST_KERNELS_HPP
#define MODEST_KERNELS_HPP

#include <span>
#include <string>

#include "modest/vec.hpp"

namespace modest {

enum class KernelFamily { gaussian, cauchy, fejer, multivariate_gaussian };

/**
 * A smoothing kernel: a base shape K with unit integral, a bandwidth
 * epsilon, and a dimension. The scaled kernel is
 *
 *   K_eps(x) = eps^-p * K(x / eps),
 *
 * which keeps the integral at 1 while concentrating mass near the origin
 * as epsilon shrinks.
 *
 * gaussian / cauchy / fejer are univariate; multivariate_gaussian accepts
 * any dim >= 1 and coincides with gaussian at dim 1.
 */
struct KernelSpec {
    KernelFamily family = KernelFamily::gaussian;
    double epsilon = 1.0;
    int dim = 1;

    static KernelSpec gaussian(double epsilon);
    static KernelSpec cauchy(double epsilon);
    static KernelSpec fejer(double epsilon);
    static KernelSpec multivariate_gaussian(double epsilon, int dim);
};

std::string to_string(KernelFamily f);
KernelFamily kernel_family_from_string(const std::string& name);

/// K_eps(x). Throws std::invalid_argument on dimension mismatch.
double kernel_value(const KernelSpec& spec, std::span<const double> x);

/// grad K_eps(x), written into g (length spec.dim). No allocation.
void kernel_grad_into(const KernelSpec& spec, std::span<const double> x,
                      std::span<double> g);

Vec kernel_grad(const KernelSpec& spec, std::span<const double> x);

} // namespace modest

#endif
