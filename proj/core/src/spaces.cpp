#include "annspec/spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace annspec {

SpaceKind SpaceKind::euclidean(unsigned n) {
    if (n < 2) throw std::domain_error("SpaceKind: Euclidean dimension must be >= 2");
    SpaceKind s;
    s.variant = Variant::Euclidean;
    s.n = n;
    s.k = 1;
    return s;
}

SpaceKind SpaceKind::rank1(unsigned k, unsigned n) {
    if (k != 1 && k != 2 && k != 4 && k != 8)
        throw std::domain_error("SpaceKind: base field dimension must be 1, 2, 4 or 8");
    if (k * n < 2)
        throw std::domain_error("SpaceKind: total dimension k*n must be >= 2");
    SpaceKind s;
    s.variant = Variant::Rank1;
    s.k = k;
    s.n = n;
    return s;
}

std::string SpaceKind::label() const {
    if (variant == Variant::Euclidean)
        return "euclidean(n=" + std::to_string(n) + ")";
    const char* field = k == 1 ? "R" : k == 2 ? "C" : k == 4 ? "H" : "Ca";
    return std::string("rank1(") + field + ",k=" + std::to_string(k) +
           ",n=" + std::to_string(n) + ")";
}

double volume_density(const SpaceKind& space, double r) {
    if (!(r > 0.0)) throw std::domain_error("volume_density: requires r > 0");
    if (space.variant == SpaceKind::Variant::Euclidean)
        return std::pow(r, double(space.n) - 1.0);
    double kn = double(space.k) * double(space.n);
    return std::pow(std::sinh(r), kn - 1.0) *
           std::pow(std::cosh(r), double(space.k) - 1.0);
}

double log_density_derivative(const SpaceKind& space, double r) {
    if (!(r > 0.0)) throw std::domain_error("log_density_derivative: requires r > 0");
    if (space.variant == SpaceKind::Variant::Euclidean)
        return (double(space.n) - 1.0) / r;
    double kn = double(space.k) * double(space.n);
    return (kn - 1.0) / std::tanh(r) +
           (double(space.k) - 1.0) * std::tanh(r);
}

double lambda1_sphere(const SpaceKind& space, double r) {
    if (!(r > 0.0)) throw std::domain_error("lambda1_sphere: requires r > 0");
    if (space.variant == SpaceKind::Variant::Euclidean)
        return (double(space.n) - 1.0) / (r * r);
    double kn = double(space.k) * double(space.n);
    double sh = std::sinh(r), ch = std::cosh(r);
    return (kn - 1.0) / (sh * sh) - (double(space.k) - 1.0) / (ch * ch);
}

double sphere_mode_euclidean(unsigned n, unsigned i, double r) {
    if (!(r > 0.0)) throw std::domain_error("sphere_mode_euclidean: requires r > 0");
    return double(i) * (double(i) + double(n) - 2.0) / (r * r);
}

void AnnulusSpec::validate() const {
    if (!(0.0 < r1 && r1 < r2))
        throw std::domain_error("AnnulusSpec: requires 0 < r1 < r2");
    if (r2 - r1 < 1e-6 * r1)
        throw std::domain_error("AnnulusSpec: shell too thin");
}

} // namespace annspec
