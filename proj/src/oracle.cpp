#include "windnum/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "windnum/root_count.hpp"

namespace windnum::oracle {

namespace {

void check_disjoint(const std::vector<RootSpec>& specs, const char* where) {
    for (const auto& a : specs) {
        if (a.multiplicity == 0) throw PreconditionViolated(std::string(where) + ": multiplicity must be >= 1");
        for (const auto& b : specs) {
            if (a.kind == RootKind::Zero && b.kind == RootKind::Pole && a.location == b.location) {
                throw OverlappingSpecs(where);
            }
        }
    }
}

using Complex = std::complex<double>;

Complex to_complex(const GaussianRational& z) { return {z.re().to_double(), z.im().to_double()}; }

std::vector<Complex> to_complex(const ComplexPoly& p) {
    std::vector<Complex> out;
    for (const auto& c : p.coefficients()) out.push_back(to_complex(c));
    return out;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

constexpr double kBoundaryThreshold = 1e-12;
constexpr int kMaxSamplesPerEdge = 1 << 16;

double winding_at_density(const std::vector<Complex>& num, const std::vector<Complex>& den,
                          const std::array<Complex, 4>& corners, int n) {
    double total = 0.0;
    Complex prev;
    bool first = true;
    for (std::size_t e = 0; e < 4; ++e) {
        const Complex from = corners[e];
        const Complex to = corners[(e + 1) % 4];
        for (int k = 0; k < n; ++k) {
            const Complex z = from + (to - from) * (static_cast<double>(k) / n);
            const Complex nz = horner(num, z);
            const Complex dz = horner(den, z);
            if (std::abs(nz) < kBoundaryThreshold || std::abs(dz) < kBoundaryThreshold) {
                throw BoundaryZeroDetected();
            }
            const Complex value = nz / dz;
            if (!first) total += std::arg(value / prev);
            prev = value;
            first = false;
        }
    }
    const Complex start = horner(num, corners[0]) / horner(den, corners[0]);
    total += std::arg(start / prev);
    return total / (2.0 * std::numbers::pi);
}

} // namespace

RationalFunction build_function(const std::vector<RootSpec>& specs) {
    check_disjoint(specs, "build_function");
    ComplexPoly num(1);
    ComplexPoly den(1);
    for (const auto& s : specs) {
        const ComplexPoly factor = pow(ComplexPoly::linear_factor(s.location), s.multiplicity);
        if (s.kind == RootKind::Zero) {
            num *= factor;
        } else {
            den *= factor;
        }
    }
    return {num, den};
}

QuarterInt expected_weighted_count(const std::vector<RootSpec>& specs, const Rectangle& rect) {
    check_disjoint(specs, "expected_weighted_count");
    Rational total;
    for (const auto& s : specs) {
        Rational weight;
        switch (classify_point(s.location, rect)) {
            case PointClass::Interior: weight = 1; break;
            case PointClass::Edge: weight = Rational(1, 2); break;
            case PointClass::Vertex: weight = Rational(1, 4); break;
            case PointClass::Exterior: weight = 0; break;
        }
        const Rational signed_mult(s.kind == RootKind::Zero ? static_cast<long>(s.multiplicity)
                                                            : -static_cast<long>(s.multiplicity));
        total += signed_mult * weight;
    }
    return QuarterInt(total);
}

double numeric_winding(const RationalFunction& f, const Rectangle& rect, int samples_per_edge) {
    if (samples_per_edge < 64) throw PreconditionViolated("numeric_winding: need >= 64 samples per edge");
    if (f.is_zero()) throw ZeroFunction("numeric_winding");
    const auto num = to_complex(f.numerator());
    const auto den = to_complex(f.denominator());
    const auto v = rect.vertices();
    const std::array<Complex, 4> corners{to_complex(v[0]), to_complex(v[1]), to_complex(v[2]),
                                         to_complex(v[3])};
    int n = samples_per_edge;
    double total = winding_at_density(num, den, corners, n);
    while (std::abs(total - std::round(total)) > 1e-3 && n < kMaxSamplesPerEdge) {
        n *= 2;
        total = winding_at_density(num, den, corners, n);
    }
    return total;
}

} // namespace windnum::oracle
