#include "windnum/bivariate.hpp"

#include <algorithm>

namespace windnum {

BivarComplexPoly::BivarComplexPoly(std::vector<std::vector<GaussianRational>> coeffs)
    : coeffs_(std::move(coeffs)) {
    std::size_t width = 0;
    for (const auto& row : coeffs_) width = std::max(width, row.size());
    for (auto& row : coeffs_) row.resize(width);
    trim();
}

void BivarComplexPoly::trim() {
    auto row_zero = [](const std::vector<GaussianRational>& row) {
        return std::all_of(row.begin(), row.end(), [](const auto& c) { return c.is_zero(); });
    };
    while (!coeffs_.empty() && row_zero(coeffs_.back())) coeffs_.pop_back();
    if (coeffs_.empty()) return;
    std::size_t width = coeffs_.front().size();
    while (width > 0) {
        bool col_zero = true;
        for (const auto& row : coeffs_) col_zero = col_zero && row[width - 1].is_zero();
        if (!col_zero) break;
        --width;
    }
    for (auto& row : coeffs_) row.resize(width);
}

int BivarComplexPoly::degree_x() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
}

int BivarComplexPoly::degree_y() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.front().size()) - 1;
}

GaussianRational BivarComplexPoly::coeff(std::size_t jx, std::size_t ky) const {
    if (jx >= coeffs_.size() || ky >= coeffs_[jx].size()) return {};
    return coeffs_[jx][ky];
}

GaussianRational BivarComplexPoly::operator()(const GaussianRational& x, const GaussianRational& y) const {
    GaussianRational acc;
    for (auto row = coeffs_.rbegin(); row != coeffs_.rend(); ++row) {
        GaussianRational inner;
        for (auto c = row->rbegin(); c != row->rend(); ++c) {
            inner *= y;
            inner += *c;
        }
        acc *= x;
        acc += inner;
    }
    return acc;
}

ComplexPoly BivarComplexPoly::restrict_y(const Rational& y) const {
    std::vector<GaussianRational> out(coeffs_.size());
    const GaussianRational yy(y);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        GaussianRational inner;
        for (auto c = coeffs_[j].rbegin(); c != coeffs_[j].rend(); ++c) {
            inner *= yy;
            inner += *c;
        }
        out[j] = std::move(inner);
    }
    return ComplexPoly(std::move(out));
}

ComplexPoly BivarComplexPoly::restrict_x(const Rational& x) const {
    const std::size_t width = coeffs_.empty() ? 0 : coeffs_.front().size();
    std::vector<GaussianRational> out(width);
    const GaussianRational xx(x);
    for (std::size_t k = 0; k < width; ++k) {
        GaussianRational inner;
        for (std::size_t j = coeffs_.size(); j-- > 0;) {
            inner *= xx;
            inner += coeffs_[j][k];
        }
        out[k] = std::move(inner);
    }
    return ComplexPoly(std::move(out));
}

BivarComplexPoly BivarComplexPoly::conj_coefficients() const {
    BivarComplexPoly r = *this;
    for (auto& row : r.coeffs_) {
        for (auto& c : row) c = c.conj();
    }
    return r;
}

BivarComplexPoly& BivarComplexPoly::operator+=(const BivarComplexPoly& rhs) {
    const std::size_t rows = std::max(coeffs_.size(), rhs.coeffs_.size());
    const std::size_t cols = std::max(coeffs_.empty() ? 0 : coeffs_.front().size(),
                                      rhs.coeffs_.empty() ? 0 : rhs.coeffs_.front().size());
    coeffs_.resize(rows);
    for (auto& row : coeffs_) row.resize(cols);
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        for (std::size_t k = 0; k < rhs.coeffs_[j].size(); ++k) coeffs_[j][k] += rhs.coeffs_[j][k];
    }
    trim();
    return *this;
}

BivarComplexPoly operator*(const BivarComplexPoly& l, const BivarComplexPoly& r) {
    if (l.is_zero() || r.is_zero()) return {};
    const std::size_t rows = l.coeffs_.size() + r.coeffs_.size() - 1;
    const std::size_t cols = l.coeffs_.front().size() + r.coeffs_.front().size() - 1;
    std::vector<std::vector<GaussianRational>> out(rows, std::vector<GaussianRational>(cols));
    for (std::size_t j1 = 0; j1 < l.coeffs_.size(); ++j1) {
        for (std::size_t k1 = 0; k1 < l.coeffs_[j1].size(); ++k1) {
            const auto& a = l.coeffs_[j1][k1];
            if (a.is_zero()) continue;
            for (std::size_t j2 = 0; j2 < r.coeffs_.size(); ++j2) {
                for (std::size_t k2 = 0; k2 < r.coeffs_[j2].size(); ++k2) {
                    out[j1 + j2][k1 + k2] += a * r.coeffs_[j2][k2];
                }
            }
        }
    }
    return BivarComplexPoly(std::move(out));
}

BivarComplexPoly operator*(BivarComplexPoly p, const GaussianRational& c) {
    for (auto& row : p.coeffs_) {
        for (auto& x : row) x *= c;
    }
    p.trim();
    return p;
}

BivarComplexPoly embed_bivariate(const ComplexPoly& f) {
    // Z = X + iY, expanded by Horner in the bivariate ring.
    const BivarComplexPoly z({{GaussianRational(0), GaussianRational::i()}, {GaussianRational(1)}});
    BivarComplexPoly acc;
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + BivarComplexPoly({{*it}});
    }
    return acc;
}

std::pair<BivarComplexPoly, BivarComplexPoly> split_re_im_bivar(const BivarComplexPoly& f) {
    auto re_rows = f.coefficients();
    auto im_rows = f.coefficients();
    for (std::size_t j = 0; j < re_rows.size(); ++j) {
        for (std::size_t k = 0; k < re_rows[j].size(); ++k) {
            re_rows[j][k] = GaussianRational(f.coefficients()[j][k].re());
            im_rows[j][k] = GaussianRational(f.coefficients()[j][k].im());
        }
    }
    return {BivarComplexPoly(std::move(re_rows)), BivarComplexPoly(std::move(im_rows))};
}

} // namespace windnum
