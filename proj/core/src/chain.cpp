#include "toda/chain.hpp"

#include <string>

#include "toda/smith.hpp"

namespace toda {

// ---- ChainComplex ----

ChainComplex::ChainComplex(Ring ring, int min_degree, std::vector<std::size_t> dims,
                           std::vector<Matrix> d)
    : ring_(ring), lo_(min_degree), dims_(std::move(dims)), d_(std::move(d)) {
    if (d_.size() != dims_.size())
        throw InvalidInput("complex: " + std::to_string(dims_.size()) + " degrees but " +
                           std::to_string(d_.size()) + " differentials");
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        const std::size_t rows = i == 0 ? 0 : dims_[i - 1];
        const int deg = lo_ + int(i);
        if (d_[i].rows() != rows || d_[i].cols() != dims_[i])
            throw InvalidInput("differential at degree " + std::to_string(deg) + " has shape " +
                               std::to_string(d_[i].rows()) + "x" + std::to_string(d_[i].cols()) +
                               ", expected " + std::to_string(rows) + "x" +
                               std::to_string(dims_[i]));
        if (ring_.is_field())
            for (Scalar x : d_[i].data())
                if (x < 0 || x >= ring_.characteristic())
                    throw InvalidInput("differential at degree " + std::to_string(deg) +
                                       " has an entry outside [0,p)");
    }
    for (std::size_t i = 2; i < dims_.size(); ++i) {
        if (!multiply(ring_, d_[i - 1], d_[i]).is_zero())
            throw InvalidInput("d*d != 0 at degree " + std::to_string(lo_ + int(i)));
    }
    // trim zero ends
    std::size_t a = 0, b = dims_.size();
    while (a < b && dims_[a] == 0) ++a;
    while (b > a && dims_[b - 1] == 0) --b;
    if (a == b) {
        lo_ = 0;
        dims_.clear();
        d_.clear();
        return;
    }
    if (a > 0 || b < dims_.size()) {
        std::vector<std::size_t> nd(dims_.begin() + long(a), dims_.begin() + long(b));
        std::vector<Matrix> nm(d_.begin() + long(a), d_.begin() + long(b));
        nm[0] = Matrix(0, nd[0]);
        lo_ += int(a);
        dims_ = std::move(nd);
        d_ = std::move(nm);
    }
}

ChainComplex ChainComplex::concentrated(Ring ring, int degree, std::size_t rank) {
    return ChainComplex(ring, degree, {rank}, {Matrix(0, rank)});
}

std::size_t ChainComplex::dim(int n) const noexcept {
    if (dims_.empty() || n < lo_ || n > max_degree()) return 0;
    return dims_[std::size_t(n - lo_)];
}

Matrix ChainComplex::d(int n) const {
    if (dims_.empty() || n <= lo_ || n > max_degree()) return Matrix(dim(n - 1), dim(n));
    return d_[std::size_t(n - lo_)];
}

std::size_t ChainComplex::total_rank() const noexcept {
    std::size_t s = 0;
    for (auto x : dims_) s += x;
    return s;
}

ComplexPtr make_complex(ChainComplex c) { return std::make_shared<const ChainComplex>(std::move(c)); }
ComplexPtr zero_complex(const Ring& R) { return make_complex(ChainComplex(R)); }

}  // namespace toda
