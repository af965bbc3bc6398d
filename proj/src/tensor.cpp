#include "tlcp/tensor.hpp"

#include <algorithm>
#include <string>

#include "tlcp/errors.hpp"

namespace tlcp {

namespace {

// Guards allocation from untrusted shapes; generous for exact arithmetic.
constexpr std::size_t kMaxEntries = std::size_t{1} << 24;

std::string index_text(const MultiIndex& idx) {
    std::string s = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(idx[k]);
    }
    s += ")";
    return s;
}

void require_same_shape(const DenseTensor& a, const DenseTensor& b, const char* op) {
    if (a.shape() != b.shape())
        throw ShapeMismatchError(std::string(op) + ": operands have different shapes");
}

} // namespace

Shape::Shape(std::vector<int> d) : dims(std::move(d)) {
    for (int v : dims) {
        if (v < 1) throw ShapeMismatchError("shape dimensions must be >= 1");
    }
    element_count();  // reject absurd sizes up front
}

std::size_t Shape::element_count() const {
    std::size_t n = 1;
    for (int v : dims) {
        n *= static_cast<std::size_t>(v);
        if (n > kMaxEntries) throw ShapeMismatchError("tensor too large");
    }
    return n;
}

bool Shape::is_cubical() const {
    for (int v : dims) {
        if (v != dims[0]) return false;
    }
    return true;
}

int Shape::side() const {
    if (dims.empty() || !is_cubical())
        throw ShapeMismatchError("operation requires a cubical tensor");
    return dims[0];
}

Shape cubical_shape(int order, int n) {
    return Shape(std::vector<int>(static_cast<std::size_t>(order), n));
}

DenseTensor::DenseTensor(Shape shape, const Rational& fill)
    : shape_(std::move(shape)), e_(shape_.element_count(), fill) {}

DenseTensor DenseTensor::with_entries(Shape shape,
                                      const std::vector<std::pair<MultiIndex, Rational>>& entries,
                                      const Rational& fill) {
    DenseTensor t(std::move(shape), fill);
    std::vector<bool> seen(t.size(), false);
    for (const auto& [idx, val] : entries) {
        std::size_t p = t.position(idx);
        if (seen[p]) throw DuplicateIndexError("duplicate entry at index " + index_text(idx));
        seen[p] = true;
        t.e_[p] = val;
    }
    return t;
}

std::size_t DenseTensor::position(const MultiIndex& idx) const {
    if (idx.size() != shape_.dims.size())
        throw IndexOutOfRangeError("index " + index_text(idx) + " has wrong length for order " +
                                   std::to_string(order()));
    std::size_t p = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 1 || idx[k] > shape_.dims[k])
            throw IndexOutOfRangeError("index " + index_text(idx) + " out of range at mode " +
                                       std::to_string(k + 1));
        p = p * static_cast<std::size_t>(shape_.dims[k]) + static_cast<std::size_t>(idx[k] - 1);
    }
    return p;
}

MultiIndex DenseTensor::index_at(std::size_t flat) const {
    MultiIndex idx(shape_.dims.size());
    for (std::size_t k = shape_.dims.size(); k-- > 0;) {
        idx[k] = static_cast<int>(flat % static_cast<std::size_t>(shape_.dims[k])) + 1;
        flat /= static_cast<std::size_t>(shape_.dims[k]);
    }
    return idx;
}

DenseTensor add(const DenseTensor& a, const DenseTensor& b) {
    require_same_shape(a, b, "add");
    DenseTensor c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

DenseTensor subtract(const DenseTensor& a, const DenseTensor& b) {
    require_same_shape(a, b, "subtract");
    DenseTensor c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

DenseTensor scale(const Rational& c, const DenseTensor& a) {
    DenseTensor s = a;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] *= c;
    return s;
}

DenseTensor elementwise_max(const DenseTensor& a, const DenseTensor& b) {
    require_same_shape(a, b, "elementwise_max");
    DenseTensor c = a;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (b[i] > c[i]) c[i] = b[i];
    }
    return c;
}

DenseTensor positive_part(const DenseTensor& a) {
    return elementwise_max(a, DenseTensor(a.shape()));
}

DenseTensor negative_part(const DenseTensor& a) {
    return elementwise_max(scale(Rational(-1), a), DenseTensor(a.shape()));
}

Rational inner_product(const DenseTensor& a, const DenseTensor& b) {
    require_same_shape(a, b, "inner_product");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational norm_squared(const DenseTensor& a) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * a[i];
    return s;
}

bool is_nonnegative(const DenseTensor& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0) return false;
    }
    return true;
}

bool is_positive(const DenseTensor& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= 0) return false;
    }
    return true;
}

bool is_zero(const DenseTensor& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) return false;
    }
    return true;
}

DenseTensor jp_mode_product(const DenseTensor& m, const DenseTensor& n,
                            const std::vector<int>& modes) {
    const int mo = m.order();
    const int p = static_cast<int>(modes.size());
    if (p == 0) throw InvalidModeSetError("mode set must be nonempty");
    if (p != n.order())
        throw InvalidModeSetError("mode set size " + std::to_string(p) +
                                  " must equal the order of the second factor (" +
                                  std::to_string(n.order()) + ")");
    for (int l = 0; l < p; ++l) {
        if (modes[l] < 1 || modes[l] > mo)
            throw InvalidModeSetError("mode position " + std::to_string(modes[l]) +
                                      " outside [1, " + std::to_string(mo) + "]");
        if (l > 0 && modes[l] <= modes[l - 1])
            throw InvalidModeSetError("mode positions must be strictly increasing");
        if (m.shape().dims[modes[l] - 1] != n.shape().dims[l])
            throw ShapeMismatchError("mode " + std::to_string(modes[l]) +
                                     " of the first factor does not match mode " +
                                     std::to_string(l + 1) + " of the second");
    }

    std::vector<int> remaining;
    for (int j = 1, l = 0; j <= mo; ++j) {
        if (l < p && modes[l] == j) {
            ++l;
        } else {
            remaining.push_back(j);
        }
    }
    std::vector<int> out_dims;
    out_dims.reserve(remaining.size());
    for (int j : remaining) out_dims.push_back(m.shape().dims[j - 1]);

    DenseTensor out((Shape(out_dims)));
    MultiIndex midx(static_cast<std::size_t>(mo));
    for (std::size_t of = 0; of < out.size(); ++of) {
        MultiIndex oidx = out.index_at(of);
        for (std::size_t r = 0; r < remaining.size(); ++r) midx[remaining[r] - 1] = oidx[r];
        Rational s = 0;
        for (std::size_t nf = 0; nf < n.size(); ++nf) {
            if (n[nf] == 0) continue;
            MultiIndex nidx = n.index_at(nf);
            for (int l = 0; l < p; ++l) midx[modes[l] - 1] = nidx[l];
            s += m.at(midx) * n[nf];
        }
        out[of] = s;
    }
    return out;
}

void require_acting_pair(const DenseTensor& m, const DenseTensor& z) {
    if (m.order() == 0 || m.order() % 2 != 0)
        throw NotEvenOrderError("acting tensor must have even order >= 2, got order " +
                                std::to_string(m.order()));
    int n = m.shape().side();  // throws if not cubical
    int half = m.order() / 2;
    if (z.order() != half)
        throw ShapeMismatchError("operand order " + std::to_string(z.order()) +
                                 " does not match half order " + std::to_string(half));
    if (!z.shape().is_cubical() || z.shape().side() != n)
        throw ShapeMismatchError("operand must be cubical with side " + std::to_string(n));
}

DenseTensor contract(const DenseTensor& m, const DenseTensor& z) {
    require_acting_pair(m, z);
    const std::size_t n = z.size();
    DenseTensor out(z.shape());
    for (std::size_t r = 0; r < n; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (z[c] == 0) continue;
            s += m[r * n + c] * z[c];
        }
        out[r] = s;
    }
    return out;
}

Matrix flatten(const DenseTensor& m) {
    if (m.order() == 0 || m.order() % 2 != 0)
        throw NotEvenOrderError("flatten requires even order >= 2, got order " +
                                std::to_string(m.order()));
    m.shape().side();  // cubical check
    Shape half(std::vector<int>(m.shape().dims.begin(),
                                m.shape().dims.begin() + m.order() / 2));
    const std::size_t n = half.element_count();
    Matrix a(static_cast<int>(n), static_cast<int>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(static_cast<int>(r), static_cast<int>(c)) = m[r * n + c];
    return a;
}

Vec vectorize(const DenseTensor& z) {
    return Vec(z.entries().begin(), z.entries().end());
}

DenseTensor unvectorize(std::span<const Rational> v, int order, int n) {
    DenseTensor t(cubical_shape(order, n));
    if (t.size() != v.size())
        throw ShapeMismatchError("unvectorize: expected " + std::to_string(t.size()) +
                                 " entries, got " + std::to_string(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) t[i] = v[i];
    return t;
}

bool is_block_symmetric(const DenseTensor& m) {
    if (m.order() == 0 || m.order() % 2 != 0)
        throw NotEvenOrderError("block symmetry requires even order >= 2");
    m.shape().side();
    Shape half(std::vector<int>(m.shape().dims.begin(),
                                m.shape().dims.begin() + m.order() / 2));
    const std::size_t n = half.element_count();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) {
            if (m[r * n + c] != m[c * n + r]) return false;
        }
    return true;
}

DenseTensor sequential_principal_subtensor(const DenseTensor& a, int k) {
    if (a.order() == 0) throw ShapeMismatchError("subtensor requires order >= 1");
    int n = a.shape().side();
    if (k < 1 || k > n)
        throw KOutOfRangeError("subtensor bound " + std::to_string(k) + " outside [1, " +
                               std::to_string(n) + "]");
    DenseTensor s(cubical_shape(a.order(), k));
    for (std::size_t f = 0; f < s.size(); ++f) s[f] = a.at(s.index_at(f));
    return s;
}

DenseTensor block_identity(int m, int n) {
    if (m < 1 || n < 1) throw ShapeMismatchError("block_identity requires m, n >= 1");
    DenseTensor t(cubical_shape(2 * m, n));
    const std::size_t big = cubical_shape(m, n).element_count();
    for (std::size_t r = 0; r < big; ++r) t[r * big + r] = 1;
    return t;
}

} // namespace tlcp
