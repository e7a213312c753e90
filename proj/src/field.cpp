#include "lrc/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lrc {

namespace {

// Dense polynomials over F_p, little-endian coefficients, not necessarily
// trimmed. Only what field construction needs.
using Poly = std::vector<uint32_t>;

int degree(const Poly& f) {
    for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
        if (f[d] != 0) return d;
    return -1;
}

Poly poly_mod(Poly f, const Poly& g, uint32_t p) {
    const int dg = degree(g);
    const uint32_t lead_inv = [&] {
        // modular inverse of g's leading coefficient via Fermat
        uint32_t a = g[dg] % p, res = 1, e = p - 2;
        for (; e; e >>= 1, a = (uint64_t)a * a % p)
            if (e & 1) res = (uint64_t)res * a % p;
        return res;
    }();
    for (int d = degree(f); d >= dg; d = degree(f)) {
        const uint32_t c = (uint64_t)f[d] * lead_inv % p;
        for (int t = 0; t <= dg; ++t) {
            uint64_t sub = (uint64_t)c * g[t] % p;
            f[d - dg + t] = (f[d - dg + t] + p - sub) % p;
        }
    }
    f.resize(dg);  // the remainder has degree < dg
    return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, uint32_t p) {
    Poly prod(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + (uint64_t)a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), modulus, p);
}

bool is_irreducible(const Poly& f, uint32_t p) {
    const int df = degree(f);
    if (df <= 0) return false;
    if (df == 1) return true;
    // trial division by every monic polynomial of degree 1..df/2
    for (int d = 1; 2 * d <= df; ++d) {
        Poly g(d + 1, 0);
        g[d] = 1;
        uint64_t count = 1;
        for (int t = 0; t < d; ++t) count *= p;
        for (uint64_t n = 0; n < count; ++n) {
            uint64_t rest = n;
            for (int t = 0; t < d; ++t) {
                g[t] = rest % p;
                rest /= p;
            }
            if (degree(poly_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power(uint32_t q, uint32_t& p, uint32_t& r) {
    if (q < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= q; ++d)
        if (q % d == 0) {
            uint32_t rest = q, e = 0;
            while (rest % d == 0) {
                rest /= d;
                ++e;
            }
            if (rest != 1) return false;
            p = d;
            r = e;
            return true;
        }
    p = q;  // q itself prime
    r = 1;
    return true;
}

std::shared_ptr<const Field> Field::make(uint32_t p, uint32_t r) {
    return std::shared_ptr<const Field>(new Field(p, r, {}, std::nullopt));
}

std::shared_ptr<const Field> Field::make(uint32_t p, uint32_t r,
                                         const std::vector<uint32_t>& modulus,
                                         std::optional<uint32_t> primitive) {
    return std::shared_ptr<const Field>(new Field(p, r, modulus, primitive));
}

Field::Field(uint32_t p, uint32_t r, std::vector<uint32_t> modulus,
             std::optional<uint32_t> primitive)
    : p_(p), r_(r) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (r < 1) throw std::invalid_argument("extension degree must be at least 1");
    uint64_t q = 1;
    for (uint32_t t = 0; t < r; ++t) {
        q *= p;
        if (q > 65536) throw std::invalid_argument("field order exceeds the supported 2^16 limit");
    }
    q_ = static_cast<uint32_t>(q);

    if (!modulus.empty()) {
        if (modulus.size() != r + 1 || modulus[r] != 1)
            throw std::invalid_argument("modulus must be monic of degree r");
        for (uint32_t c : modulus)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range [0,p)");
        if (!is_irreducible(modulus, p))
            throw std::invalid_argument("modulus is reducible over GF(" + std::to_string(p) + ")");
        modulus_ = std::move(modulus);
    } else {
        // lexicographically smallest monic irreducible, coefficients compared
        // from the constant term upward
        Poly cand(r + 1, 0);
        cand[r] = 1;
        std::vector<uint32_t> digits(r, 0);
        bool found = false;
        while (true) {
            for (uint32_t t = 0; t < r; ++t) cand[t] = digits[t];
            if (is_irreducible(cand, p)) {
                found = true;
                break;
            }
            // count up with the constant term as the most significant digit
            int t = static_cast<int>(r) - 1;
            while (t >= 0 && digits[t] == p - 1) digits[t--] = 0;
            if (t < 0) break;
            ++digits[t];
        }
        if (!found) throw std::logic_error("no irreducible modulus found");  // cannot happen
        modulus_ = cand;
    }

    // element order checks before the tables exist run on raw polynomials
    auto to_poly = [&](uint32_t idx) {
        Poly f(r_, 0);
        for (uint32_t t = 0; t < r_; ++t) {
            f[t] = idx % p_;
            idx /= p_;
        }
        return f;
    };
    auto to_idx = [&](const Poly& f) {
        uint32_t idx = 0, scale = 1;
        for (uint32_t t = 0; t < r_; ++t) {
            idx += (t < f.size() ? f[t] : 0) * scale;
            scale *= p_;
        }
        return idx;
    };
    auto pow_poly = [&](Poly base, uint32_t e) {
        Poly acc(1, 1);
        while (e) {
            if (e & 1) acc = poly_mul_mod(acc, base, modulus_, p_);
            base = poly_mul_mod(base, base, modulus_, p_);
            e >>= 1;
        }
        return acc;
    };
    const auto factors = prime_factors(q_ - 1);
    auto has_full_order = [&](uint32_t idx) {
        if (idx == 0) return false;
        for (uint32_t f : factors)
            if (to_idx(pow_poly(to_poly(idx), (q_ - 1) / f)) == 1) return false;
        return true;
    };

    if (primitive) {
        if (*primitive >= q_ || !has_full_order(*primitive))
            throw std::invalid_argument("supplied primitive element does not have order q-1");
        primitive_ = *primitive;
    } else {
        uint32_t idx = 1;
        while (idx < q_ && !has_full_order(idx)) ++idx;
        if (idx == q_) throw std::logic_error("no primitive element found");  // cannot happen
        primitive_ = idx;
    }

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Poly cur(1, 1);
    const Poly w = to_poly(primitive_);
    for (uint32_t e = 0; e < q_ - 1; ++e) {
        const uint32_t idx = to_idx(cur);
        exp_[e] = idx;
        log_[idx] = e;
        cur = poly_mul_mod(cur, w, modulus_, p_);
    }
}

Fe Field::element(uint32_t idx) const {
    if (idx >= q_) throw std::invalid_argument("element index out of range");
    return {this, idx};
}

std::vector<uint32_t> Field::coeffs(uint32_t idx) const {
    std::vector<uint32_t> c(r_);
    for (uint32_t t = 0; t < r_; ++t) {
        c[t] = idx % p_;
        idx /= p_;
    }
    return c;
}

uint32_t Field::index_of_coeffs(const std::vector<uint32_t>& c) const {
    uint32_t idx = 0, scale = 1;
    for (uint32_t t = 0; t < r_; ++t) {
        uint32_t d = t < c.size() ? c[t] : 0;
        if (d >= p_) throw std::invalid_argument("coefficient out of range [0,p)");
        idx += d * scale;
        scale *= p_;
    }
    return idx;
}

uint32_t Field::add_idx(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (r_ == 1) return (a + b) % p_;
    uint32_t out = 0, scale = 1;
    for (uint32_t t = 0; t < r_; ++t) {
        out += ((a % p_) + (b % p_)) % p_ * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

uint32_t Field::neg_idx(uint32_t a) const {
    if (p_ == 2) return a;
    if (r_ == 1) return (p_ - a) % p_;
    uint32_t out = 0, scale = 1;
    for (uint32_t t = 0; t < r_; ++t) {
        out += (p_ - (a % p_)) % p_ * scale;
        a /= p_;
        scale *= p_;
    }
    return out;
}

uint32_t Field::sub_idx(uint32_t a, uint32_t b) const { return add_idx(a, neg_idx(b)); }

uint32_t Field::mul_idx(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
}

uint32_t Field::inv_idx(uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero in " + name());
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t Field::pow_idx(uint32_t a, int64_t e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw std::domain_error("negative power of zero");
    }
    const int64_t m = q_ - 1;
    int64_t ered = ((e % m) + m) % m;
    return exp_[(uint64_t)log_[a] * ered % m];
}

uint32_t Field::dlog_idx(uint32_t a) const {
    if (a == 0) throw std::domain_error("discrete log of zero");
    return log_[a];
}

uint32_t Field::exp_idx(int64_t e) const {
    const int64_t m = q_ - 1;
    return exp_[((e % m) + m) % m];
}

uint32_t Field::element_order(uint32_t a) const {
    if (a == 0) throw std::domain_error("order of zero is undefined");
    return (q_ - 1) / std::gcd(q_ - 1, log_[a]);
}

bool Field::is_primitive(uint32_t a) const {
    if (a == 0) throw std::domain_error("order of zero is undefined");
    return element_order(a) == q_ - 1;
}

std::vector<Fe> Field::enum_binary_order() const {
    if (p_ != 2) throw std::domain_error("binary element order requires characteristic 2");
    std::vector<Fe> out;
    out.reserve(q_);
    for (uint32_t idx = 0; idx < q_; ++idx) out.push_back({this, idx});
    return out;
}

bool Field::operator==(const Field& other) const {
    return p_ == other.p_ && r_ == other.r_ && modulus_ == other.modulus_ &&
           primitive_ == other.primitive_;
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

}  // namespace lrc
