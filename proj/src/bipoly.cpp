#include "qcong/bipoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace qcong {

void BiPoly::canon() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    std::size_t low = 0;
    while (low < c_.size() && c_[low].is_zero()) ++low;
    if (low > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(low));
        ashift_ += static_cast<long>(low);
    }
    if (c_.empty()) ashift_ = 0;
}

long BiPoly::q_lo() const {
    long m = std::numeric_limits<long>::max();
    for (const auto& c : c_)
        if (!c.is_zero()) m = std::min(m, c.lo());
    return c_.empty() ? 0 : m;
}

long BiPoly::q_hi() const {
    long m = std::numeric_limits<long>::min();
    for (const auto& c : c_)
        if (!c.is_zero()) m = std::max(m, c.hi());
    return c_.empty() ? 0 : m;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

namespace {
BiPoly add_sub(const BiPoly& x, const BiPoly& y, bool sub) {
    if (x.is_zero()) return sub ? -y : y;
    if (y.is_zero()) return x;
    const long lo = std::min(x.a_lo(), y.a_lo());
    const long hi = std::max(x.a_hi(), y.a_hi());
    std::vector<QLaurent> c(static_cast<std::size_t>(hi - lo + 1));
    for (long e = x.a_lo(); e <= x.a_hi(); ++e) c[static_cast<std::size_t>(e - lo)] = x.coeff_a(e);
    for (long e = y.a_lo(); e <= y.a_hi(); ++e) {
        auto& t = c[static_cast<std::size_t>(e - lo)];
        t = sub ? t - y.coeff_a(e) : t + y.coeff_a(e);
    }
    return BiPoly(std::move(c), lo);
}
}  // namespace

BiPoly operator+(const BiPoly& x, const BiPoly& y) { return add_sub(x, y, false); }
BiPoly operator-(const BiPoly& x, const BiPoly& y) { return add_sub(x, y, true); }

BiPoly BiPoly::scaled(const Rat& s) const {
    if (s.is_zero()) return BiPoly();
    BiPoly r = *this;
    for (auto& c : r.c_) c = c.scaled(s);
    return r;
}

BiPoly BiPoly::scaled_q(const QLaurent& s) const {
    if (s.is_zero()) return BiPoly();
    BiPoly r = *this;
    for (auto& c : r.c_) c = c * s;
    return r;
}

BiPoly BiPoly::shifted_q(long k) const {
    BiPoly r = *this;
    for (auto& c : r.c_) c = c.shifted(k);
    return r;
}

QLaurent BiPoly::subst_a(long e) const {
    QLaurent r;
    for (long i = a_lo(); i <= a_hi(); ++i) {
        const QLaurent c = coeff_a(i);
        if (!c.is_zero()) r += c.shifted(e * i);
    }
    return r;
}

BiPoly BiPoly::mul_reference(const BiPoly& x, const BiPoly& y) {
    if (x.is_zero() || y.is_zero()) return BiPoly();
    std::vector<QLaurent> c(x.c_.size() + y.c_.size() - 1);
    for (std::size_t i = 0; i < x.c_.size(); ++i)
        for (std::size_t j = 0; j < y.c_.size(); ++j) {
            if (x.c_[i].is_zero() || y.c_[j].is_zero()) continue;
            c[i + j] += x.c_[i] * y.c_[j];
        }
    return BiPoly(std::move(c), x.ashift_ + y.ashift_);
}

BiPoly BiPoly::mul(const BiPoly& x, const BiPoly& y) {
    if (x.is_zero() || y.is_zero()) return BiPoly();
    if (x.a_free() || y.a_free()) {
        const BiPoly& af = x.a_free() ? x : y;
        const BiPoly& other = x.a_free() ? y : x;
        return other.scaled_q(af.c_[0]);
    }
    // Kronecker: a -> q^stride with stride wide enough that a-slots cannot overlap.
    const long xlo = x.q_lo(), xhi = x.q_hi(), ylo = y.q_lo(), yhi = y.q_hi();
    const long stride = (xhi - xlo) + (yhi - ylo) + 1;
    auto pack = [stride](const BiPoly& p, long qlo) {
        std::vector<Rat> c;
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            const QLaurent& t = p.c_[i];
            if (t.is_zero()) continue;
            const std::size_t base = static_cast<std::size_t>(static_cast<long>(i) * stride + (t.lo() - qlo));
            if (c.size() < base + t.body().size()) c.resize(base + t.body().size());
            const auto& bc = t.body().coeffs();
            for (std::size_t j = 0; j < bc.size(); ++j) c[base + j] = bc[j];
        }
        return QPoly(std::move(c));
    };
    QPoly px = pack(x, xlo);
    QPoly py = pack(y, ylo);
    QPoly prod = QPoly::mul(px, py);
    const std::size_t slots = x.c_.size() + y.c_.size() - 1;
    std::vector<QLaurent> out(slots);
    const auto& pc = prod.coeffs();
    for (std::size_t s = 0; s < slots; ++s) {
        const std::size_t base = s * static_cast<std::size_t>(stride);
        if (base >= pc.size()) break;
        const std::size_t end = std::min(pc.size(), base + static_cast<std::size_t>(stride));
        std::vector<Rat> window(pc.begin() + static_cast<long>(base), pc.begin() + static_cast<long>(end));
        out[s] = QLaurent(QPoly(std::move(window)), xlo + ylo);
    }
    return BiPoly(std::move(out), x.ashift_ + y.ashift_);
}

std::pair<std::vector<QLaurent>, long> coeffs_in_a(const BiPoly& x) {
    return {x.acoeffs(), x.ashift()};
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "a^" << (ashift_ + static_cast<long>(i)) << "*(" << c_[i].str() << ")";
        first = false;
    }
    return os.str();
}

}  // namespace qcong
