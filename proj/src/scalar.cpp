#include "permeq/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace permeq {

unsigned ApproxSettings::digits = 50;

void ApproxSettings::set_digits(unsigned d) {
    digits = d < 10 ? 10 : d;
    Real::default_precision(digits + 10);
}

Real ApproxSettings::tolerance() {
    Real t = pow(Real(10), -(static_cast<int>(digits) * 3 / 5));
    Real floor = pow(Real(10), -30);
    return t < floor ? t : floor;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> ds;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

namespace {

// Quotient of polynomial division a / b, remainder must be zero (used only for
// x^n - 1 divided by products of cyclotomic polynomials).
std::vector<Rat> poly_div_exact(std::vector<Rat> a, const std::vector<Rat>& b) {
    std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

struct FieldData {
    unsigned phi;
    std::vector<Rat> poly;                       // Phi_N, degree phi
    std::vector<std::vector<Rat>> power_table;   // zeta^k for k in [phi, 2*phi-2]
};

std::map<unsigned, FieldData>& field_registry() {
    static std::map<unsigned, FieldData> reg;
    return reg;
}
std::mutex& field_mutex() {
    static std::mutex m;
    return m;
}

const FieldData& field_data(unsigned n);

std::vector<Rat> compute_cyclotomic(unsigned n) {
    if (n == 1) return {Rat(-1), Rat(1)};  // x - 1
    std::vector<Rat> xn1(n + 1, Rat(0));
    xn1[0] = -1;
    xn1[n] = 1;
    std::vector<Rat> denom{Rat(1)};
    for (unsigned d : divisors(n)) {
        if (d == n) continue;
        denom = poly_mul(denom, cyclotomic_polynomial(d));
    }
    return poly_div_exact(std::move(xn1), denom);
}

const FieldData& field_data(unsigned n) {
    std::lock_guard<std::mutex> lock(field_mutex());
    auto it = field_registry().find(n);
    if (it != field_registry().end()) return it->second;
    FieldData fd;
    fd.poly = compute_cyclotomic(n);
    fd.phi = static_cast<unsigned>(fd.poly.size()) - 1;
    // zeta^phi = -(poly[0] + poly[1] zeta + ...)/poly[phi]; poly is monic.
    fd.power_table.resize(fd.phi >= 1 ? fd.phi - 1 : 0);
    if (!fd.power_table.empty()) {
        // row 0 corresponds to zeta^phi
        std::vector<Rat> row(fd.phi, Rat(0));
        for (unsigned i = 0; i < fd.phi; ++i) row[i] = -fd.poly[i];
        fd.power_table[0] = row;
        for (size_t k = 1; k < fd.power_table.size(); ++k) {
            // zeta^{phi+k} = zeta * zeta^{phi+k-1}
            const std::vector<Rat>& prev = fd.power_table[k - 1];
            std::vector<Rat> nxt(fd.phi, Rat(0));
            for (unsigned i = 0; i + 1 < fd.phi; ++i) nxt[i + 1] = prev[i];
            if (prev[fd.phi - 1] != 0) {
                const std::vector<Rat>& top = fd.power_table[0];
                for (unsigned i = 0; i < fd.phi; ++i) nxt[i] += prev[fd.phi - 1] * top[i];
            }
            fd.power_table[k] = nxt;
        }
    }
    auto res = field_registry().emplace(n, std::move(fd));
    return res.first->second;
}

}  // namespace

const std::vector<Rat>& cyclotomic_polynomial(unsigned n) {
    // Compute outside the registry lock to keep the recursion simple.
    static std::map<unsigned, std::vector<Rat>> cache;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<Rat> p = compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(n, std::move(p)).first->second;
}

Scalar::Scalar() : conductor_(1), coeff_(1, Rat(0)) {}

Scalar Scalar::rational(const Rat& q, unsigned conductor) {
    if (conductor == 0) {
        Scalar s;
        s.conductor_ = 0;
        s.re_ = Real(q.convert_to<std::string>());
        s.im_ = 0;
        return s;
    }
    Scalar s;
    s.conductor_ = conductor;
    s.coeff_.assign(euler_phi(conductor), Rat(0));
    s.coeff_[0] = q;
    return s;
}

Scalar Scalar::approx(const Real& re, const Real& im) {
    Scalar s;
    s.conductor_ = 0;
    s.re_ = re;
    s.im_ = im;
    return s;
}

Scalar Scalar::root_of_unity(long k, unsigned conductor) {
    if (conductor == 0) throw std::invalid_argument("root_of_unity needs conductor >= 1");
    long n = static_cast<long>(conductor);
    long kk = ((k % n) + n) % n;
    unsigned phi = euler_phi(conductor);
    std::vector<Rat> raw(conductor, Rat(0));
    raw[static_cast<size_t>(kk)] = 1;
    Scalar s;
    s.conductor_ = conductor;
    s.coeff_.assign(phi, Rat(0));
    s.reduce_tail(raw);
    s.coeff_.assign(raw.begin(), raw.begin() + phi);
    return s;
}

Scalar Scalar::from_coeffs(unsigned conductor, std::vector<Rat> coeffs) {
    if (conductor == 0) throw std::invalid_argument("from_coeffs needs conductor >= 1");
    unsigned phi = euler_phi(conductor);
    if (coeffs.size() != phi) throw std::invalid_argument("coefficient vector has wrong length");
    Scalar s;
    s.conductor_ = conductor;
    s.coeff_ = std::move(coeffs);
    return s;
}

void Scalar::reduce_tail(std::vector<Rat>& raw) const {
    const FieldData& fd = field_data(conductor_);
    unsigned phi = fd.phi;
    if (raw.size() <= phi) {
        raw.resize(phi, Rat(0));
        return;
    }
    for (size_t k = raw.size(); k-- > phi;) {
        if (raw[k] == 0) continue;
        const std::vector<Rat>& row = fd.power_table[k - phi];
        for (unsigned i = 0; i < phi; ++i)
            if (row[i] != 0) raw[i] += raw[k] * row[i];
        raw[k] = 0;
    }
    raw.resize(phi);
}

bool Scalar::is_zero() const {
    if (is_approx()) {
        Real t = ApproxSettings::tolerance();
        return abs(re_) < t && abs(im_) < t;
    }
    for (const Rat& c : coeff_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    if (is_approx()) return false;
    for (size_t i = 1; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) return false;
    return true;
}

Rat Scalar::rational_part() const {
    if (!is_rational()) throw std::logic_error("scalar is not rational");
    return coeff_[0];
}

void Scalar::align(const Scalar& a, const Scalar& b, Scalar& ax, Scalar& bx) {
    if (a.conductor_ == b.conductor_) {
        ax = a;
        bx = b;
        return;
    }
    if (a.conductor_ == 0 || b.conductor_ == 0) {
        Real re, im;
        if (a.conductor_ == 0) {
            ax = a;
            b.to_complex(re, im);
            bx = Scalar::approx(re, im);
        } else {
            a.to_complex(re, im);
            ax = Scalar::approx(re, im);
            bx = b;
        }
        return;
    }
    if (a.is_rational()) {
        ax = Scalar::rational(a.coeff_[0], b.conductor_);
        bx = b;
        return;
    }
    if (b.is_rational()) {
        ax = a;
        bx = Scalar::rational(b.coeff_[0], a.conductor_);
        return;
    }
    throw std::invalid_argument("scalar conductors differ (" + std::to_string(a.conductor_) +
                                " vs " + std::to_string(b.conductor_) + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar a, b;
    align(*this, o, a, b);
    if (a.is_approx()) return Scalar::approx(a.re_ + b.re_, a.im_ + b.im_);
    for (size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] += b.coeff_[i];
    return a;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (s.is_approx()) {
        s.re_ = -s.re_;
        s.im_ = -s.im_;
        return s;
    }
    for (Rat& c : s.coeff_) c = -c;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar a, b;
    align(*this, o, a, b);
    if (a.is_approx())
        return Scalar::approx(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    size_t n = a.coeff_.size();
    std::vector<Rat> raw(2 * n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (a.coeff_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b.coeff_[j] == 0) continue;
            raw[i + j] += a.coeff_[i] * b.coeff_[j];
        }
    }
    a.reduce_tail(raw);
    a.coeff_ = std::move(raw);
    return a;
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_approx()) {
        Real d = re_ * re_ + im_ * im_;
        return Scalar::approx(re_ / d, -im_ / d);
    }
    if (is_rational()) return Scalar::rational(Rat(1) / coeff_[0], conductor_);
    // Extended Euclid in Q[x] against the cyclotomic polynomial.
    const FieldData& fd = field_data(conductor_);
    std::vector<Rat> r0 = fd.poly;
    std::vector<Rat> r1 = coeff_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of this element
    auto deg = [](const std::vector<Rat>& p) { return static_cast<long>(p.size()) - 1; };
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<Rat> q(deg(r0) >= deg(r1) ? deg(r0) - deg(r1) + 1 : 0, Rat(0));
        std::vector<Rat> rem = r0;
        while (deg(rem) >= deg(r1) && !(rem.size() == 1 && rem[0] == 0)) {
            Rat c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
            if (rem.size() == 1 && rem[0] == 0) break;
        }
        // s_new = s0 - q * s1
        std::vector<Rat> qs1 = poly_mul(q, s1);
        std::vector<Rat> snew(std::max(s0.size(), qs1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) snew[i] += s0[i];
        for (size_t i = 0; i < qs1.size(); ++i) snew[i] -= qs1[i];
        r0 = std::move(r1);
        r1 = std::move(rem);
        while (r1.size() > 1 && r1.back() == 0) r1.pop_back();
        s0 = std::move(s1);
        s1 = std::move(snew);
        if (r1.size() == 1 && r1[0] == 0) throw std::domain_error("element not invertible");
    }
    // r1 is a nonzero constant c; inverse = s1 / c reduced mod Phi.
    Rat c = r1[0];
    std::vector<Rat> raw(s1.size(), Rat(0));
    for (size_t i = 0; i < s1.size(); ++i) raw[i] = s1[i] / c;
    Scalar out;
    out.conductor_ = conductor_;
    out.reduce_tail(raw);
    out.coeff_ = std::move(raw);
    return out;
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar::rational(1, conductor_ == 0 ? 1 : conductor_);
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Scalar acc = Scalar::rational(1, base.conductor_ == 0 ? 1 : base.conductor_);
    if (base.is_approx()) acc = Scalar::approx(Real(1), Real(0));
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Scalar Scalar::galois_conjugate() const {
    if (is_approx()) return Scalar::approx(re_, -im_);
    unsigned n = conductor_;
    if (n <= 2) return *this;
    unsigned phi = euler_phi(n);
    std::vector<Rat> raw(n, Rat(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (coeff_[i] == 0) continue;
        raw[(n - i) % n] += coeff_[i];
    }
    Scalar out;
    out.conductor_ = n;
    out.reduce_tail(raw);
    out.coeff_ = std::move(raw);
    return out;
}

bool Scalar::operator==(const Scalar& o) const {
    Scalar a, b;
    align(*this, o, a, b);
    if (a.is_approx()) {
        Real t = ApproxSettings::tolerance();
        return abs(a.re_ - b.re_) < t && abs(a.im_ - b.im_) < t;
    }
    return a.coeff_ == b.coeff_;
}

void Scalar::to_complex(Real& re, Real& im) const {
    if (is_approx()) {
        re = re_;
        im = im_;
        return;
    }
    Real two_pi = 2 * boost::math::constants::pi<Real>();
    re = 0;
    im = 0;
    for (size_t k = 0; k < coeff_.size(); ++k) {
        if (coeff_[k] == 0) continue;
        Real c(coeff_[k].convert_to<std::string>());
        Real angle = two_pi * static_cast<long>(k) / static_cast<long>(conductor_);
        re += c * cos(angle);
        im += c * sin(angle);
    }
}

std::string Scalar::str() const {
    if (is_approx()) {
        return "(" + re_.str(12) + (im_ < 0 ? "" : "+") + im_.str(12) + "i)";
    }
    if (is_rational()) return coeff_[0].convert_to<std::string>();
    std::string out;
    bool first = true;
    for (size_t k = 0; k < coeff_.size(); ++k) {
        if (coeff_[k] == 0) continue;
        std::string term = coeff_[k].convert_to<std::string>();
        if (k > 0) {
            term += "*z";
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (!first) out += " + ";
        out += term;
        first = false;
    }
    if (first) out = "0";
    return "(" + out + " : z=zeta_" + std::to_string(conductor_) + ")";
}

std::vector<std::string> Scalar::coeff_strings() const {
    std::vector<std::string> v;
    if (is_approx()) {
        v.push_back(re_.str(ApproxSettings::digits));
        v.push_back(im_.str(ApproxSettings::digits));
        return v;
    }
    v.reserve(coeff_.size());
    for (const Rat& c : coeff_) v.push_back(c.convert_to<std::string>());
    return v;
}

Scalar embed_rational(const Rat& q, unsigned conductor) { return Scalar::rational(q, conductor); }
Scalar root_of_unity(long k, unsigned conductor) { return Scalar::root_of_unity(k, conductor); }

namespace {

bool rational_sqrt(const Rat& q, Rat& out) {
    if (q < 0) return false;
    if (q == 0) {
        out = 0;
        return true;
    }
    Int num = numerator(q), den = denominator(q);
    Int ns = sqrt(num), ds = sqrt(den);
    if (ns * ns != num || ds * ds != den) return false;
    out = Rat(ns, ds);
    return true;
}

void canonical_sign(Scalar& y) {
    for (const Rat& c : y.coeffs()) {
        if (c == 0) continue;
        if (c < 0) y = -y;
        return;
    }
}

// Try to reconstruct a vector of rational coefficients from high-precision
// real approximations with a bounded denominator.
bool round_to_rationals(const std::vector<Real>& vals, const Int& den_bound,
                        std::vector<Rat>& out) {
    out.clear();
    out.reserve(vals.size());
    for (const Real& v : vals) {
        // continued fraction expansion
        Real x = v;
        Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        bool ok = false;
        for (int iter = 0; iter < 64; ++iter) {
            Real fl = floor(x);
            Int a = fl.convert_to<Int>();
            Int p2 = a * p1 + p0;
            Int q2 = a * q1 + q0;
            if (q2 > den_bound) break;
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
            Real approx = Real(p1.convert_to<std::string>()) / Real(q1.convert_to<std::string>());
            if (abs(approx - v) < pow(Real(10), -(static_cast<int>(ApproxSettings::digits) / 2))) {
                ok = true;
                break;
            }
            Real frac = x - fl;
            if (frac < pow(Real(10), -(static_cast<int>(ApproxSettings::digits) - 5))) {
                ok = true;
                break;
            }
            x = 1 / frac;
        }
        if (!ok) return false;
        out.push_back(Rat(p1, q1));
    }
    return true;
}

}  // namespace

std::optional<Scalar> sqrt_in_field(const Scalar& x) {
    if (x.is_zero()) return Scalar::rational(0, x.is_approx() ? 0 : x.conductor());
    if (x.is_approx()) {
        Real re, im, r, sr, sre, sim;
        x.to_complex(re, im);
        r = sqrt(re * re + im * im);
        sr = sqrt(r);
        Real half = (re + r) / 2;
        sre = sqrt(half < 0 ? Real(0) : half);
        Real ims = r - half;
        sim = sqrt(ims < 0 ? Real(0) : ims);
        if (im < 0) sim = -sim;
        return Scalar::approx(sre, sim);
    }
    unsigned n = x.conductor();
    if (x.is_rational()) {
        Rat q = x.rational_part();
        Rat r;
        if (q > 0 && rational_sqrt(q, r)) {
            Scalar y = Scalar::rational(r, n);
            canonical_sign(y);
            return y;
        }
        if (n <= 2) {
            return std::nullopt;  // rationals: nothing further to try
        }
    }
    // General case: reconstruct from the Galois embeddings.  The embedding
    // values of y are square roots of the embedding values of x; signs are
    // only constrained in conjugate pairs, so search the sign patterns.
    unsigned phi = euler_phi(n);
    std::vector<unsigned> exps;  // representatives a with gcd(a, n) = 1
    for (unsigned a = 1; a < n; ++a)
        if (std::__gcd(a, n) == 1) exps.push_back(a);
    // pair a with n - a; keep one of each pair
    std::vector<unsigned> reps;
    for (unsigned a : exps)
        if (a <= n - a) reps.push_back(a);
    unsigned nfree = static_cast<unsigned>(reps.size());
    if (nfree > 16) return std::nullopt;  // out of supported range

    unsigned prec_digits = ApproxSettings::digits < 60 ? 60 : ApproxSettings::digits;
    unsigned old_prec = Real::default_precision();
    Real::default_precision(prec_digits + 20);
    Real two_pi = 2 * boost::math::constants::pi<Real>();

    // embedding values of x at zeta -> zeta^a for all a coprime to n
    auto embed = [&](unsigned a, Real& re, Real& im) {
        re = 0;
        im = 0;
        const std::vector<Rat>& cs = x.coeffs();
        for (size_t k = 0; k < cs.size(); ++k) {
            if (cs[k] == 0) continue;
            Real c(cs[k].convert_to<std::string>());
            Real angle = two_pi * static_cast<long>((k * a) % n) / static_cast<long>(n);
            re += c * cos(angle);
            im += c * sin(angle);
        }
    };

    std::optional<Scalar> found;
    for (unsigned long mask = 0; mask < (1ul << nfree) && !found; ++mask) {
        // candidate embedding values for y at the representative embeddings
        std::vector<Real> yre(exps.size()), yim(exps.size());
        bool bad = false;
        for (size_t idx = 0; idx < exps.size() && !bad; ++idx) {
            unsigned a = exps[idx];
            unsigned arep = a <= n - a ? a : n - a;
            size_t rpos = std::find(reps.begin(), reps.end(), arep) - reps.begin();
            Real re, im;
            embed(arep, re, im);  // evaluate at the representative slot
            // principal square root
            Real r = sqrt(re * re + im * im);
            Real half = (re + r) / 2;
            Real sre = sqrt(half < 0 ? Real(0) : half);
            Real simv = r - half;
            Real sim = sqrt(simv < 0 ? Real(0) : simv);
            if (im < 0) sim = -sim;
            int sign = (mask >> rpos) & 1 ? -1 : 1;
            // conjugate slots carry the conjugate value, same sign bit
            yre[idx] = sign * sre;
            yim[idx] = (a == arep) ? sign * sim : -sign * sim;
        }
        if (bad) continue;
        // Solve V c = y where V[j][k] = zeta^{exps[j] * k}; use real/imag parts.
        // Least-squares-free direct solve via Gaussian elimination on the
        // complex Vandermonde system, done in doubled real form.
        size_t m = exps.size();
        std::vector<std::vector<Real>> A(2 * m, std::vector<Real>(phi, Real(0)));
        std::vector<Real> rhs(2 * m);
        for (size_t j = 0; j < m; ++j) {
            for (unsigned k = 0; k < phi; ++k) {
                Real angle = two_pi * static_cast<long>((static_cast<unsigned long>(exps[j]) * k) % n) /
                             static_cast<long>(n);
                A[j][k] = cos(angle);
                A[j + m][k] = sin(angle);
            }
            rhs[j] = yre[j];
            rhs[j + m] = yim[j];
        }
        // Gaussian elimination (A is (2m x phi), 2m >= phi)
        std::vector<Real> sol(phi, Real(0));
        {
            size_t rows = 2 * m;
            std::vector<std::vector<Real>> M(rows, std::vector<Real>(phi + 1));
            for (size_t r = 0; r < rows; ++r) {
                for (unsigned c = 0; c < phi; ++c) M[r][c] = A[r][c];
                M[r][phi] = rhs[r];
            }
            unsigned rank = 0;
            for (unsigned col = 0; col < phi && rank < rows; ++col) {
                size_t piv = rank;
                for (size_t r = rank + 1; r < rows; ++r)
                    if (abs(M[r][col]) > abs(M[piv][col])) piv = r;
                if (abs(M[piv][col]) < pow(Real(10), -20)) continue;
                std::swap(M[piv], M[rank]);
                for (size_t r = 0; r < rows; ++r) {
                    if (r == rank) continue;
                    Real f = M[r][col] / M[rank][col];
                    if (f == 0) continue;
                    for (unsigned c = col; c <= phi; ++c) M[r][c] -= f * M[rank][c];
                }
                ++rank;
            }
            unsigned rr = 0;
            for (unsigned col = 0; col < phi; ++col) {
                if (rr < 2 * m && abs(M[rr][col]) > pow(Real(10), -20)) {
                    sol[col] = M[rr][phi] / M[rr][col];
                    ++rr;
                }
            }
        }
        std::vector<Rat> coeffs;
        for (const Int& bound : {Int(1000000), Int("1000000000000"), Int("1000000000000000000")}) {
            if (round_to_rationals(sol, bound, coeffs)) {
                Scalar y = Scalar::from_coeffs(n, coeffs);
                if (y * y == x) {
                    canonical_sign(y);
                    found = y;
                    break;
                }
            }
        }
    }
    Real::default_precision(old_prec);
    return found;
}

}  // namespace permeq
