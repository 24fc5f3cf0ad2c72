#include "gfc/ff.hpp"

#include <algorithm>
#include <sstream>

namespace gfc {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Dense polynomials over F_p as residue vectors, constant term first.
// Used only for modulus bookkeeping inside this translation unit.
using PVec = std::vector<std::uint32_t>;

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on (a, p); p prime, a != 0 mod p
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

void trim(PVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int deg(const PVec& v) { return static_cast<int>(v.size()) - 1; }

PVec mul(const PVec& a, const PVec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    trim(r);
    return r;
}

// remainder of a modulo monic-leading b
PVec rem(PVec a, const PVec& b, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = mod_inverse(b.back(), p);
    while (deg(a) >= deg(b)) {
        std::uint32_t q = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a.back()) * lead_inv % p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(q) * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

PVec gcd(PVec a, PVec b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PVec r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PVec powmod_frobenius(const PVec& x, std::uint32_t p, const PVec& modulus) {
    // x^p mod modulus by square-and-multiply
    PVec result{1};
    PVec base = rem(x, modulus, p);
    std::uint32_t e = p;
    while (e > 0) {
        if (e & 1u) result = rem(mul(result, base, p), modulus, p);
        base = rem(mul(base, base, p), modulus, p);
        e >>= 1u;
    }
    return result;
}

// f monic of degree m >= 1: irreducible iff it shares no root with any
// extension of degree <= m/2, i.e. gcd(f, t^{p^i} - t) = 1 for i = 1..m/2.
bool is_irreducible(const PVec& f, std::uint32_t p) {
    int m = deg(f);
    if (m <= 0) return false;
    if (m == 1) return true;
    PVec frob{0, 1}; // t
    for (int i = 1; i <= m / 2; ++i) {
        frob = powmod_frobenius(frob, p, f);
        PVec diff = frob;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p; // t^{p^i} - t
        trim(diff);
        PVec g = gcd(f, diff, p);
        if (deg(g) != 0) return false;
    }
    return true;
}

PVec canonical_modulus(std::uint32_t p, std::uint32_t m) {
    // ascending integer encoding of the m lower coefficients; leading term fixed to 1
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
        PVec f(m + 1, 0);
        std::uint64_t e = enc;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(e % p);
            e /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) return f;
    }
    fail(errc::reducible_modulus, "no irreducible polynomial found (unreachable)");
}

} // namespace

Field make_field(std::uint32_t p, std::uint32_t m, const std::vector<std::uint32_t>& modulus) {
    if (!is_prime_u32(p)) fail(errc::not_prime, "characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) fail(errc::degree_mismatch, "extension degree must be >= 1");

    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->m = m;
    if (modulus.empty()) {
        spec->modulus = canonical_modulus(p, m);
    } else {
        PVec f;
        f.reserve(modulus.size());
        for (auto c : modulus) f.push_back(c % p);
        trim(f);
        if (deg(f) != static_cast<int>(m))
            fail(errc::degree_mismatch, "modulus degree " + std::to_string(deg(f)) +
                                            " != " + std::to_string(m));
        if (f.back() != 1) fail(errc::degree_mismatch, "modulus must be monic");
        if (!is_irreducible(f, p))
            fail(errc::reducible_modulus, "modulus is reducible over F_" + std::to_string(p));
        spec->modulus = f;
    }
    spec->order = 1;
    for (std::uint32_t i = 0; i < m; ++i) spec->order *= p;
    return spec;
}

Field parse_field(const std::string& text) {
    // "p^m:coeffs" or "p^m" or "p"
    std::string head = text, tail;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        head = text.substr(0, colon);
        tail = text.substr(colon + 1);
    }
    std::uint32_t p = 0, m = 1;
    auto caret = head.find('^');
    try {
        if (caret == std::string::npos) {
            p = static_cast<std::uint32_t>(std::stoul(head));
        } else {
            p = static_cast<std::uint32_t>(std::stoul(head.substr(0, caret)));
            m = static_cast<std::uint32_t>(std::stoul(head.substr(caret + 1)));
        }
    } catch (const std::exception&) {
        fail(errc::parse_error, "bad field description '" + text + "'");
    }
    std::vector<std::uint32_t> modulus;
    if (!tail.empty()) {
        std::stringstream ss(tail);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                modulus.push_back(static_cast<std::uint32_t>(std::stoul(item)));
            } catch (const std::exception&) {
                fail(errc::parse_error, "bad modulus coefficient '" + item + "'");
            }
        }
    }
    return make_field(p, m, modulus);
}

std::string field_to_string(const Field& f) {
    std::string s = std::to_string(f->p) + "^" + std::to_string(f->m) + ":";
    for (std::size_t i = 0; i < f->modulus.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f->modulus[i]);
    }
    return s;
}

FieldElement::FieldElement(Field field, std::vector<std::uint32_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (c_.size() > field_->m) fail(errc::degree_mismatch, "too many coefficients for element");
    c_.resize(field_->m, 0);
    for (auto& x : c_) x %= field_->p;
}

FieldElement FieldElement::zero(const Field& f) { return FieldElement(f, {}); }

FieldElement FieldElement::one(const Field& f) { return FieldElement(f, {1}); }

FieldElement FieldElement::from_encoding(const Field& f, std::uint64_t enc) {
    std::vector<std::uint32_t> c(f->m, 0);
    for (std::uint32_t i = 0; i < f->m; ++i) {
        c[i] = static_cast<std::uint32_t>(enc % f->p);
        enc /= f->p;
    }
    return FieldElement(f, std::move(c));
}

FieldElement FieldElement::from_int(const Field& f, std::uint64_t value) {
    return FieldElement(f, {static_cast<std::uint32_t>(value % f->p)});
}

std::uint64_t FieldElement::encoding() const {
    std::uint64_t e = 0;
    for (std::size_t i = c_.size(); i-- > 0;) e = e * field_->p + c_[i];
    return e;
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

void FieldElement::check_compatible(const FieldElement& o) const {
    if (!field_ || !o.field_) fail(errc::field_mismatch, "detached field element");
    if (field_ == o.field_) return;
    if (!field_->same_as(*o.field_))
        fail(errc::field_mismatch, "elements of " + field_to_string(field_) + " and " +
                                       field_to_string(o.field_));
}

FieldElement FieldElement::operator-() const {
    FieldElement r(*this);
    for (auto& x : r.c_) x = (field_->p - x) % field_->p;
    return r;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_compatible(o);
    FieldElement r(*this);
    for (std::uint32_t i = 0; i < field_->m; ++i) r.c_[i] = (r.c_[i] + o.c_[i]) % field_->p;
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_compatible(o);
    FieldElement r(*this);
    for (std::uint32_t i = 0; i < field_->m; ++i)
        r.c_[i] = (r.c_[i] + field_->p - o.c_[i]) % field_->p;
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_compatible(o);
    const std::uint32_t p = field_->p;
    const std::uint32_t m = field_->m;
    std::vector<std::uint64_t> acc(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        if (c_[i] == 0) continue;
        for (std::uint32_t j = 0; j < m; ++j)
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p;
    }
    // reduce degrees m..2m-2 by the monic modulus
    for (std::size_t d = 2 * m - 1; d-- > m;) {
        std::uint64_t top = acc[d];
        if (top == 0) continue;
        acc[d] = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
            std::uint64_t sub = top * field_->modulus[i] % p;
            acc[d - m + i] = (acc[d - m + i] + p - sub) % p;
        }
    }
    FieldElement r;
    r.field_ = field_;
    r.c_.resize(m);
    for (std::uint32_t i = 0; i < m; ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i]);
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
    // a^(q-2) = a^{-1}
    return pow(field_->order - 2);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_compatible(o);
    if (o.is_zero()) fail(errc::division_by_zero, "division by zero field element");
    return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_compatible(o);
    return c_ == o.c_;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement result = one(field_);
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

FieldElement FieldElement::frobenius() const { return pow(field_->p); }

FieldElement FieldElement::pth_root() const {
    // Frobenius has order m on F_{p^m}, so its inverse is the (m-1)-th power.
    FieldElement r = *this;
    for (std::uint32_t i = 0; i + 1 < field_->m; ++i) r = r.frobenius();
    return r;
}

std::string FieldElement::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    return s;
}

FieldElement parse_element(const Field& f, const std::string& text) {
    std::vector<std::uint32_t> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            c.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        } catch (const std::exception&) {
            fail(errc::parse_error, "bad element residue '" + item + "'");
        }
    }
    if (c.empty() || c.size() > f->m)
        fail(errc::parse_error, "element '" + text + "' needs 1.." + std::to_string(f->m) +
                                    " residues");
    return FieldElement(f, std::move(c));
}

FieldElement primitive_kth_root(const Field& f, std::uint32_t k) {
    if (k == 0) fail(errc::out_of_range, "k must be positive");
    if (k % f->p == 0)
        fail(errc::no_such_root, "k = " + std::to_string(k) + " is divisible by p");
    if ((f->order - 1) % k != 0)
        fail(errc::no_such_root, std::to_string(k) + " does not divide " +
                                     std::to_string(f->order - 1));
    for (std::uint64_t enc = 1; enc < f->order; ++enc) {
        FieldElement x = FieldElement::from_encoding(f, enc);
        FieldElement acc = x;
        bool early = false;
        for (std::uint32_t j = 1; j < k; ++j) {
            if (acc.is_one()) {
                early = true;
                break;
            }
            acc = acc * x;
        }
        if (!early && acc.is_one()) return x;
    }
    fail(errc::no_such_root, "no element of order " + std::to_string(k));
}

} // namespace gfc
