#include "tlacalc/poly.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace tlacalc {

namespace {

std::atomic<int> g_degree_cap{6};

int monomial_degree(const Monomial& m)
{
    int d = 0;
    for (auto e : m)
        d += e;
    return d;
}

} // namespace

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    auto is_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size())
            return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    if (den[0] == '+')
        den.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

DegreeCapExceeded::DegreeCapExceeded(int requested, int cap)
    : std::runtime_error("polynomial degree " + std::to_string(requested) + " exceeds degree cap " +
                         std::to_string(cap)),
      requested_(requested), cap_(cap)
{
}

int degree_cap() noexcept { return g_degree_cap.load(std::memory_order_relaxed); }
void set_degree_cap(int cap) noexcept { g_degree_cap.store(cap, std::memory_order_relaxed); }

Poly::Poly(long constant)
{
    if (constant != 0)
        terms_.emplace(Monomial{}, Rational(constant));
}

Poly::Poly(const Rational& constant)
{
    if (constant != 0)
        terms_.emplace(Monomial{}, constant);
}

Poly Poly::var(std::size_t index)
{
    if (index >= kMaxVars)
        throw std::out_of_range("variable index " + std::to_string(index) + " out of range");
    Monomial m{};
    m[index] = 1;
    return term(m, Rational(1));
}

Poly Poly::term(const Monomial& m, const Rational& coeff)
{
    Poly p;
    p.add_term(m, coeff);
    return p;
}

bool Poly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational Poly::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const noexcept
{
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, monomial_degree(m));
    return d;
}

std::size_t Poly::num_vars() const noexcept
{
    std::size_t n = 0;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (m[i] != 0)
                n = std::max(n, i + 1);
    return n;
}

void Poly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly Poly::derivative(std::size_t var) const
{
    Poly out;
    if (var >= kMaxVars)
        return out;
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0)
            continue;
        Monomial dm = m;
        --dm[var];
        out.add_term(dm, c * static_cast<long>(m[var]));
    }
    return out;
}

Poly Poly::restrict_to_zero(std::size_t first, std::size_t last) const
{
    Poly out;
    for (const auto& [m, c] : terms_) {
        bool vanishes = false;
        for (std::size_t i = first; i < last && i < kMaxVars; ++i)
            if (m[i] != 0)
                vanishes = true;
        if (!vanishes)
            out.terms_.emplace(m, c);
    }
    return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const
{
    Poly out;
    for (const auto& [m, c] : terms_) {
        Monomial kept{};
        Poly t(c);
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (m[i] == 0)
                continue;
            if (i >= images.size()) {
                kept[i] = m[i];
                continue;
            }
            for (int e = 0; e < m[i]; ++e)
                t *= images[i];
        }
        out += t * Poly::term(kept, Rational(1));
    }
    return out;
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& other)
{
    *this = *this * other;
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly out;
    if (a.is_zero() || b.is_zero())
        return out;
    // Over a domain the leading forms cannot cancel, so the degree is exact.
    int deg = a.total_degree() + b.total_degree();
    int cap = degree_cap();
    if (cap > 0 && deg > cap)
        throw DegreeCapExceeded(deg, cap);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (std::size_t i = 0; i < kMaxVars; ++i) {
                unsigned e = unsigned(ma[i]) + unsigned(mb[i]);
                if (e > 255)
                    throw std::overflow_error("monomial exponent overflow");
                m[i] = static_cast<std::uint8_t>(e);
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        bool neg = c < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool has_var = m != Monomial{};
        bool wrote = false;
        if (!has_var || mag != 1) {
            os << tlacalc::to_string(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (m[i] == 0)
                continue;
            if (wrote)
                os << '*';
            os << 'x' << (i + 1);
            if (m[i] > 1)
                os << '^' << unsigned(m[i]);
            wrote = true;
        }
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Poly parse()
    {
        Poly p = sum();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + " in '" +
                                    std::string(text_) + "': " + what);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char ch)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    unsigned exponent()
    {
        if (!accept('^'))
            return 1;
        return static_cast<unsigned>(std::stoul(digits()));
    }

    static Poly power(const Poly& p, unsigned e)
    {
        Poly out(1L);
        for (unsigned i = 0; i < e; ++i)
            out = out * p;
        return out;
    }

    Poly sum()
    {
        Poly out;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Poly t = product();
        out += neg ? -t : t;
        for (;;) {
            if (accept('+'))
                out += product();
            else if (accept('-'))
                out -= product();
            else
                break;
        }
        return out;
    }

    Poly product()
    {
        Poly out = factor();
        while (accept('*'))
            out = out * factor();
        return out;
    }

    Poly factor()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            Poly inner = sum();
            if (!accept(')'))
                fail("expected ')'");
            return power(inner, exponent());
        }
        if (ch == 'x') {
            ++pos_;
            unsigned long idx = std::stoul(digits());
            if (idx == 0 || idx > kMaxVars)
                fail("variable index out of range");
            return power(Poly::var(idx - 1), exponent());
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num = digits();
            std::string den = "1";
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                den = digits();
            }
            Rational q = parse_rational(num + "/" + den);
            return power(Poly(q), exponent());
        }
        fail(std::string("unexpected '") + ch + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

} // namespace tlacalc
