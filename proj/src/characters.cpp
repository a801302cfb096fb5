#include "characters.hpp"

#include <atomic>
#include <cctype>
#include <numeric>

namespace llc {

namespace {
std::atomic<long> next_group_id{1};

long mod(long a, long m) { return m == 0 ? a : ((a % m) + m) % m; }

long lcm0(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

long cyclic_order(long e, long n) {
    if (n == 0) return e == 0 ? 1 : 0;
    return n / std::gcd(mod(e, n), n);
}
}  // namespace

LabelGroup::LabelGroup(std::vector<UserLabel> labels) : labels_(std::move(labels)), id_(next_group_id++) {
    for (auto& l : labels_) {
        if (l.name.empty() || l.name == "nu" || l.name == "1" || l.name == "eta" || l.name == "eta2" ||
            l.name == "eta2'")
            fail(Errc::InvalidOperand, "label name '" + l.name + "' is reserved");
        if (l.order < 0) fail(Errc::InvalidOperand, "negative order for label " + l.name);
    }
}

long LabelGroup::generator_order(size_t i) const { return i < 2 ? 2 : labels_[i - 2].order; }

bool LabelGroup::generator_unramified(size_t i) const { return i < 2 ? false : labels_[i - 2].unramified; }

int LabelGroup::find(const std::string& name) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i].name == name) return static_cast<int>(i);
    return -1;
}

LabelGroupPtr standard_label_group() {
    static LabelGroupPtr g = std::make_shared<const LabelGroup>();
    return g;
}

LabelGroupPtr declare_label_group(std::vector<UserLabel> labels) {
    return std::make_shared<const LabelGroup>(std::move(labels));
}

SmoothChar::SmoothChar() : SmoothChar(standard_label_group()) {}

SmoothChar::SmoothChar(LabelGroupPtr g) : nu_(0), group_(g ? g : standard_label_group()) {
    tame_.assign(group_->rank(), 0);
}

SmoothChar SmoothChar::nu(const mpq_class& e, LabelGroupPtr g) {
    SmoothChar c(g);
    c.nu_ = e;
    c.nu_.canonicalize();  // callers may pass mpq_class(a, b) unreduced
    return c;
}

SmoothChar SmoothChar::named(const std::string& label, LabelGroupPtr g) {
    SmoothChar c(g);
    if (label == "1") return c;
    if (label == "eta") {
        c.tame_[0] = c.tame_[1] = 1;
    } else if (label == "eta2") {
        c.tame_[0] = 1;
    } else if (label == "eta2'") {
        c.tame_[1] = 1;
    } else {
        int i = c.group_->find(label);
        if (i < 0) fail(Errc::NeedsDeclaration, "label '" + label + "' is not declared in the session");
        c.tame_[2 + i] = mod(1, c.group_->generator_order(2 + i));
    }
    return c;
}

namespace {

class CharParser {
public:
    CharParser(const std::string& s, LabelGroupPtr g) : s_(s), g_(g) {}

    SmoothChar run() {
        skip();
        if (pos_ == s_.size()) error("empty character");
        SmoothChar acc = factor();
        for (;;) {
            skip();
            if (pos_ == s_.size()) return acc;
            if (s_[pos_] != '*') error("expected '*'");
            ++pos_;
            acc = acc * factor();
        }
    }

private:
    [[noreturn]] void error(const std::string& msg) {
        fail(Errc::InvalidOperand, "cannot parse character '" + s_ + "': " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    long integer() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected integer");
        return std::stol(s_.substr(start, pos_ - start));
    }
    mpq_class exponent() {
        skip();
        bool braced = pos_ < s_.size() && (s_[pos_] == '{' || s_[pos_] == '(');
        char close = 0;
        if (braced) {
            close = s_[pos_] == '{' ? '}' : ')';
            ++pos_;
        }
        skip();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        mpq_class e(integer());
        skip();
        if (braced && pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            long d = integer();
            if (d == 0) error("zero denominator");
            e /= d;
        }
        if (braced) {
            skip();
            if (pos_ >= s_.size() || s_[pos_] != close) error("unclosed exponent");
            ++pos_;
        }
        e.canonicalize();
        return neg ? mpq_class(-e) : e;
    }
    SmoothChar factor() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        if (name.empty()) error("expected a label");
        skip();
        mpq_class e = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            e = exponent();
        }
        if (name == "nu") return SmoothChar::nu(e, g_);
        if (e.get_den() != 1) error("fractional power of a tame label");
        return SmoothChar::named(name, g_).pow(e.get_num().get_si());
    }

    const std::string& s_;
    LabelGroupPtr g_;
    size_t pos_ = 0;
};

}  // namespace

SmoothChar SmoothChar::parse(const std::string& text, LabelGroupPtr g) { return CharParser(text, g).run(); }

void SmoothChar::check_same(const SmoothChar& o) const {
    if (group_ != o.group_) fail(Errc::LabelGroupMismatch, "characters come from different label groups");
}

SmoothChar SmoothChar::operator*(const SmoothChar& o) const {
    check_same(o);
    SmoothChar r(*this);
    r.nu_ += o.nu_;
    for (size_t i = 0; i < tame_.size(); ++i) r.tame_[i] = mod(tame_[i] + o.tame_[i], group_->generator_order(i));
    return r;
}

SmoothChar SmoothChar::inv() const {
    SmoothChar r(*this);
    r.nu_ = -nu_;
    for (size_t i = 0; i < tame_.size(); ++i) r.tame_[i] = mod(-tame_[i], group_->generator_order(i));
    return r;
}

SmoothChar SmoothChar::pow(long n) const {
    SmoothChar r(*this);
    r.nu_ = nu_ * n;
    for (size_t i = 0; i < tame_.size(); ++i) r.tame_[i] = mod(tame_[i] * n, group_->generator_order(i));
    return r;
}

SmoothChar SmoothChar::shift(const mpq_class& e) const {
    SmoothChar r(*this);
    mpq_class x(e);
    x.canonicalize();
    r.nu_ += x;
    return r;
}

SmoothChar SmoothChar::unitary_part() const {
    SmoothChar r(*this);
    r.nu_ = 0;
    return r;
}

bool SmoothChar::operator==(const SmoothChar& o) const {
    check_same(o);
    return nu_ == o.nu_ && tame_ == o.tame_;
}

bool SmoothChar::is_trivial() const {
    if (nu_ != 0) return false;
    for (long t : tame_)
        if (t != 0) return false;
    return true;
}

long SmoothChar::order() const {
    if (nu_ != 0) return 0;
    long o = 1;
    for (size_t i = 0; i < tame_.size(); ++i) o = lcm0(o, cyclic_order(tame_[i], group_->generator_order(i)));
    return o;
}

bool SmoothChar::is_unramified() const { return unit_order() == 1; }

long SmoothChar::unit_order() const {
    // eta = eta2 * eta2' is unramified, so the eta2/eta2' block restricts to units through a + b mod 2
    long o = ((tame_[0] + tame_[1]) % 2 == 0) ? 1 : 2;
    for (size_t i = 2; i < tame_.size(); ++i) {
        if (group_->generator_unramified(i)) continue;
        o = lcm0(o, cyclic_order(tame_[i], group_->generator_order(i)));
    }
    return o;
}

bool SmoothChar::same_on_units(const SmoothChar& o) const {
    check_same(o);
    return (*this * o.inv()).is_unramified();
}

std::string SmoothChar::str() const {
    std::vector<std::string> parts;
    if (nu_ != 0) {
        if (nu_ == 1)
            parts.push_back("nu");
        else
            parts.push_back("nu^{" + nu_.get_str() + "}");
    }
    if (tame_[0] && tame_[1])
        parts.push_back("eta");
    else if (tame_[0])
        parts.push_back("eta2");
    else if (tame_[1])
        parts.push_back("eta2'");
    for (size_t i = 2; i < tame_.size(); ++i) {
        if (tame_[i] == 0) continue;
        std::string n = group_->labels()[i - 2].name;
        parts.push_back(tame_[i] == 1 ? n : n + "^" + std::to_string(tame_[i]));
    }
    if (parts.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
    return s;
}

int SmoothChar::value_on_square_class(const std::string& cls) const {
    if (nu_ != 0) fail(Errc::InvalidOperand, "square-class values need a unitary character");
    for (size_t i = 2; i < tame_.size(); ++i)
        if (tame_[i] != 0)
            fail(Errc::NeedsDeclaration,
                 "values of label '" + group_->labels()[i - 2].name + "' on square classes are not declared");
    // eta2(eps) = -1, eta2(varpi) = 1; eta2'(eps) = -1, eta2'(varpi) = -1
    int eps = 1, varpi = 1;
    if (tame_[0]) eps = -eps;
    if (tame_[1]) {
        eps = -eps;
        varpi = -varpi;
    }
    if (cls == "1") return 1;
    if (cls == "eps") return eps;
    if (cls == "varpi") return varpi;
    if (cls == "eps*varpi") return eps * varpi;
    fail(Errc::InvalidOperand, "unknown square class '" + cls + "'");
}

CharOpResult char_op(const SmoothChar& a, const SmoothChar& b, CharOp op) {
    CharOpResult r;
    switch (op) {
        case CharOp::Mul: r.chr = a * b; break;
        case CharOp::Inv: r.chr = a.inv(); break;
        case CharOp::Eq:
            r.is_bool = true;
            r.value = (a == b);
            break;
    }
    return r;
}

mpq_class e_of(const SmoothChar& c) { return c.nu_exp(); }

long order_of(const SmoothChar& c) { return c.order(); }

void SupercuspidalLabel::validate() const {
    if (self_dual && central.order() != 1 && central.order() != 2 && (group == "GL2"))
        fail(Errc::InvalidOperand, "self-dual supercuspidal " + id + " needs a central character of order dividing 2");
    if (depth < 0) fail(Errc::InvalidOperand, "negative depth for " + id);
}

}  // namespace llc
