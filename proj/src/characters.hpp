#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "error.hpp"

namespace llc {

// A declared label group: the square-class characters eta2, eta2' (with eta = eta2 * eta2')
// times one cyclic factor per user label. Order 0 means infinite ("generic").
struct UserLabel {
    std::string name;
    long order = 0;
    bool unramified = false;
};

class LabelGroup {
public:
    explicit LabelGroup(std::vector<UserLabel> labels = {});

    size_t rank() const { return 2 + labels_.size(); }
    long generator_order(size_t i) const;
    bool generator_unramified(size_t i) const;
    const std::vector<UserLabel>& labels() const { return labels_; }
    int find(const std::string& name) const;  // user label index or -1
    long id() const { return id_; }

private:
    std::vector<UserLabel> labels_;
    long id_;
};

using LabelGroupPtr = std::shared_ptr<const LabelGroup>;

LabelGroupPtr standard_label_group();
LabelGroupPtr declare_label_group(std::vector<UserLabel> labels);

class SmoothChar {
public:
    SmoothChar();  // trivial character in the standard group
    explicit SmoothChar(LabelGroupPtr g);

    static SmoothChar nu(const mpq_class& e, LabelGroupPtr g = nullptr);
    static SmoothChar named(const std::string& label, LabelGroupPtr g = nullptr);
    static SmoothChar parse(const std::string& text, LabelGroupPtr g = nullptr);

    const mpq_class& nu_exp() const { return nu_; }
    const std::vector<long>& tame() const { return tame_; }
    const LabelGroupPtr& group() const { return group_; }

    SmoothChar operator*(const SmoothChar& o) const;
    SmoothChar inv() const;
    SmoothChar pow(long n) const;
    SmoothChar shift(const mpq_class& e) const;  // times nu^e
    SmoothChar unitary_part() const;
    bool operator==(const SmoothChar& o) const;
    bool operator!=(const SmoothChar& o) const { return !(*this == o); }

    bool is_trivial() const;
    bool is_unitary() const { return nu_ == 0; }
    long order() const;  // 0 for infinite
    bool is_unramified() const;
    long unit_order() const;  // order of the restriction to units, 0 for infinite
    bool same_on_units(const SmoothChar& o) const;
    std::string str() const;

    // Values on the square classes 1, eps, varpi, eps*varpi (p odd); only for characters whose
    // square is trivial and whose tame part lives in the eta2/eta2' block.
    int value_on_square_class(const std::string& cls) const;

private:
    void check_same(const SmoothChar& o) const;
    mpq_class nu_;
    std::vector<long> tame_;
    LabelGroupPtr group_;
};

enum class CharOp { Mul, Inv, Eq };

struct CharOpResult {
    bool is_bool = false;
    bool value = false;
    SmoothChar chr;
};

CharOpResult char_op(const SmoothChar& a, const SmoothChar& b, CharOp op);
mpq_class e_of(const SmoothChar& c);
long order_of(const SmoothChar& c);

struct SupercuspidalLabel {
    std::string group;  // GL2, GSp2, Sp2, ...
    std::string id;
    SmoothChar central;
    bool self_dual = false;
    mpq_class depth = 0;
    std::vector<std::string> f_sigma;      // square classes fixing sigma, Sp2 only
    std::vector<SmoothChar> twist_stable;  // order-2 characters xi with xi*rho = rho, GSp2 only

    void validate() const;
};

}  // namespace llc
