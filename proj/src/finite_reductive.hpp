#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfield.hpp"

namespace llc {

enum class FiniteFamily { GSp4, Sp4, GSp22, Sp2xSp2, SL2, SOodd, SOplus, SOminus, GL, U, O2plus, O2minus };

struct FiniteGroupLabel {
    FiniteFamily family;
    int n = 0;  // rank parameter where meaningful

    std::string name() const;
    QHalf order() const;
    int dimension() const;
    int positive_roots() const;
};

FiniteGroupLabel parse_finite_label(const std::string& s);
QHalf group_order(const FiniteGroupLabel& g);

struct UnipotentCuspidal {
    bool exists = false;
    std::optional<QHalf> dimension;
};

UnipotentCuspidal has_unipotent_cuspidal(const FiniteGroupLabel& g);

struct CuspidalClass {
    std::string ambient;
    std::string series;     // eigenvalue pattern of the semisimple class
    std::string condition;  // membership condition, kept symbolic
    std::optional<QHalf> class_count;
    int members_per_class = 1;
    std::vector<std::string> enhancements;
    std::optional<QHalf> member_dimension;
    bool unipotent = false;
    bool singular = false;
    std::string name;
};

std::vector<CuspidalClass> cuspidal_classes(const FiniteGroupLabel& g);

// (lambda1, lambda2) is the canonical notation; the other spelling is an alias.
std::vector<std::pair<std::string, std::string>> cuspidal_notation_aliases();

}  // namespace llc
