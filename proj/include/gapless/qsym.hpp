// Formal sums in the fundamental quasisymmetric basis.
#pragma once

#include "gapless/combinatorics.hpp"
#include "gapless/tableau.hpp"

#include <map>
#include <string>

namespace gapless {

class QSymExpr {
public:
    using Terms = std::map<Composition, long long, CanonicalLess>;

    QSymExpr() = default;

    static QSymExpr fundamental(const Composition& a);

    long long coeff(const Composition& a) const;
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    QSymExpr& add_term(const Composition& a, long long c);
    QSymExpr& operator+=(const QSymExpr& o);

    bool operator==(const QSymExpr& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

QSymExpr fundamental(const Composition& a);
QSymExpr add(const QSymExpr& a, const QSymExpr& b);
QSymExpr scale(long long c, const QSymExpr& a);
bool eq(const QSymExpr& a, const QSymExpr& b);

inline QSymExpr operator+(const QSymExpr& a, const QSymExpr& b) { return add(a, b); }

// "2·F(1,1,1) + F(2,2)", or "0"
std::string to_string(const QSymExpr& e);

QSymExpr genomic_schur_component(const Partition& lambda, int m);
QSymExpr genomic_schur(const Partition& lambda);
QSymExpr schur_to_fundamental(const Partition& mu);

// The shapes mu with s_mu appearing at degree m; shapes that are not
// partitions are dropped.
std::vector<Partition> two_row_par(const Partition& lambda, int m);
QSymExpr two_row_expansion(const Partition& lambda);

}  // namespace gapless
