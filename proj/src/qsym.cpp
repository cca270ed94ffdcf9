#include "gapless/qsym.hpp"

#include <algorithm>
#include <sstream>

namespace gapless {

QSymExpr QSymExpr::fundamental(const Composition& a) {
    QSymExpr e;
    e.add_term(a, 1);
    return e;
}

long long QSymExpr::coeff(const Composition& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? 0 : it->second;
}

QSymExpr& QSymExpr::add_term(const Composition& a, long long c) {
    if (c == 0)
        return *this;
    long long& slot = terms_[a];
    slot += c;
    if (slot == 0)
        terms_.erase(a);
    return *this;
}

QSymExpr& QSymExpr::operator+=(const QSymExpr& o) {
    for (auto& [a, c] : o.terms_)
        add_term(a, c);
    return *this;
}

QSymExpr fundamental(const Composition& a) { return QSymExpr::fundamental(a); }

QSymExpr add(const QSymExpr& a, const QSymExpr& b) {
    QSymExpr r = a;
    r += b;
    return r;
}

QSymExpr scale(long long c, const QSymExpr& a) {
    QSymExpr r;
    for (auto& [k, v] : a.terms())
        r.add_term(k, c * v);
    return r;
}

bool eq(const QSymExpr& a, const QSymExpr& b) { return a == b; }

std::string to_string(const QSymExpr& e) {
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [a, c] : e.terms()) {
        long long mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1)
            os << mag << "·";
        os << "F" << to_string(a);
        first = false;
    }
    return os.str();
}

QSymExpr genomic_schur_component(const Partition& lambda, int m) {
    QSymExpr e;
    for (auto& t : enumerate_iglt(lambda, m))
        e.add_term(descent_composition(t), 1);
    return e;
}

QSymExpr genomic_schur(const Partition& lambda) {
    QSymExpr e;
    for (int m = 1; m <= lambda.size(); ++m)
        e += genomic_schur_component(lambda, m);
    return e;
}

QSymExpr schur_to_fundamental(const Partition& mu) {
    int n = mu.size();
    QSymExpr e;
    if (n == 0) {
        e.add_term(Composition(), 1);
        return e;
    }
    for (auto& t : enumerate_iglt(mu, n)) {
        std::vector<int> row_of(n + 1);
        for (Cell b : t.cells())
            row_of[t.at(b)] = b.row;
        std::set<int> des;
        for (int i = 1; i < n; ++i)
            if (row_of[i + 1] > row_of[i])
                des.insert(i);
        e.add_term(comp_of_set(des, n), 1);
    }
    return e;
}

static bool as_partition(std::vector<int> parts, Partition& out) {
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] < 1)
            return false;
        if (k && parts[k] > parts[k - 1])
            return false;
    }
    out = Partition(parts);
    return true;
}

std::vector<Partition> two_row_par(const Partition& lambda, int m) {
    if (lambda.length() > 2)
        throw Error("two_row_par: shape has more than two rows");
    int n = lambda.size();
    int l1 = lambda.row(1), l2 = lambda.row(2);
    int lo = std::max(l1, l2 + 1);
    if (m < lo || m > n)
        return {};
    if (m == n)
        return {lambda};
    int k = n - m;
    std::vector<std::vector<int>> candidates;
    if (l1 == l2) {
        std::vector<int> a{l1 - k, l1 - k};
        a.insert(a.end(), k, 1);
        candidates.push_back(a);
    } else {
        std::vector<int> a{l1 - k, l2 - k};
        a.insert(a.end(), k, 1);
        std::vector<int> b{l1 - k, l2 - k + 1};
        b.insert(b.end(), k - 1, 1);
        candidates.push_back(a);
        candidates.push_back(b);
    }
    std::vector<Partition> out;
    for (auto& c : candidates) {
        Partition p;
        if (as_partition(c, p))
            out.push_back(p);
    }
    return out;
}

QSymExpr two_row_expansion(const Partition& lambda) {
    if (lambda.length() > 2)
        throw Error("two_row_expansion: shape has more than two rows");
    QSymExpr e;
    for (int m = 1; m <= lambda.size(); ++m)
        for (auto& mu : two_row_par(lambda, m))
            e += schur_to_fundamental(mu);
    return e;
}

}  // namespace gapless
