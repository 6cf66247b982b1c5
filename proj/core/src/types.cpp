#include "sinrc/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sinrc {

namespace {

constexpr double kRelTol = 1e-9;

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

} // namespace

Metric Metric::euclidean(int dim, double doubling_dim) {
    if (dim < 1) throw std::invalid_argument("euclidean metric needs dim >= 1");
    Metric m;
    m.kind_ = Kind::Euclidean;
    m.dim_ = dim;
    m.m_ = doubling_dim > 0.0 ? doubling_dim : static_cast<double>(dim);
    return m;
}

Metric Metric::matrix(std::vector<std::vector<double>> d, double doubling_dim,
                      bool check_triangle) {
    const std::size_t n = d.size();
    if (doubling_dim <= 0.0)
        throw std::invalid_argument("matrix metric requires a positive doubling dimension");
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i].size() != n) throw std::invalid_argument("distance matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (!finite_nonneg(d[i][j]))
                throw std::invalid_argument("distance matrix has NaN or negative entries");
            scale = std::max(scale, d[i][j]);
        }
        if (d[i][i] != 0.0) throw std::invalid_argument("distance matrix diagonal must be zero");
    }
    const double tol = kRelTol * std::max(scale, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(d[i][j] - d[j][i]) > tol)
                throw std::invalid_argument("distance matrix is not symmetric");
    if (check_triangle) {
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (d[i][j] > d[i][k] + d[k][j] + tol)
                        throw std::invalid_argument("distance matrix violates the triangle inequality");
    }
    Metric m;
    m.kind_ = Kind::Matrix;
    m.m_ = doubling_dim;
    m.dmat_ = std::move(d);
    return m;
}

int Metric::node_count() const {
    return kind_ == Kind::Euclidean ? static_cast<int>(pts_.size())
                                    : static_cast<int>(dmat_.size());
}

int Metric::add_point(const std::vector<double>& p) {
    if (kind_ != Kind::Euclidean)
        throw std::logic_error("add_point is only valid for euclidean metrics");
    if (static_cast<int>(p.size()) != dim_)
        throw std::invalid_argument("point dimension mismatch");
    for (double c : p)
        if (!std::isfinite(c)) throw std::invalid_argument("point coordinate is not finite");
    auto it = intern_.find(p);
    if (it != intern_.end()) return it->second;
    const int idx = static_cast<int>(pts_.size());
    pts_.push_back(p);
    intern_.emplace(p, idx);
    return idx;
}

double Metric::dist(int a, int b) const {
    const int n = node_count();
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("node index out of range");
    if (kind_ == Kind::Matrix) return dmat_[a][b];
    if (a == b) return 0.0;
    // Scaled norm: squaring raw differences overflows for the huge
    // coordinates the chain constructions produce.
    double scale = 0.0;
    for (int k = 0; k < dim_; ++k)
        scale = std::max(scale, std::abs(pts_[a][k] - pts_[b][k]));
    if (scale == 0.0) return 0.0;
    double s = 0.0;
    for (int k = 0; k < dim_; ++k) {
        const double t = (pts_[a][k] - pts_[b][k]) / scale;
        s += t * t;
    }
    return scale * std::sqrt(s);
}

const std::vector<double>& Metric::point(int a) const {
    if (kind_ != Kind::Euclidean) throw std::logic_error("point() is euclidean-only");
    return pts_.at(a);
}

LinkInstance::LinkInstance(Metric metric, SinrParams sinr)
    : metric_(std::move(metric)), sinr_(sinr) {}

int LinkInstance::add_link(int id, int sender, int receiver, double weight) {
    const double len = metric_.dist(sender, receiver);
    if (!(len > 0.0)) throw std::invalid_argument("link length must be positive");
    if (!(weight > 0.0) || !std::isfinite(weight))
        throw std::invalid_argument("link weight must be positive");
    links_.push_back(Link{id, sender, receiver, len});
    weights_.push_back(weight);
    return static_cast<int>(links_.size()) - 1;
}

double LinkInstance::link_dist(int i, int j) const {
    if (i == j) throw std::invalid_argument("link_dist requires i != j");
    const Link& a = links_.at(i);
    const Link& b = links_.at(j);
    const double dij = metric_.dist(a.sender, b.receiver);
    const double dji = metric_.dist(b.sender, a.receiver);
    const double dss = metric_.dist(a.sender, b.sender);
    const double drr = metric_.dist(a.receiver, b.receiver);
    return std::min(std::min(dij, dji), std::min(dss, drr));
}

double LinkInstance::directed_dist(int i, int j) const {
    return metric_.dist(links_.at(i).sender, links_.at(j).receiver);
}

double LinkInstance::delta() const {
    if (links_.empty()) throw std::invalid_argument("delta of an empty instance");
    double lo = links_[0].length, hi = links_[0].length;
    for (const Link& l : links_) {
        lo = std::min(lo, l.length);
        hi = std::max(hi, l.length);
    }
    return hi / lo;
}

bool LinkInstance::shorter(int i, int j) const {
    const Link& a = links_.at(i);
    const Link& b = links_.at(j);
    if (a.length != b.length) return a.length < b.length;
    return a.id < b.id;
}

std::vector<int> LinkInstance::length_order() const {
    std::vector<int> order(links_.size());
    for (int i = 0; i < size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [this](int a, int b) { return shorter(a, b); });
    return order;
}

std::vector<int> LinkInstance::longer_set(int i) const {
    if (links_.empty()) throw std::invalid_argument("longer_set of an empty instance");
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (j != i && shorter(i, j)) out.push_back(j);
    return out;
}

std::vector<int> LinkInstance::shorter_set(int i) const {
    if (links_.empty()) throw std::invalid_argument("shorter_set of an empty instance");
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (j != i && shorter(j, i)) out.push_back(j);
    return out;
}

void LinkInstance::validate() const {
    std::set<int> ids;
    for (const Link& l : links_) {
        if (!(l.length > 0.0)) throw std::invalid_argument("non-positive link length");
        if (!ids.insert(l.id).second) throw std::invalid_argument("duplicate link id");
        const int n = metric_.node_count();
        if (l.sender < 0 || l.sender >= n || l.receiver < 0 || l.receiver >= n)
            throw std::invalid_argument("link references an invalid node");
    }
    if (!(sinr_.alpha > 2.0 && sinr_.alpha < 6.0))
        throw std::invalid_argument("alpha must lie in (2, 6)");
    if (!(sinr_.alpha > metric_.doubling_dim()))
        throw std::invalid_argument("fading metric requires alpha > doubling dimension");
    if (!(sinr_.beta > 0.0)) throw std::invalid_argument("beta must be positive");
    if (!(sinr_.noise >= 0.0)) throw std::invalid_argument("noise must be nonnegative");
}

} // namespace sinrc
