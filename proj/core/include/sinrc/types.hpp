#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sinrc {

/// SINR parameters of an instance. alpha is the path-loss exponent,
/// beta the decoding threshold, noise the ambient noise floor.
struct SinrParams {
    double alpha = 3.0;
    double beta = 1.0;
    double noise = 0.0;
};

/// Metric space the nodes live in: either Euclidean R^dim or an explicit
/// distance matrix. The doubling dimension is a user-declared parameter;
/// it is never verified (and only enters through function exponents).
class Metric {
public:
    enum class Kind { Euclidean, Matrix };

    /// doubling_dim <= 0 means "default to dim".
    static Metric euclidean(int dim, double doubling_dim = 0.0);

    /// Validates symmetry, zero diagonal and (unless check_triangle is off)
    /// the triangle inequality, all within relative tolerance 1e-9.
    static Metric matrix(std::vector<std::vector<double>> d, double doubling_dim,
                         bool check_triangle = true);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    double doubling_dim() const { return m_; }
    int node_count() const;

    /// Euclidean only. Exactly equal coordinate tuples are interned to the
    /// same node, so shared link endpoints compare at distance zero.
    int add_point(const std::vector<double>& p);

    double dist(int a, int b) const;

    /// Euclidean only.
    const std::vector<double>& point(int a) const;

    /// Matrix only.
    const std::vector<std::vector<double>>& matrix_data() const {
        if (kind_ != Kind::Matrix) throw std::logic_error("matrix_data() is matrix-only");
        return dmat_;
    }

private:
    Metric() = default;

    Kind kind_ = Kind::Euclidean;
    int dim_ = 0;
    double m_ = 0.0;
    std::vector<std::vector<double>> pts_;
    std::map<std::vector<double>, int> intern_;
    std::vector<std::vector<double>> dmat_;
};

struct Link {
    int id = 0;
    int sender = 0;
    int receiver = 0;
    double length = 0.0; // cached d(sender, receiver)
};

/// A set of links in a metric space plus SINR parameters. Immutable once
/// built (add_link during construction only); all queries are pure reads.
class LinkInstance {
public:
    LinkInstance(Metric metric, SinrParams sinr);

    /// Returns the position of the new link. Throws if the cached length
    /// would be zero or a node reference is invalid.
    int add_link(int id, int sender, int receiver, double weight = 1.0);

    const Metric& metric() const { return metric_; }
    const SinrParams& sinr() const { return sinr_; }
    int size() const { return static_cast<int>(links_.size()); }
    bool empty() const { return links_.empty(); }
    const Link& link(int i) const { return links_.at(i); }
    const std::vector<Link>& links() const { return links_; }
    double weight(int i) const { return weights_.at(i); }
    const std::vector<double>& weights() const { return weights_; }

    double dist(int a, int b) const { return metric_.dist(a, b); }

    /// d(i,j) = min over the four endpoint pairs; requires i != j.
    double link_dist(int i, int j) const;

    /// d_ij = d(s_i, r_j). Not symmetric; directed_dist(i,i) = l_i.
    double directed_dist(int i, int j) const;

    /// max length / min length. Throws on an empty instance.
    double delta() const;

    /// Strict total order on links: by length, ties broken by ascending id.
    bool shorter(int i, int j) const;

    /// Link positions sorted ascending under the tie-broken order.
    std::vector<int> length_order() const;

    std::vector<int> longer_set(int i) const;  // L_i^+
    std::vector<int> shorter_set(int i) const; // L_i^-

    /// Global invariants: unique ids, positive lengths, alpha in (2,6),
    /// alpha > doubling dimension, beta > 0, noise >= 0.
    void validate() const;

private:
    Metric metric_;
    SinrParams sinr_;
    std::vector<Link> links_;
    std::vector<double> weights_;
};

} // namespace sinrc
