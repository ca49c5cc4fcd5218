#include "graphrank/synthetic.hpp"

#include <cmath>
#include <fstream>
#include <random>

#include "graphrank/errors.hpp"
#include "graphrank/io.hpp"

namespace graphrank {

namespace {

constexpr int kDims = 5;

// Box-Muller over mt19937_64. std::normal_distribution is implementation
// defined, which would make "same seed, same bytes" hold only per stdlib.
class NormalSource {
public:
    explicit NormalSource(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform_open();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    // (0, 1]: 53 random mantissa bits, shifted away from zero for the log.
    double uniform_open() {
        const std::uint64_t bits = rng_() >> 11;
        return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace

SyntheticData gen_synthetic(int n_per_cluster, int n_clusters, double separation,
                            std::uint64_t rng_seed) {
    if (n_per_cluster < 1 || n_clusters < 1) {
        throw ValidationError("cluster counts must be at least 1");
    }
    if (!(separation >= 0.0) || !std::isfinite(separation)) {
        throw ValidationError("separation must be a non-negative finite number");
    }

    const Eigen::Index n = static_cast<Eigen::Index>(n_per_cluster) * n_clusters;
    SyntheticData data;
    data.features.resize(n, kDims);
    data.labels.reserve(static_cast<std::size_t>(n));

    NormalSource normals(rng_seed);
    Eigen::Index row = 0;
    for (int c = 0; c < n_clusters; ++c) {
        const double center = separation * c;  // cluster means along the first axis
        for (int p = 0; p < n_per_cluster; ++p, ++row) {
            data.features(row, 0) = center + normals.next();
            for (int f = 1; f < kDims; ++f) {
                data.features(row, f) = normals.next();
            }
            data.labels.push_back(c);
        }
    }
    return data;
}

void write_features_csv(const std::string& path, const FeatureMatrix& X) {
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot open output file " + path);
    }
    for (Eigen::Index r = 0; r < X.rows(); ++r) {
        for (Eigen::Index c = 0; c < X.cols(); ++c) {
            if (c > 0) out << ',';
            out << format_double(X(r, c));
        }
        out << '\n';
    }
}

void write_labels(const std::string& path, const std::vector<int>& labels) {
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot open output file " + path);
    }
    for (int label : labels) {
        out << label << '\n';
    }
}

}  // namespace graphrank
