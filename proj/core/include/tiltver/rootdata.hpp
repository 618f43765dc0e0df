#ifndef TILTVER_ROOTDATA_HPP
#define TILTVER_ROOTDATA_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiltver/errors.hpp"

namespace tiltver {

constexpr int kMaxRank = 4;

/// Integer weight in fundamental-weight (omega) coordinates.
struct Weight {
    int n = 0;
    std::array<int, kMaxRank> c{};

    Weight() = default;
    Weight(std::initializer_list<int> xs);
    static Weight zero(int rank);

    int operator[](int i) const { return c[static_cast<size_t>(i)]; }
    int& operator[](int i) { return c[static_cast<size_t>(i)]; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(int k) const;
    bool operator==(const Weight& o) const { return n == o.n && c == o.c; }
    bool operator!=(const Weight& o) const { return !(*this == o); }

    bool is_zero() const;
    std::string str() const; // "a,b"
};

Weight parse_weight(const std::string& text, int rank);

/// Lexicographic packing: coordinate 0 in the most significant 16 bits, each
/// offset by 0x8000 so unsigned comparison matches lexicographic order.
std::uint64_t lex_pack(const Weight& w);
Weight lex_unpack(std::uint64_t key, int rank);

struct WeightHash {
    std::size_t operator()(std::uint64_t k) const noexcept {
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        k *= 0xc4ceb9fe1a85ec53ULL;
        k ^= k >> 33;
        return static_cast<std::size_t>(k);
    }
};

/// Lattice automorphism in omega coordinates.
struct Mat {
    std::array<std::array<int, kMaxRank>, kMaxRank> m{};
    static Mat identity(int rank);
    bool operator==(const Mat& o) const { return m == o.m; }
};

/// Sort key for the fixed total order: height against the sum of positive
/// coroots first, then lexicographic on omega coordinates.  Refines the
/// dominance order of the (sub)system the key was built for.
struct OrdKey {
    long long f = 0;
    std::uint64_t lex = 0;
    auto operator<=>(const OrdKey&) const = default;
};

struct PosRoot {
    Weight omega;                            // root in omega coordinates
    std::array<int, kMaxRank> root_c{};      // simple-root coordinates
    std::array<int, kMaxRank> coroot_c{};    // coroot in simple-coroot coordinates
};

class RootDatum;

/// View of a root subsystem generated by a subset J of the simple roots.
/// The full datum is the view with J = all simple indices.  Weights stay in
/// the ambient lattice; only the reflection group and positive roots shrink.
struct RootView {
    const RootDatum* rd = nullptr;
    std::vector<int> J;                  // 0-based simple indices, sorted
    std::vector<int> pos_idx;            // indices into rd->positive
    std::vector<Mat> W;                  // subgroup elements, W[0] = id
    std::vector<int> det;
    int w0_idx = 0;                      // longest element of the subgroup
    std::array<long long, kMaxRank> fvec{}; // sum of positive coroots of the view
    bool full = false;

    int rank() const;
    long long height(const Weight& w) const; // <w, sum of view positive coroots>
    OrdKey order_key(const Weight& w) const { return OrdKey{height(w), lex_pack(w)}; }
    bool dominant(const Weight& w) const;         // on J
    bool restricted(const Weight& w, long long bound) const; // coords on J in [0,bound)
    std::vector<Weight> orbit(const Weight& w) const;
    Weight longest_apply(const Weight& w) const;  // w_{J,0} w
};

/// Immutable root-system database for a finite type of rank <= 4.
class RootDatum {
  public:
    static RootDatum build(char type, int rank); // UnsupportedTypeError

    const std::string& label() const { return label_; }
    char type() const { return type_; }
    int rank() const { return rank_; }
    int cartan(int i, int j) const { return cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    Weight simple_root(int j) const;
    const std::vector<PosRoot>& positive() const { return positive_; }
    const PosRoot& alpha0() const { return positive_[static_cast<size_t>(alpha0_idx_)]; }
    long long coxeter_number() const { return h_; }
    const Weight& rho() const { return rho_; }

    const std::vector<Mat>& weyl() const { return W_; }
    int weyl_det(int i) const { return det_[static_cast<size_t>(i)]; }
    int weyl_order() const { return static_cast<int>(W_.size()); }
    int w0_index() const { return w0_idx_; }

    Weight apply(const Mat& w, const Weight& lam) const;
    Weight apply(int widx, const Weight& lam) const { return apply(W_[static_cast<size_t>(widx)], lam); }
    Weight w0_apply(const Weight& lam) const { return apply(w0_idx_, lam); }
    Weight minus_w0(const Weight& lam) const { return -w0_apply(lam); }
    Weight simple_reflect(int j, const Weight& lam) const;

    /// w.(lam) = w(lam + rho) - rho
    Weight dot(int widx, const Weight& lam) const;

    long long pair(const Weight& lam, const std::array<int, kMaxRank>& coroot_c) const;
    long long pair(const Weight& lam, const PosRoot& beta) const { return pair(lam, beta.coroot_c); }
    long long pair_alpha0(const Weight& lam) const { return pair(lam, alpha0()); }

    bool dominant(const Weight& lam) const;
    bool restricted(const Weight& lam, long long bound) const; // all coords in [0,bound)

    std::vector<Weight> weyl_orbit(const Weight& lam) const;

    /// Exact simple-root coordinates of a lattice vector, if integral.
    std::optional<std::array<long long, kMaxRank>> root_coords(const Weight& v) const;
    /// mu <= lam in the dominance order: lam - mu a nonnegative integer
    /// combination of simple roots.
    bool leq_dominance(const Weight& mu, const Weight& lam) const;

    const RootView& full_view() const { return full_view_; }
    RootView view(std::vector<int> J) const;

    /// Weights of X_1 = p-restricted weights, ascending in the total order.
    std::vector<Weight> restricted_weights(long long p) const;

    void check_weight(const Weight& w) const;

  private:
    RootDatum() = default;
    void finish(); // derive roots, W, rho, alpha0, h from the Cartan matrix

    std::string label_;
    char type_ = 0;
    int rank_ = 0;
    std::array<std::array<int, kMaxRank>, kMaxRank> cartan_{};
    std::vector<PosRoot> positive_;
    int alpha0_idx_ = 0;
    long long h_ = 0;
    Weight rho_;
    std::vector<Mat> W_;
    std::vector<int> det_;
    int w0_idx_ = 0;
    RootView full_view_;
};

} // namespace tiltver

#endif
