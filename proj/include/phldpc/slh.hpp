// Copyright 2026 The phldpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "phldpc/errors.hpp"

namespace phldpc::slh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Sorted labels of the two-level subsystems an operator acts on. The first
/// label is the most significant bit of the basis index.
using Space = std::vector<int>;

inline Space space_union(const Space &a, const Space &b) {
    Space out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline size_t space_dim(const Space &s) { return size_t{1} << s.size(); }

/// Bit of `label` inside basis index `idx` of `space`.
inline int label_bit(const Space &space, int label, size_t idx) {
    const auto it = std::lower_bound(space.begin(), space.end(), label);
    if (it == space.end() || *it != label) {
        throw ParameterError("label_bit: label " + std::to_string(label) + " not in space");
    }
    const size_t pos = static_cast<size_t>(it - space.begin());
    return static_cast<int>((idx >> (space.size() - 1 - pos)) & 1u);
}

/// Embeds a matrix acting on `from` into `to` (a superset), tensoring with
/// identities on the labels `to` adds.
inline Matrix extend_matrix(const Matrix &m, const Space &from, const Space &to) {
    if (from == to) {
        return m;
    }
    std::vector<size_t> from_pos;  // bit position in `to` of each label in `from`
    for (int label : from) {
        const auto it = std::lower_bound(to.begin(), to.end(), label);
        if (it == to.end() || *it != label) {
            throw ParameterError("extend_matrix: target space is not a superset");
        }
        from_pos.push_back(to.size() - 1 - static_cast<size_t>(it - to.begin()));
    }
    size_t from_mask = 0;
    for (size_t p : from_pos) {
        from_mask |= size_t{1} << p;
    }
    const size_t dim = space_dim(to);
    auto project = [&](size_t idx) {
        size_t out = 0;
        for (size_t i = 0; i < from_pos.size(); ++i) {
            out = (out << 1) | ((idx >> from_pos[i]) & 1u);
        }
        return out;
    };
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (size_t a = 0; a < dim; ++a) {
        const size_t pa = project(a);
        for (size_t b = 0; b < dim; ++b) {
            if ((a & ~from_mask) != (b & ~from_mask)) {
                continue;
            }
            out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                m(static_cast<Eigen::Index>(pa), static_cast<Eigen::Index>(project(b)));
        }
    }
    return out;
}

/// Dense operator on a tensor product of two-level subsystems.
class Operator {
  public:
    Operator() : matrix_(Matrix::Identity(1, 1)) {}

    Operator(Space space, Matrix matrix) : space_(std::move(space)), matrix_(std::move(matrix)) {
        phldpc::detail::require(std::is_sorted(space_.begin(), space_.end()) &&
                            std::adjacent_find(space_.begin(), space_.end()) == space_.end(),
                        "Operator: space labels must be sorted and distinct");
        const auto dim = static_cast<Eigen::Index>(space_dim(space_));
        phldpc::detail::require(matrix_.rows() == dim && matrix_.cols() == dim,
                        "Operator: matrix dimension must equal 2^(number of subsystems)");
    }

    static Operator scalar(Complex z) { return {{}, Matrix::Constant(1, 1, z)}; }
    static Operator identity(const Space &space = {}) {
        const auto d = static_cast<Eigen::Index>(space_dim(space));
        return {space, Matrix::Identity(d, d)};
    }
    static Operator zero(const Space &space = {}) {
        const auto d = static_cast<Eigen::Index>(space_dim(space));
        return {space, Matrix::Zero(d, d)};
    }

    const Space &space() const { return space_; }
    const Matrix &matrix() const { return matrix_; }
    std::vector<size_t> dims() const { return std::vector<size_t>(space_.size(), 2); }

    Operator extended(const Space &to) const { return {to, extend_matrix(matrix_, space_, to)}; }
    Operator adjoint() const { return {space_, matrix_.adjoint()}; }

    friend Operator operator*(const Operator &a, const Operator &b) {
        const Space s = space_union(a.space_, b.space_);
        return {s, extend_matrix(a.matrix_, a.space_, s) * extend_matrix(b.matrix_, b.space_, s)};
    }
    friend Operator operator+(const Operator &a, const Operator &b) {
        const Space s = space_union(a.space_, b.space_);
        return {s, extend_matrix(a.matrix_, a.space_, s) + extend_matrix(b.matrix_, b.space_, s)};
    }
    friend Operator operator-(const Operator &a, const Operator &b) { return a + b * Operator::scalar(-1.0); }
    friend Operator operator*(Complex z, const Operator &a) { return {a.space_, z * a.matrix_}; }

  private:
    Space space_;
    Matrix matrix_;
};

/// Single-subsystem primitives: projectors and the transition operators
/// sigma01 = |0><1| and sigma10 = |1><0|.
inline Operator pi0(int label) { return {{label}, (Matrix(2, 2) << 1, 0, 0, 0).finished()}; }
inline Operator pi1(int label) { return {{label}, (Matrix(2, 2) << 0, 0, 0, 1).finished()}; }
inline Operator sigma01(int label) { return {{label}, (Matrix(2, 2) << 0, 1, 0, 0).finished()}; }
inline Operator sigma10(int label) { return {{label}, (Matrix(2, 2) << 0, 0, 1, 0).finished()}; }

/// (S, L, H) description of an open quantum system with `n_port` field
/// channels. All operators share the triple's space. S is held as an
/// (n_port*D) x (n_port*D) block matrix, L as an (n_port*D) x D block column.
class SlhTriple {
  public:
    SlhTriple() : S_(0, 0), L_(0, 1), H_(Matrix::Zero(1, 1)) {}

    SlhTriple(const std::vector<std::vector<Operator>> &S, const std::vector<Operator> &L, const Operator &H) {
        const size_t n = L.size();
        phldpc::detail::require(S.size() == n, "SlhTriple: S must be n_port x n_port with n_port = |L|");
        Space space = H.space();
        for (const auto &row : S) {
            phldpc::detail::require(row.size() == n, "SlhTriple: S must be square");
            for (const auto &op : row) {
                space = space_union(space, op.space());
            }
        }
        for (const auto &op : L) {
            space = space_union(space, op.space());
        }
        *this = SlhTriple(space, n);
        const auto d = static_cast<Eigen::Index>(dim());
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                S_.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d) =
                    S[i][j].extended(space).matrix();
            }
            L_.block(static_cast<Eigen::Index>(i) * d, 0, d, d) = L[i].extended(space).matrix();
        }
        H_ = H.extended(space).matrix();
    }

    /// Identity system (S = 1, L = 0, H = 0) on `space`.
    SlhTriple(Space space, size_t n_port) : space_(std::move(space)), n_port_(n_port) {
        const auto d = static_cast<Eigen::Index>(dim());
        const auto nd = static_cast<Eigen::Index>(n_port) * d;
        S_ = Matrix::Identity(nd, nd);
        L_ = Matrix::Zero(nd, d);
        H_ = Matrix::Zero(d, d);
    }

    static SlhTriple from_blocks(Space space, size_t n_port, Matrix S, Matrix L, Matrix H) {
        SlhTriple g(std::move(space), n_port);
        phldpc::detail::require(S.rows() == g.S_.rows() && S.cols() == g.S_.cols(), "SlhTriple: S block shape");
        phldpc::detail::require(L.rows() == g.L_.rows() && L.cols() == g.L_.cols(), "SlhTriple: L block shape");
        phldpc::detail::require(H.rows() == g.H_.rows() && H.cols() == g.H_.cols(), "SlhTriple: H shape");
        g.S_ = std::move(S);
        g.L_ = std::move(L);
        g.H_ = std::move(H);
        return g;
    }

    size_t n_port() const { return n_port_; }
    const Space &space() const { return space_; }
    size_t dim() const { return space_dim(space_); }

    const Matrix &S_blocks() const { return S_; }
    const Matrix &L_blocks() const { return L_; }
    const Matrix &H_matrix() const { return H_; }

    Operator S(size_t i, size_t j) const {
        const auto d = static_cast<Eigen::Index>(dim());
        return {space_, S_.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d)};
    }
    Operator L(size_t i) const {
        const auto d = static_cast<Eigen::Index>(dim());
        return {space_, L_.block(static_cast<Eigen::Index>(i) * d, 0, d, d)};
    }
    Operator H() const { return {space_, H_}; }

    SlhTriple extended(const Space &to) const {
        if (to == space_) {
            return *this;
        }
        SlhTriple g(to, n_port_);
        const auto d0 = static_cast<Eigen::Index>(dim());
        const auto d = static_cast<Eigen::Index>(g.dim());
        for (size_t i = 0; i < n_port_; ++i) {
            const auto bi = static_cast<Eigen::Index>(i);
            for (size_t j = 0; j < n_port_; ++j) {
                const auto bj = static_cast<Eigen::Index>(j);
                g.S_.block(bi * d, bj * d, d, d) = extend_matrix(S_.block(bi * d0, bj * d0, d0, d0), space_, to);
            }
            g.L_.block(bi * d, 0, d, d) = extend_matrix(L_.block(bi * d0, 0, d0, d0), space_, to);
        }
        g.H_ = extend_matrix(H_, space_, to);
        return g;
    }

    /// max |sum_j S_ij S_kj^dagger - delta_ik|.
    double unitarity_defect() const {
        const auto nd = S_.rows();
        if (nd == 0) {
            return 0.0;
        }
        return (S_ * S_.adjoint() - Matrix::Identity(nd, nd)).cwiseAbs().maxCoeff();
    }
    double hermiticity_defect() const { return (H_ - H_.adjoint()).cwiseAbs().maxCoeff(); }

  private:
    Space space_;
    size_t n_port_ = 0;
    Matrix S_;
    Matrix L_;
    Matrix H_;
};

namespace detail {
/// Im(X) = (X - X^dagger) / 2i.
inline Matrix im(const Matrix &x) { return (x - x.adjoint()) / Complex(0.0, 2.0); }
}  // namespace detail

/// Series product G2 <| G1: the outputs of G1 feed the inputs of G2.
/// (S2 S1, S2 L1 + L2, H1 + H2 + Im(L2^dagger S2 L1)).
inline SlhTriple series(const SlhTriple &g2, const SlhTriple &g1) {
    if (g2.n_port() != g1.n_port()) {
        throw CompositionError("series: port counts differ (" + std::to_string(g2.n_port()) + " vs " +
                               std::to_string(g1.n_port()) + ")");
    }
    const Space s = space_union(g1.space(), g2.space());
    const SlhTriple a = g2.extended(s);
    const SlhTriple b = g1.extended(s);
    Matrix S = a.S_blocks() * b.S_blocks();
    Matrix L = a.S_blocks() * b.L_blocks() + a.L_blocks();
    Matrix H = b.H_matrix() + a.H_matrix() + detail::im(a.L_blocks().adjoint() * a.S_blocks() * b.L_blocks());
    return SlhTriple::from_blocks(s, g1.n_port(), std::move(S), std::move(L), std::move(H));
}

/// Concatenation G1 [+] G2: G1 takes the first n1 ports, G2 the next n2, with
/// no interaction.
inline SlhTriple concat(const SlhTriple &g1, const SlhTriple &g2) {
    const Space s = space_union(g1.space(), g2.space());
    const SlhTriple a = g1.extended(s);
    const SlhTriple b = g2.extended(s);
    const size_t n = a.n_port() + b.n_port();
    SlhTriple out(s, n);
    Matrix S = Matrix::Zero(out.S_blocks().rows(), out.S_blocks().cols());
    S.topLeftCorner(a.S_blocks().rows(), a.S_blocks().cols()) = a.S_blocks();
    S.bottomRightCorner(b.S_blocks().rows(), b.S_blocks().cols()) = b.S_blocks();
    Matrix L(out.L_blocks().rows(), out.L_blocks().cols());
    L << a.L_blocks(), b.L_blocks();
    return SlhTriple::from_blocks(s, n, std::move(S), std::move(L), a.H_matrix() + b.H_matrix());
}

/// Feedback [G]_{k -> l}: output port k is fed back into input port l,
/// leaving n_port - 1 channels (outputs without k, inputs without l, each
/// in their original order).
///
///   S' = S_{~k,~l} + S_{~k,l} (1 - S_kl)^-1 S_{k,~l}
///   L' = L_{~k} + S_{~k,l} (1 - S_kl)^-1 L_k
///   H' = H + Im( sum_j L_j^dagger S_jl (1 - S_kl)^-1 L_k )
inline SlhTriple feedback(const SlhTriple &g, size_t out_k, size_t in_l) {
    const size_t n = g.n_port();
    if (out_k >= n || in_l >= n) {
        throw CompositionError("feedback: port index out of range");
    }
    const auto d = static_cast<Eigen::Index>(g.dim());
    auto blk = [&](size_t i, size_t j) {
        return g.S_blocks().block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d);
    };
    auto lblk = [&](size_t i) { return g.L_blocks().block(static_cast<Eigen::Index>(i) * d, 0, d, d); };

    const Matrix one_minus = Matrix::Identity(d, d) - blk(out_k, in_l);
    Eigen::FullPivLU<Matrix> lu(one_minus);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) {
        throw CompositionError("feedback: (1 - S_kl) is singular; the loop is ill-posed");
    }
    const Matrix inv = lu.inverse();
    const Matrix lk = inv * lblk(out_k);

    SlhTriple out(g.space(), n - 1);
    Matrix S(out.S_blocks().rows(), out.S_blocks().cols());
    Matrix L(out.L_blocks().rows(), out.L_blocks().cols());
    size_t r = 0;
    for (size_t i = 0; i < n; ++i) {
        if (i == out_k) {
            continue;
        }
        const Matrix via = blk(i, in_l) * inv;
        size_t c = 0;
        for (size_t j = 0; j < n; ++j) {
            if (j == in_l) {
                continue;
            }
            S.block(static_cast<Eigen::Index>(r) * d, static_cast<Eigen::Index>(c) * d, d, d) =
                blk(i, j) + via * blk(out_k, j);
            ++c;
        }
        L.block(static_cast<Eigen::Index>(r) * d, 0, d, d) = lblk(i) + blk(i, in_l) * lk;
        ++r;
    }
    Matrix acc = Matrix::Zero(d, d);
    for (size_t j = 0; j < n; ++j) {
        acc += lblk(j).adjoint() * blk(j, in_l);
    }
    Matrix H = g.H_matrix() + detail::im(acc * lk);
    return SlhTriple::from_blocks(g.space(), n - 1, std::move(S), std::move(L), std::move(H));
}

/// Places `g` on ports `ports[0..g.n_port())` of a `total`-port system with
/// identity scattering on the remaining ports (a concatenation with an
/// identity followed by a port permutation).
inline SlhTriple embed(const SlhTriple &g, std::span<const size_t> ports, size_t total) {
    if (ports.size() != g.n_port()) {
        throw CompositionError("embed: need one target port per channel");
    }
    std::vector<bool> used(total, false);
    for (size_t p : ports) {
        if (p >= total || used[p]) {
            throw CompositionError("embed: target ports must be distinct and < total");
        }
        used[p] = true;
    }
    const auto d = static_cast<Eigen::Index>(g.dim());
    SlhTriple out(g.space(), total);
    Matrix S = out.S_blocks();
    Matrix L = out.L_blocks();
    for (size_t i = 0; i < ports.size(); ++i) {
        const auto pi = static_cast<Eigen::Index>(ports[i]);
        for (size_t j = 0; j < ports.size(); ++j) {
            const auto pj = static_cast<Eigen::Index>(ports[j]);
            S.block(pi * d, pj * d, d, d) =
                g.S_blocks().block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(j) * d, d, d);
        }
        L.block(pi * d, 0, d, d) = g.L_blocks().block(static_cast<Eigen::Index>(i) * d, 0, d, d);
    }
    return SlhTriple::from_blocks(g.space(), total, std::move(S), std::move(L), g.H_matrix());
}

inline SlhTriple embed(const SlhTriple &g, std::initializer_list<size_t> ports, size_t total) {
    return embed(g, std::span<const size_t>(ports.begin(), ports.size()), total);
}

inline SlhTriple identity_system(size_t n_port) { return SlhTriple({}, n_port); }

/// Two-port beamsplitter transmitting a fraction `transmission` of the power
/// straight through: S is the rotation by arccos(sqrt(transmission)),
/// [[cos, sin], [-sin, cos]].
inline SlhTriple make_beamsplitter(double transmission) {
    phldpc::detail::require(transmission > 0.0 && transmission <= 1.0, "make_beamsplitter: transmission must lie in (0, 1]");
    const double c = std::sqrt(transmission);
    const double s = std::sqrt(1.0 - transmission);
    Matrix S(2, 2);
    S << c, s, -s, c;
    return SlhTriple::from_blocks({}, 2, std::move(S), Matrix::Zero(2, 1), Matrix::Zero(1, 1));
}

/// Coherent drive: displaces vacuum inputs into amplitudes `alpha`.
inline SlhTriple make_weyl(std::span<const Complex> alpha) {
    const auto n = static_cast<Eigen::Index>(alpha.size());
    Matrix L(n, 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        L(i, 0) = alpha[static_cast<size_t>(i)];
    }
    return SlhTriple::from_blocks({}, alpha.size(), Matrix::Identity(n, n), std::move(L), Matrix::Zero(1, 1));
}

inline SlhTriple make_weyl(std::initializer_list<Complex> alpha) {
    return make_weyl(std::span<const Complex>(alpha.begin(), alpha.size()));
}

/// Latch port layout: the set-reset pair comes first, then the routed pair.
/// A drive on `reset` pushes the latch to |0>, a drive on `set` to |1>.
namespace latch_port {
inline constexpr size_t reset = 0;
inline constexpr size_t set = 1;
inline constexpr size_t in1 = 2;
inline constexpr size_t in2 = 3;
}  // namespace latch_port

/// Set-reset block of a latch on subsystem `label`: S = [[Pi0, -s10], [-s01, Pi1]].
inline SlhTriple make_latch_set_reset(int label) {
    const Operator z = Operator::zero({label});
    return SlhTriple({{pi0(label), Complex(-1.0) * sigma10(label)}, {Complex(-1.0) * sigma01(label), pi1(label)}},
                     {z, z}, z);
}

/// Routing block of a latch on subsystem `label`: S = [[Pi0, -Pi1], [-Pi1, Pi0]].
/// Pass-through in |0>, swap (with sign) in |1>.
inline SlhTriple make_latch_in_out(int label) {
    const Operator z = Operator::zero({label});
    return SlhTriple(
        {{pi0(label), Complex(-1.0) * pi1(label)}, {Complex(-1.0) * pi1(label), pi0(label)}}, {z, z}, z);
}

/// Four-port latch: set-reset block concatenated with the routing block.
inline SlhTriple make_latch(int label = 0) { return concat(make_latch_set_reset(label), make_latch_in_out(label)); }

/// Right-hand side of the master equation:
/// -i[H, rho] + sum_i (L_i rho L_i^dagger - {L_i^dagger L_i, rho} / 2).
inline Operator lindblad_rhs(const SlhTriple &g, const Operator &rho) {
    if (rho.space() != g.space()) {
        throw ParameterError("lindblad_rhs: density matrix space does not match the system");
    }
    const auto d = static_cast<Eigen::Index>(g.dim());
    const Matrix &r = rho.matrix();
    const Matrix &H = g.H_matrix();
    Matrix out = Complex(0.0, -1.0) * (H * r - r * H);
    for (size_t i = 0; i < g.n_port(); ++i) {
        const Matrix Li = g.L_blocks().block(static_cast<Eigen::Index>(i) * d, 0, d, d);
        const Matrix LdL = Li.adjoint() * Li;
        out += Li * r * Li.adjoint() - 0.5 * (LdL * r + r * LdL);
    }
    return {g.space(), out};
}

/// Jump rate <psi| L_i^dagger L_i |psi> of every channel.
inline std::vector<double> jump_rates(const SlhTriple &g, const Vector &psi) {
    phldpc::detail::require(psi.size() == static_cast<Eigen::Index>(g.dim()), "jump_rates: state dimension mismatch");
    const auto d = static_cast<Eigen::Index>(g.dim());
    std::vector<double> rates(g.n_port());
    for (size_t i = 0; i < g.n_port(); ++i) {
        const Vector out = g.L_blocks().block(static_cast<Eigen::Index>(i) * d, 0, d, d) * psi;
        rates[i] = out.squaredNorm();
    }
    return rates;
}

/// Computational basis state |idx> of the triple's space.
inline Vector basis_state(const SlhTriple &g, size_t idx) {
    Vector psi = Vector::Zero(static_cast<Eigen::Index>(g.dim()));
    psi(static_cast<Eigen::Index>(idx)) = 1.0;
    return psi;
}

/// Basis index of the configuration `bits[label]` over the triple's space.
inline size_t basis_index(const Space &space, std::span<const int> labels, std::span<const int> bits) {
    phldpc::detail::require(labels.size() == bits.size(), "basis_index: labels and bits differ in length");
    size_t idx = 0;
    for (size_t p = 0; p < space.size(); ++p) {
        const auto it = std::find(labels.begin(), labels.end(), space[p]);
        phldpc::detail::require(it != labels.end(), "basis_index: missing bit for label " + std::to_string(space[p]));
        idx = (idx << 1) | static_cast<size_t>(bits[static_cast<size_t>(it - labels.begin())] & 1);
    }
    return idx;
}

struct Transition {
    size_t channel = 0;
    size_t target = 0;
    double rate = 0.0;
};

/// Decomposes the jump rates from basis state `idx` by destination basis
/// state: rate |<target| L_i |idx>|^2 for every channel i and target.
inline std::vector<Transition> basis_transitions(const SlhTriple &g, size_t idx, double cutoff = 0.0) {
    const auto d = static_cast<Eigen::Index>(g.dim());
    std::vector<Transition> out;
    for (size_t i = 0; i < g.n_port(); ++i) {
        const auto col = g.L_blocks().block(static_cast<Eigen::Index>(i) * d, 0, d, d).col(static_cast<Eigen::Index>(idx));
        for (Eigen::Index t = 0; t < d; ++t) {
            const double r = std::norm(col(t));
            if (r > cutoff) {
                out.push_back({i, static_cast<size_t>(t), r});
            }
        }
    }
    return out;
}

/// Total jump rate out of basis state `idx` that leaves subsystem `label`
/// in state `bit` afterwards (toggling or not).
inline double rate_into(const SlhTriple &g, size_t idx, int label, int bit) {
    double r = 0.0;
    for (const auto &tr : basis_transitions(g, idx)) {
        if (label_bit(g.space(), label, tr.target) == bit) {
            r += tr.rate;
        }
    }
    return r;
}

/// Rate at which jumps from basis state `idx` toggle subsystem `label`.
inline double toggle_rate(const SlhTriple &g, size_t idx, int label) {
    return rate_into(g, idx, label, label_bit(g.space(), label, idx) ^ 1);
}

inline std::ostream &operator<<(std::ostream &os, const SlhTriple &g) {
    Eigen::IOFormat fmt(6, 0, ", ", "\n", "[", "]");
    os << "SLH(n_port=" << g.n_port() << ", subsystems=" << g.space().size() << ")\nS =\n"
       << g.S_blocks().format(fmt) << "\nL =\n"
       << g.L_blocks().format(fmt) << "\nH =\n"
       << g.H_matrix().format(fmt) << '\n';
    return os;
}

}  // namespace phldpc::slh
