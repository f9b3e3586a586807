// gates.hpp
// Gate vocabulary of the simulator. Each GateOp names a unitary, the qubits
// it acts on and, for rotation-like kinds, one angle in radians.
//
// RotPaper(theta) is the data-encoding rotation
//     [[cos t, -i sin t], [-i sin t, cos t]] = exp(-i t X)
// with the full angle in the exponent (not theta/2); Ry and Rz use the
// conventional half-angle form.

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qmesh {

using cdouble = std::complex<double>;

enum class GateKind {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    CX,
    CZ,
    CPhase,
    Toffoli,
    ISwap,
    Ry,
    Rz,
    RotPaper,
    CRz,
};

std::string to_string(GateKind kind);

struct GateOp {
    GateKind kind;
    std::vector<int> targets;
    std::vector<int> controls;
    double angle = 0.0;

    static GateOp h(int q) { return {GateKind::H, {q}, {}, 0.0}; }
    static GateOp x(int q) { return {GateKind::X, {q}, {}, 0.0}; }
    static GateOp y(int q) { return {GateKind::Y, {q}, {}, 0.0}; }
    static GateOp z(int q) { return {GateKind::Z, {q}, {}, 0.0}; }
    static GateOp s(int q) { return {GateKind::S, {q}, {}, 0.0}; }
    static GateOp sdg(int q) { return {GateKind::Sdg, {q}, {}, 0.0}; }
    static GateOp cx(int control, int target) { return {GateKind::CX, {target}, {control}, 0.0}; }
    static GateOp cz(int a, int b) { return {GateKind::CZ, {b}, {a}, 0.0}; }
    static GateOp cphase(double phi, int a, int b) { return {GateKind::CPhase, {b}, {a}, phi}; }
    static GateOp toffoli(int c1, int c2, int target) { return {GateKind::Toffoli, {target}, {c1, c2}, 0.0}; }
    static GateOp iswap(int a, int b) { return {GateKind::ISwap, {a, b}, {}, 0.0}; }
    static GateOp ry(double theta, int q) { return {GateKind::Ry, {q}, {}, theta}; }
    static GateOp rz(double theta, int q) { return {GateKind::Rz, {q}, {}, theta}; }
    static GateOp rot_paper(double theta, int q) { return {GateKind::RotPaper, {q}, {}, theta}; }
    static GateOp crz(double theta, int control, int target) { return {GateKind::CRz, {target}, {control}, theta}; }

    // All qubits the gate touches, targets first.
    std::vector<int> qubits() const;
    std::size_t arity() const { return targets.size() + controls.size(); }
};

// Throws ValidationError if arity does not match the kind, indices repeat,
// or any index falls outside [0, n_qubits).
void validate(const GateOp& gate, int n_qubits);

// 2x2 matrix of a single-target kind, row major. Throws for multi-target kinds.
std::array<cdouble, 4> single_qubit_matrix(GateKind kind, double angle);

// Full 2^k x 2^k unitary of the gate on its own k qubits, row major, with
// the gate's qubit list ordered [targets..., controls...] mapping to bit
// positions 0,1,... of the local index. Used by unitarity checks.
std::vector<cdouble> gate_matrix(const GateOp& gate);

} // namespace qmesh
