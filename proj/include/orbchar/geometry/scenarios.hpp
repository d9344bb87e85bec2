#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbchar/geometry/phi.hpp"

namespace orbchar {

struct UnknownScenarioError : std::runtime_error {
    explicit UnknownScenarioError(const std::string& what) : std::runtime_error(what) {}
};

// One parametrized piece of a normal sphere bundle.  The callback returns,
// at parameter u, the base point and a positively oriented adapted frame
// (e_1 .. e_n) of ambient vectors with e_n the unit normal direction; the
// integrator differences the frame along the parameters to build the
// connection components and asks `curvature` (null meaning flat ambient)
// for <R(X, Y) e_i, e_j>.
struct NsrPiece {
    std::string name;
    int n = 0;           // adapted frame size (dimension of the host manifold)
    int ambient_dim = 0; // components per vector
    std::vector<double> lo, hi;
    std::vector<int> sizes;
    std::vector<bool> periodic; // periodic axes sample uniformly, others by midpoint rule

    std::function<void(const std::vector<double>& u, std::vector<double>& base,
                       std::vector<std::vector<double>>& frame)>
        frame;
    std::function<double(const std::vector<double>& base, const std::vector<double>& X,
                         const std::vector<double>& Y, const std::vector<double>& ei,
                         const std::vector<double>& ej)>
        curvature;

    // Orientation of the parameter mesh against the oriented piece.
    double sign = 1.0;
};

// Integral of the boundary form over the piece, mesh sign included.
double integrate_phi(const NsrPiece& piece);

// Same piece with the first n-1 frame legs post-rotated by the constant
// (n-1) x (n-1) matrix (row-major).  The integral is invariant when the
// matrix is a rotation.
NsrPiece twist_piece(NsrPiece piece, std::vector<double> rotation);

struct GbReport {
    std::string scenario;
    int grid = 0;
    double value = 0.0;
    double expected = 0.0;
    double abs_error = 0.0;
    std::vector<std::pair<std::string, double>> parts;
};

std::vector<std::string> scenario_names();
std::vector<NsrPiece> scenario_pieces(const std::string& name, int grid);
GbReport run_scenario(const std::string& name, int grid);

} // namespace orbchar
