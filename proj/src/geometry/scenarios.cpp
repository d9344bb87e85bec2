#include "orbchar/geometry/scenarios.hpp"

#include <cmath>

#include "orbchar/euler_calculus.hpp"
#include "orbchar/lie_catalog.hpp"
#include "orbchar/threads.hpp"

namespace orbchar {

namespace {

const double kPi = 4.0 * std::atan(1.0);

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void normalize(std::vector<double>& v) {
    const double n = std::sqrt(dot(v, v));
    for (double& c : v) c /= n;
}

double det_n(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        if (m[c][c] == 0.0) return 0.0;
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

} // namespace

double integrate_phi(const NsrPiece& piece) {
    const int d = piece.n - 1;
    if (static_cast<int>(piece.sizes.size()) != d)
        throw std::invalid_argument("piece parameter count must be n - 1");

    std::size_t total = 1;
    std::vector<double> h(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        if (piece.sizes[a] < 4) throw std::invalid_argument("piece axis resolution too small");
        h[a] = (piece.hi[a] - piece.lo[a]) / piece.sizes[a];
        total *= static_cast<std::size_t>(piece.sizes[a]);
    }
    double cell = 1.0;
    for (int a = 0; a < d; ++a) cell *= h[a];

    std::vector<double> contrib(total, 0.0);
    parallel_for(total, [&](std::size_t s) {
        std::vector<double> u(static_cast<std::size_t>(d));
        std::size_t rem = s;
        for (int a = d - 1; a >= 0; --a) {
            const int i = static_cast<int>(rem % piece.sizes[a]);
            rem /= piece.sizes[a];
            // Periodic axes place samples on the uniform lattice; the rest
            // use the midpoint rule, which keeps samples off the boundary.
            u[a] = piece.lo[a] + (piece.periodic[a] ? i * h[a] : (i + 0.5) * h[a]);
        }

        std::vector<double> base;
        std::vector<std::vector<double>> e;
        piece.frame(u, base, e);

        PhiInput in = PhiInput::zeros(piece.n, d);
        std::vector<std::vector<double>> dbase(static_cast<std::size_t>(d));
        std::vector<std::vector<std::vector<double>>> de(static_cast<std::size_t>(d));
        for (int a = 0; a < d; ++a) {
            const double step = h[a] / 4.0;
            std::vector<double> up = u, um = u;
            up[a] += step;
            um[a] -= step;
            std::vector<double> bp, bm;
            std::vector<std::vector<double>> ep, em;
            piece.frame(up, bp, ep);
            piece.frame(um, bm, em);
            dbase[a].resize(base.size());
            for (std::size_t c = 0; c < base.size(); ++c)
                dbase[a][c] = (bp[c] - bm[c]) / (2.0 * step);
            de[a].resize(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                de[a][i].resize(e[i].size());
                for (std::size_t c = 0; c < e[i].size(); ++c)
                    de[a][i][c] = (ep[i][c] - em[i][c]) / (2.0 * step);
            }
        }
        for (int i = 0; i < piece.n; ++i)
            for (int j = i + 1; j < piece.n; ++j) {
                auto& row = in.omega_raw(i, j);
                for (int a = 0; a < d; ++a)
                    row[a] = 0.5 * (dot(de[a][i], e[j]) - dot(de[a][j], e[i]));
                if (piece.curvature) {
                    auto& cro = in.curvature_raw(i, j);
                    for (int a = 0; a < d; ++a)
                        for (int b = a + 1; b < d; ++b)
                            cro[static_cast<std::size_t>(tuple_rank(d, {a, b}))] =
                                piece.curvature(base, dbase[a], dbase[b], e[i], e[j]);
                }
            }
        contrib[s] = assemble_phi(in).top() * cell;
    });
    return piece.sign * pairwise_sum(contrib);
}

NsrPiece twist_piece(NsrPiece piece, std::vector<double> rotation) {
    const int m = piece.n - 1;
    if (static_cast<int>(rotation.size()) != m * m)
        throw std::invalid_argument("twist matrix must be (n-1) x (n-1)");
    auto inner = piece.frame;
    piece.frame = [inner, rotation, m](const std::vector<double>& u, std::vector<double>& base,
                                       std::vector<std::vector<double>>& frame) {
        inner(u, base, frame);
        std::vector<std::vector<double>> twisted(frame.begin(), frame.begin() + m);
        for (int i = 0; i < m; ++i) {
            auto& f = twisted[static_cast<std::size_t>(i)];
            std::fill(f.begin(), f.end(), 0.0);
            for (int j = 0; j < m; ++j)
                for (std::size_t c = 0; c < f.size(); ++c)
                    f[c] += rotation[static_cast<std::size_t>(j) * m + i] * frame[j][c];
        }
        for (int i = 0; i < m; ++i) frame[static_cast<std::size_t>(i)] = std::move(twisted[i]);
    };
    return piece;
}

namespace {

// Gram-Schmidt tangent pair completed by the unit normal, flipped in the
// first leg when needed so that `orient` of the full frame is positive.
// The determinant never vanishes on a connected chart, so the flip is
// constant there and finite differences of the frame stay consistent.
void adapted_frame(std::vector<std::vector<double>> tangents, std::vector<double> normal,
                   const std::function<double(const std::vector<std::vector<double>>&)>& orient,
                   std::vector<std::vector<double>>& frame) {
    for (std::size_t i = 0; i < tangents.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double c = dot(tangents[i], tangents[j]);
            for (std::size_t k = 0; k < tangents[i].size(); ++k) tangents[i][k] -= c * tangents[j][k];
        }
        normalize(tangents[i]);
    }
    frame = std::move(tangents);
    frame.push_back(std::move(normal));
    if (orient(frame) < 0.0)
        for (double& c : frame[0]) c = -c;
}

std::function<double(const std::vector<std::vector<double>>&)> ambient_orient() {
    return [](const std::vector<std::vector<double>>& f) { return det_n(f); };
}

// Orientation of a frame tangent to the unit sphere at p: outward-first
// against the ambient orientation.
std::function<double(const std::vector<std::vector<double>>&)> sphere_orient(std::vector<double> p) {
    return [p](const std::vector<std::vector<double>>& f) {
        std::vector<std::vector<double>> m;
        m.push_back(p);
        for (const auto& v : f) m.push_back(v);
        return det_n(m);
    };
}

// Cube-sphere face c(a, b); all six satisfy det[v, dc/da, dc/db] > 0.
void cube_face(int face, double a, double b, std::vector<double>& c, std::vector<double>& da,
               std::vector<double>& db) {
    switch (face) {
        case 0: c = {1.0, a, b}; da = {0, 1, 0}; db = {0, 0, 1}; break;
        case 1: c = {-1.0, b, a}; da = {0, 0, 1}; db = {0, 1, 0}; break;
        case 2: c = {b, 1.0, a}; da = {0, 0, 1}; db = {1, 0, 0}; break;
        case 3: c = {a, -1.0, b}; da = {1, 0, 0}; db = {0, 0, 1}; break;
        case 4: c = {a, b, 1.0}; da = {1, 0, 0}; db = {0, 1, 0}; break;
        default: c = {b, a, -1.0}; da = {0, 1, 0}; db = {1, 0, 0}; break;
    }
}

// Unit vector v = c/|c| on the given face with its analytic tangents.
void cube_sphere_point(int face, double a, double b, std::vector<double>& v,
                       std::vector<double>& ta, std::vector<double>& tb) {
    std::vector<double> c, da, db;
    cube_face(face, a, b, c, da, db);
    const double r = std::sqrt(dot(c, c));
    v.resize(3);
    for (int k = 0; k < 3; ++k) v[k] = c[k] / r;
    ta.resize(3);
    tb.resize(3);
    const double pa = dot(v, da) / r, pb = dot(v, db) / r;
    for (int k = 0; k < 3; ++k) {
        ta[k] = da[k] / r - v[k] * pa;
        tb[k] = db[k] / r - v[k] * pb;
    }
}

NsrPiece point_in_r2_piece(int grid) {
    NsrPiece p;
    p.name = "fiber";
    p.n = 2;
    p.ambient_dim = 2;
    p.lo = {0.0};
    p.hi = {2.0 * kPi};
    p.sizes = {grid};
    p.periodic = {true};
    p.frame = [](const std::vector<double>& u, std::vector<double>& base,
                 std::vector<std::vector<double>>& frame) {
        base = {0.0, 0.0};
        std::vector<double> v{std::cos(u[0]), std::sin(u[0])};
        std::vector<double> t{-std::sin(u[0]), std::cos(u[0])};
        adapted_frame({t}, v, ambient_orient(), frame);
    };
    return p;
}

std::vector<NsrPiece> circle_in_r2_pieces(int grid) {
    std::vector<NsrPiece> pieces;
    for (int sheet : {+1, -1}) {
        NsrPiece p;
        p.name = sheet > 0 ? "outward" : "inward";
        p.n = 2;
        p.ambient_dim = 2;
        p.lo = {0.0};
        p.hi = {2.0 * kPi};
        p.sizes = {grid};
        p.periodic = {true};
        p.frame = [sheet](const std::vector<double>& u, std::vector<double>& base,
                          std::vector<std::vector<double>>& frame) {
            base = {std::cos(u[0]), std::sin(u[0])};
            std::vector<double> t{-std::sin(u[0]), std::cos(u[0])};
            std::vector<double> v{sheet * base[0], sheet * base[1]};
            adapted_frame({t}, v, ambient_orient(), frame);
        };
        // The oriented normal line of the mesh-oriented circle points
        // inward: det[tangent, -p] > 0.  The outward sheet is the negative
        // point of each S^0 fiber.
        p.sign = sheet > 0 ? -1.0 : 1.0;
        pieces.push_back(std::move(p));
    }
    return pieces;
}

std::vector<NsrPiece> s2_in_r3_pieces(int grid) {
    const int m = std::max(24, grid / 4);
    std::vector<NsrPiece> pieces;
    for (int sheet : {+1, -1})
        for (int face = 0; face < 6; ++face) {
            NsrPiece p;
            p.name = std::string(sheet > 0 ? "outward" : "inward") + ":face" + std::to_string(face);
            p.n = 3;
            p.ambient_dim = 3;
            p.lo = {-1.0, -1.0};
            p.hi = {1.0, 1.0};
            p.sizes = {m, m};
            p.periodic = {false, false};
            p.frame = [sheet, face](const std::vector<double>& u, std::vector<double>& base,
                                    std::vector<std::vector<double>>& frame) {
                std::vector<double> v, ta, tb;
                cube_sphere_point(face, u[0], u[1], v, ta, tb);
                base = v;
                std::vector<double> nrm{sheet * v[0], sheet * v[1], sheet * v[2]};
                adapted_frame({ta, tb}, nrm, ambient_orient(), frame);
            };
            // The mesh orients each face with the outward vector first, so
            // the positive normal direction is outward.
            p.sign = sheet > 0 ? 1.0 : -1.0;
            pieces.push_back(std::move(p));
        }
    return pieces;
}

double sphere3_curvature(const std::vector<double>&, const std::vector<double>& X,
                         const std::vector<double>& Y, const std::vector<double>& ei,
                         const std::vector<double>& ej) {
    // Unit round sphere: R(X, Y)Z = <Y,Z> X - <X,Z> Y.
    return dot(Y, ei) * dot(X, ej) - dot(X, ei) * dot(Y, ej);
}

std::vector<NsrPiece> gb1_su2_pieces(int grid) {
    std::vector<NsrPiece> pieces;

    // Conjugation-orbit circle through (cos s, sin s, 0, 0): codimension 2
    // in the 3-sphere, normal circle fiber spanned by the last two axes.
    {
        NsrPiece p;
        p.name = "torus";
        p.n = 3;
        p.ambient_dim = 4;
        p.lo = {0.0, 0.0};
        p.hi = {2.0 * kPi, 2.0 * kPi};
        p.sizes = {grid, grid};
        p.periodic = {true, true};
        p.frame = [](const std::vector<double>& u, std::vector<double>& base,
                     std::vector<std::vector<double>>& frame) {
            const double s = u[0], psi = u[1];
            base = {std::cos(s), std::sin(s), 0.0, 0.0};
            std::vector<double> t{-std::sin(s), std::cos(s), 0.0, 0.0};
            std::vector<double> w{0.0, 0.0, -std::sin(psi), std::cos(psi)};
            std::vector<double> v{0.0, 0.0, std::cos(psi), std::sin(psi)};
            adapted_frame({t, w}, v, sphere_orient(base), frame);
        };
        p.curvature = sphere3_curvature;
        pieces.push_back(std::move(p));
    }

    // Central points +-1: the fiber is the full unit sphere of the tangent
    // space there.  The basis below is positively oriented for the
    // outward-first orientation of the 3-sphere at the point, so the
    // cube-sphere mesh traverses the fiber positively.
    const int m = std::max(24, grid / 4);
    for (int center : {+1, -1}) {
        std::vector<std::vector<double>> basis =
            center > 0 ? std::vector<std::vector<double>>{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}
                       : std::vector<std::vector<double>>{{0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
        for (int face = 0; face < 6; ++face) {
            NsrPiece p;
            p.name = std::string(center > 0 ? "plus" : "minus") + ":face" + std::to_string(face);
            p.n = 3;
            p.ambient_dim = 4;
            p.lo = {-1.0, -1.0};
            p.hi = {1.0, 1.0};
            p.sizes = {m, m};
            p.periodic = {false, false};
            const std::vector<double> q{center * 1.0, 0.0, 0.0, 0.0};
            p.frame = [face, basis, q](const std::vector<double>& u, std::vector<double>& base,
                                       std::vector<std::vector<double>>& frame) {
                std::vector<double> v3, ta3, tb3;
                cube_sphere_point(face, u[0], u[1], v3, ta3, tb3);
                base = q;
                const auto embed = [&basis](const std::vector<double>& c) {
                    std::vector<double> out(4, 0.0);
                    for (int k = 0; k < 3; ++k)
                        for (int comp = 0; comp < 4; ++comp) out[comp] += c[k] * basis[k][comp];
                    return out;
                };
                adapted_frame({embed(ta3), embed(tb3)}, embed(v3), sphere_orient(base), frame);
            };
            p.curvature = sphere3_curvature;
            pieces.push_back(std::move(p));
        }
    }
    return pieces;
}

double sum_with_prefix(const std::vector<NsrPiece>& pieces, const std::string& prefix,
                       std::vector<double>& cache, bool& cached) {
    if (!cached) {
        cache.resize(pieces.size());
        for (std::size_t i = 0; i < pieces.size(); ++i) cache[i] = integrate_phi(pieces[i]);
        cached = true;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (pieces[i].name.rfind(prefix, 0) == 0) acc += cache[i];
    return acc;
}

} // namespace

std::vector<std::string> scenario_names() {
    return {"point-in-r2", "circle-in-r2", "s2-in-r3", "gb1-su2"};
}

std::vector<NsrPiece> scenario_pieces(const std::string& name, int grid) {
    if (grid < 8) throw std::invalid_argument("grid resolution must be at least 8");
    if (name == "point-in-r2") return {point_in_r2_piece(grid)};
    if (name == "circle-in-r2") return circle_in_r2_pieces(grid);
    if (name == "s2-in-r3") return s2_in_r3_pieces(grid);
    if (name == "gb1-su2") return gb1_su2_pieces(grid);
    throw UnknownScenarioError("unknown scenario '" + name + "' (have: point-in-r2, circle-in-r2, "
                               "s2-in-r3, gb1-su2)");
}

GbReport run_scenario(const std::string& name, int grid) {
    GbReport rep;
    rep.scenario = name;
    rep.grid = grid;
    const auto pieces = scenario_pieces(name, grid);
    std::vector<double> cache;
    bool cached = false;

    if (name == "point-in-r2") {
        rep.expected = static_cast<double>(euler_char(point_cells()));
        rep.value = sum_with_prefix(pieces, "", cache, cached);
        rep.parts = {{"integral", rep.value}};
    } else if (name == "circle-in-r2") {
        rep.expected = static_cast<double>(euler_char(circle_cells()));
        const double out = sum_with_prefix(pieces, "outward", cache, cached);
        const double in = sum_with_prefix(pieces, "inward", cache, cached);
        rep.value = out + in;
        rep.parts = {{"integral_outward", out}, {"integral_inward", in}};
    } else if (name == "s2-in-r3") {
        rep.expected = static_cast<double>(euler_char(CellVector{{0, 1}, {2, 1}}));
        const double out = sum_with_prefix(pieces, "outward", cache, cached);
        const double in = sum_with_prefix(pieces, "inward", cache, cached);
        rep.value = out + in;
        rep.parts = {{"integral_outward", out}, {"integral_inward", in}};
    } else {
        // gb1-su2: the invariant side is exact and comes from the group
        // catalog; the analytic side averages the piece integrals over the
        // Weyl group.
        const LieGroupDescriptor su2 = LieGroupDescriptor::su2();
        const double weyl = static_cast<double>(cartan_data(su2)[0].weyl_order);
        const double chi = static_cast<double>(chi_ad(su2));
        const double torus = sum_with_prefix(pieces, "torus", cache, cached);
        const double plus = sum_with_prefix(pieces, "plus", cache, cached);
        const double minus = sum_with_prefix(pieces, "minus", cache, cached);
        rep.expected = chi;
        rep.value = (torus + plus + minus) / weyl;
        rep.parts = {{"integral_torus", torus},
                     {"integral_point_plus", plus},
                     {"integral_point_minus", minus},
                     {"weyl_order", weyl},
                     {"chi_combinatorial", chi}};
    }
    rep.abs_error = std::abs(rep.value - rep.expected);
    return rep;
}

} // namespace orbchar
