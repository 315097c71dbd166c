#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "bicalo/bianchi.hpp"
#include "bicalo/small.hpp"

namespace bicalo::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::bianchi: return "bianchi";
        case Method::small: return "small";
        case Method::both: return "both";
    }
    return "?";
}

SurfaceGrid build_grid(const HoloExpr& e, const GridDomain& d, Method m) {
    return m == Method::small ? small_grid(e, d) : bicalo_grid(e, d);
}

json domain_json(const GridDomain& d) {
    return {{"r_min", d.r_min},       {"r_max", d.r_max},   {"theta_min", d.theta_min},
            {"theta_max", d.theta_max}, {"n_r", d.n_r},     {"n_theta", d.n_theta}};
}

// Degenerate-image message shared by generate and verify.
std::string degenerate_message(const SurfaceGrid& g) {
    const ImageBounds b = grid_image_bounds(g);
    return "degenerate: image is a single point (" + fmt_short(b.centroid.x) + ", " +
           fmt_short(b.centroid.y) + ", " + fmt_short(b.centroid.z) + ")";
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace

bool JobConfig::valid(std::string* why) const {
    const auto reject = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (expression.empty()) return reject("missing expression");
    if (!(domain.r_min >= 0.0)) return reject("r_min must be >= 0");
    if (!(domain.r_min < domain.r_max)) return reject("require r_min < r_max");
    if (!(domain.theta_min < domain.theta_max)) return reject("require theta_min < theta_max");
    if (domain.n_r < 2 || domain.n_theta < 2) return reject("grid must be at least 2x2");
    if (!(tolerances.h_mean_curvature > 0.0) || !(tolerances.gauss_map > 0.0) ||
        !(tolerances.conformality > 0.0) || !(tol_equivalence > 0.0))
        return reject("tolerances must be positive");
    return true;
}

std::string csv_path_for(const std::string& obj_path) {
    std::filesystem::path p(obj_path);
    p.replace_extension(".csv");
    return p.string();
}

int write_obj(std::ostream& os, const std::vector<const SurfaceGrid*>& grids) {
    os << "# quad mesh in upper half-space coordinates\n";
    int base = 0;
    int faces = 0;
    for (const SurfaceGrid* g : grids) {
        std::vector<int> obj_index(g->size(), 0);
        int next = base;
        os << "o " << g->tag << "\n";
        for (int idx = 0; idx < g->size(); ++idx) {
            if (g->hole[idx]) continue;
            obj_index[idx] = ++next;
            const HalfSpacePoint& p = g->points[idx];
            os << "v " << fmt17(p.x) << ' ' << fmt17(p.y) << ' ' << fmt17(p.z) << "\n";
        }
        for (int i = 0; i + 1 < g->domain.n_r; ++i) {
            for (int j = 0; j + 1 < g->domain.n_theta; ++j) {
                const int a = obj_index[g->index(i, j)];
                const int b = obj_index[g->index(i + 1, j)];
                const int c = obj_index[g->index(i + 1, j + 1)];
                const int d = obj_index[g->index(i, j + 1)];
                if (a && b && c && d) {
                    os << "f " << a << ' ' << b << ' ' << c << ' ' << d << "\n";
                    ++faces;
                }
            }
        }
        base = next;
    }
    return faces;
}

void write_csv(std::ostream& os, const std::vector<const SurfaceGrid*>& grids) {
    os << "u,v,r,theta,x,y,z,method\n";
    for (const SurfaceGrid* g : grids) {
        for (int i = 0; i < g->domain.n_r; ++i) {
            for (int j = 0; j < g->domain.n_theta; ++j) {
                const int idx = g->index(i, j);
                if (g->hole[idx]) continue;
                const Complex tau = g->tau[idx];
                const HalfSpacePoint& p = g->points[idx];
                os << fmt17(tau.real()) << ',' << fmt17(tau.imag()) << ','
                   << fmt17(g->domain.r_at(i)) << ',' << fmt17(g->domain.theta_at(j)) << ','
                   << fmt17(p.x) << ',' << fmt17(p.y) << ',' << fmt17(p.z) << ',' << g->tag
                   << "\n";
            }
        }
    }
}

int run_generate(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    std::string why;
    if (!cfg.valid(&why)) {
        err << "invalid configuration: " << why << "\n";
        return kExitParseError;
    }
    HoloExpr e;
    try {
        e = parse(cfg.expression);
    } catch (const ParseError& pe) {
        err << pe.what() << "\n";
        return kExitParseError;
    }

    std::vector<SurfaceGrid> grids;
    try {
        if (cfg.method == Method::both) {
            grids.push_back(bicalo_grid(e, cfg.domain));
            grids.push_back(small_grid(e, cfg.domain));
        } else {
            grids.push_back(build_grid(e, cfg.domain, cfg.method));
        }
        for (const SurfaceGrid& g : grids) {
            if (degeneracy_classify(g) == Degeneracy::point_degenerate) {
                err << degenerate_message(g) << "\n";
                return kExitEmpty;
            }
        }
    } catch (const EmptyGrid& eg) {
        err << eg.what() << "\n";
        return kExitEmpty;
    }

    std::vector<const SurfaceGrid*> ptrs;
    for (const SurfaceGrid& g : grids) ptrs.push_back(&g);

    const std::string csv_path = csv_path_for(cfg.out_path);
    std::ofstream obj(cfg.out_path);
    if (!obj) {
        err << "cannot open " << cfg.out_path << "\n";
        return kExitIo;
    }
    const int faces = write_obj(obj, ptrs);
    obj.flush();
    if (!obj.good()) {
        err << "write failed: " << cfg.out_path << "\n";
        return kExitIo;
    }

    std::ofstream csv(csv_path);
    if (!csv) {
        err << "cannot open " << csv_path << "\n";
        return kExitIo;
    }
    write_csv(csv, ptrs);
    csv.flush();
    if (!csv.good()) {
        err << "write failed: " << csv_path << "\n";
        return kExitIo;
    }

    int vertices = 0;
    for (const SurfaceGrid& g : grids) vertices += g.size() - g.hole_count;
    out << "wrote " << cfg.out_path << " (" << vertices << " vertices, " << faces
        << " faces) and " << csv_path << "\n";
    return kExitOk;
}

int run_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    std::string why;
    if (!cfg.valid(&why)) {
        err << "invalid configuration: " << why << "\n";
        return kExitParseError;
    }
    HoloExpr e;
    try {
        e = parse(cfg.expression);
    } catch (const ParseError& pe) {
        err << pe.what() << "\n";
        return kExitParseError;
    }

    const Timer timer;
    VerificationReport rep;
    std::vector<CheckResult> checks;
    int holes = 0;
    try {
        const SurfaceGrid primary =
            build_grid(e, cfg.domain, cfg.method == Method::both ? Method::bianchi : cfg.method);
        rep = verify_grid(primary, cfg.tolerances);
        checks = rep.checks;
        holes = primary.hole_count;
        if (cfg.method == Method::both) {
            const SurfaceGrid other = small_grid(e, cfg.domain);
            double dev = 0.0;
            for (int idx = 0; idx < primary.size(); ++idx) {
                if (primary.hole[idx] || other.hole[idx]) continue;
                dev = std::max(dev, norm(primary.points[idx].vec() - other.points[idx].vec()));
            }
            checks.push_back(
                {"route_equivalence", dev, cfg.tol_equivalence, dev < cfg.tol_equivalence});
        }
    } catch (const EmptyGrid& eg) {
        err << eg.what() << "\n";
        return kExitEmpty;
    }

    json doc;
    doc["expression"] = cfg.expression;
    doc["domain"] = domain_json(cfg.domain);
    doc["method"] = method_name(cfg.method);
    doc["checks"] = json::array();
    bool all_pass = true;
    for (const CheckResult& c : checks) {
        doc["checks"].push_back({{"name", c.name},
                                 {"max_residual", c.max_residual},
                                 {"tolerance", c.tolerance},
                                 {"pass", c.pass}});
        all_pass = all_pass && c.pass;
    }
    doc["holes"] = holes;
    doc["timing_ms"] = timer.ms();

    std::ofstream rf(cfg.report_path);
    if (!rf) {
        err << "cannot open " << cfg.report_path << "\n";
        return kExitIo;
    }
    rf << doc.dump(2) << "\n";
    rf.flush();
    if (!rf.good()) {
        err << "write failed: " << cfg.report_path << "\n";
        return kExitIo;
    }

    for (const CheckResult& c : checks)
        out << (c.pass ? "[pass] " : "[FAIL] ") << c.name << " max residual " << c.max_residual
            << " vs tolerance " << c.tolerance << "\n";
    return all_pass ? kExitOk : kExitCheckFailed;
}

int run_gallery(const std::string& out_dir, std::ostream& out, std::ostream& err) {
    struct Entry {
        const char* expression;
        const char* slug;
        GridDomain domain;
    };
    constexpr double kTwoPi = 6.283185307179586;
    const std::vector<Entry> entries = {
        {"tau^2", "tau2", {0.5, 2.0, 0.0, kTwoPi, 64, 64}},
        {"log(tau)", "log_tau", {0.5, 2.0, 0.0, 2.0 * kTwoPi, 64, 64}},  // two sheets
        {"exp(tau)", "exp_tau", {0.5, 2.0, 0.0, kTwoPi, 64, 64}},
        {"tau^3+tau", "tau3_plus_tau", {0.5, 2.0, 0.0, kTwoPi, 64, 64}},
    };

    const std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);

    json doc;
    doc["examples"] = json::array();
    for (const Entry& entry : entries) {
        const SurfaceGrid g = bicalo_grid(parse(entry.expression), entry.domain);
        const std::filesystem::path obj_path = dir / (std::string(entry.slug) + ".obj");
        std::ofstream obj(obj_path);
        if (!obj) {
            err << "cannot open " << obj_path.string() << "\n";
            return kExitIo;
        }
        const int faces = write_obj(obj, {&g});
        obj.flush();
        if (!obj.good()) {
            err << "write failed: " << obj_path.string() << "\n";
            return kExitIo;
        }
        const ImageBounds b = grid_image_bounds(g);
        doc["examples"].push_back({{"expression", entry.expression},
                                   {"file", obj_path.filename().string()},
                                   {"domain", domain_json(entry.domain)},
                                   {"holes", g.hole_count},
                                   {"vertices", g.size() - g.hole_count},
                                   {"faces", faces},
                                   {"bbox",
                                    {{"x_min", b.min.x},
                                     {"x_max", b.max.x},
                                     {"y_min", b.min.y},
                                     {"y_max", b.max.y},
                                     {"z_min", b.min.z},
                                     {"z_max", b.max.z}}}});
        out << "wrote " << obj_path.string() << "\n";
    }

    const std::filesystem::path summary = dir / "gallery.json";
    std::ofstream sf(summary);
    if (!sf) {
        err << "cannot open " << summary.string() << "\n";
        return kExitIo;
    }
    sf << doc.dump(2) << "\n";
    sf.flush();
    if (!sf.good()) {
        err << "write failed: " << summary.string() << "\n";
        return kExitIo;
    }
    out << "wrote " << summary.string() << "\n";
    return kExitOk;
}

}  // namespace bicalo::cli
