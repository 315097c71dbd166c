#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bicalo/surface.hpp"
#include "bicalo/verify.hpp"

namespace bicalo::cli {

enum class Method { bianchi, small, both };

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitEmpty = 3;
inline constexpr int kExitIo = 4;
inline constexpr int kExitCheckFailed = 5;

struct JobConfig {
    std::string expression;
    GridDomain domain;
    Method method = Method::bianchi;
    std::string out_path = "surface.obj";
    std::string report_path = "report.json";
    VerifyTolerances tolerances;
    double tol_equivalence = 1e-9;

    // 0 <= r_min < r_max, theta_min < theta_max, n >= 2, tolerances > 0.
    bool valid(std::string* why = nullptr) const;
};

// Writes vertices ("v x y z", 17 significant digits) for every non-hole
// node and quad faces for grid cells whose four corners are non-hole.
// Returns the number of faces written.
int write_obj(std::ostream& os, const std::vector<const SurfaceGrid*>& grids);

// Fixed columns u,v,r,theta,x,y,z,method; one row per non-hole node,
// row-major over each grid in turn.
void write_csv(std::ostream& os, const std::vector<const SurfaceGrid*>& grids);

// generate: OBJ mesh + CSV samples next to it (extension swapped to .csv).
int run_generate(const JobConfig& cfg, std::ostream& out, std::ostream& err);

// verify: JSON report at cfg.report_path; exit 0 iff every check passes.
int run_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err);

// gallery: built-in catalog as OBJ meshes plus gallery.json in out_dir.
int run_gallery(const std::string& out_dir, std::ostream& out, std::ostream& err);

// "surface.obj" -> "surface.csv".
std::string csv_path_for(const std::string& obj_path);

}  // namespace bicalo::cli
