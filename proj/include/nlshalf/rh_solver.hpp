#pragma once
#include <string>
#include <vector>

#include "nlshalf/rh_problem.hpp"

namespace nlshalf {

struct SolveOptions {
    double tol = 1e-8;        // accepted off-node jump defect
    bool parallel = true;     // threaded assembly of the collocation matrix
    bool estimate_condition = false;
    bool check_residual = true;
};

struct RHSolution {
    std::vector<ProblemArc> arcs;               // geometry + jump snapshot
    std::vector<std::vector<std::vector<Mat2>>> u;  // density [arc][panel][node]
    MomentFrame frame;
    Mat2 N1, N2;  // chart moments
    Mat2 M1, M2;  // physical moments
    double residual = 0;      // sup jump defect at off-node check points
    double det_defect = 0;    // sup |det M - 1| at offset check points
    double cond_estimate = 0;

    Mat2 eval(cplx z) const;  // I + Cauchy transform of the density
    Mat2 eval_boundary(size_t arc, size_t panel, double y, int side) const;
};

RHSolution solve(const RHProblem& prob, const SolveOptions& opt = {});

// Physical field values from the expansion at infinity.
cplx recover_q(const RHSolution& sol);
cplx recover_qx_boundary(const RHSolution& sol, cplx q0t);

void export_solution_csv(const RHSolution& sol, const std::string& path);
void export_solution_json(const RHSolution& sol, const std::string& path);

}  // namespace nlshalf
