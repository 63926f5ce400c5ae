"""Zero-freeness of the independence polynomial on bounded-degree graphs."""

__version__ = "0.1.0"

from .errors import (CapExceeded, DegenerateCurveError, DomainError, GraphParseError,
                     IndZeroError, PreconditionError, SolverError)
from .complexgeom import (CoverWitness, angle_between, arg1p, as_point, covered_by_polyline,
                          covers, cpow, geo_mean_dominates, principal_log)
from .graphs import (Graph, gen_all_trees, gen_complete_dary_tree, gen_free_trees,
                     gen_layered_tree, max_degree, parse_edge_list, to_edge_list)
from .indpoly import (IndPoly, LogZApprox, coeffs_by_size_enumeration, evaluate, ind_poly,
                      min_abs_over_catalog, power_sums, taylor_log_z)
from .regions import (ModelParams, RegionBoundary, RegionVerdict, beta_star, boundary_polyline,
                      cardioid_contains, cardioid_point, critical_region_bound,
                      critical_region_contains, lhp_bound, region_membership, rhp_bound,
                      shearer_radius, theta_d, uniqueness_threshold)
from .certify import (Certificate, CertifyOptions, CurveSamples, OrbitResult, RhpCurveParams,
                      SokalParams, Status, certify_simons, h_curve, orbit, orbit_w,
                      rhp_curve_check, rhp_proof_params, scan_grid, sokal_curve_check, tau_star)
