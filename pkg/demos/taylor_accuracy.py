"""Truncated Taylor approximation of log Z against exact evaluation."""

import cmath
import random

from indzero.graphs import gen_complete_dary_tree, gen_layered_tree
from indzero.indpoly import evaluate, ind_poly, taylor_log_z
from indzero.regions import shearer_radius

if __name__ == "__main__":
    rnd = random.Random(0)
    graphs = {"binary tree depth 3": gen_complete_dary_tree(2, 3),
              "layered [3,2]": gen_layered_tree([3, 2])}
    lam_r = 0.5 * shearer_radius(3)
    for name, g in graphs.items():
        p = ind_poly(g)
        lam = cmath.rect(lam_r, rnd.uniform(-3.14, 3.14))
        z = evaluate(p, lam)
        for m in (5, 10, 20, 40):
            a = taylor_log_z(p, lam, m, root_lower_bound=shearer_radius(3))
            rel = abs(cmath.exp(a.value) - z) / abs(z)
            print(f"{name:22s} m={m:2d} rel_err={rel:.3e} tail_bound={a.tail_bound:.3e}")
