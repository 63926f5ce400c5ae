"""Real orbits on the negative axis just inside and just outside the Shearer radius."""

from indzero.certify import orbit
from indzero.regions import shearer_radius

if __name__ == "__main__":
    d = 2
    print(f"lambda*({d}) = {shearer_radius(d):.6f}")
    for lam in (-0.14, -0.148, -0.15, -0.17):
        o = orbit(d, lam, 2000)
        one_plus = o.one_plus.real
        first_neg = next((i for i, v in enumerate(one_plus) if v < 0), None)
        print(f"lambda={lam:+.3f}  min(1+x)={one_plus.min():+.6f}  "
              f"first 1+x<0 at n={first_neg}  ({o.reason})")
