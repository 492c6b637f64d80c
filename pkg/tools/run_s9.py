"""Dev driver: compute the order-9 symmetric power of the corrected
degree-216 standard operator and cache it for inspection."""

import pickle
import time
from fractions import Fraction as F

from lode_atlas import sympow
from lode_atlas.diffop import LinODE
from lode_atlas.ratfun import RatFun

orig = sympow._meik_prime
count = [0]


def dbg(mod, U, m, npoints, p):
    t0 = time.time()
    r = orig(mod, U, m, npoints, p)
    count[0] += 1
    print("prime #%d npts=%d -> %s (%.1fs)"
          % (count[0], npoints, r if isinstance(r, str) else "recs",
             time.time() - t0), flush=True)
    return r


sympow._meik_prime = dbg
orig_lift = sympow._lift_coeffs


def dbg_lift(recs_list, plist, m):
    t0 = time.time()
    r = orig_lift(recs_list, plist, m)
    print("lift over %d primes -> %s (%.1fs)"
          % (len(plist), "OK" if r else "None", time.time() - t0), flush=True)
    return r


sympow._lift_coeffs = dbg_lift

tt1 = (0, -1, 1)
t2t1 = (0, 0, -1, 1)
t3t1 = (0, 0, 0, -1, 1)
hess_corr = LinODE([RatFun(F(-17, 5832), (1,), t3t1),
                    RatFun(F(1, 432), (-181, 960), t2t1),
                    RatFun(F(1, 3), (-7, 12), tt1)])
t0 = time.time()
S9 = sympow.symmetric_power(hess_corr, 9)
print("S^9 order %d (%.1fs)" % (S9.order, time.time() - t0), flush=True)
print("S^9(1) == 0:", S9.coeffs[0].is_zero(), flush=True)
with open("/tmp/s9.pkl", "wb") as fh:
    pickle.dump([(c.c, c.num, c.den) for c in S9.coeffs], fh)
print("saved", flush=True)
