from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

import nokwidth.logger as logger_mod
from nokwidth.errors import InternalInvariantError
from nokwidth.rootsys import RootSystem, Weight, is_weight_of, require_dominant

log = logger_mod.get_logger()


def freudenthal_multiplicities(
    rs: RootSystem, lam: Weight | Sequence[int]
) -> dict[tuple[int, ...], int]:
    """dim V(lambda)_(lambda - nu) for every weight, keyed by nu.

    Freudenthal's recursion with denominators taken as differences:
    |lambda+rho|^2 - |mu+rho|^2 = 2(lambda+rho, nu) - (nu, nu).
    """
    lam = require_dominant(rs, lam)
    n = rs.rank
    d = rs.sym
    lam_dot = [d[j] * lam.coords[j] for j in range(n)]

    mult: dict[tuple[int, ...], int] = {(0,) * n: 1}
    layer = [(0,) * n]
    while layer:
        nxt: set[tuple[int, ...]] = set()
        for nu in layer:
            for i in range(n):
                up = tuple(c + (1 if k == i else 0) for k, c in enumerate(nu))
                if up not in mult and is_weight_of(rs, lam, up):
                    nxt.add(up)
        for nu in sorted(nxt):
            den = 2 * sum(nu[j] * d[j] * (lam.coords[j] + 1) for j in range(n)) - rs.inner(nu, nu)
            num = Fraction(0)
            for beta in rs.positive_roots:
                b = beta.coords
                lam_beta = sum(b[j] * lam_dot[j] for j in range(n))
                k = 1
                while True:
                    low = tuple(x - k * y for x, y in zip(nu, b))
                    if any(c < 0 for c in low):
                        break
                    m = mult.get(low, 0)
                    if m:
                        num += m * (lam_beta - rs.inner(low, b))
                    k += 1
            val = Fraction(2) * num / den
            if val.denominator != 1 or val < 0:
                raise InternalInvariantError(f"Freudenthal gave {val} at nu={nu}")
            if val:
                mult[nu] = int(val)
        layer = [nu for nu in sorted(nxt) if nu in mult]
    log.debug(f"Freudenthal V{lam.coords}: {len(mult)} weights, dim {sum(mult.values())}")
    return mult
