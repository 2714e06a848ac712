"""Lifting a difference family of K_m[w] to cycle systems of K_m[ws].

Each base l-cycle C of an (mw, w, C_l)-DF gives s cycles C^0, ..., C^{s-1}
of length l*u in Z_{mws}.  Vertices with even index stay put, odd ones are
shifted by j*mw, and for odd l the last vertex is shifted by half of that (2
is invertible mod s).  For u > 1 the l-block is repeated u times, each copy
moved on by (s/u)*mw, so that C^j is fixed by that translation.
"""

from __future__ import annotations

from .zmod import CycleSystem, DifferenceFamily, Orbit, delta_cycle, stabilizer_order


def _check(df: DifferenceFamily, s: int, u: int) -> None:
    if s < 1 or u < 1 or s % u:
        raise ValueError("need u | s")
    if (df.ell * (s - 1)) % 2:
        raise ValueError("need ell (s - 1) even")


def lifted_cycle(cycle, mw: int, s: int, u: int, j: int) -> tuple[int, ...]:
    ell = len(cycle)
    V = mw * s
    c = [x % mw for x in cycle]
    half = (j * pow(2, -1, s)) % s if ell % 2 and s > 1 else 0
    block = []
    for i, x in enumerate(c):
        if i % 2:
            block.append(x + j * mw)
        elif i == ell - 1:
            block.append(x + half * mw)
        else:
            block.append(x)
    t = s // u
    out = []
    for q in range(u):
        out.extend((x + q * t * mw) % V for x in block)
    return tuple(out)


def blow_up_df(df: DifferenceFamily, s: int) -> DifferenceFamily:
    """(mws, ws, C_l)-DF from an (mw, w, C_l)-DF; ell(s-1) must be even."""
    _check(df, s, 1)
    mw = df.m * df.n
    cycles = tuple(lifted_cycle(c, mw, s, 1, j) for c in df.base_cycles for j in range(s))
    return DifferenceFamily(df.m, df.n * s, df.ell, cycles)


def blow_up_system(df: DifferenceFamily, s: int, u: int) -> CycleSystem:
    """Cyclic (ell u)-cycle system of K_m[ws]; each orbit has stabilizer of order u."""
    _check(df, s, u)
    mw = df.m * df.n
    V = mw * s
    orbits = []
    for c in df.base_cycles:
        for j in range(s):
            cj = lifted_cycle(c, mw, s, u, j)
            orbits.append(Orbit(cj, u, V // u))
    return CycleSystem(df.m, df.n * s, df.ell * u, tuple(orbits))


def hit_index(df: DifferenceFamily, s: int, u: int, d: int) -> tuple[int, int]:
    """(base cycle index, j) such that d lies in the difference list of C^j.

    Finds the edge (c_i, c_{i+1}) of the base family whose difference is
    congruent to +-d mod mw, writes +-d = (c_{i+1} - c_i) + J*mw and reads j
    off from J according to the position i.
    """
    mw = df.m * df.n
    V = mw * s
    t = s // u
    d %= V
    for idx, cyc in enumerate(df.base_cycles):
        c = [x % mw for x in cyc]
        ell = len(c)
        for i in range(ell):
            delta = c[(i + 1) % ell] - c[i]
            for dd in (d, V - d):
                if (dd - delta) % mw:
                    continue
                J = ((dd - delta) // mw) % s
                if i % 2 == 0 and i <= ell - 2:
                    h = J
                elif i % 2 and i <= ell - 3:
                    h = -J
                elif i == ell - 2:
                    h = -2 * J
                elif i % 2 == 0:
                    h = 2 * (t - J)
                else:
                    h = t - J
                return idx, h % s
    raise ValueError(f"{d} is not hit by any edge")


def check_hit_certificate(df: DifferenceFamily, s: int, u: int) -> bool:
    """Every d outside mZ_{mws} appears in the difference list its hit_index names."""
    mw = df.m * df.n
    V = mw * s
    lists = {}
    for d in range(1, V):
        if d % df.m == 0:
            continue
        idx, h = hit_index(df, s, u, d)
        key = (idx, h)
        if key not in lists:
            lists[key] = set(delta_cycle(lifted_cycle(df.base_cycles[idx], mw, s, u, h), V))
        if d not in lists[key]:
            return False
    return True


def orbit_summary(system: CycleSystem) -> list[tuple[int, int]]:
    """(stabilizer, orbit length) recomputed from scratch for each base cycle."""
    v = system.v
    return [(stabilizer_order(o.base, v), v // stabilizer_order(o.base, v)) for o in system.orbits]
