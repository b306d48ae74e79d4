"""Mobius inversion, the derangement count and the Lindstrom-Wilf
determinant identity."""

from math import comb, factorial

from .exactmat import bareiss_det
from .posets import PosetError


def _as_values(P, g):
    if isinstance(g, dict):
        return [g[lab] for lab in P.labels]
    vals = list(g)
    if len(vals) != P.n:
        raise PosetError("function length does not match poset size")
    return vals


def forward_up(P, f):
    """g(x) = sum_{y >= x} f(y)."""
    f = _as_values(P, f)
    return [sum(f[y] for y in P.up[x]) for x in range(P.n)]


def forward_down(P, f):
    """g(x) = sum_{y <= x} f(y)."""
    f = _as_values(P, f)
    return [sum(f[y] for y in P.down[x]) for x in range(P.n)]


def invert_up(P, g):
    """Recover f from its up-set sums: f(z) = sum_y mu(z, y) g(y)."""
    g = _as_values(P, g)
    return [sum(P.mobius_idx(z, y) * g[y] for y in P.up[z])
            for z in range(P.n)]


def invert_down(P, g):
    """Recover f from its down-set sums: f(z) = sum_y mu(y, z) g(y)."""
    g = _as_values(P, g)
    return [sum(P.mobius_idx(y, z) * g[y] for y in P.down[z])
            for z in range(P.n)]


def derangements(n):
    """Number of fixed-point-free permutations of n points, by Mobius
    inversion of (n - |S|)! over the subset lattice, cross-checked
    against the alternating-series closed form."""
    if not 0 <= n <= 12:
        raise ValueError(f"n must be in 0..12, got {n}")
    inversion = sum((-1) ** l * comb(n, l) * factorial(n - l)
                    for l in range(n + 1))
    series = sum((-1) ** k * factorial(n) // factorial(k)
                 for k in range(n + 1))
    assert inversion == series
    return inversion


def derangements_bruteforce(n):
    """Enumeration oracle: count permutations with no fixed point."""
    from itertools import permutations
    return sum(all(p[i] != i for i in range(n))
               for p in permutations(range(n)))


def lindstrom_wilf_det(P, f):
    """Build G with (G)_{xy} = sum_{z >= x, z >= y} f(z) and return
    (G, det G).  The determinant always equals the product of f."""
    f = _as_values(P, f)
    G = [[sum(f[z] for z in P.up[x] & P.up[y]) for y in range(P.n)]
         for x in range(P.n)]
    return G, bareiss_det(G)


def lattice_g_inversion(L, g):
    """On a lattice, recover f with f(y) = sum_z mu(y, z) g(z) so that
    sum_{z >= x v y} f(z) reproduces the Lindstrom-Wilf matrix of g."""
    return invert_up(L.poset, g)
