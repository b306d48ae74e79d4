"""Acceptance suite: twenty exact identity checks, one per criterion.

Each test prints a single pass/fail line.  All arithmetic is exact
(integers and fractions); every comparison is equality.
"""

import math
import random
from itertools import combinations, permutations

from mobiuslab import complexes, inversion, lattices, matroid
from mobiuslab import nulldesigns, treedist
from mobiuslab.exactmat import identity, mat_mul
from mobiuslab.instances import (Graph, boolean_lattice, complete_graph,
                                 contraction_lattice, partition_lattice,
                                 random_connected_graph, random_poset,
                                 random_tree, subspace_lattice)


def _report(num, name, ok, extra=""):
    line = f"criterion {num:2d} ({name}): {'pass' if ok else 'FAIL'}"
    if extra:
        line += f"  [{extra}]"
    print(line)
    assert ok, line


def test_criterion_01_inversion_round_trip():
    rng = random.Random(1001)
    ok = True
    for _ in range(500):
        P = random_poset(rng.randrange(1, 13), rng.random(),
                         rng.randrange(2 ** 30))
        M, Z = P.mobius_matrix(), P.zeta_matrix()
        ok = ok and mat_mul(M, Z) == identity(P.n)
        ok = ok and mat_mul(Z, M) == identity(P.n)
        f = [rng.randrange(-9, 10) for _ in range(P.n)]
        ok = ok and inversion.invert_up(P, inversion.forward_up(P, f)) == f
        ok = ok and (inversion.invert_down(P, inversion.forward_down(P, f))
                     == f)
        if not ok:
            break
    _report(1, "inversion round-trip", ok)


def test_criterion_02_boolean_mobius_values():
    ok = True
    for n in range(1, 9):
        P = boolean_lattice(n).poset
        for a in range(P.n):
            row = P.mobius_row(a)
            for b in P.up[a]:
                diff = len(P.labels[b]) - len(P.labels[a])
                if row[b] != (-1) ** diff:
                    ok = False
    _report(2, "subset-lattice mu values", ok)


def test_criterion_03_hall_chain_sum():
    rng = random.Random(1003)
    ok = True
    for _ in range(120):
        P = random_poset(rng.randrange(1, 11), rng.random(),
                         rng.randrange(2 ** 30))
        for a in range(P.n):
            for b in P.up[a]:
                if P.mobius_by_chains(a, b) != P.mobius_idx(a, b):
                    ok = False
    _report(3, "Hall chain sum", ok)


def test_criterion_04_derangements():
    ok = all(inversion.derangements(n) == inversion.derangements_bruteforce(n)
             for n in range(8))
    ok = ok and inversion.derangements_bruteforce(7) == 1854
    for n in range(13):
        inversion.derangements(n)
    _report(4, "derangement counts", ok)


def test_criterion_05_lindstrom_wilf():
    rng = random.Random(1005)
    ok = True
    for _ in range(100):
        P = random_poset(rng.randrange(1, 9), rng.random(),
                         rng.randrange(2 ** 30))
        f = [rng.randrange(-5, 6) for _ in range(P.n)]
        _, det = inversion.lindstrom_wilf_det(P, f)
        prod = 1
        for v in f:
            prod *= v
        ok = ok and det == prod
    _report(5, "Lindstrom-Wilf determinant", ok)


def test_criterion_06_tree_distance():
    rng = random.Random(1006)
    ok = True
    count = 0
    while count < 100:
        for n in range(2, 13):
            g = random_tree(n, rng.randrange(2 ** 30))
            T = treedist.RootedTree.from_graph(g, rng.randrange(n))
            ok = ok and treedist.graham_lovasz_check(T)["pass"]
            det = treedist.graham_pollak_det(T)
            ok = ok and det == (n - 1) * (-1) ** (n - 1) * 2 ** (n - 2)
            treedist.distance_inverse(T)
            count += 1
    _report(6, "tree distance identities", ok)


def test_criterion_07_euler_characteristic():
    rng = random.Random(1007)
    ok = True
    for _ in range(500):
        P = random_poset(rng.randrange(1, 11), rng.random(),
                         rng.randrange(2 ** 30))
        chi = complexes.order_complex(P).euler_characteristic()
        ok = ok and chi == 1 + P.mobius_number()
    _report(7, "order-complex Euler characteristic", ok)


def test_criterion_08_fibre_decomposition():
    rng = random.Random(1008)
    ok = True
    for _ in range(200):
        P = random_poset(rng.randrange(1, 9), rng.random(),
                         rng.randrange(2 ** 30))
        Q = random_poset(rng.randrange(1, 7), rng.random(),
                         rng.randrange(2 ** 30))
        f = complexes.random_monotone_map(P, Q, rng.randrange(2 ** 30))
        ok = ok and complexes.verify_baclawski(f)["pass"]
    _report(8, "monotone-map fibre identity", ok)


def test_criterion_09_weisner():
    suite = ([boolean_lattice(n) for n in range(1, 6)]
             + [subspace_lattice(2, n) for n in range(1, 4)]
             + [partition_lattice(n) for n in range(2, 6)])
    ok = True
    for L in suite:
        for a in range(L.n):
            if a == L.zero:
                continue
            ok = ok and lattices.weisner_check(L, a)["pass"]
    _report(9, "Weisner's lemma", ok)


def test_criterion_10_cutset_formula():
    ok = True
    for n in range(1, 5):
        L = boolean_lattice(n)
        ok = ok and (lattices.cutset_mobius(L, L.atoms())
                     == L.poset.mobius_idx(L.zero, L.one))
    L = subspace_lattice(2, 3)
    value = lattices.cutset_mobius(L, L.atoms())
    ok = ok and value == -8 == L.poset.mobius_idx(L.zero, L.one)
    _report(10, "cutset alternating sum", ok, f"B_2(3) gives {value}")


def test_criterion_11_complement_deletion():
    ok = True
    for L in (boolean_lattice(4), subspace_lattice(2, 3),
              partition_lattice(4)):
        for a in range(L.n):
            if a in (L.zero, L.one):
                continue
            ok = ok and lattices.walker_complement_check(L, a)["pass"]
    _report(11, "complement deletion", ok)


def test_criterion_12_modular_factorization():
    ok = True
    for q, n in ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3)):
        L = subspace_lattice(q, n)
        r = lattices.modular_factorization(L, L.atoms()[0])
        want = (-1) ** n * q ** math.comb(n, 2)
        ok = ok and r["pass"] and r["lhs"] == want
    P2 = partition_lattice(2)
    ok = ok and P2.poset.mobius_idx(P2.zero, P2.one) == -1
    for n in range(3, 8):
        L = partition_lattice(n)
        r = lattices.modular_factorization(L, L.atoms()[0])
        want = (-1) ** (n - 1) * math.factorial(n - 1)
        ok = ok and r["pass"] and r["lhs"] == want
    _report(12, "modular factorization", ok)


def test_criterion_13_nbc_stirling():
    rng = random.Random(1013)
    ok = True
    for n in range(2, 8):
        M = matroid.AtomMatroid(partition_lattice(n))
        want = [matroid.stirling_first_unsigned(n, n - k)
                for k in range(n)]
        ok = ok and matroid.nbc_counts(M) == want
        for _ in range(5):
            order = list(M.atoms)
            rng.shuffle(order)
            ok = ok and matroid.nbc_counts(M, order) == want
    _report(13, "broken-circuit counts are Stirling numbers", ok)


def _connected_graphs_up_to_iso(n):
    """All connected graphs on n labeled vertices, one per isomorphism
    class, canonicalized by the minimum edge bitmask over relabelings."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        g = Graph(n, edges)
        if not g.is_connected():
            continue
        best = None
        for perm in permutations(range(n)):
            mask = 0
            for u, v in edges:
                a, b = sorted((perm[u], perm[v]))
                mask |= 1 << pairs.index((a, b))
            if best is None or mask < best:
                best = mask
        if best not in seen:
            seen.add(best)
            out.append(g)
    return out


def test_criterion_14_chromatic_polynomial():
    rng = random.Random(1014)
    graphs = []
    for n in range(1, 6):
        graphs.extend(_connected_graphs_up_to_iso(n))
    for _ in range(50):
        e = rng.randrange(5, 16)
        graphs.append(random_connected_graph(6, e, rng.randrange(2 ** 30)))
    ok = True
    for g in graphs:
        poly = matroid.chromatic_polynomial(g)
        ok = ok and poly == matroid.chromatic_oracle(g)
        for k in range(4):
            ok = ok and (matroid.poly_eval(poly, k)
                         == matroid.coloring_count(g, k))
    _report(14, "chromatic polynomial", ok,
            f"{len(graphs)} graphs checked")


def test_criterion_15_codeword_weights():
    rng = random.Random(1015)
    ok = True
    done = 0
    while done < 20:
        q = 2 if done % 2 == 0 else 3
        k = rng.randrange(2, 5)
        ncols = rng.randrange(k, 7)
        g = [[rng.randrange(q) for _ in range(ncols)] for _ in range(k)]
        if any(all(g[i][j] == 0 for i in range(k)) for j in range(ncols)):
            continue
        t = 2 if done < 5 else None
        r = matroid.codeword_weight_check(g, q, t=t)
        ok = ok and r["pass"]
        done += 1
    _report(15, "codeword weight counts", ok)


def test_criterion_16_join_complement_permutation():
    ok = True
    suite = ([boolean_lattice(n) for n in range(2, 6)]
             + [subspace_lattice(2, 3), partition_lattice(5)])
    for L in suite:
        r = lattices.dowling_wilson_check(L)
        ok = ok and r["pass"] and r["lhs"] == r["rhs"] != 0
        for k in range(L.height // 2 + 1):
            ok = ok and lattices.top_heavy_check(L, k)["pass"]
    _report(16, "join-complement permutation and top-heaviness", ok)


def test_criterion_17_points_vs_hyperplanes():
    ok = True
    for L in (boolean_lattice(3), boolean_lattice(4), boolean_lattice(5),
              subspace_lattice(2, 3), subspace_lattice(3, 2)):
        r = lattices.basterfield_kelly_check(L)
        ok = ok and r["pass"] and r["modular"] and r["lhs"] == r["rhs"]
    from mobiuslab.instances import cycle_graph
    for L in (partition_lattice(4), partition_lattice(5),
              contraction_lattice(cycle_graph(4)),
              contraction_lattice(cycle_graph(5))):
        r = lattices.basterfield_kelly_check(L)
        ok = ok and r["pass"] and not r["modular"] and r["lhs"] < r["rhs"]
    _report(17, "points vs hyperplanes", ok)


def test_criterion_18_incidence_rank():
    geometric = (boolean_lattice(4), subspace_lattice(2, 3),
                 partition_lattice(4), partition_lattice(5),
                 contraction_lattice(complete_graph(4)))
    ok = all(lattices.kung_check(L, 1)["pass"] for L in geometric)
    for L in (boolean_lattice(3), boolean_lattice(4),
              subspace_lattice(2, 2), subspace_lattice(2, 3),
              subspace_lattice(3, 2)):
        ok = ok and (len(lattices.join_irreducibles(L))
                     == len(lattices.meet_irreducibles(L)))
    _report(18, "incidence matrix rank and irreducibles", ok)


def test_criterion_19_point_deletion():
    ok = True
    for L in (boolean_lattice(4), subspace_lattice(2, 3),
              contraction_lattice(complete_graph(4))):
        for p in L.atoms():
            _, report = lattices.point_deletion(L, p)
            ok = ok and report["pass"]
    _report(19, "point deletion recursion", ok)


def _stirling2(m, k):
    if k == 0:
        return int(m == 0)
    return sum((-1) ** (k - j) * math.comb(k, j) * j ** m
               for j in range(k + 1)) // math.factorial(k)


def test_criterion_20_null_design_support_bounds():
    ok = True
    for n in range(1, 9):
        P = boolean_lattice(n).poset
        S = nulldesigns.MeetSemilattice(P)
        for b in range(P.n):
            want = 2 ** len(P.labels[b])
            ok = ok and nulldesigns.support_lower_bound(S, b) == want
    for q, n in ((2, 2), (2, 3), (2, 4), (3, 2)):
        L = subspace_lattice(q, n)
        S = nulldesigns.MeetSemilattice(L.poset)
        for b in range(L.n):
            want = 1
            for i in range(L.rank[b]):
                want *= 1 + q ** i
            ok = ok and nulldesigns.support_lower_bound(S, b) == want
    # claimed closed form for partitions: if b has exactly n - k cells,
    # the sum of |mu(c, b)| over c <= b is (n - k)!
    counterexamples = []
    confirmed = True
    for n in range(2, 8):
        L = partition_lattice(n)
        S = nulldesigns.MeetSemilattice(L.poset)
        for b in range(L.n):
            digits = L.poset.labels[b]
            cells = sorted(set(digits))
            got = nulldesigns.support_lower_bound(S, b)
            claim = math.factorial(len(cells))
            if got != claim:
                confirmed = False
                if len(counterexamples) < 3:
                    counterexamples.append((n, digits, claim, got))
            # the factorization that actually holds: the product over
            # cells of sum_k S(m, k) (k-1)! for cell size m
            want = 1
            for d in cells:
                m = digits.count(d)
                want *= sum(_stirling2(m, k) * math.factorial(k - 1)
                            for k in range(1, m + 1))
            ok = ok and got == want
    extra = "partition closed form confirmed"
    if not confirmed:
        extra = ("FINDING: factorial closed form for partitions refuted, "
                 "e.g. " + "; ".join(
                     f"n={n} b={b!r} claimed {c} actual {g}"
                     for n, b, c, g in counterexamples)
                 + "; the verified form is the product over cells of "
                   "sum_k S(m,k)(k-1)!")
    _report(20, "null design support bounds", ok, extra)
