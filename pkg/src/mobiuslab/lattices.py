"""Lattice recognition, rank theory, and the geometric-lattice identity
suite (Weisner, cutsets, complements, modular factorization,
point/hyperplane counting, Kung's theorem, point deletion)."""

from .exactmat import bareiss_det, int_row_rank, mat_mul, transpose
from .posets import PosetError


class LatticeError(PosetError):
    pass


class NotRankedError(LatticeError):
    pass


# lattices up to this size get full join/meet tables on construction;
# larger ones compute bounds on demand with memoization
_EAGER_LIMIT = 400


class Lattice:
    """A poset in which every pair has a join and a meet.

    Element indices are the underlying poset's (linear-extension order),
    so index 0 is the zero and index n-1 is the one.
    """

    def __init__(self, poset, validate=True):
        self.poset = poset
        n = poset.n
        if n == 0:
            raise LatticeError("empty poset is not a lattice")
        minimals = [i for i in range(n) if len(poset.down[i]) == 1]
        maximals = [i for i in range(n) if len(poset.up[i]) == 1]
        if len(minimals) != 1 or len(maximals) != 1:
            raise LatticeError("poset is not bounded: "
                               f"{len(minimals)} minimal / "
                               f"{len(maximals)} maximal elements")
        self.zero = minimals[0]
        self.one = maximals[0]
        self.n = n
        self._join = {}
        self._meet = {}
        self._rank = None
        if validate and n <= _EAGER_LIMIT:
            for i in range(n):
                for j in range(i + 1, n):
                    self.join(i, j)
                    self.meet(i, j)

    def _bound(self, i, j, sets, cache):
        key = (i, j) if i < j else (j, i)
        got = cache.get(key)
        if got is not None:
            return got
        candidates = sets[i] & sets[j]
        best = max(candidates, key=lambda u: len(sets[u]))
        if not candidates <= sets[best]:
            kind = "upper" if sets is self.poset.up else "lower"
            raise LatticeError(
                f"no least {kind} bound for witness pair "
                f"({self.poset.labels[i]!r}, {self.poset.labels[j]!r})")
        cache[key] = best
        return best

    def join(self, i, j):
        if i == j:
            return i
        return self._bound(i, j, self.poset.up, self._join)

    def meet(self, i, j):
        if i == j:
            return i
        return self._bound(i, j, self.poset.down, self._meet)

    def join_set(self, indices):
        out = self.zero
        for i in indices:
            out = self.join(out, i)
        return out

    def meet_set(self, indices):
        out = self.one
        for i in indices:
            out = self.meet(out, i)
        return out

    @property
    def rank(self):
        """Per-element rank (longest chain from zero), validated against
        the Jordan-Dedekind condition."""
        if self._rank is None:
            P = self.poset
            r = [0] * self.n
            for i, j in P.covers:
                r[j] = max(r[j], r[i] + 1)
            for i, j in P.covers:
                if r[j] != r[i] + 1:
                    raise NotRankedError(
                        "unequal maximal chains below witness pair "
                        f"({P.labels[i]!r}, {P.labels[j]!r})")
            self._rank = r
        return self._rank

    @property
    def height(self):
        return self.rank[self.one]

    def atoms(self):
        return sorted(j for i, j in self.poset.covers if i == self.zero)

    def coatoms(self):
        return sorted(i for i, j in self.poset.covers if j == self.one)

    def complements(self, a):
        return [x for x in range(self.n)
                if self.meet(a, x) == self.zero and self.join(a, x) == self.one]

    def interval_lattice(self, a, b):
        sub = self.poset.restrict(self.poset.up[a] & self.poset.down[b])
        return Lattice(sub)

    def labels(self, indices):
        return [self.poset.labels[i] for i in indices]

    def __repr__(self):
        return f"Lattice(n={self.n})"


def as_lattice(P):
    return Lattice(P)


# -- predicates ----------------------------------------------------------

def is_semimodular(L):
    """Rank inequality r(a^b) + r(avb) <= r(a) + r(b) for all pairs."""
    r = L.rank
    for a in range(L.n):
        for b in range(a + 1, L.n):
            if r[L.meet(a, b)] + r[L.join(a, b)] > r[a] + r[b]:
                return False
    return True


def is_atomistic(L):
    atoms = L.atoms()
    for x in range(L.n):
        if x == L.zero:
            continue
        below = [p for p in atoms if x in L.poset.up[p]]
        if L.join_set(below) != x:
            return False
    return True


def is_geometric(L):
    return is_semimodular(L) and is_atomistic(L)


def is_modular_element(L, a):
    """Rank equality against every b, cross-checked against the
    complements-form-an-antichain criterion."""
    r = L.rank
    by_rank = all(r[L.meet(a, b)] + r[L.join(a, b)] == r[a] + r[b]
                  for b in range(L.n))
    comp = L.complements(a)
    up = L.poset.up
    by_antichain = not any(y in up[x] for x in comp for y in comp if x != y)
    if by_rank != by_antichain:
        raise AssertionError(
            f"modularity criteria disagree at {L.poset.labels[a]!r}: "
            f"rank says {by_rank}, antichain says {by_antichain}")
    return by_rank


def is_modular_lattice(L):
    """Dedekind equality a v (b ^ c) = (a v b) ^ c on all triples a <= c."""
    up = L.poset.up
    for a in range(L.n):
        for c in up[a]:
            for b in range(L.n):
                if L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c):
                    return False
    return True


def whitney_numbers(L):
    """W_k = number of elements of rank k."""
    counts = [0] * (L.height + 1)
    for x in range(L.n):
        counts[L.rank[x]] += 1
    assert counts[0] == 1 and counts[-1] == 1
    return counts


def whitney_rank_sums(L):
    """Signed sums w_k = sum_{r(a)=k} mu(0, a)."""
    mu0 = L.poset.mobius_row(L.zero)
    sums = [0] * (L.height + 1)
    for x in range(L.n):
        sums[L.rank[x]] += mu0[x]
    return sums


# -- identity checks -----------------------------------------------------

def weisner_check(L, a):
    """mu(0,1) = -sum over x < 1 with x v a = 1 of mu(0,x)."""
    if a == L.zero:
        raise LatticeError("Weisner's lemma needs a != 0")
    mu0 = L.poset.mobius_row(L.zero)
    lhs = mu0[L.one]
    witnesses = [x for x in range(L.n)
                 if x != L.one and L.join(x, a) == L.one]
    rhs = -sum(mu0[x] for x in witnesses)
    return {"identity": "Weisner", "lhs": lhs, "rhs": rhs,
            "pass": lhs == rhs, "witnesses": L.labels(witnesses)}


def is_cutset(L, cut):
    """A cutset meets every maximal chain from 0 to 1.  Returns a witness
    maximal chain avoiding the set, or None if the set is a cutset."""
    cut = set(cut)
    succ = {}
    for i, j in L.poset.covers:
        succ.setdefault(i, []).append(j)
    if L.zero in cut:
        return None

    def dfs(x, chain):
        if x == L.one:
            return list(chain)
        for y in succ.get(x, []):
            if y in cut:
                continue
            chain.append(y)
            hit = dfs(y, chain)
            if hit:
                return hit
            chain.pop()
        return None

    return dfs(L.zero, [L.zero])


def cutset_mobius(L, cut):
    """mu(0,1) via the alternating count of subsets of the cutset that
    admit no bound strictly inside the lattice."""
    from itertools import combinations
    cut = sorted(set(cut))
    witness = is_cutset(L, cut)
    if witness is not None:
        raise LatticeError("not a cutset; untouched maximal chain: "
                           + " < ".join(L.labels(witness)))
    inner = {x for x in range(L.n) if x not in (L.zero, L.one)}
    total = 0
    for k in range(1, len(cut) + 1):
        a_k = 0
        for S in combinations(cut, k):
            if L.join_set(S) not in inner and L.meet_set(S) not in inner:
                a_k += 1
        total += (-1) ** k * a_k
    return total


def walker_complement_check(L, a):
    """mu of L' minus the complements of a is zero."""
    if a in (L.zero, L.one):
        raise LatticeError("element must lie strictly between 0 and 1")
    comp = set(L.complements(a))
    keep = [x for x in range(L.n)
            if x not in comp and x not in (L.zero, L.one)]
    value = L.poset.restrict(keep).mobius_number()
    return {"identity": "complement deletion", "lhs": value, "rhs": 0,
            "pass": value == 0, "witnesses": L.labels(sorted(comp))}


def _check_join_isomorphism(L, a, x):
    """Verify t -> t v x maps [x^a, a] bijectively and order-preservingly
    onto [x, x v a]."""
    lo, hi = L.meet(a, x), L.join(a, x)
    source = sorted(L.poset.up[lo] & L.poset.down[a])
    target = set(L.poset.up[x] & L.poset.down[hi])
    image = [L.join(t, x) for t in source]
    if sorted(set(image)) != sorted(target):
        return False
    up = L.poset.up
    for s, t in zip(source, image):
        for s2, t2 in zip(source, image):
            if (s2 in up[s]) != (t2 in up[t]):
                return False
    return True


def modular_factorization(L, a):
    """mu(0,1) = mu(0,a) * sum over complements x of a of mu(0,x), for a
    modular element a strictly between 0 and 1."""
    if a in (L.zero, L.one):
        raise LatticeError("need 0 < a < 1")
    if not is_modular_element(L, a):
        raise LatticeError(f"{L.poset.labels[a]!r} is not modular")
    mu0 = L.poset.mobius_row(L.zero)
    comp = L.complements(a)
    lhs = mu0[L.one]
    rhs = mu0[a] * sum(mu0[x] for x in comp)
    iso_ok = all(_check_join_isomorphism(L, a, x) for x in comp)
    return {"identity": "modular factorization", "lhs": lhs, "rhs": rhs,
            "pass": lhs == rhs and iso_ok,
            "witnesses": L.labels(comp)}


def _perfect_matching(support, n):
    """Kuhn augmenting-path matching on row -> allowed-columns lists.
    Returns a permutation list or None."""
    match_col = [None] * n

    def augment(row, seen):
        for col in support[row]:
            if col in seen:
                continue
            seen.add(col)
            if match_col[col] is None or augment(match_col[col], seen):
                match_col[col] = row
                return True
        return False

    for row in range(n):
        if not augment(row, set()):
            return None
    perm = [None] * n
    for col, row in enumerate(match_col):
        perm[row] = col
    return perm


def dowling_wilson_check(L):
    """det of the join-hits-one matrix equals prod_p mu(p,1) != 0, and a
    permutation with q v sigma(q) = 1 is extracted from its support."""
    mu_top = L.poset.mobius_col(L.one)
    bad = [p for p in range(L.n) if mu_top[p] == 0]
    if bad:
        raise LatticeError("hypothesis fails: mu(p,1) = 0 at "
                           f"{L.poset.labels[bad[0]]!r}")
    G = [[1 if L.join(p, q) == L.one else 0 for q in range(L.n)]
         for p in range(L.n)]
    det = bareiss_det(G)
    prod = 1
    for p in range(L.n):
        prod *= mu_top[p]
    support = [[q for q in range(L.n) if G[p][q]] for p in range(L.n)]
    perm = _perfect_matching(support, L.n)
    ok = det == prod and det != 0 and perm is not None
    ok = ok and all(L.join(p, perm[p]) == L.one for p in range(L.n))
    ok = ok and perm[L.zero] == L.one
    return {"identity": "join-complement permutation", "lhs": det,
            "rhs": prod, "pass": ok,
            "permutation": None if perm is None else
            [L.poset.labels[q] for q in perm]}


def top_heavy_check(L, k):
    """W_0 + ... + W_k <= W_{d-k} + ... + W_d."""
    W = whitney_numbers(L)
    d = L.height
    lhs = sum(W[:k + 1])
    rhs = sum(W[d - k:])
    return {"identity": "top-heavy partial sums", "lhs": lhs, "rhs": rhs,
            "pass": lhs <= rhs, "witnesses": []}


def dowling_complement_check(L):
    """Build the entrywise matrix M with (M)_{pq} = Mobius number of
    {x in L': x v p < 1, x <= q}, relate it to the product -Z^T D H
    (which equals -M transposed on the inner block), check that product
    is nonsingular, and extract a complement-pairing permutation from
    its support."""
    mu0 = L.poset.mobius_row(L.zero)
    mu_top = L.poset.mobius_col(L.one)
    bad = [p for p in range(L.n) if mu0[p] == 0 or mu_top[p] == 0]
    if bad:
        raise LatticeError("hypothesis fails: mu(0,p) mu(p,1) = 0 at "
                           f"{L.poset.labels[bad[0]]!r}")
    inner = [x for x in range(L.n) if x not in (L.zero, L.one)]
    M = [[0] * L.n for _ in range(L.n)]
    for p in range(L.n):
        gp = [x for x in inner if L.join(x, p) != L.one]
        for q in range(L.n):
            ideal = [x for x in gp if q in L.poset.up[x]]
            value = L.poset.restrict(ideal).mobius_number()
            # ideal identity: the Mobius number of a down-closed subset
            # of L' is minus the sum of mu(0, z) over it and 0
            assert value == -(mu0[L.zero]
                              + sum(mu0[x] for x in ideal))
            M[p][q] = value
    Z = L.poset.zeta_matrix()
    D = [[mu0[i] if i == j else 0 for j in range(L.n)] for i in range(L.n)]
    H = [[1 if L.join(p, q) == L.one else 0 for q in range(L.n)]
         for p in range(L.n)]
    F = mat_mul(transpose(Z), mat_mul(D, H))
    F = [[-x for x in row] for row in F]
    factor_ok = all(F[p][q] == -M[q][p] for p in inner for q in inner)
    det = bareiss_det(F)
    lemma_ok = all(q in L.complements(p)
                   for p in inner for q in inner if M[p][q] != 0)
    comp_support = []
    for p in range(L.n):
        allowed = set(L.complements(p))
        comp_support.append([q for q in range(L.n)
                             if F[p][q] != 0 and q in allowed])
    support_ok = all(q in L.complements(p)
                     for p in range(L.n) for q in range(L.n) if F[p][q] != 0)
    perm = _perfect_matching(comp_support, L.n)
    ok = (det != 0 and factor_ok and lemma_ok and support_ok
          and perm is not None)
    return {"identity": "complement permutation", "lhs": det, "rhs": "nonzero",
            "pass": ok,
            "permutation": None if perm is None else
            [L.poset.labels[q] for q in perm]}


def basterfield_kelly_check(L):
    """W_1 = W_{d-1} iff the lattice is modular; modularity also checked
    through the hyperplane/line meet criterion."""
    W = whitney_numbers(L)
    d = L.height
    w1, wd1 = W[1] if d >= 1 else 0, W[d - 1] if d >= 1 else 0
    modular = is_modular_lattice(L)
    r = L.rank
    lines = [x for x in range(L.n) if r[x] == 2]
    hyperplane_line = all(L.meet(h, l) != L.zero
                          for h in L.coatoms() for l in lines)
    consistent = (w1 == wd1) == modular and modular == hyperplane_line
    return {"identity": "points vs hyperplanes", "lhs": w1, "rhs": wd1,
            "pass": w1 <= wd1 and consistent,
            "modular": modular, "hyperplane_line_criterion": hyperplane_line}


def join_irreducibles(L):
    reducible = set()
    for x in range(L.n):
        for y in range(x + 1, L.n):
            j = L.join(x, y)
            if j != x and j != y:
                reducible.add(j)
    return [x for x in range(L.n) if x not in reducible]


def meet_irreducibles(L):
    reducible = set()
    for x in range(L.n):
        for y in range(x + 1, L.n):
            m = L.meet(x, y)
            if m != x and m != y:
                reducible.add(m)
    return [x for x in range(L.n) if x not in reducible]


def kung_check(L, k):
    """With A = ranks <= k and B = ranks >= d - k: the zeta submatrix
    Z[A, B] has full row rank, after verifying the hypothesis with
    x* = 1 for every x outside B.  On modular lattices additionally
    checks |J(L)| = |M(L)|."""
    d = L.height
    if not 0 <= k <= d:
        raise LatticeError(f"k must be in 0..{d}")
    r = L.rank
    A = [x for x in range(L.n) if r[x] <= k]
    B = [x for x in range(L.n) if r[x] >= d - k]
    mu_top = L.poset.mobius_col(L.one)
    for x in range(L.n):
        if x in set(B):
            continue
        if mu_top[x] == 0:
            raise LatticeError("hypothesis violation: mu(x,1) = 0 at "
                               f"witness {L.poset.labels[x]!r}")
        for a in A:
            if L.join(a, x) == L.one:
                raise LatticeError("hypothesis violation: a v x = x* at "
                                   f"witness {L.poset.labels[x]!r}")
    Z = L.poset.zeta_matrix()
    sub = [[Z[a][b] for b in B] for a in A]
    rank = int_row_rank(sub)
    result = {"identity": "zeta submatrix row rank", "lhs": rank,
              "rhs": len(A), "pass": rank == len(A),
              "A_size": len(A), "B_size": len(B)}
    if is_modular_lattice(L):
        J, Mi = join_irreducibles(L), meet_irreducibles(L)
        result["join_irreducibles"] = len(J)
        result["meet_irreducibles"] = len(Mi)
        result["pass"] = result["pass"] and len(J) == len(Mi)
    return result


def point_deletion(L, p):
    """Delete the atom p: take the fixed points of
    a -> join of the other atoms below a, complete to a lattice, and
    verify the deletion recursion for mu(0,1)."""
    atoms = L.atoms()
    if p not in atoms:
        raise LatticeError(f"{L.poset.labels[p]!r} is not an atom")
    others = [q for q in atoms if q != p]
    h = L.join_set(others)
    coloop = h != L.one
    fixed = [a for a in range(L.n)
             if L.join_set([q for q in others if a in L.poset.up[q]]) == a]
    deleted = Lattice(L.poset.restrict(fixed))
    mu0 = L.poset.mobius_row(L.zero)
    lhs = mu0[L.one]
    mu_p_top = L.poset.mobius_idx(p, L.one)
    if coloop:
        rhs = -mu_p_top
    else:
        rhs = deleted.poset.mobius_row(deleted.zero)[deleted.one] - mu_p_top
    report = {"identity": "point deletion recursion", "lhs": lhs, "rhs": rhs,
              "pass": lhs == rhs, "coloop": coloop,
              "witnesses": [L.poset.labels[p]]}
    return deleted, report
