"""Finite posets, incidence-algebra matrices and Mobius functions.

A poset stores its elements in a fixed linear extension, so the zeta and
Mobius matrices are upper triangular with unit diagonal.  The linear
extension is computed by a deterministic Kahn ordering with ties broken
by input label order: identical input always yields identical matrices.
"""

from collections import deque
from fractions import Fraction

from .exactmat import identity, mat_pow


class PosetError(ValueError):
    pass


class Poset:
    """Immutable finite partially ordered set.

    Attributes:
        labels: element identifiers, listed in linear-extension order
        n:      element count
        up:     up[i] = frozenset of j with labels[i] <= labels[j] (incl. i)
        down:   down[i] = frozenset of j with labels[j] <= labels[i]
        covers: index pairs (i, j), the transitive reduction of the order
    """

    def __init__(self, labels, up, down, covers):
        self.labels = list(labels)
        self.n = len(self.labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != self.n:
            raise PosetError("duplicate label")
        self.up = up
        self.down = down
        self.covers = covers
        self._mu_rows = {}
        self._mu_cols = {}

    # -- construction ---------------------------------------------------

    @classmethod
    def from_covers(cls, labels, covers):
        """Build a poset from cover (or any acyclic generating) relations.

        Pairs that turn out to be transitively implied are reduced away;
        the stored covers are always the transitive reduction.
        """
        labels = list(labels)
        index = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise PosetError(f"duplicate label {lab!r}")
            index[lab] = i
        arcs = []
        for lo, hi in covers:
            if lo not in index:
                raise PosetError(f"unknown label {lo!r} in covers")
            if hi not in index:
                raise PosetError(f"unknown label {hi!r} in covers")
            arcs.append((index[lo], index[hi]))
        return cls._from_arcs(labels, arcs)

    @classmethod
    def _from_arcs(cls, labels, arcs):
        """Finalize a poset given index arcs whose transitive closure is
        the intended strict order.  Detects cycles, fixes the linear
        extension, computes closure and transitive reduction."""
        n = len(labels)
        succ = [set() for _ in range(n)]
        indeg = [0] * n
        for i, j in set(arcs):
            if i == j:
                raise PosetError(
                    f"cycle detected: {labels[i]} < {labels[i]}")
            succ[i].add(j)
        for i in range(n):
            for j in succ[i]:
                indeg[j] += 1
        # Kahn with ties broken by current index order
        ready = deque(i for i in range(n) if indeg[i] == 0)
        topo = []
        indeg_work = indeg[:]
        while ready:
            # deterministic: pick smallest ready index
            i = min(ready)
            ready.remove(i)
            topo.append(i)
            for j in sorted(succ[i]):
                indeg_work[j] -= 1
                if indeg_work[j] == 0:
                    ready.append(j)
        if len(topo) < n:
            start = next(i for i in range(n) if i not in set(topo))
            cls._report_cycle(labels, succ, start)
        pos = {old: new for new, old in enumerate(topo)}
        new_labels = [labels[i] for i in topo]
        new_succ = [set() for _ in range(n)]
        for i in range(n):
            for j in succ[i]:
                new_succ[pos[i]].add(pos[j])
        # closure: walk in reverse linear-extension order
        up = [None] * n
        for i in reversed(range(n)):
            s = {i}
            for j in new_succ[i]:
                s |= up[j]
            up[i] = s
        down = [set() for _ in range(n)]
        for i in range(n):
            for j in up[i]:
                down[j].add(i)
        up = [frozenset(s) for s in up]
        down = [frozenset(s) for s in down]
        covers = []
        for i in range(n):
            for j in up[i]:
                if j != i and len(up[i] & down[j]) == 2:
                    covers.append((i, j))
        covers.sort()
        return cls(new_labels, up, down, covers)

    @staticmethod
    def _report_cycle(labels, succ, start):
        # walk forward until we revisit a node, then slice the cycle out
        path, seen = [], {}
        i = start
        while i not in seen:
            seen[i] = len(path)
            path.append(i)
            nxt = [j for j in succ[i] if j in seen or j == i]
            i = min(succ[i]) if not nxt else min(nxt)
        cyc = path[seen[i]:] + [i]
        names = " < ".join(str(labels[k]) for k in cyc)
        raise PosetError(f"cycle detected: {names}")

    # -- basic queries ---------------------------------------------------

    def leq(self, i, j):
        return j in self.up[i]

    def leq_labels(self, a, b):
        return self.index[b] in self.up[self.index[a]]

    def idx(self, a):
        try:
            return self.index[a]
        except KeyError:
            raise PosetError(f"unknown label {a!r}") from None

    def comparable_pairs(self):
        for i in range(self.n):
            for j in self.up[i]:
                yield i, j

    def longest_chain_length(self):
        """Length (number of covers) of a longest chain in the poset."""
        height = [0] * self.n
        for i, j in self.covers:
            height[j] = max(height[j], height[i] + 1)
        return max(height, default=0)

    def heights(self):
        """Per-element longest-chain-from-a-minimal-element lengths."""
        h = [0] * self.n
        for i, j in self.covers:
            h[j] = max(h[j], h[i] + 1)
        return h

    # -- incidence matrices ----------------------------------------------

    def zeta_matrix(self):
        return [[1 if j in self.up[i] else 0 for j in range(self.n)]
                for i in range(self.n)]

    def strict_zeta_matrix(self):
        return [[1 if (j in self.up[i] and j != i) else 0
                 for j in range(self.n)] for i in range(self.n)]

    def mobius_row(self, a):
        """Row a of the Mobius matrix, by the back-substitution recursion
        mu(a,b) = -sum_{a <= x < b} mu(a,x)."""
        row = self._mu_rows.get(a)
        if row is not None:
            return row
        row = [0] * self.n
        row[a] = 1
        for b in sorted(self.up[a]):
            if b == a:
                continue
            interval = self.up[a] & self.down[b]
            row[b] = -sum(row[x] for x in interval if x != b)
        self._mu_rows[a] = row
        return row

    def mobius_col(self, b):
        """Column b of the Mobius matrix, via the dual recursion."""
        col = self._mu_cols.get(b)
        if col is not None:
            return col
        col = [0] * self.n
        col[b] = 1
        for c in sorted(self.down[b], reverse=True):
            if c == b:
                continue
            interval = self.up[c] & self.down[b]
            col[c] = -sum(col[x] for x in interval if x != c)
        self._mu_cols[b] = col
        return col

    def mobius_matrix(self):
        return [self.mobius_row(a) for a in range(self.n)]

    def mobius_idx(self, i, j):
        if j not in self.up[i]:
            return 0
        if i in self._mu_rows:
            return self._mu_rows[i][j]
        if j in self._mu_cols:
            return self._mu_cols[j][i]
        if len(self.up[i]) <= len(self.down[j]):
            return self.mobius_row(i)[j]
        return self.mobius_col(j)[i]

    def mobius(self, a, b):
        return self.mobius_idx(self.idx(a), self.idx(b))

    # -- chains ----------------------------------------------------------

    def chains_between(self, i, j):
        """Yield all chains (as index lists) with minimal element i and
        maximal element j.  Brute-force enumeration, no memoization."""
        if j not in self.up[i]:
            raise PosetError("endpoints are incomparable")

        def extend(chain):
            x = chain[-1]
            if x == j:
                yield list(chain)
                return
            for y in sorted(self.up[x] & self.down[j]):
                if y != x:
                    chain.append(y)
                    yield from extend(chain)
                    chain.pop()

        yield from extend([i])

    def mobius_by_chains(self, a, b):
        """Hall's chain-sum route to mu(a, b); independent of the matrix
        recursion."""
        i, j = self.idx(a), self.idx(b)
        if j not in self.up[i]:
            raise PosetError(f"{a!r} is not below {b!r}")
        return sum((-1) ** (len(c) - 1) for c in self.chains_between(i, j))

    def all_chains(self):
        """Yield every nonempty chain as a sorted index tuple."""

        def extend(chain):
            yield tuple(chain)
            x = chain[-1]
            for y in sorted(self.up[x]):
                if y != x:
                    chain.append(y)
                    yield from extend(chain)
                    chain.pop()

        for i in range(self.n):
            yield from extend([i])

    def strict_zeta_power(self, m):
        """(Y_P)^m; entry (i,j) counts chains of length m from p_i to p_j."""
        return mat_pow(self.strict_zeta_matrix(), m)

    def zeta_power_poly_check(self, a, b, degrees):
        """Check that the (a,b) entry of Z^m is a single polynomial in m
        of degree at most the longest-chain length.

        Interpolates through the first samples and verifies the remaining
        samples plus two held-out values of m.
        """
        i, j = self.idx(a), self.idx(b)
        L = self.longest_chain_length()
        degrees = sorted(set(degrees))
        if len(degrees) < L + 1:
            raise PosetError(
                f"need at least {L + 1} sample degrees, got {len(degrees)}")
        Z = self.zeta_matrix()

        def entry(m):
            return mat_pow(Z, m)[i][j]

        nodes = degrees[:L + 1]
        values = [Fraction(entry(m)) for m in nodes]
        held_out = degrees[L + 1:] + [max(degrees) + 1, max(degrees) + 2]

        def interpolate(x):
            total = Fraction(0)
            for k, mk in enumerate(nodes):
                term = values[k]
                for t, mt in enumerate(nodes):
                    if t != k:
                        term *= Fraction(x - mt, mk - mt)
                total += term
            return total

        return all(interpolate(m) == entry(m) for m in held_out)

    # -- constructions ---------------------------------------------------

    def dual(self):
        arcs = [(j, i) for i, j in self.covers]
        return Poset._from_arcs(list(self.labels), arcs)

    def product(self, other):
        labels = [(a, b) for a in self.labels for b in other.labels]
        pos = {lab: k for k, lab in enumerate(labels)}
        arcs = []
        for (i, j) in self.covers:
            for b in other.labels:
                arcs.append((pos[(self.labels[i], b)],
                             pos[(self.labels[j], b)]))
        for (i, j) in other.covers:
            for a in self.labels:
                arcs.append((pos[(a, other.labels[i])],
                             pos[(a, other.labels[j])]))
        return Poset._from_arcs(labels, arcs)

    def restrict(self, indices):
        """Induced subposet on the given element indices."""
        keep = sorted(set(indices))
        pos = {old: new for new, old in enumerate(keep)}
        labels = [self.labels[i] for i in keep]
        arcs = [(pos[i], pos[j]) for i in keep for j in self.up[i]
                if j != i and j in pos]
        return Poset._from_arcs(labels, arcs)

    def interval(self, a, b):
        i, j = self.idx(a), self.idx(b)
        if j not in self.up[i]:
            raise PosetError(f"{a!r} is not below {b!r}")
        return self.restrict(self.up[i] & self.down[j])

    def adjoin_bounds(self):
        """Adjoin a fresh bottom and a fresh top, always (even when the
        poset is already bounded)."""
        bot, top = "0^", "1^"
        while bot in self.index:
            bot += "'"
        while top in self.index:
            top += "'"
        labels = [bot] + list(self.labels) + [top]
        arcs = [(i + 1, j + 1) for i, j in self.covers]
        minimal = [i for i in range(self.n) if len(self.down[i]) == 1]
        maximal = [i for i in range(self.n) if len(self.up[i]) == 1]
        if self.n == 0:
            arcs.append((0, 1))
        arcs += [(0, i + 1) for i in minimal]
        arcs += [(i + 1, len(labels) - 1) for i in maximal]
        return Poset._from_arcs(labels, arcs)

    def mobius_number(self):
        """mu(0^, 1^) of the poset with fresh bounds adjoined."""
        hat = self.adjoin_bounds()
        return hat.mobius_row(0)[hat.n - 1]

    def is_isomorphic_brute(self, other):
        """Order-isomorphism test by backtracking search (small posets)."""
        if self.n != other.n:
            return False
        if sorted(map(len, self.up)) != sorted(map(len, other.up)):
            return False
        inv = {}

        def key(P, i):
            return (len(P.up[i]), len(P.down[i]))

        def match(assigned):
            if len(assigned) == self.n:
                return True
            i = len(assigned)
            for j in range(other.n):
                if j in inv or key(self, i) != key(other, j):
                    continue
                ok = all((j2 in other.up[j]) == (i2 in self.up[i]) and
                         (j in other.up[j2]) == (i in self.up[i2])
                         for i2, j2 in assigned.items())
                if ok:
                    assigned[i] = j
                    inv[j] = i
                    if match(assigned):
                        return True
                    del assigned[i], inv[j]
            return False

        return match({})

    def __repr__(self):
        return f"Poset(n={self.n})"


def mobius_number(P):
    return P.mobius_number()


# -- JSON interchange ----------------------------------------------------

def poset_to_json(P):
    return {"elements": list(P.labels),
            "covers": [[P.labels[i], P.labels[j]] for i, j in P.covers]}


def poset_from_json(data):
    if "elements" not in data or "covers" not in data:
        raise PosetError("poset JSON needs 'elements' and 'covers' keys")
    # non-cover relations in the input are accepted and reduced
    return Poset.from_covers(data["elements"],
                             [tuple(pair) for pair in data["covers"]])
