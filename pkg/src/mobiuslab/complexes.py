"""Order complexes, Euler characteristics, retracts and dismantlability,
plus numerical verification of the fibre and ideal-decomposition
identities."""

from .guards import check_size
from .posets import Poset, PosetError


class SimplicialComplex:
    """Family of nonempty faces closed under nonempty subsets.

    Faces are stored explicitly; construction runs a closure pass so a
    generating family of faces may be supplied.
    """

    def __init__(self, faces):
        closed = set()
        stack = [frozenset(f) for f in faces]
        for f in stack:
            if not f:
                raise ValueError("the empty face is excluded by convention")
        while stack:
            f = stack.pop()
            if f in closed or not f:
                continue
            closed.add(f)
            for v in f:
                g = f - {v}
                if g and g not in closed:
                    stack.append(g)
        self.faces = closed
        self.vertices = sorted({v for f in closed for v in f}, key=str)

    def level_numbers(self):
        """f_k = number of faces of dimension k."""
        if not self.faces:
            return []
        top = max(len(f) for f in self.faces)
        counts = [0] * top
        for f in self.faces:
            counts[len(f) - 1] += 1
        return counts

    def euler_characteristic(self):
        return sum((-1) ** k * fk for k, fk in enumerate(self.level_numbers()))

    def face_poset(self):
        """The faces ordered by inclusion, as a Poset."""
        labels = sorted(self.faces, key=lambda f: (len(f), sorted(map(str, f))))
        labels = [tuple(sorted(f, key=str)) for f in labels]
        pos = {f: i for i, f in enumerate(labels)}
        arcs = []
        for f in labels:
            fs = frozenset(f)
            for g in labels:
                if len(g) == len(f) + 1 and fs < frozenset(g):
                    arcs.append((pos[f], pos[g]))
        return Poset._from_arcs(labels, arcs)


def order_complex(P):
    """Simplicial complex of all nonempty chains of P."""
    check_size("order_complex", P.n, 20)
    faces = [frozenset(P.labels[i] for i in c) for c in P.all_chains()]
    return SimplicialComplex(faces)


def euler_characteristic(S):
    return S.euler_characteristic()


def level_numbers(S):
    return S.level_numbers()


def is_cone(P):
    """Return the label of an element comparable with all others, or None."""
    for i in range(P.n):
        if len(P.up[i]) + len(P.down[i]) - 1 == P.n:
            return P.labels[i]
    return None


class MonotoneMap:
    """Order-preserving map between posets, checked on construction."""

    def __init__(self, source, target, assignment):
        self.source = source
        self.target = target
        if isinstance(assignment, dict):
            self.images = [target.idx(assignment[lab]) for lab in source.labels]
        else:
            self.images = [target.idx(lab) for lab in assignment]
        for i, j in source.covers:
            if self.images[j] not in target.up[self.images[i]]:
                raise PosetError(
                    f"map is not order-preserving at "
                    f"{source.labels[i]!r} <= {source.labels[j]!r}")

    def fibre_below(self, y):
        """Indices of source elements mapped into the down-set of y."""
        return [x for x in range(self.source.n)
                if y in self.target.up[self.images[x]]]


def random_monotone_map(P, Q, seed):
    """Random order-preserving map built along a linear extension: each
    image is drawn from the elements of Q above the images of the
    already-placed lower covers."""
    import random
    rng = random.Random(seed)
    images = [None] * P.n
    below = {}
    for i, j in P.covers:
        below.setdefault(j, []).append(i)
    # confining images to the down-set of one maximal element keeps the
    # set of valid choices nonempty at every step
    maximal = [i for i in range(Q.n) if len(Q.up[i]) == 1]
    ceiling = Q.down[rng.choice(maximal)]
    for x in range(P.n):
        allowed = set(ceiling)
        for y in below.get(x, []):
            allowed &= Q.up[images[y]]
        images[x] = rng.choice(sorted(allowed))
    return MonotoneMap(P, Q, [Q.labels[i] for i in images])


def verify_baclawski(f):
    """Check mu(Q) = mu(P) + sum_y mu(Q_{y<}) mu(f^{-1}(Q_{<=y})),
    computing every Mobius number independently."""
    P, Q = f.source, f.target
    mu_P = P.mobius_number()
    mu_Q = Q.mobius_number()
    fibre_terms = []
    total = 0
    for y in range(Q.n):
        above = Q.restrict([x for x in Q.up[y] if x != y])
        fibre = P.restrict(f.fibre_below(y))
        t_above = above.mobius_number()
        t_fibre = fibre.mobius_number()
        total += t_above * t_fibre
        fibre_terms.append({"y": Q.labels[y], "mu_above": t_above,
                            "mu_fibre": t_fibre})
    lhs = mu_Q
    rhs = mu_P + total
    return {"identity": "fibre decomposition", "lhs": lhs, "rhs": rhs,
            "pass": lhs == rhs, "witnesses": fibre_terms}


def verify_ideal_decomposition(S, ideal_labels):
    """Check mu(S) = mu(P) + sum_{y in S\\P} mu(S_{y<}) mu(P_{<=y}) for a
    down-closed subset P of S."""
    ideal = {S.idx(lab) for lab in ideal_labels}
    for x in ideal:
        if not set(S.down[x]) <= ideal:
            raise PosetError(
                f"{S.labels[x]!r} is in the subset but some element below "
                "it is not: not an ideal")
    P = S.restrict(ideal)
    lhs = S.mobius_number()
    rhs = P.mobius_number()
    for y in range(S.n):
        if y in ideal:
            continue
        above = S.restrict([x for x in S.up[y] if x != y])
        below = S.restrict(ideal & S.down[y])
        rhs += above.mobius_number() * below.mobius_number()
    return {"identity": "ideal decomposition", "lhs": lhs, "rhs": rhs,
            "pass": lhs == rhs, "witnesses": []}


def retract_check(S, f):
    """Verify f: S -> S is a retraction (order-preserving, decreasing,
    idempotent) and that the retract has the same Mobius number as S."""
    problems = []
    if f.source is not S or f.target is not S:
        raise PosetError("retract_check needs a self-map of S")
    for x in range(S.n):
        if x not in S.up[f.images[x]]:
            problems.append({"kind": "not decreasing", "x": S.labels[x]})
        if f.images[f.images[x]] != f.images[x]:
            problems.append({"kind": "not idempotent", "x": S.labels[x]})
    if problems:
        return {"identity": "retract preserves Mobius number", "lhs": None,
                "rhs": None, "pass": False, "witnesses": problems}
    image = S.restrict(set(f.images))
    lhs = image.mobius_number()
    rhs = S.mobius_number()
    return {"identity": "retract preserves Mobius number", "lhs": lhs,
            "rhs": rhs, "pass": lhs == rhs, "witnesses": []}


def dismantle(P):
    """Greedily delete elements covering, or covered by, a unique element.

    Returns (deletions, core) where deletions is the removal order (as
    labels) and core is the irreducible subposet.  P is dismantlable iff
    the core has one element; a dismantlable poset has Mobius number 0.
    """
    current = P
    deletions = []
    while current.n > 1:
        cover_down = [0] * current.n
        cover_up = [0] * current.n
        for i, j in current.covers:
            cover_up[i] += 1
            cover_down[j] += 1
        victim = next((x for x in range(current.n)
                       if cover_down[x] == 1 or cover_up[x] == 1), None)
        if victim is None:
            break
        deletions.append(current.labels[victim])
        current = current.restrict([i for i in range(current.n)
                                    if i != victim])
    return deletions, current


def is_dismantlable(P):
    if P.n == 0:
        return False
    _, core = dismantle(P)
    return core.n == 1
