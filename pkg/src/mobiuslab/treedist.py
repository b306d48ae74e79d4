"""Distance matrices of trees in exact arithmetic: the zeta
factorization D = Z^T H Z, the shape-independent determinant, and the
rational closed-form inverse."""

from fractions import Fraction

from .exactmat import bareiss_det, identity, mat_mul, transpose


class RootedTree:
    """Tree given by a parent array, with vertices reindexed root-first
    by breadth-first search (children visited in label order)."""

    def __init__(self, n, root, parent):
        if n < 1:
            raise ValueError("a tree needs at least one vertex")
        if not 0 <= root < n:
            raise ValueError(f"root {root} out of range")
        if len(parent) != n or parent[root] is not None:
            raise ValueError("parent array must have length n with None "
                             "at the root")
        children = [[] for _ in range(n)]
        for v in range(n):
            if v == root:
                continue
            p = parent[v]
            if not 0 <= p < n or p == v:
                raise ValueError(f"bad parent {p} for vertex {v}")
            children[p].append(v)
        order = [root]
        queue = [root]
        while queue:
            nxt = []
            for v in queue:
                for c in sorted(children[v]):
                    order.append(c)
                    nxt.append(c)
            queue = nxt
        if len(order) != n:
            raise ValueError("parent structure is cyclic or disconnected")
        self.n = n
        self.root = root
        self.order = order
        pos = {v: i for i, v in enumerate(order)}
        self.parent_pos = [None] * n
        for v in range(n):
            if v != root:
                self.parent_pos[pos[v]] = pos[parent[v]]
        self.labels = order

    @classmethod
    def from_graph(cls, graph, root=0):
        if len(graph.edges) != graph.n - 1 or not graph.is_connected():
            raise ValueError("graph is not a tree")
        adj = graph.adjacency()
        parent = [None] * graph.n
        seen = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    parent[w] = v
                    stack.append(w)
        return cls(graph.n, root, parent)

    def ancestors(self, i):
        """Positions on the path from the root to position i, inclusive."""
        out = [i]
        while self.parent_pos[out[-1]] is not None:
            out.append(self.parent_pos[out[-1]])
        return out[::-1]

    def depth(self, i):
        return len(self.ancestors(i)) - 1

    def adjacency_matrix(self):
        A = [[0] * self.n for _ in range(self.n)]
        for v in range(1, self.n):
            p = self.parent_pos[v]
            A[v][p] = A[p][v] = 1
        return A

    def valency_matrix(self):
        A = self.adjacency_matrix()
        return [[sum(A[i]) if i == j else 0 for j in range(self.n)]
                for i in range(self.n)]


def distance_matrix(T):
    """D[u][v] = number of edges on the path between u and v."""
    n = T.n
    anc = [T.ancestors(i) for i in range(n)]
    depth = [len(a) - 1 for a in anc]
    D = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            common = 0
            for a, b in zip(anc[i], anc[j]):
                if a != b:
                    break
                common += 1
            d = depth[i] + depth[j] - 2 * (common - 1)
            D[i][j] = D[j][i] = d
    return D


def tree_zeta(T):
    """Z[u][v] = 1 when u lies on the path from the root to v; unit
    upper triangular in the breadth-first order."""
    n = T.n
    Z = [[0] * n for _ in range(n)]
    for v in range(n):
        for u in T.ancestors(v):
            Z[u][v] = 1
    for i in range(n):
        for j in range(i):
            assert Z[i][j] == 0
        assert Z[i][i] == 1
    return Z


def tree_zeta_inverse(T):
    """The three-case inverse: 1 on the diagonal, -1 at (parent, child),
    0 elsewhere; verified against Z by multiplication."""
    n = T.n
    M = identity(n)
    for v in range(1, n):
        M[T.parent_pos[v]][v] = -1
    assert mat_mul(M, tree_zeta(T)) == identity(n)
    return M


def _h_matrix(n):
    H = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            H[i][j] = (1 if i == 0 else 0) + (1 if j == 0 else 0)
            if i == j:
                H[i][j] -= 2
    return H


def graham_lovasz_check(T):
    """D = Z^T H Z with H = 1 e1^T + e1 1^T - 2I."""
    Z = tree_zeta(T)
    H = _h_matrix(T.n)
    lhs = distance_matrix(T)
    rhs = mat_mul(transpose(Z), mat_mul(H, Z))
    return {"identity": "distance factorization", "lhs": lhs, "rhs": rhs,
            "pass": lhs == rhs, "witnesses": []}


def h_det_check(n):
    """det H = (1/2)(n-1)(-2)^(n-1), checked by exact elimination."""
    det = bareiss_det(_h_matrix(n))
    closed = (n - 1) * (-2) ** (n - 1) // 2
    return {"identity": "det H", "lhs": det, "rhs": closed,
            "pass": det == closed, "witnesses": []}


def graham_pollak_det(T):
    """det D = (n-1)(-1)^(n-1) 2^(n-2), independent of tree shape."""
    if T.n < 2:
        raise ValueError("determinant formula needs n >= 2")
    det = bareiss_det(distance_matrix(T))
    closed = (T.n - 1) * (-1) ** (T.n - 1) * 2 ** (T.n - 2)
    assert det == closed
    return det


def h_inverse(n):
    """Closed-form inverse of H (first index is the root), verified by
    multiplication."""
    if n < 2:
        raise ValueError("H is invertible only for n >= 2")
    Hi = [[Fraction(0)] * n for _ in range(n)]
    s = Fraction(1, n - 1)
    Hi[0][0] = 2 * s
    for i in range(1, n):
        Hi[0][i] = Hi[i][0] = s
        for j in range(1, n):
            Hi[i][j] = s * Fraction(1, 2) * (1 - (n - 1) * (i == j))
    H = [[Fraction(x) for x in row] for row in _h_matrix(n)]
    prod = mat_mul(H, Hi)
    assert prod == [[Fraction(i == j) for j in range(n)] for i in range(n)]
    return Hi


def distance_inverse(T):
    """D^{-1} = (1/(2n-2)) beta beta^T - (1/2)(Delta - A) with
    beta = (2I - Delta) 1; verified exactly against D."""
    n = T.n
    if n < 2:
        raise ValueError("inverse formula needs n >= 2")
    h_inverse(n)
    A = T.adjacency_matrix()
    Delta = T.valency_matrix()
    beta = [2 - Delta[i][i] for i in range(n)]
    Di = [[Fraction(beta[i] * beta[j], 2 * n - 2)
           - Fraction(Delta[i][j] - A[i][j], 2)
           for j in range(n)] for i in range(n)]
    D = [[Fraction(x) for x in row] for row in distance_matrix(T)]
    prod = mat_mul(D, Di)
    assert prod == [[Fraction(i == j) for j in range(n)] for i in range(n)]
    return Di
