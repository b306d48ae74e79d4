"""Strength-t functions on meet semilattices and the Mobius-sum lower
bound on their support."""

from .inversion import _as_values, forward_up
from .posets import PosetError

_EAGER_LIMIT = 400


class MeetSemilattice:
    """Poset with a zero element in which every pair has a greatest
    lower bound."""

    def __init__(self, poset):
        self.poset = poset
        if poset.n == 0:
            raise PosetError("empty poset is not a meet semilattice")
        minimals = [i for i in range(poset.n) if len(poset.down[i]) == 1]
        if len(minimals) != 1:
            raise PosetError(f"{len(minimals)} minimal elements; a meet "
                             "semilattice has a unique zero")
        self.zero = minimals[0]
        self.n = poset.n
        self._meet = {}
        if poset.n <= _EAGER_LIMIT:
            for i in range(poset.n):
                for j in range(i + 1, poset.n):
                    self.meet(i, j)

    def meet(self, i, j):
        if i == j:
            return i
        key = (i, j) if i < j else (j, i)
        got = self._meet.get(key)
        if got is not None:
            return got
        down = self.poset.down
        lowers = down[i] & down[j]
        best = max(lowers, key=lambda u: len(down[u]))
        if not lowers <= down[best]:
            raise PosetError(
                "no greatest lower bound for witness pair "
                f"({self.poset.labels[i]!r}, {self.poset.labels[j]!r})")
        self._meet[key] = best
        return best


def as_meet_semilattice(P):
    return MeetSemilattice(P)


def _poset_of(S):
    return S.poset if isinstance(S, MeetSemilattice) else S


def up_sums(S, f):
    """The transform f^(y) = sum over x >= y of f(x)."""
    return forward_up(_poset_of(S), f)


def strength(S, f):
    """Largest t such that the up-sums vanish at every element of height
    at most t; -1 if some height-0 sum is nonzero.  The zero function
    gets the full poset height."""
    P = _poset_of(S)
    hat = up_sums(P, f)
    heights = P.heights()
    top = max(heights)
    t = -1
    for level in range(top + 1):
        if any(hat[x] != 0 for x in range(P.n) if heights[x] == level):
            break
        t = level
    return t


def restrict_to_interval(S, f, b):
    """f_b(c) = sum over x with x ^ b = c of f(x), computed both by that
    meet-fiber sum and by Mobius inversion over [c, b]; the routes must
    agree.  Returns a label -> value map supported on the down-set
    of b."""
    P = _poset_of(S)
    if not isinstance(S, MeetSemilattice):
        S = MeetSemilattice(P)
    b = P.idx(b) if not isinstance(b, int) else b
    f = _as_values(P, f)
    hat = forward_up(P, f)
    out = {}
    for c in sorted(P.down[b]):
        fibre = sum(f[x] for x in range(P.n) if S.meet(x, b) == c)
        inverted = sum(P.mobius_idx(c, y) * hat[y]
                       for y in P.up[c] & P.down[b])
        if fibre != inverted:
            raise AssertionError(
                "interval restriction routes disagree at "
                f"{P.labels[c]!r}: fiber {fibre}, inversion {inverted}")
        out[P.labels[c]] = fibre
    return out


def support_lower_bound(S, b):
    """sum over c <= b of |mu(c, b)|."""
    P = _poset_of(S)
    b = P.idx(b) if not isinstance(b, int) else b
    col = P.mobius_col(b)
    return sum(abs(col[c]) for c in P.down[b])


def verify_support_theorem(S, f):
    """For f of strength t supported on heights <= t + 1 with some
    nonzero up-sum at height t + 1: the support of f has size at least
    sum |mu(c,b)|, with equality forcing f to be (0, +-1)-valued.  The
    per-c ledger checks mu(c,b) f^(b) = sum over x ^ b = c of f(x)."""
    P = _poset_of(S)
    if not isinstance(S, MeetSemilattice):
        S = MeetSemilattice(P)
    f = _as_values(P, f)
    hat = forward_up(P, f)
    heights = P.heights()
    t = strength(P, f)
    support = [x for x in range(P.n) if f[x] != 0]
    if not support:
        return {"identity": "support bound", "lhs": 0, "rhs": 0,
                "pass": True, "vacuous": True, "witnesses": []}
    too_high = [x for x in support if heights[x] > t + 1]
    if too_high:
        raise PosetError("support reaches height above t + 1 at witness "
                         f"{P.labels[too_high[0]]!r}")
    candidates = [b for b in range(P.n)
                  if heights[b] == t + 1 and hat[b] != 0]
    if not candidates:
        raise PosetError(f"no element of height {t + 1} has a nonzero "
                         "up-sum")
    b = candidates[0]
    bound = support_lower_bound(S, b)
    ledger = []
    col = P.mobius_col(b)
    for c in sorted(P.down[b]):
        fibre = sum(f[x] for x in range(P.n) if S.meet(x, b) == c)
        ledger.append({"c": P.labels[c], "mu_times_hat": col[c] * hat[b],
                       "fiber_sum": fibre,
                       "pass": col[c] * hat[b] == fibre})
    ok = len(support) >= bound and all(e["pass"] for e in ledger)
    if len(support) == bound:
        ok = ok and all(f[x] in (-1, 1) for x in support)
    return {"identity": "support bound", "lhs": len(support), "rhs": bound,
            "pass": ok, "b": P.labels[b], "strength": t,
            "witnesses": ledger}
