"""The complex reflection group G(m,1,n) = (Z/m) wr S_n.

An element is a permutation of {1..n} together with a Z/m color per strand.
The composition convention matches diagram stacking: compose(g, h) is the
diagram of g placed on top of the diagram of h, so perm maps "top point ->
bottom point" and the color of strand i is counted in the top-to-bottom
direction.  This is exactly the convention under which s_i |-> its diagram,
t_j |-> its diagram extends to an algebra embedding (see tests).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .linalg import gauss_rank
from .scalars import CyclotomicField


@dataclass(frozen=True)
class WreathElement:
    m: int
    n: int
    perm: tuple  # perm[i-1] = image of top point i at the bottom (1-based)
    colors: tuple  # colors[i-1] = Z/m label on the strand with top point i

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, self.n + 1)):
            raise ValueError("perm is not a bijection of 1..n")
        if len(self.colors) != self.n or any(not 0 <= c < max(self.m, 1) for c in self.colors):
            raise ValueError("bad colors")

    def to_json(self):
        return {"perm": list(self.perm), "colors": list(self.colors)}

    @classmethod
    def from_json(cls, m, n, obj):
        return cls(m, n, tuple(obj["perm"]), tuple(obj["colors"]))


def identity(m, n):
    return WreathElement(m, n, tuple(range(1, n + 1)), (0,) * n)


def gen_s(m, n, i):
    """Transposition (i, i+1), no colors."""
    if not 1 <= i < n:
        raise ValueError("index out of range")
    perm = list(range(1, n + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return WreathElement(m, n, tuple(perm), (0,) * n)


def gen_t(m, n, j):
    """One color unit on strand j."""
    if not 1 <= j <= n:
        raise ValueError("index out of range")
    colors = [0] * n
    colors[j - 1] = 1 % m
    return WreathElement(m, n, tuple(range(1, n + 1)), tuple(colors))


def compose(g, h):
    """Product g*h = diagram of g stacked on top of diagram of h."""
    if (g.m, g.n) != (h.m, h.n):
        raise ValueError("mismatched (m, n)")
    m, n = g.m, g.n
    perm = tuple(h.perm[g.perm[i] - 1] for i in range(n))
    colors = tuple((g.colors[i] + h.colors[g.perm[i] - 1]) % m for i in range(n))
    return WreathElement(m, n, perm, colors)


def inverse(g):
    inv = [0] * g.n
    for i, img in enumerate(g.perm):
        inv[img - 1] = i + 1
    colors = tuple((-g.colors[inv[i] - 1]) % g.m for i in range(g.n))
    return WreathElement(g.m, g.n, tuple(inv), colors)


def group_order(m, n):
    out = m ** n
    for k in range(2, n + 1):
        out *= k
    return out


def enumerate_group(m, n, cap=10 ** 6):
    """All m^n * n! elements, deterministic order."""
    if group_order(m, n) > cap:
        raise ValueError("group order %d exceeds cap %d" % (group_order(m, n), cap))
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for colors in itertools.product(range(m), repeat=n):
            out.append(WreathElement(m, n, perm, colors))
    return out


# ---------------------------------------------------------------------------
# group algebra (small, used for the degree-2 induced-module verification)
# ---------------------------------------------------------------------------

class GroupAlgebraElement:
    """Sparse F-linear combination of wreath elements."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms):
        self.field = field
        self.terms = {g: c for g, c in terms.items() if c}

    @classmethod
    def of(cls, field, g, coeff=None):
        return cls(field, {g: field.one if coeff is None else coeff})

    def __add__(self, other):
        terms = dict(self.terms)
        for g, c in other.terms.items():
            s = terms.get(g)
            terms[g] = c if s is None else s + c
        return GroupAlgebraElement(self.field, terms)

    def __sub__(self, other):
        terms = dict(self.terms)
        for g, c in other.terms.items():
            s = terms.get(g)
            terms[g] = -c if s is None else s - c
        return GroupAlgebraElement(self.field, terms)

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return GroupAlgebraElement(self.field, {g: c * other for g, c in self.terms.items()})
        terms = {}
        for g, cg in self.terms.items():
            for h, ch in other.terms.items():
                k = compose(g, h)
                c = cg * ch
                s = terms.get(k)
                terms[k] = c if s is None else s + c
        return GroupAlgebraElement(self.field, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.field is other.field and self.terms == other.terms

    def __repr__(self):
        return "GroupAlgebraElement(%d terms)" % len(self.terms)


def verify_prop_eta(m):
    """Verify the explicit degree-2 eigenvector decomposition inside the
    group algebra of G(m,1,2) over Q(zeta_m).

    Builds v_i = prod_{j != i}(t_1 - u_j) * prod_{j != m-i}(t_2 - u_j) * (1 + s_1)
    with u_j = zeta^j and checks rank and all five action equations.  Returns
    a report dict with an overall "ok" flag and per-check failures.
    """
    if m < 2:
        raise ValueError("m >= 2 required")
    field = CyclotomicField(m)
    z = field.zeta
    u = {j: z ** j for j in range(1, m + 1)}
    one = GroupAlgebraElement.of(field, identity(m, 2))
    t1 = GroupAlgebraElement.of(field, gen_t(m, 2, 1))
    t2 = GroupAlgebraElement.of(field, gen_t(m, 2, 2))
    s1 = GroupAlgebraElement.of(field, gen_s(m, 2, 1))

    def scaled(elt, scalar):
        return GroupAlgebraElement(field, {g: c * scalar for g, c in elt.terms.items()})

    vs = {}
    for i in range(1, m + 1):
        v = one + s1
        for j in range(1, m + 1):
            if j != i:
                v = (t1 - scaled(one, u[j])) * v
        for j in range(1, m + 1):
            if j % m != (m - i) % m:
                v = (t2 - scaled(one, u[j])) * v
        vs[i] = v

    failures = []
    # (a) rank m
    group = enumerate_group(m, 2)
    index = {g: k for k, g in enumerate(group)}
    rows = []
    for i in range(1, m + 1):
        row = [field.zero] * len(group)
        for g, c in vs[i].terms.items():
            row[index[g]] = c
        rows.append(row)
    rank = gauss_rank(rows)
    if rank != m:
        failures.append({"check": "rank", "got": rank, "want": m})
    # (b) s_1 v_m = v_m, t_1 v_m = v_m
    if s1 * vs[m] != vs[m]:
        failures.append({"check": "s1-fixes-vm"})
    if t1 * vs[m] != vs[m]:
        failures.append({"check": "t1-fixes-vm"})
    # (c) t_1 v_j = u_j v_j
    for j in range(1, m + 1):
        if t1 * vs[j] != scaled(vs[j], u[j]):
            failures.append({"check": "t1-eigen", "i": j})
    # (d) s_1 v_i = v_{m-i} for i != m, m/2
    for i in range(1, m):
        if m % 2 == 0 and i == m // 2:
            continue
        if s1 * vs[i] != vs[m - i]:
            failures.append({"check": "s1-swap", "i": i})
    # (e) 2|m: s_1 v_{m/2} = v_{m/2}
    if m % 2 == 0:
        if s1 * vs[m // 2] != vs[m // 2]:
            failures.append({"check": "s1-fixes-half"})
    return {"m": m, "rank": rank, "ok": not failures, "failures": failures}
