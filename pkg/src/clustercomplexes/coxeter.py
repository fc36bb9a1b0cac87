"""Reflection group elements, reflection length and the absolute order.

Elements carry their permutation action on the full root set (faithful,
since the roots span) for hashing and equality, plus a backend payload:
an exact orthogonal matrix for coordinate systems, or a (rotation, flip)
pair for the dihedral model.  Reflection length comes from the fixed-space
codimension for matrices and from direct classification for dihedral
elements; a breadth-first word-length oracle is available at desk scale.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .exact import Matrix
from .roots import Root, RootSystem


class DihedralElement:
    """Element k -> (shift + sign*k) mod modulus of a dihedral group."""

    __slots__ = ("shift", "sign", "modulus")

    def __init__(self, shift: int, sign: int, modulus: int):
        self.shift = shift % modulus
        self.sign = sign
        self.modulus = modulus

    def compose(self, other: "DihedralElement") -> "DihedralElement":
        # apply other first, then self
        return DihedralElement(self.shift + self.sign * other.shift,
                               self.sign * other.sign, self.modulus)

    def inverse(self) -> "DihedralElement":
        if self.sign == -1:
            return self
        return DihedralElement(-self.shift, 1, self.modulus)

    def length(self) -> int:
        if self.sign == -1:
            return 1
        return 0 if self.shift == 0 else 2


class GroupElement:
    """An orthogonal transformation stabilizing the root system."""

    __slots__ = ("system", "perm", "payload", "_length")

    def __init__(self, system: RootSystem, perm: tuple, payload):
        self.system = system
        self.perm = perm
        self.payload = payload
        self._length = None

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        # (self * other) acts by other first
        sp = self.perm
        perm = tuple(sp[i] for i in other.perm)
        if isinstance(self.payload, Matrix):
            payload = self.payload * other.payload
        else:
            payload = self.payload.compose(other.payload)
        return GroupElement(self.system, perm, payload)

    def inverse(self) -> "GroupElement":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        if isinstance(self.payload, Matrix):
            payload = self.payload.transpose()  # orthogonal in all realizations
        else:
            payload = self.payload.inverse()
        return GroupElement(self.system, tuple(inv), payload)

    def apply(self, root: Root) -> Root:
        return self.system.roots[self.perm[self.system.index_of(root)]]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    @property
    def length(self) -> int:
        """Reflection length, via the dimension of the moved space."""
        if self._length is None:
            if isinstance(self.payload, Matrix):
                # The payload fixes the orthogonal complement of the root
                # span pointwise, so rank(M - I) is intrinsic.
                self._length = (self.payload - Matrix.identity(self.payload.rows)).rank()
            else:
                self._length = self.payload.length()
        return self._length

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and self.perm == other.perm
                and self.system is other.system)

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return "GroupElement(len=%s, perm=%s)" % (self.length, self.perm)


def reflection_length(w: GroupElement, mode: str = "fixed_space") -> int:
    """Smallest r such that w is a product of r reflections."""
    if mode == "fixed_space":
        return w.length
    if mode == "word_bfs":
        return _word_length_bfs(w)
    raise ValueError("unknown mode %r (use 'fixed_space' or 'word_bfs')" % mode)


def _word_length_bfs(w: GroupElement, cap: int = 60) -> int:
    rs = w.system
    if len(rs.positive_roots) > cap:
        raise ValueError("word_bfs oracle refused: %d reflections exceeds "
                         "the desk-scale cap %d" % (len(rs.positive_roots), cap))
    if w.is_identity():
        return 0
    gens = [rs.reflection(r) for r in rs.positive_roots]
    seen = {rs.identity_element().perm}
    frontier = [rs.identity_element()]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for u in frontier:
            for t in gens:
                v = u * t
                if v.perm == w.perm:
                    return depth
                if v.perm not in seen:
                    seen.add(v.perm)
                    nxt.append(v)
        frontier = nxt
    raise RuntimeError("element not generated by the reflections")


def absolute_leq(u: GroupElement, w: GroupElement) -> bool:
    """u precedes w when reflection lengths add along u, u^-1 w."""
    return u.length + (u.inverse() * w).length == w.length


def bipartite_coxeter(rs: RootSystem) -> GroupElement:
    """Product of the simple reflections in the stored (bipartite) order.

    For reducible systems the stored order keeps each component's two
    orthogonal blocks grouped, so the product is the product of the
    component Coxeter elements.
    """
    g = rs.identity_element()
    for a in rs.simple_roots:
        g = g * rs.reflection(a)
    return g


@dataclass
class RhoSequence:
    """The root sequence rho_i attached to the bipartite Coxeter element."""

    system: RootSystem
    entries: dict  # window index -> Root, for -(n-s-1) .. N+s
    N: int
    s: int

    def __getitem__(self, i: int) -> Root:
        return self.entries[i]


def rho_sequence(rs: RootSystem) -> RhoSequence:
    if not rs.is_irreducible:
        raise ValueError("the rho sequence requires an irreducible system")
    n, s = rs.rank, rs.split_s
    npos = len(rs.positive_roots)
    seq = {}
    prefix = rs.identity_element()
    for i in range(1, 2 * npos + 1):
        alpha = rs.simple_roots[(i - 1) % n]
        seq[i] = prefix.apply(alpha)
        prefix = prefix * rs.reflection(alpha)
    entries = {i: seq[i] for i in range(1, npos + s + 1)}
    for i in range(0, n - s):
        entries[-i] = seq[2 * npos - i]

    # self-checks: the three defining set identities
    if {entries[i].key for i in range(1, npos + 1)} != \
            {r.key for r in rs.positive_roots}:
        raise RuntimeError("rho sequence: first N entries are not Phi+")
    neg_plus = {rs.negate(r).key for r in rs.simple_roots[:s]}
    if {entries[npos + i].key for i in range(1, s + 1)} != neg_plus:
        raise RuntimeError("rho sequence: entries N+1..N+s are not -Pi_plus")
    neg_minus = {rs.negate(r).key for r in rs.simple_roots[s:]}
    if {entries[-i].key for i in range(0, n - s)} != neg_minus:
        raise RuntimeError("rho sequence: trailing window is not -Pi_minus")
    return RhoSequence(rs, entries, npos, s)


class TotalOrder:
    """The total order on Phi+ united with the negative simple roots."""

    def __init__(self, rs: RootSystem, ordered: Sequence[Root]):
        self.system = rs
        self.ordered = list(ordered)
        self._pos = {r.key: i for i, r in enumerate(self.ordered)}

    def position(self, root: Root) -> int:
        return self._pos[root.key]

    def sort(self, roots) -> list:
        return sorted(roots, key=lambda r: self._pos[r.key])

    def __len__(self):
        return len(self.ordered)

    def __iter__(self):
        return iter(self.ordered)


def total_order(rs: RootSystem) -> TotalOrder:
    rho = rho_sequence(rs)
    n, s, npos = rs.rank, rs.split_s, rho.N
    window = [rho[-i] for i in range(n - s - 1, -1, -1)]
    window += [rho[i] for i in range(1, npos + s + 1)]
    return TotalOrder(rs, window)


# -- enumeration -----------------------------------------------------------------


def absolute_interval(rs: RootSystem, top: Optional[GroupElement] = None) -> list:
    """All w below ``top`` in absolute order, by additive-length closure."""
    if top is None:
        top = bipartite_coxeter(rs)
    gens = [rs.reflection(r) for r in rs.positive_roots]
    top_len = top.length
    out = [rs.identity_element()]
    seen = {out[0].perm}
    frontier = out[:]
    for level in range(1, top_len + 1):
        nxt = []
        for u in frontier:
            for t in gens:
                v = u * t
                if v.perm in seen or v.length != level:
                    continue
                if (v.inverse() * top).length != top_len - level:
                    continue
                seen.add(v.perm)
                nxt.append(v)
        out.extend(nxt)
        frontier = nxt
    return out


def enumerate_group(rs: RootSystem, limit: int = 200000) -> list:
    """The full reflection group, by closure under the simple reflections."""
    gens = [rs.reflection(r) for r in rs.simple_roots]
    ident = rs.identity_element()
    seen = {ident.perm: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for u in frontier:
            for t in gens:
                v = u * t
                if v.perm not in seen:
                    seen[v.perm] = v
                    nxt.append(v)
                    if len(seen) > limit:
                        raise ValueError("group exceeds enumeration limit %d" % limit)
        frontier = nxt
    return list(seen.values())


# -- type A oracles ----------------------------------------------------------------


def one_line_permutation(w: GroupElement) -> tuple:
    """One-line notation of a type-A element acting on coordinates."""
    mat = w.payload
    if not isinstance(mat, Matrix):
        raise ValueError("one-line notation needs a coordinate backend")
    n = mat.rows
    out = [None] * n
    for j in range(n):
        col = [mat.entries[i][j] for i in range(n)]
        ones = [i for i, x in enumerate(col) if x.sign() != 0]
        if len(ones) != 1 or col[ones[0]] != 1:
            raise ValueError("element is not a coordinate permutation")
        out[j] = ones[0]
    return tuple(out)


def cycles_of(perm: Sequence[int]) -> list:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        out.append(tuple(cyc))
    return out


def typeA_reflection_length(perm: Sequence[int]) -> int:
    """n minus the number of cycles (fixed points count as cycles)."""
    return len(perm) - len(cycles_of(perm))


def typeA_absolute_leq(u: Sequence[int], w: Sequence[int]) -> bool:
    """Absolute order on permutations, from the cycle geometry.

    Every nontrivial cycle of u must sit inside a single cycle of w as an
    orientation-preserving cyclic subsequence, and the u-cycles inside one
    w-cycle must be pairwise noncrossing in its cyclic order.
    """
    if len(u) != len(w):
        raise ValueError("permutations act on different sets")
    wcycles = cycles_of(w)
    where = {}
    for ci, cyc in enumerate(wcycles):
        for pos, x in enumerate(cyc):
            where[x] = (ci, pos)
    blocks: dict = {}
    for cyc in cycles_of(u):
        if len(cyc) == 1:
            continue
        owners = {where[x][0] for x in cyc}
        if len(owners) != 1:
            return False
        ci = owners.pop()
        positions = [where[x][1] for x in cyc]
        # rotate so the smallest w-position comes first; the rest must ascend
        k = positions.index(min(positions))
        rotated = positions[k:] + positions[:k]
        if any(rotated[i] >= rotated[i + 1] for i in range(len(rotated) - 1)):
            return False
        blocks.setdefault(ci, []).append(sorted(positions))
    for ci, blist in blocks.items():
        size = len(wcycles[ci])
        for b1, b2 in itertools.combinations(blist, 2):
            if _blocks_cross(b1, b2, size):
                return False
    return True


def _blocks_cross(b1: list, b2: list, size: int) -> bool:
    """Whether two position blocks interleave in the cyclic order 0..size-1."""
    if len(b1) < 2 or len(b2) < 2:
        return False
    # b2 avoids b1 iff it fits inside a single cyclic gap of b1
    for i, start in enumerate(b1):
        gap = (b1[(i + 1) % len(b1)] - start) % size
        if all(0 < (x - start) % size < gap for x in b2):
            return False
    return True


def typeA_oracles() -> tuple:
    """Independent (length, order) implementations on one-line permutations."""
    return typeA_reflection_length, typeA_absolute_leq
