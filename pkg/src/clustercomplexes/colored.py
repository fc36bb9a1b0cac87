"""Colored root sets and generalized cluster complexes.

The vertex set pairs each positive root with a color 1..m and adds the
negative simple roots (which carry color 1 by convention).  Faces are
characterized two ways: through the recursive compatibility relation
driven by the color-rotation map, and through the word criterion that a
set is a face exactly when its ordered reflection product w has length
equal to the set's size and sits below the bipartite Coxeter element in
absolute order.  The builder enumerates facets as maximal cliques of the
pairwise-face graph and re-validates every clique against the word
criterion, so the flag property is checked rather than assumed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .coxeter import (GroupElement, absolute_leq, bipartite_coxeter,
                      total_order)
from .roots import Root, RootSystem
from .simplicial import SimplicialComplex, f_h_vectors  # noqa: F401 (re-export)


@dataclass(frozen=True)
class ColoredRoot:
    """A positive root with a color, or a negative simple root (color 1)."""

    root: Root
    color: int

    def key(self):
        return (self.root.key, self.color)


class ComplexContext:
    """Per-(system, m) data shared by the face tests: order, gamma, labels."""

    def __init__(self, rs: RootSystem, m: int):
        if m < 0:
            raise ValueError("the color count m must be nonnegative")
        self.system = rs
        self.m = m
        self.gamma = bipartite_coxeter(rs)
        self._order = None

    def component_context(self, comp: RootSystem) -> "ComplexContext":
        return get_context(comp, self.m)

    @property
    def order(self):
        if self._order is None:
            self._order = total_order(self.system)
        return self._order


_context_cache: dict = {}


def get_context(rs: RootSystem, m: int) -> ComplexContext:
    key = (id(rs), m)
    ctx = _context_cache.get(key)
    if ctx is None:
        ctx = ComplexContext(rs, m)
        _context_cache[key] = ctx
    return ctx


def colored_vertices(rs: RootSystem, m: int) -> list:
    """The vertex set: m copies of each positive root plus -Pi."""
    out = [ColoredRoot(rs.negate(a), 1) for a in rs.simple_roots]
    for color in range(1, m + 1):
        out.extend(ColoredRoot(r, color) for r in rs.positive_roots)
    return out


def canonical_label(rs: RootSystem, v: ColoredRoot) -> str:
    """Stable vertex label: expansion coefficients plus color, or -s<i>."""
    if not rs.is_positive(v.root):
        i = rs.simple_index(rs.negate(v.root))
        return "-s%d" % (i + 1)
    exp = rs.expansion(v.root)
    if exp is None:  # dihedral interior root: label by angle index
        return "d%d:%d" % (v.root.angle, v.color)
    return "[%s]:%d" % (",".join(str(c) for c in exp), v.color)


# -- the involutions and the color rotation --------------------------------------


def tau(rs: RootSystem, eps: int, alpha: Root) -> Root:
    """The involution fixing the negative simples of the opposite block."""
    s = rs.split_s
    block = rs.simple_roots[:s] if eps > 0 else rs.simple_roots[s:]
    other = rs.simple_roots[s:] if eps > 0 else rs.simple_roots[:s]
    if not rs.is_positive(alpha) and rs.negate(alpha) in set(other):
        return alpha
    out = alpha
    for a in block:
        out = rs.reflection(a).apply(out)
    if rs.is_positive(out) or rs.simple_index(rs.negate(out)) is not None:
        return out
    raise RuntimeError("tau left the admissible root window")


def deformed_coxeter(rs: RootSystem, alpha: Root) -> Root:
    """The composite tau_minus after tau_plus."""
    return tau(rs, -1, tau(rs, +1, alpha))


def rm_map(rs: RootSystem, m: int, v: ColoredRoot) -> ColoredRoot:
    """Rotate colors; at the last color apply the deformed Coxeter map."""
    if rs.is_positive(v.root) and v.color < m:
        return ColoredRoot(v.root, v.color + 1)
    return ColoredRoot(deformed_coxeter(rs, v.root), 1)


def _is_negative_simple(rs: RootSystem, v: ColoredRoot) -> bool:
    return not rs.is_positive(v.root)


def fr_compatible(rs: RootSystem, m: int, a: ColoredRoot, b: ColoredRoot) -> bool:
    """Compatibility via joint color rotation plus the support rule."""
    if a == b:
        raise ValueError("compatibility is a relation on distinct pairs")
    if not rs.is_irreducible:
        comp_a = _component_of(rs, a.root)
        comp_b = _component_of(rs, b.root)
        if comp_a is not comp_b:
            return True
        sub = comp_a
        return fr_compatible(sub, m, _retarget(sub, a), _retarget(sub, b))
    guard = m * len(rs.positive_roots) + rs.rank + 1
    for _ in range(guard):
        if _is_negative_simple(rs, a):
            return _support_rule(rs, a, b)
        if _is_negative_simple(rs, b):
            return _support_rule(rs, b, a)
        a = rm_map(rs, m, a)
        b = rm_map(rs, m, b)
    raise RuntimeError("color rotation failed to reach a negative simple root")


def _support_rule(rs: RootSystem, neg: ColoredRoot, other: ColoredRoot) -> bool:
    alpha_index = rs.simple_index(rs.negate(neg.root))
    if _is_negative_simple(rs, other):
        return rs.simple_index(rs.negate(other.root)) != alpha_index
    return alpha_index not in rs.support(other.root)


def _component_of(rs: RootSystem, root: Root) -> RootSystem:
    comps = rs.components
    if rs.is_positive(root):
        idx = min(rs.support(root))
    else:
        idx = rs.simple_index(rs.negate(root))
    return rs.component_of_simple(idx)


def _retarget(sub: RootSystem, v: ColoredRoot) -> ColoredRoot:
    """Rebind a colored root to the component system owning its root."""
    target = sub.roots[sub.index_of(v.root)]
    return ColoredRoot(target, v.color)


# -- the word criterion -----------------------------------------------------------


def word_of_face(ctx: ComplexContext, sigma: Iterable[ColoredRoot]) -> GroupElement:
    """Ordered reflection product of a colored-root set.

    Negative simples from the plus block multiply first, then the color
    classes from m down to 1, then the minus-block negatives; inside each
    class the reflections are taken against the total order, largest first.
    """
    rs = ctx.system
    sigma = list(sigma)
    order = ctx.order
    s = rs.split_s
    plus = {rs.negate(a).key for a in rs.simple_roots[:s]}
    minus = {rs.negate(a).key for a in rs.simple_roots[s:]}
    classes = [[] for _ in range(ctx.m + 2)]
    for v in sigma:
        if v.root.key in plus:
            classes[0].append(v)
        elif v.root.key in minus:
            classes[ctx.m + 1].append(v)
        else:
            classes[ctx.m + 1 - v.color].append(v)
    out = rs.identity_element()
    for cls in classes:
        roots = order.sort([v.root for v in cls])
        for r in reversed(roots):
            out = out * rs.reflection(r)
    return out


def is_face(ctx_or_rs, m_or_sigma, sigma=None) -> bool:
    """Word criterion: the product has additive length and sits below gamma."""
    if sigma is None:
        ctx, sigma = ctx_or_rs, m_or_sigma
    else:
        ctx = get_context(ctx_or_rs, m_or_sigma)
    sigma = list(sigma)
    if len({v.key() for v in sigma}) != len(sigma):
        raise ValueError("faces may not repeat a colored root")
    rs = ctx.system
    if not rs.is_irreducible:
        groups = {}
        for v in sigma:
            comp = _component_of(rs, v.root)
            groups.setdefault(id(comp), (comp, []))[1].append(v)
        return all(
            is_face(ctx.component_context(comp), [_retarget(comp, v) for v in part])
            for comp, part in groups.values())
    w = word_of_face(ctx, sigma)
    return w.length == len(sigma) and absolute_leq(w, ctx.gamma)


# -- the complex builder -----------------------------------------------------------


class CompatibilityGraph:
    """Symmetric pairwise-compatibility relation over the colored vertices."""

    def __init__(self, vertices: Sequence[ColoredRoot], adjacency: dict):
        self.vertices = list(vertices)
        self.adjacency = adjacency  # index -> frozenset of indices

    def is_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]


def _max_cliques(adjacency: dict) -> list:
    """Bron-Kerbosch with pivoting; deterministic output order."""
    cliques = []

    def expand(r: list, p: set, x: set):
        if not p and not x:
            cliques.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda v: (len(adjacency[v] & p), -v))
        for v in sorted(p - adjacency[pivot]):
            expand(r + [v], p & adjacency[v], x & adjacency[v])
            p.remove(v)
            x.add(v)

    expand([], set(adjacency), set())
    return sorted(cliques)


def build_complex(rs: RootSystem, m: int) -> tuple:
    """The generalized cluster complex and its compatibility graph."""
    ctx = get_context(rs, m)
    return _build_complex(ctx, rs, m)


def _build_complex(ctx: ComplexContext, rs: RootSystem, m: int) -> tuple:
    if rs.rank == 0:
        cx = SimplicialComplex([], [()], objects=[])
        return cx, CompatibilityGraph([], {})
    if not rs.is_irreducible:
        comps = rs.components
        parts = [_build_complex(ctx.component_context(c), c, m)[0] for c in comps]
        # join at the index level, then relabel in the parent system's basis
        objects = []
        facet_lists = []
        for p in parts:
            off = len(objects)
            objects.extend(_retarget_to(rs, v) for v in p.objects)
            fl = p.facets or ((),)
            facet_lists.append([tuple(v + off for v in f) for f in fl])
        facets = [tuple(sorted(sum(fs, ())))
                  for fs in itertools.product(*facet_lists)]
        labels = [canonical_label(rs, v) for v in objects]
        cx = SimplicialComplex(labels, facets, objects=objects,
                               meta=_shelling_meta(ctx, objects))
        graph = _pair_graph(ctx, objects)
        return cx, graph

    vertices = colored_vertices(rs, m)
    graph = _pair_graph(ctx, vertices)
    adjacency = graph.adjacency
    cliques = _max_cliques(adjacency) if vertices else []
    for clique in cliques:
        if not is_face(ctx, [vertices[i] for i in clique]):
            raise RuntimeError(
                "flagness violated: maximal clique %r fails the word criterion"
                % (clique,))
    labels = [canonical_label(rs, v) for v in vertices]
    cx = SimplicialComplex(labels, cliques, objects=vertices,
                           meta=_shelling_meta(ctx, vertices))
    return cx, graph


def _retarget_to(rs: RootSystem, v: ColoredRoot) -> ColoredRoot:
    return ColoredRoot(rs.roots[rs.index_of(v.root)], v.color)


def _pair_graph(ctx: ComplexContext, vertices: Sequence[ColoredRoot]) -> CompatibilityGraph:
    n = len(vertices)
    adjacency = {i: set() for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if is_face(ctx, [vertices[i], vertices[j]]):
                adjacency[i].add(j)
                adjacency[j].add(i)
    return CompatibilityGraph(vertices, {i: frozenset(a) for i, a in adjacency.items()})


def _shelling_meta(ctx: ComplexContext, vertices: Sequence[ColoredRoot]) -> dict:
    """Vertex ranking hints consumed by the shelling constructor.

    Keys are vertex labels, which stay stable under link/delete/induce.
    """
    rs = ctx.system
    rank = {}
    negatives = []
    for v in vertices:
        label = canonical_label(rs, v)
        if _is_negative_simple(rs, v):
            negatives.append(label)
            rank[label] = (0, 0)
        else:
            owner = rs if rs.is_irreducible else _component_of(rs, v.root)
            octx = ctx if owner is rs else ctx.component_context(owner)
            pos = octx.order.position(_retarget(owner, v).root)
            rank[label] = (v.color, pos)
    return {"vertex_rank": rank, "negative_labels": tuple(negatives)}


def positive_part(cx: SimplicialComplex) -> SimplicialComplex:
    """Induced subcomplex on the colored positive roots."""
    keep = [i for i, lab in enumerate(cx.vertices) if not lab.startswith("-s")]
    return cx.induce(keep)


def subcomplex_below(rs: RootSystem, m: int, w: GroupElement,
                     cx: Optional[SimplicialComplex] = None) -> SimplicialComplex:
    """Faces of the positive part whose word sits below w."""
    ctx = ComplexContext(rs, m)
    if not absolute_leq(w, ctx.gamma):
        raise ValueError("subcomplex_below requires w below the Coxeter element")
    if cx is None:
        cx, _ = build_complex(rs, m)
    pos = positive_part(cx)
    keep = [i for i, v in enumerate(pos.objects)
            if absolute_leq(rs.reflection(_root_in(rs, v.root)), w)]
    return pos.induce(keep)


def _root_in(rs: RootSystem, root: Root) -> Root:
    return rs.roots[rs.index_of(root)]


def face_word(rs: RootSystem, m: int, sigma: Iterable[ColoredRoot]) -> GroupElement:
    """Convenience wrapper building a context for a single word."""
    return word_of_face(ComplexContext(rs, m), sigma)


def restrict(cx: SimplicialComplex, mode: str, arg=None) -> SimplicialComplex:
    """Dispatch to link / delete / induce / skeleton by mode name."""
    if mode == "link":
        return cx.link(arg if isinstance(arg, int) else cx.index_of(arg))
    if mode == "delete":
        return cx.delete(arg if isinstance(arg, int) else cx.index_of(arg))
    if mode == "induce":
        idx = [v if isinstance(v, int) else cx.index_of(v) for v in arg]
        return cx.induce(idx)
    if mode == "skeleton":
        return cx.skeleton(int(arg))
    raise ValueError("unknown restriction mode %r" % (mode,))


# -- the polygon model for type A ---------------------------------------------------


def typeA_polygon_oracle(n: int, m: int) -> SimplicialComplex:
    """Noncrossing allowable diagonals of a polygon with m*n + 2 vertices.

    Models the rank n-1 complex of type A: a diagonal is allowable when it
    cuts the polygon into parts whose vertex counts are both 2 modulo m,
    and faces are the pairwise noncrossing sets of such diagonals.
    """
    if n < 2:
        raise ValueError("the polygon model needs n >= 2")
    size = m * n + 2
    diagonals = []
    for i in range(size):
        for j in range(i + 2, size):
            if (i, j) == (0, size - 1):
                continue  # polygon edge, not a diagonal
            if (j - i) % m == 1 % m:
                diagonals.append((i, j))
    labels = ["d(%d,%d)" % d for d in diagonals]
    adjacency = {i: set() for i in range(len(diagonals))}
    for a, b in itertools.combinations(range(len(diagonals)), 2):
        if not _diagonals_cross(diagonals[a], diagonals[b]):
            adjacency[a].add(b)
            adjacency[b].add(a)
    adjacency = {i: frozenset(s) for i, s in adjacency.items()}
    facets = _max_cliques(adjacency) if diagonals else []
    return SimplicialComplex(labels, facets, objects=diagonals)


def _diagonals_cross(d1: tuple, d2: tuple) -> bool:
    (a, b), (c, d) = d1, d2
    return (a < c < b < d) or (c < a < d < b)
