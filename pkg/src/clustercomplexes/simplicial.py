"""Abstract simplicial complexes with facet-list representation.

Vertices are identified by string labels (kept stable for output); an
optional parallel tuple of payload objects lets callers recover the
underlying combinatorial data of each vertex.  Facets are sorted tuples
of vertex indices, and the facet list itself is kept sorted.
"""
from __future__ import annotations

import itertools
from math import comb
from typing import Iterable, Optional, Sequence


class SimplicialComplex:

    def __init__(self, vertices: Sequence[str], facets: Iterable[Sequence[int]],
                 objects: Optional[Sequence] = None, meta: Optional[dict] = None):
        self.vertices = tuple(vertices)
        self.objects = tuple(objects) if objects is not None else None
        if self.objects is not None and len(self.objects) != len(self.vertices):
            raise ValueError("objects and vertices differ in length")
        cleaned = sorted({tuple(sorted(f)) for f in facets})
        # drop faces contained in other faces
        maximal = [f for f in cleaned
                   if not any(set(f) < set(g) for g in cleaned if len(g) > len(f))]
        self.facets = tuple(maximal)
        self.meta = dict(meta or {})
        self._faces = None

    @classmethod
    def from_faces(cls, vertices, faces, objects=None, meta=None):
        return cls(vertices, faces, objects=objects, meta=meta)

    # -- basic queries -------------------------------------------------------

    def dimension(self) -> int:
        if not self.facets:
            return -1
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        if not self.facets:
            return True
        sizes = {len(f) for f in self.facets}
        return len(sizes) == 1

    def vertex_count(self) -> int:
        return len(self.vertices)

    def facet_count(self) -> int:
        return len(self.facets)

    def faces(self) -> set:
        """All faces, the empty face included, as sorted index tuples."""
        if self._faces is None:
            out = {()}
            for f in self.facets:
                for k in range(1, len(f) + 1):
                    out.update(itertools.combinations(f, k))
            self._faces = out
        return self._faces

    def faces_by_dim(self) -> list:
        by_dim = [[] for _ in range(self.dimension() + 2)]
        for f in self.faces():
            by_dim[len(f)].append(f)
        return [sorted(fs) for fs in by_dim]

    def has_face(self, face: Sequence[int]) -> bool:
        fs = set(face)
        return any(fs <= set(g) for g in self.facets)

    def f_vector(self) -> tuple:
        counts = [len(fs) for fs in self.faces_by_dim()]
        return tuple(counts)

    def euler_characteristic_reduced(self) -> int:
        chi = 0
        for k, count in enumerate(self.f_vector()):
            chi += count if (k - 1) % 2 == 0 else -count
        return chi

    def index_of(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise ValueError("unknown vertex %r" % (label,)) from None

    # -- constructions -------------------------------------------------------

    def _subset(self, keep: Sequence[int], new_facets: Iterable) -> "SimplicialComplex":
        keep = sorted(keep)
        remap = {old: new for new, old in enumerate(keep)}
        labels = [self.vertices[i] for i in keep]
        objs = [self.objects[i] for i in keep] if self.objects is not None else None
        facets = [tuple(sorted(remap[v] for v in f)) for f in new_facets]
        meta = dict(self.meta)
        return SimplicialComplex(labels, facets, objects=objs, meta=meta)

    def link(self, v: int) -> "SimplicialComplex":
        star = [f for f in self.facets if v in f]
        if not star:
            raise ValueError("unknown vertex index %r" % (v,))
        shrunk = [tuple(x for x in f if x != v) for f in star]
        keep = sorted({x for f in shrunk for x in f})
        return self._subset(keep, shrunk)

    def delete(self, v: int) -> "SimplicialComplex":
        if v < 0 or v >= len(self.vertices):
            raise ValueError("unknown vertex index %r" % (v,))
        keep = [i for i in range(len(self.vertices)) if i != v]
        shrunk = [tuple(x for x in f if x != v) for f in self.facets]
        return self._subset(keep, shrunk)

    def induce(self, subset: Iterable[int]) -> "SimplicialComplex":
        keep = sorted(set(subset))
        if any(v < 0 or v >= len(self.vertices) for v in keep):
            raise ValueError("unknown vertex index in %r" % (subset,))
        ks = set(keep)
        shrunk = [tuple(x for x in f if x in ks) for f in self.facets]
        return self._subset(keep, shrunk)

    def skeleton(self, k: int) -> "SimplicialComplex":
        if k < 0:
            return SimplicialComplex(self.vertices, [], objects=self.objects)
        facets = [f for f in self.faces() if len(f) == k + 1]
        facets += [f for f in self.facets if len(f) <= k]
        return SimplicialComplex(self.vertices, facets, objects=self.objects,
                                 meta=dict(self.meta))

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        if set(self.vertices) & set(other.vertices):
            raise ValueError("join requires disjoint vertex labels")
        labels = self.vertices + other.vertices
        objs = None
        if self.objects is not None and other.objects is not None:
            objs = self.objects + other.objects
        off = len(self.vertices)
        mine = self.facets or ((),)
        theirs = other.facets or ((),)
        facets = [tuple(sorted(f + tuple(v + off for v in g)))
                  for f in mine for g in theirs]
        return SimplicialComplex(labels, facets, objects=objs)

    # -- output ---------------------------------------------------------------

    def labeled_facets(self) -> list:
        return [tuple(self.vertices[v] for v in f) for f in self.facets]

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "facets": [list(f) for f in self.facets],
            "f_vector": list(self.f_vector()),
        }

    def __repr__(self):
        return "SimplicialComplex(%d vertices, %d facets, dim %d)" % (
            len(self.vertices), len(self.facets), self.dimension())


def f_to_h(f_vector: Sequence[int]) -> tuple:
    """Binomial transform sending the f-vector to the h-vector."""
    d = len(f_vector) - 1  # = dim + 1
    h = []
    for k in range(d + 1):
        total = 0
        for i in range(k + 1):
            total += (-1) ** (k - i) * comb(d - i, k - i) * f_vector[i]
        h.append(total)
    return tuple(h)


def f_h_vectors(cx: SimplicialComplex) -> tuple:
    """The f-vector, and the h-vector when the complex is pure (else None)."""
    f = cx.f_vector()
    if not cx.is_pure():
        return f, None
    return f, f_to_h(f)


def facets_as_label_sets(cx: SimplicialComplex) -> set:
    return {frozenset(f) for f in cx.labeled_facets()}
