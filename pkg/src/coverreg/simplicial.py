"""Simplicial complexes with exact reduced homology over Q or a prime field.

Distinguishes the void complex (no faces at all) from the empty complex (the
single face {}): the empty complex has reduced homology k in dimension -1, the
void complex is acyclic.  The ground set is tracked independently of the
facets because cone and link semantics depend on it.

The Stanley-Reisner bridge for cover ideals lives here as ``cover_complex``:
its facets are the edge complements, so a face is exactly a vertex set missing
some edge.  ``cover_profile`` computes homology of such complexes through the
structural shortcuts that hold for them (an uncovered ground vertex is a cone
apex; disjoint components compose by the join rule), memoized per component;
``reduced_homology`` is always the direct boundary-matrix route.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InputError
from .hypergraph import Hypergraph
from .linalg import sparse_rank

__all__ = [
    "SimplicialComplex",
    "HomologyProfile",
    "cover_complex",
    "link",
    "join_complexes",
    "delete_facet",
    "reduced_homology",
    "hdim",
    "cone_apex",
    "cover_profile",
    "cover_hdim",
    "field_name",
    "clear_profile_cache",
]


def field_name(modulus: int | None) -> str:
    return "Q" if modulus is None else f"GF({modulus})"


@dataclass(frozen=True)
class SimplicialComplex:
    ground_set: frozenset[int]
    facets: frozenset[frozenset[int]]

    def __post_init__(self):
        for f in self.facets:
            if not f <= self.ground_set:
                raise InputError(f"facet {sorted(f)} not contained in the ground set")
        for f in self.facets:
            for g in self.facets:
                if f != g and f < g:
                    raise InputError("facets must form an antichain; use SimplicialComplex.of")

    @classmethod
    def of(cls, ground_set: Iterable[int], facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Complex generated by ``facets``: dominated members are pruned."""
        gs = frozenset(int(v) for v in ground_set)
        raw = {frozenset(int(v) for v in f) for f in facets}
        maximal = frozenset(f for f in raw if not any(f < g for g in raw))
        return cls(gs, maximal)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == frozenset({frozenset()})

    @property
    def dimension(self) -> int | None:
        """Max face dimension; None for the void complex, -1 for the empty complex."""
        if self.is_void:
            return None
        return max(len(f) for f in self.facets) - 1

    def has_face(self, f: Iterable[int]) -> bool:
        fs = frozenset(f)
        return any(fs <= facet for facet in self.facets)


@dataclass(frozen=True)
class HomologyProfile:
    """Dimensions of reduced homology, indexed -1 .. dim; all zero means acyclic."""

    dims: Mapping[int, int]
    field: str = "Q"

    @property
    def acyclic(self) -> bool:
        return all(v == 0 for v in self.dims.values())

    @property
    def hdim(self) -> int | None:
        nonzero = [i for i, v in self.dims.items() if v]
        return max(nonzero) if nonzero else None


def cover_complex(h: Hypergraph) -> SimplicialComplex:
    """Stanley-Reisner complex of the cover ideal: facets are edge complements.

    Edgeless input gives the void complex; an edge equal to the whole vertex
    set contributes the facet {}.
    """
    facets = frozenset(h.vertices - e for e in h.edges)
    return SimplicialComplex(h.vertices, facets)


def link(cx: SimplicialComplex, f: Iterable[int]) -> SimplicialComplex:
    fs = frozenset(f)
    if not cx.has_face(fs):
        raise InputError(f"{sorted(fs)} is not a face of the complex")
    new_facets = {facet - fs for facet in cx.facets if fs <= facet}
    return SimplicialComplex.of(cx.ground_set - fs, new_facets)


def join_complexes(cx1: SimplicialComplex, cx2: SimplicialComplex) -> SimplicialComplex:
    if cx1.ground_set & cx2.ground_set:
        raise InputError("join requires disjoint ground sets")
    facets = {f | g for f in cx1.facets for g in cx2.facets}
    return SimplicialComplex(cx1.ground_set | cx2.ground_set, frozenset(facets))


def delete_facet(cx: SimplicialComplex, f: Iterable[int]) -> SimplicialComplex:
    fs = frozenset(f)
    if fs not in cx.facets:
        raise InputError(f"{sorted(fs)} is not a facet")
    return SimplicialComplex(cx.ground_set, cx.facets - {fs})


def cone_apex(cx: SimplicialComplex) -> int | None:
    """A vertex lying in every facet, if any (such a complex is acyclic)."""
    if cx.is_void:
        return None
    common = frozenset.intersection(*cx.facets)
    return min(common) if common else None


def _faces_by_dim(cx: SimplicialComplex) -> list[list[tuple[int, ...]]]:
    """Faces grouped by dimension; index d holds the (d-1)-dimensional faces."""
    if cx.is_void:
        return []
    seen: set[tuple[int, ...]] = set()
    for facet in cx.facets:
        fs = sorted(facet)
        for k in range(len(fs) + 1):
            seen.update(itertools.combinations(fs, k))
    top = max(len(f) for f in seen)
    levels: list[list[tuple[int, ...]]] = [[] for _ in range(top + 1)]
    for f in seen:
        levels[len(f)].append(f)
    for level in levels:
        level.sort()
    return levels


def _boundary_rows(levels, d: int) -> list[dict[int, int]]:
    """Rows of the boundary map from d-faces to (d-1)-faces (one row per d-face)."""
    index = {f: i for i, f in enumerate(levels[d])}
    rows = []
    for f in levels[d + 1]:
        row: dict[int, int] = {}
        for j in range(len(f)):
            sub = f[:j] + f[j + 1 :]
            row[index[sub]] = 1 if j % 2 == 0 else -1
        rows.append(row)
    return rows


def reduced_homology(cx: SimplicialComplex, fld: int | None = None) -> HomologyProfile:
    """Exact Betti numbers of the augmented chain complex from boundary ranks."""
    levels = _faces_by_dim(cx)
    if not levels:
        return HomologyProfile({}, field_name(fld))
    top = len(levels) - 2  # top face dimension
    ranks = [0] * (top + 3)  # ranks[d+1] = rank of boundary from d-faces
    for d in range(0, top + 1):
        ranks[d + 1] = sparse_rank(_boundary_rows(levels, d), fld)
    dims = {}
    for d in range(-1, top + 1):
        dims[d] = len(levels[d + 1]) - ranks[d + 1] - ranks[d + 2]
    return HomologyProfile(dims, field_name(fld))


def hdim(cx: SimplicialComplex, fld: int | None = None) -> int | None:
    """Largest index with nonzero reduced homology; None when acyclic.

    Ranks are taken from the top dimension down so the computation stops at
    the first nonzero group.
    """
    levels = _faces_by_dim(cx)
    if not levels:
        return None
    top = len(levels) - 2
    rank_above = 0
    for d in range(top, -2, -1):
        rank_d = sparse_rank(_boundary_rows(levels, d), fld) if d >= 0 else 0
        if len(levels[d + 1]) - rank_d - rank_above > 0:
            return d
        rank_above = rank_d
    return None


# ---------------------------------------------------------------------------
# Cover-complex homology with structural shortcuts (memoized per component).

_profile_cache: dict[tuple[frozenset[frozenset[int]], int | None], dict[int, int]] = {}


def clear_profile_cache() -> None:
    _profile_cache.clear()


def _edge_components(edges: frozenset[frozenset[int]]) -> list[frozenset[frozenset[int]]]:
    remaining = set(edges)
    comps = []
    while remaining:
        e = remaining.pop()
        comp = {e}
        verts = set(e)
        grew = True
        while grew:
            grew = False
            for f in list(remaining):
                if f & verts:
                    remaining.discard(f)
                    comp.add(f)
                    verts |= f
                    grew = True
        comps.append(frozenset(comp))
    return comps


def _component_profile(edges: frozenset[frozenset[int]], fld: int | None) -> dict[int, int]:
    key = (edges, fld)
    cached = _profile_cache.get(key)
    if cached is None:
        verts = frozenset().union(*edges)
        cx = cover_complex(Hypergraph(verts, edges))
        cached = dict(reduced_homology(cx, fld).dims)
        _profile_cache[key] = cached
    return cached


def _compose_profiles(p1: dict[int, int], p2: dict[int, int]) -> dict[int, int]:
    # Disjoint-union rule for cover complexes: Mayer-Vietoris over the two
    # cone pieces plus the Kuenneth formula for joins shifts degrees by 2.
    out: dict[int, int] = {}
    for i, a in p1.items():
        if not a:
            continue
        for j, b in p2.items():
            if b:
                out[i + j + 2] = out.get(i + j + 2, 0) + a * b
    return out


def cover_profile(h: Hypergraph, fld: int | None = None) -> HomologyProfile:
    """Reduced homology of ``cover_complex(h)``.

    An uncovered vertex of the ground set sits in every facet, making the
    complex a cone (acyclic); otherwise the complex splits over the connected
    components of the edge set and the component profiles compose.  Component
    homology is computed exactly by boundary ranks and memoized.
    """
    if h.is_edgeless:
        return HomologyProfile({}, field_name(fld))
    if h.isolated_vertices():
        return HomologyProfile({0: 0}, field_name(fld))
    comps = _edge_components(h.edges)
    profile = _component_profile(comps[0], fld)
    for comp in comps[1:]:
        if all(v == 0 for v in profile.values()):
            return HomologyProfile({0: 0}, field_name(fld))
        profile = _compose_profiles(profile, _component_profile(comp, fld))
    return HomologyProfile(profile, field_name(fld))


def cover_hdim(h: Hypergraph, fld: int | None = None) -> int | None:
    return cover_profile(h, fld).hdim
