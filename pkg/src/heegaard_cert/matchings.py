"""The intersection graph of a diagram and the S^3 recogniser.

The graph has a vertex A_i per alpha curve, B_j per beta curve and one edge
per intersection point, so Floer generators are exactly its perfect
matchings. Strong diagrams of integer homology spheres have a single
perfect matching. Removing a degree-one vertex together with its neighbour
keeps the matching count, and a graph with no such vertex always has a
second matching. So iterated pruning must empty the graph, which shows the
diagram destabilises to the one-point torus diagram of S^3.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Hashable, Iterator, NamedTuple, Optional, Sequence

from heegaard_cert.errors import InputError, ResourceLimitError
from heegaard_cert.heegaard import DEFAULT_MAX_GENERATORS, HeegaardDiagram, StrongReport, is_strong

DEFAULT_MAX_MATCHINGS = DEFAULT_MAX_GENERATORS

Matching = tuple  # edge ids, one per A-vertex in MatchGraph.a_vertices order


class Edge(NamedTuple):
    a: int
    b: int
    sign: int
    id: Hashable


@dataclass(frozen=True)
class MatchGraph:
    """Bipartite multigraph; vertices keep their original labels through pruning."""

    a_vertices: tuple[int, ...]
    b_vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        edges = tuple(Edge(*e) for e in self.edges)
        a_set, b_set = set(self.a_vertices), set(self.b_vertices)
        if len(a_set) != len(self.a_vertices) or len(b_set) != len(self.b_vertices):
            raise InputError("vertex labels must be distinct")
        ids = set()
        for e in edges:
            if e.a not in a_set or e.b not in b_set:
                raise InputError(f"edge {e.id!r} has an endpoint outside the graph")
            if e.id in ids:
                raise InputError(f"duplicate edge id {e.id!r}")
            ids.add(e.id)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_pairs(cls, a_count: int, b_count: int, pairs: Sequence[tuple[int, int]]) -> "MatchGraph":
        """Graph on ``range(a_count)``, ``range(b_count)`` with edge ids ``0, 1, ...``."""
        return cls(tuple(range(a_count)), tuple(range(b_count)), tuple(Edge(a, b, 1, k) for k, (a, b) in enumerate(pairs)))

    @property
    def a_count(self) -> int:
        return len(self.a_vertices)

    @property
    def b_count(self) -> int:
        return len(self.b_vertices)

    def edge(self, edge_id: Hashable) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)

    def incident_a(self, a: int) -> list[Edge]:
        return [e for e in self.edges if e.a == a]

    def incident_b(self, b: int) -> list[Edge]:
        return [e for e in self.edges if e.b == b]


def graph_of(h: HeegaardDiagram) -> MatchGraph:
    """Edges listed by beta word then position; edge id is ``(beta, position)``."""
    edges = tuple(
        Edge(p.alpha, j, p.sign, (j, pos)) for j, w in enumerate(h.beta_words) for pos, p in enumerate(w)
    )
    return MatchGraph(tuple(range(h.genus)), tuple(range(h.genus)), edges)


def iter_matchings(g: MatchGraph) -> Iterator[Matching]:
    """Perfect matchings, choosing edges for A-vertices in order, each in edge-list order."""
    if g.a_count != g.b_count:
        return iter(())
    incident = [g.incident_a(a) for a in g.a_vertices]
    used: set[int] = set()
    chosen: list[Hashable] = []

    def extend(k: int) -> Iterator[Matching]:
        if k == len(incident):
            yield tuple(chosen)
            return
        for e in incident[k]:
            if e.b in used:
                continue
            used.add(e.b)
            chosen.append(e.id)
            yield from extend(k + 1)
            chosen.pop()
            used.discard(e.b)

    return extend(0)


def enumerate_matchings(g: MatchGraph, cap: int = DEFAULT_MAX_MATCHINGS) -> list[Matching]:
    out = []
    for m in iter_matchings(g):
        if len(out) >= cap:
            raise ResourceLimitError(f"more than {cap} perfect matchings")
        out.append(m)
    return out


def is_perfect_matching(g: MatchGraph, mu: Sequence[Hashable]) -> bool:
    ids = {e.id: e for e in g.edges}
    if len(mu) != g.a_count or g.a_count != g.b_count or len(set(mu)) != len(mu):
        return False
    if any(edge_id not in ids for edge_id in mu):
        return False
    edges = [ids[edge_id] for edge_id in mu]
    return {e.a for e in edges} == set(g.a_vertices) and {e.b for e in edges} == set(g.b_vertices)


def _canonical(g: MatchGraph, edges: Sequence[Edge]) -> Matching:
    by_a = {e.a: e.id for e in edges}
    return tuple(by_a[a] for a in g.a_vertices)


def prune_leaf(g: MatchGraph) -> Optional[tuple[MatchGraph, tuple[int, int]]]:
    """Delete the first degree-one vertex and its neighbour.

    A-vertices are scanned before B-vertices, each in increasing label
    order. Returns the reduced graph and the removed ``(a, b)`` pair, or
    ``None`` if the graph has no leaf.
    """
    pair = None
    for a in sorted(g.a_vertices):
        inc = g.incident_a(a)
        if len(inc) == 1:
            pair = (a, inc[0].b)
            break
    else:
        for b in sorted(g.b_vertices):
            inc = g.incident_b(b)
            if len(inc) == 1:
                pair = (inc[0].a, b)
                break
    if pair is None:
        return None
    a, b = pair
    reduced = MatchGraph(
        tuple(v for v in g.a_vertices if v != a),
        tuple(v for v in g.b_vertices if v != b),
        tuple(e for e in g.edges if e.a != a and e.b != b),
    )
    return reduced, pair


def find_alternating_cycle(g: MatchGraph, mu: Sequence[Hashable]) -> Optional[list[Edge]]:
    """Directed cycle when matched edges point A->B and the rest B->A.

    Paths are grown backwards, one predecessor at a time as in the maximal
    path argument, by depth-first search from each vertex in turn (A-side
    first, least label first, predecessors in edge-list order). The
    returned edges alternate between unmatched and matched ones.
    """
    matched = set(mu)
    mate_edge = {}
    for e in g.edges:
        if e.id in matched:
            mate_edge[("B", e.b)] = e

    def predecessors(node: tuple[str, int]) -> list[tuple[tuple[str, int], Edge]]:
        side, v = node
        if side == "A":
            return [(("B", e.b), e) for e in g.incident_a(v) if e.id not in matched]
        e = mate_edge[node]
        return [(("A", e.a), e)]

    done: set = set()
    starts = [("A", a) for a in sorted(g.a_vertices)] + [("B", b) for b in sorted(g.b_vertices)]
    for start in starts:
        if start in done:
            continue
        path = [start]
        via: list[Edge] = []  # via[k] joins path[k + 1] -> path[k]
        on_path = {start: 0}
        stack = [iter(predecessors(start))]
        while stack:
            step = next(stack[-1], None)
            if step is None:
                stack.pop()
                node = path.pop()
                del on_path[node]
                done.add(node)
                if via:
                    via.pop()
                continue
            w, e = step
            if w in on_path:
                return via[on_path[w]:] + [e]
            if w in done:
                continue
            on_path[w] = len(path)
            path.append(w)
            via.append(e)
            stack.append(iter(predecessors(w)))
    return None


def second_matching(g: MatchGraph, mu: Sequence[Hashable]) -> Optional[Matching]:
    """Another perfect matching, from ``mu`` and an alternating directed cycle.

    ``None`` means no such cycle exists, i.e. ``mu`` is the only perfect
    matching of ``g``.
    """
    if not is_perfect_matching(g, mu):
        raise InputError("second_matching needs a perfect matching of the graph")
    cycle = find_alternating_cycle(g, mu)
    if cycle is None:
        return None
    cycle_ids = {e.id for e in cycle}
    kept = [e for e in g.edges if (e.id in mu) != (e.id in cycle_ids)]
    return _canonical(g, kept)


def unique_matching(g: MatchGraph) -> bool:
    """True iff ``g`` has exactly one perfect matching (false if it has none)."""
    mu = next(iter_matchings(g), None)
    if mu is None:
        return False
    return second_matching(g, mu) is None


class S3Outcome(enum.Enum):
    IS_S3 = "IsS3"
    NOT_INTEGER_HOMOLOGY_SPHERE = "NotIntegerHomologySphere"
    NOT_STRONG_DIAGRAM = "NotStrongDiagram"
    INCONSISTENT = "Inconsistent"


@dataclass(frozen=True)
class S3Verdict:
    """``trace`` lists the pruned ``(a, b)`` pairs, 0-based.

    For ``Inconsistent``, ``evidence`` holds two distinct perfect matchings
    of the stalled graph (or is empty when it has none).
    """

    outcome: S3Outcome
    trace: tuple[tuple[int, int], ...] = ()
    strong: Optional[StrongReport] = field(default=None, compare=False)
    evidence: tuple[Matching, ...] = ()

    @property
    def is_s3(self) -> bool:
        return self.outcome is S3Outcome.IS_S3

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "trace": [[a + 1, b + 1] for a, b in self.trace],
            "evidence": [[_edge_id_out(i) for i in m] for m in self.evidence],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "S3Verdict":
        return cls(
            outcome=S3Outcome(data["outcome"]),
            trace=tuple((a - 1, b - 1) for a, b in data["trace"]),
            evidence=tuple(tuple(_edge_id_in(i) for i in m) for m in data["evidence"]),
        )


def _edge_id_out(edge_id: Hashable):
    if isinstance(edge_id, tuple):
        return [x + 1 for x in edge_id]
    return edge_id


def _edge_id_in(edge_id):
    if isinstance(edge_id, list):
        return tuple(x - 1 for x in edge_id)
    return edge_id


def recognize_s3(h: HeegaardDiagram, cap: int = DEFAULT_MAX_GENERATORS) -> S3Verdict:
    """Certify that a strong diagram with ``|H_1| = 1`` describes S^3.

    Leaves are pruned until the graph is empty; the trace of pruned pairs is
    the certificate. Stalling on a nonempty leafless graph is impossible
    for consistent input and is reported as ``Inconsistent``.
    """
    report = is_strong(h, cap)
    if not report.is_strong:
        return S3Verdict(S3Outcome.NOT_STRONG_DIAGRAM, strong=report)
    if report.h1_order != 1:
        return S3Verdict(S3Outcome.NOT_INTEGER_HOMOLOGY_SPHERE, strong=report)
    g = graph_of(h)
    trace = []
    while g.a_vertices or g.b_vertices:
        step = prune_leaf(g)
        if step is None:
            mu = next(iter_matchings(g), None)
            evidence: tuple[Matching, ...] = ()
            if mu is not None:
                other = second_matching(g, mu)
                evidence = (mu,) if other is None else (mu, other)
            return S3Verdict(S3Outcome.INCONSISTENT, tuple(trace), report, evidence)
        g, pair = step
        trace.append(pair)
    return S3Verdict(S3Outcome.IS_S3, tuple(trace), report)
