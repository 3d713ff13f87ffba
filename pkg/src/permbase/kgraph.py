"""The Kulshammer graph K(G, H) on the irreducible characters of H.

Two irreducibles are adjacent when their inductions to G share an
irreducible constituent.  Since characters decompose with nonnegative
integer multiplicities, that is equivalent to a nonzero inner product of
the induced characters, so adjacency is decided without computing Irr(G).
Distances are all-pairs BFS.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chartable import CharacterTable, character_table
from .classfun import ClassFunction, induce, inner_product
from .perm import PermutationGroup, Subgroup


class DisconnectedGraphError(RuntimeError):
    """The graph came out disconnected, which signals an arithmetic bug for
    the supported (transitive point-stabilizer) inputs."""


@dataclass(frozen=True, eq=False)
class KulshammerGraph:
    group: PermutationGroup
    subgroup: Subgroup
    table: CharacterTable
    induced: tuple[ClassFunction, ...]
    adjacency: tuple[tuple[bool, ...], ...]
    distances: tuple[tuple[int, ...], ...]
    parents: tuple[tuple[int, ...], ...]  # BFS tree per source, -1 at the source

    @property
    def vertex_count(self) -> int:
        return len(self.table)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        n = self.vertex_count
        return tuple((i, j) for i in range(n) for j in range(i + 1, n)
                     if self.adjacency[i][j])

    def distance(self, i: int, j: int) -> int:
        return self.distances[i][j]

    @property
    def diameter(self) -> int:
        return max(max(row) for row in self.distances)

    def shortest_path(self, src: int, dst: int) -> tuple[int, ...]:
        """A shortest path, following the BFS tree (ties by vertex index)."""
        path = [dst]
        while path[-1] != src:
            path.append(self.parents[src][path[-1]])
        return tuple(reversed(path))

    def index_of_vertex(self, f: ClassFunction) -> int:
        return self.table.index_of(f)

    def vertex_label(self, i: int) -> str:
        return f"chi{i} (deg {self.table.degrees[i]})"

    def to_dot(self, annotations: dict[int, str] | None = None) -> str:
        """DOT source; ``annotations`` adds bracketed tags to vertex labels."""
        annotations = annotations or {}
        lines = ["graph kulshammer {"]
        for i in range(self.vertex_count):
            label = self.vertex_label(i)
            if i in annotations:
                label += f" [{annotations[i]}]"
            lines.append(f'  v{i} [label="{label}"];')
        for i, j in self.edges:
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(group: PermutationGroup, subgroup: Subgroup) -> KulshammerGraph:
    """Build K(G, H) with exact adjacency and BFS distances.

    Raises DisconnectedGraphError if the graph is not connected.
    """
    if subgroup.parent is not group:
        raise ValueError("subgroup does not live in the given group")
    table = character_table(subgroup.group)
    induced = tuple(induce(chi, group) for chi in table.irreducibles)
    n = len(table)
    adjacency = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if not inner_product(induced[i], induced[j]).is_zero:
                adjacency[i][j] = adjacency[j][i] = True

    distances = []
    parents = []
    for src in range(n):
        dist = [-1] * n
        par = [-1] * n
        dist[src] = 0
        frontier = [src]
        while frontier:
            nxt = []
            for v in frontier:
                for w in range(n):
                    if adjacency[v][w] and dist[w] == -1:
                        dist[w] = dist[v] + 1
                        par[w] = v
                        nxt.append(w)
            frontier = sorted(nxt)
        if any(d == -1 for d in dist):
            comp = sorted(v for v, d in enumerate(dist) if d == -1)
            raise DisconnectedGraphError(
                f"graph on Irr(H) is disconnected: vertices {comp} unreachable "
                f"from {src}; |G|={group.order}, |H|={subgroup.order}")
        distances.append(tuple(dist))
        parents.append(tuple(par))

    return KulshammerGraph(group, subgroup, table, induced,
                           tuple(tuple(row) for row in adjacency),
                           tuple(distances), tuple(parents))


@dataclass(frozen=True)
class PathPropertyResult:
    """Outcome of the shortest-path constituent check from the trivial vertex."""

    ok: bool
    assertions: int
    violation: tuple[int, int, int] | None = None  # (target vertex, step k, vertex at step k)
    paths: tuple[tuple[int, ...], ...] = field(default_factory=tuple)


def check_path_property(graph: KulshammerGraph, chi: ClassFunction) -> PathPropertyResult:
    """Along each BFS shortest path from the trivial character 1_H = v0, ...,
    vm, check <chi^k, (vk induced)> != 0 for 1 <= k <= m.

    Returns the first violated triple if any.  chi must be the permutation
    character of G for the statement to be meaningful.
    """
    if chi.group is not graph.group:
        raise ValueError("chi must live on the graph's big group")
    maxdist = max(graph.distances[0])
    powers = [chi ** 0]
    for _ in range(maxdist):
        powers.append(powers[-1] * chi)
    assertions = 0
    paths = []
    for v in range(graph.vertex_count):
        path = graph.shortest_path(0, v)
        paths.append(path)
        for k in range(1, len(path)):
            assertions += 1
            if inner_product(powers[k], graph.induced[path[k]]).is_zero:
                return PathPropertyResult(False, assertions, (v, k, path[k]), tuple(paths))
    return PathPropertyResult(True, assertions, None, tuple(paths))
