"""
Degeneration posets of stratifications.

Nodes are stratum labels annotated with their dimension n; an edge
(parent, child) means child is a simple degeneration of parent. Closures are
computed by reachability in the DAG.
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import networkx as nx

from ..errors import OutOfRange
from ..rep_engine import hom_multiplicity, hom_multiplicity_A
from ..weights import Partition, root_system_for_N
from .degenerations import merge_candidates, simple_degenerations
from .enumerate import enumerate_strata
from .labels import StratumLabel, StratumLabelA, sort_labels

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PosetNode:
    label: StratumLabel
    empty: bool = False

    @property
    def dimension(self) -> int:
        return self.label.n


@dataclass(frozen=True)
class PosetEdge:
    parent: int
    child: int
    dashed: bool = False


@dataclass
class PosetDag:
    family: str
    N: int
    d: int
    nodes: list[PosetNode] = field(default_factory=list)
    edges: list[PosetEdge] = field(default_factory=list)

    def index(self, label: StratumLabel) -> int:
        for i, node in enumerate(self.nodes):
            if node.label == label:
                return i
        raise KeyError(str(label))

    def labels(self, include_empty: bool = False) -> list[StratumLabel]:
        return [node.label for node in self.nodes if include_empty or not node.empty]

    def solid_edges(self) -> list[tuple[StratumLabel, StratumLabel]]:
        return [(self.nodes[e.parent].label, self.nodes[e.child].label) for e in self.edges if not e.dashed]

    def to_networkx(self, include_empty: bool = False) -> nx.DiGraph:
        graph = nx.DiGraph()
        for i, node in enumerate(self.nodes):
            if include_empty or not node.empty:
                graph.add_node(i, label=str(node.label), dimension=node.dimension, empty=node.empty)
        for edge in self.edges:
            if include_empty or not edge.dashed:
                graph.add_edge(edge.parent, edge.child, dashed=edge.dashed)
        return graph

    def validate(self) -> None:
        graph = self.to_networkx(include_empty=True)
        if not nx.is_directed_acyclic_graph(graph):
            raise ValueError("degeneration graph has a cycle")
        for edge in self.edges:
            if self.nodes[edge.parent].dimension != self.nodes[edge.child].dimension + 1:
                raise ValueError(f"edge {edge} does not drop the dimension by one")

    def closure_of(self, label: StratumLabel) -> list[StratumLabel]:
        graph = self.to_networkx()
        start = self.index(label)
        reached = nx.descendants(graph, start) | {start}
        return sort_labels(self.nodes[i].label for i in reached)


def build_poset(
    N: int, d: int, family: str, include_empty: bool = False, max_cells: int | None = None
) -> PosetDag:
    """
    Nodes are the d-nontrivial labels, edges the simple degenerations.

    With include_empty, merges that are not d-nontrivial are added as empty
    nodes and followed further; every edge touching an empty node is dashed.
    """
    labels = enumerate_strata(N, d, family, max_cells)
    nodes = [PosetNode(label) for label in labels]
    index = {label: i for i, label in enumerate(labels)}
    edges: list[PosetEdge] = []

    queue = deque(labels)
    while queue:
        parent = queue.popleft()
        parent_empty = nodes[index[parent]].empty
        targets = merge_candidates(parent) if include_empty else simple_degenerations(parent)
        for child in targets:
            if child not in index:
                if not include_empty:
                    continue
                index[child] = len(nodes)
                nodes.append(PosetNode(child, empty=True))
                queue.append(child)
            child_empty = nodes[index[child]].empty
            edges.append(PosetEdge(index[parent], index[child], dashed=parent_empty or child_empty))

    order = sorted(range(len(nodes)), key=lambda i: (nodes[i].empty, -nodes[i].dimension, str(nodes[i].label)))
    remap = {old: new for new, old in enumerate(order)}
    dag = PosetDag(
        family=family,
        N=N,
        d=d,
        nodes=[nodes[i] for i in order],
        edges=sorted({PosetEdge(remap[e.parent], remap[e.child], e.dashed) for e in edges}, key=lambda e: (e.parent, e.child)),
    )
    dag.validate()
    logger.info(
        "%s poset of (%d,%d): %d nodes, %d edges", family, N, d, len(dag.nodes), len(dag.edges)
    )
    return dag


def closure(label: StratumLabel) -> list[StratumLabel]:
    """Reflexive-transitive closure of the simple degeneration relation."""
    if not label.is_d_nontrivial():
        raise OutOfRange(f"{label} is not a stratum of the ({label.N},{label.d}) stratification")
    graph = nx.DiGraph()
    graph.add_node(label)
    queue = deque([label])
    while queue:
        current = queue.popleft()
        for child in simple_degenerations(current):
            if child not in graph:
                queue.append(child)
            graph.add_edge(current, child)
    return sort_labels(nx.descendants(graph, label) | {label})


def _members(label: StratumLabel) -> tuple:
    return label.parts if isinstance(label, StratumLabelA) else label.pairs


def _member_size(member, N: int) -> int:
    return member.size if isinstance(member, Partition) else member.lift(N).size


@lru_cache(maxsize=None)
def _hom_nonzero(xi, block: tuple, N: int) -> bool:
    if isinstance(xi, Partition):
        return hom_multiplicity_A(xi, block, N) > 0
    if xi.lift(N).size != sum(p.lift(N).size for p in block):
        return False
    rs = root_system_for_N(N)
    return hom_multiplicity(rs, xi.weight.coords, [p.weight.coords for p in block]) > 0


def _splits(count: int, free: list[int], tied: list[bool]) -> Iterator[tuple[int, ...]]:
    """
    Ways to put count equal members into blocks with the given free room.

    A block tied to its predecessor is interchangeable with it and never
    receives more members than it.
    """

    def place(j: int, left: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if j == len(free):
            if not left:
                yield prefix
            return
        most = min(left, free[j])
        if tied[j]:
            most = min(most, prefix[-1])
        for c in range(most, -1, -1):
            yield from place(j + 1, left - c, prefix + (c,))

    yield from place(0, count, ())


def order_leq(xi: StratumLabel, lam: StratumLabel) -> bool:
    """
    Xi <= Lambda: the members of Lambda split into Xi.n blocks, matched to the
    members of Xi, with a nonzero Hom space from each member into its block.

    Blocks are filled one distinct member of Lambda at a time; a block never
    outgrows the size of its target and is tested as soon as it is full.
    """
    if type(xi) is not type(lam) or (xi.N, xi.d) != (lam.N, lam.d) or xi.n > lam.n:
        return False
    if xi.n == lam.n:
        return xi == lam
    if xi.n == 0:
        return False

    N = lam.N
    targets = _members(xi)
    want = [_member_size(t, N) for t in targets]
    counts = Counter(_members(lam))
    values = list(counts)
    sizes = [_member_size(v, N) for v in values]
    if sum(want) != sum(s * counts[v] for v, s in zip(values, sizes)):
        return False
    # a full block may still grow while zero-size members remain
    zero_after = [any(s == 0 for s in sizes[i:]) for i in range(len(values) + 1)]
    seen: set = set()

    def search(i: int, blocks: tuple[tuple, ...], filled: tuple[int, ...]) -> bool:
        if i == len(values):
            return all(blocks) and all(
                filled[j] == want[j] and _hom_nonzero(targets[j], blocks[j], N) for j in range(xi.n)
            )
        state = (i, tuple(sorted(zip(targets, blocks))))
        if state in seen:
            return False
        seen.add(state)
        value, size = values[i], sizes[i]
        free = [(w - f) // size if size else counts[value] for w, f in zip(want, filled)]
        tied = [j > 0 and targets[j] == targets[j - 1] and blocks[j] == blocks[j - 1] for j in range(xi.n)]
        for split in _splits(counts[value], free, tied):
            new_blocks = tuple(b + (value,) * c for b, c in zip(blocks, split))
            new_filled = tuple(f + c * size for f, c in zip(filled, split))
            if not zero_after[i + 1] and any(
                c and new_filled[j] == want[j] and not _hom_nonzero(targets[j], new_blocks[j], N)
                for j, c in enumerate(split)
            ):
                continue
            if search(i + 1, new_blocks, new_filled):
                return True
        return False

    return search(0, ((),) * xi.n, (0,) * xi.n)


def unreachable_pairs(
    N: int, d: int, family: str, max_cells: int | None = None
) -> list[tuple[StratumLabel, StratumLabel]]:
    """Pairs Xi <= Lambda of d-nontrivial labels not joined by a chain of simple degenerations."""
    dag = build_poset(N, d, family, max_cells=max_cells)
    graph = dag.to_networkx()
    labels = dag.labels()
    missing = []
    for i, lam in enumerate(labels):
        reached = nx.descendants(graph, i) | {i}
        for j, xi in enumerate(labels):
            if j not in reached and order_leq(xi, lam):
                logger.warning("%s <= %s holds but no chain of simple degenerations joins them", xi, lam)
                missing.append((xi, lam))
    return missing
