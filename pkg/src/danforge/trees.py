"""Rooted bounded-arity trees over weighted items.

Two constructions feed the network builders: an optimal d-ary prefix-code
tree (Huffman merge) whose leaves carry the items, and a complete balanced
tree over an item list.  Leaf promotion converts a code tree into a tree
whose positions all carry items, never increasing any item's depth.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .demand import Distribution
from .errors import BadArity, ItemNotInTree


@dataclass(frozen=True)
class RootedTree:
    """Tree positions with parent links; positions may carry item ids.

    `items[pos]` is the original node id sitting at `pos`, or None for a
    structural position (code-tree internals).  Item ids are unique.
    `mass[pos]` carries the item's probability when the tree was built
    from a distribution, and is what leaf promotion ranks by.
    """

    arity: int
    parents: tuple[int, ...]
    items: tuple[int | None, ...]
    mass: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.arity < 2:
            raise BadArity(f"arity must be >= 2, got {self.arity}")
        roots = [i for i, p in enumerate(self.parents) if p < 0]
        if len(roots) != 1:
            raise ValueError(f"expected exactly one root, found {len(roots)}")
        counts = [0] * len(self.parents)
        for pos, par in enumerate(self.parents):
            if par >= 0:
                counts[par] += 1
        if any(c > self.arity for c in counts):
            raise ValueError("a position exceeds the arity bound")
        carried = [it for it in self.items if it is not None]
        if len(carried) != len(set(carried)):
            raise ValueError("duplicate item in tree")

    @property
    def size(self) -> int:
        return len(self.parents)

    @cached_property
    def root(self) -> int:
        return next(i for i, p in enumerate(self.parents) if p < 0)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in self.parents]
        for pos, par in enumerate(self.parents):
            if par >= 0:
                kids[par].append(pos)
        return tuple(tuple(k) for k in kids)

    @cached_property
    def depths(self) -> tuple[int, ...]:
        depth = [0] * self.size
        order = deque([self.root])
        while order:
            pos = order.popleft()
            for c in self.children[pos]:
                depth[c] = depth[pos] + 1
                order.append(c)
        return tuple(depth)

    @cached_property
    def position_of(self) -> dict[int, int]:
        return {it: pos for pos, it in enumerate(self.items) if it is not None}

    @property
    def height(self) -> int:
        return max(self.depths)

    def item_depths(self) -> dict[int, int]:
        """Item id -> depth below the root."""
        return {it: self.depths[pos] for it, pos in self.position_of.items()}

    def item_edges(self, hub: int | None = None) -> list[tuple[int, int]]:
        """Tree edges translated to item ids, for assembling host networks.

        Positions without items must not occur (promote first).  When
        `hub` is given, an extra edge attaches it to the root's item.
        """
        if any(it is None for it in self.items):
            raise ValueError("tree has structural positions; promote leaves first")
        edges = []
        for pos, par in enumerate(self.parents):
            if par >= 0:
                edges.append((self.items[par], self.items[pos]))
        if hub is not None:
            edges.append((hub, self.items[self.root]))
        return edges

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "parents": list(self.parents),
            "items": list(self.items),
        }


def huffman_dary(dist: Distribution, arity: int) -> RootedTree:
    """Optimal d-ary prefix-code tree over the positive support of `dist`.

    Zero-probability dummy symbols pad the support so every merge takes
    exactly `arity` subtrees; dummies are stripped from the result.  Merges
    take the smallest subtrees by (weight, lowest item id) so the outcome
    is deterministic.  A single-item support yields a depth-0 tree.
    """
    if arity < 2:
        raise BadArity(f"arity must be >= 2, got {arity}")
    support = dist.items()
    if not support:
        raise ValueError("distribution has empty support")
    if len(support) == 1:
        item, p = support[0]
        return RootedTree(arity, (-1,), (item,), (p,))

    parents: list[int] = []
    items: list[int | None] = []
    mass: list[float] = []

    def new_pos(item: int | None, p: float) -> int:
        parents.append(-1)
        items.append(item)
        mass.append(p)
        return len(parents) - 1

    # heap entries: (weight, lowest item id in subtree, position)
    heap = []
    for item, p in support:
        heap.append((p, item, new_pos(item, p)))
    pad = (-(len(support) - 1)) % (arity - 1)
    sentinel = max(it for it, _ in support) + 1
    for j in range(pad):
        heap.append((0.0, sentinel + j, new_pos(None, 0.0)))
    heapq.heapify(heap)

    while len(heap) > 1:
        merged = [heapq.heappop(heap) for _ in range(arity)]
        w = math.fsum(entry[0] for entry in merged)
        tag = min(entry[1] for entry in merged)
        pos = new_pos(None, w)
        for _, _, child in merged:
            parents[child] = pos
        heapq.heappush(heap, (w, tag, pos))

    # strip dummy leaves (padding), keep positions compact
    keep = [
        pos
        for pos in range(len(parents))
        if items[pos] is not None or _has_children(parents, pos)
    ]
    remap = {old: new for new, old in enumerate(keep)}
    return RootedTree(
        arity,
        tuple(remap[parents[old]] if parents[old] >= 0 else -1 for old in keep),
        tuple(items[old] for old in keep),
        tuple(mass[old] for old in keep),
    )


def _has_children(parents: list[int], pos: int) -> bool:
    return any(p == pos for p in parents)


def promote_leaves(code_tree: RootedTree) -> RootedTree:
    """Pull items up into the structural positions of a code tree.

    Scanning structural positions by depth (deepest first), each receives
    the heaviest not-yet-promoted item from its subtree, ties to the
    lowest item id.  Deepest-first cannot starve: every subtree holds
    more item leaves than structural positions.  Emptied leaves are
    removed; no item's depth ever increases and the arity bound is kept.
    """
    if code_tree.mass is None:
        raise ValueError("code tree carries no item weights")
    if all(it is not None for it in code_tree.items):
        return code_tree

    n_pos = code_tree.size
    # items sitting in each subtree, as (neg weight, item id)
    pending: list[list[tuple[float, int]]] = [[] for _ in range(n_pos)]
    for pos, it in enumerate(code_tree.items):
        if it is not None:
            w = code_tree.mass[pos]
            anc = pos
            while anc >= 0:
                pending[anc].append((-w, it))
                anc = code_tree.parents[anc]

    order = sorted(range(n_pos), key=lambda pos: (-code_tree.depths[pos], pos))
    assigned: dict[int, int] = {}  # position -> item
    taken: set[int] = set()
    for pos in order:
        if code_tree.items[pos] is not None:
            continue
        for _, it in sorted(pending[pos]):
            if it not in taken:
                assigned[pos] = it
                taken.add(it)
                break
        else:
            raise RuntimeError(f"no item left for structural position {pos}")
    for pos, it in enumerate(code_tree.items):
        if it is not None and it not in taken:
            assigned[pos] = it
            taken.add(it)

    keep = sorted(assigned)
    remap = {old: new for new, old in enumerate(keep)}
    parents = []
    for old in keep:
        par = code_tree.parents[old]
        while par >= 0 and par not in assigned:
            par = code_tree.parents[par]
        parents.append(remap[par] if par >= 0 else -1)
    item_mass = {
        it: code_tree.mass[pos]
        for pos, it in enumerate(code_tree.items)
        if it is not None
    }
    return RootedTree(
        code_tree.arity,
        tuple(parents),
        tuple(assigned[old] for old in keep),
        tuple(item_mass[assigned[old]] for old in keep),
    )


def rooted_epl(dist: Distribution, tree: RootedTree, root_item: int | None = None) -> float:
    """Expected tree distance sum p_i * d(origin, item i).

    The origin is the tree root, or `root_item`'s position when given.
    Every support item of `dist` must be present in the tree.
    """
    pos_of = tree.position_of
    support = dist.items()
    for it, _ in support:
        if it not in pos_of:
            raise ItemNotInTree(f"item {it} not in tree")
    if root_item is None:
        depth = tree.depths
        return math.fsum(p * depth[pos_of[it]] for it, p in support)
    if root_item not in pos_of:
        raise ItemNotInTree(f"root item {root_item} not in tree")
    dist_from = _tree_distances(tree, pos_of[root_item])
    return math.fsum(p * dist_from[pos_of[it]] for it, p in support)


def _tree_distances(tree: RootedTree, origin: int) -> list[int]:
    adj: list[list[int]] = [[] for _ in range(tree.size)]
    for pos, par in enumerate(tree.parents):
        if par >= 0:
            adj[pos].append(par)
            adj[par].append(pos)
    dist = [-1] * tree.size
    dist[origin] = 0
    q = deque([origin])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def balanced_tree(items: list[int], arity: int) -> RootedTree:
    """Complete d-ary tree over `items` in order, levels filled left to right.

    Height is at most ceil(log_arity(len(items) + 1)).
    """
    if arity < 2:
        raise BadArity(f"arity must be >= 2, got {arity}")
    if not items:
        raise ValueError("no items")
    parents = tuple(-1 if i == 0 else (i - 1) // arity for i in range(len(items)))
    return RootedTree(arity, parents, tuple(items))
