"""Admissible rooted trees and the Groebner normal-monomial oracles.

A rooted tree with leaves labelled by the vertices of a connected graph G is
admissible when the leaf set of every subtree is a tube of G; it is stable
when every internal vertex has at least two children.  Stable trees index the
boundary strata of the wonderful compactification, and the normal monomials
of the quadratic Groebner bases give brute-force dimension counts for the
contractads handled here.

Trees live in the shuffle presentation: children of every internal vertex are
ordered by their minimal leaf with respect to a vertex ordering.  The
quadratic normality conditions depend on that ordering and on which end of
each quadratic relation is declared leading.  Two coherent conventions are
supported: the forbidden inner pair of a 2-subtree pattern is the minimal
cell joined with its minimal neighbour ("min", the default for explicit
orderings) or with its maximal neighbour ("max").  Neither convention
realises a basis for every (graph, ordering) pair, but normal monomials
always span (rewriting by the relations), so any count is an overcount.
When no explicit ordering is passed, the counting operations evaluate a
deterministic ensemble of search orders under both conventions and keep the
smallest count, which is labelling-invariant and attains the true dimension
on every connected graph with at most 6 vertices.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .graphs import (
    DEFAULT_CAPS,
    EnumerationCaps,
    Graph,
    _mask_to_set,
    _partition_masks,
    canonical_graph,
    connected_subset_masks,
    count_acyclic_orientations,
)
from .graphic_functions import gerst_total_dim


class AdmissibleTree:
    """Rooted tree with leaf labels.  Children are stored sorted by minimal
    leaf label; rank-dependent orderings are recomputed by the normality
    checks."""

    __slots__ = ("children", "leaf", "leaves", "min_leaf")

    def __init__(self, leaf: int | None = None, children: Sequence["AdmissibleTree"] = ()):
        if leaf is not None:
            self.leaf = leaf
            self.children = ()
            self.leaves = frozenset([leaf])
            self.min_leaf = leaf
        else:
            kids = sorted(children, key=lambda t: t.min_leaf)
            self.leaf = None
            self.children = tuple(kids)
            self.leaves = frozenset().union(*(t.leaves for t in kids))
            self.min_leaf = kids[0].min_leaf

    def is_leaf(self) -> bool:
        return self.leaf is not None

    def internal_count(self) -> int:
        if self.is_leaf():
            return 0
        return 1 + sum(t.internal_count() for t in self.children)

    def internal_nodes(self) -> Iterator["AdmissibleTree"]:
        if not self.is_leaf():
            yield self
            for t in self.children:
                yield from t.internal_nodes()

    def arity(self) -> int:
        return len(self.children)

    def __repr__(self):
        if self.is_leaf():
            return str(self.leaf)
        return "(" + ",".join(repr(t) for t in self.children) + ")"


def _check_cap(g: Graph, caps: EnumerationCaps):
    if g.n > caps.tree_max_vertices:
        raise ValueError(
            f"tree enumeration is capped at {caps.tree_max_vertices} vertices (got {g.n})"
        )


def _rank_array(g: Graph, order: Sequence[int]) -> list[int]:
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must list every vertex exactly once")
    rank = [0] * g.n
    for r, v in enumerate(order):
        rank[v] = r
    return rank


# -- search orders -------------------------------------------------------------


def _bfs_order(g: Graph, start: int, reverse: bool) -> list[int]:
    seen = [start]
    found = {start}
    i = 0
    while len(seen) < g.n:
        v = seen[i]
        i += 1
        for w in sorted(g.adj[v], reverse=reverse):
            if w not in found:
                found.add(w)
                seen.append(w)
    return seen

def _dfs_order(g: Graph, start: int, reverse: bool) -> list[int]:
    seen: list[int] = []
    found: set[int] = set()
    stack = [start]
    while stack:
        v = stack.pop()
        if v in found:
            continue
        found.add(v)
        seen.append(v)
        for w in sorted(g.adj[v], reverse=not reverse):
            if w not in found:
                stack.append(w)
    return seen


def search_orders(g: Graph) -> list[list[int]]:
    """Deterministic ensemble of vertex orderings: the identity plus breadth-
    and depth-first orders from every start vertex, both neighbour
    directions."""
    seen = {tuple(range(g.n))}
    for v in range(g.n):
        for reverse in (False, True):
            seen.add(tuple(_bfs_order(g, v, reverse)))
            seen.add(tuple(_dfs_order(g, v, reverse)))
    return [list(o) for o in sorted(seen)]


# -- enumeration ------------------------------------------------------------------


def _stable_trees(g: Graph, mask: int) -> Iterator[AdmissibleTree]:
    verts = _mask_to_set(mask)
    if len(verts) == 1:
        yield AdmissibleTree(leaf=next(iter(verts)))
        return
    for blocks in _partition_masks(g, mask, False):
        if len(blocks) == 1:
            continue  # the root needs at least two children
        options = [list(_stable_trees(g, b)) for b in blocks]
        yield from _graft(options, 0, [])


def _graft(options, i, acc) -> Iterator[AdmissibleTree]:
    if i == len(options):
        yield AdmissibleTree(children=list(acc))
        return
    for sub in options[i]:
        acc.append(sub)
        yield from _graft(options, i + 1, acc)
        acc.pop()


def _binary_trees(g: Graph, mask: int) -> Iterator[AdmissibleTree]:
    verts = _mask_to_set(mask)
    if len(verts) == 1:
        yield AdmissibleTree(leaf=next(iter(verts)))
        return
    v = (mask & -mask).bit_length() - 1
    for left in connected_subset_masks(g, mask, v):
        right = mask & ~left
        if right == 0 or not g.subset_connected(right):
            continue
        for lt in _binary_trees(g, left):
            for rt in _binary_trees(g, right):
                yield AdmissibleTree(children=[lt, rt])


_tree_cache: dict[tuple, list[AdmissibleTree]] = {}


def _cached_trees(g: Graph, binary: bool, caps: EnumerationCaps) -> list[AdmissibleTree]:
    _check_cap(g, caps)
    key = (g.n, g.edges, binary)
    trees = _tree_cache.get(key)
    if trees is None:
        gen = _binary_trees(g, g.full_mask()) if binary else _stable_trees(g, g.full_mask())
        trees = list(gen)
        _tree_cache[key] = trees
    return trees


def enumerate_admissible_trees(
    g: Graph, stable_only: bool = True, caps: EnumerationCaps = DEFAULT_CAPS
) -> list[AdmissibleTree]:
    """All stable admissible trees, by choosing the root partition and
    recursing into the blocks.

    Dropping stability would admit chains of single-child vertices and make
    the set infinite, so only the stable enumeration exists.
    """
    if not stable_only:
        raise ValueError(
            "non-stable admissible trees form an infinite set (unary chains); "
            "only the stable enumeration is supported"
        )
    return list(_cached_trees(g, binary=False, caps=caps))


def enumerate_binary_trees(g: Graph, caps: EnumerationCaps = DEFAULT_CAPS) -> list[AdmissibleTree]:
    return list(_cached_trees(g, binary=True, caps=caps))


def stable_tree_count(g: Graph, caps: EnumerationCaps = DEFAULT_CAPS) -> int:
    return len(_cached_trees(g, binary=False, caps=caps))


# -- normality checks -----------------------------------------------------------------


def _is_tube(g: Graph, vertices: frozenset[int]) -> bool:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return g.subset_connected(mask)


def _min_rank(cell: AdmissibleTree, rank: list[int]) -> int:
    return min(rank[v] for v in cell.leaves)


def _sorted_children(node: AdmissibleTree, rank: list[int]) -> list[AdmissibleTree]:
    return sorted(node.children, key=lambda t: _min_rank(t, rank))


def _lie_tree_normal(g: Graph, tree: AdmissibleTree, rank: list[int], maxnbr: bool = False) -> bool:
    """Normality for the binary bracket: in every sub-pattern
    b(b(L1, L2), L3) of the shuffle presentation, L1 u L3 must be a tube and
    min L2 > min L3 (the "min" convention; the "max" convention reverses the
    inequality).  Equivalently, the inner pair must avoid the edge joining
    the minimal cell of the contracted pattern graph to its minimal
    (resp. maximal) neighbour."""
    for node in tree.internal_nodes():
        first, second = _sorted_children(node, rank)
        if first.is_leaf():
            continue
        l1, l2 = _sorted_children(first, rank)
        if not _is_tube(g, l1.leaves | second.leaves):
            return False
        if maxnbr:
            if _min_rank(second, rank) <= _min_rank(l2, rank):
                return False
        elif _min_rank(l2, rank) <= _min_rank(second, rank):
            return False
    return True


def _hyper_tree_normal(g: Graph, tree: AdmissibleTree, rank: list[int], maxnbr: bool = False) -> bool:
    """Monomial-basis condition: for every 2-subtree whose top vertex w is a
    binary internal child of v with child subtrees tau1, tau2 and siblings
    tau_i (i >= 3):

      (i)  min L(tau_i) > min L(tau_1) for i > 1, i.e. w is the first child;
      (ii) if L(tau_i) u L(tau_1) is a tube then min L(tau_i) > min L(tau_2)
           ("min" convention; "max" reverses the inequality in (ii)).
    """
    for v in tree.internal_nodes():
        for w in v.children:
            if w.is_leaf() or w.arity() != 2:
                continue
            tau1, tau2 = _sorted_children(w, rank)
            r1 = _min_rank(tau1, rank)
            r2 = _min_rank(tau2, rank)
            for sibling in v.children:
                if sibling is w:
                    continue
                rs = _min_rank(sibling, rank)
                if rs < r1:
                    return False
                bad = rs > r2 if maxnbr else rs < r2
                if bad and _is_tube(g, sibling.leaves | tau1.leaves):
                    return False
    return True


def _grav_tree_normal(g: Graph, tree: AdmissibleTree, rank: list[int], maxnbr: bool = False) -> bool:
    """Gravity normality: all non-root internal vertices binary, and every
    binary 2-subtree avoids the distinguished edge of its contracted pattern
    graph (minimal cell joined to its minimal or maximal neighbour, by
    convention)."""
    for v in tree.internal_nodes():
        for w in v.children:
            if w.is_leaf():
                continue
            if w.arity() != 2:
                return False
            tau1, tau2 = _sorted_children(w, rank)
            cells = [tau1, tau2] + [s for s in v.children if s is not w]
            cells.sort(key=lambda t: _min_rank(t, rank))
            a = cells[0]
            neighbour_ranks = [
                _min_rank(c, rank) for c in cells[1:] if _is_tube(g, c.leaves | a.leaves)
            ]
            if not neighbour_ranks:
                raise AssertionError("contracted pattern graph must be connected")
            chosen = max(neighbour_ranks) if maxnbr else min(neighbour_ranks)
            pair = {_min_rank(a, rank), chosen}
            if pair == {_min_rank(tau1, rank), _min_rank(tau2, rank)}:
                return False
    return True


# -- counting oracles ---------------------------------------------------------------


def _graded_counts(g, trees, rank, normal, maxnbr) -> list[int]:
    counts = [0] * g.n
    for tree in trees:
        if normal(g, tree, rank, maxnbr):
            counts[tree.internal_count()] += 1
    return counts


def _best_counts(g, trees, order, normal) -> list[int]:
    """Smallest graded count over the search-order ensemble and both leading
    conventions; each candidate is a spanning set, so the minimum is the
    tightest combinatorial upper bound for the dimensions."""
    if order is not None:
        return _graded_counts(g, trees, _rank_array(g, order), normal, False)
    best = None
    for candidate in search_orders(g):
        rank = _rank_array(g, candidate)
        for maxnbr in (False, True):
            counts = _graded_counts(g, trees, rank, normal, maxnbr)
            if best is None or sum(counts) < sum(best):
                best = counts
    return best


def gclie_normal_count(
    g: Graph, order: Sequence[int] | None = None, caps: EnumerationCaps = DEFAULT_CAPS
) -> int:
    """Number of normal binary monomials; equals |mu(G)| whenever the
    quadratic rewriting terminates in a basis (checked downstream).

    With no explicit order the count is evaluated on the canonical
    representative over the search-order ensemble, making it independent of
    the input labelling."""
    if order is not None:
        trees = _cached_trees(g, binary=True, caps=caps)
        return sum(_graded_counts(g, trees, _rank_array(g, order), _lie_tree_normal, False))
    g = canonical_graph(g, caps)
    trees = _cached_trees(g, binary=True, caps=caps)
    return sum(_best_counts(g, trees, None, _lie_tree_normal))


def gchyper_normal_counts(
    g: Graph, order: Sequence[int] | None = None, caps: EnumerationCaps = DEFAULT_CAPS
) -> list[int]:
    """Counts of normal stable trees graded by the number of internal
    vertices r = 0 .. n-1; entry r matches the q^r coefficient of the
    weight-graded hypercommutative Hilbert series.  Only the one-vertex
    graph has a weight-0 monomial (the bare leaf, i.e. the unit)."""
    if order is None:
        g = canonical_graph(g, caps)
    trees = _cached_trees(g, binary=False, caps=caps)
    return _best_counts(g, trees, order, _hyper_tree_normal)


def gcgrav_normal_counts(
    g: Graph, order: Sequence[int] | None = None, caps: EnumerationCaps = DEFAULT_CAPS
) -> list[int]:
    """Counts of normal gravity monomials graded by internal vertices.

    For graphs with at least two vertices, twice the total count must equal
    the total little-disks dimension (the defining check, asserted here).
    """
    if order is None:
        g = canonical_graph(g, caps)
    trees = _cached_trees(g, binary=False, caps=caps)
    counts = _best_counts(g, trees, order, _grav_tree_normal)
    if g.n >= 2:
        total = sum(counts)
        expected = gerst_total_dim(g)
        if 2 * total != expected:
            raise AssertionError(
                f"gravity normal count {total} does not satisfy 2*count = {expected} on {g!r}"
            )
    return counts


def gccom_normal(g: Graph, order: Sequence[int] | None = None, caps: EnumerationCaps = DEFAULT_CAPS) -> AdmissibleTree:
    """The unique normal monomial of the one-dimensional contractad: the left
    comb that at each step merges the grown tube with its minimal unvisited
    neighbour.  Existence needs connectivity; uniqueness is by construction
    and the result is asserted admissible."""
    _check_cap(g, caps)
    if not g.is_connected():
        raise ValueError("normal monomial needs a connected graph")
    rank = list(range(g.n)) if order is None else _rank_array(g, order)
    verts = sorted(range(g.n), key=lambda v: rank[v])
    grown = {verts[0]}
    tree = AdmissibleTree(leaf=verts[0])
    while len(grown) < g.n:
        neighbours = set()
        for v in grown:
            neighbours.update(g.adj[v])
        neighbours -= grown
        if not neighbours:
            raise AssertionError("connected graph ran out of neighbours")
        nxt = min(neighbours, key=lambda v: rank[v])
        tree = AdmissibleTree(children=[tree, AdmissibleTree(leaf=nxt)])
        grown.add(nxt)
        if not _is_tube(g, frozenset(grown)):
            raise AssertionError("comb construction left the tube lattice")
    return tree


def gcass_dimension(g: Graph, caps: EnumerationCaps = DEFAULT_CAPS) -> int:
    """Dimension of the associative contractad component: vertex orderings up
    to swapping adjacent non-adjacent vertices.  Computed by orbit counting
    and cross-checked against the acyclic-orientation count."""
    _check_cap(g, caps)
    from itertools import permutations

    seen: set[tuple[int, ...]] = set()
    classes = 0
    for perm in permutations(range(g.n)):
        if perm in seen:
            continue
        classes += 1
        stack = [perm]
        seen.add(perm)
        while stack:
            cur = stack.pop()
            for i in range(g.n - 1):
                if not g.has_edge(cur[i], cur[i + 1]):
                    nxt = cur[:i] + (cur[i + 1], cur[i]) + cur[i + 2 :]
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
    orientations = count_acyclic_orientations(g)
    if classes != orientations:
        raise AssertionError(
            f"ordering classes {classes} disagree with acyclic orientations {orientations}"
        )
    return classes


def nested_set_count(g: Graph) -> int:
    """Number of nested sets of proper non-trivial tubes (pairwise comparable
    or disjoint), the empty set included.  Independent cross-check for the
    stable tree count; exponential in the number of tubes, so only usable on
    small or sparse graphs."""
    from .graphs import enumerate_tubes

    full = frozenset(range(g.n))
    tubes = [t for t in enumerate_tubes(g) if len(t) >= 2 and t != full]
    if len(tubes) > 20:
        raise ValueError("too many tubes for the brute-force nested-set count")
    compatible = [[t1 <= t2 or t2 <= t1 or not (t1 & t2) for t2 in tubes] for t1 in tubes]
    count = 0

    def rec(i: int, chosen: list[int]):
        nonlocal count
        if i == len(tubes):
            count += 1
            return
        rec(i + 1, chosen)
        if all(compatible[i][j] for j in chosen):
            chosen.append(i)
            rec(i + 1, chosen)
            chosen.pop()

    rec(0, [])
    return count
