"""Level-1 trees of uniform cofinalities.

A level-1 tree is a finite set of nonempty finite sequences of naturals,
closed under predecessors and under lowering the last entry.  Its ordinal
representation puts an omega-block below each node, ordered by
Brouwer-Kleene; descriptions are the nodes plus the constant description
(the empty sequence), which is the top.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import bk
from .errors import (CardinalityMismatch, ClosureViolation, ContainsEmpty,
                     InvalidTower, LengthMismatch, NotADescription, NotInRep,
                     NotRegular, NotSubtree)
from .ordinals import ONE, OMEGA, ZERO, CtblOrd, UOrd

Node = tuple  # tuple of naturals

EMPTY_DESC: Node = ()  # the constant description


@dataclass(frozen=True)
class Level1Tree:
    nodes: frozenset

    def __contains__(self, node: Node) -> bool:
        return node in self.nodes

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(sorted(self.nodes))

    def bk_sorted(self):
        return bk.bk_sorted(self.nodes)

    def is_subtree_of(self, other: "Level1Tree") -> bool:
        return self.nodes <= other.nodes

    def __str__(self) -> str:
        from .grammar import format_l1
        return format_l1(self)

    def __repr__(self) -> str:
        return f"Level1Tree<{self}>"


EMPTY_TREE = Level1Tree(frozenset())


def validate_level1(nodes) -> Level1Tree:
    """Check both tree clauses; raises naming the first violating node."""
    nodeset = frozenset(tuple(n) for n in nodes)
    if () in nodeset:
        raise ContainsEmpty()
    for node in sorted(nodeset):
        if len(node) > 1 and node[:-1] not in nodeset:
            raise ClosureViolation(node, node[:-1])
        for j in range(node[-1]):
            if node[:-1] + (j,) not in nodeset:
                raise ClosureViolation(node, node[:-1] + (j,))
    return Level1Tree(nodeset)


def is_level1(nodes) -> bool:
    try:
        validate_level1(nodes)
        return True
    except (ContainsEmpty, ClosureViolation):
        return False


def is_regular(tree: Level1Tree) -> bool:
    return (1,) not in tree.nodes


def addable_nodes(tree: Level1Tree):
    """The canonical gap realizers: one addable child per node (and the root).

    p++(j) is addable iff j = 0 or p++(j-1) is present; exactly one such j is
    new per parent, and inserting it makes the new node the immediate
    Brouwer-Kleene predecessor of its parent.
    """
    out = []
    for parent in [EMPTY_DESC] + sorted(tree.nodes):
        j = 0
        while parent + (j,) in tree.nodes:
            j += 1
        out.append(parent + (j,))
    return sorted(out)


def insert_node(tree: Level1Tree, node: Node) -> Level1Tree:
    return validate_level1(set(tree.nodes) | {node})


def enumerate_level1(size: int, regular_only: bool = False):
    """All level-1 trees with exactly ``size`` nodes, deterministically."""
    layer = {frozenset()}
    for _ in range(size):
        nxt = set()
        for nodes in layer:
            tree = Level1Tree(nodes)
            for a in addable_nodes(tree):
                if regular_only and a == (1,):
                    continue
                nxt.add(nodes | {a})
        layer = nxt
    return sorted((Level1Tree(n) for n in layer), key=lambda t: sorted(t.nodes))


def enumerate_level1_up_to(max_size: int, regular_only: bool = False):
    out = []
    for size in range(max_size + 1):
        out.extend(enumerate_level1(size, regular_only))
    return out


# -- ordinal representation --------------------------------------------------

@dataclass(frozen=True)
class Rep1Element:
    """(p) or (p, n) for p in P; (p) is the sup of its omega-block."""

    node: Node
    index: int = None  # None for the block sup (p)

    def as_seq(self):
        return (self.node,) if self.index is None else (self.node, self.index)

    def __str__(self) -> str:
        from .grammar import format_node
        inner = format_node(self.node)
        if self.index is not None:
            inner += f", {self.index}"
        return f"[{inner}]"


def rep_compare(tree: Level1Tree, x: Rep1Element, y: Rep1Element) -> int:
    for e in (x, y):
        if e.node not in tree.nodes:
            raise NotInRep(e)
        if e.index is not None and e.index < 0:
            raise NotInRep(e)
    return bk.bk(x.as_seq(), y.as_seq())


def rep_order_type(tree: Level1Tree) -> CtblOrd:
    """Order type of the representation: omega * card + 1 on nonempty trees."""
    if not tree.nodes:
        return ZERO
    return OMEGA * CtblOrd.natural(len(tree.nodes)) + ONE


# -- descriptions, seeds, factoring ------------------------------------------

def descriptions(tree: Level1Tree):
    """desc(P) = P plus the constant description, in increasing order."""
    return bk.bk_sorted(tree.nodes) + [EMPTY_DESC]


def desc_rank(tree: Level1Tree, d: Node) -> int:
    try:
        return descriptions(tree).index(tuple(d))
    except ValueError:
        raise NotADescription(d, tree)


def seed(tree: Level1Tree, d: Node) -> UOrd:
    """seed of a description: u_{rank+1}; the constant gives u_{card+1}."""
    return UOrd.u(desc_rank(tree, d) + 1)


@dataclass(frozen=True)
class FactorMap1:
    """Order preserving map of descriptions fixing the constant."""

    source: Level1Tree
    target: Level1Tree
    mapping: tuple  # ((p, sigma(p)), ...) over source nodes, bk-sorted

    def __call__(self, d: Node) -> Node:
        if d == EMPTY_DESC:
            return EMPTY_DESC
        for p, w in self.mapping:
            if p == d:
                return w
        raise NotADescription(d, self.source)

    def image(self):
        return [w for _, w in self.mapping]

    def __str__(self) -> str:
        from .grammar import format_node
        body = ", ".join(f"{format_node(p)}->{format_node(w)}" for p, w in self.mapping)
        return "{" + body + "}"


def make_factor_map(source: Level1Tree, target: Level1Tree, assignment) -> FactorMap1:
    pairs = [(p, tuple(assignment[p])) for p in bk.bk_sorted(source.nodes)]
    fm = FactorMap1(source, target, tuple(pairs))
    check_factor_map(fm)
    return fm


def check_factor_map(fm: FactorMap1) -> None:
    from .errors import NotAFactoring

    img = fm.image()
    for w in img:
        if w not in fm.target.nodes:
            raise NotAFactoring(fm)
    for a, b in zip(img, img[1:]):
        if bk.bk(a, b) >= 0:
            raise NotAFactoring(fm)


def factorings(source: Level1Tree, target: Level1Tree):
    """All maps factoring the pair, lexicographic in their images."""
    src = bk.bk_sorted(source.nodes)
    tgt = bk.bk_sorted(target.nodes)
    out = []
    for combo in itertools.combinations(tgt, len(src)):
        out.append(FactorMap1(source, target, tuple(zip(src, combo))))
    return out


def factor_exists(source: Level1Tree, target: Level1Tree) -> bool:
    return len(factorings(source, target)) > 0


def strict_factor_exists(source: Level1Tree, target: Level1Tree) -> bool:
    """Some factoring map plus a node of the target above its whole image."""
    tgt = bk.bk_sorted(target.nodes)
    for fm in factorings(source, target):
        img = fm.image()
        for w in tgt:
            if all(bk.bk(v, w) < 0 for v in img):
                return True
    return False


# -- towers and S1 ------------------------------------------------------------

@dataclass(frozen=True)
class Level1Tower:
    """(P_i)_{i<=n} with card(P_i) = i and inclusions."""

    trees: tuple
    regular_flags: tuple = field(default=())

    def __len__(self):
        return len(self.trees)


def validate_tower(trees) -> Level1Tower:
    trees = tuple(trees)
    for i, t in enumerate(trees):
        if len(t) != i:
            raise CardinalityMismatch(i)
    for i, j in zip(range(len(trees)), range(1, len(trees))):
        if not trees[i].is_subtree_of(trees[j]):
            raise NotSubtree(i, j)
    return Level1Tower(trees, tuple(is_regular(t) for t in trees))


def new_node(prev: Level1Tree, cur: Level1Tree) -> Node:
    diff = cur.nodes - prev.nodes
    if len(diff) != 1:
        raise NotSubtree(prev, cur)
    return next(iter(diff))


def respects_level1(tree: Level1Tree, alpha) -> bool:
    """Every value a countable limit, and node order mirrored by value order."""
    order = bk.bk_sorted(tree.nodes)
    vals = []
    for p in order:
        if p not in alpha:
            return False
        v = alpha[p]
        if isinstance(v, UOrd):
            if not v.is_countable():
                return False
            v = v.tail
        if not v.is_limit():
            return False
        vals.append(v)
    return all(a < b for a, b in zip(vals, vals[1:]))


def s1_member(trees, alphas) -> bool:
    """Membership of ((P_i), (alpha_i)) in the tree S_1.

    Trees are given from cardinality 1 on (the empty stage is implicit);
    each new node receives the ordinal arriving with its tree, and the
    assembled tuple must respect the last tree.  All stages must be regular.
    """
    trees = tuple(trees)
    alphas = tuple(alphas)
    if len(trees) != len(alphas):
        raise LengthMismatch(len(trees), len(alphas))
    if not trees:
        return True
    prev = EMPTY_TREE
    beta = {}
    for i, (t, a) in enumerate(zip(trees, alphas)):
        if not is_regular(t):
            raise NotRegular(i)
        if len(t) != i + 1 or not prev.is_subtree_of(t):
            raise InvalidTower(i)
        beta[new_node(prev, t)] = a
        prev = t
    return respects_level1(trees[-1], beta)
