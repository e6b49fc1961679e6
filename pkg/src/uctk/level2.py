"""Level-2 machinery: partial level <=1 trees and towers, level-2 and
level <=2 trees, Q-descriptions, the ordinal representation rep(Q) with its
Brouwer-Kleene order, respect and weak respect of ordinal tuples,
description evaluation, recovery of the unique representing tree, and S_2
membership.

Domain elements of a level-2 tree are finite sequences of nodes; -1 is the
distinguished element sitting below every node.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bk
from .analysis import analyze, tree_embed, tree_embed_sup
from .errors import (BadDescription, BadFirstEntry, CardinalityMismatch,
                     DegreeZeroHasNoCompletion, DomainNotTree, InvalidElement,
                     InvalidTower, KernelError, LengthMismatch, MissingEntry,
                     MultipleTreesFound, NoTreeFound, NotCompletionAt,
                     NotRespecting, RootNotCanonical, TowerViolation)
from .level1 import (EMPTY_TREE, Level1Tree, Node, addable_nodes, is_level1,
                     is_regular, respects_level1, validate_level1)
from .ordinals import OMEGA, U1, CtblOrd, UOrd

MINUS_ONE = -1
ROOT_NODE: Node = (0,)
DomSeq = tuple  # tuple of nodes (each a tuple of naturals)


# -- partial level <= 1 trees and towers --------------------------------------

@dataclass(frozen=True)
class PartialLevel1Tree:
    """A regular tree with one pending node; -1 is the level-0 pending."""

    base: Level1Tree
    node: object  # Node or -1

    def degree(self) -> int:
        return 0 if self.node == MINUS_ONE else 1

    def completion(self) -> Level1Tree:
        if self.node == MINUS_ONE:
            raise DegreeZeroHasNoCompletion(self)
        return validate_level1(set(self.base.nodes) | {self.node})

    def cardinality(self) -> int:
        return len(self.base) + 1

    def __str__(self) -> str:
        from .grammar import format_node
        pend = "-1" if self.node == MINUS_ONE else format_node(self.node)
        return f"({self.base}, {pend})"


def validate_partial_le1(base: Level1Tree, node) -> PartialLevel1Tree:
    from .errors import CaseViolation

    if not is_regular(base):
        raise CaseViolation("base not regular", base)
    if node == MINUS_ONE:
        if not len(base):
            raise CaseViolation("degree 0 needs a nonempty base")
        return PartialLevel1Tree(base, MINUS_ONE)
    node = tuple(node)
    if node in base.nodes:
        raise CaseViolation("pending node already present", node)
    completed = set(base.nodes) | {node}
    if not is_level1(completed) or (1,) in completed:
        raise CaseViolation("completion is not a regular level-1 tree", node)
    return PartialLevel1Tree(base, node)


def respects_partial_le1(pt: PartialLevel1Tree, alpha) -> bool:
    if pt.node == MINUS_ONE:
        if MINUS_ONE not in alpha:
            return False
        v = alpha[MINUS_ONE]
        if isinstance(v, UOrd):
            v = v.tail if v.is_countable() else None
        if isinstance(v, CtblOrd):
            v = v.natural_value() if v.is_natural() else None
        if not isinstance(v, int) or v < 0:
            return False
        return respects_level1(pt.base, alpha)
    return respects_level1(pt.completion(), alpha)


@dataclass(frozen=True)
class PartialTowerLe1:
    entries: tuple            # PartialLevel1Tree stages
    final_tree: object = None  # completion stage of a continuous-type tower

    def is_continuous(self) -> bool:
        return self.final_tree is not None

    def compress(self):
        from .analysis import PotentialTower1
        pvec = tuple(pt.node for pt in self.entries)
        tree = self.final_tree if self.is_continuous() else \
            (self.entries[-1].base if self.entries else EMPTY_TREE)
        return PotentialTower1(tree, pvec)


def validate_partial_tower_le1(entries, final_tree=None) -> PartialTowerLe1:
    """Validate a partial level <=1 tower; the trailing tree, when present,
    must complete the last stage (continuous type)."""
    entries = tuple(entries)
    if final_tree is None and not entries:
        raise BadFirstEntry("empty tower")
    if entries:
        if entries[0].cardinality() != 1:
            raise BadFirstEntry(entries[0])
        for i in range(1, len(entries)):
            if entries[i - 1].degree() == 0 or \
                    entries[i].base != entries[i - 1].completion():
                raise NotCompletionAt(i)
    if final_tree is not None:
        if entries:
            if entries[-1].degree() == 0 or final_tree != entries[-1].completion():
                raise NotCompletionAt(len(entries))
        elif len(final_tree):
            raise BadFirstEntry(final_tree)
    return PartialTowerLe1(entries, final_tree)


def expand_potential(potential) -> PartialTowerLe1:
    """Rebuild the full tower from its compressed (P_*, pvec) form."""
    trees = [EMPTY_TREE]
    stages = []
    for p in potential.pvec:
        stages.append(validate_partial_le1(trees[-1], p))
        if p != MINUS_ONE:
            trees.append(stages[-1].completion())
    if len(potential.tree) == len(potential.pvec):
        if trees[-1] != potential.tree:
            raise NotCompletionAt(len(stages))
        return PartialTowerLe1(tuple(stages), potential.tree)
    if potential.pvec and potential.pvec[-1] != MINUS_ONE:
        expected = stages[-1].base
    else:
        expected = trees[-1]
    if expected != potential.tree:
        raise NotCompletionAt(len(stages))
    return PartialTowerLe1(tuple(stages), None)


# -- level-2 trees -------------------------------------------------------------

@dataclass(frozen=True)
class Level2Tree:
    """Map from a tree of level-1 trees to partial level <=1 trees, forming a
    partial tower of discontinuous type along every branch."""

    entries: tuple  # ((domseq, (Level1Tree, node-or--1)), ...) sorted

    def dom(self):
        return [q for q, _ in self.entries]

    def __contains__(self, q) -> bool:
        return any(q == k for k, _ in self.entries)

    def label(self, q):
        for k, v in self.entries:
            if k == q:
                return v
        raise MissingEntry(q)

    def tree(self, q) -> Level1Tree:
        return self.label(q)[0]

    def node(self, q):
        return self.label(q)[1]

    def cardinality(self) -> int:
        return len(self.entries)

    def children(self, q):
        """The level-1 tree Q{q} of child indices."""
        return Level1Tree(frozenset(k[-1] for k, _ in self.entries
                                    if len(k) == len(q) + 1 and k[:len(q)] == q))

    def partial(self, q) -> PartialLevel1Tree:
        return PartialLevel1Tree(*self.label(q))

    def is_subtree_of(self, other) -> bool:
        return all(q in other and other.label(q) == v for q, v in self.entries)

    def __str__(self) -> str:
        from .grammar import format_l2
        return format_l2(self)

    def __repr__(self) -> str:
        return f"Level2Tree<{self}>"


def _dom_sort_key(q):
    return (len(q), bk.bk_key(q))


def validate_level2(entries) -> Level2Tree:
    items = {tuple(tuple(n) for n in q): (t, (p if p == MINUS_ONE else tuple(p)))
             for q, (t, p) in dict(entries).items()}
    if () not in items:
        raise RootNotCanonical("missing root")
    if items[()] != (EMPTY_TREE, ROOT_NODE):
        raise RootNotCanonical(items[()])
    dom = set(items)
    for q in sorted(dom, key=_dom_sort_key):
        if q and q[:-1] not in dom:
            raise DomainNotTree(q)
    tree = Level2Tree(tuple(sorted(items.items(), key=lambda kv: _dom_sort_key(kv[0]))))
    for q in sorted(dom, key=_dom_sort_key):
        kids = frozenset(k[-1] for k in dom if len(k) == len(q) + 1 and k[:len(q)] == q)
        if not is_level1(kids):
            raise DomainNotTree(q)
    for q in sorted(dom, key=_dom_sort_key):
        t, p = items[q]
        try:
            validate_partial_le1(t, p)
        except KernelError:
            raise TowerViolation(q)
        if q:
            parent = tree.partial(q[:-1])
            if parent.degree() == 0 or parent.completion() != t:
                raise TowerViolation(q)
    return tree


@dataclass(frozen=True)
class LevelLe2Tree:
    t1: Level1Tree
    t2: Level2Tree

    def cardinality(self) -> int:
        return len(self.t1) + self.t2.cardinality()

    def dom(self):
        """Canonical order: level-1 nodes by Brouwer-Kleene, then level-2
        domain sequences by (length, lex)."""
        out = [(1, p) for p in bk.bk_sorted(self.t1.nodes)]
        out += [(2, q) for q in self.t2.dom()]
        return out

    def is_subtree_of(self, other) -> bool:
        return self.t1.is_subtree_of(other.t1) and self.t2.is_subtree_of(other.t2)

    def __str__(self) -> str:
        from .grammar import format_le2
        return format_le2(self)

    def __repr__(self) -> str:
        return f"LevelLe2Tree<{self}>"


CARD1_L2 = validate_level2({(): (EMPTY_TREE, ROOT_NODE)})


def typical_trees():
    """The four typical level <=2 trees Q^0, Q^1, Q^20, Q^21."""
    q0 = LevelLe2Tree(EMPTY_TREE, CARD1_L2)
    q1 = LevelLe2Tree(validate_level1({(0,)}), CARD1_L2)
    root = {(): (EMPTY_TREE, ROOT_NODE)}
    one = validate_level1({(0,)})
    q20 = LevelLe2Tree(EMPTY_TREE, validate_level2({**root, ((0,),): (one, MINUS_ONE)}))
    q21 = LevelLe2Tree(EMPTY_TREE, validate_level2({**root, ((0,),): (one, (0, 0))}))
    return q0, q1, q20, q21


# -- descriptions ---------------------------------------------------------------

@dataclass(frozen=True)
class QDescription:
    """(q, P, pvec); continuous iff q ends in -1, extended iff the tree is
    the completion rather than the tree at q."""

    q: DomSeq
    tree: Level1Tree
    pvec: tuple
    extended: bool = False

    def is_continuous(self) -> bool:
        return bool(self.q) and self.q[-1] == MINUS_ONE

    def __str__(self) -> str:
        from .grammar import format_desc
        return format_desc(self)


CONSTANT_DESC = QDescription((), EMPTY_TREE, (ROOT_NODE,))


def q_potential(t2: Level2Tree, q: DomSeq):
    """Q[q] for q in dom, or Q[q++(-1)] for q of continuous type."""
    from .analysis import PotentialTower1

    if q and q[-1] == MINUS_ONE:
        base = q[:-1]
        pvec = tuple(t2.node(base[:l]) for l in range(len(base) + 1))
        return PotentialTower1(t2.partial(base).completion(), pvec)
    pvec = tuple(t2.node(q[:l]) for l in range(len(q) + 1))
    return PotentialTower1(t2.tree(q), pvec)


def dom_star(t2: Level2Tree):
    out = list(t2.dom())
    for q in t2.dom():
        out.append(q + (MINUS_ONE,))
    return sorted(out, key=_dom_sort_key)


def q_set_plus(t2: Level2Tree, q: DomSeq):
    """Q{q,+}: the predecessor plus the same-tree siblings whose index lies
    Brouwer-Kleene above the last entry of q."""
    out = [q[:-1]]
    for a in t2.children(q[:-1]).nodes:
        if bk.bk(a, q[-1]) > 0:
            out.append(q[:-1] + (a,))
    return out


def q_set_minus(t2: Level2Tree, q: DomSeq):
    """Q{q,-}: the predecessor's -1 extension plus the same-tree siblings
    below the last entry of q."""
    out = [q[:-1] + (MINUS_ONE,)]
    for a in t2.children(q[:-1]).nodes:
        if bk.bk(a, q[-1]) < 0:
            out.append(q[:-1] + (a,))
    return out


def q_descriptions(le2: LevelLe2Tree):
    """All descriptions (d, ...): the level-1 nodes and, on the level-2 side,
    one description per starred domain element that has one."""
    out = [(1, p) for p in bk.bk_sorted(le2.t1.nodes)]
    for q in dom_star(le2.t2):
        if q and q[-1] == MINUS_ONE and le2.t2.node(q[:-1]) == MINUS_ONE:
            continue  # a degree-0 stage has no completion, hence no description
        pot = q_potential(le2.t2, q)
        out.append((2, QDescription(q, pot.tree, pot.pvec)))
    return out


def extended_descriptions(le2: LevelLe2Tree):
    """desc* adds, for each continuous description, its form with the -1
    dropped: same tree and vector over the completion."""
    out = list(q_descriptions(le2))
    for d, desc in list(out):
        if d == 2 and desc.is_continuous():
            out.append((2, QDescription(desc.q[:-1], desc.tree, desc.pvec, extended=True)))
    return out


def is_regular_description(le2: LevelLe2Tree, item) -> bool:
    """Regular: discontinuous members of desc(Q), and the extended forms."""
    d, desc = item
    if d == 1:
        return True
    if desc.extended:
        return True
    return not desc.is_continuous()


# -- ordinal representation -----------------------------------------------------

@dataclass(frozen=True)
class Rep2Element:
    """(1, rep point of the level-1 part) or (2, alpha interleaved with q)."""

    side: int
    payload: tuple  # side 1: Rep1Element sequence; side 2: interleaving

    @staticmethod
    def top():
        return Rep2Element(2, ())

    def __str__(self) -> str:
        from .grammar import format_rep2
        return format_rep2(self)


def make_rep2(le2: LevelLe2Tree, q: DomSeq, alphas) -> Rep2Element:
    """Build and validate the level-2 representation point alpha (+) q.

    ``alphas`` assigns countable ordinals to the nodes of the tree at q (and
    to the pending node, or -1, for the q++(-1) form)."""
    t2 = le2.t2
    if q and q[-1] == MINUS_ONE:
        base = q[:-1]
        if base not in t2:
            raise InvalidElement(q)
        pt = t2.partial(base)
        key = pt.node if pt.node != MINUS_ONE else MINUS_ONE
        if key not in alphas:
            raise InvalidElement(q, "missing pending value")
        if not respects_partial_le1(pt, alphas):
            raise InvalidElement(q)
        seq = []
        for i in range(len(base)):
            seq += [alphas[t2.node(base[:i])], base[i]]
        seq += [alphas[key], MINUS_ONE]
        return Rep2Element(2, tuple(seq))
    if q not in t2:
        raise InvalidElement(q)
    if not respects_level1(t2.tree(q), alphas):
        raise InvalidElement(q)
    seq = []
    for i in range(len(q)):
        seq += [alphas[t2.node(q[:i])], q[i]]
    return Rep2Element(2, tuple(seq))


def rep2_from_payload(le2: LevelLe2Tree, payload) -> Rep2Element:
    """Reconstruct and validate a level-2 representation point from its
    interleaved sequence."""
    t2 = le2.t2
    if len(payload) % 2:
        raise InvalidElement(payload)
    q = tuple(payload[2 * i + 1] for i in range(len(payload) // 2))
    base = q[:-1] if q and q[-1] == MINUS_ONE else q
    if base not in t2:
        raise InvalidElement(payload)
    alphas = {}
    for i in range(len(base)):
        alphas[t2.node(base[:i])] = payload[2 * i]
    if q and q[-1] == MINUS_ONE:
        pend = t2.node(base)
        alphas[pend if pend != MINUS_ONE else MINUS_ONE] = payload[-2]
    elt = make_rep2(le2, q, alphas)
    if elt.payload != tuple(payload):
        raise InvalidElement(payload)
    return elt


def rep2_compare(le2: LevelLe2Tree, x: Rep2Element, y: Rep2Element) -> int:
    """The level-1 part sits below the level-2 part; within a part the order
    is Brouwer-Kleene on the validated sequences."""
    for e in (x, y):
        if e.side == 1:
            if e.payload.node not in le2.t1.nodes:
                raise InvalidElement(e)
        elif e.side == 2:
            rep2_from_payload(le2, e.payload)
        else:
            raise InvalidElement(e)
    if x.side != y.side:
        return -1 if x.side < y.side else 1
    if x.side == 1:
        from .level1 import rep_compare
        return rep_compare(le2.t1, x.payload, y.payload)
    return bk.bk(x.payload, y.payload)


# -- respect ---------------------------------------------------------------------

@dataclass(frozen=True)
class RespectVerdict:
    ok: bool
    clause: str = ""
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _entry(t, key):
    if key not in t:
        raise MissingEntry(key)
    v = t[key]
    return v if isinstance(v, UOrd) else UOrd.from_ctbl(v)


def respects_le2(le2: LevelLe2Tree, t) -> RespectVerdict:
    """The executable respect criterion.

    (1) the level-1 part respects the level-1 tree; (2) each stored level-2
    value has potential tower Q[q] and approximation sequence the branch
    values, the root value being u_1; (3) sibling values follow the
    Brouwer-Kleene order of their indices.
    """
    t1_vals = {p: _entry(t, (1, p)) for p in le2.t1.nodes}
    if not respects_level1(le2.t1, t1_vals):
        return RespectVerdict(False, "level1-part")
    t2 = le2.t2
    branch = {(): _entry(t, (2, ()))}
    if branch[()].compare(U1) != 0:
        return RespectVerdict(False, "root-value", str(branch[()]))
    for q in t2.dom():
        if not q:
            continue
        val = _entry(t, (2, q))
        try:
            an = analyze(val, t2.tree(q))
        except KernelError as e:
            return RespectVerdict(False, f"potential-tower{q}", e.code)
        pot = q_potential(t2, q)
        if an.potential_tower.tree != pot.tree or an.potential_tower.pvec != pot.pvec:
            return RespectVerdict(False, f"potential-tower{q}",
                                  f"{an.potential_tower} != {pot}")
        expected = tuple(_entry(t, (2, q[:l])) for l in range(len(q) + 1))
        if an.approximation_sequence != expected:
            return RespectVerdict(False, f"approximation{q}")
    for q in t2.dom():
        kids = bk.bk_sorted(t2.children(q).nodes)
        vals = [_entry(t, (2, q + (a,))) for a in kids]
        if any(x.compare(y) >= 0 for x, y in zip(vals, vals[1:])):
            return RespectVerdict(False, f"sibling-order{q}")
    return RespectVerdict(True)


def weakly_respects_le2(le2: LevelLe2Tree, t) -> RespectVerdict:
    """beta_empty = u_1 and each level-2 value sits below the embedded image
    of its predecessor."""
    if _entry(t, (2, ())).compare(U1) != 0:
        return RespectVerdict(False, "root-value")
    t2 = le2.t2
    for q in t2.dom():
        if not q:
            continue
        prev = _entry(t, (2, q[:-1]))
        try:
            bound = tree_embed(t2.tree(q[:-1]), t2.tree(q), prev)
        except KernelError as e:
            return RespectVerdict(False, f"embed{q}", e.code)
        if _entry(t, (2, q)).compare(bound) >= 0:
            return RespectVerdict(False, f"bound{q}")
    return RespectVerdict(True)


# -- description evaluation ------------------------------------------------------

def evaluate_description(le2: LevelLe2Tree, t, item, check: bool = True) -> UOrd:
    """Value of a description under a respecting tuple.

    Discontinuous descriptions are direct lookups; extended ones embed into
    the completion; continuous ones take the sup-embedding of the
    predecessor value.
    """
    if check and not respects_le2(le2, t):
        raise NotRespecting(le2)
    d, desc = item if isinstance(item, tuple) else (2, item)
    if d == 1:
        if desc not in le2.t1.nodes:
            raise BadDescription(item)
        return _entry(t, (1, desc))
    t2 = le2.t2
    if desc.extended:
        q = desc.q
        if q not in t2 or t2.node(q) == MINUS_ONE:
            raise BadDescription(item)
        pt = t2.partial(q)
        if desc.tree != pt.completion():
            raise BadDescription(item)
        return tree_embed(t2.tree(q), desc.tree, _entry(t, (2, q)))
    if desc.is_continuous():
        base = desc.q[:-1]
        if base not in t2 or t2.node(base) == MINUS_ONE:
            raise BadDescription(item)
        pt = t2.partial(base)
        if desc.tree != pt.completion():
            raise BadDescription(item)
        return tree_embed_sup(t2.tree(base), desc.tree, _entry(t, (2, base)))
    if desc.q not in t2 or q_potential(t2, desc.q).pvec != desc.pvec:
        raise BadDescription(item)
    return _entry(t, (2, desc.q))


# -- enumeration and recovery -----------------------------------------------------

def enumerate_dom_shapes(max_nodes: int):
    """Trees of level-1 trees (as sets of domain sequences including the
    root) with at most ``max_nodes`` elements."""
    shapes = [frozenset({()})]
    frontier = [frozenset({()})]
    for _ in range(max_nodes - 1):
        nxt = set()
        for shape in frontier:
            for q in shape:
                kids = Level1Tree(frozenset(k[-1] for k in shape
                                            if len(k) == len(q) + 1 and k[:len(q)] == q))
                for a in addable_nodes(kids):
                    nxt.add(shape | {q + (a,)})
        frontier = sorted(nxt, key=lambda s: sorted(map(_dom_sort_key, s)))
        shapes.extend(frontier)
    seen, out = set(), []
    for s in shapes:
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out


def _label_choices(tree: Level1Tree, is_leaf: bool):
    pend = [a for a in addable_nodes(tree) if a != (1,)]
    out = [(tree, a) for a in sorted(pend)]
    if is_leaf and len(tree):
        out.append((tree, MINUS_ONE))
    return out


def enumerate_level2_with_dom(shape):
    """All level-2 trees over a fixed domain shape, canonically ordered."""
    dom = sorted(shape, key=_dom_sort_key)
    leaves = {q for q in dom if not any(len(k) == len(q) + 1 and k[:len(q)] == q
                                        for k in dom)}

    def build(i, assigned):
        if i == len(dom):
            yield validate_level2(dict(assigned))
            return
        q = dom[i]
        if not q:
            yield from build(i + 1, {q: (EMPTY_TREE, ROOT_NODE)})
            return
        ptree, pnode = assigned[q[:-1]]
        if pnode == MINUS_ONE:
            return
        base = validate_level1(set(ptree.nodes) | {pnode})
        for label in _label_choices(base, q in leaves):
            yield from build(i + 1, {**assigned, q: label})

    yield from build(0, {})


def enumerate_le2_trees(max_dom: int):
    """All level <=2 trees with at most ``max_dom`` domain elements."""
    from .level1 import enumerate_level1

    out = []
    for k2 in range(1, max_dom + 1):
        for shape in enumerate_dom_shapes(k2):
            if len(shape) != k2:
                continue
            for t2 in enumerate_level2_with_dom(shape):
                for n1 in range(0, max_dom - k2 + 1):
                    for t1 in enumerate_level1(n1):
                        out.append(LevelLe2Tree(t1, t2))
    return out


def recover_tree(t1: Level1Tree, dom_shape, t) -> LevelLe2Tree:
    """Search all level <=2 trees over the domain for the one the tuple
    respects.  A second match would falsify the uniqueness lemma."""
    shape = frozenset(tuple(tuple(n) for n in q) for q in dom_shape)
    for q in sorted(shape, key=_dom_sort_key):
        if q and q[:-1] not in shape:
            raise DomainNotTree(q)
    found = []
    for t2 in enumerate_level2_with_dom(shape):
        cand = LevelLe2Tree(t1, t2)
        if respects_le2(cand, t):
            found.append(cand)
    if not found:
        raise NoTreeFound()
    if len(found) > 1:
        raise MultipleTreesFound(found)
    return found[0]


# -- respecting tuple generation ----------------------------------------------------

def generate_respecting_tuple(le2: LevelLe2Tree):
    """A respecting tuple for the tree, or None when no ordinal in the
    additive fragment can realize some branch.

    Fragment ordinals always induce chain-shaped potential towers, so a
    pending node off the chain has no additive witness.  For realizable
    trees the branch values are forced up to coefficients: the parent value
    must reappear as the child's next approximation, which pins the child's
    inherited coefficients; the fresh lowest coefficient orders siblings.
    """
    t2 = le2.t2
    values = {(2, ()): U1}
    coeffs = {(): ()}
    for q in t2.dom():
        if not q:
            continue
        n = len(q)
        if t2.tree(q).nodes != frozenset((0,) * j for j in range(1, n + 1)):
            return None
        if t2.node(q) not in (MINUS_ONE, (0,) * (n + 1)):
            return None
        rank = bk.bk_sorted(t2.children(q[:-1]).nodes).index(q[-1])
        parent = coeffs[q[:-1]]
        head = parent[:-1] + (_minus_one_nat(parent[-1]),) if parent else ()
        coeffs[q] = head + (CtblOrd.natural(3 * rank + 2),)
        uterms = tuple((n - l, c) for l, c in enumerate(coeffs[q]))
        tail = OMEGA if t2.node(q) == MINUS_ONE else CtblOrd.natural(0)
        values[(2, q)] = UOrd(uterms, tail)
    for i, p in enumerate(bk.bk_sorted(le2.t1.nodes)):
        values[(1, p)] = UOrd.from_ctbl(OMEGA * CtblOrd.natural(i + 1))
    return values


def _minus_one_nat(c: CtblOrd) -> CtblOrd:
    return CtblOrd.natural(c.natural_value() - 1)


# -- S2 ------------------------------------------------------------------------------

def s2_member(towers, alphas, variant: str = "respects") -> bool:
    """Membership of a level-2 tower node in S_2^- (respects) or S_2 (weak).

    Each new domain element receives the ordinal arriving with its tree; the
    assembled tuple must (weakly) respect the last tree.
    """
    towers = tuple(towers)
    alphas = tuple(alphas)
    if len(towers) != len(alphas):
        raise LengthMismatch(len(towers), len(alphas))
    if not towers:
        return True
    t = {}
    prev_dom = set()
    for i, (tree, a) in enumerate(zip(towers, alphas)):
        if tree.cardinality() != i + 1:
            raise InvalidTower(CardinalityMismatch(i).code, i)
        dom = {(2, q) for q in tree.dom()}
        fresh = dom - prev_dom
        if len(fresh) != 1 or not prev_dom <= dom:
            raise InvalidTower(i)
        if i and not towers[i - 1].is_subtree_of(tree):
            raise InvalidTower(i)
        t[next(iter(fresh))] = a
        prev_dom = dom
    last = LevelLe2Tree(EMPTY_TREE, towers[-1])
    check = respects_le2 if variant == "respects" else weakly_respects_le2
    return bool(check(last, t))
