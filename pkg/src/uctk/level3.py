"""Level-3 machinery: partial level <=2 trees with their uniform cofinality
and cofinality invariants, completions, level-3 trees and towers, the
ordinal representation rep(R), and the structural side of S_3.

Ordinal tuples below delta^1_3 have no normal form in this kernel, so the
S_3 operations validate tower structure only and say so explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bk
from .errors import (CaseViolation, CardinalityMismatch, DegreeZero,
                     DomainNotTree, EmptyKeyPresent, InvalidElement,
                     InvalidTower, KernelError, NotRegular, TowerViolation)
from .level1 import (EMPTY_TREE, Level1Tree, addable_nodes, is_level1,
                     validate_level1)
from .level2 import (CONSTANT_DESC, MINUS_ONE, LevelLe2Tree, QDescription,
                     _dom_sort_key, q_potential, q_set_plus, respects_le2,
                     validate_level2)

RSeq = tuple  # tuple of nodes indexing dom(R)


# -- partial level <= 2 trees ---------------------------------------------------

@dataclass(frozen=True)
class PartialLevelLe2Tree:
    """(Q, (d, q, P)): a level <=2 tree with one pending extension of
    degree 0, 1 or 2."""

    base: LevelLe2Tree
    d: int
    q: object          # -1, a node, or a domain sequence
    p: Level1Tree

    def degree(self) -> int:
        return self.d

    def cardinality(self) -> int:
        return self.base.cardinality() + 1

    def dom(self):
        return self.base.dom() + [(self.d, self.q)]

    def __str__(self) -> str:
        from .grammar import format_pl2
        return format_pl2(self)


def validate_partial_le2(base: LevelLe2Tree, d: int, q, p) -> PartialLevelLe2Tree:
    if d == 0:
        if q != MINUS_ONE or len(p):
            raise CaseViolation("degree 0 must be (0, -1, {})")
        return PartialLevelLe2Tree(base, 0, MINUS_ONE, EMPTY_TREE)
    if d == 1:
        q = tuple(q)
        if q in base.t1.nodes:
            raise CaseViolation("node already present", q)
        if not is_level1(set(base.t1.nodes) | {q}):
            raise CaseViolation("extension is not a level-1 tree", q)
        if len(p):
            raise CaseViolation("degree 1 carries no tree component")
        return PartialLevelLe2Tree(base, 1, q, EMPTY_TREE)
    if d == 2:
        q = tuple(tuple(n) for n in q)
        t2 = base.t2
        if q in t2 or not q:
            raise CaseViolation("sequence not a fresh extension", q)
        if q[:-1] not in t2:
            raise CaseViolation("predecessor missing", q)
        siblings = set(t2.children(q[:-1]).nodes) | {q[-1]}
        if not is_level1(siblings):
            raise CaseViolation("domain extension is not a tree of trees", q)
        parent = t2.partial(q[:-1])
        if parent.degree() == 0:
            raise CaseViolation("predecessor stage has degree 0", q)
        if p != parent.completion():
            raise CaseViolation("tree component must be the completion", q)
        return PartialLevelLe2Tree(base, 2, q, p)
    raise CaseViolation("degree must be 0, 1 or 2", d)


def respects_partial_le2(pt: PartialLevelLe2Tree, t) -> bool:
    """Restriction respects the base; the new entry is a natural (degree 0)
    or extends to a respecting tuple of some completion."""
    base_keys = set(pt.base.dom())
    restricted = {k: v for k, v in t.items() if k in base_keys}
    if not respects_le2(pt.base, restricted):
        return False
    key = (pt.d, pt.q)
    if key not in t:
        return False
    if pt.d == 0:
        v = t[key]
        from .ordinals import UOrd
        if isinstance(v, int):
            return v >= 0
        return isinstance(v, UOrd) and v.is_countable() and v.tail.is_natural()
    for comp in completion_le2(pt):
        if respects_le2(comp, t):
            return True
    return False


def ucf(pt: PartialLevelLe2Tree):
    """Uniform cofinality: (0, -1) or a regular extended Q-description.

    The five cases follow the degree, the length of the new object, and the
    set of same-tree neighbours above it.
    """
    if pt.d == 0:
        return (0, MINUS_ONE)
    if pt.d == 1:
        if len(pt.q) > 1:
            return (1, pt.q[:-1])
        return (2, CONSTANT_DESC)
    t2 = pt.base.t2
    above = q_set_plus(t2, pt.q)
    least = min(above, key=bk.bk_key)
    if least != pt.q[:-1]:
        pot = q_potential(t2, least)
        return (2, QDescription(least, pot.tree, pot.pvec))
    pot = q_potential(t2, pt.q[:-1])
    return (2, QDescription(pt.q[:-1], pt.p, pot.pvec, extended=True))


def cf3(pt: PartialLevelLe2Tree) -> int:
    if pt.d == 0:
        return 0
    if pt.d == 1:
        extended = set(pt.base.t1.nodes) | {pt.q}
        if bk.bk_sorted(extended)[0] == pt.q:
            return 1
    return 2


def completion_le2(pt: PartialLevelLe2Tree):
    """All completions; degree 1 has exactly one, degree 2 one per label of
    the new stage (the -1 label first, then pending nodes in order)."""
    if pt.d == 0:
        raise DegreeZero(pt)
    if pt.d == 1:
        return [LevelLe2Tree(validate_level1(set(pt.base.t1.nodes) | {pt.q}),
                             pt.base.t2)]
    out = []
    entries = dict(pt.base.t2.entries)
    labels = [(pt.p, MINUS_ONE)]
    labels += [(pt.p, a) for a in addable_nodes(pt.p) if a != (1,)]
    for label in labels:
        out.append(LevelLe2Tree(pt.base.t1,
                                validate_level2({**entries, pt.q: label})))
    return out


# -- level-3 trees ---------------------------------------------------------------

@dataclass(frozen=True)
class Level3Tree:
    entries: tuple  # ((rseq, PartialLevelLe2Tree), ...) sorted

    def dom(self):
        return [r for r, _ in self.entries]

    def __contains__(self, r) -> bool:
        return any(r == k for k, _ in self.entries)

    def label(self, r) -> PartialLevelLe2Tree:
        for k, v in self.entries:
            if k == r:
                return v
        raise KernelError(r)

    def tree(self, r) -> LevelLe2Tree:
        return self.label(r).base

    def node(self, r):
        lab = self.label(r)
        return (lab.d, lab.q)

    def cardinality(self) -> int:
        return len(self.entries)

    def children(self, r) -> Level1Tree:
        return Level1Tree(frozenset(k[-1] for k, _ in self.entries
                                    if len(k) == len(r) + 1 and k[:len(r)] == r))

    def is_subtree_of(self, other) -> bool:
        return all(r in other and other.label(r) == v for r, v in self.entries)

    def __str__(self) -> str:
        from .grammar import format_l3
        return format_l3(self)


def is_regular_level3(tree: Level3Tree) -> bool:
    return ((1,),) not in tree.dom()


def validate_level3(entries) -> Level3Tree:
    """Domain a tree of level-1 trees without the empty sequence; every
    branch a partial level <=2 tower of discontinuous type."""
    items = {}
    for r, pt in dict(entries).items():
        r = tuple(tuple(n) for n in r)
        if r == ():
            raise EmptyKeyPresent()
        items[r] = pt
    dom = set(items)
    for r in sorted(dom, key=_dom_sort_key):
        if len(r) > 1 and r[:-1] not in dom:
            raise DomainNotTree(r)
    for r in sorted(dom | {()}, key=_dom_sort_key):
        kids = frozenset(k[-1] for k in dom if len(k) == len(r) + 1 and k[:len(r)] == r)
        if not is_level1(kids):
            raise DomainNotTree(r)
    for r in sorted(dom, key=_dom_sort_key):
        pt = items[r]
        if len(r) == 1:
            if pt.base.cardinality() != 1:
                raise TowerViolation(r)
        else:
            parent = items[r[:-1]]
            if parent.d == 0:
                raise TowerViolation(r)
            if not any(pt.base == c for c in completion_le2(parent)):
                raise TowerViolation(r)
    return Level3Tree(tuple(sorted(items.items(), key=lambda kv: _dom_sort_key(kv[0]))))


def r_potential(tree: Level3Tree, r, completion: LevelLe2Tree = None):
    """R[r], or R[r, Q] against a chosen completion."""
    triples = tuple((tree.label(r[:l + 1]).d, tree.label(r[:l + 1]).q,
                     tree.label(r[:l + 1]).p) for l in range(len(r)))
    return ((completion if completion is not None else tree.label(r).base), triples)


def dom_star_3(tree: Level3Tree):
    out = list(tree.dom())
    for r in tree.dom():
        out.append(r + (MINUS_ONE,))
    return sorted(out, key=_dom_sort_key)


# -- ordinal representation -------------------------------------------------------

@dataclass(frozen=True)
class Rep3Element:
    """Interleaving (r(0), beta_{q_1}, r(1), ..., beta_{q_{k-1}}, r(k-1))."""

    payload: tuple

    def __str__(self) -> str:
        from .grammar import format_rep3
        return format_rep3(self)


def make_rep3(tree: Level3Tree, r, values) -> Rep3Element:
    """Build and validate beta (+) r; ``values`` maps dom(R_tree(r)) keys,
    plus the pending key for the r++(-1) form, to their ordinals."""
    if r and r[-1] == MINUS_ONE:
        base = r[:-1]
        if base not in tree:
            raise InvalidElement(r)
        pt = tree.label(base)
        if not respects_partial_le2(pt, values):
            raise InvalidElement(r)
        seq = []
        for i, entry in enumerate(base):
            if i:
                seq.append(values[tree.node(base[:i])])
            seq.append(entry)
        seq.append(values[(pt.d, pt.q)])
        seq.append(MINUS_ONE)
        return Rep3Element(tuple(seq))
    if r not in tree:
        raise InvalidElement(r)
    if not respects_le2(tree.tree(r), values):
        raise InvalidElement(r)
    seq = []
    for i, entry in enumerate(r):
        if i:
            seq.append(values[tree.node(r[:i])])
        seq.append(entry)
    return Rep3Element(tuple(seq))


def rep3_from_payload(tree: Level3Tree, payload) -> Rep3Element:
    """Reconstruct and validate beta (+) r from its interleaved sequence."""
    if len(payload) % 2 == 0:
        raise InvalidElement(payload)
    r = tuple(payload[2 * i] for i in range((len(payload) + 1) // 2))
    base = r[:-1] if r and r[-1] == MINUS_ONE else r
    if base not in tree:
        raise InvalidElement(payload)
    from .ordinals import U1
    values = {(2, ()): U1}  # the root entry is forced and not interleaved
    for i in range(1, len(base)):
        values[tree.node(base[:i])] = payload[2 * i - 1]
    if r and r[-1] == MINUS_ONE:
        pt = tree.label(base)
        values[(pt.d, pt.q)] = payload[-2]
    elt = make_rep3(tree, r, values)
    if elt.payload != tuple(payload):
        raise InvalidElement(payload)
    return elt


def rep3_compare(tree: Level3Tree, x: Rep3Element, y: Rep3Element) -> int:
    for e in (x, y):
        rep3_from_payload(tree, e.payload)
    return bk.bk(x.payload, y.payload)


# -- S3, structural part ------------------------------------------------------------

@dataclass(frozen=True)
class S3Verdict:
    ok: bool
    detail: str
    ordinal_clause: str = "not-evaluated"

    def __bool__(self) -> bool:
        return self.ok


def s3_structural_member(towers, variant: str = "plain") -> S3Verdict:
    """Validate the regular-tower part of an S_3 (or S_3^-) node.

    The ordinal clause quantifies over tuples below delta^1_3, which this
    kernel does not represent; the verdict is explicit about checking
    structure only.
    """
    towers = tuple(towers)
    if not towers:
        return S3Verdict(True, "empty node")
    prev_dom = None
    for i, t in enumerate(towers):
        if not is_regular_level3(t):
            raise NotRegular(i)
        if t.cardinality() != i + 1:
            raise InvalidTower(CardinalityMismatch(i).code, i)
        dom = set(t.dom())
        if prev_dom is not None:
            if not towers[i - 1].is_subtree_of(t) or len(dom - prev_dom) != 1:
                raise InvalidTower(i)
        prev_dom = dom
    return S3Verdict(True, f"regular level-3 tower of length {len(towers)}, "
                           f"variant {variant}")
