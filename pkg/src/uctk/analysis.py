"""Effective analysis of ordinals below u_omega.

Factoring maps between level-1 trees act on ordinals through index shifts on
seeds; the analysis of a limit ordinal reads its signature, continuity,
uniform cofinality, induced tower, factoring map, approximation sequence and
potential partial tower straight off the normal form.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bk
from .errors import BelowOmega1, NotALimit, NotSubtree, OutOfRange
from .level1 import (FactorMap1, Level1Tree, Level1Tower, check_factor_map,
                     desc_rank, descriptions)
from .ordinals import (ONE, U1, ZERO, Cofinality, IndexMap, UOrd, apply_shift,
                       apply_shift_sup, cf_l)

MINUS_ONE = -1


def factor_to_shift(fm: FactorMap1) -> IndexMap:
    """The index shift induced on seeds by a factoring map.

    Sends the seed of each description to the seed of its image; the constant
    description goes to the constant description.
    """
    check_factor_map(fm)
    n = len(fm.source) + 1
    n2 = len(fm.target) + 1
    image = []
    for d in descriptions(fm.source):
        image.append(desc_rank(fm.target, fm(d)) + 1)
    return IndexMap(n, n2, tuple(image))


def inclusion_shift(sub: Level1Tree, sup: Level1Tree) -> IndexMap:
    if not sub.is_subtree_of(sup):
        raise NotSubtree(sub, sup)
    fm = FactorMap1(sub, sup, tuple((p, p) for p in bk.bk_sorted(sub.nodes)))
    return factor_to_shift(fm)


def _check_range(tree: Level1Tree, b: UOrd) -> None:
    # levels up to card+1 are meaningful: u_{card+1} is the constant seed
    if b.max_level() > len(tree) + 1:
        raise OutOfRange(b, tree)


def tree_embed(sub: Level1Tree, sup: Level1Tree, b: UOrd) -> UOrd:
    """j^{P,P'} on the fragment: move seeds of P to the same nodes in P'."""
    _check_range(sub, b)
    return apply_shift(inclusion_shift(sub, sup), b)


def tree_embed_sup(sub: Level1Tree, sup: Level1Tree, b: UOrd) -> UOrd:
    _check_range(sub, b)
    return apply_shift_sup(inclusion_shift(sub, sup), b)


def chain_tree(size: int) -> Level1Tree:
    """The tree {(0), (0,0), ...}: the shape realizing decreasing patterns."""
    return Level1Tree(frozenset((0,) * j for j in range(1, size + 1)))


def chain_node(length: int):
    return (0,) * length


@dataclass(frozen=True)
class PotentialTower1:
    """Compressed partial tower (P_*, pvec).

    Continuous type iff card(P_*) = lh(pvec); discontinuous iff one less.
    """

    tree: Level1Tree
    pvec: tuple  # nodes, possibly ending in -1

    def is_continuous(self) -> bool:
        return len(self.tree) == len(self.pvec)

    def __str__(self) -> str:
        from .grammar import format_node
        body = " ".join("-1" if p == MINUS_ONE else format_node(p) for p in self.pvec)
        return f"({self.tree}, ({body}))"


@dataclass(frozen=True)
class OrdAnalysis:
    signature: tuple            # nodes of W, decreasing seed levels
    signature_seeds: tuple      # the corresponding u-levels as UOrds
    essentially_continuous: bool
    uniform_cofinality: Cofinality
    induced_tower: Level1Tower
    factoring_map: FactorMap1
    approximation_sequence: tuple
    potential_tower: PotentialTower1


def analyze(b: UOrd, tree: Level1Tree) -> OrdAnalysis:
    """Full analysis of a limit ordinal u_1 <= b < u_{card(W)+1} over W."""
    if b.is_countable():
        raise BelowOmega1(b)
    if not b.is_limit():
        raise NotALimit(b)
    if b.max_level() > len(tree):
        raise OutOfRange(b, tree)

    descs = descriptions(tree)
    m = len(b.uterms)
    # signature: nodes of W whose seeds are the u-levels of b, top down
    signature = tuple(descs[k - 1] for k, _ in b.uterms)
    seeds = tuple(UOrd.u(k) for k, _ in b.uterms)

    coeffs = [c for _, c in b.uterms]
    continuous = b.tail.is_zero() and coeffs[-1].compare(ONE) == 0

    towers = [chain_tree(i) for i in range(m + 1)]
    pvec = tuple(chain_node(i + 1) for i in range(m))
    fmap = FactorMap1(towers[m], tree,
                      tuple((chain_node(i + 1), signature[i]) for i in reversed(range(m))))
    check_factor_map(fmap)

    approx = [U1]
    for i in range(1, m):
        val = UOrd(tuple((i - l, coeffs[l]) for l in range(i)), ZERO) + U1
        approx.append(val)
    if m >= 1:
        approx.append(UOrd(tuple((m - l, coeffs[l]) for l in range(m)), b.tail))

    ucf = cf_l(b)
    if continuous:
        potential = PotentialTower1(towers[m], pvec)
    elif ucf.kind == "omega":
        potential = PotentialTower1(towers[m], pvec + (MINUS_ONE,))
    else:
        # cofinality u_{lowest level}: the pending node extends the chain
        potential = PotentialTower1(towers[m], pvec + (chain_node(m + 1),))

    return OrdAnalysis(signature, seeds, continuous, ucf,
                       Level1Tower(tuple(towers)), fmap, tuple(approx), potential)


def recover_from_analysis(analysis: OrdAnalysis) -> UOrd:
    """Push the last approximation through the factoring map; recovers b."""
    shift = factor_to_shift(analysis.factoring_map)
    return apply_shift(shift, analysis.approximation_sequence[-1])
