"""Independent oracles and executable lemma suites.

Every production closed form in the kernel is cross-checked here against a
computation that goes through the defining construction instead:

  * order types by rank accumulation rather than the closed form;
  * L-cofinalities by fundamental-sequence recursion;
  * j^sigma_sup by the continuity-plus-decomposition recursion;
  * the ordinal analysis by evaluating the represented function on tuples
    drawn from a pool of ordinals closed under the arithmetic in play, then
    decoding the result back into indiscernible normal form.

The suites are deterministic given (bound, seed) and report the first
counterexample verbatim.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import bk
from .analysis import (analyze, chain_node, factor_to_shift,
                       recover_from_analysis, tree_embed, tree_embed_sup)
from .errors import NotAFactoring
from .level1 import (EMPTY_TREE, FactorMap1, Level1Tree, addable_nodes,
                     check_factor_map, descriptions, enumerate_level1_up_to,
                     factor_exists, factorings, rep_order_type, s1_member,
                     strict_factor_exists, validate_level1)
from .level2 import (MINUS_ONE, LevelLe2Tree, enumerate_le2_trees,
                     evaluate_description, extended_descriptions,
                     generate_respecting_tuple, is_regular_description,
                     q_descriptions, recover_tree, respects_le2, s2_member,
                     typical_trees, weakly_respects_le2)
from .level3 import PartialLevelLe2Tree, cf3, ucf, validate_partial_le2
from .ordinals import (ONE, OMEGA, U1, ZERO, Cofinality, CtblOrd, IndexMap,
                       UOrd, apply_shift, apply_shift_sup, cf_l,
                       shift_is_continuous, shift_sup_by_decomposition)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok: bool, detail: str):
        self.cases += 1
        if not ok and len(self.failures) < 5:
            self.failures.append(detail)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        out = f"{status} {self.name}: {self.cases} cases"
        if self.failures:
            out += f"; first counterexample: {self.failures[0]}"
        return out


# -- independent oracles ---------------------------------------------------------

def order_type_oracle(tree: Level1Tree) -> CtblOrd:
    """Accumulate omega+1 per node along the Brouwer-Kleene walk."""
    acc = ZERO
    for _ in tree.bk_sorted():
        acc = (acc + OMEGA) + ONE
    return acc


def cf_oracle(b: UOrd) -> Cofinality:
    """Cofinality by fundamental-sequence recursion on the last component."""
    if b.is_zero():
        return Cofinality.zero()
    if not b.tail.is_zero():
        t = b.tail
        if t.is_successor():
            return Cofinality.successor()
        return Cofinality.omega()  # countable limits have an omega ladder
    level, coeff = b.uterms[-1]
    if coeff.is_limit():
        return Cofinality.omega()  # u_k * lambda climbs along lambda
    return Cofinality.u(level)     # u_k * (c+1) climbs along u_k itself


class EvalOracle:
    """Almost-everywhere evaluation oracle for the analysis of b over W.

    The represented function substitutes tuple entries for the u-levels of
    b.  Entries are drawn from omega-power blocks v_j = w^(mu*j) with mu a
    single omega power exceeding every coefficient, so products and sums
    never cross blocks; evaluated values decode uniquely back into u-terms.
    """

    def __init__(self, b: UOrd, tree: Level1Tree):
        self.b = b
        self.tree = tree
        self.descs = descriptions(tree)
        self.sig_nodes = tuple(self.descs[k - 1] for k, _ in b.uterms)
        self.coeffs = [c for _, c in b.uterms]
        self.tail = b.tail
        s = ZERO
        for c in self.coeffs + [self.tail]:
            if not c.is_zero() and s.compare(c.leading_exponent()) < 0:
                s = c.leading_exponent()
        self.mu = CtblOrd.omega_power(s + ONE)

    def pool(self, j: int) -> CtblOrd:
        return CtblOrd.omega_power(self.mu * CtblOrd.natural(j))

    def assignments(self, nodes, extra: int = 2):
        """Order-respecting pool assignments to the given nodes."""
        import itertools
        order = bk.bk_sorted(nodes)
        n = len(order)
        out = []
        for combo in itertools.combinations(range(1, n + extra + 1), n):
            out.append({p: self.pool(j) for p, j in zip(order, combo)})
        return out

    def evaluate(self, assignment) -> CtblOrd:
        val = ZERO
        for w, c in zip(self.sig_nodes, self.coeffs):
            val = val + assignment[w] * c
        return val + self.tail

    def decode(self, value: CtblOrd, slot_level) -> UOrd:
        """Read a pool evaluation back as a sum of u-terms plus tail."""
        per_slot = {}
        tail = ZERO
        for exp, coeff in value.terms:
            j, rem = self._split_exponent(exp)
            if j == 0:
                tail = tail + CtblOrd(((rem, coeff),))
            else:
                cur = per_slot.get(j, ZERO)
                per_slot[j] = cur + CtblOrd(((rem, coeff),))
        uterms = tuple((slot_level(j), per_slot[j])
                       for j in sorted(per_slot, reverse=True))
        return UOrd(uterms, tail)

    def _split_exponent(self, exp: CtblOrd):
        if exp.is_zero() or exp.compare(self.mu) < 0:
            return 0, exp
        lead_exp, lead_coeff = exp.terms[0]
        if lead_exp.compare(self.mu.leading_exponent()) != 0:
            return 0, exp
        return lead_coeff, CtblOrd(exp.terms[1:])

    # -- the defining clauses, evaluated -----------------------------------

    def signature_holds(self, claimed) -> bool:
        """(a) strict lexicographic monotonicity in the claimed projection,
        (b) the projection determines the value."""
        claimed = tuple(claimed)
        if set(claimed) - set(self.tree.nodes):
            return False
        assigns = self.assignments(self.tree.nodes)
        for x in assigns:
            for y in assigns:
                px = tuple(x[w] for w in claimed)
                py = tuple(y[w] for w in claimed)
                fx, fy = self.evaluate(x), self.evaluate(y)
                if px == py:
                    if fx.compare(fy) != 0:
                        return False
                elif bk.bk_compare(px, py, lambda a, b: a.compare(b)) < 0 \
                        and fx.compare(fy) >= 0:
                    return False
        return True

    def sup_strictly_below(self, assignment) -> CtblOrd:
        """sup of evaluations over tuples lexicographically below: drop at
        some position, where the freed coordinates sup to the dropped value
        by block closure."""
        best = ZERO
        for drop in range(len(self.sig_nodes)):
            val = ZERO
            for w, c in zip(self.sig_nodes[:drop], self.coeffs[:drop]):
                val = val + assignment[w] * c
            val = val + assignment[self.sig_nodes[drop]]
            if best.compare(val) < 0:
                best = val
        return best

    def essentially_continuous(self) -> bool:
        if not self.sig_nodes:
            return False
        for assignment in self.assignments(self.tree.nodes, extra=1):
            if self.evaluate(assignment).compare(
                    self.sup_strictly_below(assignment)) != 0:
                return False
        return True

    def approximation(self, i: int) -> UOrd:
        """[f_i] by evaluating the defining sup on the induced chain and
        decoding; the sup pins the first i projections and frees the rest."""
        if i == 0:
            return U1
        m = len(self.sig_nodes)
        chain = [chain_node(l + 1) for l in range(i)]
        assignment = {p: self.pool(i - l) for l, p in enumerate(chain)}
        val = ZERO
        for l in range(i):
            val = val + assignment[chain[l]] * self.coeffs[l]
        if i < m:
            val = val + assignment[chain[i - 1]]  # freed tail sups to it
        else:
            val = val + self.tail
        return self.decode(val, lambda j: j)

    def approximation_sequence(self):
        return tuple(self.approximation(i) for i in range(len(self.sig_nodes) + 1))


# -- seeded generators -------------------------------------------------------------

def rand_ctbl(rng: random.Random, depth: int = 1) -> CtblOrd:
    kind = rng.randrange(4)
    if kind == 0 or depth <= 0:
        return CtblOrd.natural(rng.randrange(6))
    out = ZERO
    for _ in range(rng.randrange(1, 3)):
        exp = rand_ctbl(rng, depth - 1) if rng.random() < 0.4 else \
            CtblOrd.natural(rng.randrange(1, 4))
        out = out + CtblOrd.omega_power(exp, rng.randrange(1, 4))
    if rng.random() < 0.5:
        out = out + CtblOrd.natural(rng.randrange(4))
    return out


def rand_uord(rng: random.Random, max_level: int = 6,
              allow_tail: bool = True) -> UOrd:
    levels = sorted(rng.sample(range(1, max_level + 1),
                               rng.randrange(0, max_level + 1)), reverse=True)
    uterms = []
    for k in levels:
        coeff = rand_ctbl(rng)
        if coeff.is_zero():
            coeff = ONE
        uterms.append((k, coeff))
    tail = rand_ctbl(rng) if allow_tail and rng.random() < 0.6 else ZERO
    return UOrd(tuple(uterms), tail)


def rand_limit_uord(rng: random.Random, max_level: int = 6) -> UOrd:
    while True:
        b = rand_uord(rng, max_level)
        if b.is_limit():
            return b


def rand_index_map(rng: random.Random, n: int, n2: int) -> IndexMap:
    return IndexMap(n, n2, tuple(sorted(rng.sample(range(1, n2 + 1), n))))


def rand_qualifying_beta(rng: random.Random, max_level: int, k: int) -> UOrd:
    """A limit below u_{max_level+1} with L-cofinality u_k."""
    above = [lv for lv in range(k + 1, max_level + 1)]
    pick = sorted(rng.sample(above, rng.randrange(0, len(above) + 1)),
                  reverse=True)
    uterms = []
    for lv in pick:
        coeff = rand_ctbl(rng)
        uterms.append((lv, coeff if not coeff.is_zero() else ONE))
    last = rand_ctbl(rng) + CtblOrd.natural(rng.randrange(1, 4))
    uterms.append((k, last))
    return UOrd(tuple(uterms), ZERO)


def enumerate_partial_le1(max_completion: int):
    """All partial level <=1 trees of degree 1 whose completion has at most
    ``max_completion`` nodes, base regular."""
    out = []
    for base in enumerate_level1_up_to(max_completion - 1, regular_only=True):
        for p in addable_nodes(base):
            if p == (1,):
                continue
            out.append((base, p))
    return out


def _pred_in_tree(tree: Level1Tree, node):
    order = bk.bk_sorted(tree.nodes)
    i = order.index(node)
    return order[i - 1] if i else None


# -- suites ---------------------------------------------------------------------------

def suite_order_type(max_nodes: int = 6) -> SuiteResult:
    res = SuiteResult("order-type law: o.t.(<^P) = w*card(P)+1 vs rank oracle")
    for tree in enumerate_level1_up_to(max_nodes):
        if not len(tree):
            res.check(rep_order_type(tree) == ZERO == order_type_oracle(tree),
                      "empty tree")
            continue
        closed = OMEGA * CtblOrd.natural(len(tree)) + ONE
        got = rep_order_type(tree)
        orc = order_type_oracle(tree)
        res.check(got == closed == orc,
                  f"P={tree}: closed {closed}, got {got}, oracle {orc}")
    return res


def suite_factor_order(max_nodes: int = 4) -> SuiteResult:
    res = SuiteResult("factoring existence vs order-type comparison")
    trees = enumerate_level1_up_to(max_nodes)
    for p in trees:
        for w in trees:
            ot_le = order_type_oracle(p).compare(order_type_oracle(w)) <= 0
            ot_lt = order_type_oracle(p).compare(order_type_oracle(w)) < 0
            res.check(factor_exists(p, w) == ot_le,
                      f"factor_exists({p},{w}) != ({ot_le})")
            res.check(strict_factor_exists(p, w) == ot_lt,
                      f"strict_factor_exists({p},{w}) != ({ot_lt})")
    return res


def suite_shift(pairs: int = 10000, seed: int = 0, max_level: int = 6) -> SuiteResult:
    res = SuiteResult("shift continuity criterion and decomposition recursion")
    rng = random.Random(seed)
    for _ in range(pairs):
        b = rand_limit_uord(rng, max_level)
        n = max(b.max_level(), 1)
        n2 = n + rng.randrange(0, 4)
        sigma = rand_index_map(rng, n, n2)
        closed = apply_shift_sup(sigma, b)
        orc = shift_sup_by_decomposition(sigma, b)
        res.check(closed.compare(orc) == 0,
                  f"sigma={sigma}, b={b}: closed {closed} != oracle {orc}")
        cont = shift_is_continuous(sigma, b)
        res.check((closed.compare(apply_shift(sigma, b)) == 0) == cont,
                  f"sigma={sigma}, b={b}: continuity criterion mismatch")
    return res


def suite_analysis(count: int = 1000, seed: int = 0) -> SuiteResult:
    res = SuiteResult("analysis coherence against the a.e.-evaluation oracle")
    rng = random.Random(seed)
    pool_trees = [t for t in enumerate_level1_up_to(5) if len(t) >= 1]
    produced = 0
    while produced < count:
        tree = rng.choice(pool_trees)
        b = rand_limit_uord(rng, max_level=len(tree))
        if b.is_countable():
            continue
        produced += 1
        an = analyze(b, tree)
        oracle = EvalOracle(b, tree)
        res.check(oracle.signature_holds(an.signature),
                  f"b={b}, W={tree}: signature {an.signature} rejected")
        res.check(an.essentially_continuous == oracle.essentially_continuous(),
                  f"b={b}, W={tree}: continuity mismatch")
        ucf_prod = an.uniform_cofinality
        ucf_orc = cf_oracle(b)
        res.check(ucf_prod == ucf_orc == cf_l(b),
                  f"b={b}: ucf {ucf_prod} vs cofinality oracle {ucf_orc}")
        res.check(an.potential_tower.is_continuous() == an.essentially_continuous,
                  f"b={b}: potential tower type vs continuity")
        orc_approx = oracle.approximation_sequence()
        res.check(an.approximation_sequence == orc_approx,
                  f"b={b}: approximations {tuple(map(str, an.approximation_sequence))}"
                  f" vs oracle {tuple(map(str, orc_approx))}")
        res.check(recover_from_analysis(an).compare(b) == 0,
                  f"b={b}: factoring does not recover b")
    return res


def _lemma_a_configs(max_partial_nodes: int, max_w: int):
    for base, p in enumerate_partial_le1(max_partial_nodes):
        if len(p) < 2:
            continue  # the qualifying cofinality would exceed the bound
        completion = validate_level1(set(base.nodes) | {p})
        for w in enumerate_level1_up_to(max_w):
            for fm in factorings(completion, w):
                pred = _pred_in_tree(w, fm(p))
                if pred is None:
                    continue
                try:
                    mapping = tuple((x, pred if x == p else fm(x))
                                    for x, _ in fm.mapping)
                    fm2 = FactorMap1(completion, w, mapping)
                    check_factor_map(fm2)
                except NotAFactoring:
                    continue
                yield base, p, completion, w, fm, fm2


def suite_lemma_level2_ucf(max_partial_nodes: int = 4, max_w: int = 5,
                           betas: int = 100, seed: int = 0) -> SuiteResult:
    """sigma^W o j^{P-,P}_sup = (sigma')^W_sup o j^{P-,P} on qualifying betas."""
    res = SuiteResult("level-2 uniform cofinality lemma (sup swap)")
    rng = random.Random(seed)
    for base, p, completion, w, fm, fm2 in _lemma_a_configs(max_partial_nodes, max_w):
        k = descriptions(base).index(p[:-1]) + 1
        s1 = factor_to_shift(fm)
        s2 = factor_to_shift(fm2)
        for _ in range(betas):
            beta = rand_qualifying_beta(rng, len(base), k)
            lhs = apply_shift(s1, tree_embed_sup(base, completion, beta))
            rhs = apply_shift_sup(s2, tree_embed(base, completion, beta))
            res.check(lhs.compare(rhs) == 0,
                      f"P-={base}, p={p}, W={w}, sigma={fm}, beta={beta}: "
                      f"{lhs} != {rhs}")
    return res


def suite_lemma_level2_ucf_another(max_partial_nodes: int = 4, max_w: int = 5,
                                   betas: int = 100, seed: int = 0) -> SuiteResult:
    """sigma^W = (sigma')^W_sup o j^{P,P+} in both displayed cases."""
    res = SuiteResult("level-2 uniform cofinality lemma (completion route)")
    rng = random.Random(seed)
    # case 1: degree-0 pending, omega-cofinal beta, sigma' = sigma
    for base in enumerate_level1_up_to(max_partial_nodes - 1, regular_only=True):
        if not len(base):
            continue
        for w in enumerate_level1_up_to(max_w):
            for fm in factorings(base, w):
                s = factor_to_shift(fm)
                for _ in range(max(betas // 10, 5)):
                    beta = rand_limit_uord(rng, max_level=len(base))
                    if cf_l(beta).kind != "omega" or beta.is_countable():
                        continue
                    lhs = apply_shift(s, beta)
                    rhs = apply_shift_sup(s, beta)
                    res.check(lhs.compare(rhs) == 0,
                              f"P={base}, W={w}, beta={beta}: {lhs} != {rhs}")
    # case 2: degree-1 pending; sigma'(p) is the predecessor of sigma(p-)
    for base, p in enumerate_partial_le1(max_partial_nodes):
        if len(p) < 2:
            continue
        completion = validate_level1(set(base.nodes) | {p})
        k = descriptions(base).index(p[:-1]) + 1
        for w in enumerate_level1_up_to(max_w):
            for fm2 in factorings(completion, w):
                if _pred_in_tree(w, fm2(p[:-1])) != fm2(p):
                    continue
                restricted = make_restriction(fm2, base)
                s = factor_to_shift(restricted)
                s2 = factor_to_shift(fm2)
                for _ in range(betas):
                    beta = rand_qualifying_beta(rng, len(base), k)
                    lhs = apply_shift(s, beta)
                    rhs = apply_shift_sup(s2, tree_embed(base, completion, beta))
                    res.check(lhs.compare(rhs) == 0,
                              f"P={base}, p={p}, W={w}, sigma'={fm2}, "
                              f"beta={beta}: {lhs} != {rhs}")
    return res


def make_restriction(fm: FactorMap1, sub: Level1Tree) -> FactorMap1:
    mapping = tuple((x, y) for x, y in fm.mapping if x in sub.nodes)
    return FactorMap1(sub, fm.target, mapping)


def suite_uniqueness(max_dom: int = 4) -> SuiteResult:
    res = SuiteResult("uniqueness of the representing level <=2 tree")
    realizable = 0
    for tree in enumerate_le2_trees(max_dom):
        t = generate_respecting_tuple(tree)
        if t is None:
            continue
        realizable += 1
        verdict = respects_le2(tree, t)
        res.check(bool(verdict), f"{tree}: generated tuple rejected: {verdict}")
        got = recover_tree(tree.t1, [q for q in tree.t2.dom()], t)
        res.check(got == tree, f"{tree}: recovered {got}")
    res.check(realizable >= (10 if max_dom >= 4 else 1),
              f"only {realizable} realizable trees")
    return res


def _desc_sort_key(item):
    """Value order on descriptions: by side, then length, then lexicographic
    position with -1 least."""
    d, desc = item
    if d == 1:
        return (1, 0, bk.bk_key(desc))
    return (2, len(desc.q), bk.bk_key(desc.q))


def suite_desc_eval(max_dom: int = 4) -> SuiteResult:
    """Continuous descriptions evaluate to the sup-embedding of their
    predecessor (checked against the decomposition oracle), and evaluation
    is monotone in the (length, lexicographic) description order; the
    constant description and the root's -1 form share the value u_1."""
    res = SuiteResult("description evaluation: continuous values and monotonicity")
    for tree in enumerate_le2_trees(max_dom):
        t = generate_respecting_tuple(tree)
        if t is None or not respects_le2(tree, t):
            continue
        items = q_descriptions(tree)
        values = [evaluate_description(tree, t, it, check=False) for it in items]
        for it, val in zip(items, values):
            d, desc = it
            if d == 2 and desc.is_continuous():
                base = desc.q[:-1]
                sub = tree.t2.tree(base)
                from .analysis import inclusion_shift
                orc = shift_sup_by_decomposition(inclusion_shift(sub, desc.tree),
                                                 t[(2, base)])
                res.check(val.compare(orc) == 0,
                          f"{tree} at {desc}: {val} != oracle {orc}")
        ordered = sorted(range(len(items)), key=lambda i: _desc_sort_key(items[i]))
        for a, b2 in zip(ordered, ordered[1:]):
            v1, v2 = values[a], values[b2]
            tie_ok = (items[a][0] == items[b2][0] == 2
                      and items[a][1].q == () and items[b2][1].q == (MINUS_ONE,))
            if tie_ok:
                res.check(v1.compare(v2) == 0,
                          f"{tree}: constant/-1 pair not tied: {v1} vs {v2}")
            else:
                res.check(v1.compare(v2) < 0,
                          f"{tree}: {items[a]} -> {v1} not below {items[b2]} -> {v2}")
        for d, desc in extended_descriptions(tree):
            if d == 2 and desc.extended:
                plain = t[(2, desc.q)]
                val = evaluate_description(tree, t, (d, desc), check=False)
                res.check(plain.compare(val) < 0,
                          f"{tree}: extended value not above stored at {desc.q}")
    return res


def suite_respect_hierarchy(max_dom: int = 4) -> SuiteResult:
    res = SuiteResult("respects implies weakly respects; typical discriminators")
    for tree in enumerate_le2_trees(max_dom):
        t = generate_respecting_tuple(tree)
        if t is None:
            continue
        if respects_le2(tree, t):
            res.check(bool(weakly_respects_le2(tree, t)),
                      f"{tree}: respects but not weakly")
    q0, q1, q20, q21 = typical_trees()
    two = UOrd.u(1, CtblOrd.natural(2))
    lim = UOrd.u(1, OMEGA)
    key = ((0,),)
    res.check(bool(respects_le2(q21, {(2, ()): U1, (2, key): two})),
              "Q21 rejects (u1, u1*2)")
    res.check(not respects_le2(q20, {(2, ()): U1, (2, key): two}),
              "Q20 accepts (u1, u1*2)")
    res.check(bool(respects_le2(q20, {(2, ()): U1, (2, key): lim})),
              "Q20 rejects (u1, u1*w)")
    res.check(not respects_le2(q21, {(2, ()): U1, (2, key): lim}),
              "Q21 accepts (u1, u1*w)")
    return res


def _l2_tower_from_tree(tree) -> list:
    """Peel the level-2 domain in reverse canonical order; prefixes stay
    valid level-2 trees."""
    from .level2 import validate_level2

    entries = dict(tree.entries)
    towers = [tree]
    # reverse insertion order: peel the longest, lexicographically last
    # element; its index is right-free in its sibling set
    order = sorted(entries, key=lambda q: (len(q), q))
    for q in reversed(order[1:]):
        del entries[q]
        towers.append(validate_level2(dict(entries)))
    return list(reversed(towers))


def suite_tree_property(max_dom: int = 4, seed: int = 0) -> SuiteResult:
    res = SuiteResult("S1/S2 accept every initial segment of an accepted node")
    rng = random.Random(seed)
    # S1: random regular towers with order-respecting ordinals
    for _ in range(50):
        size = rng.randrange(1, 5)
        trees, cur = [], EMPTY_TREE
        for _ in range(size):
            choices = [a for a in addable_nodes(cur) if a != (1,)]
            cur = validate_level1(set(cur.nodes) | {rng.choice(choices)})
            trees.append(cur)
        ranks = {p: i for i, p in enumerate(bk.bk_sorted(trees[-1].nodes))}
        alphas = []
        prev = EMPTY_TREE
        for t in trees:
            node = next(iter(t.nodes - prev.nodes))
            alphas.append(UOrd.from_ctbl(OMEGA * CtblOrd.natural(ranks[node] + 1)))
            prev = t
        if s1_member(trees, [a.tail for a in alphas]):
            for cut in range(len(trees)):
                res.check(s1_member(trees[:cut], [a.tail for a in alphas[:cut]]),
                          f"S1 prefix {cut} of {list(map(str, trees))} rejected")
    # S2: towers carved out of realizable level <=2 trees with empty level-1 part
    for tree in enumerate_le2_trees(max_dom):
        if len(tree.t1):
            continue
        t = generate_respecting_tuple(tree)
        if t is None:
            continue
        towers = _l2_tower_from_tree(tree.t2)
        alphas = []
        prev = set()
        for stage in towers:
            q = next(iter(set(stage.dom()) - prev))
            alphas.append(t[(2, q)])
            prev = set(stage.dom())
        for variant in ("respects", "weak"):
            if s2_member(towers, alphas, variant):
                for cut in range(len(towers)):
                    res.check(s2_member(towers[:cut], alphas[:cut], variant),
                              f"S2 prefix {cut} rejected ({variant})")
    return res


def suite_ucf_cf3(max_base_dom: int = 3) -> SuiteResult:
    res = SuiteResult("ucf totality/regularity and case coverage; cf3 cases")
    ucf_cases = {i: 0 for i in range(1, 6)}
    cf_cases = {0: 0, 1: 0, 2: 0}
    for base in enumerate_le2_trees(max_base_dom):
        for pt in enumerate_partial_le2(base):
            value = ucf(pt)
            case = _ucf_case(pt)
            ucf_cases[case] += 1
            cf_cases[cf3(pt)] += 1
            if value == (0, MINUS_ONE):
                res.check(pt.d == 0, f"{pt}: (0,-1) on positive degree")
                continue
            d, desc = value
            if d == 1:
                res.check(desc in base.t1.nodes, f"{pt}: ucf node outside tree")
                continue
            found = [item for item in extended_descriptions(base)
                     if item[0] == 2 and item[1] == desc]
            res.check(len(found) == 1 and is_regular_description(base, found[0]),
                      f"{pt}: ucf {desc} is not a regular extended description")
    res.check(all(ucf_cases.values()), f"ucf cases not all exercised: {ucf_cases}")
    res.check(all(cf_cases.values()), f"cf3 cases not all exercised: {cf_cases}")
    return res


def _ucf_case(pt: PartialLevelLe2Tree) -> int:
    if pt.d == 0:
        return 1
    if pt.d == 1:
        return 2 if len(pt.q) > 1 else 3
    from .level2 import q_set_plus
    above = q_set_plus(pt.base.t2, pt.q)
    least = min(above, key=bk.bk_key)
    return 4 if least != pt.q[:-1] else 5


def enumerate_partial_le2(base: LevelLe2Tree):
    """All partial level <=2 extensions of a base tree."""
    out = [validate_partial_le2(base, 0, MINUS_ONE, EMPTY_TREE)]
    for q in addable_nodes(base.t1):
        out.append(validate_partial_le2(base, 1, q, EMPTY_TREE))
    for q in base.t2.dom():
        if base.t2.node(q) == MINUS_ONE:
            continue
        completion = base.t2.partial(q).completion()
        for a in addable_nodes(base.t2.children(q)):
            out.append(validate_partial_le2(base, 2, q + (a,), completion))
    return out


ALL_SUITES = {
    "order-type": suite_order_type,
    "factor-order": suite_factor_order,
    "shift": suite_shift,
    "analysis": suite_analysis,
    "lemma-ucf-sup": suite_lemma_level2_ucf,
    "lemma-ucf-completion": suite_lemma_level2_ucf_another,
    "uniqueness": suite_uniqueness,
    "desc-eval": suite_desc_eval,
    "respect-hierarchy": suite_respect_hierarchy,
    "tree-property": suite_tree_property,
    "ucf-cf3": suite_ucf_cf3,
}


def check_lemmas(bound: int = 4, seed: int = 0):
    """Run every invariant suite at a size bound; returns SuiteResults."""
    results = [
        suite_order_type(max_nodes=max(bound, 3)),
        suite_factor_order(max_nodes=min(bound, 4)),
        suite_shift(pairs=200 * bound, seed=seed),
        suite_analysis(count=50 * bound, seed=seed),
        suite_lemma_level2_ucf(max_partial_nodes=min(bound, 4),
                               max_w=min(bound + 1, 5), betas=10, seed=seed),
        suite_lemma_level2_ucf_another(max_partial_nodes=min(bound, 4),
                                       max_w=min(bound + 1, 5), betas=10, seed=seed),
        suite_uniqueness(max_dom=min(bound, 4)),
        suite_desc_eval(max_dom=min(bound, 4)),
        suite_respect_hierarchy(max_dom=min(bound, 4)),
        suite_tree_property(max_dom=min(bound, 4), seed=seed),
        # the 5 ucf cases need bases of at least 2 domain nodes to all occur
        suite_ucf_cf3(max_base_dom=min(max(bound, 2), 3)),
    ]
    return results
