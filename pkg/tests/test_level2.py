import pytest

from uctk.errors import (BadDescription, DegreeZeroHasNoCompletion,
                         InvalidElement, MissingEntry, NoTreeFound,
                         NotCompletionAt, NotRespecting, TowerViolation)
from uctk.grammar import parse_l1, parse_l2, parse_uord
from uctk.level1 import EMPTY_TREE
from uctk.level2 import (CARD1_L2, MINUS_ONE, LevelLe2Tree, QDescription,
                         Rep2Element, enumerate_le2_trees, evaluate_description,
                         expand_potential, generate_respecting_tuple,
                         is_regular_description, make_rep2, q_descriptions,
                         q_potential, recover_tree, rep2_compare,
                         rep2_from_payload, respects_le2, s2_member,
                         typical_trees, validate_level2,
                         validate_partial_le1, validate_partial_tower_le1,
                         weakly_respects_le2)
from uctk.ordinals import OMEGA, U1


def u(text):
    return parse_uord(text)


def ct(text):
    return parse_uord(text).tail


Q0, Q1, Q20, Q21 = typical_trees()
KEY = ((0,),)


def tup(*pairs):
    return dict(pairs)


def q21_tuple(second="u1*2"):
    return {(2, ()): U1, (2, KEY): u(second)}


class TestPartialLevel1:
    def test_completion_examples(self):
        assert validate_partial_le1(EMPTY_TREE, (0,)).completion() == \
            parse_l1("{(0)}")
        assert validate_partial_le1(parse_l1("{(0)}"), (0, 0)).completion() == \
            parse_l1("{(0) (0 0)}")
        with pytest.raises(DegreeZeroHasNoCompletion):
            validate_partial_le1(parse_l1("{(0)}"), MINUS_ONE).completion()

    def test_tower_classification(self):
        one = validate_partial_le1(EMPTY_TREE, (0,))
        t = validate_partial_tower_le1([one])
        assert not t.is_continuous()
        assert t.compress().tree == EMPTY_TREE
        assert t.compress().pvec == ((0,),)

        two = validate_partial_le1(parse_l1("{(0)}"), (0, 0))
        t2 = validate_partial_tower_le1([one, two])
        pot = t2.compress()
        assert pot.tree == parse_l1("{(0)}") and pot.pvec == ((0,), (0, 0))

        t3 = validate_partial_tower_le1([one], final_tree=parse_l1("{(0)}"))
        assert t3.is_continuous()
        assert t3.compress().tree == parse_l1("{(0)}")
        assert t3.compress().pvec == ((0,),)

    def test_completion_chain_checked(self):
        one = validate_partial_le1(EMPTY_TREE, (0,))
        with pytest.raises(NotCompletionAt):
            validate_partial_tower_le1([one, one])

    def test_expand_round_trip(self):
        one = validate_partial_le1(EMPTY_TREE, (0,))
        two = validate_partial_le1(parse_l1("{(0)}"), (0, 0))
        for tower in (validate_partial_tower_le1([one, two]),
                      validate_partial_tower_le1([one], parse_l1("{(0)}"))):
            again = expand_potential(tower.compress())
            assert again.compress() == tower.compress()


class TestValidateLevel2:
    def test_card_one(self):
        assert CARD1_L2.cardinality() == 1

    def test_q21_valid(self):
        t = parse_l2("() -> ({}, (0)); ((0)) -> ({(0)}, (0 0))")
        assert t == Q21.t2

    def test_tower_violation(self):
        with pytest.raises(TowerViolation):
            validate_level2({(): (EMPTY_TREE, (0,)),
                             KEY: (parse_l1("{(0) (1)}"), (0, 0))})

    def test_typical_trees(self):
        assert Q1.t1 == parse_l1("{(0)}") and Q1.t2.dom() == [()]
        assert Q0.t1 == EMPTY_TREE and Q0.t2.dom() == [()]
        assert Q20.t2.label(KEY) == (parse_l1("{(0)}"), MINUS_ONE)
        assert Q21.t2.label(KEY) == (parse_l1("{(0)}"), (0, 0))


class TestDescriptions:
    def test_q0(self):
        items = q_descriptions(Q0)
        assert all(d == 2 for d, _ in items)
        assert (2, QDescription((), EMPTY_TREE, ((0,),))) in items

    def test_q21(self):
        items = q_descriptions(Q21)
        disc = QDescription(KEY, parse_l1("{(0)}"), ((0,), (0, 0)))
        cont = QDescription(KEY + (MINUS_ONE,), parse_l1("{(0) (0 0)}"),
                            ((0,), (0, 0)))
        assert (2, disc) in items and (2, cont) in items

    def test_q1_has_level1_side(self):
        assert (1, (0,)) in q_descriptions(Q1)

    def test_degree_zero_stage_has_no_minus_description(self):
        items = q_descriptions(Q20)
        assert not any(d == 2 and desc.q == KEY + (MINUS_ONE,)
                       for d, desc in items)

    def test_regularity_classifier(self):
        disc = QDescription(KEY, parse_l1("{(0)}"), ((0,), (0, 0)))
        cont = QDescription(KEY + (MINUS_ONE,), parse_l1("{(0) (0 0)}"),
                            ((0,), (0, 0)))
        ext = QDescription(KEY, parse_l1("{(0) (0 0)}"), ((0,), (0, 0)),
                           extended=True)
        assert is_regular_description(Q21, (2, disc))
        assert not is_regular_description(Q21, (2, cont))
        assert is_regular_description(Q21, (2, ext))


class TestRep2:
    def test_top_is_greatest(self):
        top = Rep2Element.top()
        below = make_rep2(Q21, (MINUS_ONE,), {(0,): ct("w")})
        assert rep2_compare(Q21, below, top) == -1

    def test_first_ordinal_slot_decides(self):
        a = make_rep2(Q21, KEY + (MINUS_ONE,), {(0,): ct("w*2"), (0, 0): ct("w")})
        b = make_rep2(Q21, KEY + (MINUS_ONE,), {(0,): ct("w*3"), (0, 0): ct("w")})
        assert rep2_compare(Q21, a, b) == -1

    def test_beta_minus_one_cofinal(self):
        xs = [make_rep2(Q21, KEY, {(0,): ct("w")}),
              make_rep2(Q21, KEY + (MINUS_ONE,), {(0,): ct("w*2"), (0, 0): ct("w")}),
              make_rep2(Q20, (MINUS_ONE,), {(0,): ct("w^2")})]
        for x in xs:
            beta = x.payload[0] + OMEGA
            fence = make_rep2(Q21, (MINUS_ONE,), {(0,): beta})
            assert rep2_compare(Q21, x, fence) == -1
            assert rep2_compare(Q21, fence, Rep2Element.top()) == -1

    def test_level1_part_below_level2_part(self):
        from uctk.level1 import Rep1Element
        one = LevelLe2Tree(parse_l1("{(0)}"), Q21.t2)
        x = Rep2Element(1, Rep1Element((0,), 3))
        assert rep2_compare(one, x, Rep2Element.top()) == -1

    def test_degree_zero_pending_is_natural(self):
        elt = make_rep2(Q20, KEY + (MINUS_ONE,), {(0,): ct("w"), MINUS_ONE: 3})
        assert elt.payload == (ct("w"), (0,), 3, MINUS_ONE)
        with pytest.raises(InvalidElement):
            make_rep2(Q20, KEY + (MINUS_ONE,), {(0,): ct("w"), MINUS_ONE: ct("w")})

    def test_payload_round_trip(self):
        elt = make_rep2(Q21, KEY + (MINUS_ONE,), {(0,): ct("w*2"), (0, 0): ct("w")})
        assert rep2_from_payload(Q21, elt.payload) == elt
        with pytest.raises(InvalidElement):
            rep2_from_payload(Q21, (ct("w"), (1,)))


class TestRespect:
    def test_spec_examples(self):
        assert respects_le2(Q21, q21_tuple("u1*2"))
        v = respects_le2(Q20, q21_tuple("u1*2"))
        assert not v and "potential-tower" in v.clause
        assert respects_le2(Q20, q21_tuple("u1*w"))
        assert not respects_le2(Q21, q21_tuple("u1*w"))

    def test_root_must_be_u1(self):
        assert not respects_le2(Q0, {(2, ()): u("u1*2")})
        assert respects_le2(Q0, {(2, ()): U1})

    def test_missing_entry(self):
        with pytest.raises(MissingEntry):
            respects_le2(Q21, {(2, ()): U1})

    def test_weak_examples(self):
        assert weakly_respects_le2(Q21, q21_tuple("u1*2"))
        assert not weakly_respects_le2(Q21, q21_tuple("u2"))

    def test_respects_implies_weak_on_generated(self):
        for tree in enumerate_le2_trees(3):
            t = generate_respecting_tuple(tree)
            if t is None:
                continue
            assert respects_le2(tree, t)
            assert weakly_respects_le2(tree, t)

    def test_sibling_order(self):
        two = validate_level2({(): (EMPTY_TREE, (0,)),
                               KEY: (parse_l1("{(0)}"), (0, 0)),
                               ((1,),): (parse_l1("{(0)}"), (0, 0))})
        tree = LevelLe2Tree(EMPTY_TREE, two)
        good = {(2, ()): U1, (2, KEY): u("u1*2"), (2, ((1,),)): u("u1*3")}
        bad = {(2, ()): U1, (2, KEY): u("u1*3"), (2, ((1,),)): u("u1*2")}
        assert respects_le2(tree, good)
        v = respects_le2(tree, bad)
        assert not v and "sibling" in v.clause


class TestEvaluate:
    def test_continuous_value(self):
        pot = q_potential(Q21.t2, KEY + (MINUS_ONE,))
        d = QDescription(KEY + (MINUS_ONE,), pot.tree, pot.pvec)
        assert evaluate_description(Q21, q21_tuple(), (2, d)) == u("u2 + u1")

    def test_discontinuous_lookup(self):
        pot = q_potential(Q21.t2, KEY)
        d = QDescription(KEY, pot.tree, pot.pvec)
        assert evaluate_description(Q21, q21_tuple(), (2, d)) == u("u1*2")

    def test_constant_description(self):
        d = QDescription((), EMPTY_TREE, ((0,),))
        assert evaluate_description(Q21, q21_tuple(), (2, d)) == U1

    def test_extended_embeds(self):
        ext = QDescription(KEY, parse_l1("{(0) (0 0)}"), ((0,), (0, 0)),
                           extended=True)
        assert evaluate_description(Q21, q21_tuple(), (2, ext)) == u("u2*2")

    def test_not_respecting_rejected(self):
        d = QDescription((), EMPTY_TREE, ((0,),))
        with pytest.raises(NotRespecting):
            evaluate_description(Q21, q21_tuple("u2"), (2, d))

    def test_bad_description(self):
        with pytest.raises(BadDescription):
            evaluate_description(Q21, q21_tuple(),
                                 (2, QDescription(((1,),), EMPTY_TREE, ())))


class TestRecover:
    def test_spec_examples(self):
        assert recover_tree(EMPTY_TREE, [(), KEY], q21_tuple("u1*2")) == Q21
        assert recover_tree(EMPTY_TREE, [(), KEY], q21_tuple("u1*w")) == Q20
        with pytest.raises(NoTreeFound):
            recover_tree(EMPTY_TREE, [(), KEY], q21_tuple("u2"))

    def test_exhaustive_small(self):
        for tree in enumerate_le2_trees(3):
            t = generate_respecting_tuple(tree)
            if t is None:
                continue
            assert recover_tree(tree.t1, tree.t2.dom(), t) == tree


class TestS2:
    def test_spec_examples(self):
        assert s2_member([CARD1_L2], [U1], "respects")
        assert s2_member([CARD1_L2], [U1], "weak")
        tower = [CARD1_L2, Q21.t2]
        assert s2_member(tower, [U1, u("u1*2")], "respects")
        assert s2_member(tower, [U1, u("u1*2")], "weak")
        assert not s2_member(tower, [U1, u("u2")], "respects")
        assert not s2_member(tower, [U1, u("u2")], "weak")

    def test_empty_node(self):
        assert s2_member([], [], "respects")


class TestDeepBranch:
    """A three-stage chain branch with hand-computed values."""

    def _tree(self):
        deep = validate_level2({
            (): (EMPTY_TREE, (0,)),
            KEY: (parse_l1("{(0)}"), (0, 0)),
            ((0,), (0,)): (parse_l1("{(0) (0 0)}"), (0, 0, 0)),
        })
        return LevelLe2Tree(EMPTY_TREE, deep)

    def _good(self):
        return {(2, ()): U1, (2, KEY): u("u1*2"),
                (2, ((0,), (0,))): u("u2 + u1*3")}

    def test_respects_with_approximation_chaining(self):
        tree = self._tree()
        assert respects_le2(tree, self._good())
        # the next approximation of the deep value is u1*2, not u1*3
        bad = dict(self._good())
        bad[(2, ((0,), (0,)))] = u("u2*2 + u1*3")
        v = respects_le2(tree, bad)
        assert not v and "approximation" in v.clause

    def test_continuous_value_at_depth_two(self):
        tree = self._tree()
        q = ((0,), (0,), MINUS_ONE)
        pot = q_potential(tree.t2, q)
        d = QDescription(q, pot.tree, pot.pvec)
        assert evaluate_description(tree, self._good(), (2, d)) == \
            u("u3 + u2*2 + u1")

    def test_recover_at_depth_three(self):
        tree = self._tree()
        assert recover_tree(EMPTY_TREE, tree.t2.dom(), self._good()) == tree

    def test_s2_three_stage_tower(self):
        tree = self._tree()
        towers = [CARD1_L2,
                  validate_level2(dict(list(tree.t2.entries)[:2])),
                  tree.t2]
        alphas = [U1, u("u1*2"), u("u2 + u1*3")]
        assert s2_member(towers, alphas, "respects")
        assert s2_member(towers, alphas, "weak")
        assert not s2_member(towers, [U1, u("u1*2"), u("u3")], "weak")


class TestGenerator:
    def test_unrealizable_off_chain_pending(self):
        # a pending node hanging off the chain needs non-additive ordinals
        t2 = validate_level2({
            (): (EMPTY_TREE, (0,)),
            KEY: (parse_l1("{(0)}"), (0, 0)),
            ((0,), (0,)): (parse_l1("{(0) (0 0)}"), (0, 1)),
        })
        assert generate_respecting_tuple(LevelLe2Tree(EMPTY_TREE, t2)) is None

    def test_realizable_counts(self):
        trees = enumerate_le2_trees(4)
        realizable = [t for t in trees
                      if generate_respecting_tuple(t) is not None]
        assert len(realizable) >= 10
        assert len(realizable) < len(trees)
