import random

import pytest

from uctk.analysis import (analyze, chain_tree, factor_to_shift,
                           recover_from_analysis, tree_embed, tree_embed_sup)
from uctk.errors import BelowOmega1, NotALimit, NotSubtree, OutOfRange
from uctk.grammar import parse_l1, parse_uord
from uctk.lemmas import EvalOracle, cf_oracle, rand_limit_uord
from uctk.level1 import FactorMap1
from uctk.ordinals import Cofinality, cf_l


def u(text):
    return parse_uord(text)


class TestFactorToShift:
    def test_rank_example(self):
        p, w = parse_l1("{(0)}"), parse_l1("{(0) (0 0)}")
        fm = FactorMap1(p, w, (((0,), (0,)),))
        assert factor_to_shift(fm).image == (2, 3)
        fm2 = FactorMap1(p, w, (((0,), (0, 0)),))
        assert factor_to_shift(fm2).image == (1, 3)

    def test_identity(self):
        p = parse_l1("{(0) (0 0)}")
        fm = FactorMap1(p, p, (((0, 0), (0, 0)), ((0,), (0,))))
        assert factor_to_shift(fm).image == (1, 2, 3)


class TestTreeEmbed:
    def test_examples(self):
        p, p2 = parse_l1("{(0)}"), parse_l1("{(0) (0 0)}")
        assert tree_embed(p, p2, u("u1*2")) == u("u2*2")
        assert tree_embed_sup(p, p2, u("u1*2")) == u("u2 + u1")
        assert tree_embed(p, p, u("u1*2")) == u("u1*2")
        assert tree_embed_sup(p, p, u("u1*2")) == u("u1*2")

    def test_constant_seed_is_allowed(self):
        # the constant description seed u_{card+1} maps to u_{card'+1}
        p, p2 = parse_l1("{}"), parse_l1("{(0)}")
        assert tree_embed(p, p2, u("u1")) == u("u2")

    def test_errors(self):
        p, p2 = parse_l1("{(0)}"), parse_l1("{(0) (0 0)}")
        with pytest.raises(NotSubtree):
            tree_embed(p2, p, u("u1"))
        with pytest.raises(OutOfRange):
            tree_embed(p, p2, u("u3"))


class TestAnalyze:
    def test_u2_is_essentially_continuous(self):
        an = analyze(u("u2"), parse_l1("{(0) (0 0)}"))
        assert an.signature == ((0,),)
        assert [str(s) for s in an.signature_seeds] == ["u2"]
        assert an.essentially_continuous
        assert an.uniform_cofinality == Cofinality.u(2)
        # continuous-type potential tower: the pending chain is completed
        assert an.potential_tower.tree == chain_tree(1)
        assert an.potential_tower.pvec == ((0,),)
        assert an.potential_tower.is_continuous()

    def test_u1_times_2(self):
        an = analyze(u("u1*2"), parse_l1("{(0)}"))
        assert an.signature == ((0,),)
        assert not an.essentially_continuous
        assert an.uniform_cofinality == Cofinality.u(1)
        assert an.potential_tower.tree == chain_tree(1)
        assert an.potential_tower.pvec == ((0,), (0, 0))
        assert [str(x) for x in an.approximation_sequence] == ["u1", "u1*2"]

    def test_u1_times_omega(self):
        an = analyze(u("u1*w"), parse_l1("{(0)}"))
        assert an.signature == ((0,),)
        assert not an.essentially_continuous
        assert an.uniform_cofinality == Cofinality.omega()
        assert an.potential_tower.pvec == ((0,), -1)

    def test_two_level_approximations(self):
        an = analyze(u("u3*2 + u1*5 + w"), parse_l1("{(0) (0 0) (0 0 0)}"))
        assert [str(x) for x in an.approximation_sequence] == \
            ["u1", "u1*3", "u2*2 + u1*5 + w"]
        assert an.signature == ((0,), (0, 0, 0))

    def test_errors(self):
        with pytest.raises(BelowOmega1):
            analyze(u("w*2"), parse_l1("{(0)}"))
        with pytest.raises(NotALimit):
            analyze(u("u1 + 1"), parse_l1("{(0)}"))
        with pytest.raises(OutOfRange):
            analyze(u("u2"), parse_l1("{(0)}"))

    def test_recovery(self):
        rng = random.Random(5)
        tree = parse_l1("{(0) (0 0) (0 1) (1)}")
        for _ in range(100):
            b = rand_limit_uord(rng, max_level=4)
            if b.is_countable():
                continue
            an = analyze(b, tree)
            assert recover_from_analysis(an) == b
            assert an.uniform_cofinality == cf_l(b) == cf_oracle(b)
            assert an.potential_tower.is_continuous() == an.essentially_continuous

    def test_oracle_rejects_wrong_signature(self):
        b = u("u2 + u1")
        tree = parse_l1("{(0) (0 0)}")
        oracle = EvalOracle(b, tree)
        an = analyze(b, tree)
        assert oracle.signature_holds(an.signature)
        assert not oracle.signature_holds(an.signature[:1])
        assert not oracle.signature_holds(tuple(reversed(an.signature)))

    def test_oracle_continuity_matches(self):
        tree = parse_l1("{(0) (0 0)}")
        for text, expected in [("u2", True), ("u2 + u1", True),
                               ("u2*2", False), ("u2 + u1*2", False),
                               ("u2 + w", False), ("u2*w", False)]:
            an = analyze(u(text), tree)
            oracle = EvalOracle(u(text), tree)
            assert an.essentially_continuous == oracle.essentially_continuous() \
                == expected, text

    def test_factoring_targets_signature(self):
        b = u("u3 + u1*2")
        tree = parse_l1("{(0) (0 0) (0 1)}")
        an = analyze(b, tree)
        sigma = an.factoring_map
        assert [sigma(p) for p in ((0,), (0, 0))] == list(an.signature)
