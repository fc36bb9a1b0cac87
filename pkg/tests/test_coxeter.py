import itertools

import pytest

from clustercomplexes.coxeter import (absolute_interval, absolute_leq,
                                      bipartite_coxeter, cycles_of,
                                      enumerate_group, one_line_permutation,
                                      reflection_length, rho_sequence,
                                      total_order, typeA_absolute_leq,
                                      typeA_oracles, typeA_reflection_length)
from clustercomplexes.roots import build_root_system


def label_of(rs, root):
    sign = "" if rs.is_positive(root) else "-"
    base = root if rs.is_positive(root) else rs.negate(root)
    return sign + "[%s]" % ",".join(str(c) for c in rs.expansion(base))


class TestReflectionLength:

    def test_identity(self):
        rs = build_root_system("A2")
        assert rs.identity_element().length == 0

    def test_reflections(self):
        rs = build_root_system("B3")
        for root in rs.positive_roots:
            assert reflection_length(rs.reflection(root)) == 1

    def test_bipartite_element_a2(self):
        rs = build_root_system("A2")
        gamma = bipartite_coxeter(rs)
        assert reflection_length(gamma, "fixed_space") == 2
        assert reflection_length(gamma, "word_bfs") == 2
        assert (gamma * gamma * gamma).is_identity()  # rotation by a third

    def test_modes_agree_on_intervals(self):
        for label in ("A3", "B3"):
            rs = build_root_system(label)
            for w in absolute_interval(rs):
                assert reflection_length(w, "fixed_space") == \
                    reflection_length(w, "word_bfs")

    def test_bfs_guard(self):
        rs = build_root_system("E7")
        with pytest.raises(ValueError, match="cap"):
            reflection_length(rs.identity_element(), "word_bfs")

    def test_unknown_mode(self):
        rs = build_root_system("A1")
        with pytest.raises(ValueError):
            reflection_length(rs.identity_element(), "nope")


class TestAbsoluteOrder:

    def test_identity_below_everything(self):
        rs = build_root_system("A3")
        e = rs.identity_element()
        for w in absolute_interval(rs):
            assert absolute_leq(e, w)

    def test_reflections_below_gamma_a2(self):
        rs = build_root_system("A2")
        gamma = bipartite_coxeter(rs)
        for root in rs.positive_roots:
            assert absolute_leq(rs.reflection(root), gamma)
            assert not absolute_leq(gamma, rs.reflection(root))

    def test_partial_order_and_grading(self):
        for label in ("A2", "A3", "B3"):
            rs = build_root_system(label)
            interval = absolute_interval(rs)
            for u in interval:
                assert absolute_leq(u, u)
            for u, w in itertools.permutations(interval, 2):
                if absolute_leq(u, w) and absolute_leq(w, u):
                    raise AssertionError("antisymmetry violated")
            for u, v, w in itertools.permutations(interval, 3):
                if absolute_leq(u, v) and absolute_leq(v, w):
                    assert absolute_leq(u, w)
            # graded with rank ell: every nontrivial element covers down
            for w in interval:
                if w.length == 0:
                    continue
                assert any(absolute_leq(u, w) and u.length == w.length - 1
                           for u in interval)

    def test_prefix_exchange_property(self):
        rs = build_root_system("A3")
        interval = absolute_interval(rs)
        for v in interval:
            vi = v.inverse()
            for u in interval:
                if not absolute_leq(v, u):
                    continue
                for w in interval:
                    if absolute_leq(u, w):
                        assert absolute_leq(vi * u, vi * w)


class TestBipartiteCoxeter:

    def test_a1_is_the_reflection(self):
        rs = build_root_system("A1")
        assert bipartite_coxeter(rs) == rs.reflection(rs.positive_roots[0])

    def test_a3_is_a_four_cycle(self):
        rs = build_root_system("A3")
        gamma = bipartite_coxeter(rs)
        assert gamma.length == 3
        perm = one_line_permutation(gamma)
        assert sorted(len(c) for c in cycles_of(perm)) == [4]

    def test_reducible_composes_per_component(self):
        rs = build_root_system("A1xA1")
        gamma = bipartite_coxeter(rs)
        assert gamma.length == 2
        assert (gamma * gamma).is_identity()

    def test_block_product_order_independent(self):
        # within each orthogonal block the reflections commute
        for label in ("A3", "B3", "D4"):
            rs = build_root_system(label)
            s = rs.split_s
            plus = [rs.reflection(a) for a in rs.simple_roots[:s]]
            minus = [rs.reflection(a) for a in rs.simple_roots[s:]]
            for block in (plus, minus):
                for perm in itertools.permutations(block):
                    prod_a = rs.identity_element()
                    prod_b = rs.identity_element()
                    for x, y in zip(block, perm):
                        prod_a = prod_a * x
                        prod_b = prod_b * y
                    assert prod_a == prod_b


class TestRhoSequence:

    def test_a2_values(self):
        rs = build_root_system("A2")
        rho = rho_sequence(rs)
        assert [label_of(rs, rho[i]) for i in (1, 2, 3, 4, 0)] == \
            ["[1,0]", "[1,1]", "[0,1]", "-[1,0]", "-[0,1]"]

    def test_a2_total_order(self):
        rs = build_root_system("A2")
        order = total_order(rs)
        assert [label_of(rs, r) for r in order] == \
            ["-[0,1]", "[1,0]", "[1,1]", "[0,1]", "-[1,0]"]

    def test_a1_window(self):
        rs = build_root_system("A1")
        order = total_order(rs)
        assert [label_of(rs, r) for r in order] == ["[1]", "-[1]"]

    def test_window_partitions(self):
        for label in ("A3", "B3", "G2", "I2(7)", "H3"):
            rs = build_root_system(label)
            order = list(total_order(rs))
            assert len(order) == len(rs.positive_roots) + rs.rank
            n, s = rs.rank, rs.split_s
            head, mid, tail = order[:n - s], order[n - s:-s or None], order[-s:]
            assert all(not rs.is_positive(r) for r in head)
            assert all(rs.is_positive(r) for r in mid)
            assert all(not rs.is_positive(r) for r in tail)

    def test_reducible_rejected(self):
        rs = build_root_system("A1xA1")
        with pytest.raises(ValueError):
            rho_sequence(rs)


class TestTypeAOracles:

    def test_three_cycle_length(self):
        length, _ = typeA_oracles()
        assert length((1, 2, 0)) == 2

    def test_deletion_examples(self):
        _, leq = typeA_oracles()
        assert leq((1, 0, 2, 3), (1, 2, 0, 3))        # (12) below (123)
        assert leq((1, 0, 3, 2), (1, 2, 3, 0))        # (12)(34) below (1234)
        assert leq((2, 1, 0, 3), (1, 2, 3, 0))        # (13) below (1234)
        assert not leq((2, 3, 0, 1), (1, 2, 3, 0))    # (13)(24) crosses
        assert not leq((2, 0, 1, 3), (1, 2, 3, 0))    # (132) reversed cycle

    def test_s4_exhaustive_agreement(self):
        rs = build_root_system("A3")
        group = enumerate_group(rs)
        assert len(group) == 24
        for w in group:
            assert typeA_reflection_length(one_line_permutation(w)) == w.length
        for u in group:
            pu = one_line_permutation(u)
            for w in group:
                assert typeA_absolute_leq(pu, one_line_permutation(w)) == \
                    absolute_leq(u, w)

    def test_mixed_sizes_rejected(self):
        with pytest.raises(ValueError):
            typeA_absolute_leq((0, 1), (0, 1, 2))


class TestIntervalEnumeration:

    def test_noncrossing_cardinalities(self):
        # Catalan counts for the noncrossing partition intervals
        assert len(absolute_interval(build_root_system("A2"))) == 5
        assert len(absolute_interval(build_root_system("A3"))) == 14
        assert len(absolute_interval(build_root_system("B2"))) == 6
        assert len(absolute_interval(build_root_system("B3"))) == 20
        assert len(absolute_interval(build_root_system("I2(7)"))) == 9

    def test_interval_below_reflection(self):
        rs = build_root_system("A2")
        t = rs.reflection(rs.positive_roots[0])
        assert len(absolute_interval(rs, t)) == 2
