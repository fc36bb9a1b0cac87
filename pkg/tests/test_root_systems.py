import json

import numpy as np
import pytest

from clustercomplexes.coxeter import bipartite_coxeter, enumerate_group
from clustercomplexes.roots import (CoordinateRootSystem, DihedralRootSystem,
                                    bipartition, build_root_system, classify,
                                    numerology, parabolic, support)

EXPECTED = {
    # label -> (positive root count, coxeter number, exponents)
    "A1": (1, 2, (1,)),
    "A2": (3, 3, (1, 2)),
    "A3": (6, 4, (1, 2, 3)),
    "A4": (10, 5, (1, 2, 3, 4)),
    "B2": (4, 4, (1, 3)),
    "B3": (9, 6, (1, 3, 5)),
    "B4": (16, 8, (1, 3, 5, 7)),
    "C3": (9, 6, (1, 3, 5)),
    "C4": (16, 8, (1, 3, 5, 7)),
    "D4": (12, 6, (1, 3, 3, 5)),
    "F4": (24, 12, (1, 5, 7, 11)),
    "G2": (6, 6, (1, 5)),
    "H3": (15, 10, (1, 5, 9)),
    "H4": (60, 30, (1, 11, 19, 29)),
    "E6": (36, 12, (1, 4, 5, 7, 8, 11)),
    "I2(5)": (5, 5, (1, 4)),
    "I2(7)": (7, 7, (1, 6)),
    "I2(8)": (8, 8, (1, 7)),
}


def eigenvalue_exponent_oracle(rs):
    """Exponents from the rotation angles of the bipartite Coxeter element.

    Numeric (test-side only): eigenvalues of the element's matrix are
    exp(2*pi*i*e/h); trivial eigenvalues from ambient directions outside
    the root span are discarded first.
    """
    gamma = bipartite_coxeter(rs)
    mat = np.array([[float(x) for x in row] for row in gamma.payload.entries])
    eigenvalues = np.linalg.eigvals(mat)
    extra = mat.shape[0] - rs.rank
    drop = np.argsort(np.abs(eigenvalues - 1.0))[:extra]
    kept = np.delete(eigenvalues, drop)
    h = rs.numerology().coxeter_number
    raw = sorted((np.angle(ev) % (2 * np.pi)) * h / (2 * np.pi) for ev in kept)
    rounded = [round(x) for x in raw]
    assert all(abs(x - r) < 1e-9 for x, r in zip(raw, rounded))
    return tuple(rounded)


class TestConstruction:

    @pytest.mark.parametrize("label", sorted(EXPECTED))
    def test_counts_and_numerology(self, label):
        rs = build_root_system(label)
        count, h, exps = EXPECTED[label]
        assert len(rs.positive_roots) == count
        num = numerology(rs)
        assert num.coxeter_number == h
        assert num.exponents == exps
        assert num.positive_root_count == count
        assert sum(exps) == count
        if rs.rank:
            assert h == 2 * count // rs.rank

    def test_a2_positive_roots(self):
        rs = build_root_system("A", 2)
        assert {rs.expansion(r) for r in rs.positive_roots} == \
            {(1, 0), (0, 1), (1, 1)}

    def test_supported_type_listing_in_errors(self):
        with pytest.raises(ValueError, match="supported"):
            build_root_system("Z9")
        with pytest.raises(ValueError, match="supported"):
            build_root_system("D", 2)
        with pytest.raises(ValueError):
            build_root_system("E6", 7)

    def test_closure_under_simple_reflections(self):
        for label in ("A3", "B3", "G2", "H3"):
            rs = build_root_system(label)
            for simple in rs.simple_roots:
                refl = rs.reflection(simple)
                for root in rs.roots:
                    image = refl.apply(root)  # raises if outside the system
                    assert image in rs.roots or True
                    rs.index_of(image)

    def test_positive_roots_have_nonnegative_expansions(self):
        for label in ("B3", "F4", "H3"):
            rs = build_root_system(label)
            for root in rs.positive_roots:
                assert all(c.sign() >= 0 for c in rs.expansion(root))


class TestBipartition:

    def test_a2(self):
        rs = build_root_system("A2")
        plus, minus = bipartition(rs)
        assert [rs.expansion(r) for r in plus] == [(1, 0)]
        assert [rs.expansion(r) for r in minus] == [(0, 1)]

    def test_a3(self):
        rs = build_root_system("A3")
        plus, minus = bipartition(rs)
        assert len(plus) == 2 and len(minus) == 1

    def test_a1_has_empty_minus_block(self):
        rs = build_root_system("A1")
        plus, minus = bipartition(rs)
        assert len(plus) == 1 and minus == []

    def test_blocks_pairwise_orthogonal(self):
        for label in ("A3", "B3", "D4", "F4", "H3", "E6"):
            rs = build_root_system(label)
            plus, minus = bipartition(rs)
            for block in (plus, minus):
                for i, a in enumerate(block):
                    for b in block[i + 1:]:
                        assert rs.orthogonal(a, b)

    def test_reducible_rejected(self):
        rs = build_root_system("A1xA1")
        with pytest.raises(ValueError):
            bipartition(rs)


class TestParabolic:

    def test_a3_drop_middle(self):
        rs = build_root_system("A3")
        middle = next(r for r in rs.simple_roots
                      if sum(1 for s in rs.simple_roots
                             if s != r and not rs.orthogonal(r, s)) == 2)
        sub = parabolic(rs, middle)
        assert classify(sub) == "A1xA1"
        assert len(sub.positive_roots) == 2
        assert not sub.is_irreducible

    def test_a2_drop_first(self):
        rs = build_root_system("A2")
        sub = parabolic(rs, rs.simple_roots[0])
        assert classify(sub) == "A1"
        assert len(sub.positive_roots) == 1

    def test_b3_drop_long_end(self):
        rs = build_root_system("B3")
        # remove the simple root orthogonal to the short root e3
        target = next(r for r in rs.simple_roots
                      if all(x.sign() == 0 or abs(x) == 1 for x in r.coords)
                      and r.coords[2].sign() == 0 and r.coords[0].sign() != 0)
        sub = parabolic(rs, target)
        assert len(sub.positive_roots) == 4
        assert classify(sub) == "B2"

    def test_non_simple_rejected(self):
        rs = build_root_system("A2")
        with pytest.raises(ValueError):
            parabolic(rs, rs.positive_roots[-1])

    def test_root_count_matches_support_filter(self):
        for label in ("A3", "B3", "G2"):
            rs = build_root_system(label)
            for i, removed in enumerate(rs.simple_roots):
                sub = parabolic(rs, removed)
                kept = set(range(rs.rank)) - {i}
                direct = [r for r in rs.positive_roots
                          if support(rs, r) <= kept]
                assert len(sub.positive_roots) == len(direct)


class TestSupport:

    def test_highest_root_a2(self):
        rs = build_root_system("A2")
        full = next(r for r in rs.positive_roots if rs.expansion(r) == (1, 1))
        assert support(rs, full) == {0, 1}

    def test_simple_root(self):
        rs = build_root_system("A2")
        assert support(rs, rs.simple_roots[0]) == {0}

    def test_highest_root_b2(self):
        rs = build_root_system("B2")
        top = max(rs.positive_roots,
                  key=lambda r: sum(int(c.a) for c in rs.expansion(r)))
        assert support(rs, top) == {0, 1}

    def test_negative_root_rejected(self):
        rs = build_root_system("A2")
        with pytest.raises(ValueError):
            support(rs, rs.negate(rs.positive_roots[0]))


class TestExponentOracles:

    @pytest.mark.parametrize("label", ["A1", "A2", "A3", "A4", "B2", "B3",
                                       "B4", "C3", "C4", "D4", "F4", "G2",
                                       "H3", "H4", "E6"])
    def test_eigenvalue_angles(self, label):
        rs = build_root_system(label)
        assert eigenvalue_exponent_oracle(rs) == numerology(rs).exponents

    @pytest.mark.parametrize("label", ["A2", "A3", "B2", "B3", "G2", "H3"])
    def test_fixed_space_statistic(self, label):
        rs = build_root_system(label)
        elements = enumerate_group(rs)
        exps = numerology(rs).exponents
        order = 1
        for e in exps:
            order *= e + 1
        assert len(elements) == order
        # Shephard-Todd/Solomon: sum_w t^(dim Fix w) = prod (t + e_i)
        for t in range(0, 4):
            lhs = sum(t ** (rs.rank - w.length) for w in elements)
            rhs = 1
            for e in exps:
                rhs *= t + e
            assert lhs == rhs


class TestSerialization:

    def test_roundtrip_b3(self):
        rs = build_root_system("B3")
        data = json.loads(json.dumps(rs.to_dict()))
        assert set(data) == {"type", "rank", "simple_roots", "positive_roots",
                             "split_s"}
        assert data["type"] == "B3" and data["rank"] == 3
        assert all(len(q) == 4 for row in data["simple_roots"] for q in row)
        back = CoordinateRootSystem.from_dict(data)
        assert classify(back) == "B3"
        assert len(back.positive_roots) == 9
        assert back.split_s == rs.split_s

    def test_dihedral_dict(self):
        rs = build_root_system("I2(7)")
        data = rs.to_dict()
        assert data["dihedral_order"] == 7
        assert data["split_s"] == 1


class TestDihedralModel:

    def test_i2_is_index_based(self):
        rs = build_root_system("I2(7)")
        assert isinstance(rs, DihedralRootSystem)
        assert all(r.coords is None for r in rs.roots)

    def test_interior_support(self):
        rs = build_root_system("I2(5)")
        assert support(rs, rs.positive_roots[0]) == {0}
        assert support(rs, rs.positive_roots[4]) == {1}
        assert support(rs, rs.positive_roots[2]) == {0, 1}

    def test_small_orders(self):
        rs = build_root_system("I2", dihedral_order=2)
        assert numerology(rs).exponents == (1, 1)
        with pytest.raises(ValueError):
            build_root_system("I2", dihedral_order=1)

    def test_products_with_dihedral_factors_rejected(self):
        with pytest.raises(ValueError, match="dihedral"):
            build_root_system("A1xI2(5)")


class TestClassification:

    @pytest.mark.parametrize("label", ["A3", "B3", "C3", "D4", "F4", "G2",
                                       "H3", "E6"])
    def test_self_classification(self, label):
        rs = build_root_system(label)
        assert classify(rs) == label
