import random

import pytest

from chaingroup import intmat
from chaingroup.homology import (
    CYCLIC,
    NOT_RECOGNIZED,
    CentralExtElement,
    CurveClass,
    CyclicVerdict,
    SkewLattice,
    SurfaceSig,
    TransvectionTriple,
    apply_transvection,
    build_chain,
    chain_product_square,
    check_transvection_pair,
    extract_triple,
    format_chain,
    format_matrix,
    is_pairing_preserving,
    lift_adjust,
    monodromy_rep,
    parse_chain,
    parse_matrix,
    standard_lattice,
    transvection_matrix,
)


def random_primitive(rng, rank):
    while True:
        v = [rng.randint(-2, 2) for _ in range(rank)]
        if any(v):
            return CurveClass(intmat.primitive(v))


def random_symplectic(lat, rng, steps=6):
    s = intmat.identity(lat.rank)
    for _ in range(steps):
        c = random_primitive(rng, lat.rank)
        s = intmat.mat_mul(s, transvection_matrix(lat, c, rng.choice([1, -1])))
    return s


class TestSurfaceSig:
    def test_euler(self):
        assert SurfaceSig(2, 0).euler() == -2
        assert SurfaceSig(0, 3).euler() == -1

    def test_rejects_positive_euler(self):
        with pytest.raises(ValueError):
            SurfaceSig(0, 2)
        with pytest.raises(ValueError):
            SurfaceSig(1, 0)


class TestStandardLattice:
    def test_genus_one(self):
        assert standard_lattice(1).pairing == ((0, 1), (-1, 0))

    def test_genus_two_blocks(self):
        J = standard_lattice(2).pairing
        assert J[0][1] == 1 and J[1][0] == -1
        assert J[2][3] == 1 and J[3][2] == -1
        assert J[0][2] == J[0][3] == J[1][2] == J[1][3] == 0

    def test_bilinearity(self):
        lat = standard_lattice(2)
        assert lat.pair((1, 0, 1, 0), (0, 1, 0, 0)) == 1

    def test_genus_zero_unsupported(self):
        with pytest.raises(ValueError):
            standard_lattice(0)

    def test_pairing_validation(self):
        with pytest.raises(ValueError):
            SkewLattice(2, ((0, 1), (1, 0)))
        with pytest.raises(ValueError):
            SkewLattice(2, ((1, 1), (-1, 0)))


class TestCurveClass:
    def test_zero_allowed(self):
        assert CurveClass((0, 0)).is_zero()

    def test_primitive_required(self):
        with pytest.raises(ValueError):
            CurveClass((2, 4))


class TestBuildChain:
    def test_boundary_case_exists(self):
        lat = standard_lattice(1)
        assert len(build_chain(lat, 3)) == 3

    def test_too_long_rejected(self):
        with pytest.raises(ValueError):
            build_chain(standard_lattice(1), 4)

    def test_two_classes(self):
        lat = standard_lattice(2)
        c = build_chain(lat, 2)
        assert abs(lat.pair(c[0].v, c[1].v)) == 1

    def test_pattern_for_all_lengths(self):
        for g in (1, 2, 3, 4):
            lat = standard_lattice(g)
            for k in range(1, 2 * g + 2):
                chain = build_chain(lat, k)
                for i in range(len(chain)):
                    for j in range(i + 1, len(chain)):
                        p = lat.pair(chain[i].v, chain[j].v)
                        assert abs(p) == 1 if j == i + 1 else p == 0


class TestTransvection:
    def test_fixes_its_class(self):
        lat = standard_lattice(2)
        c = CurveClass((1, 0, -1, 1))
        m = transvection_matrix(lat, c, 1)
        assert intmat.mat_vec(m, c.v) == c.v

    def test_zero_class_gives_identity(self):
        lat = standard_lattice(2)
        assert transvection_matrix(lat, CurveClass((0,) * 4), 1) == intmat.identity(4)

    def test_explicit_genus_one(self):
        lat = standard_lattice(1)
        assert transvection_matrix(lat, CurveClass((1, 0)), 1) == ((1, -1), (0, 1))

    def test_preserves_pairing_and_inverts(self):
        rng = random.Random(5)
        lat = standard_lattice(3)
        for _ in range(25):
            c = random_primitive(rng, 6)
            m_pos = transvection_matrix(lat, c, 1)
            m_neg = transvection_matrix(lat, c, -1)
            assert is_pairing_preserving(lat, m_pos)
            assert intmat.mat_mul(m_pos, m_neg) == intmat.identity(6)

    def test_pairing_criterion(self):
        lat = standard_lattice(2)
        rng = random.Random(9)
        for _ in range(40):
            a, b = random_primitive(rng, 4), random_primitive(rng, 4)
            p = lat.pair(a.v, b.v)
            ta = transvection_matrix(lat, a, 1)
            tb = transvection_matrix(lat, b, 1)
            if p == 0:
                assert intmat.mat_mul(ta, tb) == intmat.mat_mul(tb, ta)
            elif abs(p) == 1:
                lhs = intmat.mat_mul(intmat.mat_mul(ta, tb), ta)
                rhs = intmat.mat_mul(intmat.mat_mul(tb, ta), tb)
                assert lhs == rhs


class TestMonodromyRep:
    def test_single_class(self):
        lat = standard_lattice(2)
        ms = monodromy_rep(lat, build_chain(lat, 1), 1)
        assert len(ms) == 1

    def test_relations_hold(self):
        lat = standard_lattice(2)
        monodromy_rep(lat, build_chain(lat, 3), 1)

    def test_negative_sign_gives_inverses(self):
        lat = standard_lattice(2)
        chain = build_chain(lat, 3)
        pos = monodromy_rep(lat, chain, 1)
        neg = monodromy_rep(lat, chain, -1)
        for p, q in zip(pos, neg):
            assert intmat.mat_mul(p, q) == intmat.identity(4)

    def test_invalid_chain(self):
        lat = standard_lattice(2)
        bad = [CurveClass((1, 0, 0, 0)), CurveClass((0, 0, 1, 0))]
        with pytest.raises(ValueError):
            monodromy_rep(lat, bad, 1)


class TestChainProductSquare:
    def test_even_is_minus_identity_on_span(self):
        for g, k in ((2, 2), (2, 4), (3, 6)):
            lat = standard_lattice(g)
            chain = build_chain(lat, k)
            sq = chain_product_square(lat, chain)
            for c in chain:
                assert intmat.mat_vec(sq, c.v) == tuple(-x for x in c.v)

    def test_even_k2_fourth_power_is_identity(self):
        lat = standard_lattice(2)
        sq = chain_product_square(lat, build_chain(lat, 2))
        fourth = intmat.mat_mul(sq, sq)
        assert fourth == intmat.identity(4)

    def test_odd_fixes_chain_classes(self):
        for g, k in ((2, 3), (2, 5), (3, 7)):
            lat = standard_lattice(g)
            chain = build_chain(lat, k)
            sq = chain_product_square(lat, chain)
            for c in chain:
                assert intmat.mat_vec(sq, c.v) == c.v

    def test_commutes_with_chain_transvections(self):
        lat = standard_lattice(3)
        chain = build_chain(lat, 5)
        sq = chain_product_square(lat, chain)
        for c in chain:
            for eps in (1, -1):
                t = transvection_matrix(lat, c, eps)
                assert intmat.mat_mul(sq, t) == intmat.mat_mul(t, sq)


class TestApplyTransvection:
    def test_identity_direction(self):
        lat = standard_lattice(2)
        rep = monodromy_rep(lat, build_chain(lat, 3), 1)
        assert apply_transvection(lat, rep, intmat.identity(4)) == rep

    def test_minus_identity_direction(self):
        lat = standard_lattice(2)
        rep = monodromy_rep(lat, build_chain(lat, 3), 1)
        out = apply_transvection(lat, rep, intmat.mat_scale(intmat.identity(4), -1))
        lhs = intmat.mat_mul(intmat.mat_mul(out[0], out[1]), out[0])
        rhs = intmat.mat_mul(intmat.mat_mul(out[1], out[0]), out[1])
        assert lhs == rhs

    def test_orthogonal_transvection_accepted(self):
        lat = standard_lattice(3)
        chain = build_chain(lat, 3)
        rep = monodromy_rep(lat, chain, 1)
        rows = tuple(tuple(intmat.mat_vec(lat.pairing, c.v)) for c in chain)
        u = CurveClass(intmat.primitive(intmat.kernel_basis(rows)[0]))
        v = transvection_matrix(lat, u, 1)
        apply_transvection(lat, rep, v)

    def test_non_commuting_rejected(self):
        lat = standard_lattice(2)
        chain = build_chain(lat, 3)
        rep = monodromy_rep(lat, chain, 1)
        bad = transvection_matrix(lat, CurveClass((0, 1, 0, 0)), 1)
        with pytest.raises(ValueError):
            apply_transvection(lat, rep, bad)


class TestExtractTriple:
    @pytest.mark.parametrize("g", [3, 4])
    def test_round_trip_randomized(self, g):
        rng = random.Random(2024 + g)
        done = 0
        while done < 100:
            lat = standard_lattice(g)
            k = rng.randint(5, 2 * g + 1)
            s = random_symplectic(lat, rng)
            chain = [
                CurveClass(intmat.primitive(intmat.mat_vec(s, c.v)))
                for c in build_chain(lat, k)
            ]
            norm = [intmat.sign_normalized(c.v) for c in chain]
            if len(set(norm)) != len(norm):
                continue
            eps = rng.choice([1, -1])
            rep = monodromy_rep(lat, chain, eps)
            direction = _random_direction(lat, chain, rng)
            ms = apply_transvection(lat, rep, direction)
            res = extract_triple(lat, ms)
            assert isinstance(res, TransvectionTriple)
            assert res.epsilon == eps
            assert [c.v for c in res.chain] == norm
            assert res.direction == direction
            done += 1

    def test_all_equal_is_cyclic(self):
        lat = standard_lattice(3)
        res = extract_triple(lat, [intmat.identity(6)] * 5)
        assert isinstance(res, CyclicVerdict)

    def test_non_commuting_direction_not_recognized(self):
        lat = standard_lattice(3)
        rep = monodromy_rep(lat, build_chain(lat, 5), 1)
        bad = transvection_matrix(lat, CurveClass((0, 0, 0, 0, 0, 1)), 1)
        ms = [intmat.mat_mul(m, bad) for m in rep]
        res = extract_triple(lat, ms)
        assert isinstance(res, type(NOT_RECOGNIZED))

    def test_needs_five_matrices(self):
        lat = standard_lattice(3)
        with pytest.raises(ValueError):
            extract_triple(lat, [intmat.identity(6)] * 4)


def _random_direction(lat, chain, rng):
    kind = rng.choice(["id", "neg", "orth"])
    if kind == "id":
        return intmat.identity(lat.rank)
    if kind == "neg":
        return intmat.mat_scale(intmat.identity(lat.rank), -1)
    rows = tuple(tuple(intmat.mat_vec(lat.pairing, c.v)) for c in chain)
    basis = intmat.kernel_basis(rows)
    if not basis:
        return intmat.identity(lat.rank)
    u = CurveClass(intmat.primitive(basis[rng.randrange(len(basis))]))
    return transvection_matrix(lat, u, rng.choice([1, -1]))


def _elem(mat, twist):
    return CentralExtElement(mat, twist)


class TestCentralExtension:
    def test_multiplication_adds_twists(self):
        lat = standard_lattice(1)
        m = transvection_matrix(lat, CurveClass((1, 0)), 1)
        a = _elem(m, (1, 0))
        b = _elem(intmat.identity(2), (0, 2))
        assert (a * b).twist == (1, 2)
        assert (a * a.inverse()).mat == intmat.identity(2)

    def test_check_pair_identity_direction(self):
        lat = standard_lattice(1)
        m = transvection_matrix(lat, CurveClass((1, 0)), 1)
        r1 = [_elem(m, (0,)), _elem(intmat.identity(2), (0,))]
        g = check_transvection_pair(r1, r1)
        assert g.is_central() and g.twist == (0,)

    def test_check_pair_common_twist(self):
        lat = standard_lattice(1)
        m = transvection_matrix(lat, CurveClass((1, 0)), 1)
        r1 = [_elem(m, (0,)), _elem(intmat.identity(2), (1,))]
        r2 = [e * _elem(intmat.identity(2), (3,)) for e in r1]
        g = check_transvection_pair(r1, r2)
        assert g.twist == (3,)

    def test_check_pair_projection_mismatch(self):
        r1 = [_elem(intmat.identity(2), (0,))]
        r2 = [_elem(((1, 1), (0, 1)), (0,))]
        with pytest.raises(ValueError):
            check_transvection_pair(r1, r2)

    def test_check_pair_unequal_defects(self):
        r1 = [_elem(intmat.identity(2), (0,)), _elem(intmat.identity(2), (0,))]
        r2 = [_elem(intmat.identity(2), (1,)), _elem(intmat.identity(2), (2,))]
        with pytest.raises(ValueError):
            check_transvection_pair(r1, r2)


class TestLiftAdjust:
    def _exact_lifts(self, g=2, k=3):
        lat = standard_lattice(g)
        rep = monodromy_rep(lat, build_chain(lat, k), 1)
        return [CentralExtElement(m, (0, 0)) for m in rep]

    def test_exact_input_unchanged(self):
        lifts = self._exact_lifts()
        assert lift_adjust(lifts) == lifts

    def test_idempotent(self):
        lifts = self._exact_lifts()
        once = lift_adjust(lifts)
        assert lift_adjust(once) == once

    def test_single_perturbed_twist_corrected(self):
        lifts = self._exact_lifts(g=3, k=4)
        z = CentralExtElement(intmat.identity(6), (5, 0))
        perturbed = [lifts[0], lifts[1] * z, lifts[2], lifts[3]]
        fixed = lift_adjust(perturbed)
        for i in range(len(fixed) - 1):
            a, b = fixed[i], fixed[i + 1]
            assert a * b * a == b * a * b
        for i in range(len(fixed)):
            for j in range(i + 2, len(fixed)):
                assert fixed[i] * fixed[j] == fixed[j] * fixed[i]

    def test_matrix_level_defect_rejected(self):
        lat = standard_lattice(2)
        m = transvection_matrix(lat, CurveClass((1, 0, 0, 0)), 1)
        lifts = [
            CentralExtElement(m, (0,)),
            CentralExtElement(intmat.identity(4), (0,)),
        ]
        with pytest.raises(ValueError):
            lift_adjust(lifts)


class TestTextFormats:
    def test_matrix_round_trip(self):
        m = transvection_matrix(standard_lattice(2), CurveClass((1, 0, -1, 1)), -1)
        assert parse_matrix(format_matrix(m)) == m

    def test_chain_round_trip(self):
        chain = build_chain(standard_lattice(2), 4)
        assert parse_chain(format_chain(chain)) == chain

    def test_bad_headers(self):
        with pytest.raises(ValueError):
            parse_matrix("1 0\n0 1")
        with pytest.raises(ValueError):
            parse_chain("1 0 0 0")
