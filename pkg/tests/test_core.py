import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from monofact.catalog import CATALOG, catalog_monoid
from monofact.core import (
    ElementMap,
    FiniteMonoid,
    IndexOutOfRange,
    MonoidError,
    NoIdentity,
    NotAssociative,
    SizeBoundExceeded,
    SubMonoid,
    compose,
    direct_product,
    endomorphism_monoid,
    enumerate_homs,
    enumerate_monoids,
    enumerate_submonoids,
    find_isomorphism,
    from_table,
    identity_map,
    is_subgroup,
    opposite,
    submonoid_closure,
    units,
    zero_map,
)

S3 = CATALOG["s3"]
B2 = CATALOG["b2"]
C2 = CATALOG["c2"]
C3 = CATALOG["c3"]
C4 = CATALOG["c4"]


class TestFromTable:
    def test_trivial(self):
        M = from_table([[0]])
        assert M.size == 1 and M.identity == 0

    def test_c2(self):
        M = from_table([[0, 1], [1, 0]])
        assert M.identity == 0 and M.is_group()

    def test_b2_absorbing(self):
        M = from_table([[0, 1], [1, 1]])
        assert M.identity == 0 and not M.is_group()
        # the absorbing element swallows every product
        assert all(M.mul(1, x) == 1 == M.mul(x, 1) for x in M.elements())

    def test_not_associative_with_witness(self):
        with pytest.raises(NotAssociative) as exc:
            from_table([[0, 1, 2], [1, 0, 0], [2, 0, 1]])
        x, y, z = exc.value.witness
        table = [[0, 1, 2], [1, 0, 0], [2, 0, 1]]
        assert table[table[x][y]][z] != table[x][table[y][z]]

    def test_no_identity(self):
        with pytest.raises(NoIdentity):
            from_table([[1, 1], [1, 1]])

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            from_table([[0, 1], [1, 2]])

    def test_ragged_table_rejected(self):
        with pytest.raises(IndexOutOfRange):
            from_table([[0, 1], [1]])

    @given(st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=3, max_size=3))
    @settings(max_examples=200, deadline=None)
    def test_accepts_exactly_valid_tables(self, table):
        valid = oracles.associativity_holds(table) and oracles.identity_of(table) is not None
        try:
            M = from_table(table)
        except MonoidError:
            assert not valid
        else:
            assert valid and M.identity == oracles.identity_of(table)


class TestSubMonoid:
    def test_requires_identity(self):
        with pytest.raises(MonoidError):
            SubMonoid(S3, (1,))

    def test_requires_closure(self):
        with pytest.raises(MonoidError):
            SubMonoid(S3, (0, 4))  # (123) generates (132) too

    def test_requires_sorted(self):
        with pytest.raises(MonoidError):
            SubMonoid(S3, (4, 0, 5))

    def test_as_monoid_reindexes(self):
        A3 = SubMonoid(S3, (0, 4, 5))
        small = A3.as_monoid()
        assert small.size == 3 and small.identity == 0
        assert find_isomorphism(small, C3) is not None


class TestUnits:
    def test_group_is_all_units(self):
        assert units(S3).members == (0, 1, 2, 3, 4, 5)

    def test_b2_only_identity(self):
        assert units(B2).members == (0,)

    def test_product_units(self):
        # indices are (b2, c2) pairs, b2-major: units are {e} x C2
        assert units(CATALOG["b2xc2"]).members == (0, 1)

    def test_oracle_agreement(self):
        for M in CATALOG.values():
            assert set(units(M).members) == oracles.units_of(M)

    def test_submonoid_units_need_inverse_inside(self):
        A3 = SubMonoid(S3, (0, 4, 5))
        assert units(A3).members == (0, 4, 5)
        whole = SubMonoid(B2, (0, 1))
        assert units(whole).members == (0,)


class TestClosure:
    def test_generates_a3(self):
        assert submonoid_closure(S3, [4]).members == (0, 4, 5)

    def test_empty_generators(self):
        assert submonoid_closure(S3, []).members == (0,)

    def test_idempotent_generator(self):
        assert submonoid_closure(B2, [1]).members == (0, 1)

    def test_rejects_bad_index(self):
        with pytest.raises(IndexOutOfRange):
            submonoid_closure(B2, [7])

    @given(
        st.sampled_from(sorted(CATALOG)),
        st.sets(st.integers(0, 5), max_size=4),
        st.sets(st.integers(0, 5), max_size=2),
    )
    @settings(max_examples=150, deadline=None)
    def test_extensive_monotone_idempotent(self, name, gens, extra):
        M = catalog_monoid(name)
        gens = {g % M.size for g in gens}
        extra = {g % M.size for g in extra}
        closed = submonoid_closure(M, gens)
        assert gens <= closed.member_set
        bigger = submonoid_closure(M, gens | extra)
        assert closed.member_set <= bigger.member_set
        assert submonoid_closure(M, closed.members).members == closed.members


class TestEnumerateSubmonoids:
    @pytest.mark.parametrize(
        "name,count", [("c3", 2), ("b2", 2), ("s3", 6), ("c4", 3), ("lz21", 4)]
    )
    def test_counts(self, name, count):
        assert len(enumerate_submonoids(catalog_monoid(name))) == count

    def test_matches_closure_walk_oracle(self):
        for M in CATALOG.values():
            ours = {S.members for S in enumerate_submonoids(M)}
            assert ours == oracles.submonoids_by_closure_walk(M)

    def test_sorted_by_size_then_members(self):
        subs = enumerate_submonoids(S3)
        keys = [(len(S), S.members) for S in subs]
        assert keys == sorted(keys)


class TestIsSubgroup:
    def test_a3_in_s3(self):
        assert is_subgroup(S3, SubMonoid(S3, (0, 4, 5)))

    def test_b2_whole_is_not(self):
        assert not is_subgroup(B2, SubMonoid(B2, (0, 1)))

    def test_c4_half(self):
        assert is_subgroup(C4, SubMonoid(C4, (0, 2)))


class TestOpposite:
    def test_commutative_fixed(self):
        assert opposite(C3) == C3

    def test_involution_everywhere(self):
        for M in CATALOG.values():
            assert opposite(opposite(M)) == M

    def test_s3_antiisomorphic_to_itself(self):
        assert find_isomorphism(opposite(S3), S3) is not None

    def test_left_zero_becomes_right_zero(self):
        lz = CATALOG["lz21"]
        rz = opposite(lz)
        # uv = v away from the identity
        assert rz.mul(1, 2) == 2 and rz.mul(2, 1) == 1


class TestEndomorphisms:
    def test_end_c2_is_b2(self):
        end, endos = endomorphism_monoid(C2)
        assert len(endos) == 2
        assert find_isomorphism(end, B2) is not None

    def test_end_c3_is_exponents(self):
        end, endos = endomorphism_monoid(C3)
        assert sorted(f.values for f in endos) == [(0, 0, 0), (0, 1, 2), (0, 2, 1)]

    def test_end_trivial(self):
        end, endos = endomorphism_monoid(CATALOG["trivial"])
        assert end.size == 1 and len(endos) == 1

    def test_composition_convention(self):
        end, endos = endomorphism_monoid(C3)
        i = next(k for k, f in enumerate(endos) if f.values == (0, 2, 1))
        j = end.mul(i, i)  # inversion twice is the identity map
        assert endos[j].values == (0, 1, 2)


class TestEnumerateHoms:
    def test_c2_to_c3_only_zero(self):
        assert [h.values for h in enumerate_homs(C2, C3)] == [(0, 0)]

    def test_c2_to_s3(self):
        values = [h.values for h in enumerate_homs(C2, S3)]
        assert values == [(0, 0), (0, 1), (0, 2), (0, 3)]

    def test_into_trivial(self):
        assert [h.values for h in enumerate_homs(S3, CATALOG["trivial"])] == [(0,) * 6]

    def test_matches_oracle(self):
        for B, A in [(C2, C4), (C3, S3), (B2, B2), (CATALOG["v4"], C2)]:
            ours = [h.values for h in enumerate_homs(B, A)]
            assert ours == sorted(oracles.hom_values(B, A))

    def test_all_results_are_homomorphisms(self):
        for h in enumerate_homs(CATALOG["v4"], S3):
            assert h.is_homomorphism()

    def test_domain_bound(self):
        big = direct_product(S3, C2)
        with pytest.raises(SizeBoundExceeded):
            enumerate_homs(big, C2)


class TestEnumerateMonoids:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2)])
    def test_small_counts(self, n, count):
        assert len(enumerate_monoids(n)) == count

    def test_order3_classes(self):
        assert len(enumerate_monoids(3, up_to_iso=True)) == 7

    def test_order3_matches_naive_scan(self):
        ours = {M.table for M in enumerate_monoids(3)}
        assert ours == set(oracles.monoid_tables_with_fixed_identity(3))

    def test_reps_pairwise_nonisomorphic(self):
        reps = enumerate_monoids(3, up_to_iso=True)
        for M, N in itertools.combinations(reps, 2):
            assert find_isomorphism(M, N) is None

    def test_order_bound(self):
        with pytest.raises(SizeBoundExceeded):
            enumerate_monoids(5)

    def test_deterministic_order(self):
        assert [M.table for M in enumerate_monoids(3)] == [
            M.table for M in enumerate_monoids(3)
        ]


class TestFindIsomorphism:
    def test_different_unit_counts(self):
        assert find_isomorphism(C2, B2) is None

    def test_identity_iso(self):
        iso = find_isomorphism(S3, S3)
        assert iso.forward.values == tuple(range(6))

    def test_twisted_product_is_s3(self):
        iso = find_isomorphism(CATALOG["c3xc2"], S3)
        assert iso is not None

    def test_forward_transports_table(self):
        M, N = CATALOG["c3xc2"], S3
        iso = find_isomorphism(M, N)
        f = iso.forward
        for x in M.elements():
            for y in M.elements():
                assert f(M.mul(x, y)) == N.mul(f(x), f(y))


class TestElementMap:
    def test_zero_map_is_hom(self):
        assert zero_map(S3, C2).is_homomorphism()

    def test_identity_map(self):
        assert identity_map(S3).is_homomorphism()

    def test_values_must_land_in_codomain(self):
        A3 = SubMonoid(S3, (0, 4, 5))
        with pytest.raises(MonoidError):
            ElementMap(S3, A3, (0, 1, 0, 0, 4, 5))

    def test_compose(self):
        sign = ElementMap(S3, C2, (0, 1, 1, 1, 0, 0))
        include = ElementMap(C2, S3, (0, 1))
        assert compose(sign, include).values == (0, 1)


class TestBounds:
    def test_submonoid_enumeration_hard_cap(self):
        big = direct_product(direct_product(C3, C3), C3)  # 27 elements
        with pytest.raises(SizeBoundExceeded):
            enumerate_submonoids(big)

    def test_units_of_units_is_itself(self):
        for M in CATALOG.values():
            u = units(M)
            assert units(u).members == u.members

    def test_closure_walk_regime(self):
        # order 21 exceeds the subset-scan limit and uses the closure walk
        c21 = FiniteMonoid(
            tuple(tuple((a + b) % 21 for b in range(21)) for a in range(21)), 0
        )
        members = [S.members for S in enumerate_submonoids(c21)]
        assert [len(m) for m in members] == [1, 3, 7, 21]


class TestCanonicalOrdering:
    def test_enumerations_come_out_sorted(self):
        # the search engine promises lexicographic value order
        for M in (S3, C4, CATALOG["b2xc2"]):
            homs = [h.values for h in enumerate_homs(C2, M)]
            assert homs == sorted(homs)
        tables = [M.table for M in enumerate_monoids(3)]
        assert tables == sorted(tables)

    def test_order4_counts_frozen_from_full_scan(self):
        # 156 labeled tables and 35 classes, confirmed by an independent
        # 4^9 candidate scan plus orbit grouping under the 6 relabelings
        assert len(enumerate_monoids(4)) == 156
        assert len(enumerate_monoids(4, up_to_iso=True)) == 35
