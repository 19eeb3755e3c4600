import pytest

from gridutil import weight_compositions, width_tuples
from qrigged.combinat import Composition, Partition, kostka_number
from qrigged.crystals import enumerate_paths
from qrigged.rc import (Configuration, InvalidRiggedConfigurationError,
                        MultiplicityArray, RiggedConfiguration, cocharge,
                        enumerate_rc, lower_bound, rc_from_json, rc_to_json,
                        validate, vacancy, weight_of)


class TestVacancy:
    def test_empty_configuration_pure_factor_term(self):
        L = MultiplicityArray({(1, 2): 1, (2, 3): 2}, 4)
        empty = Configuration(((), (), ()))
        for a in range(1, 4):
            for i in (1, 2, 3):
                assert vacancy(empty, L, a, i) == L.level_term(a, i)

    def test_two_boxes(self):
        L = MultiplicityArray({(1, 1): 2}, 2)
        assert vacancy(Configuration(((1,),)), L, 1, 1) == 0

    def test_negative_in_unrestricted_setting(self):
        L = MultiplicityArray({(1, 2): 1}, 2)
        assert vacancy(Configuration(((1,),)), L, 1, 1) == -1

    def test_index_errors(self):
        L = MultiplicityArray({(1, 1): 2}, 2)
        with pytest.raises(IndexError):
            vacancy(Configuration(((1,),)), L, 2, 1)
        with pytest.raises(IndexError):
            vacancy(Configuration(((1,),)), L, 1, 0)


class TestLowerBound:
    def test_two_box_window(self):
        L = MultiplicityArray({(1, 1): 2}, 2)
        assert lower_bound(Configuration(((1,),)), L, 1, 0) == -1

    def test_classical_floor_when_next_weight_part_vanishes(self):
        # lambda_{a+1} = 0 and no carried depth: the floor is 0
        L = MultiplicityArray({(1, 1): 4}, 3)
        config = Configuration(((2,), (2,)))  # weight (2, 0, 2)
        assert weight_of(config, L) == (2, 0, 2)
        assert lower_bound(config, L, 1, 0) == 0

    def test_unrestricted_floor_tracks_next_weight_part(self):
        L = MultiplicityArray({(1, 1): 3}, 2)
        config = Configuration(((1,),))   # weight (2, 1) -> floor -1
        assert weight_of(config, L) == (2, 1)
        assert lower_bound(config, L, 1, 0) == -1
        L3 = MultiplicityArray({(1, 1): 2}, 3)
        config3 = Configuration(((1,), ()))  # weight (1, 1, 0)
        assert weight_of(config3, L3) == (1, 1, 0)
        assert lower_bound(config3, L3, 1, 0) == -1

    def test_empty_window_case(self):
        # bound above vacancy: the configuration contributes nothing
        L = MultiplicityArray({(1, 2): 1}, 2)
        config = Configuration(((1, 1),))  # would need weight (0, 2)
        assert weight_of(config, L) == (0, 2)
        assert lower_bound(config, L, 1, 0) == -1
        assert vacancy(config, L, 1, 1) == -3  # window [-1, -3] is empty
        out = enumerate_rc(L, Composition((0, 2)))
        assert len(out) == 1  # only the single-row configuration survives
        assert all(rc.config != config for rc in out)

    def test_row_index_checked(self):
        L = MultiplicityArray({(1, 1): 2}, 2)
        with pytest.raises(IndexError):
            lower_bound(Configuration(((1,),)), L, 1, 1)


class TestEnumeration:
    def test_empty_instance(self):
        L = MultiplicityArray({}, 3)
        out = enumerate_rc(L, Composition(()))
        assert len(out) == 1
        assert out[0].config.nu == ((), ())
        assert cocharge(out[0]) == 0

    def test_two_box_instance(self):
        L = MultiplicityArray({(1, 1): 2}, 2)
        out = enumerate_rc(L, Composition((1, 1)))
        assert len(out) == 2

    def test_single_row_instance(self):
        L = MultiplicityArray({(1, 2): 1}, 2)
        out = enumerate_rc(L, Composition((1, 1)))
        assert len(out) == 1

    def test_counts_match_paths(self):
        for n in (2, 3):
            for widths in width_tuples(4):
                L = MultiplicityArray.from_rows(widths, n)
                for w in weight_compositions(sum(widths), n):
                    weight = Composition(w)
                    assert len(enumerate_rc(L, weight)) == \
                        len(enumerate_paths(widths, n, weight))

    def test_classical_restriction_reproduces_kostka(self):
        # keeping only nonnegative riggings yields the classical count
        for lam_size in range(1, 6):
            from gridutil import dominant_partitions
            for lam in dominant_partitions(lam_size, max_parts=3):
                for mu in dominant_partitions(lam_size):
                    n = max(2, len(lam))
                    if len(lam) > n:
                        continue
                    L = MultiplicityArray.from_rows(mu, n)
                    weight = Composition(lam + (0,) * (n - len(lam)))
                    classical = [rc for rc in enumerate_rc(L, weight)
                                 if all(r >= 0 for lv in rc.riggings for r in lv)]
                    assert len(classical) == \
                        kostka_number(Partition(lam), Composition(mu))


class TestCocharge:
    def test_rigging_shift_linearity(self):
        L = MultiplicityArray({(1, 1): 2}, 2)
        a, b = enumerate_rc(L, Composition((1, 1)))
        # same configuration, riggings differ by one
        assert abs(cocharge(a) - cocharge(b)) == 1

    def test_block_permutation_invariance(self):
        config = Configuration(((1, 1),))
        rc1 = RiggedConfiguration(config, ((0, -1),))
        # non-canonical input ordering is normalized
        rc2 = RiggedConfiguration(config, ((-1, 0),))
        assert rc1.riggings == rc2.riggings == ((0, -1),)
        assert cocharge(rc1) == cocharge(rc2)


class TestValidationAndJson:
    def test_validator_accepts_enumerated(self):
        for n in (2, 3):
            for widths in ((1, 1), (2, 1), (2, 2)):
                L = MultiplicityArray.from_rows(widths, n)
                for w in weight_compositions(sum(widths), n):
                    for rc in enumerate_rc(L, Composition(w)):
                        validate(rc, L)

    def test_validator_rejects_window_violations(self):
        L = MultiplicityArray({(1, 1): 2}, 2)
        config = Configuration(((1,),))
        with pytest.raises(InvalidRiggedConfigurationError):
            validate(RiggedConfiguration(config, ((1,),)), L)   # above vacancy
        with pytest.raises(InvalidRiggedConfigurationError):
            validate(RiggedConfiguration(config, ((-2,),)), L)  # below bound

    def test_json_roundtrip_recomputes_vacancies(self):
        L = MultiplicityArray({(1, 1): 2}, 2)
        rc = enumerate_rc(L, Composition((1, 1)))[0]
        payload = rc_to_json(rc, L)
        assert payload[0]["vacancies"] == [0]
        payload[0]["vacancies"] = [999]  # tampering is ignored on input
        back = rc_from_json(payload, L)
        assert back == rc

    def test_json_rejects_invalid(self):
        L = MultiplicityArray({(1, 1): 2}, 2)
        bad = [{"partition": [1], "riggings": [7], "vacancies": [0]}]
        with pytest.raises(InvalidRiggedConfigurationError):
            rc_from_json(bad, L)

    def test_vacancy_untouched_by_block_sorting(self):
        L = MultiplicityArray.from_rows((1, 1, 1, 1), 2)
        config = Configuration(((1, 1),))
        assert weight_of(config, L) == (2, 2)
        v = vacancy(config, L, 1, 1)
        for riggings in ((v, v - 1), (v - 1, v)):
            rc = RiggedConfiguration(config, (riggings,))
            assert vacancy(rc.config, L, 1, 1) == v
