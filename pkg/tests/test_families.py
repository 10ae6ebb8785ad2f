import pytest

from eaqecc.bounds import BoundStatus, saturation_trio
from eaqecc.codes import ClassicalCode, Degeneracy, EaCode, parse_code
from eaqecc.concat import chain_concat
from eaqecc.families import (
    family,
    family_names,
    griesmer_family_audit,
    plotkin_family_audit,
    reversed_scan_eahb,
    scan_eahb,
)


class TestFamilyRegistry:
    def test_known_names(self):
        assert set(family_names()) == {
            "rep_odd",
            "rep_even",
            "rep_odd_ext",
            "rep_even_ext",
            "C1",
            "C2",
            "C4",
        }

    def test_rep_odd_member(self):
        assert family("rep_odd").member(5) == EaCode(
            n=5, k=1, d=5, c=4, degeneracy=Degeneracy.NONDEGENERATE
        )

    def test_rep_even_ext_member(self):
        assert family("rep_even_ext").member(10).notation() == "[[11,1,9;10]]"

    def test_constants(self):
        c4 = family("C4").member(9)
        assert c4.notation() == "[[9,1,7;4]]"
        assert family("C1").member(8).degeneracy is Degeneracy.DEGENERATE

    def test_parity_enforced(self):
        with pytest.raises(ValueError):
            family("rep_odd").member(4)
        with pytest.raises(ValueError):
            family("rep_even").member(2)  # below n_min

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="unknown family"):
            family("rep_prime")


class TestScans:
    def test_first_violating_row(self):
        scan = scan_eahb(family("rep_odd"), family("C1").member(8), n_min=3, n_max=3)
        row = scan.rows[0]
        assert row.result.code.notation() == "[[24,1,>=15;5]]"
        assert row.budget == 2**28
        assert row.sphere_count > 2**28
        assert row.violated and row.phi > 1

    def test_rep_odd_c1_onset(self):
        scan = scan_eahb(family("rep_odd"), family("C1").member(8), n_max=49)
        assert scan.onset == 3

    def test_rep_even_c1_onset(self):
        scan = scan_eahb(family("rep_even"), family("C1").member(8), n_max=60)
        assert scan.onset == 10

    def test_reversed_scan_all_satisfied(self):
        scan = reversed_scan_eahb(family("C1").member(8), family("rep_odd"), n_max=49)
        assert scan.all_satisfy()
        assert scan.onset is None
        assert all(row.phi < 1 for row in scan.rows)
        first = scan.rows[0]
        assert first.result.code.notation() == "[[24,1,>=15;17]]"
        assert first.budget == 2**40

    def test_reversed_even_family_all_satisfied(self):
        scan = reversed_scan_eahb(family("C1").member(8), family("rep_even"), n_max=98)
        assert scan.all_satisfy()
        assert all(row.phi < 1 for row in scan.rows)

    def test_rows_ascend_in_n(self):
        scan = scan_eahb(family("rep_odd"), family("C2").member(7), n_max=21)
        assert [row.n for row in scan.rows] == list(range(3, 22, 2))

    def test_empty_range_rejected(self):
        with pytest.raises(ValueError):
            scan_eahb(family("rep_odd"), family("C1").member(8), n_min=5, n_max=4)


class TestAudits:
    def test_griesmer_family_6_3_4(self):
        rows = griesmer_family_audit(ClassicalCode(6, 3, 4, q=4), range(1, 4))
        assert [row.code.notation() for row in rows] == [
            "[[6,1,4;1]]",
            "[[6,2,4;2]]",
            "[[6,3,4;3]]",
        ]
        assert all(row.verdict.status is BoundStatus.SATURATED for row in rows)
        assert all(row.predicate for row in rows)

    def test_predicate_matches_verdict_when_not_saturating(self):
        rows = griesmer_family_audit(ClassicalCode(21, 3, 16, q=4), [16, 17, 18])
        by_c = {row.c: row for row in rows}
        assert by_c[16].predicate is False
        assert by_c[16].verdict.status is BoundStatus.SATISFIED
        assert by_c[17].predicate is True and by_c[17].verdict.status is BoundStatus.SATURATED
        for row in rows:
            assert row.predicate == (row.verdict.status is BoundStatus.SATURATED)

    def test_plotkin_family_85_4_64(self):
        rows = plotkin_family_audit(ClassicalCode(85, 4, 64, q=4), [80, 81])
        assert all(row.verdict.status is BoundStatus.SATURATED for row in rows)
        assert all(row.predicate for row in rows)

    def test_audit_gates_on_classical_saturation(self):
        with pytest.raises(ValueError):
            griesmer_family_audit(ClassicalCode(8, 3, 4, q=4), [1])
        with pytest.raises(ValueError):
            plotkin_family_audit(ClassicalCode(6, 3, 4, q=4), [1])


class TestClosureProperties:
    def test_odd_repetition_chain_saturates_trio(self):
        fam = family("rep_odd")
        for n in (3, 5, 7):
            for m in (3, 5):
                result = chain_concat([fam.member(n), fam.member(m)])
                assert saturation_trio(result.code) is True

    def test_even_family_members_fail_trio(self):
        fam = family("rep_even")
        for n in (4, 6, 8, 10):
            assert saturation_trio(fam.member(n)) is False

    def test_mds_propagation(self):
        fam = family("rep_odd")
        five13 = parse_code("[[5,1,3;0]]")
        four131 = parse_code("[[4,1,3;1]]")
        for n in (3, 5, 7, 9):
            via_five = chain_concat([fam.member(n), five13]).code
            assert (via_five.n, via_five.d, via_five.c) == (5 * n, 3 * n, n - 1)
            assert saturation_trio(via_five) is True
            via_four = chain_concat([fam.member(n), four131]).code
            assert (via_four.n, via_four.d, via_four.c) == (4 * n, 3 * n, 2 * n - 1)
            assert saturation_trio(via_four) is True
