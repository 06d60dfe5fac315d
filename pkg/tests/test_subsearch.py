import pytest

from endocert.permgroup import (
    PermGroup,
    has_proper_subgroup_of_index,
    min_proper_subgroup_index,
    psl2_subgroup_criterion,
    families as fam,
)
from endocert.permgroup.chain import closure_elements


class TestMinProperSubgroupIndex:
    def test_a5_bound_4_none_by_shortcut(self):
        report = min_proper_subgroup_index(fam.alternating_group(5), 4)
        assert report.found_index is None
        assert report.method == "lagrange-shortcut"
        assert report.decided

    def test_a5_bound_4_cross_checked_by_exhaustion(self):
        # independent: enumerate closures of all generator pairs of A5 and
        # record every subgroup order that appears
        a5 = fam.alternating_group(5)
        elements = [tuple(b) for b in sorted(closure_elements(5, [g.images for g in a5.generators]))]
        orders = set()
        for i, x in enumerate(elements):
            for y in elements[i:]:
                sub = closure_elements(5, [x, y])
                orders.add(len(sub))
        # indices 2, 3, 4 would need orders 30, 20, 15
        assert orders & {30, 20, 15} == set()
        assert 12 in orders  # A4 of index 5 does exist

    def test_psl2_11_bound_5_none(self):
        report = min_proper_subgroup_index(fam.psl2(11), 5)
        assert report.found_index is None

    def test_a7_bound_7_finds_index_7(self):
        a7 = fam.alternating_group(7)
        report = min_proper_subgroup_index(a7, 7)
        assert report.found_index == 7
        assert report.method == "action-backtrack"
        assert report.certificate is not None
        sub = PermGroup(7, report.certificate)
        assert a7.order() // sub.order() == 7
        assert all(p in a7 for p in report.certificate)

    def test_s7_finds_index_2(self):
        report = min_proper_subgroup_index(fam.symmetric_group(7), 3)
        assert report.found_index == 2
        sub = PermGroup(7, report.certificate)
        assert sub.order() == 2520

    def test_bound_validation(self):
        with pytest.raises(ValueError):
            min_proper_subgroup_index(fam.alternating_group(5), 1)


class TestHasProperSubgroupOfIndex:
    def test_lagrange_prune(self):
        # |PSL(2,13)| = 1092 is not divisible by 5
        ans, cert, method = has_proper_subgroup_of_index(fam.psl2(13), 5)
        assert ans is False and method == "lagrange-shortcut"

    def test_exhaustive_fallback(self):
        # C12 has subgroups of every dividing index; index 12 is beyond the
        # backtrack ceiling, so the lattice path answers
        ans, cert, method = has_proper_subgroup_of_index(fam.cyclic_group(12), 12)
        assert ans is True and method == "exhaustive"
        assert all(g.is_identity() for g in cert)

    def test_certificate_for_backtrack(self):
        s5 = fam.symmetric_group(5)
        ans, cert, method = has_proper_subgroup_of_index(s5, 5)
        assert ans is True and method == "action-backtrack"
        sub = PermGroup(5, cert)
        assert sub.order() == 24


class TestPsl2Criterion:
    @pytest.mark.parametrize("q", [5, 7, 9, 11, 13])
    def test_true_for_small_q(self, q):
        assert psl2_subgroup_criterion(q) is True

    @pytest.mark.parametrize("q", [5, 7, 9, 11, 13])
    def test_agrees_with_search(self, q):
        bound = (q - 1) // 2
        if bound < 2:
            return
        report = min_proper_subgroup_index(fam.psl2(q), bound)
        assert (report.found_index is None) == psl2_subgroup_criterion(q)

    def test_q13_cross_checked_by_raw_backtrack(self):
        # bypass the simplicity shortcut: the homomorphism backtrack itself
        # must certify the absence up to index 6
        g = fam.psl2(13)
        for r in range(2, 7):
            ans, _, method = has_proper_subgroup_of_index(g, r, shortcut=False)
            assert ans is False
            assert method in ("lagrange-shortcut", "action-backtrack")

    @pytest.mark.parametrize("bad", [4, 3, 15, 8, 2])
    def test_rejects_bad_q(self, bad):
        with pytest.raises(ValueError):
            psl2_subgroup_criterion(bad)
