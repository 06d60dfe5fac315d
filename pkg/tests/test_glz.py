import pytest

from endocert.verdict import gl_has_element_of_order, matrix_order_is


class TestCriterion:
    @pytest.mark.parametrize("n,m", [(3, 7), (5, 11), (11, 23), (1, 3), (2, 12), (1, 4)])
    def test_obstructions(self, n, m):
        has, witness = gl_has_element_of_order(n, m)
        assert has is False and witness is None

    @pytest.mark.parametrize(
        "n,m", [(6, 7), (10, 11), (22, 23), (2, 3), (2, 6), (2, 4), (1, 2), (4, 12)]
    )
    def test_existence_with_verified_witness(self, n, m):
        has, witness = gl_has_element_of_order(n, m)
        assert has is True
        assert witness is not None and len(witness.matrix) == n
        assert matrix_order_is(witness.matrix, m)
        # integral entries
        assert all(isinstance(x, int) for row in witness.matrix for x in row)

    def test_order_one(self):
        has, witness = gl_has_element_of_order(3, 1)
        assert has is True and matrix_order_is(witness.matrix, 1)

    def test_monotone_in_dimension(self):
        for m in (7, 11, 23, 12, 6):
            previous = False
            for n in range(1, 26):
                has, _ = gl_has_element_of_order(n, m, with_witness=False)
                assert has or not previous  # once true, stays true
                previous = previous or has

    def test_without_witness(self):
        has, witness = gl_has_element_of_order(6, 7, with_witness=False)
        assert has is True and witness is None

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            gl_has_element_of_order(0, 5)
        with pytest.raises(ValueError):
            gl_has_element_of_order(3, 0)
