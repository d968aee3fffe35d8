import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dsmkit import (
    Frame,
    FrameMismatchError,
    LabelRenderingError,
    RegionRangeError,
    VennMask,
    atom_mask,
    basis_order,
    combine_masks,
    empty_mask,
    from_bitstring,
    full_mask,
    is_isotone,
    mask_relations,
    region_label,
    to_bitstring,
    to_hex,
)

from conftest import isotone_masks

F1, F2, F3 = Frame(1), Frame(2), Frame(3)


class TestFrame:
    def test_region_count(self):
        assert Frame(0).num_regions == 0
        assert F3.num_regions == 7
        assert Frame(16).num_regions == 65535

    @pytest.mark.parametrize("n", [-1, 17, 2.0, "3"])
    def test_invalid_sizes(self, n):
        with pytest.raises(RegionRangeError):
            Frame(n)


class TestRegionLabel:
    def test_single_atom_frame(self):
        assert region_label(1, F1) == "<1>"

    def test_two_atom_region(self):
        assert region_label(6, F3) == "<23>"

    def test_all_atoms_region(self):
        assert region_label(7, F3) == "<123>"

    def test_out_of_range(self):
        with pytest.raises(RegionRangeError):
            region_label(0, F3)
        with pytest.raises(RegionRangeError):
            region_label(8, F3)

    def test_two_digit_atoms_refused(self):
        with pytest.raises(LabelRenderingError):
            region_label(1, Frame(10))


class TestBasisOrder:
    def test_n1(self):
        assert basis_order(F1) == [1]

    def test_n2_labels(self):
        assert [region_label(r, F2) for r in basis_order(F2)] == ["<1>", "<2>", "<12>"]

    def test_n3_labels(self):
        assert [region_label(r, F3) for r in basis_order(F3)] == [
            "<1>", "<2>", "<12>", "<3>", "<13>", "<23>", "<123>",
        ]

    def test_n0_degenerate(self):
        assert basis_order(Frame(0)) == []

    @pytest.mark.parametrize("n", range(1, 11))
    def test_recursion_equals_ascending_codes(self, n):
        assert basis_order(Frame(n)) == list(range(1, 2 ** n))


class TestAtomMask:
    def test_atom1_n2(self):
        assert to_bitstring(atom_mask(1, F2)) == "101"

    def test_atom1_n3(self):
        assert to_bitstring(atom_mask(1, F3)) == "1010101"

    def test_atom3_n3(self):
        assert to_bitstring(atom_mask(3, F3)) == "0001111"

    def test_out_of_range(self):
        with pytest.raises(RegionRangeError):
            atom_mask(4, F3)
        with pytest.raises(RegionRangeError):
            atom_mask(0, F3)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_popcount_half_the_regions(self, n):
        frame = Frame(n)
        for i in frame.atoms:
            assert bin(atom_mask(i, frame).bits).count("1") == 2 ** (n - 1)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_atom_masks_isotone(self, n):
        frame = Frame(n)
        for i in frame.atoms:
            assert is_isotone(atom_mask(i, frame))


class TestCombineMasks:
    def test_intersect_atoms_n2(self):
        got = combine_masks(atom_mask(1, F2), atom_mask(2, F2), "intersect")
        assert to_bitstring(got) == "001"

    def test_union_atoms_n2(self):
        got = combine_masks(atom_mask(1, F2), atom_mask(2, F2), "union")
        assert to_bitstring(got) == "111"

    def test_intersect_with_empty(self):
        assert combine_masks(atom_mask(2, F3), empty_mask(F3), "intersect") == empty_mask(F3)

    def test_frame_mismatch(self):
        with pytest.raises(FrameMismatchError):
            combine_masks(atom_mask(1, F2), atom_mask(1, F3), "union")

    def test_bad_op(self):
        with pytest.raises(ValueError):
            combine_masks(atom_mask(1, F2), atom_mask(2, F2), "xor")

    def test_operator_sugar(self):
        a, b = atom_mask(1, F2), atom_mask(2, F2)
        assert a & b == combine_masks(a, b, "intersect")
        assert a | b == combine_masks(a, b, "union")


class TestIsIsotone:
    def test_upward_closed_pair(self):
        assert is_isotone(from_bitstring("0010001", F3))

    def test_lone_small_region_is_not(self):
        assert not is_isotone(from_bitstring("1000000", F3))

    def test_empty_and_full(self):
        assert is_isotone(empty_mask(F3))
        assert is_isotone(full_mask(F3))


class TestMaskRelations:
    def test_intersection_below_factor(self):
        meet = atom_mask(1, F2) & atom_mask(2, F2)
        assert mask_relations(meet, atom_mask(1, F2)).is_subset

    def test_atoms_overlap(self):
        rel = mask_relations(atom_mask(1, F2), atom_mask(2, F2))
        # bitwise AND is 001: they share exactly the <12> region
        assert rel.intersects
        assert not rel.is_subset

    def test_empty_mask_relations(self):
        rel = mask_relations(empty_mask(F2), atom_mask(1, F2))
        assert rel.is_subset
        assert not rel.intersects

    def test_frame_mismatch(self):
        with pytest.raises(FrameMismatchError):
            mask_relations(atom_mask(1, F2), atom_mask(1, F3))


class TestTextForms:
    def test_hex_padding(self):
        assert to_hex(from_bitstring("0010111", F3)) == "17"
        assert to_hex(full_mask(Frame(4))) == "7fff"

    def test_bitstring_round_trip(self):
        for s in ("0000000", "0010111", "1111111"):
            assert to_bitstring(from_bitstring(s, F3)) == s

    def test_n0_forms_are_empty(self):
        m = empty_mask(Frame(0))
        assert to_bitstring(m) == ""
        assert to_hex(m) == ""

    def test_bad_bitstrings(self):
        with pytest.raises(ValueError):
            from_bitstring("0101", F3)
        with pytest.raises(ValueError):
            from_bitstring("01x0101", F3)

    def test_regions_iterator(self):
        assert list(from_bitstring("0010111", F3).regions()) == [3, 5, 6, 7]


class TestLatticeLaws:
    @settings(max_examples=200)
    @given(isotone_masks(F3), isotone_masks(F3))
    def test_combination_preserves_isotonicity(self, a, b):
        assert is_isotone(combine_masks(a, b, "intersect"))
        assert is_isotone(combine_masks(a, b, "union"))

    @settings(max_examples=200)
    @given(isotone_masks(F3), isotone_masks(F3), isotone_masks(F3))
    def test_mutual_distributivity(self, a, b, c):
        assert a & (b | c) == (a & b) | (a & c)
        assert a | (b & c) == (a | b) & (a | c)

    @settings(max_examples=100)
    @given(isotone_masks(F3), isotone_masks(F3))
    def test_idempotent_commutative(self, a, b):
        assert a & a == a
        assert a | a == a
        assert a & b == b & a
        assert a | b == b | a

    def test_widest_frame(self):
        # mask algebra runs to n=16 even though materialization stops at 6
        frame = Frame(16)
        am = atom_mask(1, frame)
        assert bin(am.bits).count("1") == 2 ** 15
        assert is_isotone(am)
        assert (am & atom_mask(16, frame)).bits != 0

    @settings(max_examples=100)
    @given(st.data())
    def test_laws_on_wider_frames(self, data):
        frame = Frame(data.draw(st.integers(1, 6)))
        a = data.draw(isotone_masks(frame))
        b = data.draw(isotone_masks(frame))
        assert is_isotone(a & b)
        assert is_isotone(a | b)
        assert mask_relations(a & b, a).is_subset
        assert mask_relations(a, a | b).is_subset
