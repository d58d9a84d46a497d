import io
import json
import random

import pytest

from posetsat.setfam import (
    Family,
    FamilyFormatError,
    canonical_key,
    canonicalize_family,
    complement_family,
    dump_family,
    elements_of,
    family_from_json,
    family_to_json,
    is_subset,
    load_family,
    mask_of,
)


def masks(n, *sets):
    return [mask_of(s, n) for s in sets]


class TestIsSubset:
    def test_containment(self):
        assert is_subset(mask_of([1], 2), mask_of([1, 2], 2))

    def test_incomparable_pair(self):
        assert not is_subset(mask_of([1], 2), mask_of([2], 2))

    def test_reflexive_on_empty(self):
        assert is_subset(0, 0)

    def test_antisymmetry(self):
        rng = random.Random(7)
        for _ in range(500):
            a = rng.getrandbits(8)
            b = rng.getrandbits(8)
            if is_subset(a, b) and is_subset(b, a):
                assert a == b


class TestComplement:
    def test_complement_of_empty_set(self):
        fam = canonicalize_family([0], 3)
        assert complement_family(fam).sets == (0b111,)

    def test_involution(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randint(1, 10)
            fam = canonicalize_family(
                [rng.getrandbits(n) for _ in range(rng.randint(0, 12))], n
            )
            assert complement_family(complement_family(fam)) == fam


class TestCanonicalize:
    def test_dedup_and_sort(self):
        got = canonicalize_family(masks(3, [1, 2], [1], [1]), 3)
        assert got.sets == tuple(masks(3, [1], [1, 2]))

    def test_empty_input(self):
        assert canonicalize_family([], 3).sets == ()

    def test_reference_sort_order(self):
        # Independent reference: plain sorted() on (cardinality, value).
        raw = masks(3, [3], [1, 2])
        ref = sorted(set(raw), key=lambda m: (bin(m).count("1"), m))
        assert list(canonicalize_family(raw, 3).sets) == ref
        assert ref == masks(3, [3], [1, 2])

    def test_idempotent_and_order_insensitive(self):
        rng = random.Random(11)
        for _ in range(100):
            n = rng.randint(1, 8)
            raw = [rng.getrandbits(n) for _ in range(rng.randint(0, 10))]
            fam = canonicalize_family(raw, n)
            assert canonicalize_family(fam.sets, n) == fam
            rng.shuffle(raw)
            assert canonicalize_family(raw, n) == fam

    def test_rejects_out_of_range_bits(self):
        with pytest.raises(ValueError):
            canonicalize_family([0b1000], 3)


class TestFamilyInvariants:
    def test_rejects_misordered(self):
        with pytest.raises(ValueError):
            Family(3, (0b11, 0b1))

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Family(3, (0b1, 0b1))

    def test_rejects_bad_ground_size(self):
        with pytest.raises(ValueError):
            Family(0, ())
        with pytest.raises(ValueError):
            Family(65, ())

    def test_membership_and_iteration(self):
        fam = canonicalize_family(masks(4, [1], [1, 2], [3]), 4)
        assert mask_of([3], 4) in fam
        assert len(fam) == 3
        assert sorted(fam) == sorted(fam.sets)


class TestJson:
    def test_round_trip_bit_exact(self):
        fam = canonicalize_family(masks(5, [2, 4], [1], [1, 2, 3], []), 5)
        doc = family_to_json(fam)
        assert family_from_json(doc) == fam
        assert doc["sets"] == [[], [1], [2, 4], [1, 2, 3]]

    def test_reader_accepts_any_order(self):
        doc = {"n": 3, "sets": [[2, 1], [3]]}
        fam = family_from_json(doc)
        assert fam.sets == tuple(masks(3, [3], [1, 2]))

    def test_duplicates_error_in_strict_mode(self):
        doc = {"n": 3, "sets": [[1], [1]]}
        with pytest.raises(FamilyFormatError):
            family_from_json(doc)
        assert family_from_json(doc, lenient=True).sets == (0b1,)

    def test_repeated_element_in_one_set(self):
        doc = {"n": 3, "sets": [[1, 1, 2]]}
        with pytest.raises(FamilyFormatError):
            family_from_json(doc)
        assert family_from_json(doc, lenient=True).sets == (0b11,)

    def test_format_errors(self):
        for doc in (
            [],
            {},
            {"n": 3},
            {"sets": []},
            {"n": "3", "sets": []},
            {"n": 0, "sets": []},
            {"n": 65, "sets": []},
            {"n": 3, "sets": [[0]]},
            {"n": 3, "sets": [[4]]},
            {"n": 3, "sets": "nope"},
            {"n": 3, "sets": [1]},
        ):
            with pytest.raises(FamilyFormatError):
                family_from_json(doc)

    def test_generator_sidecar_ignored_by_reader(self):
        fam = canonicalize_family(masks(3, [1]), 3)
        doc = family_to_json(fam, generator={"kind": "test", "params": {}})
        assert doc["generator"]["kind"] == "test"
        assert family_from_json(doc) == fam

    def test_dump_load_stream(self):
        fam = canonicalize_family(masks(4, [1, 4], [2]), 4)
        buf = io.StringIO()
        dump_family(fam, buf)
        assert load_family(io.StringIO(buf.getvalue())) == fam
        with pytest.raises(FamilyFormatError):
            load_family(io.StringIO("not json"))

    def test_writer_emits_canonical_order(self):
        fam = canonicalize_family(masks(4, [1, 2], [4], [3]), 4)
        doc = json.loads(json.dumps(family_to_json(fam)))
        keys = [tuple(s) for s in doc["sets"]]
        assert keys == sorted(keys, key=lambda s: (len(s), s))


def test_elements_round_trip():
    rng = random.Random(5)
    for _ in range(200):
        m = rng.getrandbits(16)
        assert mask_of(elements_of(m), 16) == m


def test_canonical_key_orders_by_size_then_value():
    assert canonical_key(0b100) < canonical_key(0b011)
    assert canonical_key(0b011) < canonical_key(0b101)
