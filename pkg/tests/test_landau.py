import csv
import math
from pathlib import Path

import pytest

import oracles
from hamcomp.landau import landau, landau0, landau2, landau_rows, primes_upto

DATA = Path(__file__).parent / "data" / "landau_values.csv"

TABLE1 = {
    # n: (lambda, witness, lambda0, witness, lambda2, witness)
    1: (1, "1", 1, "1", None, None),
    2: (2, "2", 1, "1,1", None, None),
    4: (4, "4", 3, "3,1", 2, "2,2"),
    5: (6, "3,2", 5, "5", 2, "2,2,1"),
    6: (6, "3,2,1", 5, "5,1", 4, "4,2"),
    7: (12, "4,3", 7, "7", 6, "3,2,2"),
    9: (20, "5,4", 15, "5,3,1", 12, "4,3,2"),
    14: (84, "7,4,3", 45, "9,5", 60, "5,4,3,2"),
    17: (210, "7,5,3,2", 105, "7,5,3,1,1", 84, "7,4,3,2,1"),
    20: (420, "7,5,4,3,1", 165, "11,5,3,1", 210, "7,5,3,2,2,1"),
}


def _rows():
    with open(DATA) as fh:
        for row in csv.DictReader(fh):
            yield int(row["n"]), int(row["lambda"]), int(row["lambda0"]), (
                int(row["lambda2"]) if row["lambda2"] else None)


def test_primes():
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_upto(1) == []


@pytest.mark.parametrize("n", range(1, 31))
def test_against_partition_enumeration(n):
    assert landau(n).value == oracles.lcm_partition_max(n, lambda e: True)
    assert landau0(n).value == oracles.lcm_partition_max(n, lambda e: e == 0)
    assert landau2(n).value == oracles.lcm_partition_max(n, lambda e: e > 0 and e % 2 == 0)


@pytest.mark.parametrize("n", sorted(TABLE1))
def test_table1_witnesses(n):
    l, lw, l0, l0w, l2, l2w = TABLE1[n]
    assert (landau(n).value, str(landau(n).witness)) == (l, lw)
    assert (landau0(n).value, str(landau0(n).witness)) == (l0, l0w)
    assert landau2(n).value == l2
    if l2 is not None:
        assert str(landau2(n).witness) == l2w
    else:
        assert not landau2(n).defined


def test_witnesses_are_consistent():
    for n in range(1, 141):
        for v in (landau(n), landau0(n), landau2(n)):
            if v.defined:
                assert v.witness.total == n
                assert v.witness.lcm == v.value
        assert all(p % 2 for p in landau0(n).witness.parts)
        if landau2(n).defined:
            evens = sum(1 for p in landau2(n).witness.parts if p % 2 == 0)
            assert evens > 0 and evens % 2 == 0


def test_appendix_values():
    rows = list(_rows())
    assert len(rows) == 140
    for n, l, l0, l2 in rows:
        assert landau(n).value == l, n
        assert landau0(n).value == l0, n
        assert landau2(n).value == l2, n


def test_spot_values():
    assert landau(140).value == 41_495_273_820
    assert landau2(100).value == 232_792_560


def test_half_bound():
    for n in range(4, 141):
        best = max(landau0(n).value, landau2(n).value or 0)
        assert 2 * best >= landau(n).value


def test_two_lambda0_crossover():
    # 2*lambda0 beats lambda2 for every n <= 37; n = 38 is the first exception
    assert all(2 * landau0(n).value > landau2(n).value for n in range(4, 38))
    assert 2 * landau0(38).value < landau2(38).value


def test_rows_and_errors():
    assert landau_rows(3) == [(1, 1, 1, None), (2, 2, 1, None), (3, 3, 3, None)]
    with pytest.raises(ValueError):
        landau(0)
