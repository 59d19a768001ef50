"""Smoke test for the `schroder` extension module.

Build first:
    cargo build -p schroder-py --release
    cp target/release/libschroder.so python/schroder.so
then run `python3 python/smoke_test.py` from the repository root.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import schroder


def main():
    assert schroder.hill_triangle(4) == [
        [1],
        [1, 1],
        [3, 2, 1],
        [11, 7, 3, 1],
        [45, 28, 12, 4, 1],
    ], schroder.hill_triangle(4)
    assert [sum(r) for r in schroder.uv_triangle(4, 1, 2)] == [1, 2, 7, 32, 166]

    p = schroder.Path("UHDUD")
    assert p.semi_length == 3 and p.hills == 1
    assert str(p) == "UHDUD" and p == schroder.Path("UHDUD")
    assert len({p, schroder.Path("UHDUD")}) == 1

    pre, bits = schroder.phi_inv("HHUHUHDUDDUHDHHUUDD")
    assert (pre, bits) == ("HHUDUHDUDUDHUDUDUDUD", "1011110")
    assert schroder.phi(pre, bits) == "HHUHUHDUDDUHDHHUUDD"

    for q in schroder.enumerate_paths(5, "little-hill-free"):
        pre, t = schroder.psi_inv(q)
        assert schroder.psi(pre, t) == q

    trees = schroder.enumerate_trees(5)
    assert len(trees) == sum(schroder.class_counts(5))
    for t in trees:
        assert schroder.tau(schroder.tau(t)) == t
        assert schroder.path_to_tree(schroder.tree_to_path(t)) == t

    sep = schroder.enumerate_separable(5)
    assert len(sep) == 90
    assert schroder.Permutation(sep[0]).is_separable()
    assert not schroder.Permutation([2, 4, 1, 3]).is_separable()

    try:
        schroder.Path("UUD")
    except ValueError as e:
        assert str(e).startswith("NonzeroEnd: "), str(e)
    else:
        raise AssertionError("unbalanced path accepted")

    ok, report = schroder.verify("fz-sulanke", 12)
    assert ok, report

    print("smoke test passed")


if __name__ == "__main__":
    main()
