"""Smoke test for the amitsur extension module."""

import json

import amitsur


def main():
    m2 = amitsur.Extension.matrix_algebra(5, 2)
    assert m2.validate() == []
    cc = amitsur.CochainComplex(m2, 3)
    assert cc.dims() == [4, 16, 64, 256]
    assert cc.cohomology_dims() == [1, 0, 0]
    assert cc.verify_dga(trials=10)
    cert = json.loads(cc.d2_certificate())
    assert cert["bijective"]

    ac = amitsur.AmitsurComplex.endo(m2, 3)
    assert ac.cohomology_dims() == cc.cohomology_dims()
    assert ac.verify_dga(trials=10)

    ut = amitsur.Extension.upper_triangular(5, 2)
    ok, witness = amitsur.verify_isomorphism(ut, 3, trials=20, seed=1)
    assert ok, witness
    assert [d["dim_omega"] for d in json.loads(witness)["degrees"]] == [2, 3, 4, 5]

    gf25 = amitsur.Extension.field_extension(5, [3, 0, 1])
    assert amitsur.AmitsurComplex.sweedler(gf25, 3).cohomology_dims() == [1, 0, 0]

    assert amitsur.gs_compare("0 1\n1 2\n0 2\n") == ([1, 1], [1, 1])
    assert amitsur.simplicial_cohomology("0 1 2\n", 5, 2) == [1, 0, 0]

    s3 = amitsur.Extension.corpus("gf7-s3-over-c2")
    try:
        amitsur.AmitsurComplex.endo(s3, 2)
    except ValueError as e:
        assert "no depth-two certificate" in str(e)
    else:
        raise AssertionError("expected a missing certificate")

    c2 = amitsur.Extension.cyclic_group(2, 2)
    hopf = json.dumps({**json.loads(c2.to_json()), "coproduct": [[1, 0], [0, 0], [0, 0], [0, 1]], "counit": [1, 1]})
    cmp = json.loads(amitsur.hopf_compare(hopf, 4))
    assert cmp["equal"] == [[2, True], [3, True]]

    print("python smoke test passed")


if __name__ == "__main__":
    main()
