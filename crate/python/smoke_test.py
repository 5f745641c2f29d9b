"""Smoke test for the pyramsey extension module."""

import json

import pyramsey as pr

y = pr.Pauli("Y")
assert str(y) == "Y" and y.is_hermitian()
assert str(pr.Pauli("X") * pr.Pauli("Z")) == "-iY"
assert not pr.Pauli("X").commutes(pr.Pauli("Z"))
assert y.to_dense() == [[0, -1j], [1j, 0]]

x_max = pr.PauliChannel(2, ["II", "XI", "IX", "XX"])
zz = pr.StabilizerGroup(2, "ZZ")
assert pr.compressed_dimension(x_max, zz) == 2
assert pr.dense_compressed_dimension(x_max, zz)[0] == 2
assert x_max.graph_dimension() == 4

verdict = pr.classify(x_max)
assert verdict["verdict"] == "MaximalStabilizerChannel", verdict

everything = pr.PauliChannel(2, [
    a + b for a in "IXYZ" for b in "IXYZ"
])
res = pr.classify(everything)
assert res["verdict"] == "Clique" and res["dim_PGP"] == 4, res
witness = pr.StabilizerGroup(2, ",".join(res["witness_generators"]))
assert pr.is_clique(everything, witness)
assert pr.private_witness_check(everything, witness, samples=20, seed=1)

report = pr.search(x_max, "both")
assert report["witness_count"] == 0

bit_flip = pr.PauliChannel(3, ["III", "XII", "IXI", "IIX"])
code = pr.StabilizerGroup(3, "ZZI,IZZ")
assert pr.is_anticlique(bit_flip, code)
assert pr.gottesman_correctable(bit_flip, code)
assert pr.kl_check(bit_flip, code)

assert len(pr.enumerate_isotropic(2, 2)) == 15
assert len(pr.enumerate_isotropic(3, 1)) == 63

s = pr.StabilizerGroup(2, "ZZ")
full = pr.StabilizerGroup(2, ",".join(str(g) for g in s.extend_to_maximal()))
assert full.k == 0
ch = pr.maximal_stabilizer_channel(full)
assert json.loads(ch.to_json())["n"] == 2

try:
    pr.StabilizerGroup(2, "XI,ZI")
except ValueError as e:
    assert "anticommute" in str(e)
else:
    raise AssertionError("anticommuting generators accepted")

print("pyramsey smoke test: ok")
