"""Quantum nets: enumeration, translation orbits, and product structure.

Run with:  python demos/02_quantum_nets.py
"""

import numpy as np

from dwfnet import (
    build_net,
    classify_nets,
    detect_product_structure,
    digits_of,
    enumerate_nets,
    net_context,
)

# --- single qubit: 8 nets, 2 orbits ------------------------------------
ctx1 = net_context(1)
print(f"n=1: {ctx1.net_count} nets")
for rep, members in classify_nets(ctx1).items():
    print(f"  orbit of net {rep}: members {members}")

# a net is a digit string: one ray choice per striation
print("\nnet 5 digits (one eigenstate index per striation):", digits_of(5, 2))

# phase-point operators square-sum to N x purity and resolve the identity
net = build_net(ctx1, 1)
ops = net.ops_array
print("sum of A over the grid == N * I:", np.allclose(ops.sum(axis=0), 2 * np.eye(2)))
gram = np.einsum("aij,bji->ab", ops, ops).real
print("Tr(A_a A_b) == N delta_ab:", np.allclose(gram, 2 * np.eye(4)))

# --- two qubits: 1024 nets, 64 orbits, 32 product nets ------------------
ctx2 = net_context(2)
orbits = classify_nets(ctx2)
sizes = {len(v) for v in orbits.values()}
print(f"\nn=2: {ctx2.net_count} nets, {len(orbits)} orbits, sizes {sizes}")

forms = {"eq6": [], "eq7": [], "none": []}
for net_id in enumerate_nets(ctx2):
    forms[detect_product_structure(build_net(ctx2, net_id)).form].append(net_id)
print(
    f"product-structured nets: {len(forms['eq6']) + len(forms['eq7'])}"
    f" ({len(forms['eq6'])} of the plain form, {len(forms['eq7'])} conjugated)"
)
print("first few of each:", forms["eq6"][:4], forms["eq7"][:4])

# a product net factorizes every phase-point operator
rep = detect_product_structure(build_net(ctx2, forms["eq6"][0]))
print(
    f"net {forms['eq6'][0]} factors: first-qubit net {rep.factor_a_net},"
    f" conjugated second-qubit net {rep.factor_b_conj_net}"
)
