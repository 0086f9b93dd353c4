"""Tour of the arithmetic layer: towers, Frobenius, trace, flattening.

Every element is an integer code packing its coefficient vector; the demo
prints both views side by side.
"""

from rankgeo import arith, flatten, frobenius_q, make_tower, trace_to_base

# F_8 = F_2(a) with a^3 + a + 1 = 0 (chosen automatically: the canonical
# modulus is the irreducible polynomial with the smallest integer encoding)
t8 = make_tower(2, 1, 3)
print("tower:", t8, " modulus:", t8.gqm)

a = 2  # the class of x, i.e. the generator "a"
print("\npowers of a:")
for i in range(8):
    v = arith(t8, "pow", a, i)
    print(f"  a^{i} = code {v} = coeffs {t8.ext_coeffs(v)}")

print("\na * a^2 =", arith(t8, "mul", a, arith(t8, "pow", a, 2)),
      "(= a + 1, code 3)")
print("inverse of a:", arith(t8, "inv", a))

print("\nFrobenius x -> x^2 on F_8:")
for x in range(8):
    print(f"  {x} -> {frobenius_q(t8, x, 1)}", end="")
print()

print("\ntrace to F_2:", {x: trace_to_base(t8, x) for x in range(8)})

v = (a, 0, 5)
print("\nflatten", v, "->", flatten(t8, v))
print("unflatten roundtrip:", t8.unflatten(flatten(t8, v)) == v)

# a proper tower with an intermediate field: F_2 < F_4 < F_16
t = make_tower(2, 2, 2)
print("\nnested tower:", t, " gq:", t.gq, " gqm:", t.gqm)
print("trace of every F_16 element lands in F_4:",
      sorted({trace_to_base(t, x) for x in range(16)}))
