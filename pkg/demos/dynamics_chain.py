"""Iterates of x^2 + c: factorization, rigid divisibility and the irreducibility chain."""

from selchab.dynamics import (
    discriminant_check,
    irreducibility_chain,
    iter_poly,
    reduce_square_question,
    rigid_divisibility_check,
)

for n in range(1, 6):
    print(f"a_{n} =", iter_poly("a", n).to_string())
print("B_6 =", iter_poly("B", 6).to_string())
print("Res(B_m, B_n) for m < n <= 6:",
      {(m, n): rigid_divisibility_check(m, n) for n in range(2, 7) for m in range(1, n)})

for n in (8, 9, 10, 12, 15):
    plan = reduce_square_question(n)
    print(f"A_{n}(c) square =>", ", ".join(plan.targets))

for n in (5, 6, 7, 10, 11):
    ch = irreducibility_chain(n)
    print(f"f_c^2 irreducible => f_c^{n} irreducible: {ch['status']}")

d = discriminant_check(7)
print("disc(a_7) sign", d["sign"], "equals the listed factors up to sign:", d["product_matches"])
