"""
Normal forms in the homogenized Weyl algebra
============================================

The algebra B(n) has generators z, x_1..x_n, d_1..d_n subject to
d_i x_i = x_i d_i + z^2, with everything else commuting and z central.
Every element has a unique normal form over the ordered monomials
z^i x^P d^Q.  Setting z = 1 recovers the Weyl algebra A(n); keeping all
generators commutative gives the polynomial algebra C(n).
"""

from weylkit import (
    AlgebraElement,
    AlgebraKind,
    Generator,
    basis_of_degree,
    centralizer_in_degree,
    commutator,
    multiply,
    normal_form,
    parse,
    partial_degree,
    render,
)

B = AlgebraKind.B

# The defining exchange rule, straight from the presentation:
print(render(normal_form(parse("d1*x1", 1, B), B)))
# -> x1*d1 + z^2

# Iterating it: d1 * x1^a = x1^a d1 + a z^2 x1^(a-1).
for a in (2, 3, 7):
    nf = normal_form(parse(f"d1*x1^{a}", 1, B), B)
    print(f"d1*x1^{a} =", render(nf))

# The same computation in the plain Weyl algebra replaces z^2 by 1:
A = AlgebraKind.A
print(render(normal_form(parse("d1*x1^3", 1, A), A)))

# Elements are sparse rational combinations and support +, -, *:
x1 = AlgebraElement.generator(B, 1, Generator.x(1))
d1 = AlgebraElement.generator(B, 1, Generator.d(1))
z = AlgebraElement.generator(B, 1, Generator.z())
e = multiply(d1, x1) - multiply(x1, d1)
print("[d1, x1] =", render(e))            # z^2
print("[z, x1]  =", render(commutator(z, x1)))  # 0

# The partial degree counts only x and d letters; it is additive under
# products, which is how the filtration on B(n) is checked here.
a = normal_form(parse("x1^2*d1 + 2*z^2*x1", 1, B), B)
print("partial degree:", partial_degree(a))  # 3

# The monomials of graded degree d form the PBW basis slice; there are
# C(d+2n, 2n) of them.
for d in range(4):
    print(f"degree {d} basis:", [str(m) for m in basis_of_degree(B, 1, d)])

# Verified by exact linear algebra rather than assumed: the only degree-d
# elements commuting with every generator are the multiples of z^d.
for d in range(4):
    (v,) = centralizer_in_degree(B, 1, d)
    print(f"center in degree {d}:", render(v))
