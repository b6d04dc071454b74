"""Tour of the word layer and the structural tensor operators.

Everything here is exact and symbolic: generators are opaque letters,
the derivative is a formal power on an atom, and nothing ever commutes
unless you ask for it. Run top to bottom:

    python3 demos/operators_tour.py
"""

import rootspace.tensor as t
from rootspace.scalars import Coefficient, I
from rootspace.textio import parse_poly, print_poly
from rootspace.words import apply_derivative


def show(label, value):
    print("%-34s %s" % (label, print_poly(value, "ascii")))


# Words are products of atoms. parse_poly reads the same syntax the CLI
# uses: '*' multiplies inside a tensor factor, '#' separates factors.
f = parse_poly("f1")
fg = parse_poly("f1*g1")
pair = parse_poly("f1 # g1")

show("f1", f)
show("f1*g1 (one word)", fg)
show("f1 # g1 (two factors)", pair)

# The derivative never expands a product. On a single atom it is a net
# integer power; on a longer word it wraps the word as a group carrying
# the power. d and d^-1 cancel exactly.
w = parse_poly("f1*g1").terms[0][0][0]
print()
print("derivative of a 2-atom word wraps:", print_poly(t.mono((apply_derivative(w, 1),)), "ascii"))
print("then d^-1 unwraps it again:      ", print_poly(t.mono((apply_derivative(apply_derivative(w, 1), -1),)), "ascii"))

# tensor_concat appends factor sequences; glue also joins but multiplies
# the two boundary words, so the order drops by one.
a = parse_poly("f1 # f2")
b = parse_poly("g1 # g2")
print()
show("concat(a, b)", t.tensor_concat(a, b))
show("glue(a, b)", t.glue(a, b))
print("orders: concat %d, glue %d" % (t.tensor_concat(a, b).order(), t.glue(a, b).order()))

# d_k differentiates one chosen factor, d_all hits every factor at once
# (negative powers allowed), reverse flips the factor sequence.
show("d_k(a#b, 3)", t.d_k(t.tensor_concat(a, b), 3))
show("d_all(a, -1)", t.d_all(a, -1))
show("reverse(concat(a, b))", t.reverse(t.tensor_concat(a, b)))

# The tensor commutator keeps both orientations as distinct monomials;
# that asymmetry is the whole point of the noncommutative engine.
print()
show("[f1, g1] under concat", t.tensor_commutator(f, parse_poly("g1")))

# Coefficients are exact Gaussian rationals, so cancellation is a
# structural fact rather than a numerical one.
half_i = Coefficient.of("1/2", "1/2")
combo = t.add(t.scale(half_i, fg), t.scale(half_i, fg))
show("(1/2 + i/2)fg twice", combo)
show("minus i times that", t.scale(Coefficient.of(0, -1), combo))
assert t.is_zero(t.sub(combo, combo))
print()
print("scale(i, scale(i, f)) == -f:", t.scale(I, t.scale(I, f)) == t.neg(f))
