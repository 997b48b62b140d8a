"""Build a recurrence sequence and its section polynomials.

A sequence {a_n} is pinned down by five numbers through
c*a[n+2] + b*a[n+1] + a*a[n] = 0 with starting values (a0, a1).
The section polynomial P_m collects the first m+1 terms as
coefficients; everything else in this library is about where the
zeros of P_m live.
"""

from taylorzeros import (
    characteristic,
    closed_form_term,
    eval_poly,
    generate_sequence,
    reciprocal_poly,
    taylor_poly,
    validate,
)

# the Fibonacci numbers: a[n+2] = a[n+1] + a[n]
fib = validate(-1, -1, 1, 0, 1)
print("Fibonacci, first 11 terms:", generate_sequence(fib, 10))

# the same terms through the two-root closed form
char = characteristic(fib)
print("closed-form a_10:", closed_form_term(char, fib, 10))

# a growing, sign-alternating sequence
spec = validate(5, 1, -1, 1, -3)
print("\nsequence for (5, 1, -1, 1, -3):", generate_sequence(spec, 6))

p6 = taylor_poly(spec, 6)
print("P_6 coefficients:", p6.coeffs.tolist())
print("P_6(0.3):", eval_poly(p6, 0.3))

# reversing the coefficients swaps each nonzero root z for 1/z
p6_star = reciprocal_poly(p6)
print("reversed coefficients:", p6_star.coeffs.tolist())

# the characteristic quadratic c + b*t + a*t^2 controls the growth rate;
# its largest-modulus zero alpha sets the critical radius |c|/|a*alpha|
print("\nalpha = %s, beta = %s" % (char.alpha, char.beta))
print("critical radius for the Fibonacci sections:", char.critical_radius)
