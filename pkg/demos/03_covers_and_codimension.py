# Row covers and the eventual linearity of codimension.
#
# For a proper monomial ideal and a column index i, a set of rows covers a
# generator when the generator uses a variable from one of those rows.  The
# cover number (least rows covering every generator supported entirely
# above column i) is exactly the eventual slope of codim along the chain.

from incchains import (
    ChainSpec,
    MonomialIdeal,
    codim,
    gamma,
    gamma_chain,
    generate,
    minimal_primes,
    partition_generators,
    variable,
    verify_codim_theorem,
)

x = variable

# a width-6 ideal with generators on all three sides of column index 2
J = MonomialIdeal(3, 6, [
    x(2, 1, 4),
    x(1, 1, 3) * x(2, 3, 2) * x(1, 4),
    x(3, 2) * x(1, 3, 2) * x(2, 4),
    x(2, 3, 3) * x(1, 4, 2),
    x(2, 4, 2) * x(3, 5, 4),
])
part = partition_generators(J, 2)
print("low part:      ", [str(g) for g in part.low])
print("straddling:    ", [str(g) for g in part.straddling])
print("high part:     ", [str(g) for g in part.high])

report = gamma(J, 2)
print("\ncover number:", report.gamma)
print("witness cover:", sorted(report.witness_cover))
print("cover family: ", sorted(sorted(c) for c in report.cover_family))
print("minimal covers:", sorted(sorted(c) for c in report.minimal_covers))

high = MonomialIdeal(3, 6, part.high)
print("minimal primes of the high part:")
for p in sorted(minimal_primes(high), key=sorted):
    print("  ", sorted(p))

# codimension along a chain grows linearly with slope = cover number
seed = MonomialIdeal(3, 4, [x(1, 2, 3), x(1, 4, 2) * x(2, 1), x(2, 2) * x(3, 3)])
spec = ChainSpec(rows=3, index=1, seed_index=4, seed=seed)
print("\ncover number of the chain:", gamma_chain(spec).gamma)
print("codim at widths 4..10:", [codim(generate(spec, n)) for n in range(4, 11)])

check = verify_codim_theorem(spec, 4, 10)
print("linearity verdict:", check.verdict,
      "(slope", check.details["slope"], ", intercept", check.details["intercept"], ")")
