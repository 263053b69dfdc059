# Invariant chains from a finite seed.
#
# The monoid of strictly increasing column maps fixing columns 1..i acts on
# monomials by relabeling columns.  A chain is described by one seed ideal:
# every wider ideal is generated by the orbit of the seed's generators, and
# widths below the seed carry the zero ideal.

from incchains import (
    ChainSpec,
    MonomialIdeal,
    chain_colon,
    chain_radical,
    e_chain,
    generate,
    orbit,
    shift_sigma,
    variable,
    verify_stability,
)

x = variable

# orbits: only support columns above the fixed range move, with
# nondecreasing shifts bounded by the width increase
u = x(2, 2) * x(3, 3)
print("orbit of", u, "from width 4 into width 5, fixing column 1:")
for image in sorted(orbit(u, 1, 4, 5), key=lambda m: m.sort_key()):
    print("  ", image)

# the chain seeded at width 4 (three rows, monoid fixes column 1)
seed = MonomialIdeal(3, 4, [x(1, 2, 3), x(1, 4, 2) * x(2, 1), x(2, 2) * x(3, 3)])
spec = ChainSpec(rows=3, index=1, seed_index=4, seed=seed)

for n in range(3, 7):
    print(f"width {n}: {len(generate(spec, n).gens)} generators")
print("width 6 ideal:", generate(spec, 6))

# each width regenerates the next one (the seed really is a stable seed)
print("stability at widths 4..8:", [verify_stability(spec, n) for n in range(4, 9)])

# derived chains: quotient by a fixed-column monomial, radical, and the
# column-adding construction that raises the fixed range by one
quotient = chain_colon(spec, x(2, 1))
print("\nquotient chain seed:", quotient.seed)
print("radical chain seed:", chain_radical(spec).seed)

derived = e_chain(spec, (0, 1, 0))
print("derived chain: fixes columns 1..%d, seeded at width %d" % (derived.index, derived.seed_index))
print("derived seed:", derived.seed)

# the elementary shift moves every column above the fixed range up by one
print("\nshift of", u, "fixing column 1:", shift_sigma(1, u))
