"""The mapping catalog and the identity checker, including a failure.

    python3 demos/families_and_identities.py
"""

from rootspace.catalog import FAMILIES, MappingId, apply_mapping, family_slots
from rootspace.identities import (
    COMMUTATIVE,
    LEIBNIZ,
    NONCOMMUTATIVE,
    IdentityId,
    check_suite,
    residual,
    trace_identity,
)
from rootspace.textio import parse_poly, print_poly, report_line, trace_lines

print("families:", " ".join(sorted(FAMILIES)))
print()

# Each family provides bilinear mappings on tensor-power arguments.
phi = parse_poly("f1 # f2")
psi = parse_poly("g1")
for slot in family_slots("ncrs-ricci"):
    value = apply_mapping("ncrs-ricci", MappingId(slot), phi, psi)
    print("ncrs-ricci %-6s (f1#f2, g1) = %s" % (slot, print_poly(value, "ascii")))
print()

# A residual is the signed sum of an identity's application tree on
# generic monomials of the requested orders; the identity holds iff the
# residual normalizes to zero.
rep = residual("ncrs-poisson", IdentityId("redjac3"), (2, 1, 2), NONCOMMUTATIVE)
print(report_line(rep))

# Failures come back as ordinary reports, never exceptions.
rep = residual("ncrs-witt", IdentityId("witt-jacobi"), (1, 1, 1), NONCOMMUTATIVE)
print(report_line(rep))
print("surviving terms:", rep.term_counts["residual"])
print()

# trace_identity shows every signed application before the sum, which
# is how the failing cases above were diagnosed in the first place.
tr = trace_identity("ncrs-witt", IdentityId("redjac1"), (2, 2), NONCOMMUTATIVE)
for line in trace_lines(tr, "ascii"):
    print(line)
print()

# Whole-suite sweeps are deterministic: identities in catalog order,
# order tuples sorted. classical families run at order 1 by definition.
reports = check_suite("ncrs-integral", max_order=2, mode=NONCOMMUTATIVE)
print("ncrs-integral suite to order 2: %d checks, %d failed" % (
    len(reports),
    sum(1 for r in reports if not r.passed),
))

# The commutative engine layers two optional transforms on the summed
# residual: sort factors, then expand derivative groups by the product
# rule. classical-witt needs the product rule to close.
for mode in (COMMUTATIVE, LEIBNIZ):
    rep = residual("classical-witt", IdentityId("witt-jacobi"), (1, 1, 1), mode)
    print(report_line(rep))
