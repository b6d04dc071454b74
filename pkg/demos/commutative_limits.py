"""Order-one limits of the ncrs families and what survives them.

    python3 demos/commutative_limits.py
"""

import rootspace.tensor as t
from rootspace.catalog import NCRS_FAMILIES, MappingId, apply_mapping
from rootspace.identities import COMMUTATIVE, LEIBNIZ, applicable_identities, residual
from rootspace.limits import commutativize, limit_applier, limit_mapping_set
from rootspace.textio import print_poly
from rootspace.words import gen_word


def limit_table(family, mode="order-one"):
    print("%s (%s)" % (family, mode))
    for mid, value in limit_mapping_set(family, mode).maps.items():
        print("  %s(f, g) = %s" % (mid, print_poly(value, "ascii")))


for family in sorted(NCRS_FAMILIES):
    limit_table(family)
print()

# the two limit readings only disagree where d^-1 meets a product
limit_table("ncrs-integral", "tensor-collapse")
print()


def limit_failures(family, mode):
    applier = limit_applier(family)
    out = []
    for identity in applicable_identities(family, mode):
        arity = 2 if identity.name == "redjac1" else 3
        rep = residual(family, identity, (1,) * arity, mode, applier=applier)
        if not rep.passed:
            out.append(identity.name)
    return out


print("which limits still satisfy the identities, per product-rule mode:")
for family in sorted(NCRS_FAMILIES):
    for mode in (COMMUTATIVE, LEIBNIZ):
        fails = limit_failures(family, mode)
        status = "passes all" if not fails else "fails " + ", ".join(fails)
        print("  %-22s %-22s %s" % (family, mode.label(), status))
print()

# The ricci limit lands on the classical ricci set up to a sign flip on
# the K+ and K- slots; K00 and K0 agree exactly.
f = t.mono((gen_word("f", 1),))
g = t.mono((gen_word("g", 1),))
maps = limit_mapping_set("ncrs-ricci").maps
for slot in ("Kplus", "Kminus", "K00", "K0"):
    classical = commutativize(apply_mapping("classical-ricci-a", MappingId(slot), f, g))
    relation = "same" if maps[MappingId(slot)] == classical else (
        "negated" if maps[MappingId(slot)] == t.neg(classical) else "unrelated"
    )
    print("ricci limit %-6s vs classical: %s" % (slot, relation))
