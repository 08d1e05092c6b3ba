"""
The free-probability toolbox
============================

The large-D limit of Haar-averaged operator entanglement is governed by
non-crossing combinatorics: Catalan numbers count the surviving replica
diagrams, free cumulants encode the seed operator, and the Weingarten
function supplies the exact finite-D weights.  This script tours the
algebraic layer directly.
"""

from fractions import Fraction

# --- non-crossing permutations and Catalan counting -----------------------
from loepage.nc import catalan, enumerate_nc, geodesic_set
from loepage.perm import parse_cycles

for k in range(1, 6):
    assert len(enumerate_nc(k)) == catalan(k)
print("|NC(k)| for k = 1..5:", [catalan(k) for k in range(1, 6)])

# the permutations on the Cayley geodesic between the identity and the
# boundary pairing are exactly the ones that survive at large D
tau = parse_cycles("(14)(23)")
print("geodesic set of (14)(23):", [str(p) for p in geodesic_set(tau)])

# --- moments and free cumulants -------------------------------------------
from loepage.moments import cumulants_from_moments, pauli_profile

kappas = cumulants_from_moments(pauli_profile(6))
print("free cumulants of a Pauli string:", list(kappas.values))
# kappa_2 = 1 (normalization), kappa_4 = -1, kappa_6 = 2: far from free
# semicircular, yet only kappa_4 enters the leading 1/D correction

# --- Weingarten functions --------------------------------------------------
from loepage.weingarten import weingarten_exact

wg = weingarten_exact(3, 7)
print("Wg(S_3, D=7) by cycle type:")
for ct, val in sorted(wg.values.items()):
    print(f"  {ct}: {val}")

# the asymptotic Moebius form matches the exact table to leading order
from loepage.weingarten import weingarten_asymptotic
from loepage.perm import from_cycles, identity

e = identity(3)
c3 = from_cycles([(0, 1, 2)], 3)
exact = wg((3,))
approx = weingarten_asymptotic(c3, e, 7)
print(f"full 3-cycle: exact {float(exact):.6f} vs asymptotic {approx:.6f}")

# --- the universal entropy offsets ----------------------------------------
from loepage.asymptotics import haar_ose_correction, vn_page_entropy
import math

print("\nRenyi-k offsets log((2k-1)!!)/(1-k):")
for k in (2, 3, 4):
    print(f"  k={k}: {haar_ose_correction(k):+.4f}")
print(f"vN half-chain deficit: {math.log(256) - vn_page_entropy(16, 16):+.4f}")
