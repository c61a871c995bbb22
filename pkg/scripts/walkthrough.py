"""Print every derived object for the three-element matroid with 1 and 3 parallel."""

from matred.dependence import (
    com_family,
    consistent_sets,
    gamma_of_family,
    is_dense,
    kernel_classes,
    reducts,
    reducts_via_transversals,
    theta_from_matroid,
)
from matred.hyperplanes import closed_sets, hyperplanes
from matred.matroid import matroid_from_family
from matred.subsets import format_family, format_set, parse_family, parse_set, power_set

M = matroid_from_family(3, parse_family("{};{1};{2};{3};{1,2};{2,3}", 3))
theta = theta_from_matroid(M)
H = hyperplanes(M)

print("closures")
for X in power_set(3):
    print(f"  cl{format_set(X)} = {format_set(M.closure(X))}")
print("classes  ", " ".join(format_family(c) for c in kernel_classes(theta)))
print("flats    ", format_family(closed_sets(M)))
print("hyperpl. ", format_family(H))
print("bases    ", format_family(M.bases()))
print("consist. ", format_family(consistent_sets(theta)))
print("dense    ", is_dense(H, theta).holds)
G = gamma_of_family(H)
print("gamma    ", "{1}~{3}:", G.related(0b001, 0b100), " {2}~{1,2}:", G.related(0b010, 0b011))
X = parse_set("{1,3}")
print("X = {1,3}")
print("  reducts     ", format_family(reducts(theta, X)))
print("  complements ", format_family(com_family(H, X)))
print("  transversals", format_family(reducts_via_transversals(H, X)))
