"""Intersection numbers carried by the symplectic volumes.

V^S_{g,n} is homogeneous of degree 3g-3+n in the t_j^2; reading its
coefficients against the ansatz

    V^S = (-1)^n sum <tau_{d_1}..tau_{d_n}> prod (2d_j+1)!! (t_j/2)^{2d_j}

yields rational numbers indexed by degree vectors.  The table below puts
them next to the classical normalization: the quotient is the constant
2^{3g-3} for each surface type -- reported, not assumed.
"""

from ribbonvol import intersection_numbers, intersection_ratio_report

for g, n in [(0, 3), (1, 1), (0, 4), (1, 2), (2, 1)]:
    print(f"(g, n) = ({g}, {n}):")
    for key, literal, classical, ratio in intersection_ratio_report(g, n):
        tau = " ".join(f"tau_{d}" for d in key)
        line = f"  <{tau}> = {literal}"
        if classical is not None:
            line += f"   classical {classical}   ratio {ratio}"
        print(line)
    print()

print("Beyond the tabulated range the literal numbers still come out exact:")
for key, value in sorted(intersection_numbers(2, 2).items()):
    tau = " ".join(f"tau_{d}" for d in key)
    print(f"  <{tau}> = {value}")
