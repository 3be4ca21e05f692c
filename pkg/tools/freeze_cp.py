#!/usr/bin/env python3
"""Freeze molar heat capacities at 750 C (1023.15 K) for the cracking species.

Sources:
  * H2, H2O, CH4, C2H2, C2H4 -- NIST WebBook Shomate parameters
    (Chase, NIST-JANAF Thermochemical Tables, 4th ed., via webbook.nist.gov).
  * C2H6, C3H8, C3H6, C4H6 -- 4th-order ideal-gas cp polynomials from
    Poling, Prausnitz & O'Connell, "The Properties of Gases and Liquids",
    5th ed., Appendix A (cp/R = a0 + a1*T + a2*T^2 + a3*T^3 + a4*T^4).
    Stated range 50-1000 K; the 23 K extrapolation to 1023.15 K is well
    inside the polynomial's smooth regime.

Run this script to regenerate the cp block of reaction_system.yaml.
"""

R = 8.314
T_REF = 1023.15


def shomate(T, A, B, C, D, E):
    t = T / 1000.0
    return A + B * t + C * t**2 + D * t**3 + E / t**2


def poling(T, a0, a1, a2, a3, a4):
    return R * (a0 + a1 * T + a2 * T**2 + a3 * T**3 + a4 * T**4)


SHOMATE = {
    # species: (coeffs, valid range used)
    "H2": ((18.563083, 12.257357, -2.859786, 0.268238, 1.977990), "1000-2500 K"),
    "H2O": ((30.09200, 6.832514, 6.793435, -2.534480, 0.082139), "500-1700 K"),
    "CH4": ((-0.703029, 108.4773, -42.52157, 5.862788, 0.678565), "298-1300 K"),
    "C2H2": ((40.68697, 40.73279, -16.17840, 3.669741, -0.658411), "298-1100 K"),
    "C2H4": ((-6.387880, 184.4019, -112.9718, 28.49593, 0.315540), "298-1200 K"),
}

POLING = {
    "C2H6": (4.178, -4.427e-3, 5.660e-5, -6.651e-8, 2.487e-11),
    "C3H8": (3.847, 5.131e-3, 6.011e-5, -7.893e-8, 3.079e-11),
    "C3H6": (3.834, 3.893e-3, 4.688e-5, -6.013e-8, 2.283e-11),
    "C4H6": (3.607, 5.085e-3, 8.253e-5, -1.2371e-7, 5.321e-11),
}


def main():
    print(f"# molar cp at {T_REF} K, J/(mol K)")
    for name, (coeffs, rng) in SHOMATE.items():
        cp = shomate(T_REF, *coeffs)
        print(f"{name}: {cp:.4f}   # NIST WebBook Shomate ({rng})")
    for name, coeffs in POLING.items():
        cp = poling(T_REF, *coeffs)
        print(f"{name}: {cp:.4f}   # Poling et al. 5th ed. App. A polynomial")
    # spot checks at 298.15 / 500 K against tabulated values
    print("\n# sanity at 298.15 K (lit.: H2 28.84, CH4 35.69, C2H6 52.5, C3H8 73.6)")
    print("H2  ", shomate(298.15, 33.066178, -11.363417, 11.432816, -2.772874, -0.158558))
    print("CH4 ", shomate(298.15, *SHOMATE["CH4"][0]))
    print("C2H6", poling(298.15, *POLING["C2H6"]))
    print("C3H8", poling(298.15, *POLING["C3H8"]))


if __name__ == "__main__":
    main()
