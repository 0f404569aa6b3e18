#!/usr/bin/env python3
"""Example usage of the superunitary library."""

from fractions import Fraction

from superunitary import (
    FDFamily,
    IFDFamily,
    Signature,
    SuperUnitaryException,
    Weight,
    build_positive_system,
    classify,
    family_weight,
    gram,
    gram_oracle,
    ks_determinant,
)
from superunitary.dirac import sweep, thresholds


def main():
    print("superunitary demo")
    print("=" * 17)

    # Classify a single highest weight
    print("\n1. Classification:")
    su21 = Signature.from_pqn(2, 0, 1)
    for text in ("3,1|2", "1,3|0"):
        Lambda = Weight.parse(text)
        verdict = classify(Lambda, su21)
        print(f"{su21.label} {Lambda}: unitarizable={verdict.unitarizable}")
        for reason in verdict.reasons:
            details = reason.to_dict(su21.m)
            root = f" {details['root']}" if details["root"] is not None else ""
            margin = f" margin {details['margin']}" if details["margin"] is not None else ""
            print(f"  {details['condition']}{root}{margin}")

    # Sweep a non-compact family over x
    print("\n2. Family sweep:")
    su111 = Signature.from_pqn(1, 1, 1)
    fam = IFDFamily.create(su111, (0, 0), (0,), -3, 0)
    print(f"Thresholds: {thresholds(fam)}")
    grid = [Fraction(k, 2) for k in range(-4, 5)]
    unitarizable = [str(x) for x, result in sweep(fam, grid) if result.unitarizable]
    print(f"Unitarizable at x in {', '.join(unitarizable)}")

    # Compare a Gram matrix with the determinant formula
    print("\n3. Shapovalov form:")
    ps = build_positive_system(su21, su21.default_system)
    matrix = gram(Lambda, (1, 1, -2), su21, ps)
    print(f"Gram matrix at eta=(1,1|-2): {[[str(v) for v in row] for row in matrix.entries]}")
    print(f"Kac-Shapovalov value: {ks_determinant(Lambda, (1, 1, -2), ps).value}")

    # Check positivity up to height 2
    weight = family_weight(FDFamily.create(su21, (1,), (), 1))
    result = gram_oracle(weight, su21, depth=2)
    print(f"{weight} positive up to height 2: {result.psd} ({len(result.checked)} Gram matrices)")

    # Invalid input raises a library exception
    print("\n4. Errors:")
    try:
        Signature.from_pqn(1, 0, 1)
    except SuperUnitaryException as e:
        print(f"Rejected signature (expected): {e}")

    print("\nDemo completed!")


if __name__ == "__main__":
    main()
