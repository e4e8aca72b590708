"""nokwidth

Essential monomials, Newton-Okounkov lattice data and Gromov-width
certificates for flag varieties G/P of every simple type.

Typical use:

    from nokwidth.rootsys import CartanType, build_root_system
    from nokwidth.widths import width_report

    rs = build_root_system(CartanType("A", 2))
    report = width_report(rs, (1, 1))
    report.width  # Fraction(1, 1)
"""

__version__ = "1.0.0"

__all__ = ["__version__"]
