"""
Monomial Codes

Decreasing monomial codes: Reed-Muller and polar codes under one algebraic roof.
"""

__version__ = "0.1.0"
