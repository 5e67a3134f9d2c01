"""Exact-arithmetic engine for cyclotomic Brauer algebras B_{m,n}(delta):
diagram basis and multiplication, wreath-group combinatorics, the
semisimplicity criterion, Gram forms, and an independent trace-form oracle.
"""

__version__ = "1.0.0"
