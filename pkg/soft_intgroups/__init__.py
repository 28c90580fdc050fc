"""
Soft int-groups over finite groups.
Soft set algebra, soft int-group calculus and a brute-force theorem suite.
"""

__version__ = "1.0.0"
__author__ = "Developer"
