"""
groupdet - group determinants of finite abelian groups
Exact evaluation, subgroup factorization and the C8 x C2 value classification
"""
__version__ = "1.0.0"

__all__ = ['__version__']
