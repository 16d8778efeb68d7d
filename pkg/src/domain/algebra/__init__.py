"""
Exact algebra - Gaussian rationals, the term algebra and exact matrices.
"""
