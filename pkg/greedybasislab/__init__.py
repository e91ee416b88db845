"""
greedybasislab: a finite-dimensional laboratory for the thresholding greedy
algorithm on bases of normed spaces.
"""
__version__ = '0.1.0'
