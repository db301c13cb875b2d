"""Alpha-spectral radius toolkit for k-uniform supertrees"""
__version__ = "1.0.0"
