"""
scarfdz - Scarf complexes, staircase partitions and d_σφ
"""

__version__ = "0.1.0"
