"""
hcstable - exact multiplicities, central characters and annihilators for Harish-Chandra bimodules
"""

__version__ = "0.1.0"
