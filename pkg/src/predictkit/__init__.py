"""
predictkit - return predictability across countries and asset classes
"""
__version__ = "0.1.0"
